//! JSON schemas for representations.
//!
//! Rationals are written as strings `"p"` or `"p/q"`. Output uses single-line
//! JSON with `", "` and `": "` separators so files are stable and diffable.

use std::collections::BTreeMap;
use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct MatRepJson {
    pub alphabet: String,
    pub dim: usize,
    pub assign: BTreeMap<String, serde_json::Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct LinRepJson {
    pub alphabet: String,
    pub dim: usize,
    pub lambda: serde_json::Value,
    pub mu: BTreeMap<String, serde_json::Value>,
    pub gamma: serde_json::Value,
}

/// Single-line formatter with a space after every `,` and `:`.
struct SpacedFormatter;

impl Formatter for SpacedFormatter {
    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

pub(crate) fn to_string<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SpacedFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

pub(crate) fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| {
        let pos = s
            .lines()
            .take(e.line().saturating_sub(1))
            .map(|l| l.len() + 1)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        let token = s
            .get(pos..)
            .and_then(|r| r.chars().next())
            .map(String::from)
            .unwrap_or_default();
        Error::parse(format!("invalid JSON: {e}"), token, pos)
    })
}

/// Renders any JSON value with the same spacing as the schema writers.
pub fn render(value: &serde_json::Value) -> String {
    to_string(value)
}
