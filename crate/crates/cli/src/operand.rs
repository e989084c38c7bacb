//! Loading polynomial, series and representation operands.
//!
//! Inline operands must stay under [`INLINE_LIMIT`] bytes; larger inputs go
//! through files (`path.json` for JSON, `@path` for polynomial text).

use std::fs;

use hopf_core::{Alphabet, Error, LinRep, MatRep, NCPoly, Result, Series};

pub const INLINE_LIMIT: usize = 1024;

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::parse(format!("cannot read file: {e}"), path, 0))
}

fn check_inline(src: &str) -> Result<()> {
    if src.len() >= INLINE_LIMIT {
        return Err(Error::parse(
            format!("inline operand is {} bytes; operands of {INLINE_LIMIT} bytes or more must be passed as file paths", src.len()),
            src.chars().take(16).collect::<String>(),
            0,
        ));
    }
    Ok(())
}

enum Source {
    Json(String),
    Text(String),
}

fn resolve(src: &str) -> Result<Source> {
    let trimmed = src.trim_start();
    if let Some(path) = src.strip_prefix('@') {
        return Ok(Source::Text(read_file(path)?.trim().to_string()));
    }
    if trimmed.starts_with('{') {
        check_inline(src)?;
        return Ok(Source::Json(src.to_string()));
    }
    if src.ends_with(".json") {
        return Ok(Source::Json(read_file(src)?));
    }
    check_inline(src)?;
    Ok(Source::Text(src.to_string()))
}

pub fn require_alphabet(decl: Option<&Alphabet>) -> Result<&Alphabet> {
    decl.ok_or_else(|| Error::parse("--alphabet is required for text operands", "--alphabet", 0))
}

pub fn poly(src: &str, alphabet: Option<&Alphabet>) -> Result<NCPoly> {
    match resolve(src)? {
        Source::Text(t) => NCPoly::parse(&t, require_alphabet(alphabet)?),
        Source::Json(_) => Err(Error::parse(
            "expected a polynomial, found JSON",
            src.chars().take(16).collect::<String>(),
            0,
        )),
    }
}

fn matching(declared: Option<&Alphabet>, found: &Alphabet) -> Result<()> {
    match declared {
        Some(a) if a != found => Err(Error::domain(format!(
            "alphabet mismatch: --alphabet {a} but operand uses {found}"
        ))),
        _ => Ok(()),
    }
}

pub fn series(src: &str, alphabet: Option<&Alphabet>) -> Result<Series> {
    match resolve(src)? {
        Source::Text(t) => Ok(Series::FiniteSupport(NCPoly::parse(
            &t,
            require_alphabet(alphabet)?,
        )?)),
        Source::Json(j) => {
            let rep = LinRep::from_json(&j)?;
            matching(alphabet, rep.alphabet())?;
            Ok(Series::Recognizable(rep))
        }
    }
}

pub enum AnyRep {
    Matrix(MatRep),
    Linear(LinRep),
}

impl AnyRep {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            AnyRep::Matrix(r) => r.alphabet(),
            AnyRep::Linear(r) => r.alphabet(),
        }
    }
}

pub fn any_rep(src: &str, alphabet: Option<&Alphabet>) -> Result<AnyRep> {
    let json = match resolve(src)? {
        Source::Json(j) => j,
        Source::Text(_) => {
            return Err(Error::parse(
                "expected representation JSON or a .json path",
                src.chars().take(16).collect::<String>(),
                0,
            ))
        }
    };
    // The matrix schema is the only one with an "assign" table.
    let rep = if json.contains("\"assign\"") {
        AnyRep::Matrix(MatRep::from_json(&json)?)
    } else {
        AnyRep::Linear(LinRep::from_json(&json)?)
    };
    matching(alphabet, rep.alphabet())?;
    Ok(rep)
}

pub fn mat_rep(src: &str, alphabet: Option<&Alphabet>) -> Result<MatRep> {
    match any_rep(src, alphabet)? {
        AnyRep::Matrix(r) => Ok(r),
        AnyRep::Linear(_) => Err(Error::parse(
            "expected a matrix representation with an \"assign\" field",
            src.chars().take(16).collect::<String>(),
            0,
        )),
    }
}
