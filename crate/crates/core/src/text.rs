//! Shared text grammar for polynomials and tensors.
//!
//! ```text
//! poly   := term (("+"|"-") term)*
//! term   := [rational "*"?]? word ("⊗"|"(x)" word)*
//! rational := int | int "/" posint
//! word   := "1" | letter+
//! ```
//!
//! A rational with no following word multiplies the unit word. Whitespace is
//! allowed between tokens.

use num_traits::{One, Signed};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};

pub(crate) const TENSOR_SEP: &str = "(x)";
const TENSOR_SEP_UNICODE: &str = "⊗";

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn token_here(&self) -> String {
        match self.peek() {
            Some(c) => c.to_string(),
            None => "end of input".to_string(),
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(msg, self.token_here(), self.pos)
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let r = self.rest();
        let n = r.find(|c: char| !f(c)).unwrap_or(r.len());
        self.pos += n;
        &r[..n]
    }
}

fn parse_word(
    cur: &mut Cursor<'_>,
    alphabet: &Alphabet,
    allow_implicit_unit: bool,
) -> Result<Word> {
    cur.skip_ws();
    let start = cur.pos;
    if cur.peek() == Some('1') {
        cur.pos += 1;
        if cur.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            return Err(cur.err("unexpected character after unit word 1"));
        }
        return Ok(Word::empty());
    }
    let letters = cur.take_while(|c| c.is_ascii_alphabetic());
    if letters.is_empty() {
        if allow_implicit_unit {
            return Ok(Word::empty());
        }
        return Err(cur.err("expected a word"));
    }
    for (i, b) in letters.bytes().enumerate() {
        if !alphabet.contains(b) {
            return Err(Error::parse(
                format!("letter not in alphabet {alphabet}"),
                (b as char).to_string(),
                start + i,
            ));
        }
    }
    Ok(Word::from_bytes(letters.as_bytes().to_vec()))
}

fn parse_rational(cur: &mut Cursor<'_>) -> Result<Option<Q>> {
    cur.skip_ws();
    let start = cur.pos;
    let rest = cur.rest();
    let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return Ok(None);
    }
    let after = &rest[digits..];
    let mut text_end = digits;
    let after_trim = after.trim_start();
    if let Some(den) = after_trim.strip_prefix('/') {
        let den_trim = den.trim_start();
        let dd = den_trim.bytes().take_while(u8::is_ascii_digit).count();
        if dd == 0 {
            cur.pos = start + digits + (after.len() - den.len());
            return Err(cur.err("expected denominator"));
        }
        text_end = rest.len() - den_trim.len() + dd;
    }
    let text: String = rest[..text_end]
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let value =
        parse_q(&text).map_err(|_| Error::parse("malformed rational", text.clone(), start))?;
    cur.pos = start + text_end;
    Ok(Some(value))
}

/// Parses a signed sum of terms whose keys have `arity` tensor components.
pub(crate) fn parse_terms(
    src: &str,
    alphabet: &Alphabet,
    arity: usize,
) -> Result<Vec<(Q, Vec<Word>)>> {
    let mut cur = Cursor { src, pos: 0 };
    let mut out = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty expression"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut sign = Q::one();
        if cur.eat("-") {
            sign = -sign;
        } else if !first && !cur.eat("+") {
            return Err(cur.err("expected + or -"));
        } else if first {
            cur.eat("+");
        }
        first = false;

        let mut coeff = None;
        let save = cur.pos;
        if let Some(r) = parse_rational(&mut cur)? {
            coeff = Some(r);
        }
        cur.skip_ws();
        let explicit_star = coeff.is_some() && cur.eat("*");
        let mut comps = Vec::with_capacity(arity);
        if coeff.is_some() && !explicit_star {
            // "3ab", "3", or the unit word "1" followed by a separator
            let w = parse_word(&mut cur, alphabet, true)?;
            if w.is_empty() && coeff.as_ref().is_some_and(One::is_one) && arity > 1 {
                // "1(x)a": the leading 1 was a word
                cur.pos = save;
                coeff = None;
                comps.push(parse_word(&mut cur, alphabet, false)?);
            } else {
                comps.push(w);
            }
        } else {
            comps.push(parse_word(&mut cur, alphabet, false)?);
        }
        for _ in 1..arity {
            cur.skip_ws();
            if !(cur.eat(TENSOR_SEP) || cur.eat(TENSOR_SEP_UNICODE)) {
                return Err(cur.err("expected tensor separator (x)"));
            }
            comps.push(parse_word(&mut cur, alphabet, false)?);
        }
        cur.skip_ws();
        if cur.rest().starts_with(TENSOR_SEP) || cur.rest().starts_with(TENSOR_SEP_UNICODE) {
            return Err(cur.err("too many tensor components"));
        }
        out.push((sign * coeff.unwrap_or_else(Q::one), comps));
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(out)
}

/// Canonical text for a sequence of (coefficient, key) terms in order.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Q, &'a [Word])>,
{
    let mut out = String::new();
    for (i, (c, key)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let body: Vec<String> = key.iter().map(|w| w.to_string()).collect();
        let body = body.join(TENSOR_SEP);
        let unit_poly = key.len() == 1 && key[0].is_empty();
        if unit_poly {
            out.push_str(&fmt_q(&abs));
        } else if abs.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&fmt_q(&abs));
            out.push('*');
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
