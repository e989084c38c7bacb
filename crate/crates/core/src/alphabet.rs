//! Partitioned alphabets `Σ = G ⊔ L` and words over them.
//!
//! Letters are single ASCII alphabetic characters. Each letter is tagged
//! group-like (`Δ(x) = x⊗x`, `ε(x) = 1`) or primitive
//! (`Δ(x) = x⊗1 + 1⊗x`, `ε(x) = 0`). Words are stored as raw symbol bytes
//! and compared in length-then-lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    GroupLike,
    Primitive,
}

impl LetterKind {
    fn tag(self) -> char {
        match self {
            LetterKind::GroupLike => 'G',
            LetterKind::Primitive => 'L',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    symbol: u8,
    kind: LetterKind,
}

impl Letter {
    pub fn new(symbol: char, kind: LetterKind) -> Result<Self> {
        if !symbol.is_ascii_alphabetic() {
            return Err(Error::parse(
                "letter symbols must be single ASCII alphabetic characters",
                symbol.to_string(),
                0,
            ));
        }
        Ok(Letter {
            symbol: symbol as u8,
            kind,
        })
    }

    pub fn symbol(&self) -> char {
        self.symbol as char
    }

    pub fn kind(&self) -> LetterKind {
        self.kind
    }

    pub fn is_group_like(&self) -> bool {
        self.kind == LetterKind::GroupLike
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct AlphabetInner {
    // sorted by symbol code
    letters: Vec<Letter>,
}

/// A finite alphabet with its group-like / primitive partition.
///
/// Cheap to clone; two alphabets are equal when they declare the same
/// letters with the same kinds, regardless of declaration order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Arc<AlphabetInner>);

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut letters: Vec<Letter> = letters.into_iter().collect();
        letters.sort_by_key(|l| l.symbol);
        for pair in letters.windows(2) {
            if pair[0].symbol == pair[1].symbol {
                return Err(Error::parse(
                    "duplicate letter in alphabet",
                    pair[0].symbol().to_string(),
                    0,
                ));
            }
        }
        if letters.is_empty() {
            return Err(Error::parse("empty alphabet", "", 0));
        }
        Ok(Alphabet(Arc::new(AlphabetInner { letters })))
    }

    /// Parses a declaration such as `"a:L,b:L,g:G"`.
    pub fn parse(decl: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for item in decl.split(',') {
            let trimmed = item.trim();
            let pos = offset + (item.len() - item.trim_start().len());
            offset += item.len() + 1;
            let (sym, kind) = trimmed
                .split_once(':')
                .ok_or_else(|| Error::parse("expected symbol:K", trimmed, pos))?;
            let sym = sym.trim();
            let mut chars = sym.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => {
                    return Err(Error::parse(
                        "letter symbols must be a single character",
                        sym,
                        pos,
                    ))
                }
            };
            let kind = match kind.trim() {
                "G" => LetterKind::GroupLike,
                "L" => LetterKind::Primitive,
                other => return Err(Error::parse("letter kind must be G or L", other, pos)),
            };
            let letter = Letter::new(c, kind).map_err(|_| {
                Error::parse(
                    "letter symbols must be single ASCII alphabetic characters",
                    sym,
                    pos,
                )
            })?;
            letters.push(letter);
        }
        Alphabet::new(letters).map_err(|e| match e {
            Error::Parse { msg, token, .. } => Error::parse(msg, token, 0),
            other => other,
        })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0.letters
    }

    pub fn len(&self) -> usize {
        self.0.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.letters.is_empty()
    }

    pub fn letter(&self, symbol: u8) -> Option<Letter> {
        self.0
            .letters
            .binary_search_by_key(&symbol, |l| l.symbol)
            .ok()
            .map(|i| self.0.letters[i])
    }

    pub fn kind_of(&self, symbol: u8) -> Option<LetterKind> {
        self.letter(symbol).map(|l| l.kind)
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.letter(symbol).is_some()
    }

    /// True when `G = ∅`, i.e. the bialgebra admits an antipode.
    pub fn all_primitive(&self) -> bool {
        self.0.letters.iter().all(|l| !l.is_group_like())
    }

    pub fn group_like(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.letters.iter().copied().filter(|l| l.is_group_like())
    }

    pub fn primitive(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0
            .letters
            .iter()
            .copied()
            .filter(|l| !l.is_group_like())
    }

    pub fn is_group_like(&self, symbol: u8) -> bool {
        self.kind_of(symbol) == Some(LetterKind::GroupLike)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&c| !self.contains(c)) {
            Some(&c) => Err(Error::domain(format!(
                "letter {:?} is not in alphabet {}",
                c as char, self
            ))),
            None => Ok(()),
        }
    }

    /// Concatenation of two words over this alphabet.
    pub fn conc(&self, u: &Word, v: &Word) -> Result<Word> {
        self.check_word(u).map_err(|_| Error::alphabet_mismatch())?;
        self.check_word(v).map_err(|_| Error::alphabet_mismatch())?;
        Ok(u.concat(v))
    }

    /// All words of length at most `maxlen`, in length-lex order.
    pub fn words_up_to(&self, maxlen: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..maxlen {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for l in self.letters() {
                    let mut v = w.clone();
                    v.0.push(l.symbol);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// `ε(w)`: 1 when every letter is group-like, else 0.
    pub fn counit_word(&self, w: &Word) -> bool {
        w.0.iter().all(|&c| self.is_group_like(c))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", l.symbol(), l.kind.tag())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

/// A word over some alphabet; the empty word is the unit `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from its symbols without alphabet validation.
    /// `"1"` and `""` both denote the empty word.
    pub fn from_str_unchecked(s: &str) -> Self {
        if s == "1" {
            Word::empty()
        } else {
            Word(s.bytes().collect())
        }
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        Word(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The subword `w[R]` for a set of positions given in increasing order.
    pub fn subword(&self, positions: impl IntoIterator<Item = usize>) -> Word {
        Word(positions.into_iter().map(|i| self.0[i]).collect())
    }

    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0
            .strip_prefix(prefix.as_bytes())
            .map(|s| Word(s.to_vec()))
    }

    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.0
            .strip_suffix(suffix.as_bytes())
            .map(|s| Word(s.to_vec()))
    }

    /// All suffixes, shortest (the empty word) first.
    pub fn suffixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.0.len())
            .rev()
            .map(move |i| Word(self.0[i..].to_vec()))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("1")
        } else {
            // symbols are ASCII by construction
            f.write_str(std::str::from_utf8(&self.0).unwrap_or("?"))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
