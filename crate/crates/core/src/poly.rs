//! Noncommutative polynomials `k⟨Σ⟩`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::text;

/// A finite ℚ-linear combination of words, kept in canonical form: no zero
/// coefficients, terms in length-lex order.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Q>,
}

impl NCPoly {
    pub fn zero(alphabet: &Alphabet) -> Self {
        NCPoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Alphabet) -> Self {
        Self::monomial(alphabet, Word::empty(), Q::one())
    }

    pub fn monomial(alphabet: &Alphabet, w: Word, coeff: Q) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(w, coeff);
        p
    }

    pub fn word(alphabet: &Alphabet, w: &Word) -> Self {
        Self::monomial(alphabet, w.clone(), Q::one())
    }

    pub fn from_terms(alphabet: &Alphabet, terms: impl IntoIterator<Item = (Word, Q)>) -> Self {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn parse(src: &str, alphabet: &Alphabet) -> Result<Self> {
        let terms = text::parse_terms(src, alphabet, 1)?;
        Ok(Self::from_terms(
            alphabet,
            terms
                .into_iter()
                .map(|(c, mut comps)| (comps.pop().expect("arity 1"), c)),
        ))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub(crate) fn add_term(&mut self, w: Word, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, coeff);
            }
        }
    }

    /// Terms in length-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    fn same_alphabet(&self, other: &Self) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::alphabet_mismatch())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::from_terms(
            &self.alphabet,
            self.terms.iter().map(|(w, c)| (w.clone(), c * s)),
        )
    }

    /// Bilinear extension of concatenation.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_alphabet(other)?;
        let mut out = Self::zero(&self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// Image under a linear map on words.
    pub fn map_words(&self, f: impl Fn(&Word) -> (Word, Q)) -> Self {
        Self::from_terms(
            &self.alphabet,
            self.terms.iter().map(|(w, c)| {
                let (w2, s) = f(w);
                (w2, c * s)
            }),
        )
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_terms(
            self.terms.iter().map(|(w, c)| (c, std::slice::from_ref(w))),
        ))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alpha() -> Alphabet {
        Alphabet::parse("a:L,b:L,g:G").unwrap()
    }

    fn p(s: &str) -> NCPoly {
        NCPoly::parse(s, &alpha()).unwrap()
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("a + b").mul(&p("a - b")).unwrap(), p("aa - ab + ba - bb"));
        assert_eq!(
            p("a + b").mul(&p("a - b")).unwrap().to_string(),
            "aa - ab + ba - bb"
        );
        let x = p("3*ab - 1/2*ba + 1");
        assert_eq!(x.mul(&NCPoly::one(&alpha())).unwrap(), x);
        assert_eq!(p("2a").mul(&p("1/2*b")).unwrap(), p("ab"));
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(p("3*ab - 1/2*ba + 1").to_string(), "1 + 3*ab - 1/2*ba");
        assert_eq!(p("a - a").to_string(), "0");
        assert_eq!(p("1").to_string(), "1");
        assert_eq!(p("-2").to_string(), "-2");
        assert_eq!(p("0").to_string(), "0");
        assert!(p("0").is_zero());
    }

    #[test]
    fn alphabet_mismatch_is_domain_error() {
        let other = NCPoly::parse("a", &Alphabet::parse("a:L").unwrap()).unwrap();
        assert!(matches!(p("a").mul(&other), Err(Error::Domain(_))));
    }

    fn arb_poly() -> impl Strategy<Value = NCPoly> {
        let word =
            proptest::collection::vec(prop_oneof![Just(b'a'), Just(b'b'), Just(b'g')], 0..=3);
        let term = (word, -3i64..=3, 1i64..=3);
        proptest::collection::vec(term, 0..=4).prop_map(|ts| {
            NCPoly::from_terms(
                &alpha(),
                ts.into_iter()
                    .map(|(w, n, d)| (Word::from_bytes(w), Q::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_is_associative(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            let l = x.mul(&y).unwrap().mul(&z).unwrap();
            let r = x.mul(&y.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn print_parse_fixed_point(x in arb_poly()) {
            let s = x.to_string();
            let back = NCPoly::parse(&s, &alpha()).unwrap();
            prop_assert_eq!(back.to_string(), s);
            prop_assert_eq!(back, x);
        }
    }
}
