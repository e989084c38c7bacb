//! Elements of `A⊗A` and `A⊗A⊗A`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::poly::NCPoly;
use crate::rational::Q;
use crate::text;

/// A basis tensor `w₁⊗…⊗w_N`.
///
/// Ordered by total length, then by component lengths in decreasing order
/// from the left, then lexicographically. For `Δ(ab)` this lists
/// `ab⊗1, a⊗b, b⊗a, 1⊗ab`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorKey<const N: usize>(pub [Word; N]);

impl<const N: usize> TensorKey<N> {
    fn total_len(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }
}

impl<const N: usize> Ord for TensorKey<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_len()
            .cmp(&other.total_len())
            .then_with(|| {
                let a = self.0.iter().map(Word::len);
                let b = other.0.iter().map(Word::len);
                b.cmp(a)
            })
            .then_with(|| {
                let a = self.0.iter().map(Word::as_bytes);
                let b = other.0.iter().map(Word::as_bytes);
                a.cmp(b)
            })
    }
}

impl<const N: usize> PartialOrd for TensorKey<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite ℚ-linear combination of basis tensors of order `N`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<const N: usize> {
    alphabet: Alphabet,
    terms: BTreeMap<TensorKey<N>, Q>,
}

pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const N: usize> Tensor<N> {
    pub fn zero(alphabet: &Alphabet) -> Self {
        Tensor {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `1⊗…⊗1`.
    pub fn one(alphabet: &Alphabet) -> Self {
        let mut t = Self::zero(alphabet);
        t.add_term(
            std::array::from_fn(|_| Word::empty()),
            Q::from_integer(1.into()),
        );
        t
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn add_term(&mut self, key: [Word; N], coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let key = TensorKey(key);
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn from_terms(
        alphabet: &Alphabet,
        terms: impl IntoIterator<Item = ([Word; N], Q)>,
    ) -> Self {
        let mut t = Self::zero(alphabet);
        for (k, c) in terms {
            t.add_term(k, c);
        }
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Word; N], &Q)> {
        self.terms.iter().map(|(k, c)| (&k.0, c))
    }

    pub fn coeff(&self, key: &[Word; N]) -> Q {
        self.terms
            .get(&TensorKey(key.clone()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.alphabet != other.alphabet {
            return Err(Error::alphabet_mismatch());
        }
        Ok(Self::from_terms(
            &self.alphabet,
            self.terms
                .iter()
                .chain(&other.terms)
                .map(|(k, c)| (k.0.clone(), c.clone())),
        ))
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::from_terms(
            &self.alphabet,
            self.terms.iter().map(|(k, c)| (k.0.clone(), c * s)),
        )
    }

    /// Componentwise concatenation product, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.alphabet != other.alphabet {
            return Err(Error::alphabet_mismatch());
        }
        let mut out = Self::zero(&self.alphabet);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let key = std::array::from_fn(|i| k1.0[i].concat(&k2.0[i]));
                out.add_term(key, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn parse(src: &str, alphabet: &Alphabet) -> Result<Self> {
        let terms = text::parse_terms(src, alphabet, N)?;
        Ok(Self::from_terms(
            alphabet,
            terms.into_iter().map(|(c, comps)| {
                let key: [Word; N] = comps.try_into().expect("arity checked by parser");
                (key, c)
            }),
        ))
    }
}

impl Tensor2 {
    /// `P ⊗ Q` as a tensor of two polynomials.
    pub fn tensor_of(p: &NCPoly, q: &NCPoly) -> Result<Self> {
        if p.alphabet() != q.alphabet() {
            return Err(Error::alphabet_mismatch());
        }
        let mut t = Self::zero(p.alphabet());
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                t.add_term([u.clone(), v.clone()], a * b);
            }
        }
        Ok(t)
    }
}

impl<const N: usize> fmt::Display for Tensor<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_terms(
            self.terms.iter().map(|(k, c)| (c, k.0.as_slice())),
        ))
    }
}

impl<const N: usize> fmt::Debug for Tensor<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{N}({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Alphabet {
        Alphabet::parse("a:L,b:L,g:G").unwrap()
    }

    #[test]
    fn mul_examples() {
        let al = alpha();
        let x = Tensor2::parse("a(x)1 + 1(x)a", &al).unwrap();
        let y = Tensor2::parse("b(x)1 + 1(x)b", &al).unwrap();
        assert_eq!(
            x.mul(&y).unwrap().to_string(),
            "ab(x)1 + a(x)b + b(x)a + 1(x)ab"
        );

        let one = Tensor2::one(&al);
        assert_eq!(one.mul(&x).unwrap(), x);

        let g = Tensor2::parse("g(x)g", &al).unwrap();
        assert_eq!(g.mul(&g).unwrap().to_string(), "gg(x)gg");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let al = alpha();
        let x = Tensor2::parse("a(x)b - a⊗b + 1(x)1", &al).unwrap();
        assert_eq!(x.num_terms(), 1);
        assert_eq!(x.to_string(), "1(x)1");
        let z = Tensor2::parse("a(x)b - a(x)b", &al).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn key_order() {
        let al = alpha();
        let t = Tensor3::parse("1(x)1(x)a + a(x)1(x)1 + 1(x)a(x)1", &al).unwrap();
        assert_eq!(t.to_string(), "a(x)1(x)1 + 1(x)a(x)1 + 1(x)1(x)a");
    }

    #[test]
    fn mismatched_alphabets() {
        let x = Tensor2::one(&alpha());
        let y = Tensor2::one(&Alphabet::parse("a:L").unwrap());
        assert!(matches!(x.mul(&y), Err(Error::Domain(_))));
    }
}
