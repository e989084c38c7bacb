//! Linear forms on `k⟨Σ⟩` and the convolution law dual to the coproduct.
//!
//! Only computable forms are represented: finite-support series (shown as
//! their support polynomial) and recognizable series given by a [`LinRep`].
//! The convolution is
//!
//! ```text
//! (f ∗ h)(w) = ⟨f ⊗ h, Δ(w)⟩ = Σ_{I ⊔ J = I_L} f(w[I_G ∪ I]) · h(w[I_G ∪ J])
//! ```
//!
//! which is the shuffle product when every letter is primitive.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::freealg;
use crate::poly::NCPoly;
use crate::rational::Q;
use crate::sweedler::{embed_finite, LinRep};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Series {
    FiniteSupport(NCPoly),
    Recognizable(LinRep),
}

impl Series {
    /// `χ_w`.
    pub fn indicator(alphabet: &Alphabet, w: &Word) -> Series {
        Series::FiniteSupport(NCPoly::word(alphabet, w))
    }

    /// `e_ε`, the unit of `∗`: 1 on `G*`, 0 elsewhere.
    pub fn dual_unit(alphabet: &Alphabet) -> Series {
        Series::Recognizable(LinRep::dual_unit(alphabet))
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Series::FiniteSupport(p) => p.alphabet(),
            Series::Recognizable(r) => r.alphabet(),
        }
    }

    /// `f(w)`; zero off the support for finite series.
    pub fn coeff(&self, w: &Word) -> Q {
        match self {
            Series::FiniteSupport(p) => p.coeff(w),
            Series::Recognizable(r) => r.coeff(w),
        }
    }

    pub fn to_linrep(&self) -> LinRep {
        match self {
            Series::FiniteSupport(p) => embed_finite(p),
            Series::Recognizable(r) => r.clone(),
        }
    }

    fn same_alphabet(&self, other: &Alphabet) -> Result<()> {
        if self.alphabet() == other {
            Ok(())
        } else {
            Err(Error::alphabet_mismatch())
        }
    }

    /// `⟨f, P⟩ = Σ α_w f(w)`.
    pub fn pair(&self, p: &NCPoly) -> Result<Q> {
        self.same_alphabet(p.alphabet())?;
        Ok(p.terms().map(|(w, c)| c * self.coeff(w)).sum())
    }

    /// `f ∗ h`. Finite × finite stays finite; otherwise the result is the
    /// convolution representation of the two (embedded) representations.
    pub fn convolve(&self, other: &Series) -> Result<Series> {
        self.same_alphabet(other.alphabet())?;
        match (self, other) {
            (Series::FiniteSupport(f), Series::FiniteSupport(h)) => {
                Ok(Series::FiniteSupport(convolve_finite(f, h)))
            }
            _ => Ok(Series::Recognizable(
                self.to_linrep().conv(&other.to_linrep())?,
            )),
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.same_alphabet(other.alphabet())?;
        match (self, other) {
            (Series::FiniteSupport(f), Series::FiniteSupport(h)) => {
                Ok(Series::FiniteSupport(f.add(h)?))
            }
            _ => Ok(Series::Recognizable(
                self.to_linrep().sum(&other.to_linrep())?,
            )),
        }
    }

    pub fn scale(&self, s: &Q) -> Series {
        match self {
            Series::FiniteSupport(p) => Series::FiniteSupport(p.scale(s)),
            Series::Recognizable(r) => Series::Recognizable(r.scale(s)),
        }
    }

    /// `f_s : x ↦ f(sx)`.
    pub fn shift_right(&self, s: &Word) -> Result<Series> {
        self.alphabet()
            .check_word(s)
            .map_err(|_| Error::alphabet_mismatch())?;
        Ok(match self {
            Series::FiniteSupport(p) => Series::FiniteSupport(NCPoly::from_terms(
                p.alphabet(),
                p.terms()
                    .filter_map(|(w, c)| w.strip_prefix(s).map(|x| (x, c.clone()))),
            )),
            Series::Recognizable(r) => Series::Recognizable(r.shift_right(s)?),
        })
    }

    /// `ₛf : x ↦ f(xs)`.
    pub fn shift_left(&self, s: &Word) -> Result<Series> {
        self.alphabet()
            .check_word(s)
            .map_err(|_| Error::alphabet_mismatch())?;
        Ok(match self {
            Series::FiniteSupport(p) => Series::FiniteSupport(NCPoly::from_terms(
                p.alphabet(),
                p.terms()
                    .filter_map(|(w, c)| w.strip_suffix(s).map(|x| (x, c.clone()))),
            )),
            Series::Recognizable(r) => Series::Recognizable(r.shift_left(s)?),
        })
    }

    /// `ᵗS f = f ∘ S`. Requires `G = ∅`.
    pub fn transpose_antipode(&self) -> Result<Series> {
        match self {
            Series::FiniteSupport(p) => Ok(Series::FiniteSupport(freealg::antipode(p)?)),
            Series::Recognizable(r) => Ok(Series::Recognizable(r.transpose_antipode()?)),
        }
    }

    /// Coefficientwise agreement on all words of length ≤ `maxlen`.
    pub fn agrees_up_to(&self, other: &Series, maxlen: usize) -> bool {
        self.alphabet() == other.alphabet()
            && self
                .alphabet()
                .words_up_to(maxlen)
                .iter()
                .all(|w| self.coeff(w) == other.coeff(w))
    }

    /// Exact equality as linear forms.
    pub fn equivalent(&self, other: &Series) -> Result<bool> {
        self.same_alphabet(other.alphabet())?;
        match (self, other) {
            (Series::FiniteSupport(f), Series::FiniteSupport(h)) => Ok(f == h),
            _ => self.to_linrep().equivalent(&other.to_linrep()),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::FiniteSupport(p) => write!(f, "{p}"),
            Series::Recognizable(r) => f.write_str(&r.to_json()),
        }
    }
}

/// `(f ∗ h)(w)` straight from the splitting sum over `Δ(w)`.
pub fn convolution_coeff<F, H>(alphabet: &Alphabet, f: F, h: H, w: &Word) -> Q
where
    F: Fn(&Word) -> Q,
    H: Fn(&Word) -> Q,
{
    freealg::coproduct_word_terms(alphabet, w)
        .iter()
        .map(|(l, r)| f(l) * h(r))
        .sum()
}

type Splits = Vec<(Vec<u8>, u64)>;

/// `χ_u ∗ χ_v`: the words `w` together with the number of splittings of
/// `Δ(w)` landing on `u ⊗ v`. Built letter by letter: a primitive letter
/// comes from the front of `u` or of `v`, a group-like letter must open both.
fn indicator_product(
    alphabet: &Alphabet,
    u: &[u8],
    v: &[u8],
    memo: &mut BTreeMap<(usize, usize), Splits>,
) -> Splits {
    let key = (u.len(), v.len());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut out: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
    if u.is_empty() && v.is_empty() {
        out.insert(Vec::new(), 1);
    }
    let mut extend = |first: u8, rest: Splits| {
        for (mut w, n) in rest {
            w.insert(0, first);
            *out.entry(w).or_insert(0) += n;
        }
    };
    if let Some(&x) = u.first() {
        if !alphabet.is_group_like(x) {
            extend(x, indicator_product(alphabet, &u[1..], v, memo));
        }
    }
    if let Some(&y) = v.first() {
        if !alphabet.is_group_like(y) {
            extend(y, indicator_product(alphabet, u, &v[1..], memo));
        }
    }
    if let (Some(&x), Some(&y)) = (u.first(), v.first()) {
        if x == y && alphabet.is_group_like(x) {
            extend(x, indicator_product(alphabet, &u[1..], &v[1..], memo));
        }
    }
    let out: Splits = out.into_iter().collect();
    memo.insert(key, out.clone());
    out
}

fn convolve_finite(f: &NCPoly, h: &NCPoly) -> NCPoly {
    let alphabet = f.alphabet();
    let mut out = NCPoly::zero(alphabet);
    for (u, a) in f.terms() {
        for (v, b) in h.terms() {
            // memo keys are suffix lengths, valid for this (u, v) only
            let mut memo = BTreeMap::new();
            let ab = a * b;
            for (w, n) in indicator_product(alphabet, u.as_bytes(), v.as_bytes(), &mut memo) {
                out.add_term(Word::from_bytes(w), &ab * Q::from_integer(n.into()));
            }
        }
    }
    out
}

/// Convenience: `e_ε` as a coefficient function.
pub fn dual_unit_coeff(alphabet: &Alphabet, w: &Word) -> Q {
    if alphabet.counit_word(w) {
        Q::one()
    } else {
        Q::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn prim() -> Alphabet {
        Alphabet::parse("a:L,b:L").unwrap()
    }

    fn mixed() -> Alphabet {
        Alphabet::parse("a:L,b:L,g:G").unwrap()
    }

    fn w(s: &str) -> Word {
        Word::from_str_unchecked(s)
    }

    fn fin(s: &str, al: &Alphabet) -> Series {
        Series::FiniteSupport(NCPoly::parse(s, al).unwrap())
    }

    #[test]
    fn pair_examples() {
        let al = prim();
        let chi_a = Series::indicator(&al, &w("a"));
        assert_eq!(
            chi_a.pair(&NCPoly::parse("3a + b", &al).unwrap()).unwrap(),
            q(3)
        );
        assert_eq!(chi_a.pair(&NCPoly::zero(&al)).unwrap(), q(0));
        let geo = Series::Recognizable(LinRep::geometric(&al, q(2)));
        assert_eq!(geo.pair(&NCPoly::parse("ab", &al).unwrap()).unwrap(), q(4));
        let other = NCPoly::parse("a", &mixed()).unwrap();
        assert!(matches!(chi_a.pair(&other), Err(Error::Domain(_))));
    }

    #[test]
    fn convolve_examples() {
        let al = prim();
        let c = Series::indicator(&al, &w("a"))
            .convolve(&Series::indicator(&al, &w("b")))
            .unwrap();
        assert_eq!(c, fin("ab + ba", &al));

        let f = fin("2ab - 1/3*b + 1", &al);
        let unit = Series::indicator(&al, &Word::empty());
        assert_eq!(unit.convolve(&f).unwrap(), f);

        let g_al = Alphabet::parse("g:G").unwrap();
        let chi_g = Series::indicator(&g_al, &w("g"));
        let c = chi_g.convolve(&chi_g).unwrap();
        assert_eq!(c.coeff(&w("g")), q(1));
        assert_eq!(c, fin("g", &g_al));
    }

    #[test]
    fn shuffle_multiplicities() {
        let al = prim();
        let c = Series::indicator(&al, &w("a"))
            .convolve(&Series::indicator(&al, &w("a")))
            .unwrap();
        assert_eq!(c, fin("2aa", &al));
        let c = Series::indicator(&al, &w("ab"))
            .convolve(&Series::indicator(&al, &w("a")))
            .unwrap();
        assert_eq!(c, fin("2aab + aba", &al));
    }

    #[test]
    fn finite_convolution_matches_splitting_sum() {
        let al = mixed();
        let words = al.words_up_to(2);
        for u in &words {
            for v in &words {
                let f = Series::indicator(&al, u);
                let h = Series::indicator(&al, v);
                let c = f.convolve(&h).unwrap();
                for t in al.words_up_to(4) {
                    let direct = convolution_coeff(&al, |x| f.coeff(x), |x| h.coeff(x), &t);
                    assert_eq!(c.coeff(&t), direct, "{u} * {v} at {t}");
                }
            }
        }
    }

    #[test]
    fn mixed_variant_convolution() {
        let al = mixed();
        let f = fin("a + 2g", &al);
        let h = Series::Recognizable(LinRep::geometric(&al, q(3)));
        let c = f.convolve(&h).unwrap();
        assert!(matches!(c, Series::Recognizable(_)));
        for t in al.words_up_to(4) {
            let direct = convolution_coeff(&al, |x| f.coeff(x), |x| h.coeff(x), &t);
            assert_eq!(c.coeff(&t), direct, "{t}");
        }
    }

    #[test]
    fn dual_unit_examples() {
        let a = Alphabet::parse("a:L").unwrap();
        let e = Series::dual_unit(&a);
        assert!(e.agrees_up_to(&Series::indicator(&a, &Word::empty()), 5));
        assert!(e
            .equivalent(&Series::indicator(&a, &Word::empty()))
            .unwrap());
        let g = Alphabet::parse("g:G").unwrap();
        assert_eq!(Series::dual_unit(&g).coeff(&w("ggg")), q(1));
    }

    #[test]
    fn unit_law_on_finite_series() {
        let al = mixed();
        let e = Series::dual_unit(&al);
        let f = fin("3*gab - a + 1/2*gg + 2", &al);
        let l = e.convolve(&f).unwrap();
        let r = f.convolve(&e).unwrap();
        assert!(l.agrees_up_to(&f, 4));
        assert!(r.agrees_up_to(&f, 4));
    }

    #[test]
    fn shift_examples() {
        let al = prim();
        let chi_ab = Series::indicator(&al, &w("ab"));
        assert_eq!(
            chi_ab.shift_right(&w("a")).unwrap(),
            Series::indicator(&al, &w("b"))
        );
        assert_eq!(
            chi_ab.shift_left(&w("b")).unwrap(),
            Series::indicator(&al, &w("a"))
        );
        assert_eq!(chi_ab.shift_left(&Word::empty()).unwrap(), chi_ab);
        assert_eq!(chi_ab.shift_right(&Word::empty()).unwrap(), chi_ab);
    }

    #[test]
    fn transpose_antipode_finite() {
        let al = prim();
        let f = fin("ab + 2a", &al);
        assert_eq!(f.transpose_antipode().unwrap(), fin("ba - 2a", &al));
    }
}
