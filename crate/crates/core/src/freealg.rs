//! Bialgebra structure of `k⟨Σ⟩` for a partition `Σ = G ⊔ L`.
//!
//! On letters, `Δ(x) = x⊗x` for group-like `x` and `Δ(x) = x⊗1 + 1⊗x` for
//! primitive `x`. Extended multiplicatively, this gives on a word `w`
//!
//! ```text
//! Δ(w) = Σ_{I ⊔ J = I_L} w[I_G ∪ I] ⊗ w[I_G ∪ J]
//! ```
//!
//! where `I_G`, `I_L` are the positions of group-like and primitive letters.
//! The counit sends `w` to 1 when `w ∈ G*` and to 0 otherwise. When `G = ∅`
//! the antipode is `S(a₁…a_n) = (−1)ⁿ a_n…a₁`.

use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::poly::NCPoly;
use crate::rational::Q;
use crate::tensor::{Tensor2, Tensor3};

/// Uncollected coproduct terms of a word: one pair per splitting of the
/// primitive positions, so exactly `2^{|I_L|}` entries.
pub fn coproduct_word_terms(alphabet: &Alphabet, w: &Word) -> Vec<(Word, Word)> {
    let bytes = w.as_bytes();
    let prim: Vec<usize> = (0..bytes.len())
        .filter(|&i| !alphabet.is_group_like(bytes[i]))
        .collect();
    assert!(
        prim.len() < 64,
        "coproduct of a word with 64+ primitive letters"
    );
    let mut out = Vec::with_capacity(1 << prim.len());
    for mask in 0u64..(1u64 << prim.len()) {
        let mut left = Vec::with_capacity(bytes.len());
        let mut right = Vec::with_capacity(bytes.len());
        let mut k = 0;
        for (i, &c) in bytes.iter().enumerate() {
            if k < prim.len() && prim[k] == i {
                if mask & (1 << k) != 0 {
                    left.push(c);
                } else {
                    right.push(c);
                }
                k += 1;
            } else {
                left.push(c);
                right.push(c);
            }
        }
        out.push((Word::from_bytes(left), Word::from_bytes(right)));
    }
    out
}

/// `Δ(w)` by the subword formula.
pub fn coproduct_word(alphabet: &Alphabet, w: &Word) -> Tensor2 {
    Tensor2::from_terms(
        alphabet,
        coproduct_word_terms(alphabet, w)
            .into_iter()
            .map(|(l, r)| ([l, r], Q::one())),
    )
}

/// `Δ(P)`, linear extension of [`coproduct_word`].
pub fn coproduct(p: &NCPoly) -> Tensor2 {
    let alphabet = p.alphabet();
    let mut out = Tensor2::zero(alphabet);
    for (w, c) in p.terms() {
        for (l, r) in coproduct_word_terms(alphabet, w) {
            out.add_term([l, r], c.clone());
        }
    }
    out
}

/// `Δ` of a single letter.
pub fn coproduct_letter(alphabet: &Alphabet, symbol: u8) -> Tensor2 {
    let x = Word::from_bytes(vec![symbol]);
    if alphabet.is_group_like(symbol) {
        Tensor2::from_terms(alphabet, [([x.clone(), x], Q::one())])
    } else {
        Tensor2::from_terms(
            alphabet,
            [
                ([x.clone(), Word::empty()], Q::one()),
                ([Word::empty(), x], Q::one()),
            ],
        )
    }
}

/// `Δ(P)` computed as `Σ α_w Δ(a₁)·…·Δ(a_n)` in `A⊗A`. Cross-check path for
/// [`coproduct`].
pub fn coproduct_multiplicative(p: &NCPoly) -> Tensor2 {
    let alphabet = p.alphabet();
    let mut out = Tensor2::zero(alphabet);
    for (w, c) in p.terms() {
        let mut acc = Tensor2::one(alphabet);
        for &x in w.as_bytes() {
            acc = acc
                .mul(&coproduct_letter(alphabet, x))
                .expect("same alphabet");
        }
        out = out.add(&acc.scale(c)).expect("same alphabet");
    }
    out
}

pub fn counit_word(alphabet: &Alphabet, w: &Word) -> Q {
    if alphabet.counit_word(w) {
        Q::one()
    } else {
        Q::zero()
    }
}

/// `ε(P)`.
pub fn counit(p: &NCPoly) -> Q {
    p.terms()
        .filter(|(w, _)| p.alphabet().counit_word(w))
        .map(|(_, c)| c.clone())
        .sum()
}

/// `S(w) = (−1)^{|w|} reverse(w)`; requires `G = ∅`.
pub fn antipode_word(alphabet: &Alphabet, w: &Word) -> Result<NCPoly> {
    if !alphabet.all_primitive() {
        return Err(Error::no_antipode());
    }
    let sign = if w.len().is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    };
    Ok(NCPoly::monomial(alphabet, w.reversed(), sign))
}

/// `S(P)`; requires `G = ∅`.
pub fn antipode(p: &NCPoly) -> Result<NCPoly> {
    if !p.alphabet().all_primitive() {
        return Err(Error::no_antipode());
    }
    Ok(p.map_words(|w| {
        let sign = if w.len() % 2 == 0 {
            Q::one()
        } else {
            -Q::one()
        };
        (w.reversed(), sign)
    }))
}

/// `(Δ⊗Id)∘Δ(P)`: resplit the first component.
pub fn coassoc_lhs(p: &NCPoly) -> Tensor3 {
    let alphabet = p.alphabet();
    let mut out = Tensor3::zero(alphabet);
    for ([u1, u2], c) in coproduct(p).terms() {
        for (u11, u12) in coproduct_word_terms(alphabet, u1) {
            out.add_term([u11, u12, u2.clone()], c.clone());
        }
    }
    out
}

/// `(Id⊗Δ)∘Δ(P)`: resplit the second component.
pub fn coassoc_rhs(p: &NCPoly) -> Tensor3 {
    let alphabet = p.alphabet();
    let mut out = Tensor3::zero(alphabet);
    for ([u1, u2], c) in coproduct(p).terms() {
        for (u21, u22) in coproduct_word_terms(alphabet, u2) {
            out.add_term([u1.clone(), u21, u22], c.clone());
        }
    }
    out
}

/// `Σ x₍₁₎ ε(x₍₂₎)`.
pub fn counit_contract_right(t: &Tensor2) -> NCPoly {
    let alphabet = t.alphabet();
    NCPoly::from_terms(
        alphabet,
        t.terms()
            .map(|([l, r], c)| (l.clone(), c * counit_word(alphabet, r))),
    )
}

/// `Σ ε(x₍₁₎) x₍₂₎`.
pub fn counit_contract_left(t: &Tensor2) -> NCPoly {
    let alphabet = t.alphabet();
    NCPoly::from_terms(
        alphabet,
        t.terms()
            .map(|([l, r], c)| (r.clone(), c * counit_word(alphabet, l))),
    )
}

/// `(Σ S(g₍₁₎)g₍₂₎, Σ g₍₁₎S(g₍₂₎))`. Both equal `ε(g)·1` for an antipode.
pub fn antipode_sums(p: &NCPoly) -> Result<(NCPoly, NCPoly)> {
    let alphabet = p.alphabet();
    if !alphabet.all_primitive() {
        return Err(Error::no_antipode());
    }
    let mut left = NCPoly::zero(alphabet);
    let mut right = NCPoly::zero(alphabet);
    for ([u, v], c) in coproduct(p).terms() {
        let su = antipode_word(alphabet, u)?;
        let sv = antipode_word(alphabet, v)?;
        let wu = NCPoly::word(alphabet, u);
        let wv = NCPoly::word(alphabet, v);
        left = left.add(&su.mul(&wv)?.scale(c))?;
        right = right.add(&wu.mul(&sv)?.scale(c))?;
    }
    Ok((left, right))
}
