//! Finite-dimensional matrix representations `ρ : k⟨Σ⟩ → End(V)`.
//!
//! A representation is a letter assignment; since `k⟨Σ⟩` is free every
//! assignment extends uniquely to an algebra morphism. Tensor products use
//! the coproduct's letter scheme (`ρ₁⊗ρ₂` on group-like letters,
//! `ρ₁⊗I + I⊗ρ₂` on primitive ones) with row-major Kronecker ordering, so
//! `(V₁⊗V₂)⊗V₃` and `V₁⊗(V₂⊗V₃)` coincide as matrices.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::freealg;
use crate::json::{self, MatRepJson};
use crate::matrix::Matrix;
use crate::poly::NCPoly;
use crate::rational::Q;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatRep {
    alphabet: Alphabet,
    dim: usize,
    assign: BTreeMap<u8, Matrix>,
}

impl MatRep {
    pub fn new(
        alphabet: &Alphabet,
        dim: usize,
        assign: impl IntoIterator<Item = (char, Matrix)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::domain("representation dimension must be positive"));
        }
        let mut map = BTreeMap::new();
        for (c, m) in assign {
            let sym = u8::try_from(c)
                .ok()
                .filter(|&b| alphabet.contains(b))
                .ok_or_else(|| {
                    Error::domain(format!("letter {c:?} is not in alphabet {alphabet}"))
                })?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::domain(format!(
                    "matrix for {c:?} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if map.insert(sym, m).is_some() {
                return Err(Error::domain(format!("letter {c:?} assigned twice")));
            }
        }
        if let Some(l) = alphabet
            .letters()
            .iter()
            .find(|l| !map.contains_key(&(l.symbol() as u8)))
        {
            return Err(Error::domain(format!(
                "no matrix for letter {:?}",
                l.symbol()
            )));
        }
        Ok(MatRep {
            alphabet: alphabet.clone(),
            dim,
            assign: map,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn letter_matrix(&self, symbol: char) -> Option<&Matrix> {
        self.assign.get(&(symbol as u8))
    }

    pub fn eval_word(&self, w: &Word) -> Result<Matrix> {
        self.alphabet
            .check_word(w)
            .map_err(|_| Error::alphabet_mismatch())?;
        let mut acc = Matrix::identity(self.dim);
        for c in w.as_bytes() {
            acc = &acc * &self.assign[c];
        }
        Ok(acc)
    }

    /// `ρ(P) = Σ α_w ρ(w)`.
    pub fn eval(&self, p: &NCPoly) -> Result<Matrix> {
        if p.alphabet() != &self.alphabet {
            return Err(Error::alphabet_mismatch());
        }
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (w, c) in p.terms() {
            acc = &acc + &self.eval_word(w)?.scale(c);
        }
        Ok(acc)
    }

    fn same_alphabet(&self, other: &MatRep) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::alphabet_mismatch())
        }
    }

    /// `ρ₁ ⊕ ρ₂`: block-diagonal on every letter.
    pub fn direct_sum(&self, other: &MatRep) -> Result<MatRep> {
        self.same_alphabet(other)?;
        let assign = self
            .assign
            .iter()
            .map(|(c, m)| (*c, m.block_diag(&other.assign[c])))
            .collect();
        Ok(MatRep {
            alphabet: self.alphabet.clone(),
            dim: self.dim + other.dim,
            assign,
        })
    }

    /// `ρ₁ ⊗ ρ₂` driven by the coproduct.
    pub fn tensor(&self, other: &MatRep) -> Result<MatRep> {
        self.same_alphabet(other)?;
        let id1 = Matrix::identity(self.dim);
        let id2 = Matrix::identity(other.dim);
        let assign = self
            .assign
            .iter()
            .map(|(c, m1)| {
                let m2 = &other.assign[c];
                let m = if self.alphabet.is_group_like(*c) {
                    m1.kron(m2)
                } else {
                    &m1.kron(&id2) + &id1.kron(m2)
                };
                (*c, m)
            })
            .collect();
        Ok(MatRep {
            alphabet: self.alphabet.clone(),
            dim: self.dim * other.dim,
            assign,
        })
    }

    /// The one-dimensional representation given by the counit.
    pub fn trivial(alphabet: &Alphabet) -> MatRep {
        let assign = alphabet
            .letters()
            .iter()
            .map(|l| {
                let v = if l.is_group_like() { 1 } else { 0 };
                (l.symbol() as u8, Matrix::from_i64(&[&[v]]))
            })
            .collect();
        MatRep {
            alphabet: alphabet.clone(),
            dim: 1,
            assign,
        }
    }

    pub fn to_json(&self) -> String {
        let doc = MatRepJson {
            alphabet: self.alphabet.to_string(),
            dim: self.dim,
            assign: self
                .assign
                .iter()
                .map(|(c, m)| ((*c as char).to_string(), m.to_json_value()))
                .collect(),
        };
        json::to_string(&doc)
    }

    pub fn from_json(s: &str) -> Result<MatRep> {
        let doc: MatRepJson = json::from_str(s)?;
        let alphabet = Alphabet::parse(&doc.alphabet)?;
        let mut assign = Vec::new();
        for (k, v) in &doc.assign {
            let mut chars = k.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => {
                    return Err(Error::parse(
                        "assign keys must be single letters",
                        k.clone(),
                        0,
                    ))
                }
            };
            assign.push((c, Matrix::from_json_value(v)?));
        }
        MatRep::new(&alphabet, doc.dim, assign)
    }
}

/// A row vector `ψ ∈ V^∨`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualVector(pub Vec<Q>);

impl DualVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `⟨ψ, x⟩`.
    pub fn pair(&self, x: &[Q]) -> Result<Q> {
        if x.len() != self.0.len() {
            return Err(Error::domain("dimension mismatch in pairing"));
        }
        Ok(self.0.iter().zip(x).map(|(a, b)| a * b).sum())
    }

    fn times(&self, m: &Matrix) -> DualVector {
        let row = Matrix::row_vector(self.0.clone());
        DualVector((&row * m).data().to_vec())
    }
}

fn apply(m: &Matrix, x: &[Q]) -> Vec<Q> {
    (0..m.rows())
        .map(|i| m.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// `g ∗_S ψ = ψ ∘ ρ(S(g))`.
pub fn dual_action(r: &MatRep, g: &NCPoly, psi: &DualVector) -> Result<DualVector> {
    if !r.alphabet.all_primitive() {
        return Err(Error::no_antipode());
    }
    if psi.len() != r.dim {
        return Err(Error::domain(
            "dual vector length does not match representation",
        ));
    }
    let sg = freealg::antipode(g)?;
    Ok(psi.times(&r.eval(&sg)?))
}

/// `(Σ ⟨g₍₁₎ ∗_S ψ, g₍₂₎·x⟩, ε(g)⟨ψ, x⟩)`. The two components agree exactly
/// when the pairing `V^∨ ⊗ V → k` is invariant.
pub fn pairing_invariance_check(
    r: &MatRep,
    g: &NCPoly,
    psi: &DualVector,
    x: &[Q],
) -> Result<(Q, Q)> {
    pairing_sums(r, g, psi, x, false)
}

/// Same audit with the coproduct factors swapped:
/// `(Σ ⟨g₍₂₎ ∗_S ψ, g₍₁₎·x⟩, ε(g)⟨ψ, x⟩)`.
pub fn pairing_invariance_check_swapped(
    r: &MatRep,
    g: &NCPoly,
    psi: &DualVector,
    x: &[Q],
) -> Result<(Q, Q)> {
    pairing_sums(r, g, psi, x, true)
}

fn pairing_sums(
    r: &MatRep,
    g: &NCPoly,
    psi: &DualVector,
    x: &[Q],
    swapped: bool,
) -> Result<(Q, Q)> {
    if !r.alphabet.all_primitive() {
        return Err(Error::no_antipode());
    }
    if g.alphabet() != &r.alphabet {
        return Err(Error::alphabet_mismatch());
    }
    if psi.len() != r.dim || x.len() != r.dim {
        return Err(Error::domain("dimension mismatch in pairing"));
    }
    let alphabet = &r.alphabet;
    let mut lhs = Q::zero();
    for ([u, v], c) in freealg::coproduct(g).terms() {
        let (acting_dual, acting_vec) = if swapped { (v, u) } else { (u, v) };
        let phi = dual_action(r, &NCPoly::word(alphabet, acting_dual), psi)?;
        let y = apply(&r.eval_word(acting_vec)?, x);
        lhs += c * phi.pair(&y)?;
    }
    let rhs = freealg::counit(g) * psi.pair(x)?;
    Ok((lhs, rhs))
}
