//! Sweedler's dual of `k⟨Σ⟩` as recognizable series.
//!
//! A linear form `f` lies in the Sweedler dual iff it has a linear
//! representation `f(w) = λ·μ(w)·γ` with `μ` a morphism into `n×n` matrices,
//! iff its Hankel matrix `(f(uv))_{u,v}` has finite rank. This module holds
//! the representation type, the Hankel window, minimal-representation
//! learning, the splitting `f(xy) = Σ gᵢ(x)hᵢ(y)`, the convolution product
//! dual to `Δ`, and the transposed antipode.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::json::{self, LinRepJson};
use crate::matrix::{json_rational, Matrix, RowSpace};
use crate::par::Exec;
use crate::poly::NCPoly;
use crate::rational::{fmt_q, Q};

/// A linear representation `(λ, μ, γ)` of dimension `n`.
///
/// Dimension 0 is allowed and recognizes the zero series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinRep {
    alphabet: Alphabet,
    dim: usize,
    lambda: Vec<Q>,
    mu: BTreeMap<u8, Matrix>,
    gamma: Vec<Q>,
}

fn row_times(row: &[Q], m: &Matrix) -> Vec<Q> {
    let mut out = vec![Q::zero(); m.cols()];
    for (i, a) in row.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (o, b) in out.iter_mut().zip(m.row(i)) {
            if !b.is_zero() {
                *o += a * b;
            }
        }
    }
    out
}

fn times_col(m: &Matrix, col: &[Q]) -> Vec<Q> {
    (0..m.rows())
        .map(|i| m.row(i).iter().zip(col).map(|(a, b)| a * b).sum())
        .collect()
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn kron_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

impl LinRep {
    pub fn new(
        alphabet: &Alphabet,
        lambda: Vec<Q>,
        mu: impl IntoIterator<Item = (char, Matrix)>,
        gamma: Vec<Q>,
    ) -> Result<Self> {
        let dim = lambda.len();
        if gamma.len() != dim {
            return Err(Error::domain(format!(
                "lambda has length {dim} but gamma has length {}",
                gamma.len()
            )));
        }
        let mut map = BTreeMap::new();
        for (c, m) in mu {
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
        Ok(LinRep {
            alphabet: alphabet.clone(),
            dim,
            lambda,
            mu: map,
            gamma,
        })
    }

    /// Dimension-0 representation of the zero series.
    pub fn zero(alphabet: &Alphabet) -> Self {
        LinRep {
            alphabet: alphabet.clone(),
            dim: 0,
            lambda: Vec::new(),
            mu: alphabet
                .letters()
                .iter()
                .map(|l| (l.symbol() as u8, Matrix::zeros(0, 0)))
                .collect(),
            gamma: Vec::new(),
        }
    }

    /// `w ↦ r^{|w|}`, dimension 1.
    pub fn geometric(alphabet: &Alphabet, ratio: Q) -> Self {
        let m = Matrix::row_vector(vec![ratio]);
        LinRep::new(
            alphabet,
            vec![Q::one()],
            alphabet.letters().iter().map(|l| (l.symbol(), m.clone())),
            vec![Q::one()],
        )
        .expect("well-formed")
    }

    /// The counit `e_ε`: 1 on `G*`, 0 elsewhere. Dimension 1.
    pub fn dual_unit(alphabet: &Alphabet) -> Self {
        LinRep::new(
            alphabet,
            vec![Q::one()],
            alphabet.letters().iter().map(|l| {
                let v = if l.is_group_like() { 1 } else { 0 };
                (l.symbol(), Matrix::from_i64(&[&[v]]))
            }),
            vec![Q::one()],
        )
        .expect("well-formed")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lambda(&self) -> &[Q] {
        &self.lambda
    }

    pub fn gamma(&self) -> &[Q] {
        &self.gamma
    }

    pub fn mu(&self, symbol: char) -> Option<&Matrix> {
        self.mu.get(&(symbol as u8))
    }

    /// `μ(w)`.
    pub fn mu_word(&self, w: &Word) -> Matrix {
        let mut acc = Matrix::identity(self.dim);
        for c in w.as_bytes() {
            acc = &acc * &self.mu[c];
        }
        acc
    }

    /// `λ·μ(w)`.
    pub fn left_state(&self, w: &Word) -> Vec<Q> {
        w.as_bytes()
            .iter()
            .fold(self.lambda.clone(), |row, c| row_times(&row, &self.mu[c]))
    }

    /// `μ(w)·γ`.
    pub fn right_state(&self, w: &Word) -> Vec<Q> {
        w.as_bytes()
            .iter()
            .rev()
            .fold(self.gamma.clone(), |col, c| times_col(&self.mu[c], &col))
    }

    /// `f(w) = λ·μ(w)·γ`. Letters outside the alphabet are a domain error.
    pub fn behavior(&self, w: &Word) -> Result<Q> {
        self.alphabet
            .check_word(w)
            .map_err(|_| Error::alphabet_mismatch())?;
        Ok(self.coeff(w))
    }

    /// Unchecked [`behavior`](Self::behavior); panics on foreign letters.
    pub fn coeff(&self, w: &Word) -> Q {
        dot(&self.left_state(w), &self.gamma)
    }

    /// `δ₁(f) = f(1) = λ·γ`.
    pub fn dual_counit(&self) -> Q {
        dot(&self.lambda, &self.gamma)
    }

    /// `f_s : x ↦ f(sx)`, represented by `(λμ(s), μ, γ)`.
    pub fn shift_right(&self, s: &Word) -> Result<LinRep> {
        self.alphabet
            .check_word(s)
            .map_err(|_| Error::alphabet_mismatch())?;
        Ok(LinRep {
            lambda: self.left_state(s),
            ..self.clone()
        })
    }

    /// `ₛf : x ↦ f(xs)`, represented by `(λ, μ, μ(s)γ)`.
    pub fn shift_left(&self, s: &Word) -> Result<LinRep> {
        self.alphabet
            .check_word(s)
            .map_err(|_| Error::alphabet_mismatch())?;
        Ok(LinRep {
            gamma: self.right_state(s),
            ..self.clone()
        })
    }

    /// The pairs `(gᵢ, hᵢ)` with `gᵢ(x) = λμ(x)eᵢ` and `hᵢ(y) = eᵢᵀμ(y)γ`,
    /// so that `f(xy) = Σᵢ gᵢ(x)hᵢ(y)`.
    pub fn split(&self) -> Vec<(LinRep, LinRep)> {
        (0..self.dim)
            .map(|i| {
                let e = unit_vec(self.dim, i);
                let g = LinRep {
                    gamma: e.clone(),
                    ..self.clone()
                };
                let h = LinRep {
                    lambda: e,
                    ..self.clone()
                };
                (g, h)
            })
            .collect()
    }

    /// Representation of the convolution `f₁ ∗ f₂` dual to the coproduct:
    /// `λ₁⊗λ₂`, `γ₁⊗γ₂`, and per letter `μ₁⊗μ₂` (group-like) or
    /// `μ₁⊗I + I⊗μ₂` (primitive).
    pub fn conv(&self, other: &LinRep) -> Result<LinRep> {
        if self.alphabet != other.alphabet {
            return Err(Error::alphabet_mismatch());
        }
        let id1 = Matrix::identity(self.dim);
        let id2 = Matrix::identity(other.dim);
        let mu = self
            .mu
            .iter()
            .map(|(c, m1)| {
                let m2 = &other.mu[c];
                let m = if self.alphabet.is_group_like(*c) {
                    m1.kron(m2)
                } else {
                    &m1.kron(&id2) + &id1.kron(m2)
                };
                (*c, m)
            })
            .collect();
        Ok(LinRep {
            alphabet: self.alphabet.clone(),
            dim: self.dim * other.dim,
            lambda: kron_vec(&self.lambda, &other.lambda),
            mu,
            gamma: kron_vec(&self.gamma, &other.gamma),
        })
    }

    /// Representation of `f₁ + f₂` (block-diagonal).
    pub fn sum(&self, other: &LinRep) -> Result<LinRep> {
        if self.alphabet != other.alphabet {
            return Err(Error::alphabet_mismatch());
        }
        let mu = self
            .mu
            .iter()
            .map(|(c, m)| (*c, m.block_diag(&other.mu[c])))
            .collect();
        Ok(LinRep {
            alphabet: self.alphabet.clone(),
            dim: self.dim + other.dim,
            lambda: self.lambda.iter().chain(&other.lambda).cloned().collect(),
            mu,
            gamma: self.gamma.iter().chain(&other.gamma).cloned().collect(),
        })
    }

    pub fn scale(&self, s: &Q) -> LinRep {
        LinRep {
            lambda: self.lambda.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    /// `ᵗS f : w ↦ f(S(w)) = (−1)^{|w|} f(reverse w)`, represented by
    /// `(γᵀ, −μᵀ, λᵀ)`. Requires `G = ∅`.
    pub fn transpose_antipode(&self) -> Result<LinRep> {
        if !self.alphabet.all_primitive() {
            return Err(Error::no_antipode());
        }
        Ok(LinRep {
            alphabet: self.alphabet.clone(),
            dim: self.dim,
            lambda: self.gamma.clone(),
            mu: self
                .mu
                .iter()
                .map(|(c, m)| (*c, m.transpose().neg()))
                .collect(),
            gamma: self.lambda.clone(),
        })
    }

    /// True iff the recognized series is identically zero.
    ///
    /// Spans the reachable row space `{λμ(w)}` breadth-first; the series
    /// vanishes iff every spanning vector is orthogonal to `γ`.
    pub fn is_zero_series(&self) -> bool {
        let mut space = RowSpace::new(self.dim);
        let mut frontier = vec![self.lambda.clone()];
        while let Some(v) = frontier.pop() {
            if !space.insert(&v) {
                continue;
            }
            if !dot(&v, &self.gamma).is_zero() {
                return false;
            }
            for m in self.mu.values() {
                frontier.push(row_times(&v, m));
            }
        }
        true
    }

    /// Exact equality of recognized series.
    pub fn equivalent(&self, other: &LinRep) -> Result<bool> {
        Ok(self.sum(&other.scale(&-Q::one()))?.is_zero_series())
    }

    pub fn to_json(&self) -> String {
        let strings = |v: &[Q]| {
            serde_json::Value::Array(
                v.iter()
                    .map(|x| serde_json::Value::String(fmt_q(x)))
                    .collect(),
            )
        };
        let doc = LinRepJson {
            alphabet: self.alphabet.to_string(),
            dim: self.dim,
            lambda: strings(&self.lambda),
            mu: self
                .mu
                .iter()
                .map(|(c, m)| ((*c as char).to_string(), m.to_json_value()))
                .collect(),
            gamma: Matrix::col_vector(self.gamma.clone()).to_json_value(),
        };
        json::to_string(&doc)
    }

    pub fn from_json(s: &str) -> Result<LinRep> {
        let doc: LinRepJson = json::from_str(s)?;
        let alphabet = Alphabet::parse(&doc.alphabet)?;
        let lambda = doc
            .lambda
            .as_array()
            .ok_or_else(|| Error::parse("lambda must be an array", doc.lambda.to_string(), 0))?
            .iter()
            .map(json_rational)
            .collect::<Result<Vec<_>>>()?;
        let gamma_m = Matrix::from_json_value(&doc.gamma)?;
        if gamma_m.cols() > 1 || (gamma_m.cols() == 0 && gamma_m.rows() > 0) {
            return Err(Error::parse(
                "gamma must be a column [[..],[..]]",
                doc.gamma.to_string(),
                0,
            ));
        }
        let gamma = gamma_m.data().to_vec();
        let mut mu = Vec::new();
        for (k, v) in &doc.mu {
            let mut chars = k.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(Error::parse("mu keys must be single letters", k.clone(), 0)),
            };
            let m = Matrix::from_json_value(v)?;
            // 0x0 matrices are written as [], which reads back as 0 columns
            let m = if doc.dim == 0 { Matrix::zeros(0, 0) } else { m };
            mu.push((c, m));
        }
        let rep = LinRep::new(&alphabet, lambda, mu, gamma)?;
        if rep.dim != doc.dim {
            return Err(Error::domain(format!(
                "declared dim {} but lambda has length {}",
                doc.dim, rep.dim
            )));
        }
        Ok(rep)
    }
}

/// Finite-support series as a representation on the suffix closure of its
/// support: states are suffixes `s`, `λ_s = f(s)`, `γ = e₁`, and
/// `μ(x)[s][t] = 1` iff `s = x·t`.
pub fn embed_finite(p: &NCPoly) -> LinRep {
    let alphabet = p.alphabet();
    let mut states: Vec<Word> = vec![Word::empty()];
    for (w, _) in p.terms() {
        states.extend(w.suffixes());
    }
    states.sort();
    states.dedup();
    let index: BTreeMap<&Word, usize> = states.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n = states.len();
    let lambda = states.iter().map(|s| p.coeff(s)).collect();
    let mu = alphabet.letters().iter().map(|l| {
        let mut m = Matrix::zeros(n, n);
        for (i, s) in states.iter().enumerate() {
            if s.as_bytes().first() == Some(&(l.symbol() as u8)) {
                let t = Word::from_bytes(s.as_bytes()[1..].to_vec());
                m[(i, index[&t])] = Q::one();
            }
        }
        (l.symbol(), m)
    });
    let gamma = unit_vec(n, index[&Word::empty()]);
    LinRep::new(alphabet, lambda, mu, gamma).expect("well-formed")
}

/// Finite window `(f(uv))` with `|u| ≤ p`, `|v| ≤ s`, rows and columns in
/// length-lex order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HankelSlice {
    pub rows: Vec<Word>,
    pub cols: Vec<Word>,
    pub entries: Matrix,
}

impl HankelSlice {
    pub fn rank(&self) -> usize {
        self.entries.rank()
    }
}

/// Hankel window of an arbitrary coefficient oracle.
pub fn hankel_of<F>(alphabet: &Alphabet, f: F, p: usize, s: usize, exec: Exec) -> HankelSlice
where
    F: Fn(&Word) -> Q + Sync + Send,
{
    let rows = alphabet.words_up_to(p);
    let cols = alphabet.words_up_to(s);
    let data = exec.map(&rows, |u| {
        cols.iter().map(|v| f(&u.concat(v))).collect::<Vec<Q>>()
    });
    HankelSlice {
        entries: Matrix::from_rows(data).expect("rectangular"),
        rows,
        cols,
    }
}

/// Hankel window of a representation, via precomputed prefix and suffix
/// states.
pub fn hankel_rep(rep: &LinRep, p: usize, s: usize, exec: Exec) -> HankelSlice {
    let rows = rep.alphabet.words_up_to(p);
    let cols = rep.alphabet.words_up_to(s);
    let right: Vec<Vec<Q>> = exec.map(&cols, |v| rep.right_state(v));
    let data = exec.map(&rows, |u| {
        let l = rep.left_state(u);
        right.iter().map(|r| dot(&l, r)).collect::<Vec<Q>>()
    });
    HankelSlice {
        entries: Matrix::from_rows(data).expect("rectangular"),
        rows,
        cols,
    }
}

/// Learns a minimal representation from a coefficient oracle.
///
/// Builds the Hankel window up to `(explore+1, explore+1)` and requires the
/// rank at `(explore, explore)` to equal the rank one step further;
/// otherwise returns [`Error::Inconclusive`]. Basis prefixes are the
/// length-lex-first independent rows, transitions are solved exactly.
pub fn learn<F>(alphabet: &Alphabet, f: F, explore: usize, exec: Exec) -> Result<LinRep>
where
    F: Fn(&Word) -> Q + Sync + Send,
{
    let big = hankel_of(alphabet, f, explore + 1, explore + 1, exec);
    let n_small = big.rows.iter().take_while(|w| w.len() <= explore).count();
    let small = big.entries.submatrix(0..n_small, 0..n_small);
    let rank = small.rank();
    let rank_next = big.rank();
    if rank != rank_next {
        return Err(Error::Inconclusive(format!(
            "Hankel rank {rank} at window ({explore},{explore}) grows to {rank_next} at ({0},{0}); raise the exploration length",
            explore + 1
        )));
    }
    if rank == 0 {
        return Ok(LinRep::zero(alphabet));
    }

    let index: BTreeMap<&Word, usize> = big.rows.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let row_of = |w: &Word| &big.entries.row(index[w])[..n_small];

    let mut space = RowSpace::new(n_small);
    let mut basis = Vec::with_capacity(rank);
    for u in &big.rows[..n_small] {
        if space.insert(row_of(u)) {
            basis.push(u.clone());
            if basis.len() == rank {
                break;
            }
        }
    }
    if basis.len() != rank {
        return Err(Error::Internal(
            "prefix basis smaller than Hankel rank".into(),
        ));
    }

    let express = |w: &Word| {
        space
            .express(row_of(w))
            .ok_or_else(|| Error::Internal(format!("row of {w} is outside the learned span")))
    };
    let lambda = express(&Word::empty())?;
    let empty_col = 0; // the empty word heads the length-lex column order
    let gamma = basis
        .iter()
        .map(|u| big.entries[(index[u], empty_col)].clone())
        .collect();
    let mut mu = Vec::with_capacity(alphabet.len());
    for l in alphabet.letters() {
        let x = Word::from_bytes(vec![l.symbol() as u8]);
        let rows = basis
            .iter()
            .map(|u| express(&u.concat(&x)))
            .collect::<Result<Vec<_>>>()?;
        mu.push((l.symbol(), Matrix::from_rows(rows).expect("rectangular")));
    }
    LinRep::new(alphabet, lambda, mu, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn one_letter() -> Alphabet {
        Alphabet::parse("a:L").unwrap()
    }

    fn prim() -> Alphabet {
        Alphabet::parse("a:L,b:L").unwrap()
    }

    fn w(s: &str) -> Word {
        Word::from_str_unchecked(s)
    }

    fn counting() -> LinRep {
        LinRep::new(
            &prim(),
            vec![q(1), q(0)],
            [
                ('a', Matrix::from_i64(&[&[1, 1], &[0, 1]])),
                ('b', Matrix::identity(2)),
            ],
            vec![q(0), q(1)],
        )
        .unwrap()
    }

    #[test]
    fn behavior_examples() {
        let g = LinRep::geometric(&one_letter(), q(2));
        assert_eq!(g.behavior(&w("aaa")).unwrap(), q(8));
        assert_eq!(g.behavior(&Word::empty()).unwrap(), q(1));
        assert_eq!(counting().behavior(&w("abab")).unwrap(), q(2));
        assert!(matches!(g.behavior(&w("b")), Err(Error::Domain(_))));
    }

    #[test]
    fn shifts() {
        let f = counting();
        for s in prim().words_up_to(3) {
            let r = f.shift_right(&s).unwrap();
            let l = f.shift_left(&s).unwrap();
            for x in prim().words_up_to(3) {
                assert_eq!(r.coeff(&x), f.coeff(&s.concat(&x)));
                assert_eq!(l.coeff(&x), f.coeff(&x.concat(&s)));
            }
        }
    }

    #[test]
    fn hankel_examples() {
        let g = LinRep::geometric(&one_letter(), q(2));
        let h = hankel_rep(&g, 2, 2, Exec::Sequential);
        assert_eq!(
            h.entries,
            Matrix::from_i64(&[&[1, 2, 4], &[2, 4, 8], &[4, 8, 16]])
        );
        assert_eq!(hankel_rep(&g, 3, 3, Exec::Parallel).rank(), 1);

        let chi1 = embed_finite(&NCPoly::one(&one_letter()));
        let h = hankel_rep(&chi1, 1, 1, Exec::Sequential);
        assert_eq!(h.entries, Matrix::from_i64(&[&[1, 0], &[0, 0]]));

        assert_eq!(hankel_rep(&counting(), 3, 3, Exec::Parallel).rank(), 2);
        let z = LinRep::zero(&prim());
        let h = hankel_rep(&z, 2, 2, Exec::Sequential);
        assert!(h.entries.is_zero());
        assert_eq!(h.rank(), 0);
    }

    #[test]
    fn hankel_paths_agree() {
        let f = counting();
        let a = hankel_rep(&f, 3, 2, Exec::Parallel);
        let b = hankel_of(&prim(), |x| f.coeff(x), 3, 2, Exec::Sequential);
        assert_eq!(a, b);
    }

    #[test]
    fn learn_geometric() {
        let g = LinRep::geometric(&one_letter(), q(2));
        let l = learn(&one_letter(), |x| g.coeff(x), 2, Exec::Parallel).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(l.dual_counit(), q(1));
        assert_eq!(l.mu('a').unwrap(), &Matrix::from_i64(&[&[2]]));
        for n in 0..=3 {
            let word = Word::from_bytes(vec![b'a'; n]);
            assert_eq!(l.coeff(&word), q(1 << n));
        }
    }

    #[test]
    fn learn_counting() {
        let f = counting();
        let l = learn(&prim(), |x| f.coeff(x), 3, Exec::Parallel).unwrap();
        assert_eq!(l.dim(), 2);
        for x in prim().words_up_to(7) {
            assert_eq!(l.coeff(&x), f.coeff(&x), "{x}");
        }
        assert!(l.equivalent(&f).unwrap());
    }

    #[test]
    fn learn_unit_indicator() {
        let chi1 = embed_finite(&NCPoly::one(&one_letter()));
        let l = learn(&one_letter(), |x| chi1.coeff(x), 1, Exec::Sequential).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(l.mu('a').unwrap(), &Matrix::from_i64(&[&[0]]));
        assert_eq!(l.dual_counit(), q(1));
    }

    #[test]
    fn learn_reports_unstable_rank() {
        // χ_{aaa} needs prefixes up to length 3 before its rank settles
        let p = NCPoly::parse("aaa", &one_letter()).unwrap();
        let f = embed_finite(&p);
        let err = learn(&one_letter(), |x| f.coeff(x), 1, Exec::Sequential).unwrap_err();
        assert!(matches!(err, Error::Inconclusive(_)));
        let l = learn(&one_letter(), |x| f.coeff(x), 3, Exec::Sequential).unwrap();
        assert!(l.equivalent(&f).unwrap());
        assert_eq!(l.dim(), 4);
    }

    #[test]
    fn learn_zero_series() {
        let l = learn(&prim(), |_| Q::zero(), 2, Exec::Sequential).unwrap();
        assert_eq!(l.dim(), 0);
        assert!(l.is_zero_series());
    }

    #[test]
    fn split_examples() {
        let g = LinRep::geometric(&one_letter(), q(2));
        let parts = g.split();
        assert_eq!(parts.len(), 1);
        for x in one_letter().words_up_to(3) {
            for y in one_letter().words_up_to(3) {
                let (gi, hi) = &parts[0];
                assert_eq!(gi.coeff(&x) * hi.coeff(&y), g.coeff(&x.concat(&y)));
            }
        }
        let f = counting();
        for y in prim().words_up_to(3) {
            let s: Q = f
                .split()
                .iter()
                .map(|(g, h)| g.coeff(&Word::empty()) * h.coeff(&y))
                .sum();
            assert_eq!(s, f.coeff(&y));
        }
    }

    #[test]
    fn conv_geometric_binomial() {
        let al = one_letter();
        let c = LinRep::geometric(&al, q(2))
            .conv(&LinRep::geometric(&al, q(3)))
            .unwrap();
        for n in 0..=5u32 {
            assert_eq!(
                c.coeff(&Word::from_bytes(vec![b'a'; n as usize])),
                q(5i64.pow(n))
            );
        }
    }

    #[test]
    fn conv_with_unit() {
        let f = counting();
        let u = LinRep::dual_unit(&prim());
        let c = f.conv(&u).unwrap();
        for x in prim().words_up_to(4) {
            assert_eq!(c.coeff(&x), f.coeff(&x));
        }
        assert!(u.conv(&f).unwrap().equivalent(&f).unwrap());
    }

    #[test]
    fn embed_finite_examples() {
        let al = prim();
        let chi1 = embed_finite(&NCPoly::one(&al));
        assert_eq!(chi1.dim(), 1);
        assert_eq!(chi1.mu('a').unwrap(), &Matrix::from_i64(&[&[0]]));

        let p = NCPoly::parse("ab", &al).unwrap();
        let e = embed_finite(&p);
        for x in al.words_up_to(4) {
            let expect = if x == w("ab") { q(1) } else { q(0) };
            assert_eq!(e.coeff(&x), expect);
        }
        let p = NCPoly::parse("2a - b", &al).unwrap();
        let e = embed_finite(&p);
        for x in al.words_up_to(3) {
            assert_eq!(e.coeff(&x), p.coeff(&x));
        }
    }

    #[test]
    fn transpose_antipode_examples() {
        let al = one_letter();
        let g = LinRep::geometric(&al, q(2));
        let t = g.transpose_antipode().unwrap();
        assert_eq!(t.coeff(&w("aa")), q(4));
        assert_eq!(t.coeff(&w("a")), -g.coeff(&w("a")));
        let f = counting();
        let tt = f
            .transpose_antipode()
            .unwrap()
            .transpose_antipode()
            .unwrap();
        for x in prim().words_up_to(5) {
            assert_eq!(tt.coeff(&x), f.coeff(&x));
        }
        let mixed = Alphabet::parse("a:L,g:G").unwrap();
        assert!(matches!(
            LinRep::geometric(&mixed, q(2)).transpose_antipode(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dual_counit_examples() {
        assert_eq!(LinRep::geometric(&one_letter(), q(2)).dual_counit(), q(1));
        let e = embed_finite(&NCPoly::parse("ab", &prim()).unwrap());
        assert_eq!(e.dual_counit(), q(0));
        assert_eq!(LinRep::dual_unit(&prim()).dual_counit(), q(1));
    }

    #[test]
    fn zero_test_and_equivalence() {
        let f = counting();
        assert!(!f.is_zero_series());
        assert!(f.sum(&f.scale(&q(-1))).unwrap().is_zero_series());
        assert!(!f.equivalent(&LinRep::geometric(&prim(), q(1))).unwrap());
        // nonzero only on a long word
        let e = embed_finite(&NCPoly::parse("abba", &prim()).unwrap());
        assert!(!e.is_zero_series());
    }

    #[test]
    fn json_schema() {
        let s = counting().to_json();
        assert_eq!(
            s,
            r#"{"alphabet": "a:L,b:L", "dim": 2, "lambda": ["1", "0"], "mu": {"a": [["1", "1"], ["0", "1"]], "b": [["1", "0"], ["0", "1"]]}, "gamma": [["0"], ["1"]]}"#
        );
        assert_eq!(LinRep::from_json(&s).unwrap(), counting());
        let z = LinRep::zero(&prim());
        assert_eq!(LinRep::from_json(&z.to_json()).unwrap(), z);
        assert!(LinRep::from_json(r#"{"alphabet": "a:L", "dim": 2, "lambda": ["1"], "mu": {"a": [["1"]]}, "gamma": [["1"]]}"#).is_err());
    }
}
