//! Exhaustive law checks over all words up to a length bound.
//!
//! Each check enumerates its cases, evaluates them through [`Exec`], and
//! reports the first failing case in enumeration order.

use std::collections::HashMap;
use std::fmt;

use crate::alphabet::{Alphabet, Word};
use crate::dualforms::{convolution_coeff, Series};
use crate::error::{Error, Result};
use crate::freealg;
use crate::matrix::Matrix;
use crate::par::Exec;
use crate::poly::NCPoly;
use crate::rational::Q;
use crate::sweedler::{embed_finite, LinRep};

/// Largest accepted `maxlen`; case counts grow exponentially past it.
pub const MAX_CHECK_LEN: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{}: ok ({} cases)", self.name, self.checked),
            Some(c) => write!(
                f,
                "{}: FAILED after {} cases: {}",
                self.name, self.checked, c
            ),
        }
    }
}

fn guard(maxlen: usize) -> Result<()> {
    if maxlen > MAX_CHECK_LEN {
        return Err(Error::parse(
            format!("maxlen must be at most {MAX_CHECK_LEN}"),
            maxlen.to_string(),
            0,
        ));
    }
    Ok(())
}

fn run<T: Sync>(
    name: &'static str,
    cases: &[T],
    exec: Exec,
    f: impl Fn(&T) -> Option<String> + Sync + Send,
) -> CheckReport {
    CheckReport {
        name,
        checked: cases.len(),
        counterexample: exec.find_first(cases, f),
    }
}

/// `(Δ⊗Id)∘Δ(w) = (Id⊗Δ)∘Δ(w)` for all `|w| ≤ maxlen`.
pub fn coassoc(alphabet: &Alphabet, maxlen: usize, exec: Exec) -> Result<CheckReport> {
    guard(maxlen)?;
    let words = alphabet.words_up_to(maxlen);
    Ok(run("coassoc", &words, exec, |w| {
        let p = NCPoly::word(alphabet, w);
        let (l, r) = (freealg::coassoc_lhs(&p), freealg::coassoc_rhs(&p));
        (l != r).then(|| format!("word {w}: (Δ⊗Id)Δ = {l}, (Id⊗Δ)Δ = {r}"))
    }))
}

/// Subword formula and multiplicative extension give the same `Δ(w)`.
pub fn coproduct_paths(alphabet: &Alphabet, maxlen: usize, exec: Exec) -> Result<CheckReport> {
    guard(maxlen)?;
    let words = alphabet.words_up_to(maxlen);
    Ok(run("coproduct-paths", &words, exec, |w| {
        let p = NCPoly::word(alphabet, w);
        let (a, b) = (
            freealg::coproduct(&p),
            freealg::coproduct_multiplicative(&p),
        );
        (a != b).then(|| format!("word {w}: subword {a}, multiplicative {b}"))
    }))
}

/// `Δ(uv) = Δ(u)·Δ(v)` for all `|u|, |v| ≤ maxlen`.
pub fn morphism(alphabet: &Alphabet, maxlen: usize, exec: Exec) -> Result<CheckReport> {
    guard(maxlen)?;
    let words = alphabet.words_up_to(maxlen);
    let pairs: Vec<(&Word, &Word)> = words
        .iter()
        .flat_map(|u| words.iter().map(move |v| (u, v)))
        .collect();
    Ok(run("morphism", &pairs, exec, |(u, v)| {
        let uv = NCPoly::word(alphabet, &u.concat(v));
        let lhs = freealg::coproduct(&uv);
        let du = freealg::coproduct(&NCPoly::word(alphabet, u));
        let dv = freealg::coproduct(&NCPoly::word(alphabet, v));
        let rhs = du.mul(&dv).expect("same alphabet");
        (lhs != rhs).then(|| format!("words {u}, {v}: Δ(uv) = {lhs}, Δ(u)Δ(v) = {rhs}"))
    }))
}

/// `Σ w₍₁₎ε(w₍₂₎) = w = Σ ε(w₍₁₎)w₍₂₎` for all `|w| ≤ maxlen`.
pub fn counit_laws(alphabet: &Alphabet, maxlen: usize, exec: Exec) -> Result<CheckReport> {
    guard(maxlen)?;
    let words = alphabet.words_up_to(maxlen);
    Ok(run("counit", &words, exec, |w| {
        let p = NCPoly::word(alphabet, w);
        let d = freealg::coproduct(&p);
        let (r, l) = (
            freealg::counit_contract_right(&d),
            freealg::counit_contract_left(&d),
        );
        (r != p || l != p).then(|| format!("word {w}: right contraction {r}, left contraction {l}"))
    }))
}

/// `Σ S(w₍₁₎)w₍₂₎ = ε(w)·1 = Σ w₍₁₎S(w₍₂₎)`. Domain error when `G ≠ ∅`.
pub fn antipode(alphabet: &Alphabet, maxlen: usize, exec: Exec) -> Result<CheckReport> {
    guard(maxlen)?;
    if !alphabet.all_primitive() {
        return Err(Error::domain("no antipode: group-like letters present"));
    }
    let words = alphabet.words_up_to(maxlen);
    Ok(run("antipode", &words, exec, |w| {
        let p = NCPoly::word(alphabet, w);
        let expect = NCPoly::one(alphabet).scale(&freealg::counit(&p));
        let (l, r) = freealg::antipode_sums(&p).expect("G is empty");
        (l != expect || r != expect)
            .then(|| format!("word {w}: ΣS(w1)w2 = {l}, Σw1S(w2) = {r}, ε(w)1 = {expect}"))
    }))
}

/// `(χ_u∗χ_v)∗χ_w = χ_u∗(χ_v∗χ_w)` for indicator words of length ≤ 2,
/// compared on all targets of length ≤ `maxlen`.
pub fn dual_assoc(alphabet: &Alphabet, maxlen: usize, exec: Exec) -> Result<CheckReport> {
    guard(maxlen)?;
    let small = alphabet.words_up_to(2);
    let targets = alphabet.words_up_to(maxlen);
    let mut triples: Vec<[&Word; 3]> = Vec::with_capacity(small.len().pow(3));
    for u in &small {
        for v in &small {
            for w in &small {
                triples.push([u, v, w]);
            }
        }
    }
    Ok(run("dual-assoc", &triples, exec, |[u, v, w]| {
        let (cu, cv, cw) = (
            Series::indicator(alphabet, u),
            Series::indicator(alphabet, v),
            Series::indicator(alphabet, w),
        );
        let left = cu
            .convolve(&cv)
            .and_then(|x| x.convolve(&cw))
            .expect("same alphabet");
        let right = cv
            .convolve(&cw)
            .and_then(|x| cu.convolve(&x))
            .expect("same alphabet");
        targets
            .iter()
            .find(|t| left.coeff(t) != right.coeff(t))
            .map(|t| {
                format!(
                    "indicators {u}, {v}, {w} at {t}: {} vs {}",
                    left.coeff(t),
                    right.coeff(t)
                )
            })
    }))
}

/// Reference series available over any alphabet: geometric ratios 2 and 3,
/// a counter of the first letter, and two finite-support embeddings.
pub fn reference_reps(alphabet: &Alphabet) -> Vec<(String, LinRep)> {
    let letters = alphabet.letters();
    let first = letters[0].symbol();
    let last = letters[letters.len() - 1].symbol();
    let counting = LinRep::new(
        alphabet,
        vec![Q::from_integer(1.into()), Q::from_integer(0.into())],
        letters.iter().map(|l| {
            let m = if l.symbol() == first {
                Matrix::from_i64(&[&[1, 1], &[0, 1]])
            } else {
                Matrix::identity(2)
            };
            (l.symbol(), m)
        }),
        vec![Q::from_integer(0.into()), Q::from_integer(1.into())],
    )
    .expect("well-formed");
    let pair = NCPoly::word(alphabet, &Word::from_bytes(vec![first as u8, last as u8]));
    let mixed = NCPoly::parse(&format!("2{first} - {last} + 1"), alphabet).expect("valid literal");
    vec![
        (
            "geometric(2)".into(),
            LinRep::geometric(alphabet, Q::from_integer(2.into())),
        ),
        (
            "geometric(3)".into(),
            LinRep::geometric(alphabet, Q::from_integer(3.into())),
        ),
        (format!("count({first})"), counting),
        (format!("chi({pair})"), embed_finite(&pair)),
        (format!("finite({mixed})"), embed_finite(&mixed)),
    ]
}

/// Behavior of the convolution representation equals the splitting sum, for
/// every pair of [`reference_reps`] (each also with itself) and every word of
/// length ≤ `maxlen`.
pub fn conv_oracle(alphabet: &Alphabet, maxlen: usize, exec: Exec) -> Result<CheckReport> {
    guard(maxlen)?;
    let reps = reference_reps(alphabet);
    let words = alphabet.words_up_to(maxlen);
    let mut convs = Vec::new();
    for i in 0..reps.len() {
        for j in i..reps.len() {
            convs.push((i, j, reps[i].1.conv(&reps[j].1)?));
        }
    }
    // Coefficient tables make the splitting sum a sequence of lookups.
    let tables: Vec<HashMap<&Word, Q>> = reps
        .iter()
        .map(|(_, r)| words.iter().map(|w| (w, r.coeff(w))).collect())
        .collect();
    let cases: Vec<(usize, usize)> = (0..convs.len())
        .flat_map(|c| (0..words.len()).map(move |w| (c, w)))
        .collect();
    Ok(run("conv-oracle", &cases, exec, |&(c, wi)| {
        let (i, j, conv) = &convs[c];
        let ((n1, _), (n2, _)) = (&reps[*i], &reps[*j]);
        let (t1, t2) = (&tables[*i], &tables[*j]);
        let w = &words[wi];
        let got = conv.coeff(w);
        let want = convolution_coeff(alphabet, |x| t1[x].clone(), |x| t2[x].clone(), w);
        (got != want).then(|| format!("{n1} * {n2} at {w}: construction {got}, formula {want}"))
    }))
}
