//! Dense exact matrices over ℚ.
//!
//! Rank is computed by fraction-free (Bareiss) elimination after clearing
//! row denominators; the pivot in each column is the first nonzero row in
//! the current order, so results are reproducible.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::domain("ragged matrix rows"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds from small integers; test and example convenience.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
            .collect();
        Matrix::from_rows(rows).expect("rectangular literal")
    }

    pub fn row_vector(v: Vec<Q>) -> Self {
        Matrix {
            rows: 1,
            cols: v.len(),
            data: v,
        }
    }

    pub fn col_vector(v: Vec<Q>) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Q] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::domain(format!(
                "dimension mismatch: {}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::domain("dimension mismatch in matrix sum"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Kronecker product in row-major order: entry `((i1,i2),(j1,j2))` sits at
    /// `(i1*r2 + i2, j1*c2 + j2)`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r2, c2) = (rhs.rows, rhs.cols);
        let mut out = Matrix::zeros(self.rows * r2, self.cols * c2);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = &self[(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        out[(i1 * r2 + i2, j1 * c2 + j2)] = a * &rhs[(i2, j2)];
                    }
                }
            }
        }
        out
    }

    /// `diag(self, rhs)` with zero off-diagonal blocks.
    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out[(self.rows + i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(rows.len(), cols.len());
        for (oi, i) in rows.clone().enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                out[(oi, oj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| clear_denominators(self.row(i)))
            .collect();
        bareiss_rank(&mut rows, self.cols)
    }

    /// Writes rows as `[["p", "q/r"], ...]`.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(
                        self.row(i)
                            .iter()
                            .map(|x| serde_json::Value::String(fmt_q(x)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::parse(m, v.to_string(), 0);
        let rows = v
            .as_array()
            .ok_or_else(|| bad("matrix must be an array of rows"))?;
        let rows = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad("matrix row must be an array"))?
                    .iter()
                    .map(json_rational)
                    .collect::<Result<Vec<Q>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows).map_err(|_| bad("ragged matrix rows"))
    }
}

/// Accepts `"p/q"` strings and, leniently, JSON integers.
pub(crate) fn json_rational(v: &serde_json::Value) -> Result<Q> {
    match v {
        serde_json::Value::String(s) => {
            parse_q(s).map_err(|_| Error::parse("malformed rational", s.clone(), 0))
        }
        serde_json::Value::Number(n) if n.is_i64() => {
            Ok(Q::from_integer(n.as_i64().unwrap_or(0).into()))
        }
        other => Err(Error::parse(
            "rational must be a string",
            other.to_string(),
            0,
        )),
    }
}

fn clear_denominators(row: &[Q]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Bareiss elimination in place; returns the rank.
fn bareiss_rank(rows: &mut [Vec<BigInt>], cols: usize) -> usize {
    let n = rows.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for r in tail.iter_mut() {
            let factor = r[col].clone();
            for c in col..cols {
                // exact by Sylvester's identity
                r[c] = (&pivot * &r[c] - &factor * &prow[c]) / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Incrementally built row space that can express new rows in terms of the
/// rows inserted so far.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    width: usize,
    // reduced rows with their pivot column and their combination of inserted rows
    reduced: Vec<(usize, Vec<Q>, Vec<Q>)>,
    inserted: usize,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            reduced: Vec::new(),
            inserted: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.inserted
    }

    /// Reduces `row` against the current echelon rows. Returns the residue and
    /// the combination `c` (over inserted rows) such that `row = residue + c·B`.
    fn reduce(&self, row: &[Q]) -> (Vec<Q>, Vec<Q>) {
        assert_eq!(row.len(), self.width, "row width");
        let mut residue = row.to_vec();
        let mut combo = vec![Q::zero(); self.inserted];
        for (pc, r, rc) in &self.reduced {
            if residue[*pc].is_zero() {
                continue;
            }
            let f = residue[*pc].clone() / &r[*pc];
            for (x, y) in residue.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                if !y.is_zero() {
                    *x += &f * y;
                }
            }
        }
        (residue, combo)
    }

    /// Inserts `row` if it is independent of the rows already present.
    pub fn insert(&mut self, row: &[Q]) -> bool {
        let (residue, combo) = self.reduce(row);
        let Some(pc) = residue.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // residue = row - combo·B  ⇒  combination of the new basis row set
        let mut rc: Vec<Q> = combo.into_iter().map(|x| -x).collect();
        rc.push(Q::one());
        for (_, _, c) in self.reduced.iter_mut() {
            c.push(Q::zero());
        }
        self.reduced.push((pc, residue, rc));
        self.inserted += 1;
        true
    }

    /// Coefficients `c` with `row = Σ c_i · B_i`, or `None` if `row` lies
    /// outside the span.
    pub fn express(&self, row: &[Q]) -> Option<Vec<Q>> {
        let (residue, combo) = self.reduce(row);
        residue.iter().all(Zero::is_zero).then_some(combo)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Display for Matrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(fmt_q).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}", self.to_json_value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    // Rank oracle: plain Gauss-Jordan over ℚ with division, independent of
    // the Bareiss path.
    fn naive_rank(m: &Matrix) -> usize {
        let mut a = m.to_rows();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && !a[r][c].is_zero() {
                    let f = a[r][c].clone() / a[rank][c].clone();
                    let pivot = a[rank].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot) {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn kron_row_major() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        assert_eq!(
            k,
            Matrix::from_i64(&[
                &[0, 5, 0, 10],
                &[6, 7, 12, 14],
                &[0, 15, 0, 20],
                &[18, 21, 24, 28],
            ])
        );
    }

    #[test]
    fn kron_mixed_product() {
        let a = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_i64(&[&[2, 0], &[1, 1]]);
        let c = Matrix::from_i64(&[&[1, -1], &[3, 0]]);
        let d = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            Matrix::from_i64(&[&[1, 2, 4], &[2, 4, 8], &[4, 8, 16]]).rank(),
            1
        );
        assert_eq!(Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(0, 0).rank(), 0);
        let m = Matrix::from_rows(vec![
            vec![q_frac(1, 2), q(1), q(0)],
            vec![q(1), q(2), q(0)],
            vec![q(0), q_frac(1, 3), q(1)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_matches_naive_on_pseudorandom_matrices() {
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 5) as i64 - 2
        };
        for shape in [(3, 3), (4, 2), (2, 5), (5, 5), (6, 4)] {
            for _ in 0..30 {
                let rows: Vec<Vec<Q>> = (0..shape.0)
                    .map(|_| {
                        (0..shape.1)
                            .map(|_| q_frac(next(), 1 + next().abs()))
                            .collect()
                    })
                    .collect();
                let m = Matrix::from_rows(rows).unwrap();
                assert_eq!(m.rank(), naive_rank(&m), "{m:?}");
            }
        }
    }

    #[test]
    fn row_space_express() {
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(&[q(1), q(1), q(0)]));
        assert!(rs.insert(&[q(0), q(1), q(1)]));
        assert!(!rs.insert(&[q(1), q(2), q(1)]));
        assert_eq!(rs.dim(), 2);
        let c = rs.express(&[q(2), q(5), q(3)]).unwrap();
        assert_eq!(c, vec![q(2), q(3)]);
        assert!(rs.express(&[q(1), q(0), q(0)]).is_none());
    }

    #[test]
    fn json_round_trip() {
        let m = Matrix::from_rows(vec![vec![q_frac(-1, 2), q(3)]]).unwrap();
        let v = m.to_json_value();
        assert_eq!(v.to_string(), r#"[["-1/2","3"]]"#);
        assert_eq!(Matrix::from_json_value(&v).unwrap(), m);
    }
}
