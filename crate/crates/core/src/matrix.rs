//! Integer matrices with exact linear algebra: fraction-free determinants,
//! rank, gcd of maximal minors, and integer linear-equation solving.

use itertools::Itertools;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Int;

/// A dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::OutOfRange(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::OutOfRange("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<Int>>) -> Result<Self> {
        let cols = columns.len();
        if columns.iter().any(|col| col.len() != rows) {
            return Err(Error::OutOfRange("ragged columns".into()));
        }
        let mut data = vec![Int::zero(); rows * cols];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                data[i * cols + j] = v;
            }
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Exact determinant of a square matrix by Bareiss fraction-free
    /// elimination; intermediate entries stay integral.
    pub fn determinant(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::OutOfRange("determinant of non-square matrix".into()));
        }
        if self.rows == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(bareiss_determinant(self.row_vecs()))
    }

    /// Rank over the rationals, computed by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.row_vecs();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..self.rows {
                if a[r][col].is_zero() {
                    continue;
                }
                // cross-multiplication keeps entries integral
                let (head, tail) = a.split_at_mut(r);
                let pivot_row = &head[rank];
                let row = &mut tail[0];
                let f = row[col].clone();
                let p = pivot_row[col].clone();
                for c in col..self.cols {
                    row[c] = &row[c] * &p - &pivot_row[c] * &f;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

fn bareiss_determinant(mut a: Vec<Vec<Int>>) -> Int {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Int::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by the Bareiss identity
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    if sign < 0 {
        -a[n - 1][n - 1].clone()
    } else {
        a[n - 1][n - 1].clone()
    }
}

/// Gcd of the absolute values of all nonzero `d x d` minors of a matrix with
/// full column rank `d`. This equals the index of the column lattice inside
/// the saturation of its span.
///
/// Duplicate rows are removed first; a minor using two equal rows vanishes,
/// so the multiset of nonzero minors is unchanged. The remaining enumeration
/// visits all `C(rows, d)` row choices, so keep `d` small (here `d <= m - 1`
/// for desk-scale cycle counts).
pub fn maximal_minor_gcd(m: &IntMatrix) -> Result<Int> {
    if m.rows == 0 || m.cols == 0 {
        return Err(Error::EmptyMatrix);
    }
    let d = m.cols;
    let mut rows: Vec<Vec<Int>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for r in 0..m.rows {
        let row = m.row(r).to_vec();
        if seen.insert(row.clone()) {
            rows.push(row);
        }
    }
    if rows.len() < d {
        return Err(Error::RankDeficient);
    }
    let mut gcd = Int::zero();
    for choice in (0..rows.len()).combinations(d) {
        let sub: Vec<Vec<Int>> = choice.iter().map(|&r| rows[r].clone()).collect();
        let det = bareiss_determinant(sub);
        if det.is_zero() {
            continue;
        }
        gcd = gcd.gcd(&det);
        if gcd.is_one() {
            return Ok(gcd);
        }
    }
    if gcd.is_zero() {
        return Err(Error::RankDeficient);
    }
    Ok(gcd)
}

/// Solutions of `sum_k coeffs[k] * c[k] = target` over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineSolution {
    /// One solution, present iff `gcd(coeffs)` divides `target`.
    pub particular: Option<Vec<Int>>,
    /// Basis of the lattice `{c : sum coeffs[k] * c[k] = 0}`; always
    /// `len - 1` vectors generating the full (saturated) kernel lattice.
    pub basis: Vec<Vec<Int>>,
    /// `gcd(coeffs)`.
    pub gcd: Int,
}

/// Extended-gcd elimination for one linear equation with positive integer
/// coefficients. The homogeneous basis produced is primitive: the gcd of the
/// maximal minors of its matrix is 1.
pub fn solve_linear_diophantine(coeffs: &[Int], target: &Int) -> Result<DiophantineSolution> {
    if coeffs.is_empty() {
        return Err(Error::Empty("coefficient vector"));
    }
    if coeffs.iter().any(|c| !c.is_positive()) {
        return Err(Error::OutOfRange("coefficients must be positive".into()));
    }
    let m = coeffs.len();
    let mut g = coeffs[0].clone();
    // bezout holds sum_k coeffs[k] * bezout[k] = g at every step
    let mut bezout = vec![Int::zero(); m];
    bezout[0] = Int::one();
    let mut basis = Vec::with_capacity(m - 1);
    for k in 1..m {
        let eg = g.extended_gcd(&coeffs[k]);
        let lk_over_g = &coeffs[k] / &eg.gcd;
        let g_over_g = &g / &eg.gcd;
        let mut h: Vec<Int> = bezout.iter().map(|b| b * &lk_over_g).collect();
        h[k] = -g_over_g;
        basis.push(h);
        for b in bezout.iter_mut() {
            *b *= &eg.x;
        }
        bezout[k] = eg.y;
        g = eg.gcd;
    }
    let particular = if (target % &g).is_zero() {
        let q = target / &g;
        Some(bezout.iter().map(|b| b * &q).collect())
    } else {
        None
    };
    Ok(DiophantineSolution {
        particular,
        basis,
        gcd: g,
    })
}

pub fn solve_linear_diophantine_usize(coeffs: &[usize], target: &Int) -> Result<DiophantineSolution> {
    let coeffs: Vec<Int> = coeffs.iter().map(|&c| Int::from(c)).collect();
    solve_linear_diophantine(&coeffs, target)
}
