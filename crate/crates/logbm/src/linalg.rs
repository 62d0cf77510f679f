#![allow(clippy::needless_range_loop)] // index-style elimination loops

//! Exact vectors and small dense rational linear algebra.
//!
//! Dimensions here are desk scale (n ≤ ~6), so plain Gaussian elimination on
//! big rationals is the right tool: no pivot-growth concerns, every result
//! exact.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::LabError;
use crate::rat::{parse_rat, rat_int, render_rat, Rat};

/// A point or direction in ℚⁿ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Rat>);

impl Vector {
    pub fn new(coords: Vec<Rat>) -> Self {
        Vector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rat::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = vec![Rat::zero(); dim];
        v[axis] = Rat::one();
        Vector(v)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| rat_int(c)).collect())
    }

    /// Parses a list of `"p/q"` strings.
    pub fn parse(coords: &[String]) -> Result<Self, LabError> {
        coords
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()
            .map(Vector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rat) -> Vector {
        Vector(self.0.iter().map(|a| a * s).collect())
    }

    /// Primitive integer vector on the same ray: integer coordinates with
    /// content 1, orientation preserved. Zero stays zero.
    pub fn primitive_signed(&self) -> Vector {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = num_bigint::BigInt::one();
        for c in &self.0 {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<num_bigint::BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = num_bigint::BigInt::zero();
        for i in &ints {
            content = num_integer::gcd(content, i.clone());
        }
        let ints: Vec<num_bigint::BigInt> = ints.iter().map(|i| i / &content).collect();
        Vector(ints.into_iter().map(Rat::from_integer).collect())
    }

    /// Canonical primitive representative of the line through `self`:
    /// integer coordinates, content 1, first nonzero coordinate positive.
    /// Maps `v` and `-v` to the same vector. Zero stays zero.
    pub fn canonical_direction(&self) -> Vector {
        let prim = self.primitive_signed();
        if let Some(first) = prim.0.iter().find(|c| !c.is_zero()) {
            if first.is_negative() {
                return prim.neg();
            }
        }
        prim
    }

    /// True when the two vectors span the same line (both nonzero).
    pub fn is_parallel(&self, other: &Vector) -> bool {
        if self.is_zero() || other.is_zero() {
            return false;
        }
        self.canonical_direction() == other.canonical_direction()
    }

    pub fn render(&self) -> Vec<String> {
        self.0.iter().map(render_rat).collect()
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render().join(", "))
    }
}

/// Dense rational matrix, rows-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Rat>>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        if let Some(first) = rows.first() {
            debug_assert!(rows.iter().all(|r| r.len() == first.len()));
        }
        Matrix { rows }
    }

    pub fn from_row_vectors(rows: &[Vector]) -> Self {
        Matrix {
            rows: rows.iter().map(|v| v.coords().to_vec()).collect(),
        }
    }

    pub fn parse(rows: &[Vec<String>]) -> Result<Self, LabError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix { rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Matrix {
        let (m, n) = (self.nrows(), self.ncols());
        let mut rows = vec![vec![Rat::zero(); m]; n];
        for i in 0..m {
            for (j, row) in rows.iter_mut().enumerate() {
                row[i] = self.rows[i][j].clone();
            }
        }
        Matrix { rows }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        Vector(
            self.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(v.coords())
                        .map(|(a, b)| a * b)
                        .fold(Rat::zero(), |acc, x| acc + x)
                })
                .collect(),
        )
    }

    pub fn det(&self) -> Rat {
        debug_assert_eq!(self.nrows(), self.ncols());
        let n = self.nrows();
        let mut a = self.rows.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let sub = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &sub;
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut a = self.rows.clone();
        let (m, n) = (a.len(), self.ncols());
        let mut rank = 0;
        for col in 0..n {
            if rank == m {
                break;
            }
            let pivot = match (rank..m).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            a.swap(pivot, rank);
            let p = a[rank][col].clone();
            for r in rank + 1..m {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let sub = &factor * &a[rank][c];
                    a[r][c] = &a[r][c] - &sub;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solves `A·x = b` for square invertible `A`.
    pub fn solve(&self, b: &Vector) -> Result<Vector, LabError> {
        debug_assert_eq!(self.nrows(), self.ncols());
        debug_assert_eq!(self.nrows(), b.dim());
        let n = self.nrows();
        let mut a = self.rows.clone();
        let mut rhs = b.coords().to_vec();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(LabError::SingularMatrix)?;
            a.swap(pivot, col);
            rhs.swap(pivot, col);
            let p = a[col][col].clone();
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let sub = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &sub;
                }
                let sub = &factor * &rhs[col];
                rhs[r] = &rhs[r] - &sub;
            }
        }
        for (i, x) in rhs.iter_mut().enumerate() {
            *x = &*x / &a[i][i];
        }
        Ok(Vector(rhs))
    }

    /// Basis of the kernel `{x : A·x = 0}` via reduced row echelon form.
    /// Deterministic: free columns are taken in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (m, n) = (self.nrows(), self.ncols());
        let mut a = self.rows.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if row == m {
                break;
            }
            let pivot = match (row..m).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            a.swap(pivot, row);
            let p = a[row][col].clone();
            for c in col..n {
                a[row][c] = &a[row][c] / &p;
            }
            for r in 0..m {
                if r == row || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in col..n {
                    let sub = &factor * &a[row][c];
                    a[r][c] = &a[r][c] - &sub;
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[r][free].clone();
            }
            basis.push(Vector(v));
        }
        basis
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows.iter().map(|r| r.iter().map(render_rat).collect::<Vec<_>>()))
            .finish()
    }
}

/// Greedy affine basis: indices of points forming a maximal affinely
/// independent subset, scanning in input order (deterministic).
pub fn affine_basis_indices(points: &[Vector]) -> Vec<usize> {
    if points.is_empty() {
        return Vec::new();
    }
    let mut chosen = vec![0usize];
    let base = &points[0];
    let mut edges: Vec<Vector> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        let candidate = p.sub(base);
        if candidate.is_zero() {
            continue;
        }
        let mut trial = edges.clone();
        trial.push(candidate);
        if Matrix::from_row_vectors(&trial).rank() == trial.len() {
            edges = trial;
            chosen.push(i);
            if edges.len() == base.dim() {
                break;
            }
        }
    }
    chosen
}
