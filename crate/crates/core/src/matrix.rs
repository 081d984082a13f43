//! Dense square matrices over the coefficient field.
//!
//! This is the image of the algebra under the basis isomorphism to
//! `F(2^m)`: side `2^m`, rows and columns indexed by signatures under the
//! binary encoding. Multiplication is instrumented (every scalar multiply is
//! tallied, with no sparsity shortcuts) so the benchmark can compare it
//! against the sparse product at the operation-count level. Elimination uses
//! exact field arithmetic with first-nonzero pivoting.

use crate::counter;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct DenseMatrix<S: Scalar> {
    side: usize,
    entries: Vec<S>,
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn zero(side: usize) -> Self {
        DenseMatrix {
            side,
            entries: vec![S::zero(); side * side],
        }
    }

    pub fn identity(side: usize) -> Self {
        let mut out = Self::zero(side);
        for i in 0..side {
            out.set(i, i, S::one());
        }
        out
    }

    pub fn from_fn<F>(side: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> S,
    {
        let mut entries = Vec::with_capacity(side * side);
        for r in 0..side {
            for c in 0..side {
                entries.push(f(r, c));
            }
        }
        DenseMatrix { side, entries }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.side + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.entries[r * self.side + c] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.side, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    /// Matrix product; performs and tallies exactly `side³` scalar
    /// multiplications.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.side != rhs.side {
            return Err(Error::MatrixSizeMismatch(self.side, rhs.side));
        }
        let n = self.side;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = S::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(r, k).mul(rhs.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        counter::add_scalar_muls((n * n * n) as u64);
        Ok(out)
    }

    /// Matrix–vector product into a caller-provided buffer; performs and
    /// tallies exactly `side²` scalar multiplications.
    pub fn mul_vec_into(&self, v: &[S], out: &mut [S]) -> Result<()> {
        if v.len() != self.side || out.len() != self.side {
            return Err(Error::MatrixSizeMismatch(self.side, v.len()));
        }
        for (r, slot) in out.iter_mut().enumerate() {
            let mut acc = S::zero();
            let row = &self.entries[r * self.side..(r + 1) * self.side];
            for (a, x) in row.iter().zip(v) {
                acc = acc.add(&a.mul(x));
            }
            *slot = acc;
        }
        counter::add_scalar_muls((self.side * self.side) as u64);
        Ok(())
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        let mut out = vec![S::zero(); self.side];
        self.mul_vec_into(v, &mut out)?;
        Ok(out)
    }

    /// Exact inverse by Gauss–Jordan elimination on the augmented matrix.
    pub fn invert(&self) -> Result<Self> {
        let n = self.side;
        let mut rows: Vec<Vec<S>> = (0..n)
            .map(|r| {
                let mut row: Vec<S> = (0..n).map(|c| self.get(r, c).clone()).collect();
                row.extend((0..n).map(|c| if c == r { S::one() } else { S::zero() }));
                row
            })
            .collect();
        let pivots = rref_rows(&mut rows);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::NotInvertible);
        }
        Ok(Self::from_fn(n, |r, c| rows[r][n + c].clone()))
    }

    /// Canonical basis of the null space `{x : Ax = 0}`: reduced echelon
    /// form, leading coefficient one, pivots in index order.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let n = self.side;
        let mut rows: Vec<Vec<S>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let pivots = rref_rows(&mut rows);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut kernel: Vec<Vec<S>> = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![S::zero(); n];
            x[f] = S::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = rows[r][f].neg();
            }
            kernel.push(x);
        }
        rref_rows(&mut kernel);
        kernel.retain(|row| row.iter().any(|c| !c.is_zero()));
        kernel
    }
}

/// In-place reduced row echelon form over the field; returns the pivot
/// columns in order. Rows may be rectangular but must share a length.
pub(crate) fn rref_rows<S: Scalar>(rows: &mut [Vec<S>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(src) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, src);
        let inv = S::one()
            .div(&rows[r][col])
            .expect("pivot is nonzero by construction");
        for entry in rows[r][col..].iter_mut() {
            *entry = entry.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry = entry.sub(&factor.mul(p));
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}
