//! Flat-array product kernels for the benchmark.
//!
//! A spinor in the column subspace `S_b` is a dense vector of `2^m`
//! coefficients indexed by the row signature. Left multiplication by a
//! vector `γ_i` — whose expansion fills every row and every column exactly
//! once — touches each coefficient once, so the basis product costs exactly
//! `2^m` scalar multiplications, against `2^{2m}` for the dense
//! matrix-times-vector route. Both paths tally their multiplications on the
//! shared counter.

use crate::counter;
use crate::error::{Error, Result};
use crate::generators::table_sign_unchecked;
use crate::index::EfbIndex;
use crate::multivector::{sign_s_unchecked, Multivector};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// Left multiplication by a column-sparse element (one term per column),
/// restricted to a fixed spinor column and precompiled to per-column
/// `(row, signed coefficient)` pairs.
#[derive(Clone, Debug)]
pub struct ColumnAction<S: Scalar> {
    m: u8,
    entries: Vec<(usize, S)>,
}

impl<S: Scalar> ColumnAction<S> {
    /// Compiles `v` for products with spinors in `S_{spinor_column}`.
    /// Requires exactly one term of `v` in every column.
    pub fn new(v: &Multivector<S>, spinor_column: Signature) -> Result<Self> {
        if v.m() != spinor_column.m() {
            return Err(Error::DimensionMismatch(v.m(), spinor_column.m()));
        }
        let side = 1usize << v.m();
        let mut entries: Vec<Option<(usize, S)>> = vec![None; side];
        for (x, c) in v.terms() {
            let col = x.column().index();
            if entries[col].is_some() {
                return Err(Error::NotColumnSparse);
            }
            let mut signed = c.clone();
            if sign_s_unchecked(&x.row(), &x.column(), &spinor_column) < 0 {
                signed = signed.neg();
            }
            entries[col] = Some((x.row().index(), signed));
        }
        let entries = entries
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotColumnSparse)?;
        Ok(ColumnAction { m: v.m(), entries })
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    /// Applies to the coefficient vector of a spinor; exactly `2^m` scalar
    /// multiplications, tallied on the shared counter.
    pub fn apply_into(&self, phi: &[S], out: &mut [S]) {
        let side = self.entries.len();
        assert_eq!(phi.len(), side, "spinor length");
        assert_eq!(out.len(), side, "output length");
        out.fill(S::zero());
        for (col, (row, coeff)) in self.entries.iter().enumerate() {
            let contribution = coeff.mul(&phi[col]);
            out[*row] = out[*row].add(&contribution);
        }
        counter::add_scalar_muls(side as u64);
    }

    pub fn apply(&self, phi: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.entries.len()];
        self.apply_into(phi, &mut out);
        out
    }
}

/// Extracts the dense coefficient vector (indexed by row) of a spinor lying
/// in `S_b`.
pub fn spinor_coefficients<S: Scalar>(phi: &Multivector<S>, b: Signature) -> Result<Vec<S>> {
    if phi.m() != b.m() {
        return Err(Error::DimensionMismatch(phi.m(), b.m()));
    }
    let mut out = vec![S::zero(); 1usize << b.m()];
    for (x, c) in phi.terms() {
        if x.column() != b {
            return Err(Error::NotInSpinorSpace);
        }
        out[x.row().index()] = c.clone();
    }
    Ok(out)
}

/// Rebuilds the spinor `Σ_a coeffs[a] Ψ_ab` from its coefficient vector.
pub fn spinor_from_coefficients<S: Scalar>(b: Signature, coeffs: &[S]) -> Result<Multivector<S>> {
    let side = 1usize << b.m();
    if coeffs.len() != side {
        return Err(Error::MatrixSizeMismatch(coeffs.len(), side));
    }
    Multivector::from_terms(
        b.m(),
        Signature::all(b.m())?.map(|a| {
            (
                EfbIndex::new(a, b).expect("same m"),
                coeffs[a.index()].clone(),
            )
        }),
    )
}

/// Converts basis coefficients to matrix coordinates (folds the embedding
/// sign per row) so the dense path operates on the honest matrix image.
/// Involutive, since the signs square to one.
pub fn to_matrix_coordinates<S: Scalar>(coeffs: &[S], b: Signature) -> Vec<S> {
    coeffs
        .iter()
        .enumerate()
        .map(|(row, c)| {
            let a = Signature::from_index(b.m(), row).expect("in range");
            if table_sign_unchecked(&a, &b) < 0 {
                c.neg()
            } else {
                c.clone()
            }
        })
        .collect()
}
