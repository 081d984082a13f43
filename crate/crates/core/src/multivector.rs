//! Sparse multivectors and the signature-indexed Clifford product.
//!
//! The basis product follows the matrix-unit pattern
//! `Ψ_ab · Ψ_cd = s(a,b,d) δ_bc Ψ_ad`. The sign `s` is computed here in
//! closed form and is cross-checked exhaustively against the word-rewriting
//! oracle in the test suite: writing both factors as canonical letter words,
//! every within-slot reduction carries `+1`, so the sign is exactly the
//! parity of letter transpositions between distinct slots. Odd slots of the
//! first factor are flagged by `a⊕b`, odd slots of the second by `b⊕d`, and
//! a transposition happens for every odd slot of the second factor that must
//! cross a later odd slot of the first.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::counter;
use crate::error::{Error, Result};
use crate::index::EfbIndex;
use crate::scalar::Scalar;
use crate::signature::{validate_m, Signature};

pub(crate) fn sign_s_unchecked(a: &Signature, b: &Signature, d: &Signature) -> i8 {
    let u = a.bits() ^ b.bits(); // odd slots of Ψ_ab
    let mut v = b.bits() ^ d.bits(); // odd slots of Ψ_bd
                                     // Entry 1 is the most significant bit, so "slot i before slot j" means
                                     // "bit position above". Count pairs (odd slot of v) < (odd slot of u).
    let mut crossings = 0u32;
    while v != 0 {
        let low = v & v.wrapping_neg();
        crossings += (u & (low - 1)).count_ones();
        v ^= low;
    }
    if crossings.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The sign `s(a,b,d)` with `Ψ_ab · Ψ_bd = s(a,b,d) Ψ_ad`.
pub fn sign_s(a: &Signature, b: &Signature, d: &Signature) -> Result<i8> {
    if a.m() != b.m() {
        return Err(Error::DimensionMismatch(a.m(), b.m()));
    }
    if b.m() != d.m() {
        return Err(Error::DimensionMismatch(b.m(), d.m()));
    }
    Ok(sign_s_unchecked(a, b, d))
}

/// Product of two basis elements: `None` when the inner signatures differ
/// (the `δ_bc = 0` case), otherwise the resulting index and sign.
pub fn efb_basis_product(x: &EfbIndex, y: &EfbIndex) -> Result<Option<(EfbIndex, i8)>> {
    if x.m() != y.m() {
        return Err(Error::DimensionMismatch(x.m(), y.m()));
    }
    if x.column() != y.row() {
        return Ok(None);
    }
    let sign = sign_s_unchecked(&x.row(), &x.column(), &y.column());
    Ok(Some((
        EfbIndex::new(x.row(), y.column()).expect("same m"),
        sign,
    )))
}

/// A general algebra element `μ = Σ ξ_ab Ψ_ab` as a sparse map from basis
/// indices to coefficients. Zero coefficients are never stored, so equality
/// is term-by-term coefficient equality.
#[derive(Clone, PartialEq)]
pub struct Multivector<S: Scalar> {
    m: u8,
    terms: BTreeMap<EfbIndex, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(m: u8) -> Result<Self> {
        validate_m(m)?;
        Ok(Multivector {
            m,
            terms: BTreeMap::new(),
        })
    }

    pub(crate) fn zero_unchecked(m: u8) -> Self {
        Multivector {
            m,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `Ψ_x` with coefficient one.
    pub fn basis(x: EfbIndex) -> Self {
        Self::term(x, S::one())
    }

    /// A single scaled basis element (zero if the coefficient is zero).
    pub fn term(x: EfbIndex, coefficient: S) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(x, coefficient);
        }
        Multivector { m: x.m(), terms }
    }

    /// Builds from `(index, coefficient)` pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(m: u8, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (EfbIndex, S)>,
    {
        let mut out = Multivector::zero(m)?;
        for (x, c) in terms {
            if x.m() != m {
                return Err(Error::DimensionMismatch(m, x.m()));
            }
            out.insert_add(x, c);
        }
        Ok(out)
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic index order.
    pub fn terms(&self) -> impl Iterator<Item = (&EfbIndex, &S)> {
        self.terms.iter()
    }

    pub fn get(&self, x: &EfbIndex) -> Option<&S> {
        self.terms.get(x)
    }

    /// The coefficient of `Ψ_x` (zero when absent).
    pub fn coefficient(&self, x: &EfbIndex) -> S {
        self.terms.get(x).cloned().unwrap_or_else(S::zero)
    }

    pub(crate) fn insert_add(&mut self, x: EfbIndex, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.m != rhs.m {
            return Err(Error::DimensionMismatch(self.m, rhs.m));
        }
        let mut out = self.clone();
        for (x, c) in rhs.terms() {
            out.insert_add(*x, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.negated())
    }

    pub fn negated(&self) -> Self {
        Multivector {
            m: self.m,
            terms: self.terms.iter().map(|(x, c)| (*x, c.neg())).collect(),
        }
    }

    /// Scales every coefficient; the zero scale yields the zero element.
    pub fn scaled(&self, factor: &S) -> Self {
        if factor.is_zero() {
            return Multivector::zero_unchecked(self.m);
        }
        Multivector {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (*x, c.mul(factor)))
                .collect(),
        }
    }

    /// The Clifford product `ρ_ad = Σ_b s(a,b,d) ξ_ab ζ_bd`.
    ///
    /// Every scalar multiplication performed is added to the process-wide
    /// tally ([`crate::scalar_mul_count`]).
    pub fn product(&self, rhs: &Self) -> Result<Self> {
        if self.m != rhs.m {
            return Err(Error::DimensionMismatch(self.m, rhs.m));
        }
        // Group the right factor by row so each left term only meets the
        // terms it can pair with.
        let mut by_row: BTreeMap<Signature, Vec<(&EfbIndex, &S)>> = BTreeMap::new();
        for (y, c) in rhs.terms() {
            by_row.entry(y.row()).or_default().push((y, c));
        }
        let mut out = Multivector::zero_unchecked(self.m);
        let mut muls = 0u64;
        for (x, xc) in self.terms() {
            let Some(matching) = by_row.get(&x.column()) else {
                continue;
            };
            for (y, yc) in matching {
                let sign = sign_s_unchecked(&x.row(), &x.column(), &y.column());
                let mut c = xc.mul(yc);
                muls += 1;
                if sign < 0 {
                    c = c.neg();
                }
                out.insert_add(EfbIndex::new(x.row(), y.column()).expect("same m"), c);
            }
        }
        counter::add_scalar_muls(muls);
        Ok(out)
    }

    /// Termwise comparison under [`Scalar::approx_eq`]; exact fields compare
    /// exactly, floats at the relative tolerance.
    pub fn approx_eq(&self, rhs: &Self) -> bool {
        if self.m != rhs.m {
            return false;
        }
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(rhs.terms.keys()).collect();
        keys.into_iter()
            .all(|x| self.coefficient(x).approx_eq(&rhs.coefficient(x)))
    }

    /// Rebuilds the element by mapping every term, re-accumulating the
    /// results (used by the basis-defined automorphisms).
    pub(crate) fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&EfbIndex, &S) -> (EfbIndex, S),
    {
        let mut out = Multivector::zero_unchecked(self.m);
        for (x, c) in self.terms() {
            let (y, d) = f(x, c);
            debug_assert_eq!(y.m(), self.m);
            out.insert_add(y, d);
        }
        out
    }
}

impl<S: Scalar> std::fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Multivector[m={}; {}]",
            self.m,
            crate::text::render_efb(self)
        )
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;

    fn add(self, rhs: Self) -> Multivector<S> {
        self.checked_add(rhs).expect("dimension mismatch in +")
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: Self) -> Multivector<S> {
        self.checked_sub(rhs).expect("dimension mismatch in -")
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;

    fn mul(self, rhs: Self) -> Multivector<S> {
        self.product(rhs).expect("dimension mismatch in *")
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        self.negated()
    }
}
