//! Distinguished elements, basis conversions and the matrix bridge.
//!
//! The orthonormal generators satisfy `γ_{2i−1}² = 1`, `γ_{2i}² = −1`; the
//! null (Witt) basis is `p_i = (γ_{2i−1} + γ_{2i})/2`, `q_i = (γ_{2i−1} −
//! γ_{2i})/2`. All constructors expand directly over the basis. The matrix
//! bridge places coefficients at `(row a, column b)` after folding in the
//! embedding sign `t(a,b) = s(+,…,+; a; b)`, which trivializes the product
//! cocycle and therefore makes `to_matrix` an algebra isomorphism; the same
//! sign is what the printed basis table carries.

use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::index::EfbIndex;
use crate::matrix::DenseMatrix;
use crate::multivector::{sign_s_unchecked, Multivector};
use crate::scalar::Scalar;
use crate::signature::{validate_m, Signature};

/// A scaled product of generators `γ_{i1} ⋯ γ_{ik}` with strictly ascending
/// indices encoded as a bitmask (bit `i−1` set iff `γ_i` is a factor). The
/// empty mask is a scalar multiple of the identity.
#[derive(Clone, PartialEq, Debug)]
pub struct GammaMonomial<S: Scalar> {
    pub mask: u32,
    pub coefficient: S,
}

impl<S: Scalar> GammaMonomial<S> {
    pub fn new(mask: u32, coefficient: S) -> Self {
        GammaMonomial { mask, coefficient }
    }

    /// Ascending generator indices (1-based).
    pub fn generators(&self) -> Vec<usize> {
        (0..32)
            .filter(|k| self.mask >> k & 1 == 1)
            .map(|k| k + 1)
            .collect()
    }

    pub fn grade(&self) -> u32 {
        self.mask.count_ones()
    }
}

/// Sign of `(γ_{i1} ⋯ γ_{ik})²`: reversing the factors costs
/// `(−1)^{k(k−1)/2}` and each even-indexed generator squares to `−1`.
pub fn gamma_square_sign(mask: u32) -> i8 {
    let k = mask.count_ones();
    let swaps = k * k.saturating_sub(1) / 2;
    let minus_squares = (mask & 0xAAAA_AAAA).count_ones();
    if (swaps + minus_squares).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn sign_scalar<S: Scalar>(sign: i8) -> S {
    if sign < 0 {
        S::one().neg()
    } else {
        S::one()
    }
}

/// The embedding sign `t(a,b)` folded into matrix entries and the printed
/// basis table: `to_matrix` sends the canonical word of `Ψ_ab` to
/// `t(a,b) E_ab`.
pub fn table_sign(a: &Signature, b: &Signature) -> Result<i8> {
    if a.m() != b.m() {
        return Err(Error::DimensionMismatch(a.m(), b.m()));
    }
    Ok(table_sign_unchecked(a, b))
}

pub(crate) fn table_sign_unchecked(a: &Signature, b: &Signature) -> i8 {
    let all_plus = Signature::all_plus(a.m()).expect("m valid by construction");
    sign_s_unchecked(&all_plus, a, b)
}

/// Factory for the distinguished elements of one algebra `Cl(m,m)`.
#[derive(Copy, Clone, Debug)]
pub struct Algebra<S: Scalar> {
    m: u8,
    _scalar: PhantomData<S>,
}

impl<S: Scalar> Algebra<S> {
    pub fn new(m: u8) -> Result<Self> {
        validate_m(m)?;
        Ok(Algebra {
            m,
            _scalar: PhantomData,
        })
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    /// Dimension of the generating vector space, `n = 2m`.
    pub fn generator_count(&self) -> usize {
        2 * self.m as usize
    }

    /// Number of basis elements, `2^{2m}`.
    pub fn basis_size(&self) -> usize {
        1usize << (2 * self.m)
    }

    /// Side of the isomorphic matrix algebra, `2^m`.
    pub fn matrix_side(&self) -> usize {
        1usize << self.m
    }

    pub fn signatures(&self) -> impl Iterator<Item = Signature> {
        Signature::all(self.m).expect("m valid by construction")
    }

    pub fn basis_indices(&self) -> impl Iterator<Item = EfbIndex> {
        crate::basis_indices(self.m).expect("m valid by construction")
    }

    pub fn zero(&self) -> Multivector<S> {
        Multivector::zero_unchecked(self.m)
    }

    /// The unit `𝟙 = Π_i {q_i, p_i}`: the sum of all `2^m` diagonal
    /// idempotents.
    pub fn identity(&self) -> Multivector<S> {
        Multivector::from_terms(
            self.m,
            self.signatures().map(|a| (EfbIndex::diagonal(a), S::one())),
        )
        .expect("consistent terms")
    }

    /// The volume element `ω = γ_1 ⋯ γ_{2m} = Π_i [q_i, p_i]`, diagonal with
    /// entries `ε(a)`.
    pub fn omega(&self) -> Multivector<S> {
        Multivector::from_terms(
            self.m,
            self.signatures()
                .map(|a| (EfbIndex::diagonal(a), sign_scalar::<S>(a.epsilon()))),
        )
        .expect("consistent terms")
    }

    /// `τ = Π_i (p_i + s q_i)` with `s = (−1)^{m+1}`; conjugation by `τ`
    /// realizes the reversion automorphism.
    pub fn tau(&self) -> Multivector<S> {
        let s: i8 = if self.m % 2 == 1 { 1 } else { -1 };
        self.antidiagonal(s, 1)
    }

    /// `ωτ = (−1)^m Π_i (p_i − s q_i)`; conjugation by it realizes the
    /// conjugation automorphism.
    pub fn omega_tau(&self) -> Multivector<S> {
        let s: i8 = if self.m % 2 == 1 { 1 } else { -1 };
        let global = if self.m % 2 == 1 { -1 } else { 1 };
        self.antidiagonal(-s, global)
    }

    /// `Π_i (p_i + s q_i)` scaled by `global`: all slots odd, so the terms
    /// sit at `(a, −a)` with coefficient `s^{#plus entries of a}`.
    fn antidiagonal(&self, s: i8, global: i8) -> Multivector<S> {
        Multivector::from_terms(
            self.m,
            self.signatures().map(|a| {
                let plus_entries = self.m as u32 - a.bits().count_ones();
                let q_sign = if s == 1 || plus_entries.is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                (
                    EfbIndex::new(a, a.negated()).expect("same m"),
                    sign_scalar::<S>(q_sign * global),
                )
            }),
        )
        .expect("consistent terms")
    }

    /// The generator `γ_i = (p_k + (−1)^{i+1} q_k) Π_{j≠k} {p_j, q_j}` with
    /// `k = ⌈i/2⌉`: a sum of exactly `2^m` basis terms filling every row and
    /// every column once.
    pub fn gamma(&self, i: usize) -> Result<Multivector<S>> {
        let n = self.generator_count();
        if i == 0 || i > n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let k = i.div_ceil(2);
        let q_sign: i8 = if i % 2 == 1 { 1 } else { -1 };
        let mut out = self.zero();
        let slot_bit = 1u32 << (self.m as usize - k);
        for even_choice in 0u32..1 << (self.m - 1) {
            // Spread the (m−1)-bit choice over the slots other than k:
            // chosen bit set means that slot takes p_j q_j.
            let mut even_bits = 0u32;
            let mut src = 0;
            for j in 1..=self.m as usize {
                if j == k {
                    continue;
                }
                if even_choice >> src & 1 == 1 {
                    even_bits |= 1 << (self.m as usize - j);
                }
                src += 1;
            }
            // Slot k = p_k: row bit set, column bit clear.
            out.insert_add(
                EfbIndex::new(
                    Signature::from_bits(self.m, even_bits | slot_bit).expect("in range"),
                    Signature::from_bits(self.m, even_bits).expect("in range"),
                )
                .expect("same m"),
                S::one(),
            );
            // Slot k = q_k, weighted by (−1)^{i+1}.
            out.insert_add(
                EfbIndex::new(
                    Signature::from_bits(self.m, even_bits).expect("in range"),
                    Signature::from_bits(self.m, even_bits | slot_bit).expect("in range"),
                )
                .expect("same m"),
                sign_scalar::<S>(q_sign),
            );
        }
        Ok(out)
    }

    /// The null vector `p_i = (γ_{2i−1} + γ_{2i})/2`, expanded directly.
    pub fn witt_p(&self, i: usize) -> Result<Multivector<S>> {
        self.witt(i, true)
    }

    /// The null vector `q_i = (γ_{2i−1} − γ_{2i})/2`, expanded directly.
    pub fn witt_q(&self, i: usize) -> Result<Multivector<S>> {
        self.witt(i, false)
    }

    fn witt(&self, i: usize, is_p: bool) -> Result<Multivector<S>> {
        if i == 0 || i > self.m as usize {
            return Err(Error::LetterOutOfRange {
                index: i,
                m: self.m,
            });
        }
        let slot_bit = 1u32 << (self.m as usize - i);
        let mut out = self.zero();
        for even_choice in 0u32..1 << (self.m - 1) {
            let mut even_bits = 0u32;
            let mut src = 0;
            for j in 1..=self.m as usize {
                if j == i {
                    continue;
                }
                if even_choice >> src & 1 == 1 {
                    even_bits |= 1 << (self.m as usize - j);
                }
                src += 1;
            }
            let (row, col) = if is_p {
                (even_bits | slot_bit, even_bits)
            } else {
                (even_bits, even_bits | slot_bit)
            };
            out.insert_add(
                EfbIndex::new(
                    Signature::from_bits(self.m, row).expect("in range"),
                    Signature::from_bits(self.m, col).expect("in range"),
                )
                .expect("same m"),
                S::one(),
            );
        }
        Ok(out)
    }

    /// The product `γ_{i1} ⋯ γ_{ik}` for the ascending indices in `mask`.
    pub fn gamma_monomial(&self, mask: u32) -> Result<Multivector<S>> {
        let n = self.generator_count();
        if mask >> n != 0 {
            return Err(Error::MalformedMask { mask, n });
        }
        let mut out = self.identity();
        for i in 1..=n {
            if mask >> (i - 1) & 1 == 1 {
                out = out.product(&self.gamma(i)?).expect("same m");
            }
        }
        Ok(out)
    }

    /// Evaluates a γ-monomial combination in the basis.
    pub fn from_gamma(&self, monomials: &[GammaMonomial<S>]) -> Result<Multivector<S>> {
        let mut out = self.zero();
        for mono in monomials {
            let term = self.gamma_monomial(mono.mask)?.scaled(&mono.coefficient);
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }
}

/// Places `ξ_ab` at row `a`, column `b` with the embedding sign folded in;
/// an algebra isomorphism onto `F(2^m)`.
pub fn to_matrix<S: Scalar>(v: &Multivector<S>) -> DenseMatrix<S> {
    let mut out = DenseMatrix::zero(1usize << v.m());
    for (x, c) in v.terms() {
        let signed = if table_sign_unchecked(&x.row(), &x.column()) < 0 {
            c.neg()
        } else {
            c.clone()
        };
        out.set(x.row().index(), x.column().index(), signed);
    }
    out
}

/// Inverse of [`to_matrix`]; the side must be `2^m` for some `m ≤ 16`.
pub fn from_matrix<S: Scalar>(mat: &DenseMatrix<S>) -> Result<Multivector<S>> {
    let side = mat.side();
    if side < 2 || !side.is_power_of_two() || side.trailing_zeros() > 16 {
        return Err(Error::BadMatrixSide(side));
    }
    let m = side.trailing_zeros() as u8;
    let mut out = Multivector::zero(m)?;
    for a in Signature::all(m)? {
        for b in Signature::all(m)? {
            let entry = mat.get(a.index(), b.index());
            if entry.is_zero() {
                continue;
            }
            let c = if table_sign_unchecked(&a, &b) < 0 {
                entry.neg()
            } else {
                entry.clone()
            };
            out.insert_add(EfbIndex::new(a, b).expect("same m"), c);
        }
    }
    Ok(out)
}

/// Matrix trace, computable directly as the sum of diagonal coefficients.
pub fn trace<S: Scalar>(v: &Multivector<S>) -> S {
    let mut acc = S::zero();
    for (x, c) in v.terms() {
        if x.is_diagonal() {
            acc = acc.add(c);
        }
    }
    acc
}

/// Expands over the `2^{2m}` γ-monomials via the trace form
/// `coeff_A = trace(γ_A⁻¹ v) / 2^m`; returns only the nonzero monomials,
/// ordered by grade then mask.
pub fn to_gamma<S: Scalar>(v: &Multivector<S>) -> Vec<GammaMonomial<S>> {
    let alg = Algebra::<S>::new(v.m()).expect("valid by construction");
    let n = alg.generator_count();
    // Monomial table, each built from its parent by one product.
    let mut table: Vec<Multivector<S>> = Vec::with_capacity(1 << n);
    table.push(alg.identity());
    for mask in 1u32..1 << n {
        let low = mask & mask.wrapping_neg();
        let i = low.trailing_zeros() as usize + 1;
        let rest = table[(mask ^ low) as usize].clone();
        let gamma = alg.gamma(i).expect("index in range");
        table.push(gamma.product(&rest).expect("same m"));
    }
    let denom = S::from_int(1i64 << alg.m());
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&mask| (mask.count_ones(), mask));
    let mut out = Vec::new();
    for mask in masks {
        let product = table[mask as usize].product(v).expect("same m");
        let mut coeff = trace(&product).div(&denom).expect("2^m is nonzero");
        if gamma_square_sign(mask) < 0 {
            coeff = coeff.neg();
        }
        if !coeff.is_zero() {
            out.push(GammaMonomial::new(mask, coeff));
        }
    }
    out
}
