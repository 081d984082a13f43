//! The fundamental automorphisms, the reversal antiautomorphism, dual
//! transposition, inversion and inner conjugation.
//!
//! On basis elements the four fundamental maps act by signature bookkeeping:
//!
//! * main:        `Ψ_ab ↦ ε(a)ε(b) Ψ_ab` (inner by `ω`),
//! * reversion:   `Ψ_ab ↦ Ψ_{−a,−b}` (inner by `τ`),
//! * conjugation: `Ψ_ab ↦ ε(a)ε(b) Ψ_{−a,−b}` (inner by `ωτ`),
//!
//! and together with the identity they compose as the Klein four-group. The
//! antiautomorphism `β` and the dual both need the reversal sign `s'(a,b)`,
//! which is obtained from the word oracle by reversing the canonical word.

use crate::error::{Error, Result};
use crate::generators::{gamma_square_sign, table_sign_unchecked, to_matrix, Algebra};
use crate::index::EfbIndex;
use crate::multivector::Multivector;
use crate::oracle::{canonical_letters, reduce, NullWord};
use crate::scalar::{Rational, Scalar};

/// The main automorphism `α(v) = −v` on vectors; `Ψ_ab ↦ ε(a)ε(b) Ψ_ab`.
pub fn main_auto<S: Scalar>(v: &Multivector<S>) -> Multivector<S> {
    v.map_terms(|x, c| (*x, if x.parity() < 0 { c.neg() } else { c.clone() }))
}

/// The reversion automorphism (reversal transposed to the dual space):
/// `Ψ_ab ↦ Ψ_{−a,−b}`, always a different spinor space.
pub fn reversion_auto<S: Scalar>(v: &Multivector<S>) -> Multivector<S> {
    v.map_terms(|x, c| {
        (
            EfbIndex::new(x.row().negated(), x.column().negated()).expect("same m"),
            c.clone(),
        )
    })
}

/// The conjugation automorphism, the composition of the other two:
/// `Ψ_ab ↦ ε(a)ε(b) Ψ_{−a,−b}`; on vectors `γ_i ↦ −γ_i⁻¹`.
pub fn conjugation_auto<S: Scalar>(v: &Multivector<S>) -> Multivector<S> {
    v.map_terms(|x, c| {
        (
            EfbIndex::new(x.row().negated(), x.column().negated()).expect("same m"),
            if x.parity() < 0 { c.neg() } else { c.clone() },
        )
    })
}

/// The reversal sign `s'(a,b)` with `β(Ψ_ab) = s'(a,b) Ψ_{−b,−a}`, computed
/// by reversing the canonical word and reducing it through the oracle.
/// Symmetric under swapping and negating both arguments.
pub fn s_prime(x: &EfbIndex) -> i8 {
    let mut letters = canonical_letters(x);
    letters.reverse();
    let word = NullWord::<Rational>::new(x.m(), Rational::from(1), letters)
        .expect("canonical letters are in range");
    let reduced = reduce(&word);
    let target = EfbIndex::new(x.column().negated(), x.row().negated()).expect("same m");
    let mut terms = reduced.terms();
    let (index, coefficient) = terms
        .next()
        .expect("reversal of a basis word reduces to one term");
    debug_assert!(terms.next().is_none());
    debug_assert_eq!(*index, target);
    coefficient.signum()
}

/// The reversal antiautomorphism `β`: fixes vectors, reverses products,
/// `Ψ_ab ↦ s'(a,b) Ψ_{−b,−a}`.
pub fn beta_anti<S: Scalar>(v: &Multivector<S>) -> Multivector<S> {
    v.map_terms(|x, c| {
        let y = EfbIndex::new(x.column().negated(), x.row().negated()).expect("same m");
        let c = if s_prime(x) < 0 { c.neg() } else { c.clone() };
        (y, c)
    })
}

/// The dual element `Ψ_ab ↦ s'(a,b) Ψ_ba`; under the matrix bridge this is
/// exactly matrix transposition, and composed with `β` it gives reversion.
pub fn dual_transpose<S: Scalar>(v: &Multivector<S>) -> Multivector<S> {
    v.map_terms(|x, c| {
        let y = EfbIndex::new(x.column(), x.row()).expect("same m");
        let c = if s_prime(x) < 0 { c.neg() } else { c.clone() };
        (y, c)
    })
}

/// Exact inverse through the matrix bridge; `Err(NotInvertible)` is the
/// membership test for the group of invertible elements.
pub fn inverse<S: Scalar>(x: &Multivector<S>) -> Result<Multivector<S>> {
    let inv = to_matrix(x).invert()?;
    crate::generators::from_matrix(&inv)
}

/// Inner conjugation `v ↦ x v x⁻¹`, an algebra automorphism for fixed
/// invertible `x`.
pub fn inner<S: Scalar>(x: &Multivector<S>, v: &Multivector<S>) -> Result<Multivector<S>> {
    let xi = inverse(x)?;
    x.product(v)?.product(&xi)
}

/// Constructively realizes the automorphism `γ_i ↦ images[i]` as inner.
///
/// Requires the images to satisfy the generator relations
/// `{images[i], images[j]} = 2 δ_ij (−1)^{i+1} 𝟙` (the universal property
/// then extends them to an automorphism). The conjugator is found by the
/// averaging sum `X = Σ_A α(γ_A) T γ_A⁻¹` over all `2^{2m}` monomials; a
/// nonzero `X` intertwines the two actions and is invertible because both
/// are irreducible, so `T` is scanned over the matrix units in row-major
/// order until `X` is invertible. The output is scaled so its first nonzero
/// coefficient (lexicographic index order) is one, the unique representative
/// of the projective class.
pub fn realize_inner<S: Scalar>(images: &[Multivector<S>]) -> Result<Multivector<S>> {
    let Some(first) = images.first() else {
        return Err(Error::WrongImageCount {
            expected: 2,
            got: 0,
        });
    };
    let m = first.m();
    let alg = Algebra::<S>::new(m).expect("valid by construction");
    let n = alg.generator_count();
    if images.len() != n {
        return Err(Error::WrongImageCount {
            expected: n,
            got: images.len(),
        });
    }
    for im in images {
        if im.m() != m {
            return Err(Error::DimensionMismatch(m, im.m()));
        }
    }
    let one = alg.identity();
    for i in 0..n {
        for j in i..n {
            let anti = images[i]
                .product(&images[j])?
                .checked_add(&images[j].product(&images[i])?)?;
            let expected = if i == j {
                let sq: i64 = if (i + 1) % 2 == 1 { 2 } else { -2 };
                one.scaled(&S::from_int(sq))
            } else {
                alg.zero()
            };
            if anti != expected {
                return Err(Error::InvalidAutomorphism);
            }
        }
    }

    // Monomial tables: γ_A, its inverse, and the image α(γ_A).
    let size = alg.basis_size();
    let mut monomials: Vec<Multivector<S>> = Vec::with_capacity(size);
    let mut mapped: Vec<Multivector<S>> = Vec::with_capacity(size);
    monomials.push(one.clone());
    mapped.push(one.clone());
    for mask in 1u32..size as u32 {
        let low = mask & mask.wrapping_neg();
        let i = low.trailing_zeros() as usize + 1;
        let rest = (mask ^ low) as usize;
        monomials.push(alg.gamma(i)?.product(&monomials[rest])?);
        mapped.push(images[i - 1].product(&mapped[rest])?);
    }
    let inverses: Vec<Multivector<S>> = monomials
        .iter()
        .enumerate()
        .map(|(mask, g)| {
            if gamma_square_sign(mask as u32) < 0 {
                g.negated()
            } else {
                g.clone()
            }
        })
        .collect();

    for seed in alg.basis_indices() {
        let t = table_sign_unchecked(&seed.row(), &seed.column());
        let unit = Multivector::term(seed, if t < 0 { S::one().neg() } else { S::one() });
        let mut x = alg.zero();
        for mask in 0..size {
            let summand = mapped[mask].product(&unit)?.product(&inverses[mask])?;
            x = x.checked_add(&summand)?;
        }
        if x.is_zero() {
            continue;
        }
        if to_matrix(&x).invert().is_err() {
            continue;
        }
        let (_, leading) = x.terms().next().expect("nonzero");
        let scale = S::one().div(leading).expect("leading coefficient nonzero");
        return Ok(x.scaled(&scale));
    }
    Err(Error::Internal(
        "no matrix-unit seed produced an invertible intertwiner for valid images".into(),
    ))
}
