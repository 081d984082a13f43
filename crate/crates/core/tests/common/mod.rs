//! Shared generators for randomized tests. Everything is seeded so runs are
//! reproducible.

#![allow(dead_code)]

use efb_core::{Algebra, EfbIndex, Multivector, Rational, Scalar, Signature};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n != 0 {
            break n;
        }
    };
    let den: i64 = rng.gen_range(1..=4);
    Rational::new(num, den).unwrap()
}

pub fn random_signature(rng: &mut ChaCha8Rng, m: u8) -> Signature {
    Signature::from_bits(m, rng.gen_range(0..1u32 << m)).unwrap()
}

pub fn random_index(rng: &mut ChaCha8Rng, m: u8) -> EfbIndex {
    EfbIndex::new(random_signature(rng, m), random_signature(rng, m)).unwrap()
}

/// Sparse random element with up to `max_terms` nonzero coefficients.
pub fn random_multivector(rng: &mut ChaCha8Rng, m: u8, max_terms: usize) -> Multivector<Rational> {
    let k = rng.gen_range(1..=max_terms);
    Multivector::from_terms(
        m,
        (0..k).map(|_| (random_index(rng, m), random_rational(rng))),
    )
    .unwrap()
}

/// Random invertible element, built by perturbing until inversion succeeds.
pub fn random_invertible(rng: &mut ChaCha8Rng, m: u8) -> Multivector<Rational> {
    loop {
        let x = random_multivector(rng, m, 2 * (1 << m));
        if efb_core::automorphisms::inverse(&x).is_ok() {
            return x;
        }
    }
}

/// Random scaled γ-monomial: invertible by construction.
pub fn random_monomial(rng: &mut ChaCha8Rng, m: u8) -> Multivector<Rational> {
    let alg = Algebra::<Rational>::new(m).unwrap();
    let mask = rng.gen_range(0..1u32 << (2 * m));
    alg.gamma_monomial(mask)
        .unwrap()
        .scaled(&random_rational(rng))
}

/// Random nonzero null vector of grade one: `v = Σ α_i p_i + β_i q_i` with
/// `Σ α_i β_i = 0`, which forces `v² = 0`.
pub fn random_null_vector(rng: &mut ChaCha8Rng, m: u8) -> Multivector<Rational> {
    let alg = Algebra::<Rational>::new(m).unwrap();
    loop {
        let alphas: Vec<Rational> = (0..m).map(|_| random_rational(rng)).collect();
        let mut betas: Vec<Rational> = (0..m as usize - 1).map(|_| random_rational(rng)).collect();
        // Choose the last β so the pairing Σ α_i β_i cancels.
        let partial = alphas
            .iter()
            .zip(&betas)
            .fold(Rational::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
        let last = partial.neg().div(alphas.last().unwrap()).unwrap();
        betas.push(last);
        let mut v = alg.zero();
        for i in 1..=m as usize {
            v = v
                .checked_add(&alg.witt_p(i).unwrap().scaled(&alphas[i - 1]))
                .unwrap();
            v = v
                .checked_add(&alg.witt_q(i).unwrap().scaled(&betas[i - 1]))
                .unwrap();
        }
        if !v.is_zero() {
            assert!(v.product(&v).unwrap().is_zero(), "null vector squares to 0");
            return v;
        }
    }
}

/// A random valid set of generator images: signed permutation preserving
/// the squares (odd indices among themselves, even among themselves).
pub fn random_signed_permutation_images(rng: &mut ChaCha8Rng, m: u8) -> Vec<Multivector<Rational>> {
    let alg = Algebra::<Rational>::new(m).unwrap();
    let mut odds: Vec<usize> = (0..m as usize).map(|k| 2 * k + 1).collect();
    let mut evens: Vec<usize> = (0..m as usize).map(|k| 2 * k + 2).collect();
    odds.shuffle(rng);
    evens.shuffle(rng);
    (1..=2 * m as usize)
        .map(|i| {
            let target = if i % 2 == 1 {
                odds[(i - 1) / 2]
            } else {
                evens[i / 2 - 1]
            };
            let g = alg.gamma(target).unwrap();
            if rng.gen_bool(0.5) {
                g.negated()
            } else {
                g
            }
        })
        .collect()
}
