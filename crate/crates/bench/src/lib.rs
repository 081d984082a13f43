//! Seeded operand builders shared by the criterion benchmarks.

use efb_core::{Multivector, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense spinor coefficients for `S_b`, nonzero everywhere.
pub fn dense_spinor_coeffs(m: u8, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..1usize << m).map(|_| rng.gen_range(0.5..1.5)).collect()
}

/// A multivector with every basis coefficient populated.
pub fn full_multivector(m: u8, seed: u64) -> Multivector<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Multivector::from_terms(
        m,
        efb_core::basis_indices(m)
            .expect("valid m")
            .map(|x| (x, rng.gen_range(0.5..1.5))),
    )
    .expect("consistent terms")
}

/// The distinguished spinor column `ē`.
pub fn reference_column(m: u8) -> Signature {
    Signature::all_minus(m).expect("valid m")
}
