//! Clifford algebras `Cl(m,m)` of neutral spaces, implemented directly in the
//! extended Fock basis (EFB).
//!
//! Every basis element `Ψ_ab` is a product of null-vector letters and is
//! indexed by a pair of sign vectors: the `h` signature `a` (row) and the
//! `h∘g` signature `b` (column). Products of basis elements follow the
//! matrix-unit pattern `Ψ_ab · Ψ_cd = s(a,b,d) δ_bc Ψ_ad`, which makes the
//! general Clifford product a sparse, signature-indexed convolution and the
//! bridge to the full matrix algebra `F(2^m)` immediate.
//!
//! ```
//! use efb_core::{to_matrix, Algebra, Rational};
//!
//! let cl = Algebra::<Rational>::new(2)?;
//! let g1 = cl.gamma(1)?;
//! let g2 = cl.gamma(2)?;
//!
//! // Distinct generators anticommute, and the bridge to the matrix
//! // algebra F(2^m) is a homomorphism.
//! let anti = g1.product(&g2)?.checked_add(&g2.product(&g1)?)?;
//! assert!(anti.is_zero());
//! let bridged = to_matrix(&g1).mul(&to_matrix(&g2))?;
//! assert_eq!(to_matrix(&g1.product(&g2)?), bridged);
//! # Ok::<(), efb_core::Error>(())
//! ```
//!
//! The crate is organised around that product rule:
//!
//! * [`multivector`] — signatures, basis indices, the sign rule and the
//!   sparse product (with an instrumented scalar-multiplication tally);
//! * [`oracle`] — an independent brute-force word-rewriting engine used to
//!   cross-check the sign rule;
//! * [`generators`] — distinguished elements (`γ_i`, `p_i`, `q_i`, `𝟙`, `ω`,
//!   `τ`), basis conversions and the matrix bridge;
//! * [`automorphisms`] — the fundamental (anti)automorphisms, inversion,
//!   inner conjugation and constructive realization of automorphisms as
//!   inner ones;
//! * [`spinor`] — minimal left ideals, chirality, Weyl kernels and the
//!   classification of inner automorphisms as space stabilizers or movers;
//! * [`text`] — the plain-text multivector grammar used by the CLI;
//! * [`kernels`] — flat-array product kernels used by the benchmark.

pub mod automorphisms;
pub mod counter;
pub mod error;
pub mod generators;
pub mod index;
pub mod kernels;
pub mod matrix;
pub mod multivector;
pub mod oracle;
pub mod scalar;
pub mod signature;
pub mod spinor;
pub mod text;

pub use counter::scalar_mul_count;
pub use error::{Error, Result};
pub use generators::{from_matrix, to_gamma, to_matrix, trace, Algebra, GammaMonomial};
pub use index::{EfbIndex, SlotValue};
pub use matrix::DenseMatrix;
pub use multivector::{efb_basis_product, sign_s, Multivector};
pub use scalar::{Rational, Scalar};
pub use signature::{Signature, MAX_DIMENSION};

/// Lexicographically ordered basis indices `(a, b)` of `Cl(m,m)`, row-major.
pub fn basis_indices(m: u8) -> Result<impl Iterator<Item = EfbIndex>> {
    let rows = Signature::all(m)?;
    Ok(rows.flat_map(move |a| {
        Signature::all(m)
            .expect("validated above")
            .map(move |b| EfbIndex::new(a, b).expect("same m"))
    }))
}
