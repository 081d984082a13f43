//! Spinor spaces: direct sum, left-ideal closure, stabilizers vs movers,
//! chirality flips and Weyl kernels.

mod common;

use std::collections::BTreeSet;

use efb_core::automorphisms::{inner, reversion_auto};
use efb_core::oracle::oracle_product;
use efb_core::spinor::{
    chirality, classify_stabilizer, primitive_idempotent, sibling_spinor, solve_weyl, spinor_space,
    stabilizer_subgroup_check, Chirality, ChiralityFactor, SpaceMap,
};
use efb_core::{Algebra, DenseMatrix, EfbIndex, Multivector, Rational, Scalar, Signature};

type Mv = Multivector<Rational>;

fn alg(m: u8) -> Algebra<Rational> {
    Algebra::new(m).unwrap()
}

#[test]
fn spaces_partition_the_basis() {
    for m in 1..=4u8 {
        let mut seen = BTreeSet::new();
        let mut total = 0usize;
        for b in Signature::all(m).unwrap() {
            let space = spinor_space(b);
            assert_eq!(space.dim(), 1 << m);
            total += space.dim();
            for x in space.basis() {
                assert!(seen.insert(*x), "index {x} appears in two spaces");
            }
        }
        assert_eq!(total, 1 << (2 * m));
    }
}

#[test]
fn left_ideal_closure_on_random_samples() {
    let mut rng = common::rng(0x1dea1);
    for m in 1..=4u8 {
        for _ in 0..50 {
            let b = common::random_signature(&mut rng, m);
            let space = spinor_space(b);
            // Random φ ∈ S_b.
            let phi = Mv::from_terms(
                m,
                space
                    .basis()
                    .iter()
                    .map(|x| (*x, common::random_rational(&mut rng))),
            )
            .unwrap();
            let mu = common::random_multivector(&mut rng, m, 1 << m);
            assert!(space.contains(&mu.product(&phi).unwrap()));
        }
    }
}

#[test]
fn basis_elements_are_right_eigenvectors_of_omega() {
    for m in 1..=3u8 {
        let cl = alg(m);
        let omega = cl.omega();
        for x in cl.basis_indices() {
            let basis = Mv::basis(x);
            let right = basis.product(&omega).unwrap();
            let eigen = Rational::from(x.column().epsilon() as i64);
            assert_eq!(right, basis.scaled(&eigen), "Ψ{x} ω");
        }
    }
}

#[test]
fn spinors_are_global_eigenvectors_from_the_right() {
    let mut rng = common::rng(0xe16e);
    for m in 1..=3u8 {
        let cl = alg(m);
        let e = Signature::all_minus(m).unwrap();
        let omega_inv = efb_core::automorphisms::inverse(&cl.omega()).unwrap();
        for _ in 0..20 {
            let phi = Mv::from_terms(
                m,
                spinor_space(e)
                    .basis()
                    .iter()
                    .map(|x| (*x, common::random_rational(&mut rng))),
            )
            .unwrap();
            let moved = phi.product(&omega_inv).unwrap();
            let eigen = Rational::from(e.epsilon() as i64);
            assert_eq!(moved, phi.scaled(&eigen));
        }
    }
}

#[test]
fn movers_and_stabilizers_among_the_distinguished_elements() {
    for m in 1..=3u8 {
        let cl = alg(m);
        let one = classify_stabilizer(&cl.identity()).unwrap();
        assert!(one.space_map.stabilizes_all());
        assert_eq!(one.chirality_factor, ChiralityFactor::Plus);
        let omega = classify_stabilizer(&cl.omega()).unwrap();
        assert!(omega.space_map.stabilizes_all());
        assert_eq!(omega.chirality_factor, ChiralityFactor::Plus);
        for x in [cl.tau(), cl.omega_tau()] {
            let report = classify_stabilizer(&x).unwrap();
            assert!(report.space_map.negates_all());
            let expected = if m % 2 == 1 {
                ChiralityFactor::Minus
            } else {
                ChiralityFactor::Plus
            };
            assert_eq!(report.chirality_factor, expected);
            assert!(report.prop_two_agrees);
        }
    }
}

#[test]
fn single_generators_move_spaces_and_pairs_do_not() {
    for m in 1..=3u8 {
        let cl = alg(m);
        for i in 1..=cl.generator_count() {
            let report = classify_stabilizer(&cl.gamma(i).unwrap()).unwrap();
            // Conjugation by one generator flips the column in slot ⌈i/2⌉.
            assert!(report.space_map.is_fixed_point_free_involution());
            let SpaceMap::Permutation(map) = &report.space_map else {
                panic!("generators keep the spaces aligned");
            };
            let k = i.div_ceil(2);
            for (b, c) in map {
                assert_eq!(*c, b.flipped(k), "γ_{i} on column {b}");
            }
            assert_eq!(report.chirality_factor, ChiralityFactor::Minus);
        }
        for k in 1..=m as usize {
            let pair = cl
                .gamma(2 * k - 1)
                .unwrap()
                .product(&cl.gamma(2 * k).unwrap())
                .unwrap();
            let report = classify_stabilizer(&pair).unwrap();
            assert!(
                report.space_map.stabilizes_all(),
                "γ_{}γ_{}",
                2 * k - 1,
                2 * k
            );
        }
    }
}

#[test]
fn left_right_stabilization_agree_on_random_elements() {
    let mut rng = common::rng(0x2a6ee);
    for m in 1..=3u8 {
        for _ in 0..15 {
            let x = common::random_invertible(&mut rng, m);
            let report = classify_stabilizer(&x).unwrap();
            assert!(report.prop_two_agrees);
        }
    }
}

#[test]
fn stabilizer_sets_are_closed() {
    let mut rng = common::rng(0xc105e);
    for m in 1..=3u8 {
        let cl = alg(m);
        let e = Signature::all_minus(m).unwrap();
        let mut xs = vec![cl.identity(), cl.omega()];
        for k in 1..=m as usize {
            xs.push(
                cl.gamma(2 * k - 1)
                    .unwrap()
                    .product(&cl.gamma(2 * k).unwrap())
                    .unwrap(),
            );
        }
        // A few random products of the above are stabilizers too.
        for _ in 0..3 {
            let i = rand::Rng::gen_range(&mut rng, 0..xs.len());
            let j = rand::Rng::gen_range(&mut rng, 0..xs.len());
            let prod = xs[i].product(&xs[j]).unwrap();
            xs.push(prod);
        }
        assert!(stabilizer_subgroup_check(&xs, e).unwrap());
    }
}

/// The stabilizer subgroup is not normal: a conjugate of a stabilizer can
/// move spaces. Recorded as a witness, not asserted, since sampling decides.
#[test]
fn non_normality_witness_search() {
    let cl = alg(1);
    let e = Signature::all_minus(1).unwrap();
    // x = 𝟙 + q is invertible (unipotent) and stabilizes S_ē.
    let q = cl.witt_q(1).unwrap();
    let x = cl.identity().checked_add(&q).unwrap();
    let report = classify_stabilizer(&x).unwrap();
    let stabilizes_e = match &report.space_map {
        SpaceMap::Permutation(map) => map.get(&e) == Some(&e),
        SpaceMap::NotSpaceAligned => false,
    };
    if stabilizes_e {
        let g = cl.gamma(1).unwrap();
        let conjugated = inner(&g, &x).unwrap();
        let conj_report = classify_stabilizer(&conjugated).unwrap();
        let still = match &conj_report.space_map {
            SpaceMap::Permutation(map) => map.get(&e) == Some(&e),
            SpaceMap::NotSpaceAligned => false,
        };
        if !still {
            println!(
                "non-normality witness: x = {x} stabilizes S_{e}, \
                 but γ_1 x γ_1⁻¹ = {conjugated} does not"
            );
        }
    }
}

#[test]
fn chirality_flip_matches_parity_of_m() {
    for m in 1..=3u8 {
        let cl = alg(m);
        let flip = m % 2 == 1;
        for x in cl.basis_indices() {
            let basis = Mv::basis(x);
            let before = chirality(&basis).sign().unwrap();
            let after = chirality(&reversion_auto(&basis)).sign().unwrap();
            assert_eq!(after == -before, flip, "reversion on Ψ{x} at m={m}");
        }
    }
}

#[test]
fn weyl_kernels_match_an_oracle_built_matrix() {
    let mut rng = common::rng(0x3e71);
    for m in 1..=3u8 {
        let rows: Vec<Signature> = Signature::all(m).unwrap().collect();
        for _ in 0..10 {
            let v = common::random_null_vector(&mut rng, m);
            let b = common::random_signature(&mut rng, m);
            let kernel = solve_weyl(&v, b).unwrap();
            // Independent route: assemble the left-multiplication matrix
            // from oracle products and compare kernel dimensions.
            let side = 1 << m;
            let oracle_matrix = DenseMatrix::from_fn(side, |r, c| {
                let mut acc = Rational::zero();
                for (x, coeff) in v.terms() {
                    let target = EfbIndex::new(rows[c], b).unwrap();
                    let w: Mv = oracle_product(x, &target).unwrap();
                    let at = EfbIndex::new(rows[r], b).unwrap();
                    acc = acc.add(&coeff.mul(&w.coefficient(&at)));
                }
                acc
            });
            let oracle_kernel = oracle_matrix.kernel_basis();
            assert_eq!(kernel.len(), oracle_kernel.len());
            // Every kernel element annihilates under the product.
            for phi in &kernel {
                assert!(v.product(phi).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn single_null_vectors_annihilate_half_of_the_space() {
    let m = 2;
    let cl = alg(m);
    let e = Signature::all_minus(m).unwrap();
    let kernel = solve_weyl(&cl.witt_p(1).unwrap(), e).unwrap();
    assert_eq!(kernel.len(), 1 << (m - 1));
}

/// Kernels of one null vector have the same dimension in every column: the
/// restricted left-multiplication matrices are diagonally conjugate.
#[test]
fn weyl_kernel_dimension_is_column_independent() {
    let mut rng = common::rng(0xd13);
    for m in 1..=3u8 {
        for _ in 0..10 {
            let v = common::random_null_vector(&mut rng, m);
            let dims: Vec<usize> = Signature::all(m)
                .unwrap()
                .map(|b| solve_weyl(&v, b).unwrap().len())
                .collect();
            assert!(dims.windows(2).all(|w| w[0] == w[1]), "dims {dims:?}");
            assert!(dims[0] > 0);
        }
    }
}

/// Coefficient-for-coefficient transport of solutions holds for slotwise
/// annihilation: a single scaled null letter annihilates the same
/// coefficient vectors in every column.
#[test]
fn siblings_inherit_solutions_of_single_letters() {
    let mut rng = common::rng(0x51b);
    for m in 1..=3u8 {
        let cl = alg(m);
        let e = Signature::all_minus(m).unwrap();
        for _ in 0..15 {
            let k = rand::Rng::gen_range(&mut rng, 1..=m as usize);
            let letter = if rand::Rng::gen_bool(&mut rng, 0.5) {
                cl.witt_p(k).unwrap()
            } else {
                cl.witt_q(k).unwrap()
            };
            let v = letter.scaled(&common::random_rational(&mut rng));
            let kernel = solve_weyl(&v, e).unwrap();
            assert_eq!(kernel.len(), 1 << (m - 1));
            let mut phi = Multivector::zero(m).unwrap();
            for basis in &kernel {
                phi = phi
                    .checked_add(&basis.scaled(&common::random_rational(&mut rng)))
                    .unwrap();
            }
            assert!(v.product(&phi).unwrap().is_zero());
            for b in Signature::all(m).unwrap() {
                let sibling = sibling_spinor(&phi, e, b).unwrap();
                assert!(v.product(&sibling).unwrap().is_zero(), "column {b}");
            }
        }
    }
}

/// The common annihilated spinor of a Witt-aligned maximal totally null
/// subspace transports to every column, for every vector of the subspace.
#[test]
fn siblings_inherit_simple_spinor_solutions() {
    let mut rng = common::rng(0x5117);
    for m in 1..=3u8 {
        let cl = alg(m);
        let e = Signature::all_minus(m).unwrap();
        for _ in 0..15 {
            // Random maximal totally null subspace span{x_1..x_m}, x_i one
            // letter per slot; its annihilated spinor in S_ē is Ψ_{a*,ē}
            // with a*_i = −1 where x_i = p_i.
            let choices: Vec<bool> = (0..m).map(|_| rand::Rng::gen_bool(&mut rng, 0.5)).collect();
            let entries: Vec<i8> = choices.iter().map(|&p| if p { -1 } else { 1 }).collect();
            let vacuum_row = Signature::from_entries(&entries).unwrap();
            let phi = Mv::basis(EfbIndex::new(vacuum_row, e).unwrap())
                .scaled(&common::random_rational(&mut rng));
            // Random v in the subspace.
            let mut v = cl.zero();
            for (i, &is_p) in choices.iter().enumerate() {
                let letter = if is_p {
                    cl.witt_p(i + 1).unwrap()
                } else {
                    cl.witt_q(i + 1).unwrap()
                };
                v = v
                    .checked_add(&letter.scaled(&common::random_rational(&mut rng)))
                    .unwrap();
            }
            assert!(v.product(&v).unwrap().is_zero(), "totally null subspace");
            assert!(v.product(&phi).unwrap().is_zero());
            for b in Signature::all(m).unwrap() {
                let sibling = sibling_spinor(&phi, e, b).unwrap();
                assert!(v.product(&sibling).unwrap().is_zero(), "column {b}");
            }
        }
    }
}

#[test]
fn ideals_generated_by_idempotents() {
    for m in 1..=3u8 {
        let cl = alg(m);
        for a in cl.signatures() {
            let idem = primitive_idempotent::<Rational>(a);
            assert_eq!(efb_core::trace(&idem), Rational::from(1));
            // Left multiples of Ψ_aa stay within S_a.
            let space = spinor_space(a);
            for x in cl.basis_indices() {
                let w = Mv::basis(x).product(&idem).unwrap();
                assert!(space.contains(&w));
            }
        }
    }
}

#[test]
fn mixed_chirality_detection() {
    let m = 2;
    let plus = Signature::all_plus(m).unwrap();
    let minus_row = Signature::from_entries(&[-1, 1]).unwrap();
    let pure = Mv::basis(EfbIndex::new(plus, plus).unwrap());
    assert_eq!(chirality(&pure), Chirality::Plus);
    let mixed = pure
        .checked_add(&Mv::basis(EfbIndex::new(minus_row, plus).unwrap()))
        .unwrap();
    assert_eq!(chirality(&mixed), Chirality::Mixed);
}
