//! The closed-form product sign against the word-rewriting oracle.

mod common;

use efb_core::oracle::{oracle_product, reduce, LetterKind, NullLetter, NullWord};
use efb_core::{basis_indices, efb_basis_product, Multivector, Rational, Scalar};
use proptest::prelude::*;
use rand::Rng;

/// The two routes must agree exactly: same vanishing, same index, same sign.
fn check_pair(x: &efb_core::EfbIndex, y: &efb_core::EfbIndex) {
    let fast = efb_basis_product(x, y).unwrap();
    let slow: Multivector<Rational> = oracle_product(x, y).unwrap();
    // Structural property of the oracle output: at most one term, coefficient ±1.
    assert!(slow.num_terms() <= 1, "{x} * {y}");
    match fast {
        None => assert!(slow.is_zero(), "{x} * {y} should vanish"),
        Some((index, sign)) => {
            assert_eq!(slow.num_terms(), 1, "{x} * {y}");
            let coeff = slow.coefficient(&index);
            assert_eq!(coeff, Rational::from(sign as i64), "{x} * {y}");
        }
    }
}

#[test]
fn exhaustive_agreement_m_up_to_3() {
    for m in 1..=3u8 {
        for x in basis_indices(m).unwrap() {
            for y in basis_indices(m).unwrap() {
                check_pair(&x, &y);
            }
        }
    }
}

#[test]
fn sampled_agreement_m_4_to_6() {
    let mut rng = common::rng(0x0b5e55ed);
    for m in 4..=6u8 {
        for _ in 0..2_000 {
            let x = common::random_index(&mut rng, m);
            let y = common::random_index(&mut rng, m);
            check_pair(&x, &y);
        }
        // Force matching inner signatures so the sign itself is exercised.
        for _ in 0..2_000 {
            let x = common::random_index(&mut rng, m);
            let d = common::random_signature(&mut rng, m);
            let y = efb_core::EfbIndex::new(x.column(), d).unwrap();
            check_pair(&x, &y);
        }
    }
}

#[test]
fn full_products_agree_with_termwise_oracle() {
    let mut rng = common::rng(0xfee1600d);
    for m in 1..=3u8 {
        for _ in 0..50 {
            let u = common::random_multivector(&mut rng, m, 6);
            let v = common::random_multivector(&mut rng, m, 6);
            let fast = u.product(&v).unwrap();
            let mut slow = Multivector::zero(m).unwrap();
            for (x, xc) in u.terms() {
                for (y, yc) in v.terms() {
                    let w: Multivector<Rational> = oracle_product(x, y).unwrap();
                    slow = slow.checked_add(&w.scaled(&xc.mul(yc))).unwrap();
                }
            }
            assert_eq!(fast, slow);
        }
    }
}

#[test]
fn oracle_output_shape_on_random_indices() {
    let mut rng = common::rng(0x5a5a);
    for _ in 0..500 {
        let m = rng.gen_range(1..=4u8);
        let x = common::random_index(&mut rng, m);
        let y = common::random_index(&mut rng, m);
        let w: Multivector<Rational> = oracle_product(&x, &y).unwrap();
        assert!(w.num_terms() <= 1);
        if let Some((_, c)) = w.terms().next() {
            assert_eq!(c.abs(), Rational::from(1));
        };
    }
}

fn letter_strategy(m: u8) -> impl Strategy<Value = NullLetter> {
    (1..=m, prop::bool::ANY).prop_map(|(i, q)| {
        if q {
            NullLetter::q(i)
        } else {
            NullLetter::p(i)
        }
    })
}

fn word_strategy(m: u8) -> impl Strategy<Value = Vec<NullLetter>> {
    prop::collection::vec(letter_strategy(m), 0..=12)
}

fn reduce_letters(m: u8, coefficient: Rational, letters: Vec<NullLetter>) -> Multivector<Rational> {
    reduce(&NullWord::new(m, coefficient, letters).unwrap())
}

proptest! {
    /// Applying any single rewrite relation before reducing cannot change
    /// the result (confluence spot-check).
    #[test]
    fn reduce_is_invariant_under_one_rewrite(
        letters in word_strategy(3),
        at in 0usize..12,
    ) {
        let m = 3u8;
        let one = Rational::from(1);
        let direct = reduce_letters(m, one.clone(), letters.clone());
        if letters.len() < 2 {
            return Ok(());
        }
        let at = at % (letters.len() - 1);
        let (x, y) = (letters[at], letters[at + 1]);
        let rewritten = if x.index != y.index {
            // Distinct indices anticommute.
            let mut swapped = letters.clone();
            swapped.swap(at, at + 1);
            reduce_letters(m, one.neg(), swapped)
        } else if x.kind == y.kind {
            // A square: the whole word vanishes.
            Multivector::zero(m).unwrap()
        } else {
            // {p_i, q_i} = 1: x y = 𝟙 − y x.
            let mut dropped = letters.clone();
            dropped.drain(at..=at + 1);
            let mut swapped = letters.clone();
            swapped.swap(at, at + 1);
            reduce_letters(m, one.clone(), dropped)
                .checked_add(&reduce_letters(m, one.neg(), swapped))
                .unwrap()
        };
        prop_assert_eq!(direct, rewritten);
    }

    /// Concatenation reduces to the product of the reductions.
    #[test]
    fn reduce_respects_concatenation(
        left in word_strategy(3),
        right in word_strategy(3),
    ) {
        let m = 3u8;
        let one = Rational::from(1);
        let mut combined = left.clone();
        combined.extend(right.iter().copied());
        let direct = reduce_letters(m, one.clone(), combined);
        let split = reduce_letters(m, one.clone(), left)
            .product(&reduce_letters(m, one, right))
            .unwrap();
        prop_assert_eq!(direct, split);
    }
}

#[test]
fn alternating_single_pair_words_collapse() {
    // q p q = q, and words ending in a square vanish.
    let q = NullLetter::q(1);
    let p = NullLetter::p(1);
    let w: Multivector<Rational> = reduce_letters(1, Rational::from(1), vec![q, p, q]);
    assert_eq!(w.num_terms(), 1);
    let z = reduce_letters(1, Rational::from(1), vec![p, p]);
    assert!(z.is_zero());
    assert_eq!(q.kind, LetterKind::Q);
}
