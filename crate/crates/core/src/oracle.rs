//! Brute-force reduction of words in the null letters `p_i`, `q_i`.
//!
//! This is the correctness oracle for the closed-form sign rule of the fast
//! product: it knows nothing about signatures and works purely from the
//! defining relations
//!
//! ```text
//! p_i² = q_i² = 0,   {p_i, q_j} = δ_ij 𝟙,   x_i y_j = −y_j x_i  (i ≠ j)
//! ```
//!
//! Reduction is a two-branch rewrite: letters are stable-sorted by index
//! (each transposition of distinct-index letters flips the sign), any
//! repeated letter kills the term, and the leftmost same-index run of three
//! or more letters is split via `x y → 𝟙 − y x`. Words whose slots are all
//! settled are expanded over the missing slots, since `𝟙` itself is the sum
//! of the `2^m` diagonal idempotents. Deliberately slow, no memoization.

use crate::error::{Error, Result};
use crate::index::{EfbIndex, SlotValue};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::{validate_m, Signature};

/// Which of the two null letters of a Witt pair.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum LetterKind {
    P,
    Q,
}

/// A single null-vector letter `p_i` or `q_i`.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub struct NullLetter {
    pub kind: LetterKind,
    /// Witt-pair index, 1-based.
    pub index: u8,
}

impl NullLetter {
    pub fn p(index: u8) -> Self {
        NullLetter {
            kind: LetterKind::P,
            index,
        }
    }

    pub fn q(index: u8) -> Self {
        NullLetter {
            kind: LetterKind::Q,
            index,
        }
    }
}

impl std::fmt::Display for NullLetter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let k = match self.kind {
            LetterKind::P => 'p',
            LetterKind::Q => 'q',
        };
        write!(f, "{}{}", k, self.index)
    }
}

/// A scaled, unreduced word of null letters in `Cl(m,m)`.
#[derive(Clone, Debug)]
pub struct NullWord<S: Scalar> {
    m: u8,
    coefficient: S,
    letters: Vec<NullLetter>,
}

impl<S: Scalar> NullWord<S> {
    pub fn new(m: u8, coefficient: S, letters: Vec<NullLetter>) -> Result<Self> {
        validate_m(m)?;
        for l in &letters {
            if l.index == 0 || l.index > m {
                return Err(Error::LetterOutOfRange {
                    index: l.index as usize,
                    m,
                });
            }
        }
        Ok(NullWord {
            m,
            coefficient,
            letters,
        })
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn coefficient(&self) -> &S {
        &self.coefficient
    }

    pub fn letters(&self) -> &[NullLetter] {
        &self.letters
    }
}

/// The canonical letter word of a basis element, slot by slot.
pub fn canonical_letters(x: &EfbIndex) -> Vec<NullLetter> {
    let mut letters = Vec::with_capacity(2 * x.m() as usize);
    for i in 1..=x.m() as usize {
        let idx = i as u8;
        match x.slot(i) {
            SlotValue::QP => {
                letters.push(NullLetter::q(idx));
                letters.push(NullLetter::p(idx));
            }
            SlotValue::PQ => {
                letters.push(NullLetter::p(idx));
                letters.push(NullLetter::q(idx));
            }
            SlotValue::Q => letters.push(NullLetter::q(idx)),
            SlotValue::P => letters.push(NullLetter::p(idx)),
        }
    }
    letters
}

/// Parity of transpositions needed to stable-sort by index; same-index
/// letters keep their relative order and contribute nothing.
fn sort_by_index<S: Scalar>(coefficient: S, letters: &mut [NullLetter]) -> S {
    let mut inversions = 0usize;
    for j in 1..letters.len() {
        for i in 0..j {
            if letters[i].index > letters[j].index {
                inversions += 1;
            }
        }
    }
    letters.sort_by_key(|l| l.index);
    if inversions % 2 == 1 {
        coefficient.neg()
    } else {
        coefficient
    }
}

/// Reduces a word to its expansion over the basis.
///
/// Total: the empty word reduces to the identity, i.e. the sum of all `2^m`
/// diagonal idempotents.
pub fn reduce<S: Scalar>(word: &NullWord<S>) -> Multivector<S> {
    let m = word.m;
    let mut acc = Multivector::zero_unchecked(m);
    let mut work: Vec<(S, Vec<NullLetter>)> =
        vec![(word.coefficient.clone(), word.letters.clone())];

    'terms: while let Some((c, mut letters)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        let c = sort_by_index(c, &mut letters);

        // Locate same-index runs; a repeated letter kills the term and the
        // leftmost run of length >= 3 gets split.
        let mut split_at = None;
        let mut run_start = 0;
        for pos in 0..=letters.len() {
            let run_ended = pos == letters.len()
                || (pos > run_start && letters[pos].index != letters[run_start].index);
            if pos > run_start && !run_ended && letters[pos].kind == letters[pos - 1].kind {
                continue 'terms; // x_i x_i = 0
            }
            if run_ended {
                if pos - run_start >= 3 && split_at.is_none() {
                    split_at = Some(run_start);
                }
                run_start = pos;
            }
        }

        if let Some(s) = split_at {
            // x y = 𝟙 − y x on the first two letters of the run.
            let mut dropped = letters.clone();
            dropped.drain(s..=s + 1);
            let mut swapped = letters;
            swapped.swap(s, s + 1);
            work.push((c.clone(), dropped));
            work.push((c.neg(), swapped));
            continue;
        }

        // Every slot is settled; expand the missing slots over {q_i p_i, p_i q_i}.
        let mut h_bits = 0u32;
        let mut hg_bits = 0u32;
        let mut missing: Vec<usize> = Vec::new();
        let mut pos = 0;
        for i in 1..=m as usize {
            let start = pos;
            while pos < letters.len() && letters[pos].index as usize == i {
                pos += 1;
            }
            let bit = 1u32 << (m as usize - i);
            match pos - start {
                0 => missing.push(i),
                1 => {
                    // Odd slot: h from the letter, h∘g opposite.
                    if letters[start].kind == LetterKind::P {
                        h_bits |= bit;
                    } else {
                        hg_bits |= bit;
                    }
                }
                _ => {
                    // Even slot: h from the first letter, h∘g equal.
                    if letters[start].kind == LetterKind::P {
                        h_bits |= bit;
                        hg_bits |= bit;
                    }
                }
            }
        }
        for choice in 0u32..1 << missing.len() {
            let mut a = h_bits;
            let mut b = hg_bits;
            for (k, &i) in missing.iter().enumerate() {
                if choice >> k & 1 == 1 {
                    // p_i q_i: h_i = −1, even.
                    let bit = 1u32 << (m as usize - i);
                    a |= bit;
                    b |= bit;
                }
            }
            let x = EfbIndex::new(
                Signature::from_bits(m, a).expect("bits in range"),
                Signature::from_bits(m, b).expect("bits in range"),
            )
            .expect("same m");
            acc.insert_add(x, c.clone());
        }
    }
    acc
}

/// Decodes both indices to canonical words, concatenates and reduces.
///
/// The result is either zero or exactly one basis term with coefficient `±1`.
pub fn oracle_product<S: Scalar>(x: &EfbIndex, y: &EfbIndex) -> Result<Multivector<S>> {
    if x.m() != y.m() {
        return Err(Error::DimensionMismatch(x.m(), y.m()));
    }
    let mut letters = canonical_letters(x);
    letters.extend(canonical_letters(y));
    let word = NullWord::new(x.m(), S::one(), letters)?;
    Ok(reduce(&word))
}
