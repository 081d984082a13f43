//! Basis indices `(a, b)` of the extended Fock basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::signature::Signature;

/// One tensor slot of an EFB element: the value taken by `ψ_i`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SlotValue {
    /// `q_i p_i` — even, `h_i = +1`.
    QP,
    /// `p_i q_i` — even, `h_i = −1`.
    PQ,
    /// `q_i` — odd, `h_i = +1`.
    Q,
    /// `p_i` — odd, `h_i = −1`.
    P,
}

impl SlotValue {
    pub fn from_signs(h: i8, hg: i8) -> Self {
        match (h, hg) {
            (1, 1) => SlotValue::QP,
            (-1, -1) => SlotValue::PQ,
            (1, -1) => SlotValue::Q,
            _ => SlotValue::P,
        }
    }

    /// Parity under the main automorphism: `false` for the even slots.
    pub fn is_odd(&self) -> bool {
        matches!(self, SlotValue::Q | SlotValue::P)
    }
}

/// Index of the EFB element `Ψ_ab`: `a` is the `h` signature (matrix row),
/// `b` the `h∘g` signature (matrix column). The `g` signature is recoverable
/// as the entrywise product `a∘b`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EfbIndex {
    a: Signature,
    b: Signature,
}

impl EfbIndex {
    pub fn new(a: Signature, b: Signature) -> Result<Self> {
        if a.m() != b.m() {
            return Err(Error::DimensionMismatch(a.m(), b.m()));
        }
        Ok(EfbIndex { a, b })
    }

    /// The diagonal element `Ψ_aa` (a primitive idempotent).
    pub fn diagonal(a: Signature) -> Self {
        EfbIndex { a, b: a }
    }

    pub fn m(&self) -> u8 {
        self.a.m()
    }

    /// Row: the `h` signature.
    pub fn row(&self) -> Signature {
        self.a
    }

    /// Column: the `h∘g` signature, labelling the spinor space.
    pub fn column(&self) -> Signature {
        self.b
    }

    pub fn h_signature(&self) -> Signature {
        self.a
    }

    pub fn hg_signature(&self) -> Signature {
        self.b
    }

    pub fn g_signature(&self) -> Signature {
        self.a.hadamard(&self.b).expect("same m by construction")
    }

    pub fn is_diagonal(&self) -> bool {
        self.a == self.b
    }

    /// Chirality `λ = ε(a)`: the left eigenvalue under the volume element.
    pub fn chirality(&self) -> i8 {
        self.a.epsilon()
    }

    /// Global parity `ε(a)ε(b)` under the main automorphism.
    pub fn parity(&self) -> i8 {
        self.a.epsilon() * self.b.epsilon()
    }

    /// The value of slot `i` (1-based).
    pub fn slot(&self, i: usize) -> SlotValue {
        SlotValue::from_signs(
            self.a.entry(i),
            self.a.entry(i) * self.g_signature().entry(i),
        )
    }
}

impl fmt::Display for EfbIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Debug for EfbIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EfbIndex{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(entries: &[i8]) -> Signature {
        Signature::from_entries(entries).unwrap()
    }

    #[test]
    fn signature_roles() {
        // qp in Cl(1,1): h = (+), g = (+).
        let qp = EfbIndex::new(sig(&[1]), sig(&[1])).unwrap();
        assert_eq!(qp.h_signature(), sig(&[1]));
        assert_eq!(qp.g_signature(), sig(&[1]));
        // p: h = (−), g = (−), column +.
        let p = EfbIndex::new(sig(&[-1]), sig(&[1])).unwrap();
        assert_eq!(p.h_signature(), sig(&[-1]));
        assert_eq!(p.g_signature(), sig(&[-1]));
        // Diagonal indices always have the all-plus g signature.
        for m in 1..=4u8 {
            for a in Signature::all(m).unwrap() {
                assert!(EfbIndex::diagonal(a).g_signature().is_all_plus());
            }
        }
    }

    #[test]
    fn chirality_and_parity() {
        let x = EfbIndex::new(sig(&[1, 1]), sig(&[1, 1])).unwrap();
        assert_eq!(x.chirality(), 1);
        assert_eq!(x.parity(), 1);
        let y = EfbIndex::new(sig(&[-1, 1]), sig(&[1, 1])).unwrap();
        assert_eq!(y.chirality(), -1);
        assert_eq!(y.parity(), -1);
        for m in 1..=5u8 {
            let e = Signature::all_minus(m).unwrap();
            // Ψ_{−ē,−ē} has chirality ε of the all-plus vector.
            assert_eq!(EfbIndex::diagonal(e.negated()).chirality(), 1);
        }
    }

    #[test]
    fn slot_decoding() {
        // Ψ with h=(+,−), h∘g=(−,+): slot 1 is q (odd), slot 2 is p (odd).
        let x = EfbIndex::new(sig(&[1, -1]), sig(&[-1, 1])).unwrap();
        assert_eq!(x.slot(1), SlotValue::Q);
        assert_eq!(x.slot(2), SlotValue::P);
        let d = EfbIndex::new(sig(&[1, -1]), sig(&[1, -1])).unwrap();
        assert_eq!(d.slot(1), SlotValue::QP);
        assert_eq!(d.slot(2), SlotValue::PQ);
    }

    #[test]
    fn mismatched_dimensions_rejected() {
        let a = Signature::all_plus(2).unwrap();
        let b = Signature::all_plus(3).unwrap();
        assert!(matches!(
            EfbIndex::new(a, b),
            Err(Error::DimensionMismatch(2, 3))
        ));
    }
}
