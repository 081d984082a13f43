//! Per-thread tally of scalar multiplications.
//!
//! Incremented by the instrumented product paths (sparse multivector
//! products, dense matrix products and the flat benchmark kernels). The
//! tally is thread-local, so it is monotone non-decreasing and exact on the
//! thread performing the work; callers measure an operation by diffing two
//! snapshots around it.

use std::cell::Cell;

thread_local! {
    static SCALAR_MULS: Cell<u64> = const { Cell::new(0) };
}

/// Snapshot of the number of scalar multiplications performed by the
/// current thread so far.
pub fn scalar_mul_count() -> u64 {
    SCALAR_MULS.with(Cell::get)
}

pub(crate) fn add_scalar_muls(n: u64) {
    if n > 0 {
        SCALAR_MULS.with(|c| c.set(c.get() + n));
    }
}
