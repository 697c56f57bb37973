//! Shared fixtures for the criterion benches.

use artau_core::exactlin::{Rat, RatMatrix};
use artau_core::qsl2::BlockFamily;
use artau_core::serial::SerialFamily;

/// A deterministic dense rational matrix with mildly awkward entries.
pub fn dense_matrix(rows: usize, cols: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(rows, cols);
    let mut state: i64 = 17;
    for r in 0..rows {
        for c in 0..cols {
            state = (state.wrapping_mul(31).wrapping_add(7)) % 97;
            m.set(r, c, Rat::new(state - 48, 1 + ((state as u64 % 5) as i64)));
        }
    }
    m
}

pub fn serial_fixture() -> SerialFamily {
    SerialFamily::new(4, -14, 8).expect("window is large enough")
}

pub fn block_fixture() -> BlockFamily {
    BlockFamily::new(10, 1).expect("window is large enough")
}
