//! Bernoulli numbers.
//!
//! Topologist's convention throughout: `bernoulli(n)` is `|B_{2n}|` in the
//! analyst's even-index numbering, so every value is positive:
//! `B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, B_4 = 1/30, ...`. This is the form in
//! which the Hirzebruch series and the Kervaire-Milnor order of `bP_{4n}` are
//! usually written.

use alloc::vec::Vec;

use crate::rational::Rational;

/// Topologist's Bernoulli number `B_n = |B_{2n}|`. Panics if `n == 0`.
pub fn bernoulli(n: u32) -> Rational {
    assert!(n >= 1, "topologist's Bernoulli numbers start at n = 1");
    analyst_bernoulli(2 * n as usize).abs()
}

/// Signed even-index Bernoulli number `B_{2n}` in the analyst's convention,
/// i.e. `(-1)^(n+1) * bernoulli(n)`.
pub fn bernoulli_even_signed(n: u32) -> Rational {
    let b = bernoulli(n);
    if n.is_multiple_of(2) {
        -b
    } else {
        b
    }
}

// Akiyama-Tanigawa; yields B_1 = +1/2, irrelevant for even indices.
fn analyst_bernoulli(m: usize) -> Rational {
    let mut row: Vec<Rational> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        row.push(Rational::new(1, j as u64 + 1));
        for i in (1..=j).rev() {
            let diff = &row[i - 1] - &row[i];
            row[i - 1] = diff * Rational::from(i as u64);
        }
    }
    row.swap_remove(0)
}
