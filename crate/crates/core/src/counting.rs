//! Closed-form sequences and cardinalities: k-generalized Fibonacci numbers,
//! the run-parity correction, the inner-string count, Catalan numbers, and
//! the matrix-family counts with their two-sided bounds.
//!
//! All counts are exact big integers; the bounds are exact rationals, since
//! their bases are half-integers.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{pow, One, Zero};

use crate::error::{Error, Result};

/// `n`-th k-generalized Fibonacci number: `2^n` for `n <= k-1`, then the
/// sum of the previous `k` terms.
pub fn kbonacci(k: usize, n: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::domain(format!("kbonacci needs k >= 2, got {k}")));
    }
    let mut seq: Vec<BigUint> = Vec::with_capacity(n + 1);
    for i in 0..=n.min(k - 1) {
        seq.push(BigUint::from(1u8) << i);
    }
    for i in k..=n {
        let tail: BigUint = seq[i - k..].iter().sum();
        seq.push(tail);
    }
    Ok(seq[n].clone())
}

/// Correction term of the inner-string count: `+1` when `n mod k = 0`,
/// `-1` when `n mod k = 1`, `0` otherwise.
pub fn correction_term(k: usize, n: usize) -> i64 {
    debug_assert!(k >= 2);
    match n % k {
        0 => 1,
        1 => -1,
        _ => 0,
    }
}

/// Number of length-`len` binary strings starting with 0, ending with 1,
/// and avoiding runs of `k` equal symbols:
/// `(kbonacci(k-1, len-1) + correction_term(k, len)) / 2`, with the `len = 0`
/// convention of 1.
pub fn inner_count(k: usize, len: usize) -> Result<BigUint> {
    if k < 3 {
        return Err(Error::domain(format!("inner_count needs k >= 3, got {k}")));
    }
    if len == 0 {
        return Ok(BigUint::one());
    }
    let f = kbonacci(k - 1, len - 1)?;
    let numerator = match correction_term(k, len) {
        1 => f + 1u8,
        -1 => f - 1u8,
        _ => f,
    };
    assert!(
        (&numerator % 2u8).is_zero(),
        "inner-count numerator must be even, got {numerator} at k={k}, len={len}"
    );
    Ok(numerator / 2u8)
}

/// `n`-th Catalan number.
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for i in 0..n {
        // C_{i+1} = C_i * 2(2i+1) / (i+2), an exact division
        c = c * BigUint::from(2 * (2 * i + 1)) / BigUint::from(i + 2);
    }
    c
}

/// Count of matrices with at most `max_rows` rows and at most `max_cols`
/// columns in the run-avoiding family: over rows `h` from 2 to `max_rows`
/// and columns `s` from `2k+3` to `max_cols`, the inner rows contribute
/// `(inner_count(k, s-2k) - 2)^(h-2)` apiece, with `0^0 = 1`.
pub fn v_matrix_count(max_rows: usize, max_cols: usize, k: usize) -> Result<BigUint> {
    if max_rows < 2 {
        return Err(Error::domain(format!(
            "matrix families need max_rows >= 2, got {max_rows}"
        )));
    }
    if k < 3 {
        return Err(Error::domain(format!("matrix families need k >= 3, got {k}")));
    }
    let mut total = BigUint::zero();
    for s in 2 * k + 3..=max_cols {
        let base = inner_count(k, s - 2 * k)? - 2u8;
        for h in 2..=max_rows {
            total += pow(base.clone(), h - 2);
        }
    }
    Ok(total)
}

/// Exact rational lower/upper bounds around [`v_matrix_count`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: Ratio<BigInt>,
    pub upper: Ratio<BigInt>,
}

/// The two-sided bound obtained by replacing the inner-row base with
/// `(kbonacci(k-1, s-1) -+ {5,3}) / 2`, evaluated exactly.
pub fn v_matrix_bounds(max_rows: usize, max_cols: usize, k: usize) -> Result<BoundPair> {
    if max_rows < 2 {
        return Err(Error::domain(format!(
            "matrix families need max_rows >= 2, got {max_rows}"
        )));
    }
    if k < 3 {
        return Err(Error::domain(format!("matrix families need k >= 3, got {k}")));
    }
    let mut lower = Ratio::zero();
    let mut upper = Ratio::zero();
    let two = BigInt::from(2);
    for s in 3..=max_cols.saturating_sub(2 * k) {
        let f = BigInt::from(kbonacci(k - 1, s - 1)?);
        let low_base = Ratio::new(&f - 5, two.clone());
        let up_base = Ratio::new(&f - 3, two.clone());
        for h in 2..=max_rows {
            lower += pow(low_base.clone(), h - 2);
            upper += pow(up_base.clone(), h - 2);
        }
    }
    Ok(BoundPair { lower, upper })
}

/// Which of the two printed forms of the Dyck-family count to evaluate.
///
/// `Published` reproduces the formula exactly as printed (exponent `h`,
/// columns starting at 4); it disagrees with enumeration and is kept so the
/// erratum stays machine-checkable. `Corrected` uses exponent `h-2` and
/// starts at 6 columns, and matches enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    Published,
    Corrected,
}

/// Count of matrices with at most `max_rows` rows and at most `max_cols`
/// columns in the Dyck family, under the chosen formula. The published
/// form can go negative, hence the signed result.
pub fn d_matrix_count(max_rows: usize, max_cols: usize, mode: CountMode) -> Result<BigInt> {
    if max_rows < 2 {
        return Err(Error::domain(format!(
            "matrix families need max_rows >= 2, got {max_rows}"
        )));
    }
    let mut total = BigInt::zero();
    let s_min = match mode {
        CountMode::Published => 2,
        CountMode::Corrected => 3,
    };
    for s in s_min..=max_cols / 2 {
        let base: BigInt = BigInt::from(catalan(s - 1)) - 2;
        for h in 2..=max_rows {
            let e = match mode {
                CountMode::Published => h,
                CountMode::Corrected => h - 2,
            };
            total += pow(base.clone(), e);
        }
    }
    Ok(total)
}
