//! Dyck words and the Dyck-based variable-length non-overlapping family.
//!
//! Members are `1w0` for Dyck words `w`; unlike the run-avoiding family, a
//! member may occur as an inner factor of another, which the overlap
//! predicate deliberately admits.

use crate::bitstring::BitString;
use crate::error::{Error, Result};

/// Whether `w` is a Dyck word: balanced, with every prefix having at least
/// as many 1s (up-steps) as 0s (down-steps). The empty string qualifies.
pub fn is_dyck(w: &BitString) -> bool {
    let mut height: i64 = 0;
    for &b in w.bits() {
        height += if b == 1 { 1 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0
}

/// All Dyck words of length `2 * semilength`, in lexicographic order.
pub fn dyck_words(semilength: usize) -> Vec<BitString> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(2 * semilength);
    extend_dyck(&mut buf, semilength, 0, 0, &mut out);
    out
}

fn extend_dyck(buf: &mut Vec<u8>, semilength: usize, ups: usize, height: usize, out: &mut Vec<BitString>) {
    if buf.len() == 2 * semilength {
        out.push(BitString::from_vec_unchecked(buf.clone()));
        return;
    }
    if height > 0 {
        buf.push(0);
        extend_dyck(buf, semilength, ups, height - 1, out);
        buf.pop();
    }
    if ups < semilength {
        buf.push(1);
        extend_dyck(buf, semilength, ups + 1, height + 1, out);
        buf.pop();
    }
}

/// `1w0` for a Dyck word `w`.
fn elevated(w: &BitString) -> BitString {
    let mut bits = Vec::with_capacity(w.len() + 2);
    bits.push(1);
    bits.extend_from_slice(w.bits());
    bits.push(0);
    BitString::from_vec_unchecked(bits)
}

/// All `1w0` with `|w| = cols - 2`, the row alphabet for `cols`-column
/// matrices of this family.
pub(crate) fn elevated_words(cols: usize) -> Vec<BitString> {
    assert!(cols >= 2 && cols.is_multiple_of(2));
    dyck_words(cols / 2 - 1).iter().map(elevated).collect()
}

/// The family up to length `max_len`: every `1w0` for Dyck words of length
/// `0, 2, ..., 2*floor((max_len-2)/2)`, in lexicographic order.
pub fn d_family(max_len: usize) -> Result<Vec<BitString>> {
    if max_len < 2 {
        return Err(Error::domain(format!(
            "family bound must be at least 2, got {max_len}"
        )));
    }
    let mut out = Vec::new();
    for semilength in 0..=(max_len - 2) / 2 {
        out.extend(dyck_words(semilength).iter().map(elevated));
    }
    out.sort();
    Ok(out)
}

/// The fixed top row for `cols`-column matrices: the elevated zig-zag
/// `1 (10)^(s-1) 0` with `cols = 2s`.
pub fn canonical_top(cols: usize) -> Result<BitString> {
    let s = check_cols(cols)?;
    let mut bits = Vec::with_capacity(cols);
    bits.push(1);
    for _ in 0..s - 1 {
        bits.push(1);
        bits.push(0);
    }
    bits.push(0);
    Ok(BitString::from_vec_unchecked(bits))
}

/// The fixed bottom row: the pyramid `1^s 0^s` with `cols = 2s`.
pub fn canonical_bottom(cols: usize) -> Result<BitString> {
    let s = check_cols(cols)?;
    Ok(BitString::ones(s).concat(&BitString::zeros(s)))
}

fn check_cols(cols: usize) -> Result<usize> {
    if !cols.is_multiple_of(2) || cols < 6 {
        return Err(Error::domain(format!(
            "canonical rows need an even column count of at least 6, got {cols}"
        )));
    }
    Ok(cols / 2)
}
