//! Binary strings, prefix/suffix overlap predicates, and the generator of
//! the variable-length cross-bifix-free family built from forbidden runs.
//!
//! The family collects, for every width `i` between `2k+2` and `n`, the
//! strings `1^k 0u1 0^k` whose inner part `0u1` avoids runs of `k` equal
//! symbols. No member overlaps any other (or itself), and no member is a
//! factor of another.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence over {0,1}, ordered most significant (leftmost) first.
///
/// The derived `Ord` is lexicographic on the bit sequence, which is the
/// canonical order used for all emitted sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<u8>);

impl BitString {
    /// Builds a bit string, rejecting any symbol other than 0 or 1.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        for &b in &bits {
            if b > 1 {
                return Err(Error::InvalidSymbol((b'0' + b.min(9)) as char));
            }
        }
        Ok(BitString(bits))
    }

    /// Internal constructor for bit vectors already known to be 0/1-valued.
    pub(crate) fn from_vec_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BitString(bits)
    }

    pub fn empty() -> Self {
        BitString(Vec::new())
    }

    /// `n` consecutive ones.
    pub fn ones(n: usize) -> Self {
        BitString(vec![1; n])
    }

    /// `n` consecutive zeros.
    pub fn zeros(n: usize) -> Self {
        BitString(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BitString(bits)
    }

    /// Count of 1-bits.
    pub fn popcount(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(Error::InvalidSymbol(other)),
            }
        }
        Ok(BitString(bits))
    }
}

/// The forbidden-run length `k`; the construction requires `k >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunParams {
    k: usize,
}

impl RunParams {
    pub fn new(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::domain(format!(
                "run length k must be at least 3, got {k}"
            )));
        }
        Ok(RunParams { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Shortest width any family level can have (`2k+2`).
    pub fn min_level_width(&self) -> usize {
        2 * self.k + 2
    }

    /// Shortest width usable as matrix columns (`2k+3`, the first level
    /// holding at least two strings).
    pub fn min_matrix_width(&self) -> usize {
        2 * self.k + 3
    }
}

/// Length of the longest cross overlap between `u` and `v`, if any.
///
/// An overlap is a length `l` with `1 <= l <= min(|u|,|v|)-1` such that the
/// length-`l` prefix of one string equals the length-`l` suffix of the
/// other. Both sides are proper, so containment of one string inside the
/// other does not count.
pub fn overlap_length(u: &BitString, v: &BitString) -> Result<Option<usize>> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyString);
    }
    let (ub, vb) = (u.bits(), v.bits());
    let max_l = ub.len().min(vb.len()).saturating_sub(1);
    for l in (1..=max_l).rev() {
        if ub[..l] == vb[vb.len() - l..] || vb[..l] == ub[ub.len() - l..] {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// Whether `u` and `v` overlap in the cross-bifix sense (either order).
pub fn overlaps(u: &BitString, v: &BitString) -> Result<bool> {
    Ok(overlap_length(u, v)?.is_some())
}

/// Whether `u` has no proper prefix equal to one of its own proper suffixes.
pub fn is_bifix_free(u: &BitString) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyString);
    }
    let b = u.bits();
    for l in 1..b.len() {
        if b[..l] == b[b.len() - l..] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `needle` occurs as a contiguous factor of `haystack` (any
/// position, prefix and suffix included).
pub fn is_factor(needle: &BitString, haystack: &BitString) -> bool {
    if needle.is_empty() {
        return true;
    }
    if needle.len() > haystack.len() {
        return false;
    }
    haystack
        .bits()
        .windows(needle.len())
        .any(|w| w == needle.bits())
}

/// All length-`len` strings that start with 0, end with 1, and contain no
/// run of `k` equal symbols, in lexicographic order.
///
/// `len == 0` yields the empty string alone (the count convention `r_0 = 1`);
/// `len == 1` yields nothing, since a single symbol cannot be both 0 and 1.
pub fn inner_strings(len: usize, params: RunParams) -> Vec<BitString> {
    if len == 0 {
        return vec![BitString::empty()];
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(len);
    extend_inner(&mut buf, len, params.k(), &mut out);
    out
}

fn extend_inner(buf: &mut Vec<u8>, len: usize, k: usize, out: &mut Vec<BitString>) {
    if buf.len() == len {
        out.push(BitString::from_vec_unchecked(buf.clone()));
        return;
    }
    let pos = buf.len();
    for bit in [0u8, 1u8] {
        if pos == 0 && bit != 0 {
            continue;
        }
        if pos == len - 1 && bit != 1 {
            continue;
        }
        // reject a run of k equal symbols
        if pos >= k - 1 && buf[pos - (k - 1)..].iter().all(|&b| b == bit) {
            continue;
        }
        buf.push(bit);
        extend_inner(buf, len, k, out);
        buf.pop();
    }
}

fn framed(inner: &BitString, k: usize) -> BitString {
    let mut bits = Vec::with_capacity(inner.len() + 2 * k);
    bits.extend(std::iter::repeat_n(1u8, k));
    bits.extend_from_slice(inner.bits());
    bits.extend(std::iter::repeat_n(0u8, k));
    BitString::from_vec_unchecked(bits)
}

/// The level of the family at exactly `width` symbols: every `1^k 0u1 0^k`
/// whose inner part `0u1` has length `width - 2k` and avoids both runs.
pub fn v_level(width: usize, params: RunParams) -> Result<Vec<BitString>> {
    if width < params.min_level_width() {
        return Err(Error::domain(format!(
            "level width must be at least {}, got {width}",
            params.min_level_width()
        )));
    }
    let inners = inner_strings(width - 2 * params.k(), params);
    Ok(inners.iter().map(|u| framed(u, params.k())).collect())
}

/// The whole family up to `max_width`: the union of all levels from `2k+2`
/// to `max_width`, in lexicographic order.
pub fn v_family(max_width: usize, params: RunParams) -> Result<Vec<BitString>> {
    if max_width < params.min_level_width() {
        return Err(Error::domain(format!(
            "family bound must be at least {}, got {max_width}",
            params.min_level_width()
        )));
    }
    let mut out = Vec::new();
    for width in params.min_level_width()..=max_width {
        out.extend(v_level(width, params)?);
    }
    out.sort();
    Ok(out)
}

/// The fixed top row shared by every matrix with `width` columns: the frame
/// around the zig-zag inner word `10...`.
pub fn canonical_top(width: usize, params: RunParams) -> Result<BitString> {
    canonical_pair(width, params).map(|(top, _)| top)
}

/// The fixed bottom row: the frame around the complementary zig-zag `01...`.
pub fn canonical_bottom(width: usize, params: RunParams) -> Result<BitString> {
    canonical_pair(width, params).map(|(_, bottom)| bottom)
}

fn canonical_pair(width: usize, params: RunParams) -> Result<(BitString, BitString)> {
    let k = params.k();
    if width < params.min_matrix_width() {
        return Err(Error::domain(format!(
            "canonical rows need width at least {}, got {width}",
            params.min_matrix_width()
        )));
    }
    // Inner words between the mandatory 0 and 1 of the frame's `0u1` part.
    let free = width - 2 * k - 2;
    let (u, v) = if free.is_multiple_of(2) {
        (zigzag(&[1, 0], free), zigzag(&[0, 1], free))
    } else {
        (zigzag(&[1, 0, 1], free), zigzag(&[0, 1, 0], free))
    };
    let wrap = |mid: Vec<u8>| {
        let mut inner = vec![0u8];
        inner.extend(mid);
        inner.push(1);
        framed(&BitString::from_vec_unchecked(inner), k)
    };
    Ok((wrap(u), wrap(v)))
}

fn zigzag(lead: &[u8], len: usize) -> Vec<u8> {
    lead.iter().copied().cycle().take(len).collect()
}
