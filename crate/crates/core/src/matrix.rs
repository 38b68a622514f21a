//! Binary matrices, the two-dimensional overlap predicate with kind
//! classification, and the construction of both variable-dimension
//! non-overlapping matrix families.
//!
//! A matrix family fixes, per column count, a shared top row and a shared
//! bottom row; inner rows come from the same width's string set, may repeat,
//! and must differ from both fixed rows.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitstring::{self, BitString, RunParams};
use crate::dyck;
use crate::error::{Error, Result};

/// A rectangular grid of bits, stored as equal-length rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: Vec<BitString>,
}

impl BinaryMatrix {
    /// Builds a matrix from rows, which must be non-empty and all of the
    /// same non-zero length.
    pub fn from_rows(rows: Vec<BitString>) -> Result<Self> {
        let cols = match rows.first() {
            Some(first) if !first.is_empty() => first.len(),
            _ => return Err(Error::RaggedMatrix),
        };
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::RaggedMatrix);
        }
        Ok(BinaryMatrix { rows })
    }

    /// Convenience constructor from '0'/'1' row literals.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.parse())
            .collect::<Result<Vec<BitString>>>()?;
        BinaryMatrix::from_rows(parsed)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[BitString] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitString {
        &self.rows[i]
    }

    /// Count of 1-entries over the whole grid.
    pub fn popcount(&self) -> usize {
        self.rows.iter().map(|r| r.popcount()).sum()
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{row}")?;
        }
        write!(f, "]")
    }
}

// Canonical order: narrow before wide, short before tall, then row-wise
// lexicographic. Families rendered in this order group by shape.
impl Ord for BinaryMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.col_count(), self.row_count(), &self.rows).cmp(&(
            other.col_count(),
            other.row_count(),
            &other.rows,
        ))
    }
}

impl PartialOrd for BinaryMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: Vec<String>,
}

impl Serialize for BinaryMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows.iter().map(|r| r.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BinaryMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        let rows = repr
            .rows
            .iter()
            .map(|r| r.parse())
            .collect::<Result<Vec<BitString>>>()
            .map_err(D::Error::custom)?;
        BinaryMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Whether placements where one matrix lies entirely inside the other count
/// as overlap. `Strict` counts them; `FactorTolerant` admits them, the way
/// the Dyck-based string family admits inner factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapMode {
    Strict,
    FactorTolerant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OverlapKind {
    Horizontal,
    Vertical,
    Diagonal,
    Containment,
}

/// Witness of a matching placement: where the second matrix's top-left cell
/// sits relative to the first's, and the extent of the agreeing region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub row_offset: isize,
    pub col_offset: isize,
    pub region_rows: usize,
    pub region_cols: usize,
    pub kind: OverlapKind,
}

/// Scans every placement of `b` over `a` whose domains intersect and
/// returns the first agreeing one, or `None`.
///
/// The scan covers row offsets in `[-(rows_b-1), rows_a-1]` and column
/// offsets in `[-(cols_b-1), cols_a-1]` — the full rectangle, so the result
/// is empty for `(a, b)` exactly when it is empty for `(b, a)`. Placements
/// with both offsets non-negative (the corner-aligned start moved down,
/// right, or both) are scanned first in row-major order, then the rest;
/// this fixes which witness is reported when several placements match.
///
/// The identity placement `(0, 0)` is skipped when `a` and `b` are equal as
/// values. Under `FactorTolerant`, placements where one domain contains the
/// other are skipped as well.
pub fn overlap(a: &BinaryMatrix, b: &BinaryMatrix, mode: OverlapMode) -> Option<OverlapReport> {
    let (ra, ca) = (a.row_count() as isize, a.col_count() as isize);
    let (rb, cb) = (b.row_count() as isize, b.col_count() as isize);

    let check = |ro: isize, co: isize| -> Option<OverlapReport> {
        if ro == 0 && co == 0 && a == b {
            return None;
        }
        let b_inside_a = ro >= 0 && co >= 0 && ro + rb <= ra && co + cb <= ca;
        let a_inside_b = ro <= 0 && co <= 0 && ro + rb >= ra && co + cb >= ca;
        let containment = b_inside_a || a_inside_b;
        if mode == OverlapMode::FactorTolerant && containment {
            return None;
        }
        let r0 = ro.max(0);
        let r1 = (ro + rb).min(ra);
        let c0 = co.max(0);
        let c1 = (co + cb).min(ca);
        for r in r0..r1 {
            let row_a = &a.rows[r as usize].bits()[c0 as usize..c1 as usize];
            let row_b = &b.rows[(r - ro) as usize].bits()
                [(c0 - co) as usize..(c1 - co) as usize];
            if row_a != row_b {
                return None;
            }
        }
        let kind = if containment {
            OverlapKind::Containment
        } else if ro == 0 && co != 0 {
            OverlapKind::Horizontal
        } else if co == 0 && ro != 0 {
            OverlapKind::Vertical
        } else {
            // both offsets non-zero; the (0,0) cross-shape corner case,
            // unreachable from rectangular families, lands here too
            OverlapKind::Diagonal
        };
        Some(OverlapReport {
            row_offset: ro,
            col_offset: co,
            region_rows: (r1 - r0) as usize,
            region_cols: (c1 - c0) as usize,
            kind,
        })
    };

    for ro in 0..ra {
        for co in 0..ca {
            if let Some(report) = check(ro, co) {
                return Some(report);
            }
        }
    }
    for ro in -(rb - 1)..ra {
        for co in -(cb - 1)..ca {
            if ro >= 0 && co >= 0 {
                continue;
            }
            if let Some(report) = check(ro, co) {
                return Some(report);
            }
        }
    }
    None
}

fn assemble(
    top: &BitString,
    bottom: &BitString,
    pool: &[BitString],
    inner_slots: usize,
) -> Vec<BinaryMatrix> {
    let make = |digits: &[usize]| {
        let mut rows = Vec::with_capacity(inner_slots + 2);
        rows.push(top.clone());
        rows.extend(digits.iter().map(|&i| pool[i].clone()));
        rows.push(bottom.clone());
        BinaryMatrix::from_rows(rows).expect("rows share one width")
    };
    if inner_slots == 0 {
        return vec![make(&[])];
    }
    if pool.is_empty() {
        return Vec::new();
    }
    // odometer over pool indices, last digit fastest
    let mut out = Vec::new();
    let mut digits = vec![0usize; inner_slots];
    loop {
        out.push(make(&digits));
        let mut i = inner_slots;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < pool.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// All matrices of exactly `rows` rows and `cols` columns in the
/// run-avoiding family: fixed canonical top and bottom rows, inner rows
/// (repetition allowed) from the width's level minus the two fixed rows.
pub fn v_cell(rows: usize, cols: usize, params: RunParams) -> Result<Vec<BinaryMatrix>> {
    if rows < 2 {
        return Err(Error::domain(format!(
            "matrices need at least 2 rows, got {rows}"
        )));
    }
    let top = bitstring::canonical_top(cols, params)?;
    let bottom = bitstring::canonical_bottom(cols, params)?;
    let mut pool = bitstring::v_level(cols, params)?;
    pool.retain(|r| *r != top && *r != bottom);
    Ok(assemble(&top, &bottom, &pool, rows - 2))
}

/// The run-avoiding matrix family with at most `max_rows` rows and at most
/// `max_cols` columns, in canonical order. Empty ranges are allowed.
pub fn v_matrix_family(
    max_rows: usize,
    max_cols: usize,
    params: RunParams,
) -> Result<Vec<BinaryMatrix>> {
    if max_rows < 2 {
        return Err(Error::domain(format!(
            "matrix families need max_rows >= 2, got {max_rows}"
        )));
    }
    let mut out = Vec::new();
    for cols in params.min_matrix_width()..=max_cols {
        for rows in 2..=max_rows {
            out.extend(v_cell(rows, cols, params)?);
        }
    }
    out.sort();
    Ok(out)
}

/// All matrices of exactly `rows` rows and `cols` columns in the Dyck
/// family; same frame discipline as [`v_cell`], rows drawn from the
/// elevated Dyck words of that width.
pub fn d_cell(rows: usize, cols: usize) -> Result<Vec<BinaryMatrix>> {
    if rows < 2 {
        return Err(Error::domain(format!(
            "matrices need at least 2 rows, got {rows}"
        )));
    }
    let top = dyck::canonical_top(cols)?;
    let bottom = dyck::canonical_bottom(cols)?;
    let mut pool = dyck::elevated_words(cols);
    pool.retain(|r| *r != top && *r != bottom);
    let cell = assemble(&top, &bottom, &pool, rows - 2);
    debug_assert!(cell
        .iter()
        .all(|m| 2 * m.popcount() == m.row_count() * m.col_count()));
    Ok(cell)
}

/// The Dyck matrix family with at most `max_rows` rows and at most
/// `max_cols` columns, in canonical order. Column counts run over the even
/// numbers from 6 up; 4 columns would leave a single available row string,
/// so no valid top/bottom pair exists there.
pub fn d_matrix_family(max_rows: usize, max_cols: usize) -> Result<Vec<BinaryMatrix>> {
    if max_rows < 2 {
        return Err(Error::domain(format!(
            "matrix families need max_rows >= 2, got {max_rows}"
        )));
    }
    let mut out = Vec::new();
    for s in 3..=max_cols / 2 {
        for rows in 2..=max_rows {
            out.extend(d_cell(rows, 2 * s)?);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_strs(rows).unwrap()
    }

    fn k3() -> RunParams {
        RunParams::new(3).unwrap()
    }

    // Fixture pair that overlaps horizontally: the right matrix's first two
    // columns coincide with the left one's last two.
    fn horizontal_pair() -> (BinaryMatrix, BinaryMatrix) {
        (
            m(&["010101", "011101", "111100", "100011"]),
            m(&["011110", "011110", "001000", "110101"]),
        )
    }

    fn diagonal_pair() -> (BinaryMatrix, BinaryMatrix) {
        (
            m(&["010101", "011101", "111100", "100011"]),
            m(&["100111", "011110", "111000", "010101"]),
        )
    }

    fn vertical_pair() -> (BinaryMatrix, BinaryMatrix) {
        (
            m(&["010101", "011101", "111100", "100110"]),
            m(&["111100", "100110", "111000", "110101"]),
        )
    }

    // The 7x12 matrix whose middle rows reappear as a free-standing 3x12
    // matrix, producing a vertical overlap; rows all share one width and
    // follow the run-avoiding frame.
    fn tall_counterexample() -> BinaryMatrix {
        m(&[
            "111010011000",
            "111011011000",
            "111011001000",
            "111010101000",
            "111010011000",
            "111001101000",
            "111001001000",
        ])
    }

    fn short_counterexample() -> BinaryMatrix {
        m(&["111011001000", "111010101000", "111010011000"])
    }

    #[test]
    fn self_overlap_at_the_corner() {
        let a = m(&["10", "01"]);
        let report = overlap(&a, &a, OverlapMode::Strict).unwrap();
        assert_eq!(report.row_offset, 1);
        assert_eq!(report.col_offset, 1);
        assert_eq!(report.kind, OverlapKind::Diagonal);
        assert_eq!((report.region_rows, report.region_cols), (1, 1));
    }

    #[test]
    fn known_overlapping_pairs_classify_by_kind() {
        let (a, b) = horizontal_pair();
        assert_eq!(
            overlap(&a, &b, OverlapMode::Strict).unwrap().kind,
            OverlapKind::Horizontal
        );
        let (a, b) = diagonal_pair();
        assert_eq!(
            overlap(&a, &b, OverlapMode::Strict).unwrap().kind,
            OverlapKind::Diagonal
        );
        let (a, b) = vertical_pair();
        let report = overlap(&a, &b, OverlapMode::Strict).unwrap();
        assert_eq!(report.kind, OverlapKind::Vertical);
        assert_eq!((report.row_offset, report.col_offset), (2, 0));
    }

    #[test]
    fn non_overlapping_pair_yields_nothing() {
        let a = m(&["1100100100", "0110010110", "0100110010", "1111100000"]);
        let b = m(&["1100100100", "0010110110", "1101101010", "1110000000"]);
        assert_eq!(overlap(&a, &b, OverlapMode::Strict), None);
        assert_eq!(overlap(&b, &a, OverlapMode::Strict), None);
    }

    #[test]
    fn containment_counterexample_is_detected() {
        let c = tall_counterexample();
        let d = short_counterexample();
        let report = overlap(&c, &d, OverlapMode::Strict).unwrap();
        assert_eq!((report.row_offset, report.col_offset), (2, 0));
        assert_eq!(report.kind, OverlapKind::Containment);
        assert_eq!((report.region_rows, report.region_cols), (3, 12));

        // the swapped order sees the same coincidence as a vertical overlap
        let swapped = overlap(&d, &c, OverlapMode::Strict).unwrap();
        assert_eq!((swapped.row_offset, swapped.col_offset), (2, 0));
        assert_eq!(swapped.kind, OverlapKind::Vertical);
    }

    #[test]
    fn factor_tolerant_admits_containment_only() {
        let c = tall_counterexample();
        let d = short_counterexample();
        // the containment placement is excused, but the vertical coincidence
        // between c's top row and its own inner row is still there
        let report = overlap(&c, &d, OverlapMode::FactorTolerant).unwrap();
        assert_ne!(report.kind, OverlapKind::Containment);
    }

    #[test]
    fn overlap_emptiness_is_symmetric() {
        let pairs = [horizontal_pair(), diagonal_pair(), vertical_pair()];
        for (a, b) in pairs {
            for mode in [OverlapMode::Strict, OverlapMode::FactorTolerant] {
                assert_eq!(
                    overlap(&a, &b, mode).is_some(),
                    overlap(&b, &a, mode).is_some()
                );
            }
        }
    }

    #[test]
    fn corrupted_row_triggers_horizontal_overlap() {
        // shift every row left by five positions: each new row's prefix is
        // the old row's suffix, so a horizontal placement must fire
        let cell = v_cell(2, 9, k3()).unwrap();
        let original = &cell[0];
        let shifted: Vec<BitString> = original
            .rows()
            .iter()
            .map(|r| {
                let mut bits = r.bits()[5..].to_vec();
                bits.extend_from_slice(&r.bits()[..5]);
                BitString::new(bits).unwrap()
            })
            .collect();
        let corrupted = BinaryMatrix::from_rows(shifted).unwrap();
        let report = overlap(original, &corrupted, OverlapMode::Strict).unwrap();
        assert_eq!(report.kind, OverlapKind::Horizontal);
        assert_eq!(report.col_offset, 5);
    }

    #[test]
    fn v_cell_two_rows_is_the_canonical_pair() {
        let cell = v_cell(2, 9, k3()).unwrap();
        assert_eq!(cell, vec![m(&["111011000", "111001000"])]);
    }

    #[test]
    fn v_cell_without_eligible_inner_rows_is_empty() {
        assert!(v_cell(3, 9, k3()).unwrap().is_empty());
    }

    #[test]
    fn v_cell_with_two_inner_choices() {
        let cell = v_cell(3, 11, k3()).unwrap();
        assert_eq!(
            cell,
            vec![
                m(&["11101011000", "11101001000", "11100101000"]),
                m(&["11101011000", "11101101000", "11100101000"]),
            ]
        );
    }

    #[test]
    fn v_family_sizes_match_the_closed_form() {
        assert_eq!(v_matrix_family(3, 10, k3()).unwrap().len(), 2);
        assert_eq!(v_matrix_family(4, 13, k3()).unwrap().len(), 113);
        assert!(v_matrix_family(2, 8, k3()).unwrap().is_empty());
    }

    #[test]
    fn v_family_respects_the_frame() {
        let params = k3();
        for matrix in v_matrix_family(4, 12, params).unwrap() {
            let cols = matrix.col_count();
            let top = bitstring::canonical_top(cols, params).unwrap();
            let bottom = bitstring::canonical_bottom(cols, params).unwrap();
            assert_eq!(*matrix.row(0), top);
            assert_eq!(*matrix.row(matrix.row_count() - 1), bottom);
            for inner in &matrix.rows()[1..matrix.row_count() - 1] {
                assert_ne!(*inner, top);
                assert_ne!(*inner, bottom);
            }
        }
    }

    #[test]
    fn d_cell_smallest() {
        assert_eq!(
            d_cell(2, 6).unwrap(),
            vec![m(&["110100", "111000"])]
        );
    }

    #[test]
    fn d_family_sizes() {
        assert_eq!(d_matrix_family(3, 8).unwrap().len(), 5);
        assert!(d_matrix_family(5, 5).unwrap().is_empty());
    }

    #[test]
    fn d_family_matrices_are_balanced() {
        for matrix in d_matrix_family(4, 10).unwrap() {
            assert_eq!(
                2 * matrix.popcount(),
                matrix.row_count() * matrix.col_count()
            );
        }
    }

    #[test]
    fn d_family_respects_the_frame() {
        for matrix in d_matrix_family(4, 10).unwrap() {
            let cols = matrix.col_count();
            let top = dyck::canonical_top(cols).unwrap();
            let bottom = dyck::canonical_bottom(cols).unwrap();
            assert_eq!(*matrix.row(0), top);
            assert_eq!(*matrix.row(matrix.row_count() - 1), bottom);
            for inner in &matrix.rows()[1..matrix.row_count() - 1] {
                assert_ne!(*inner, top);
                assert_ne!(*inner, bottom);
            }
        }
    }

    #[test]
    fn ragged_rows_are_rejected() {
        assert!(BinaryMatrix::from_strs(&["10", "101"]).is_err());
        assert!(BinaryMatrix::from_strs(&[]).is_err());
        assert!(BinaryMatrix::from_strs(&[""]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = m(&["111011000", "111001000"]);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"rows":["111011000","111001000"]}"#);
        let back: BinaryMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(a, back);
    }
}
