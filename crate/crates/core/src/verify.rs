//! Independent brute-force oracles and property drivers: exhaustive set
//! verification, formula-vs-enumeration reconciliation, and the expansion
//! witnesses showing neither family is non-expandable.
//!
//! The routines here deliberately avoid the generators' clever paths: the
//! inner-string oracle filters all `2^len` candidates, and the set checks
//! run the primitive predicates over every ordered pair.

use num_bigint::{BigInt, BigUint};
use num_traits::{pow, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bitstring::{self, BitString, RunParams};
use crate::counting::{self, CountMode};
use crate::error::{Error, Result};
use crate::matrix::{self, BinaryMatrix, OverlapMode, OverlapReport};
use crate::params::{Family, FamilyParams};

/// Largest set size the exhaustive pairwise checks accept.
pub const MAX_VERIFY_SET: usize = 20_000;

/// Largest string length the filtration oracle accepts.
pub const MAX_BRUTE_LEN: usize = 24;

/// Cross-checkable witness that a pair of elements breaks non-overlap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ViolationWitness {
    StringOverlap { overlap_length: usize },
    MatrixOverlap(OverlapReport),
}

/// A violating pair, identified by indices into the verified set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub left: usize,
    pub right: usize,
    pub witness: ViolationWitness,
}

/// Checks every ordered pair of `set` (self-pairs included) against the
/// string overlap predicate. Returns one violation per unordered pair, in
/// index order; the reverse direction of each pair is evaluated too, as a
/// self-test of the predicate's symmetry.
pub fn verify_string_set(set: &[BitString]) -> Result<Vec<Violation>> {
    if set.len() > MAX_VERIFY_SET {
        return Err(Error::refused(format!(
            "{} strings exceed the pairwise limit of {MAX_VERIFY_SET}",
            set.len()
        )));
    }
    let mut out = Vec::new();
    for i in 0..set.len() {
        for j in i..set.len() {
            let forward = bitstring::overlap_length(&set[i], &set[j])?;
            if j > i {
                let backward = bitstring::overlap_length(&set[j], &set[i])?;
                assert_eq!(
                    forward.is_some(),
                    backward.is_some(),
                    "string overlap asymmetry between #{i} and #{j}"
                );
            }
            if let Some(overlap_length) = forward {
                out.push(Violation {
                    left: i,
                    right: j,
                    witness: ViolationWitness::StringOverlap { overlap_length },
                });
            }
        }
    }
    Ok(out)
}

/// Checks every ordered pair of `family` (self-pairs included) against the
/// matrix overlap predicate under `mode`. Same reporting and symmetry
/// discipline as [`verify_string_set`]; pairs fan out across threads, and
/// the violation list is index-ordered regardless of scheduling.
pub fn verify_matrix_family(
    family: &[BinaryMatrix],
    mode: OverlapMode,
) -> Result<Vec<Violation>> {
    if family.len() > MAX_VERIFY_SET {
        return Err(Error::refused(format!(
            "{} matrices exceed the pairwise limit of {MAX_VERIFY_SET}",
            family.len()
        )));
    }
    let per_row: Vec<Vec<Violation>> = (0..family.len())
        .into_par_iter()
        .map(|i| {
            let mut found = Vec::new();
            for j in i..family.len() {
                let forward = matrix::overlap(&family[i], &family[j], mode);
                if j > i {
                    let backward = matrix::overlap(&family[j], &family[i], mode);
                    assert_eq!(
                        forward.is_some(),
                        backward.is_some(),
                        "matrix overlap asymmetry between #{i} and #{j}"
                    );
                }
                if let Some(report) = forward {
                    found.push(Violation {
                        left: i,
                        right: j,
                        witness: ViolationWitness::MatrixOverlap(report),
                    });
                }
            }
            found
        })
        .collect();
    Ok(per_row.into_iter().flatten().collect())
}

fn brute_accepts(candidate: u64, len: usize, k: usize) -> bool {
    let bit = |j: usize| (candidate >> (len - 1 - j)) & 1;
    if bit(0) != 0 || bit(len - 1) != 1 {
        return false;
    }
    let mut run = 1;
    for j in 1..len {
        if bit(j) == bit(j - 1) {
            run += 1;
            if run >= k {
                return false;
            }
        } else {
            run = 1;
        }
    }
    true
}

fn check_brute_args(len: usize, k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::domain(format!("oracle needs k >= 3, got {k}")));
    }
    if len > MAX_BRUTE_LEN {
        return Err(Error::refused(format!(
            "length {len} exceeds the filtration limit of {MAX_BRUTE_LEN}"
        )));
    }
    Ok(())
}

/// Ground-truth count of the inner strings: filters all `2^len` candidates
/// for "starts with 0, ends with 1, no run of `k` equal symbols".
pub fn brute_inner_count(len: usize, k: usize) -> Result<BigUint> {
    check_brute_args(len, k)?;
    if len == 0 {
        return Ok(BigUint::one());
    }
    let mut count: u64 = 0;
    for candidate in 0..(1u64 << len) {
        if brute_accepts(candidate, len, k) {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Ground-truth inner-string set, materialized in lexicographic order by the
/// same filtration as [`brute_inner_count`].
pub fn brute_inner_strings(len: usize, k: usize) -> Result<Vec<BitString>> {
    check_brute_args(len, k)?;
    if len == 0 {
        return Ok(vec![BitString::empty()]);
    }
    let mut out = Vec::new();
    for candidate in 0..(1u64 << len) {
        if brute_accepts(candidate, len, k) {
            let bits = (0..len)
                .map(|j| ((candidate >> (len - 1 - j)) & 1) as u8)
                .collect();
            out.push(BitString::new(bits)?);
        }
    }
    Ok(out)
}

/// Outcome of one expansion attempt: the candidate itself, whether it is
/// self non-overlapping, and whether the family stays non-overlapping with
/// the candidate added.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessOutcome<T> {
    pub candidate: T,
    pub self_ok: bool,
    pub set_ok: bool,
}

/// For every length from `2k` to `max_len`, adjoins the block string
/// `1^ceil(len/2) 0^floor(len/2)` to the string family bounded by `max_len`
/// and re-verifies. Each passing outcome shows the family admits one more
/// element, i.e. it is not non-expandable.
pub fn string_expansion_witnesses(
    max_len: usize,
    params: RunParams,
) -> Result<Vec<WitnessOutcome<BitString>>> {
    let k = params.k();
    if max_len < 2 * k {
        return Err(Error::domain(format!(
            "witness lengths start at 2k = {}, got bound {max_len}",
            2 * k
        )));
    }
    let family = if max_len >= params.min_level_width() {
        bitstring::v_family(max_len, params)?
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    for len in 2 * k..=max_len {
        let candidate = BitString::ones(len.div_ceil(2)).concat(&BitString::zeros(len / 2));
        let self_ok = bitstring::is_bifix_free(&candidate)?;
        let mut augmented = family.clone();
        augmented.push(candidate.clone());
        let set_ok = self_ok && verify_string_set(&augmented)?.is_empty();
        out.push(WitnessOutcome {
            candidate,
            self_ok,
            set_ok,
        });
    }
    Ok(out)
}

/// For every width from `2k+3` to `max_cols`, adjoins the two-row matrix
/// `(canonical top; 1^ceil(s/2) 0^floor(s/2))` to the matrix family and
/// re-verifies under strict mode.
pub fn matrix_expansion_witnesses(
    max_rows: usize,
    max_cols: usize,
    params: RunParams,
) -> Result<Vec<WitnessOutcome<BinaryMatrix>>> {
    if max_rows < 2 {
        return Err(Error::domain(format!(
            "matrix families need max_rows >= 2, got {max_rows}"
        )));
    }
    if max_cols < params.min_matrix_width() {
        return Err(Error::domain(format!(
            "witness widths start at 2k+3 = {}, got bound {max_cols}",
            params.min_matrix_width()
        )));
    }
    let family = matrix::v_matrix_family(max_rows, max_cols, params)?;
    let mut out = Vec::new();
    for cols in params.min_matrix_width()..=max_cols {
        let block = BitString::ones(cols.div_ceil(2)).concat(&BitString::zeros(cols / 2));
        let candidate =
            BinaryMatrix::from_rows(vec![bitstring::canonical_top(cols, params)?, block])?;
        let self_ok = matrix::overlap(&candidate, &candidate, OverlapMode::Strict).is_none();
        let mut augmented = family.clone();
        augmented.push(candidate.clone());
        let set_ok = self_ok
            && verify_matrix_family(&augmented, OverlapMode::Strict)?.is_empty();
        out.push(WitnessOutcome {
            candidate,
            self_ok,
            set_ok,
        });
    }
    Ok(out)
}

/// One (rows, cols) cell of a reconciliation run: the enumerated size next
/// to the closed-form value, plus the published-formula value for the Dyck
/// family where the two printed forms differ.
#[derive(Debug, Clone)]
pub struct CellCount {
    pub rows: usize,
    pub cols: usize,
    pub enumerated: BigUint,
    pub formula: BigInt,
    pub published: Option<BigInt>,
}

impl CellCount {
    pub fn agrees(&self) -> bool {
        BigInt::from(self.enumerated.clone()) == self.formula
    }

    pub fn published_agrees(&self) -> Option<bool> {
        self.published
            .as_ref()
            .map(|p| BigInt::from(self.enumerated.clone()) == *p)
    }
}

/// Full reconciliation of closed forms against enumeration for one family.
#[derive(Debug, Clone)]
pub struct ReconcileReport {
    pub params: FamilyParams,
    pub cells: Vec<CellCount>,
}

impl ReconcileReport {
    pub fn total_enumerated(&self) -> BigUint {
        self.cells.iter().map(|c| c.enumerated.clone()).sum()
    }

    pub fn total_formula(&self) -> BigInt {
        self.cells.iter().map(|c| c.formula.clone()).sum()
    }

    pub fn total_published(&self) -> Option<BigInt> {
        if self.cells.iter().all(|c| c.published.is_none()) {
            return None;
        }
        Some(
            self.cells
                .iter()
                .filter_map(|c| c.published.clone())
                .sum(),
        )
    }

    /// Whether enumeration matches the authoritative closed form everywhere.
    pub fn agrees(&self) -> bool {
        self.cells.iter().all(|c| c.agrees())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<serde_json::Value> = self
            .cells
            .iter()
            .map(|c| {
                let mut cell = serde_json::json!({
                    "rows": c.rows,
                    "cols": c.cols,
                    "enumerated": c.enumerated.to_string(),
                    "formula": c.formula.to_string(),
                    "agree": c.agrees(),
                });
                if let Some(p) = &c.published {
                    cell["published"] = serde_json::Value::String(p.to_string());
                    cell["published_agree"] =
                        serde_json::Value::Bool(c.published_agrees().unwrap());
                }
                cell
            })
            .collect();
        let mut report = serde_json::json!({
            "family": self.params.family,
            "params": self.params,
            "cells": cells,
            "total_enumerated": self.total_enumerated().to_string(),
            "total_formula": self.total_formula().to_string(),
            "agree": self.agrees(),
        });
        if let Some(p) = self.total_published() {
            report["total_published"] = serde_json::Value::String(p.to_string());
        }
        report
    }
}

/// Enumerates each (rows, cols) cell of the requested family and compares
/// it to the closed form; for the Dyck family both printed forms are
/// evaluated so their disagreement stays visible.
pub fn reconcile_counts(params: &FamilyParams) -> Result<ReconcileReport> {
    let max_rows = params
        .m
        .ok_or_else(|| Error::domain("reconciliation needs a row bound m".to_string()))?;
    let max_cols = params.n;
    if max_rows < 2 {
        return Err(Error::domain(format!(
            "matrix families need max_rows >= 2, got {max_rows}"
        )));
    }
    let mut cells = Vec::new();
    match params.family {
        Family::V => {
            let run = params.run_params()?;
            let k = run.k();
            let total = counting::v_matrix_count(max_rows, max_cols, k)?;
            refuse_oversized(&BigInt::from(total))?;
            for cols in run.min_matrix_width()..=max_cols {
                let base = counting::inner_count(k, cols - 2 * k)? - 2u8;
                for rows in 2..=max_rows {
                    cells.push(CellCount {
                        rows,
                        cols,
                        enumerated: BigUint::from(matrix::v_cell(rows, cols, run)?.len()),
                        formula: BigInt::from(pow(base.clone(), rows - 2)),
                        published: None,
                    });
                }
            }
        }
        Family::D => {
            let total = counting::d_matrix_count(max_rows, max_cols, CountMode::Corrected)?;
            refuse_oversized(&total)?;
            for s in 2..=max_cols / 2 {
                let base: BigInt = BigInt::from(counting::catalan(s - 1)) - 2;
                for rows in 2..=max_rows {
                    let (enumerated, formula) = if s >= 3 {
                        (
                            BigUint::from(matrix::d_cell(rows, 2 * s)?.len()),
                            pow(base.clone(), rows - 2),
                        )
                    } else {
                        // 4-column matrices are excluded from the family;
                        // only the published formula has a term here
                        (BigUint::zero(), BigInt::zero())
                    };
                    cells.push(CellCount {
                        rows,
                        cols: 2 * s,
                        enumerated,
                        formula,
                        published: Some(pow(base.clone(), rows)),
                    });
                }
            }
        }
    }
    Ok(ReconcileReport {
        params: *params,
        cells,
    })
}

fn refuse_oversized(total: &BigInt) -> Result<()> {
    if *total > BigInt::from(MAX_VERIFY_SET) {
        return Err(Error::refused(format!(
            "family of {total} matrices exceeds the enumeration limit of {MAX_VERIFY_SET}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn k3() -> RunParams {
        RunParams::new(3).unwrap()
    }

    #[test]
    fn family_verifies_clean() {
        let fam = bitstring::v_family(13, k3()).unwrap();
        assert_eq!(verify_string_set(&fam).unwrap(), vec![]);
    }

    #[test]
    fn self_overlapping_string_is_reported() {
        let violations = verify_string_set(&[bs("101")]).unwrap();
        assert_eq!(violations.len(), 1);
        assert_eq!((violations[0].left, violations[0].right), (0, 0));
        assert_eq!(
            violations[0].witness,
            ViolationWitness::StringOverlap { overlap_length: 1 }
        );
    }

    #[test]
    fn crossing_pair_is_reported_once() {
        let violations = verify_string_set(&[bs("110"), bs("011")]).unwrap();
        assert_eq!(violations.len(), 1);
        assert_eq!(
            violations[0].witness,
            ViolationWitness::StringOverlap { overlap_length: 2 }
        );
    }

    #[test]
    fn counterexample_matrices_are_reported() {
        let c = BinaryMatrix::from_strs(&[
            "111010011000",
            "111011011000",
            "111011001000",
            "111010101000",
            "111010011000",
            "111001101000",
            "111001001000",
        ])
        .unwrap();
        let d = BinaryMatrix::from_strs(&["111011001000", "111010101000", "111010011000"])
            .unwrap();
        let violations = verify_matrix_family(&[c, d], OverlapMode::Strict).unwrap();
        // c overlaps itself vertically as well as containing d
        assert!(!violations.is_empty());
        assert!(violations
            .iter()
            .any(|v| (v.left, v.right) == (0, 1)));
    }

    #[test]
    fn free_rows_without_the_frame_discipline_collide() {
        let u = bs("111011000");
        let stacked = BinaryMatrix::from_rows(vec![u.clone(), u]).unwrap();
        let violations = verify_matrix_family(&[stacked], OverlapMode::Strict).unwrap();
        assert_eq!(violations.len(), 1);
        match &violations[0].witness {
            ViolationWitness::MatrixOverlap(report) => {
                assert_eq!(report.kind, matrix::OverlapKind::Vertical)
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn brute_counts_match_known_values() {
        assert_eq!(brute_inner_count(6, 3).unwrap(), BigUint::from(7u8));
        assert_eq!(brute_inner_count(0, 3).unwrap(), BigUint::from(1u8));
        assert_eq!(brute_inner_count(1, 3).unwrap(), BigUint::from(0u8));
    }

    #[test]
    fn brute_refuses_oversized_lengths() {
        assert!(matches!(
            brute_inner_count(25, 3),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn pairwise_checks_refuse_oversized_sets() {
        let strings = vec![bs("10"); MAX_VERIFY_SET + 1];
        assert!(matches!(
            verify_string_set(&strings),
            Err(Error::Refused(_))
        ));
        let stacked = BinaryMatrix::from_strs(&["10"]).unwrap();
        let matrices = vec![stacked; MAX_VERIFY_SET + 1];
        assert!(matches!(
            verify_matrix_family(&matrices, OverlapMode::Strict),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn brute_strings_agree_with_the_generator() {
        for k in 3..=5 {
            let params = RunParams::new(k).unwrap();
            for len in 0..=10 {
                assert_eq!(
                    brute_inner_strings(len, k).unwrap(),
                    bitstring::inner_strings(len, params),
                    "k={k} len={len}"
                );
            }
        }
    }

    #[test]
    fn string_witnesses_all_pass() {
        let outcomes = string_expansion_witnesses(13, k3()).unwrap();
        assert_eq!(outcomes.len(), 8);
        assert_eq!(outcomes[0].candidate, bs("111000"));
        assert!(outcomes.iter().all(|o| o.self_ok && o.set_ok));
    }

    #[test]
    fn string_witnesses_at_the_lower_edge() {
        for k in 3..=4 {
            let params = RunParams::new(k).unwrap();
            let outcomes = string_expansion_witnesses(2 * k, params).unwrap();
            assert_eq!(outcomes.len(), 1);
            assert!(outcomes[0].set_ok);
        }
        assert!(string_expansion_witnesses(5, k3()).is_err());
    }

    #[test]
    fn matrix_witnesses_all_pass() {
        let outcomes = matrix_expansion_witnesses(4, 13, k3()).unwrap();
        assert_eq!(outcomes.len(), 5);
        assert!(outcomes.iter().all(|o| o.self_ok && o.set_ok));
        assert_eq!(
            *outcomes[0].candidate.row(0),
            bs("111011000"),
            "first witness sits on the 9-column canonical top row"
        );
        assert_eq!(*outcomes[0].candidate.row(1), bs("111110000"));
    }

    #[test]
    fn matrix_witnesses_need_a_valid_width() {
        assert!(matrix_expansion_witnesses(2, 8, k3()).is_err());
    }

    #[test]
    fn reconcile_v_family_agrees() {
        let params = FamilyParams::v(3, 4, 13);
        let report = reconcile_counts(&params).unwrap();
        assert!(report.agrees());
        assert_eq!(report.total_enumerated(), BigUint::from(113u8));
        assert_eq!(report.total_formula(), BigInt::from(113));
        assert_eq!(report.total_published(), None);
    }

    #[test]
    fn reconcile_two_row_cells_are_zero_or_one() {
        let report = reconcile_counts(&FamilyParams::v(3, 2, 14)).unwrap();
        for cell in &report.cells {
            assert!(cell.enumerated <= BigUint::one());
        }
        assert!(report.agrees());
    }

    #[test]
    fn reconcile_d_family_flags_the_published_form() {
        let report = reconcile_counts(&FamilyParams::d(3, 8)).unwrap();
        assert!(report.agrees());
        assert_eq!(report.total_enumerated(), BigUint::from(5u8));
        assert_eq!(report.total_published(), Some(BigInt::from(36)));
        assert!(report
            .cells
            .iter()
            .any(|c| c.published_agrees() == Some(false)));
    }

    #[test]
    fn violations_serialize_with_their_witness() {
        let violations = verify_string_set(&[bs("101")]).unwrap();
        let text = serde_json::to_string(&violations[0]).unwrap();
        assert_eq!(text, r#"{"left":0,"right":0,"witness":{"overlap_length":1}}"#);
    }
}
