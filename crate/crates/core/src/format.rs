//! Text and JSON-lines forms for string sets and matrix families.
//!
//! Text: one string per line for sets; one row per line with a blank line
//! between matrices for families. JSON: one element per line — a JSON
//! string for a bit string, `{"rows": [...]}` for a matrix — so large
//! families stream.

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

pub fn string_set_to_text(set: &[BitString]) -> String {
    let mut out = String::new();
    for s in set {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}

pub fn string_set_from_text(input: &str) -> Result<Vec<BitString>> {
    input
        .lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| line.trim().parse())
        .collect()
}

pub fn string_set_to_json_lines(set: &[BitString]) -> String {
    let mut out = String::new();
    for s in set {
        out.push_str(&serde_json::to_string(&s.to_string()).expect("strings serialize"));
        out.push('\n');
    }
    out
}

pub fn string_set_from_json_lines(input: &str) -> Result<Vec<BitString>> {
    input
        .lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let s: String = serde_json::from_str(line.trim())
                .map_err(|e| Error::Parse(e.to_string()))?;
            s.parse()
        })
        .collect()
}

pub fn matrix_family_to_text(family: &[BinaryMatrix]) -> String {
    let mut out = String::new();
    for (i, matrix) in family.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&matrix.to_string());
        out.push('\n');
    }
    out
}

pub fn matrix_family_from_text(input: &str) -> Result<Vec<BinaryMatrix>> {
    let mut family = Vec::new();
    let mut block: Vec<BitString> = Vec::new();
    for line in input.lines().chain(std::iter::once("")) {
        let line = line.trim();
        if line.is_empty() {
            if !block.is_empty() {
                family.push(BinaryMatrix::from_rows(std::mem::take(&mut block))?);
            }
        } else {
            block.push(line.parse()?);
        }
    }
    Ok(family)
}

pub fn matrix_family_to_json_lines(family: &[BinaryMatrix]) -> String {
    let mut out = String::new();
    for matrix in family {
        out.push_str(&serde_json::to_string(matrix).expect("matrices serialize"));
        out.push('\n');
    }
    out
}

pub fn matrix_family_from_json_lines(input: &str) -> Result<Vec<BinaryMatrix>> {
    input
        .lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| serde_json::from_str(line.trim()).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}
