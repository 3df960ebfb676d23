//! OEIS b-file reading and writing, plus cross-checks of generated
//! sequences against locally supplied reference files. No network access:
//! reference b-files are ordinary local files.
//!
//! The b-file format accepted here: optional `#`-prefixed comment lines,
//! blank lines ignored, data lines of the form `index value` with
//! arbitrary surrounding whitespace, and indices contiguous ascending.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::exact::WholeNumber;
use crate::sequences::SequenceSlice;
use crate::{Error, Result};

/// Parsed b-file: contiguous `(index, value)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub pairs: Vec<(i64, WholeNumber)>,
    pub source: String,
}

impl BFile {
    pub fn start_index(&self) -> Option<i64> {
        self.pairs.first().map(|(i, _)| *i)
    }

    pub fn values(&self) -> impl Iterator<Item = &WholeNumber> {
        self.pairs.iter().map(|(_, v)| v)
    }
}

/// Linearization used when a 2-D table is compared against a 1-D b-file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReadOrder {
    /// Antidiagonals (0,0), (0,1), (1,0), ... — the common OEIS layout
    /// for square arrays.
    #[default]
    Antidiagonal,
    /// Row-major.
    Row,
}

/// How a generated sequence lines up against a reference b-file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    /// Index printed for the first generated term when emitting.
    pub offset: i64,
    /// Leading reference terms to ignore (bridges the `1, C(p,2), ...`
    /// versus `1, 1, C(p,2), ...` starting conventions).
    pub prefix_skip: usize,
    pub read_order: ReadOrder,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            offset: 0,
            prefix_skip: 0,
            read_order: ReadOrder::Antidiagonal,
        }
    }
}

/// Outcome of a cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Match { compared: usize },
    Mismatch { position: usize, reference_index: i64, expected: WholeNumber, actual: WholeNumber },
    /// No overlapping terms after skipping; neither a pass nor a failure.
    Inconclusive,
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckOutcome::Match { compared } => write!(f, "match over {compared} terms"),
            CheckOutcome::Mismatch {
                position,
                reference_index,
                expected,
                actual,
            } => write!(
                f,
                "mismatch at position {position} (reference index {reference_index}): reference has {expected}, generated has {actual}"
            ),
            CheckOutcome::Inconclusive => write!(f, "inconclusive: no overlapping terms"),
        }
    }
}

/// Parses b-file text. Reports the first malformed line or index gap.
pub fn read_bfile(text: &str, source: &str) -> Result<BFile> {
    let mut pairs: Vec<(i64, WholeNumber)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (index_str, value_str) = match (fields.next(), fields.next(), fields.next()) {
            (Some(i), Some(v), None) => (i, v),
            _ => {
                return Err(Error::BFile {
                    line: lineno + 1,
                    msg: format!("expected 'index value', got {line:?}"),
                })
            }
        };
        let index: i64 = index_str.parse().map_err(|_| Error::BFile {
            line: lineno + 1,
            msg: format!("bad index {index_str:?}"),
        })?;
        let value: BigInt = value_str.parse().map_err(|_| Error::BFile {
            line: lineno + 1,
            msg: format!("bad value {value_str:?}"),
        })?;
        if let Some((prev, _)) = pairs.last() {
            if index != prev + 1 {
                return Err(Error::BFile {
                    line: lineno + 1,
                    msg: format!("non-contiguous index: {prev} followed by {index}"),
                });
            }
        }
        pairs.push((index, value));
    }
    Ok(BFile {
        pairs,
        source: source.to_string(),
    })
}

/// Canonical b-file text for a sequence slice, indices starting at
/// `offset`, newline-terminated.
pub fn write_bfile(seq: &SequenceSlice, offset: i64) -> String {
    let mut out = String::new();
    for (k, v) in seq.values.iter().enumerate() {
        writeln!(out, "{} {}", offset + k as i64, v).expect("string write cannot fail");
    }
    out
}

/// Compares generated terms against a reference b-file under the given
/// configuration. The comparison is positional: generated term `k` is
/// matched with reference term `prefix_skip + k`.
pub fn cross_check(generated: &[WholeNumber], reference: &BFile, config: &CheckConfig) -> CheckOutcome {
    if reference.pairs.len() <= config.prefix_skip || generated.is_empty() {
        return CheckOutcome::Inconclusive;
    }
    let tail = &reference.pairs[config.prefix_skip..];
    let overlap = tail.len().min(generated.len());
    if overlap == 0 {
        return CheckOutcome::Inconclusive;
    }
    for k in 0..overlap {
        let (ref_index, expected) = &tail[k];
        if expected != &generated[k] {
            return CheckOutcome::Mismatch {
                position: k,
                reference_index: *ref_index,
                expected: expected.clone(),
                actual: generated[k].clone(),
            };
        }
    }
    CheckOutcome::Match { compared: overlap }
}

/// One entry of the A-number mapping configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MappingEntry {
    Known {
        family: String,
        p: u32,
        q: u32,
        config: CheckConfig,
    },
    /// Listed in the source material without a stated correspondence;
    /// fill in from local b-file inspection before use.
    Unverified,
}

/// Parses the A-number mapping file. Format, one entry per line:
///
/// ```text
/// # comment
/// A097188 family=patalan p=3 q=1 offset=0 prefix_skip=0 order=row
/// A248324 unverified
/// ```
pub fn read_mapping(text: &str) -> Result<Vec<(String, MappingEntry)>> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let a_number = fields
            .next()
            .ok_or(Error::Mapping {
                line: lineno + 1,
                msg: "missing A-number".into(),
            })?
            .to_string();
        let rest: Vec<&str> = fields.collect();
        if rest == ["unverified"] {
            entries.push((a_number, MappingEntry::Unverified));
            continue;
        }
        let mut family = None;
        let mut p = None;
        let mut q = 1u32;
        let mut config = CheckConfig::default();
        for field in rest {
            let (key, value) = field.split_once('=').ok_or(Error::Mapping {
                line: lineno + 1,
                msg: format!("expected key=value, got {field:?}"),
            })?;
            let bad = |msg: String| Error::Mapping { line: lineno + 1, msg };
            match key {
                "family" => family = Some(value.to_string()),
                "p" => p = Some(value.parse().map_err(|_| bad(format!("bad p {value:?}")))?),
                "q" => q = value.parse().map_err(|_| bad(format!("bad q {value:?}")))?,
                "offset" => {
                    config.offset = value.parse().map_err(|_| bad(format!("bad offset {value:?}")))?
                }
                "prefix_skip" => {
                    config.prefix_skip =
                        value.parse().map_err(|_| bad(format!("bad prefix_skip {value:?}")))?
                }
                "order" => {
                    config.read_order = match value {
                        "antidiagonal" => ReadOrder::Antidiagonal,
                        "row" => ReadOrder::Row,
                        _ => return Err(bad(format!("bad order {value:?}"))),
                    }
                }
                _ => return Err(bad(format!("unknown key {key:?}"))),
            }
        }
        let family = family.ok_or(Error::Mapping {
            line: lineno + 1,
            msg: "missing family=".into(),
        })?;
        let p = p.ok_or(Error::Mapping {
            line: lineno + 1,
            msg: "missing p=".into(),
        })?;
        entries.push((
            a_number,
            MappingEntry::Known {
                family,
                p,
                q,
                config,
            },
        ));
    }
    Ok(entries)
}
