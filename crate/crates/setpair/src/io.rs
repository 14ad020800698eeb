//! JSON file formats for systems and partitions.
//!
//! System files: `{"pairs": [{"A": ["x", ...], "B": ["y", ...]}, ...]}` with
//! arbitrary non-empty string labels. Partition files:
//! `{"m": 5, "bicliques": [{"X": [0, 4], "Y": [1, 3]}, ...]}`, 0-based.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::biclique::{Biclique, BicliquePartition};
use crate::system::{SetPairSystem, Side};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("pair {pair}: duplicate label {label:?} in set {side}")]
    DuplicateLabel {
        pair: usize,
        side: Side,
        label: String,
    },
    #[error("pair {pair}: empty label in set {side}")]
    EmptyLabel { pair: usize, side: Side },
    #[error("biclique {biclique}: duplicate index {index} in set {side}")]
    DuplicateIndex {
        biclique: usize,
        side: &'static str,
        index: usize,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    pairs: Vec<PairFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    #[serde(rename = "A")]
    a: Vec<String>,
    #[serde(rename = "B")]
    b: Vec<String>,
}

pub fn system_from_json(text: &str) -> Result<SetPairSystem, ParseError> {
    let file: SystemFile = serde_json::from_str(text)?;
    let mut sys = SetPairSystem::new();
    for (idx, pair) in file.pairs.iter().enumerate() {
        let mut sides = [BTreeSet::new(), BTreeSet::new()];
        for (labels, side, slot) in [(&pair.a, Side::A, 0usize), (&pair.b, Side::B, 1)] {
            for label in labels {
                if label.is_empty() {
                    return Err(ParseError::EmptyLabel { pair: idx, side });
                }
                if !sides[slot].insert(sys.intern(label)) {
                    return Err(ParseError::DuplicateLabel {
                        pair: idx,
                        side,
                        label: label.clone(),
                    });
                }
            }
        }
        let [a_side, b_side] = sides;
        sys.push_pair(a_side, b_side).expect("labels are interned");
    }
    Ok(sys)
}

/// Pretty-printed system file; sets are listed in element-id order, which is
/// the order of first appearance, so output is byte-stable.
pub fn system_to_json(s: &SetPairSystem) -> String {
    let file = SystemFile {
        pairs: s
            .pairs()
            .iter()
            .map(|p| PairFile {
                a: p.a_side.iter().map(|&v| s.label(v).to_owned()).collect(),
                b: p.b_side.iter().map(|&v| s.label(v).to_owned()).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("system files serialize")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionFile {
    m: usize,
    bicliques: Vec<BicliqueFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BicliqueFile {
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "Y")]
    y: Vec<usize>,
}

pub fn partition_from_json(text: &str) -> Result<BicliquePartition, ParseError> {
    let file: PartitionFile = serde_json::from_str(text)?;
    let mut bicliques = Vec::with_capacity(file.bicliques.len());
    for (k, bc) in file.bicliques.iter().enumerate() {
        let mut x_set = BTreeSet::new();
        for &i in &bc.x {
            if !x_set.insert(i) {
                return Err(ParseError::DuplicateIndex {
                    biclique: k,
                    side: "X",
                    index: i,
                });
            }
        }
        let mut y_set = BTreeSet::new();
        for &j in &bc.y {
            if !y_set.insert(j) {
                return Err(ParseError::DuplicateIndex {
                    biclique: k,
                    side: "Y",
                    index: j,
                });
            }
        }
        bicliques.push(Biclique { x_set, y_set });
    }
    Ok(BicliquePartition {
        m: file.m,
        bicliques,
    })
}

pub fn partition_to_json(p: &BicliquePartition) -> String {
    let file = PartitionFile {
        m: p.m,
        bicliques: p
            .bicliques
            .iter()
            .map(|bc| BicliqueFile {
                x: bc.x_set.iter().copied().collect(),
                y: bc.y_set.iter().copied().collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("partition files serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complementary_five_cycles;

    fn label_sets(s: &crate::system::SetPairSystem) -> Vec<(Vec<String>, Vec<String>)> {
        s.pairs()
            .iter()
            .map(|p| {
                let mut a: Vec<String> =
                    p.a_side.iter().map(|&v| s.label(v).to_owned()).collect();
                let mut b: Vec<String> =
                    p.b_side.iter().map(|&v| s.label(v).to_owned()).collect();
                a.sort();
                b.sort();
                (a, b)
            })
            .collect()
    }

    #[test]
    fn system_round_trip_preserves_label_structure() {
        // Ids are reassigned in order of first appearance in the file, so
        // the round trip preserves labelled sets, and parse∘write is the
        // identity once ids are in that normal form.
        let s = complementary_five_cycles();
        let back = system_from_json(&system_to_json(&s)).unwrap();
        assert_eq!(label_sets(&back), label_sets(&s));
        let again = system_from_json(&system_to_json(&back)).unwrap();
        assert_eq!(again, back);
    }

    #[test]
    fn parse_rejects_duplicate_label_with_pair_index() {
        let text = r#"{"pairs": [{"A": ["x"], "B": ["y"]}, {"A": ["z", "z"], "B": ["x"]}]}"#;
        match system_from_json(text).unwrap_err() {
            ParseError::DuplicateLabel { pair, side, label } => {
                assert_eq!((pair, side, label.as_str()), (1, Side::A, "z"));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn parse_rejects_empty_label() {
        let text = r#"{"pairs": [{"A": [""], "B": ["y"]}]}"#;
        assert!(matches!(
            system_from_json(text).unwrap_err(),
            ParseError::EmptyLabel { pair: 0, side: Side::A }
        ));
    }

    #[test]
    fn parse_rejects_unknown_fields() {
        let text = r#"{"pairs": [], "extra": 1}"#;
        assert!(matches!(
            system_from_json(text).unwrap_err(),
            ParseError::Json(_)
        ));
    }

    #[test]
    fn partition_round_trip() {
        let text = r#"{"m": 2, "bicliques": [{"X": [0], "Y": [1]}, {"X": [1], "Y": [0]}]}"#;
        let p = partition_from_json(text).unwrap();
        assert_eq!(p.m, 2);
        assert_eq!(p.bicliques.len(), 2);
        let back = partition_from_json(&partition_to_json(&p)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn partition_rejects_duplicate_index() {
        let text = r#"{"m": 2, "bicliques": [{"X": [0, 0], "Y": [1]}]}"#;
        assert!(matches!(
            partition_from_json(text).unwrap_err(),
            ParseError::DuplicateIndex { biclique: 0, side: "X", index: 0 }
        ));
    }
}
