//! Crown graphs, biclique partitions with thickness accounting, and the
//! two-way translation between partitions and 1-cross intersecting systems.
//!
//! The crown graph on 2m vertices is K_{m,m} minus a perfect matching; its
//! edges are the ordered pairs (i, j) with i ≠ j. A biclique partition of it
//! corresponds to a 1-cross intersecting system: biclique k becomes ground
//! element k, with A_i collecting the bicliques whose X side contains i and
//! B_i those whose Y side contains i.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::constructions::free_elements;
use crate::system::{ElementId, SetPairSystem, VerifyMode};

/// K_{m,m} minus a perfect matching, described by m alone.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CrownGraph {
    m: usize,
}

impl CrownGraph {
    pub fn new(m: usize) -> CrownGraph {
        CrownGraph { m }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.m * self.m.saturating_sub(1)
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        i < self.m && j < self.m && i != j
    }

    /// Edges in row-major order: by x index, then y index.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.m;
        (0..m).flat_map(move |i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
    }
}

/// One complete bipartite block: every x in `x_set` joined to every y in
/// `y_set`. Valid bicliques have nonempty disjoint sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Biclique {
    pub x_set: BTreeSet<usize>,
    pub y_set: BTreeSet<usize>,
}

impl Biclique {
    pub fn new(x_set: BTreeSet<usize>, y_set: BTreeSet<usize>) -> Biclique {
        Biclique { x_set, y_set }
    }

    pub fn edge_count(&self) -> usize {
        self.x_set.len() * self.y_set.len()
    }
}

/// A candidate partition of the crown graph's edges; whether it actually is
/// one is decided by [`verify_partition`], not by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BicliquePartition {
    pub m: usize,
    pub bicliques: Vec<Biclique>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionViolation {
    /// Biclique `biclique` has an empty X or Y side.
    EmptySide { biclique: usize },
    /// `index` lies in both sides of `biclique`, covering a diagonal edge.
    DiagonalIndex { biclique: usize, index: usize },
    /// `index` is not a vertex of the crown graph.
    IndexOutOfRange { biclique: usize, index: usize },
    /// Edge covered by two bicliques.
    EdgeCoveredTwice {
        edge: (usize, usize),
        first: usize,
        second: usize,
    },
    /// Edge of the crown graph covered by no biclique.
    EdgeUncovered { edge: (usize, usize) },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::EmptySide { biclique } => {
                write!(f, "biclique {biclique} has an empty side")
            }
            PartitionViolation::DiagonalIndex { biclique, index } => {
                write!(f, "biclique {biclique} contains index {index} on both sides")
            }
            PartitionViolation::IndexOutOfRange { biclique, index } => {
                write!(f, "biclique {biclique} references out-of-range index {index}")
            }
            PartitionViolation::EdgeCoveredTwice {
                edge,
                first,
                second,
            } => write!(
                f,
                "edge (x{}, y{}) is covered by bicliques {first} and {second}",
                edge.0, edge.1
            ),
            PartitionViolation::EdgeUncovered { edge } => {
                write!(f, "edge (x{}, y{}) is uncovered", edge.0, edge.1)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionReport {
    pub m: usize,
    pub violations: Vec<PartitionViolation>,
}

impl PartitionReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BicliqueError {
    #[error("partition is not verified: {0}")]
    UnverifiedPartition(PartitionViolation),
    #[error("system is not 1-cross intersecting (pair {i} vs {j})")]
    NotOneCross { i: usize, j: usize },
    #[error("element {label:?} occurs in no cross intersection")]
    FreeElement { label: String },
}

/// Checks biclique invariants, pairwise edge disjointness and exact coverage
/// of all m(m−1) crown edges. Structural violations come first (by biclique
/// index), then edge violations sorted by edge.
pub fn verify_partition(p: &BicliquePartition) -> PartitionReport {
    let mut violations = Vec::new();
    for (k, bc) in p.bicliques.iter().enumerate() {
        if bc.x_set.is_empty() || bc.y_set.is_empty() {
            violations.push(PartitionViolation::EmptySide { biclique: k });
        }
        for &i in bc.x_set.iter().chain(bc.y_set.iter()) {
            if i >= p.m {
                violations.push(PartitionViolation::IndexOutOfRange {
                    biclique: k,
                    index: i,
                });
            }
        }
        for &i in bc.x_set.intersection(&bc.y_set) {
            violations.push(PartitionViolation::DiagonalIndex {
                biclique: k,
                index: i,
            });
        }
    }

    let mut cover: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut edge_violations = Vec::new();
    let crown = CrownGraph::new(p.m);
    for (k, bc) in p.bicliques.iter().enumerate() {
        for &i in &bc.x_set {
            for &j in &bc.y_set {
                if !crown.is_edge(i, j) {
                    continue;
                }
                if let Some(&first) = cover.get(&(i, j)) {
                    edge_violations.push(PartitionViolation::EdgeCoveredTwice {
                        edge: (i, j),
                        first,
                        second: k,
                    });
                } else {
                    cover.insert((i, j), k);
                }
            }
        }
    }
    for edge in crown.edges() {
        if !cover.contains_key(&edge) {
            edge_violations.push(PartitionViolation::EdgeUncovered { edge });
        }
    }
    edge_violations.sort_by_key(|v| match *v {
        PartitionViolation::EdgeCoveredTwice { edge, second, .. } => (edge, second),
        PartitionViolation::EdgeUncovered { edge } => (edge, 0),
        _ => unreachable!(),
    });
    violations.extend(edge_violations);
    PartitionReport { m: p.m, violations }
}

/// Thickness at every vertex: how many bicliques contain x_i, and how many
/// contain y_i.
pub fn thickness(p: &BicliquePartition) -> (Vec<usize>, Vec<usize>) {
    let mut tx = vec![0usize; p.m];
    let mut ty = vec![0usize; p.m];
    for bc in &p.bicliques {
        for &i in &bc.x_set {
            if i < p.m {
                tx[i] += 1;
            }
        }
        for &j in &bc.y_set {
            if j < p.m {
                ty[j] += 1;
            }
        }
    }
    (tx, ty)
}

/// Translates a verified partition into the system whose ground element k is
/// biclique k: `A_i = {k : i ∈ X_k}`, `B_i = {k : i ∈ Y_k}`. The result is
/// always 1-cross intersecting.
pub fn partition_to_system(p: &BicliquePartition) -> Result<SetPairSystem, BicliqueError> {
    let report = verify_partition(p);
    if let Some(&first) = report.violations.first() {
        return Err(BicliqueError::UnverifiedPartition(first));
    }
    let mut sys = SetPairSystem::new();
    let ids: Vec<ElementId> = (0..p.bicliques.len())
        .map(|k| sys.intern(&k.to_string()))
        .collect();
    for i in 0..p.m {
        let a_side: BTreeSet<ElementId> = p
            .bicliques
            .iter()
            .enumerate()
            .filter(|(_, bc)| bc.x_set.contains(&i))
            .map(|(k, _)| ids[k])
            .collect();
        let b_side: BTreeSet<ElementId> = p
            .bicliques
            .iter()
            .enumerate()
            .filter(|(_, bc)| bc.y_set.contains(&i))
            .map(|(k, _)| ids[k])
            .collect();
        sys.push_pair(a_side, b_side).expect("ids are interned");
    }
    debug_assert!(sys.verify(VerifyMode::OneCross).is_clean());
    Ok(sys)
}

/// Translates a normalized 1-cross system into a biclique partition of the
/// crown graph on 2m vertices: element v becomes the biclique
/// `X = {i : v ∈ A_i}`, `Y = {j : v ∈ B_j}`, bicliques in element order.
///
/// Requires the system to verify 1-cross clean and to have no free elements
/// (every element occurs in some cross intersection).
pub fn system_to_partition(s: &SetPairSystem) -> Result<BicliquePartition, BicliqueError> {
    let report = s.verify(VerifyMode::OneCross);
    if let Some(v) = report.violations.first() {
        return Err(BicliqueError::NotOneCross { i: v.i, j: v.j });
    }
    if let Some(&v) = free_elements(s).first() {
        return Err(BicliqueError::FreeElement {
            label: s.label(v).to_owned(),
        });
    }
    let bicliques = s
        .ground_set()
        .iter()
        .map(|&v| {
            let x_set = (0..s.len()).filter(|&i| s.pair(i).a_side.contains(&v)).collect();
            let y_set = (0..s.len()).filter(|&j| s.pair(j).b_side.contains(&v)).collect();
            Biclique::new(x_set, y_set)
        })
        .collect();
    let p = BicliquePartition {
        m: s.len(),
        bicliques,
    };
    debug_assert!(verify_partition(&p).is_clean());
    Ok(p)
}
