//! Set pair systems and the basic predicates over them.
//!
//! A system is an indexed list of pairs `(A_i, B_i)` of finite sets over a
//! shared ground set. Elements are interned: each system maps dense
//! [`ElementId`]s to string labels, which keeps set operations cheap while
//! staying round-trippable through the JSON file format.
//!
//! The type imposes no intersection conditions; those are checked by
//! [`SetPairSystem::verify`] and reported as data, not errors.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::rat::Rat;

/// Dense handle for one ground-set element of a particular system.
///
/// Ids are stable within a system: every operation that derives a new system
/// (reduce, subsystem, padding) preserves the interner, so ids can be carried
/// across those calls.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(pub(crate) u32);

impl ElementId {
    /// Raw id for position `ix` of a system's label table. Only meaningful
    /// for the system the index came from.
    pub fn from_index(ix: usize) -> ElementId {
        ElementId(ix as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Which side of a pair an operation refers to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

/// One indexed pair `(A_i, B_i)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SetPair {
    pub a_side: BTreeSet<ElementId>,
    pub b_side: BTreeSet<ElementId>,
}

impl SetPair {
    pub fn new(a_side: BTreeSet<ElementId>, b_side: BTreeSet<ElementId>) -> SetPair {
        SetPair { a_side, b_side }
    }

    pub fn side(&self, side: Side) -> &BTreeSet<ElementId> {
        match side {
            Side::A => &self.a_side,
            Side::B => &self.b_side,
        }
    }

    /// `(|A|, |B|)`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.a_side.len(), self.b_side.len())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemError {
    #[error("pair {pair}: duplicate label {label:?} in set {side}")]
    DuplicateLabel {
        pair: usize,
        side: Side,
        label: String,
    },
    #[error("label {0:?} is already interned")]
    LabelExists(String),
    #[error("subsystem index {index} is out of range for a system of {len} pairs")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("pair references element id {id} but only {len} labels are interned")]
    UnknownElement { id: u32, len: usize },
}

/// An indexed family of set pairs over an interned element universe.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SetPairSystem {
    pairs: Vec<SetPair>,
    labels: Vec<String>,
}

impl SetPairSystem {
    /// The empty system: no pairs, no interned elements.
    pub fn new() -> SetPairSystem {
        SetPairSystem::default()
    }

    /// Builds a system from labelled pairs, interning labels in order of
    /// first appearance. A label repeated within one set is rejected.
    pub fn from_label_pairs(pairs: &[(&[&str], &[&str])]) -> Result<SetPairSystem, SystemError> {
        let mut sys = SetPairSystem::new();
        for (idx, (a, b)) in pairs.iter().enumerate() {
            let mut a_side = BTreeSet::new();
            for label in *a {
                if !a_side.insert(sys.intern(label)) {
                    return Err(SystemError::DuplicateLabel {
                        pair: idx,
                        side: Side::A,
                        label: (*label).to_owned(),
                    });
                }
            }
            let mut b_side = BTreeSet::new();
            for label in *b {
                if !b_side.insert(sys.intern(label)) {
                    return Err(SystemError::DuplicateLabel {
                        pair: idx,
                        side: Side::B,
                        label: (*label).to_owned(),
                    });
                }
            }
            sys.pairs.push(SetPair::new(a_side, b_side));
        }
        Ok(sys)
    }

    /// Returns the id for `label`, interning it if new.
    pub fn intern(&mut self, label: &str) -> ElementId {
        if let Some(id) = self.element(label) {
            return id;
        }
        self.labels.push(label.to_owned());
        ElementId((self.labels.len() - 1) as u32)
    }

    /// Interns a label that must not exist yet.
    pub fn add_label(&mut self, label: &str) -> Result<ElementId, SystemError> {
        if self.element(label).is_some() {
            return Err(SystemError::LabelExists(label.to_owned()));
        }
        Ok(self.intern(label))
    }

    /// Appends a pair; every id must already be interned.
    pub fn push_pair(
        &mut self,
        a_side: BTreeSet<ElementId>,
        b_side: BTreeSet<ElementId>,
    ) -> Result<(), SystemError> {
        for &ElementId(id) in a_side.iter().chain(b_side.iter()) {
            if id as usize >= self.labels.len() {
                return Err(SystemError::UnknownElement {
                    id,
                    len: self.labels.len(),
                });
            }
        }
        self.pairs.push(SetPair::new(a_side, b_side));
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[SetPair] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> &SetPair {
        &self.pairs[i]
    }

    pub(crate) fn pair_mut(&mut self, i: usize) -> &mut SetPair {
        &mut self.pairs[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: ElementId) -> &str {
        &self.labels[id.index()]
    }

    pub fn element(&self, label: &str) -> Option<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| ElementId(i as u32))
    }

    /// The ground set: the union of all sets of the system. Interned labels
    /// that occur in no pair are not part of it.
    pub fn ground_set(&self) -> BTreeSet<ElementId> {
        let mut out = BTreeSet::new();
        for p in &self.pairs {
            out.extend(p.a_side.iter().copied());
            out.extend(p.b_side.iter().copied());
        }
        out
    }

    /// Checks the cross or 1-cross intersection conditions and reports every
    /// violation with its witnessing elements.
    pub fn verify(&self, mode: VerifyMode) -> VerificationReport {
        let mut violations = Vec::new();
        for (i, p) in self.pairs.iter().enumerate() {
            let overlap: BTreeSet<ElementId> =
                p.a_side.intersection(&p.b_side).copied().collect();
            if !overlap.is_empty() {
                violations.push(Violation {
                    kind: ViolationKind::Disjointness,
                    i,
                    j: i,
                    witness: overlap,
                });
            }
        }
        for i in 0..self.pairs.len() {
            for j in 0..self.pairs.len() {
                if i == j {
                    continue;
                }
                let inter: BTreeSet<ElementId> = self.pairs[i]
                    .a_side
                    .intersection(&self.pairs[j].b_side)
                    .copied()
                    .collect();
                match mode {
                    VerifyMode::Cross => {
                        if inter.is_empty() {
                            violations.push(Violation {
                                kind: ViolationKind::EmptyIntersection,
                                i,
                                j,
                                witness: inter,
                            });
                        }
                    }
                    VerifyMode::OneCross => {
                        if inter.is_empty() {
                            violations.push(Violation {
                                kind: ViolationKind::EmptyIntersection,
                                i,
                                j,
                                witness: inter,
                            });
                        } else if inter.len() > 1 {
                            violations.push(Violation {
                                kind: ViolationKind::MultiIntersection,
                                i,
                                j,
                                witness: inter,
                            });
                        }
                    }
                }
            }
        }
        VerificationReport { mode, violations }
    }

    /// The weight functional: sum over pairs of `1 / C(|A|+|B|, |A|)`.
    pub fn sigma(&self) -> Rat {
        self.pairs
            .iter()
            .map(|p| {
                let (a, b) = p.sizes();
                Rat::binom_recip((a + b) as u64, a as u64)
            })
            .sum()
    }

    /// Removes the elements of `r` from every set. Ids outside the ground
    /// set are ignored, so `reduce(s, r) = reduce(s, r ∩ V(s))`.
    pub fn reduce(&self, r: &BTreeSet<ElementId>) -> SetPairSystem {
        let pairs = self
            .pairs
            .iter()
            .map(|p| {
                SetPair::new(
                    p.a_side.difference(r).copied().collect(),
                    p.b_side.difference(r).copied().collect(),
                )
            })
            .collect();
        SetPairSystem {
            pairs,
            labels: self.labels.clone(),
        }
    }

    /// Keeps only the pairs whose index lies in `indices`; the result records
    /// which original index each kept pair came from.
    pub fn subsystem(&self, indices: &BTreeSet<usize>) -> Result<Subsystem, SystemError> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.pairs.len()) {
            return Err(SystemError::IndexOutOfRange {
                index: bad,
                len: self.pairs.len(),
            });
        }
        let original_indices: Vec<usize> = indices.iter().copied().collect();
        let pairs = original_indices
            .iter()
            .map(|&i| self.pairs[i].clone())
            .collect();
        Ok(Subsystem {
            system: SetPairSystem {
                pairs,
                labels: self.labels.clone(),
            },
            original_indices,
        })
    }

    /// `{i : v ∉ A_i}` for side A, `{i : v ∉ B_i}` for side B.
    pub fn indices_avoiding(&self, v: ElementId, side: Side) -> BTreeSet<usize> {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.side(side).contains(&v))
            .map(|(i, _)| i)
            .collect()
    }

    /// True when some element bijection maps this system onto `other` with
    /// all pair indices fixed.
    ///
    /// With indices fixed, an element is interchangeable exactly with the
    /// elements that have the same incidence signature, so the systems match
    /// iff the multisets of signatures agree.
    pub fn element_isomorphic(&self, other: &SetPairSystem) -> bool {
        if self.len() != other.len() {
            return false;
        }
        fn signatures(s: &SetPairSystem) -> Vec<Vec<(usize, Side)>> {
            let mut sigs: Vec<Vec<(usize, Side)>> = s
                .ground_set()
                .iter()
                .map(|v| {
                    let mut sig = Vec::new();
                    for (i, p) in s.pairs.iter().enumerate() {
                        if p.a_side.contains(v) {
                            sig.push((i, Side::A));
                        }
                        if p.b_side.contains(v) {
                            sig.push((i, Side::B));
                        }
                    }
                    sig
                })
                .collect();
            sigs.sort();
            sigs
        }
        signatures(self) == signatures(other)
    }
}

/// A subsystem together with the original index of each kept pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subsystem {
    pub system: SetPairSystem,
    /// Sorted; pair `k` of `system` is pair `original_indices[k]` of the parent.
    pub original_indices: Vec<usize>,
}

/// Which family of intersection conditions to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyMode {
    /// `A_i ∩ B_i = ∅` and `A_i ∩ B_j ≠ ∅` for `i ≠ j`.
    Cross,
    /// `A_i ∩ B_i = ∅` and `|A_i ∩ B_j| = 1` for `i ≠ j`.
    OneCross,
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyMode::Cross => write!(f, "cross"),
            VerifyMode::OneCross => write!(f, "one-cross"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationKind {
    /// `A_i ∩ B_i ≠ ∅`; the witness is that intersection.
    Disjointness,
    /// `A_i ∩ B_j = ∅` for `i ≠ j`.
    EmptyIntersection,
    /// `|A_i ∩ B_j| ≥ 2` for `i ≠ j`; the witness is the intersection.
    MultiIntersection,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::Disjointness => write!(f, "disjointness"),
            ViolationKind::EmptyIntersection => write!(f, "empty-intersection"),
            ViolationKind::MultiIntersection => write!(f, "multi-intersection"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    pub i: usize,
    pub j: usize,
    pub witness: BTreeSet<ElementId>,
}

/// Outcome of [`SetPairSystem::verify`]: an empty violation list means the
/// system satisfies the mode's conditions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub mode: VerifyMode,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complementary_five_cycles;

    fn ids(sys: &SetPairSystem, labels: &[&str]) -> BTreeSet<ElementId> {
        labels.iter().map(|l| sys.element(l).unwrap()).collect()
    }

    #[test]
    fn ground_set_of_empty_system_is_empty() {
        assert!(SetPairSystem::new().ground_set().is_empty());
    }

    #[test]
    fn ground_set_of_five_cycles() {
        let s = complementary_five_cycles();
        let labels: BTreeSet<&str> = s.ground_set().iter().map(|&v| s.label(v)).collect();
        assert_eq!(labels, ["0", "1", "2", "3", "4"].into_iter().collect());
    }

    #[test]
    fn ground_set_of_single_pair() {
        let s = SetPairSystem::from_label_pairs(&[(&["1", "2"], &["3"])]).unwrap();
        assert_eq!(s.ground_set(), ids(&s, &["1", "2", "3"]));
    }

    #[test]
    fn duplicate_label_in_one_set_is_rejected() {
        let err = SetPairSystem::from_label_pairs(&[(&["x", "x"], &["y"])]).unwrap_err();
        assert_eq!(
            err,
            SystemError::DuplicateLabel {
                pair: 0,
                side: Side::A,
                label: "x".to_owned(),
            }
        );
    }

    #[test]
    fn five_cycles_is_one_cross() {
        let s = complementary_five_cycles();
        assert!(s.verify(VerifyMode::OneCross).is_clean());
        assert!(s.verify(VerifyMode::Cross).is_clean());
    }

    #[test]
    fn single_pair_is_vacuously_one_cross() {
        let s = SetPairSystem::from_label_pairs(&[(&["1", "2"], &["3", "4"])]).unwrap();
        assert!(s.verify(VerifyMode::OneCross).is_clean());
    }

    #[test]
    fn verify_reports_disjointness_violation() {
        let s = SetPairSystem::from_label_pairs(&[(&["1", "2"], &["2", "3"])]).unwrap();
        let report = s.verify(VerifyMode::Cross);
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.kind, ViolationKind::Disjointness);
        assert_eq!((v.i, v.j), (0, 0));
        assert_eq!(v.witness, ids(&s, &["2"]));
    }

    #[test]
    fn sigma_of_five_cycles_is_five_sixths() {
        assert_eq!(complementary_five_cycles().sigma(), Rat::new(5, 6));
    }

    #[test]
    fn sigma_of_empty_system_is_zero() {
        assert_eq!(SetPairSystem::new().sigma(), Rat::zero());
    }

    #[test]
    fn reduce_by_nothing_is_identity() {
        let s = complementary_five_cycles();
        assert_eq!(s.reduce(&BTreeSet::new()), s);
    }

    #[test]
    fn reduce_five_cycles_by_zero() {
        // Expected pairs derived from A_i = {i, i+1}, B_i = {i-1, i+2} mod 5
        // with element 0 deleted everywhere.
        let s = complementary_five_cycles();
        let reduced = s.reduce(&ids(&s, &["0"]));
        let expect = |a: &[&str], b: &[&str]| {
            SetPair::new(ids(&s, a), ids(&s, b))
        };
        assert_eq!(reduced.pair(0), &expect(&["1"], &["4", "2"]));
        assert_eq!(reduced.pair(1), &expect(&["1", "2"], &["3"]));
        assert_eq!(reduced.pair(2), &expect(&["2", "3"], &["1", "4"]));
        assert_eq!(reduced.pair(3), &expect(&["3", "4"], &["2"]));
        assert_eq!(reduced.pair(4), &expect(&["4"], &["3", "1"]));
    }

    #[test]
    fn reduce_can_empty_a_pair() {
        let s = SetPairSystem::from_label_pairs(&[(&["1", "2"], &["3"])]).unwrap();
        let reduced = s.reduce(&ids(&s, &["1", "2", "3"]));
        assert_eq!(reduced.pair(0), &SetPair::default());
    }

    #[test]
    fn subsystem_of_all_indices_is_identity() {
        let s = complementary_five_cycles();
        let all: BTreeSet<usize> = (0..s.len()).collect();
        let sub = s.subsystem(&all).unwrap();
        assert_eq!(sub.system, s);
        assert_eq!(sub.original_indices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn subsystem_of_first_two_five_cycle_pairs() {
        let s = complementary_five_cycles();
        let sub = s.subsystem(&[0usize, 1].into_iter().collect()).unwrap();
        assert_eq!(sub.system.len(), 2);
        assert_eq!(
            sub.system.pair(0),
            &SetPair::new(ids(&s, &["0", "1"]), ids(&s, &["4", "2"]))
        );
        assert_eq!(
            sub.system.pair(1),
            &SetPair::new(ids(&s, &["1", "2"]), ids(&s, &["0", "3"]))
        );
    }

    #[test]
    fn subsystem_of_no_indices_is_empty() {
        let s = complementary_five_cycles();
        let sub = s.subsystem(&BTreeSet::new()).unwrap();
        assert!(sub.system.is_empty());
    }

    #[test]
    fn subsystem_index_out_of_range() {
        let s = complementary_five_cycles();
        let err = s.subsystem(&[7usize].into_iter().collect()).unwrap_err();
        assert_eq!(err, SystemError::IndexOutOfRange { index: 7, len: 5 });
    }

    #[test]
    fn indices_avoiding_unknown_element_is_everything() {
        let mut s = complementary_five_cycles();
        let fresh = s.intern("9");
        assert_eq!(
            s.indices_avoiding(fresh, Side::A),
            (0..5).collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn indices_avoiding_in_five_cycles() {
        let s = complementary_five_cycles();
        let zero = s.element("0").unwrap();
        assert_eq!(
            s.indices_avoiding(zero, Side::A),
            [1, 2, 3].into_iter().collect()
        );
        assert_eq!(
            s.indices_avoiding(zero, Side::B),
            [0, 2, 4].into_iter().collect()
        );
    }

    #[test]
    fn element_isomorphic_is_label_blind() {
        let s = SetPairSystem::from_label_pairs(&[(&["1"], &["2"]), (&["2"], &["1"])]).unwrap();
        let t = SetPairSystem::from_label_pairs(&[(&["a"], &["b"]), (&["b"], &["a"])]).unwrap();
        let u = SetPairSystem::from_label_pairs(&[(&["a"], &["b"]), (&["a"], &["b"])]).unwrap();
        assert!(s.element_isomorphic(&t));
        assert!(!s.element_isomorphic(&u));
    }
}
