//! Exhaustive extremal search and bound audits.
//!
//! Existence of a 1-cross intersecting system with m pairs and sizes capped
//! by (a, b) is equivalent to a biclique partition of the crown graph on 2m
//! vertices with thickness at most a at every x vertex and at most b at
//! every y vertex. [`exists_system`] decides it by backtracking exact cover
//! over the crown edges; [`brute_force_oracle`] answers the same question by
//! enumerating the systems themselves, giving an independent check.

mod brute;
mod canonical;

pub use brute::brute_force_oracle;
pub use canonical::{canonical_form, CanonicalForm};

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::biclique::{partition_to_system, Biclique, BicliquePartition};
use crate::rat::Rat;
use crate::system::{SetPairSystem, VerifyMode};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("brute force work guard exceeded: {detail}")]
    WorkGuardExceeded { detail: String },
    #[error("search at m = {m} was inconclusive within the node limit")]
    Inconclusive { m: usize },
}

/// How the next uncovered edge is chosen.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum BranchRule {
    /// First uncovered edge in row-major order. Deterministic and cheap;
    /// the default.
    #[default]
    SmallestEdge,
    /// Uncovered edge whose endpoints have the least remaining thickness
    /// budget, ties row-major.
    MostConstrained,
}

/// Parameters of one existence search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchConfig {
    /// Thickness budget at every x vertex (= cap on |A_i|).
    pub a: usize,
    /// Thickness budget at every y vertex (= cap on |B_i|).
    pub b: usize,
    /// Number of pairs, i.e. half the crown graph's vertex count.
    pub m: usize,
    /// Backtracking node budget per top-level branch. Exceeding it yields an
    /// inconclusive outcome, never a false "no".
    pub node_limit: Option<u64>,
    /// Collect all witnesses (deduplicated by canonical form) instead of
    /// stopping at the first.
    pub enumerate_all: bool,
    /// Keep only one root branch per biclique shape; sound because index
    /// permutations act transitively on same-shape root candidates.
    pub symmetry_breaking: bool,
    pub branch_rule: BranchRule,
    /// Worker threads for top-level branches. Outcomes are identical for
    /// every thread count.
    pub threads: usize,
}

impl SearchConfig {
    pub fn new(a: usize, b: usize, m: usize) -> SearchConfig {
        SearchConfig {
            a,
            b,
            m,
            node_limit: None,
            enumerate_all: false,
            symmetry_breaking: true,
            branch_rule: BranchRule::SmallestEdge,
            threads: 1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchStatus {
    WitnessFound,
    ExhaustedNoSolution,
    Inconclusive,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchStatus::WitnessFound => "witness-found",
            SearchStatus::ExhaustedNoSolution => "exhausted-no-solution",
            SearchStatus::Inconclusive => "inconclusive",
        }
    }

    pub fn is_conclusive(&self) -> bool {
        !matches!(self, SearchStatus::Inconclusive)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SearchStats {
    /// Applied branch candidates.
    pub nodes: u64,
    /// Branches rejected because a vertex ran out of thickness budget while
    /// edges at it were still uncovered.
    pub prunes_by_thickness: u64,
    /// Branches rejected because the uncovered edges at some vertex exceed
    /// budget · (m−1), the most its remaining bicliques can cover.
    pub prunes_by_coverage: u64,
    /// Wall time; excluded from determinism guarantees.
    pub elapsed: Duration,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witnesses: Vec<SetPairSystem>,
    pub stats: SearchStats,
}

/// Decides whether an (a, b, m) system exists, by exact cover of the crown
/// graph's edges with thickness-budgeted bicliques.
///
/// Every witness is produced through the partition-to-system translation, so
/// it verifies 1-cross clean and respects the size caps by construction.
pub fn exists_system(cfg: &SearchConfig) -> SearchOutcome {
    let started = Instant::now();
    let mut outcome = run_search(cfg);
    outcome.stats.elapsed = started.elapsed();
    outcome
}

fn run_search(cfg: &SearchConfig) -> SearchOutcome {
    assert!(cfg.m <= 30, "search supports m up to 30");
    assert!(cfg.a >= 1 && cfg.b >= 1, "thickness budgets must be positive");

    let root = Frame::new(cfg);
    let Some(edge) = root.select_edge(cfg.branch_rule) else {
        // No edges to cover (m <= 1): the empty partition is the witness.
        let witness = witness_from(&[], cfg.m);
        return SearchOutcome {
            status: SearchStatus::WitnessFound,
            witnesses: vec![witness],
            stats: SearchStats::default(),
        };
    };
    let mut candidates = root.candidates(edge);
    if cfg.symmetry_breaking {
        // At the root nothing is fixed, so index permutations act
        // transitively on candidates of equal (|X|, |Y|) shape; the first
        // candidate in enumeration order is the colex-minimal orbit member.
        let mut seen = BTreeSet::new();
        candidates.retain(|&(x, y)| seen.insert((x.count_ones(), y.count_ones())));
    }

    let branch_results: Vec<BranchResult> = if cfg.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .expect("thread pool construction");
        pool.install(|| {
            use rayon::prelude::*;
            candidates
                .par_iter()
                .map(|&cand| run_branch(cfg, cand))
                .collect()
        })
    } else if cfg.enumerate_all {
        candidates
            .iter()
            .map(|&cand| run_branch(cfg, cand))
            .collect()
    } else {
        // Sequentially we can stop at the first witness-bearing branch; the
        // fold below ignores everything past it anyway.
        let mut out = Vec::new();
        for &cand in &candidates {
            let r = run_branch(cfg, cand);
            let found = !r.witnesses.is_empty();
            out.push(r);
            if found {
                break;
            }
        }
        out
    };

    merge_branches(cfg, branch_results)
}

struct BranchResult {
    nodes: u64,
    prunes_by_thickness: u64,
    prunes_by_coverage: u64,
    truncated: bool,
    witnesses: Vec<Vec<(u32, u32)>>,
}

fn run_branch(cfg: &SearchConfig, root_candidate: (u32, u32)) -> BranchResult {
    let mut frame = Frame::new(cfg);
    let edge = frame
        .select_edge(cfg.branch_rule)
        .expect("branches exist only when an edge does");
    frame.step(edge, root_candidate);
    BranchResult {
        nodes: frame.nodes,
        prunes_by_thickness: frame.prunes_by_thickness,
        prunes_by_coverage: frame.prunes_by_coverage,
        truncated: frame.truncated,
        witnesses: frame.witnesses,
    }
}

/// Deterministic aggregation in branch order. For a first-witness search the
/// fold stops at the first branch holding a witness; for enumeration every
/// branch contributes and witnesses are deduplicated by canonical form.
fn merge_branches(cfg: &SearchConfig, branches: Vec<BranchResult>) -> SearchOutcome {
    let mut stats = SearchStats::default();
    let mut truncated = false;
    let mut masks: Vec<Vec<(u32, u32)>> = Vec::new();
    for br in branches {
        stats.nodes += br.nodes;
        stats.prunes_by_thickness += br.prunes_by_thickness;
        stats.prunes_by_coverage += br.prunes_by_coverage;
        truncated |= br.truncated;
        let had_witness = !br.witnesses.is_empty();
        masks.extend(br.witnesses);
        if !cfg.enumerate_all && had_witness {
            truncated = false; // existence settled before the cut mattered
            break;
        }
    }

    let mut witnesses = Vec::new();
    let mut seen = BTreeSet::new();
    for mask in &masks {
        let sys = witness_from(mask, cfg.m);
        if cfg.enumerate_all {
            if seen.insert(canonical_form(&sys)) {
                witnesses.push(sys);
            }
        } else {
            witnesses.push(sys);
            break;
        }
    }

    let status = if truncated {
        SearchStatus::Inconclusive
    } else if witnesses.is_empty() {
        SearchStatus::ExhaustedNoSolution
    } else {
        SearchStatus::WitnessFound
    };
    SearchOutcome {
        status,
        witnesses,
        stats,
    }
}

fn witness_from(masks: &[(u32, u32)], m: usize) -> SetPairSystem {
    let bicliques = masks
        .iter()
        .map(|&(x, y)| {
            Biclique::new(
                (0..m).filter(|&i| x & (1 << i) != 0).collect(),
                (0..m).filter(|&j| y & (1 << j) != 0).collect(),
            )
        })
        .collect();
    let partition = BicliquePartition { m, bicliques };
    partition_to_system(&partition).expect("search covers produce clean partitions")
}

struct Frame {
    m: usize,
    enumerate_all: bool,
    node_limit: Option<u64>,
    branch_rule: BranchRule,
    full_mask: u32,
    /// covered[i] has bit j set when edge (x_i, y_j) is covered; the
    /// diagonal bit is preset since (i, i) is not an edge.
    covered: Vec<u32>,
    budget_x: Vec<usize>,
    budget_y: Vec<usize>,
    chosen: Vec<(u32, u32)>,
    nodes: u64,
    prunes_by_thickness: u64,
    prunes_by_coverage: u64,
    truncated: bool,
    done: bool,
    witnesses: Vec<Vec<(u32, u32)>>,
}

impl Frame {
    fn new(cfg: &SearchConfig) -> Frame {
        let full_mask = if cfg.m == 32 { u32::MAX } else { (1u32 << cfg.m) - 1 };
        Frame {
            m: cfg.m,
            enumerate_all: cfg.enumerate_all,
            node_limit: cfg.node_limit,
            branch_rule: cfg.branch_rule,
            full_mask,
            covered: (0..cfg.m).map(|i| 1u32 << i).collect(),
            budget_x: vec![cfg.a; cfg.m],
            budget_y: vec![cfg.b; cfg.m],
            chosen: Vec::new(),
            nodes: 0,
            prunes_by_thickness: 0,
            prunes_by_coverage: 0,
            truncated: false,
            done: false,
            witnesses: Vec::new(),
        }
    }

    fn uncovered_row(&self, i: usize) -> u32 {
        !self.covered[i] & self.full_mask
    }

    fn uncovered_col(&self, j: usize) -> u32 {
        let mut mask = 0u32;
        for i in 0..self.m {
            if self.covered[i] & (1 << j) == 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    fn select_edge(&self, rule: BranchRule) -> Option<(usize, usize)> {
        match rule {
            BranchRule::SmallestEdge => {
                for i in 0..self.m {
                    let row = self.uncovered_row(i);
                    if row != 0 {
                        return Some((i, row.trailing_zeros() as usize));
                    }
                }
                None
            }
            BranchRule::MostConstrained => {
                let mut best: Option<(usize, (usize, usize))> = None;
                for i in 0..self.m {
                    let mut row = self.uncovered_row(i);
                    while row != 0 {
                        let j = row.trailing_zeros() as usize;
                        row &= row - 1;
                        // Least remaining budget first; strict comparison
                        // keeps ties row-major.
                        let key = self.budget_x[i] + self.budget_y[j];
                        if best.as_ref().is_none_or(|&(k, _)| key < k) {
                            best = Some((key, (i, j)));
                        }
                    }
                }
                best.map(|(_, e)| e)
            }
        }
    }

    /// All bicliques (X, Y) with i ∈ X, j ∈ Y, X ∩ Y = ∅, X × Y fully
    /// uncovered and budgets available, ordered by size then colex on X,
    /// then size then colex on Y.
    fn candidates(&self, (i, j): (usize, usize)) -> Vec<(u32, u32)> {
        let avail_x: u32 = (0..self.m)
            .filter(|&x| self.budget_x[x] > 0)
            .map(|x| 1u32 << x)
            .sum();
        if avail_x & (1 << i) == 0 || self.budget_y[j] == 0 {
            return Vec::new();
        }
        let mut xs = subsets_containing(avail_x, i);
        sort_by_size_then_colex(&mut xs);
        let mut out = Vec::new();
        for x in xs {
            // Y may use exactly the vertices with budget whose edge to every
            // chosen x is still uncovered.
            let mut allowed_y = !x & self.full_mask;
            for xi in bits(x) {
                // covered[xi] has the diagonal bit preset, so this also
                // rules out y = xi.
                allowed_y &= !self.covered[xi];
            }
            allowed_y &= (0..self.m)
                .filter(|&y| self.budget_y[y] > 0)
                .map(|y| 1u32 << y)
                .sum::<u32>();
            if allowed_y & (1 << j) == 0 {
                continue;
            }
            let mut ys = subsets_containing(allowed_y, j);
            sort_by_size_then_colex(&mut ys);
            out.extend(ys.into_iter().map(|y| (x, y)));
        }
        out
    }

    fn recurse(&mut self) {
        if self.done || self.truncated {
            return;
        }
        let Some(edge) = self.select_edge(self.branch_rule) else {
            self.witnesses.push(self.chosen.clone());
            if !self.enumerate_all {
                self.done = true;
            }
            return;
        };
        for cand in self.candidates(edge) {
            self.step(edge, cand);
            if self.done || self.truncated {
                return;
            }
        }
    }

    /// Applies one candidate at `edge`, recurses, undoes.
    fn step(&mut self, _edge: (usize, usize), (x, y): (u32, u32)) {
        if let Some(limit) = self.node_limit {
            if self.nodes >= limit {
                self.truncated = true;
                return;
            }
        }
        self.nodes += 1;
        for xi in bits(x) {
            self.covered[xi] |= y;
            self.budget_x[xi] -= 1;
        }
        for yj in bits(y) {
            self.budget_y[yj] -= 1;
        }
        self.chosen.push((x, y));

        if let Some(kind) = self.prune() {
            match kind {
                Prune::Thickness => self.prunes_by_thickness += 1,
                Prune::Coverage => self.prunes_by_coverage += 1,
            }
        } else {
            self.recurse();
        }

        self.chosen.pop();
        for yj in bits(y) {
            self.budget_y[yj] += 1;
        }
        for xi in bits(x) {
            self.covered[xi] &= !y;
            self.budget_x[xi] += 1;
        }
    }

    fn prune(&self) -> Option<Prune> {
        for i in 0..self.m {
            let row = self.uncovered_row(i);
            if row != 0 && self.budget_x[i] == 0 {
                return Some(Prune::Thickness);
            }
            if row.count_ones() as usize > self.budget_x[i] * (self.m - 1) {
                return Some(Prune::Coverage);
            }
        }
        for j in 0..self.m {
            let col = self.uncovered_col(j);
            if col != 0 && self.budget_y[j] == 0 {
                return Some(Prune::Thickness);
            }
            if col.count_ones() as usize > self.budget_y[j] * (self.m - 1) {
                return Some(Prune::Coverage);
            }
        }
        None
    }
}

enum Prune {
    Thickness,
    Coverage,
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(k)
        }
    })
}

/// All subsets of `ground` (a bitmask) that contain `member`.
fn subsets_containing(ground: u32, member: usize) -> Vec<u32> {
    let fixed = 1u32 << member;
    let rest = ground & !fixed;
    // Classic subset-of-mask walk.
    let mut out = Vec::new();
    let mut sub = 0u32;
    loop {
        out.push(sub | fixed);
        if sub == rest {
            break;
        }
        sub = (sub.wrapping_sub(rest)) & rest;
    }
    out
}

/// On bitmasks, numeric order is colex order on the underlying sets.
fn sort_by_size_then_colex(masks: &mut [u32]) {
    masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
}

/// The largest m up to `m_cap` admitting an (a, b, m) system. Ascends from
/// m = 1 and stops at the first conclusive "no"; deleting a pair preserves
/// the conditions, so existence is monotone in m.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaxMReport {
    pub value: usize,
    /// False when some level was inconclusive, making `value` only a lower
    /// bound.
    pub conclusive: bool,
    pub outcomes: Vec<(usize, SearchOutcome)>,
}

pub fn max_m(
    a: usize,
    b: usize,
    m_cap: usize,
    node_limit: Option<u64>,
    threads: usize,
) -> MaxMReport {
    let mut value = 0;
    let mut conclusive = true;
    let mut outcomes = Vec::new();
    for m in 1..=m_cap {
        let mut cfg = SearchConfig::new(a, b, m);
        cfg.node_limit = node_limit;
        cfg.threads = threads;
        let outcome = exists_system(&cfg);
        let status = outcome.status;
        outcomes.push((m, outcome));
        match status {
            SearchStatus::WitnessFound => value = m,
            SearchStatus::ExhaustedNoSolution => break,
            SearchStatus::Inconclusive => {
                conclusive = false;
                break;
            }
        }
    }
    MaxMReport {
        value,
        conclusive,
        outcomes,
    }
}

/// All extremal witnesses at (a, b, m), deduplicated up to element
/// relabeling and index permutation.
pub fn enumerate_extremal(a: usize, b: usize, m: usize) -> Vec<CanonicalForm> {
    let mut cfg = SearchConfig::new(a, b, m);
    cfg.enumerate_all = true;
    let outcome = exists_system(&cfg);
    debug_assert!(outcome.status.is_conclusive());
    let mut forms: Vec<CanonicalForm> =
        outcome.witnesses.iter().map(canonical_form).collect();
    forms.sort();
    forms
}

/// One bound check of [`bound_audit`]: Σ against a fixed threshold.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundCheck {
    pub bound: Rat,
    pub holds: bool,
    /// bound − Σ; negative exactly when the check fails.
    pub slack: Rat,
}

fn check_against(sigma: &Rat, bound: Rat) -> BoundCheck {
    let slack = &bound - sigma;
    BoundCheck {
        bound,
        holds: !slack.is_negative(),
        slack,
    }
}

/// Σ(S) measured against the classical bound of 1 (when the system is cross
/// intersecting) and the 29/30 bound (when it is 1-cross intersecting with
/// all sizes at least 2). Both are theorems, so `hard_failure` flags an
/// implementation bug, not a property of the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundAudit {
    pub sigma: Rat,
    pub cross_clean: bool,
    pub one_cross_clean: bool,
    pub all_sizes_ge_2: bool,
    /// Σ ≤ 1; present iff the system is cross clean.
    pub bollobas: Option<BoundCheck>,
    /// Σ ≤ 29/30; present iff 1-cross clean with sizes ≥ 2.
    pub one_cross_bound: Option<BoundCheck>,
    /// 5/6 − Σ, reported informationally alongside the 29/30 check; the 5/6
    /// bound is conjectural and never asserted.
    pub five_sixths_slack: Option<Rat>,
    pub hard_failure: bool,
}

pub fn bound_audit(s: &SetPairSystem) -> BoundAudit {
    let sigma = s.sigma();
    let cross_clean = s.verify(VerifyMode::Cross).is_clean();
    let one_cross_clean = s.verify(VerifyMode::OneCross).is_clean();
    let all_sizes_ge_2 = s.pairs().iter().all(|p| {
        let (a, b) = p.sizes();
        a >= 2 && b >= 2
    });
    let bollobas = cross_clean.then(|| check_against(&sigma, Rat::one()));
    let eligible = one_cross_clean && all_sizes_ge_2;
    let one_cross_bound = eligible.then(|| check_against(&sigma, Rat::new(29, 30)));
    let five_sixths_slack = eligible.then(|| &Rat::new(5, 6) - &sigma);
    let hard_failure = bollobas.as_ref().is_some_and(|c| !c.holds)
        || one_cross_bound.as_ref().is_some_and(|c| !c.holds);
    BoundAudit {
        sigma,
        cross_clean,
        one_cross_clean,
        all_sizes_ge_2,
        bollobas,
        one_cross_bound,
        five_sixths_slack,
        hard_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complementary_five_cycles, standard_example};

    #[test]
    fn finds_the_five_cycle_witness() {
        let outcome = exists_system(&SearchConfig::new(2, 2, 5));
        assert_eq!(outcome.status, SearchStatus::WitnessFound);
        let witness = &outcome.witnesses[0];
        assert!(witness.verify(VerifyMode::OneCross).is_clean());
        assert_eq!(
            canonical_form(witness),
            canonical_form(&complementary_five_cycles())
        );
    }

    #[test]
    fn no_six_pair_system_with_caps_two() {
        let outcome = exists_system(&SearchConfig::new(2, 2, 6));
        assert_eq!(outcome.status, SearchStatus::ExhaustedNoSolution);
        assert!(outcome.witnesses.is_empty());
    }

    #[test]
    fn two_singleton_bicliques_cover_the_m2_crown() {
        let outcome = exists_system(&SearchConfig::new(1, 1, 2));
        assert_eq!(outcome.status, SearchStatus::WitnessFound);
        let w = &outcome.witnesses[0];
        assert_eq!(w.len(), 2);
        assert!(w.element_isomorphic(&standard_example(1, 1).unwrap()));
    }

    #[test]
    fn trivial_m1_search() {
        let outcome = exists_system(&SearchConfig::new(1, 1, 1));
        assert_eq!(outcome.status, SearchStatus::WitnessFound);
        assert_eq!(outcome.stats.nodes, 0);
    }

    #[test]
    fn max_m_results_on_small_grids() {
        let report = max_m(2, 2, 8, None, 1);
        assert_eq!(report.value, 5);
        assert!(report.conclusive);
        assert_eq!(max_m(1, 1, 4, None, 1).value, 2);
        assert_eq!(max_m(1, 2, 5, None, 1).value, 3);
    }

    #[test]
    fn enumeration_finds_the_unique_extremal_system() {
        let forms = enumerate_extremal(2, 2, 5);
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0], canonical_form(&complementary_five_cycles()));
        assert_eq!(enumerate_extremal(1, 1, 2).len(), 1);
        assert!(enumerate_extremal(2, 2, 6).is_empty());
    }

    #[test]
    fn node_limit_yields_inconclusive_not_a_false_no() {
        let mut cfg = SearchConfig::new(2, 2, 6);
        cfg.node_limit = Some(3);
        let outcome = exists_system(&cfg);
        assert_eq!(outcome.status, SearchStatus::Inconclusive);
    }

    #[test]
    fn determinism_across_runs_and_thread_counts() {
        let mut expectation = None;
        for threads in [1, 1, 2, 4] {
            let mut cfg = SearchConfig::new(2, 2, 5);
            cfg.enumerate_all = true;
            cfg.threads = threads;
            let outcome = exists_system(&cfg);
            let key = (outcome.status, outcome.witnesses, outcome.stats.nodes);
            match &expectation {
                None => expectation = Some(key),
                Some(prev) => assert_eq!(*prev, key, "threads = {threads}"),
            }
        }
    }

    #[test]
    fn oracle_and_search_agree_on_the_grid() {
        for a in 1..=2 {
            for b in 1..=2 {
                for m in 1..=6 {
                    let search = exists_system(&SearchConfig::new(a, b, m));
                    let oracle = brute_force_oracle(a, b, m, 2 * m).unwrap();
                    assert_eq!(
                        search.status, oracle.status,
                        "disagreement at a={a} b={b} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn symmetry_breaking_does_not_change_status() {
        for a in 1..=2 {
            for b in 1..=2 {
                for m in 1..=6 {
                    let on = exists_system(&SearchConfig::new(a, b, m));
                    let mut cfg = SearchConfig::new(a, b, m);
                    cfg.symmetry_breaking = false;
                    let off = exists_system(&cfg);
                    assert_eq!(on.status, off.status, "a={a} b={b} m={m}");
                }
            }
        }
    }

    #[test]
    fn most_constrained_rule_agrees_on_status() {
        for m in 4..=6 {
            let mut cfg = SearchConfig::new(2, 2, m);
            cfg.branch_rule = BranchRule::MostConstrained;
            assert_eq!(
                exists_system(&cfg).status,
                exists_system(&SearchConfig::new(2, 2, m)).status
            );
        }
    }

    #[test]
    fn witness_existence_is_monotone_in_m() {
        for a in 1..=2 {
            for b in 1..=3 {
                let mut last_found = true;
                for m in 1..=6 {
                    let found = exists_system(&SearchConfig::new(a, b, m)).status
                        == SearchStatus::WitnessFound;
                    assert!(
                        !found || last_found,
                        "witness at m={m} but none at m-1 (a={a}, b={b})"
                    );
                    last_found = found;
                }
            }
        }
    }

    #[test]
    fn audit_of_the_five_cycle_system() {
        let audit = bound_audit(&complementary_five_cycles());
        assert_eq!(audit.sigma, Rat::new(5, 6));
        assert!(audit.cross_clean && audit.one_cross_clean && audit.all_sizes_ge_2);
        let thm = audit.one_cross_bound.unwrap();
        assert!(thm.holds);
        assert_eq!(thm.slack, Rat::new(2, 15));
        assert_eq!(audit.five_sixths_slack.unwrap(), Rat::zero());
        assert!(!audit.hard_failure);
    }

    #[test]
    fn audit_of_the_standard_example() {
        let audit = bound_audit(&standard_example(2, 3).unwrap());
        assert_eq!(audit.sigma, Rat::one());
        assert!(audit.cross_clean);
        assert!(!audit.one_cross_clean);
        let thm1 = audit.bollobas.unwrap();
        assert!(thm1.holds);
        assert_eq!(thm1.slack, Rat::zero());
        assert_eq!(audit.one_cross_bound, None);
        assert!(!audit.hard_failure);
    }

    #[test]
    fn audit_of_the_empty_system() {
        let audit = bound_audit(&SetPairSystem::new());
        assert_eq!(audit.sigma, Rat::zero());
        assert!(!audit.hard_failure);
        assert!(audit.bollobas.unwrap().holds);
        assert!(audit.one_cross_bound.unwrap().holds);
    }
}
