//! Independent brute-force existence check for 1-cross systems.
//!
//! Rather than covering crown-graph edges, this path enumerates the systems
//! themselves. In a system where every element lies in a cross intersection,
//! each ordered index pair (i, j), i ≠ j, determines a unique element
//! e(i, j) ∈ A_i ∩ B_j, and the whole system is determined by which ordered
//! pairs share an element. So we enumerate set partitions of the m(m−1)
//! ordered pairs (restricted-growth style, one class per ground element),
//! pruning classes whose row and column index sets overlap, classes that
//! would break the closure rule (an element in A_i and B_j forces (i, j)
//! into its class), and assignments that exceed the per-index size budgets.

use crate::system::{SetPairSystem, VerifyMode};

use super::{SearchError, SearchOutcome, SearchStats, SearchStatus};

/// Largest m(m−1) the oracle will attempt.
const MAX_ORDERED_PAIRS: usize = 42;
/// Refusal threshold on element classes; instances needing more are beyond
/// the work estimate.
const MAX_CLASSES: usize = 16;

/// Decides by direct enumeration whether a 1-cross intersecting system with
/// m pairs, |A_i| ≤ a, |B_i| ≤ b exists, using at most `ground_cap` ground
/// elements. Refuses instances beyond the built-in work estimate.
pub fn brute_force_oracle(
    a: usize,
    b: usize,
    m: usize,
    ground_cap: usize,
) -> Result<SearchOutcome, SearchError> {
    let pair_count = m * m.saturating_sub(1);
    if pair_count > MAX_ORDERED_PAIRS {
        return Err(SearchError::WorkGuardExceeded {
            detail: format!("{pair_count} ordered index pairs exceeds {MAX_ORDERED_PAIRS}"),
        });
    }
    // A stripped system has one element per class and every class uses at
    // least one row and one column, so min(a, b) * m classes always suffice;
    // ground_cap below that restricts the question, it does not clamp it.
    let class_cap = ground_cap.min(a * m).min(b * m);
    if class_cap > MAX_CLASSES {
        return Err(SearchError::WorkGuardExceeded {
            detail: format!("{class_cap} element classes exceeds {MAX_CLASSES}"),
        });
    }
    let started = std::time::Instant::now();

    let ordered_pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut state = Enumerator {
        a,
        b,
        m,
        class_cap,
        ordered_pairs,
        assignment: Vec::new(),
        classes: Vec::new(),
        row_classes: vec![0; m],
        col_classes: vec![0; m],
        nodes: 0,
        budget_rejects: 0,
        closure_rejects: 0,
        witness: None,
    };
    state.run(0);

    let witnesses = match state.witness {
        Some(sys) => vec![sys],
        None => Vec::new(),
    };
    let status = if witnesses.is_empty() {
        SearchStatus::ExhaustedNoSolution
    } else {
        SearchStatus::WitnessFound
    };
    Ok(SearchOutcome {
        status,
        witnesses,
        stats: SearchStats {
            nodes: state.nodes,
            prunes_by_thickness: state.budget_rejects,
            prunes_by_coverage: state.closure_rejects,
            elapsed: started.elapsed(),
        },
    })
}

struct Class {
    rows: u32,
    cols: u32,
    members: Vec<usize>,
}

struct Enumerator {
    a: usize,
    b: usize,
    m: usize,
    class_cap: usize,
    ordered_pairs: Vec<(usize, usize)>,
    /// assignment[t] = class of ordered pair t, for t < current depth.
    assignment: Vec<usize>,
    classes: Vec<Class>,
    /// row_classes[i] = number of classes whose rows contain i (= |A_i|).
    row_classes: Vec<usize>,
    col_classes: Vec<usize>,
    nodes: u64,
    budget_rejects: u64,
    closure_rejects: u64,
    witness: Option<SetPairSystem>,
}

impl Enumerator {
    fn run(&mut self, t: usize) {
        if self.witness.is_some() {
            return;
        }
        if t == self.ordered_pairs.len() {
            self.complete();
            return;
        }
        let (i, j) = self.ordered_pairs[t];
        // Join each existing class in index order, then open a new one; the
        // first-use ordering enumerates each partition exactly once.
        for k in 0..self.classes.len() {
            self.try_assign(t, i, j, k, false);
            if self.witness.is_some() {
                return;
            }
        }
        if self.classes.len() < self.class_cap {
            self.try_assign(t, i, j, self.classes.len(), true);
        }
    }

    fn try_assign(&mut self, t: usize, i: usize, j: usize, k: usize, fresh: bool) {
        self.nodes += 1;
        let (old_rows, old_cols) = if fresh {
            (0u32, 0u32)
        } else {
            (self.classes[k].rows, self.classes[k].cols)
        };
        let new_rows = old_rows | (1 << i);
        let new_cols = old_cols | (1 << j);
        // Rows and columns of one class stay disjoint, or the element would
        // sit in some A_i ∩ B_i.
        if new_rows & new_cols != 0 {
            self.closure_rejects += 1;
            return;
        }
        let row_is_new = old_rows & (1 << i) == 0;
        let col_is_new = old_cols & (1 << j) == 0;
        if (row_is_new && self.row_classes[i] + 1 > self.a)
            || (col_is_new && self.col_classes[j] + 1 > self.b)
        {
            self.budget_rejects += 1;
            return;
        }
        // Closure against other classes: a class already spanning row i and
        // column j owns the element of A_i ∩ B_j, so (i, j) must join it.
        for (other, cls) in self.classes.iter().enumerate() {
            if other != k && cls.rows & (1 << i) != 0 && cls.cols & (1 << j) != 0 {
                self.closure_rejects += 1;
                return;
            }
        }
        // Closure within class k: every already-assigned pair in the grown
        // rectangle must already belong to k.
        for t2 in 0..t {
            let (r, c) = self.ordered_pairs[t2];
            if new_rows & (1 << r) != 0 && new_cols & (1 << c) != 0 && self.assignment[t2] != k {
                self.closure_rejects += 1;
                return;
            }
        }

        if fresh {
            self.classes.push(Class {
                rows: 0,
                cols: 0,
                members: Vec::new(),
            });
        }
        self.classes[k].rows = new_rows;
        self.classes[k].cols = new_cols;
        self.classes[k].members.push(t);
        if row_is_new {
            self.row_classes[i] += 1;
        }
        if col_is_new {
            self.col_classes[j] += 1;
        }
        self.assignment.push(k);

        self.run(t + 1);

        self.assignment.pop();
        if col_is_new {
            self.col_classes[j] -= 1;
        }
        if row_is_new {
            self.row_classes[i] -= 1;
        }
        self.classes[k].members.pop();
        self.classes[k].rows = old_rows;
        self.classes[k].cols = old_cols;
        if fresh {
            self.classes.pop();
        }
    }

    fn complete(&mut self) {
        // Every class must fill its full row-by-column rectangle.
        for cls in &self.classes {
            let want = (cls.rows.count_ones() * cls.cols.count_ones()) as usize;
            assert_eq!(
                cls.members.len(),
                want,
                "incremental closure pruning let a non-rectangular class through"
            );
        }
        let mut sys = SetPairSystem::new();
        let ids: Vec<_> = (0..self.classes.len())
            .map(|k| sys.intern(&k.to_string()))
            .collect();
        for i in 0..self.m {
            let a_side = self
                .classes
                .iter()
                .enumerate()
                .filter(|(_, c)| c.rows & (1 << i) != 0)
                .map(|(k, _)| ids[k])
                .collect();
            let b_side = self
                .classes
                .iter()
                .enumerate()
                .filter(|(_, c)| c.cols & (1 << i) != 0)
                .map(|(k, _)| ids[k])
                .collect();
            sys.push_pair(a_side, b_side).expect("ids are interned");
        }
        debug_assert!(sys.verify(VerifyMode::OneCross).is_clean());
        self.witness = Some(sys);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_the_five_cycle_instance() {
        let outcome = brute_force_oracle(2, 2, 5, 10).unwrap();
        assert_eq!(outcome.status, SearchStatus::WitnessFound);
        let w = &outcome.witnesses[0];
        assert!(w.verify(VerifyMode::OneCross).is_clean());
        assert!(w.pairs().iter().all(|p| {
            let (a, b) = p.sizes();
            a <= 2 && b <= 2
        }));
    }

    #[test]
    fn six_pairs_with_caps_two_is_impossible() {
        let outcome = brute_force_oracle(2, 2, 6, 12).unwrap();
        assert_eq!(outcome.status, SearchStatus::ExhaustedNoSolution);
        assert!(outcome.witnesses.is_empty());
    }

    #[test]
    fn three_pairs_with_caps_one_is_impossible() {
        let outcome = brute_force_oracle(1, 1, 3, 6).unwrap();
        assert_eq!(outcome.status, SearchStatus::ExhaustedNoSolution);
    }

    #[test]
    fn work_guard_refuses_large_instances() {
        assert!(matches!(
            brute_force_oracle(2, 2, 9, 20),
            Err(SearchError::WorkGuardExceeded { .. })
        ));
    }

    #[test]
    fn single_pair_is_trivially_satisfiable() {
        let outcome = brute_force_oracle(1, 1, 1, 2).unwrap();
        assert_eq!(outcome.status, SearchStatus::WitnessFound);
        assert_eq!(outcome.witnesses[0].len(), 1);
    }
}
