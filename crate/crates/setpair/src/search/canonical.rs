//! Canonical forms of set pair systems up to element relabeling and
//! simultaneous index permutation.
//!
//! The labeling search runs ordered partition refinement over two sorts of
//! cells (pair indices, ground elements). Pair cells split by their
//! incidence counts against element cells, and vice versa, until stable;
//! remaining ties are broken by individualizing each member of the first
//! non-singleton cell in turn. Every discrete leaf yields one encoding of
//! the relabeled system, and the canonical form is the least of them, so two
//! systems share a form exactly when they are isomorphic.

use std::collections::BTreeMap;

use crate::system::SetPairSystem;

/// Canonical encoding of a system; equal forms mean isomorphic systems.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

pub fn canonical_form(s: &SetPairSystem) -> CanonicalForm {
    let ground: Vec<_> = s.ground_set().into_iter().collect();
    let n = ground.len();
    assert!(
        n <= 128,
        "canonical_form supports ground sets of at most 128 elements"
    );
    let m = s.len();

    // Incidence masks over positions of `ground`.
    let pos: BTreeMap<_, usize> = ground.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut a_inc = vec![0u128; m];
    let mut b_inc = vec![0u128; m];
    for (i, p) in s.pairs().iter().enumerate() {
        for v in &p.a_side {
            a_inc[i] |= 1 << pos[v];
        }
        for v in &p.b_side {
            b_inc[i] |= 1 << pos[v];
        }
    }

    let mut refiner = Refiner {
        m,
        n,
        a_inc,
        b_inc,
        best: None,
    };
    let pair_cells = if m == 0 { vec![] } else { vec![(0..m).collect()] };
    let elem_cells = if n == 0 { vec![] } else { vec![(0..n).collect()] };
    refiner.explore(pair_cells, elem_cells);
    CanonicalForm {
        bytes: refiner.best.expect("at least one leaf labeling exists"),
    }
}

struct Refiner {
    m: usize,
    n: usize,
    a_inc: Vec<u128>,
    b_inc: Vec<u128>,
    best: Option<Vec<u8>>,
}

type Cells = Vec<Vec<usize>>;

impl Refiner {
    fn explore(&mut self, mut pair_cells: Cells, mut elem_cells: Cells) {
        self.refine(&mut pair_cells, &mut elem_cells);

        // Individualize the first tie, scanning pair cells before element
        // cells; the scan depends only on the ordered partition, never on
        // raw labels, so isomorphic inputs explore matching trees.
        let target = pair_cells
            .iter()
            .position(|c| c.len() > 1)
            .map(|idx| (true, idx))
            .or_else(|| {
                elem_cells
                    .iter()
                    .position(|c| c.len() > 1)
                    .map(|idx| (false, idx))
            });
        match target {
            None => {
                let encoded = self.encode(&pair_cells, &elem_cells);
                if self.best.as_ref().is_none_or(|b| encoded < *b) {
                    self.best = Some(encoded);
                }
            }
            Some((in_pairs, idx)) => {
                let cells = if in_pairs { &pair_cells } else { &elem_cells };
                let members = cells[idx].clone();
                for &x in &members {
                    let rest: Vec<usize> =
                        members.iter().copied().filter(|&y| y != x).collect();
                    let mut p = pair_cells.clone();
                    let mut e = elem_cells.clone();
                    let cells = if in_pairs { &mut p } else { &mut e };
                    cells[idx] = vec![x];
                    cells.insert(idx + 1, rest);
                    self.explore(p, e);
                }
            }
        }
    }

    /// Splits cells by incidence signatures until both partitions stabilize.
    fn refine(&self, pair_cells: &mut Cells, elem_cells: &mut Cells) {
        loop {
            let split_pairs = self.split_by(pair_cells, |i| {
                elem_cells
                    .iter()
                    .map(|cell| {
                        let mask: u128 = cell.iter().map(|&k| 1u128 << k).sum();
                        (
                            (self.a_inc[i] & mask).count_ones(),
                            (self.b_inc[i] & mask).count_ones(),
                        )
                    })
                    .collect::<Vec<_>>()
            });
            let split_elems = self.split_by(elem_cells, |k| {
                pair_cells
                    .iter()
                    .map(|cell| {
                        let bit = 1u128 << k;
                        let a = cell.iter().filter(|&&i| self.a_inc[i] & bit != 0).count();
                        let b = cell.iter().filter(|&&i| self.b_inc[i] & bit != 0).count();
                        (a, b)
                    })
                    .collect::<Vec<_>>()
            });
            if !split_pairs && !split_elems {
                return;
            }
        }
    }

    /// Splits each cell by the signature function, ordering sub-cells by
    /// signature. Returns whether anything changed.
    fn split_by<S: Ord>(&self, cells: &mut Cells, sig: impl Fn(usize) -> S) -> bool {
        let mut changed = false;
        let mut out: Cells = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                out.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<S, Vec<usize>> = BTreeMap::new();
            for &x in cell {
                groups.entry(sig(x)).or_default().push(x);
            }
            if groups.len() > 1 {
                changed = true;
            }
            out.extend(groups.into_values());
        }
        *cells = out;
        changed
    }

    /// Reads off the labeling of a discrete partition and serializes the
    /// relabeled system as little-endian u32 words.
    fn encode(&self, pair_cells: &Cells, elem_cells: &Cells) -> Vec<u8> {
        let mut elem_rank = vec![0u32; self.n];
        for (rank, cell) in elem_cells.iter().enumerate() {
            elem_rank[cell[0]] = rank as u32;
        }
        let mut words: Vec<u32> = Vec::with_capacity(2 + 2 * self.m);
        words.push(self.m as u32);
        words.push(self.n as u32);
        for cell in pair_cells {
            let i = cell[0];
            for inc in [self.a_inc[i], self.b_inc[i]] {
                let mut ranks: Vec<u32> = (0..self.n)
                    .filter(|&k| inc & (1 << k) != 0)
                    .map(|k| elem_rank[k])
                    .collect();
                ranks.sort_unstable();
                words.push(ranks.len() as u32);
                words.extend(ranks);
            }
        }
        words.iter().flat_map(|w| w.to_le_bytes()).collect()
    }
}
