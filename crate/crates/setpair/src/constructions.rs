//! Canonical systems and the normalization steps used around them.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::rat::binom;
use crate::system::{ElementId, SetPairSystem};

/// Default limit on `a + b` for [`standard_example`]. C(28, 14) is about
/// 4·10^7 pairs, the practical memory edge for materializing the system.
pub const STANDARD_EXAMPLE_CAP: u64 = 28;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("standard example requires a >= 1 and b >= 1 (got a={a}, b={b})")]
    EmptySide { a: u64, b: u64 },
    #[error("standard example with a+b = {got} exceeds the cap of {cap}")]
    CapExceeded { got: u64, cap: u64 },
    #[error("pad target list has {got} entries but the system has {expected} pairs")]
    TargetCountMismatch { got: usize, expected: usize },
    #[error("pair {index}: pad target ({target_a}, {target_b}) is below the current sizes ({cur_a}, {cur_b})")]
    TargetBelowSize {
        index: usize,
        target_a: usize,
        target_b: usize,
        cur_a: usize,
        cur_b: usize,
    },
}

/// All `C(a+b, a)` complementary pairs `(A, complement of A)` with `|A| = a`
/// over the ground set `{0, …, a+b−1}`, A-sides in colex order.
pub fn standard_example(a: u64, b: u64) -> Result<SetPairSystem, ConstructError> {
    standard_example_with_cap(a, b, STANDARD_EXAMPLE_CAP)
}

pub fn standard_example_with_cap(
    a: u64,
    b: u64,
    cap: u64,
) -> Result<SetPairSystem, ConstructError> {
    if a == 0 || b == 0 {
        return Err(ConstructError::EmptySide { a, b });
    }
    let n = a + b;
    if n > cap {
        return Err(ConstructError::CapExceeded { got: n, cap });
    }
    let n = n as usize;
    let a = a as usize;
    let mut sys = SetPairSystem::new();
    let ids: Vec<ElementId> = (0..n).map(|k| sys.intern(&k.to_string())).collect();

    // Walk the a-subsets of {0..n-1} in colex order: advance the lowest
    // position that can move, resetting everything below it.
    let mut comb: Vec<usize> = (0..a).collect();
    loop {
        let a_side: BTreeSet<ElementId> = comb.iter().map(|&k| ids[k]).collect();
        let b_side: BTreeSet<ElementId> = (0..n)
            .filter(|k| !comb.contains(k))
            .map(|k| ids[k])
            .collect();
        sys.push_pair(a_side, b_side).expect("ids are interned");

        let mut i = 0;
        while i < a {
            let limit = if i + 1 < a { comb[i + 1] } else { n };
            if comb[i] + 1 < limit {
                break;
            }
            i += 1;
        }
        if i == a {
            break;
        }
        comb[i] += 1;
        for (k, slot) in comb.iter_mut().enumerate().take(i) {
            *slot = k;
        }
    }
    debug_assert_eq!(binom(n as u64, a as u64), num_bigint::BigUint::from(sys.len()));
    Ok(sys)
}

/// The 5-pair system over `{0..4}` with `A_i = {i, i+1}` and
/// `B_i = {i−1, i+2}` (indices mod 5): two complementary 5-cycles.
pub fn complementary_five_cycles() -> SetPairSystem {
    let mut sys = SetPairSystem::new();
    let ids: Vec<ElementId> = (0..5).map(|k| sys.intern(&k.to_string())).collect();
    for i in 0..5usize {
        let a_side = [ids[i], ids[(i + 1) % 5]].into_iter().collect();
        let b_side = [ids[(i + 4) % 5], ids[(i + 2) % 5]].into_iter().collect();
        sys.push_pair(a_side, b_side).expect("ids are interned");
    }
    sys
}

/// Enlarges every set to its exact target size using fresh elements that
/// belong to that single set only, leaving all cross intersections intact.
pub fn pad_to_sizes(
    s: &SetPairSystem,
    targets: &[(usize, usize)],
) -> Result<SetPairSystem, ConstructError> {
    if targets.len() != s.len() {
        return Err(ConstructError::TargetCountMismatch {
            got: targets.len(),
            expected: s.len(),
        });
    }
    for (i, (&(ta, tb), pair)) in targets.iter().zip(s.pairs()).enumerate() {
        let (ca, cb) = pair.sizes();
        if ta < ca || tb < cb {
            return Err(ConstructError::TargetBelowSize {
                index: i,
                target_a: ta,
                target_b: tb,
                cur_a: ca,
                cur_b: cb,
            });
        }
    }
    let mut out = s.clone();
    for i in 0..out.len() {
        let (ta, tb) = targets[i];
        for (side, side_name, target) in [
            (crate::system::Side::A, "A", ta),
            (crate::system::Side::B, "B", tb),
        ] {
            let mut set = out.pair(i).side(side).clone();
            let mut k = 0usize;
            while set.len() < target {
                let label = format!("_pad_{i}_{side_name}_{k}");
                k += 1;
                // Skip labels already taken by the input ground set or by
                // earlier padding.
                match out.add_label(&label) {
                    Ok(id) => {
                        set.insert(id);
                    }
                    Err(_) => continue,
                }
            }
            let pair = out.pair_mut(i);
            match side {
                crate::system::Side::A => pair.a_side = set,
                crate::system::Side::B => pair.b_side = set,
            }
        }
    }
    Ok(out)
}

/// The elements that occur in no cross intersection `A_i ∩ B_j` with `i ≠ j`.
/// Reducing by exactly this set is always safe.
pub fn free_elements(s: &SetPairSystem) -> BTreeSet<ElementId> {
    let mut used = BTreeSet::new();
    for i in 0..s.len() {
        for j in 0..s.len() {
            if i == j {
                continue;
            }
            used.extend(
                s.pair(i)
                    .a_side
                    .intersection(&s.pair(j).b_side)
                    .copied(),
            );
        }
    }
    s.ground_set().difference(&used).copied().collect()
}

/// Removes every free element, so that afterwards each remaining element
/// occurs in some cross intersection. Equals `reduce(s, free_elements(s))`.
pub fn strip_free_elements(s: &SetPairSystem) -> SetPairSystem {
    s.reduce(&free_elements(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;
    use crate::system::{SetPair, VerifyMode};

    #[test]
    fn standard_example_1_1() {
        let s = standard_example(1, 1).unwrap();
        assert_eq!(s.len(), 2);
        let zero = s.element("0").unwrap();
        let one = s.element("1").unwrap();
        assert_eq!(
            s.pair(0),
            &SetPair::new([zero].into(), [one].into())
        );
        assert_eq!(
            s.pair(1),
            &SetPair::new([one].into(), [zero].into())
        );
    }

    #[test]
    fn standard_example_2_2_attains_bollobas_equality() {
        let s = standard_example(2, 2).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s.sigma(), Rat::one());
        assert!(s.verify(VerifyMode::Cross).is_clean());
    }

    #[test]
    fn standard_example_2_3_shape() {
        let s = standard_example(2, 3).unwrap();
        assert_eq!(s.len(), 10);
        for p in s.pairs() {
            assert_eq!(p.sizes(), (2, 3));
        }
        assert_eq!(s.sigma(), Rat::one());
    }

    #[test]
    fn standard_example_a_sides_are_in_colex_order() {
        let s = standard_example(2, 2).unwrap();
        let a_sides: Vec<Vec<&str>> = s
            .pairs()
            .iter()
            .map(|p| p.a_side.iter().map(|&v| s.label(v)).collect())
            .collect();
        assert_eq!(
            a_sides,
            vec![
                vec!["0", "1"],
                vec!["0", "2"],
                vec!["1", "2"],
                vec!["0", "3"],
                vec!["1", "3"],
                vec!["2", "3"],
            ]
        );
    }

    #[test]
    fn standard_example_rejects_oversized_request() {
        assert_eq!(
            standard_example(15, 14).unwrap_err(),
            ConstructError::CapExceeded { got: 29, cap: 28 }
        );
        assert_eq!(
            standard_example(0, 3).unwrap_err(),
            ConstructError::EmptySide { a: 0, b: 3 }
        );
    }

    #[test]
    fn five_cycles_pair_zero() {
        let s = complementary_five_cycles();
        let id = |l: &str| s.element(l).unwrap();
        assert_eq!(
            s.pair(0),
            &SetPair::new(
                [id("0"), id("1")].into(),
                [id("4"), id("2")].into()
            )
        );
    }

    #[test]
    fn pad_with_exact_sizes_is_identity() {
        let s = complementary_five_cycles();
        let targets: Vec<(usize, usize)> = s.pairs().iter().map(|p| p.sizes()).collect();
        assert_eq!(pad_to_sizes(&s, &targets).unwrap(), s);
    }

    #[test]
    fn pad_single_pair_stays_one_cross() {
        let s = SetPairSystem::from_label_pairs(&[(&["1"], &["2"])]).unwrap();
        let padded = pad_to_sizes(&s, &[(2, 2)]).unwrap();
        assert_eq!(padded.pair(0).sizes(), (2, 2));
        assert!(padded.verify(VerifyMode::OneCross).is_clean());
        let labels: Vec<&str> = padded
            .ground_set()
            .iter()
            .map(|&v| padded.label(v))
            .collect();
        assert!(labels.contains(&"_pad_0_A_0"));
        assert!(labels.contains(&"_pad_0_B_0"));
    }

    #[test]
    fn pad_five_cycles_to_three_three() {
        let s = complementary_five_cycles();
        let padded = pad_to_sizes(&s, &vec![(3, 3); 5]).unwrap();
        assert!(padded.verify(VerifyMode::OneCross).is_clean());
        assert_eq!(padded.sigma(), Rat::new(1, 4));
    }

    #[test]
    fn pad_target_below_size_is_rejected() {
        let s = complementary_five_cycles();
        let mut targets = vec![(2, 2); 5];
        targets[3] = (1, 2);
        assert_eq!(
            pad_to_sizes(&s, &targets).unwrap_err(),
            ConstructError::TargetBelowSize {
                index: 3,
                target_a: 1,
                target_b: 2,
                cur_a: 2,
                cur_b: 2,
            }
        );
    }

    #[test]
    fn pad_avoids_label_collisions() {
        let s = SetPairSystem::from_label_pairs(&[(&["_pad_0_A_0"], &["x"])]).unwrap();
        let padded = pad_to_sizes(&s, &[(2, 1)]).unwrap();
        assert_eq!(padded.pair(0).sizes(), (2, 1));
        // The fresh element must be distinct from the colliding user label.
        let a: Vec<&str> = padded
            .pair(0)
            .a_side
            .iter()
            .map(|&v| padded.label(v))
            .collect();
        assert_eq!(a, vec!["_pad_0_A_0", "_pad_0_A_1"]);
    }

    #[test]
    fn five_cycles_have_no_free_elements() {
        let s = complementary_five_cycles();
        assert!(free_elements(&s).is_empty());
        assert_eq!(strip_free_elements(&s), s);
    }

    #[test]
    fn strip_undoes_padding_up_to_element_identity() {
        let s = complementary_five_cycles();
        let padded = pad_to_sizes(&s, &vec![(3, 3); 5]).unwrap();
        let stripped = strip_free_elements(&padded);
        for i in 0..5 {
            assert_eq!(stripped.pair(i), s.pair(i));
        }
    }

    #[test]
    fn strip_single_pair_empties_it() {
        let s = SetPairSystem::from_label_pairs(&[(&["1"], &["2"])]).unwrap();
        let stripped = strip_free_elements(&s);
        assert_eq!(stripped.pair(0), &SetPair::default());
    }
}
