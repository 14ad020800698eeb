//! Cross-module checks over everything the search produces: every witness
//! must verify clean, respect its caps, audit under the theorem bounds, and
//! round-trip through the biclique correspondence.

use setpair::biclique::{
    partition_to_system, system_to_partition, thickness, verify_partition, Biclique,
};
use setpair::constructions::strip_free_elements;
use setpair::search::{bound_audit, canonical_form, exists_system, SearchConfig, SearchStatus};
use setpair::system::VerifyMode;

fn witness_grid() -> Vec<(usize, usize, setpair::SetPairSystem)> {
    let mut out = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for m in 1..=6 {
                let mut cfg = SearchConfig::new(a, b, m);
                cfg.node_limit = Some(500_000);
                let outcome = exists_system(&cfg);
                if outcome.status == SearchStatus::WitnessFound {
                    out.push((a, b, outcome.witnesses.into_iter().next().unwrap()));
                }
            }
        }
    }
    out
}

#[test]
fn witnesses_verify_and_respect_their_caps() {
    for (a, b, w) in witness_grid() {
        assert!(w.verify(VerifyMode::OneCross).is_clean());
        for p in w.pairs() {
            let (pa, pb) = p.sizes();
            assert!(pa <= a && pb <= b, "caps ({a}, {b}) violated by ({pa}, {pb})");
        }
        let audit = bound_audit(&w);
        assert!(!audit.hard_failure, "theorem audit failed at ({a}, {b})");
    }
}

#[test]
fn witnesses_round_trip_through_partitions() {
    for (_, _, w) in witness_grid() {
        let stripped = strip_free_elements(&w);
        if stripped.ground_set().is_empty() {
            continue; // m = 1 witnesses carry no cross intersections
        }
        let p = system_to_partition(&stripped).expect("witnesses are normalized");
        assert!(verify_partition(&p).is_clean());

        // Thickness at x_i / y_i equals |A_i| / |B_i| of the system.
        let (tx, ty) = thickness(&p);
        for (i, pair) in stripped.pairs().iter().enumerate() {
            assert_eq!(tx[i], pair.a_side.len());
            assert_eq!(ty[i], pair.b_side.len());
        }

        // Edge-count conservation.
        let covered: usize = p.bicliques.iter().map(Biclique::edge_count).sum();
        assert_eq!(covered, p.m * (p.m - 1));

        // Both round trips are the identity up to the stated relabelings.
        let back = partition_to_system(&p).expect("clean partitions translate");
        assert!(back.element_isomorphic(&stripped));
        assert_eq!(canonical_form(&back), canonical_form(&stripped));
        let p2 = system_to_partition(&back).expect("translation is normalized");
        let mut lhs = p.bicliques.clone();
        let mut rhs = p2.bicliques.clone();
        lhs.sort_by(|u, v| (&u.x_set, &u.y_set).cmp(&(&v.x_set, &v.y_set)));
        rhs.sort_by(|u, v| (&u.x_set, &u.y_set).cmp(&(&v.x_set, &v.y_set)));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn partition_translation_always_yields_one_cross_systems() {
    for (_, _, w) in witness_grid() {
        let stripped = strip_free_elements(&w);
        if stripped.ground_set().is_empty() {
            continue;
        }
        let p = system_to_partition(&stripped).unwrap();
        let sys = partition_to_system(&p).unwrap();
        assert!(sys.verify(VerifyMode::OneCross).is_clean());
    }
}
