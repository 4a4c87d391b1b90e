use std::collections::HashSet;

use super::*;
use crate::constructions::exclusions_for;
use crate::lrc::singleton_like_bound;

fn tuple(n: usize, k: usize, d: usize, r: usize, delta: usize) -> LrcParams {
    LrcParams { n, k, d, r, delta }
}

#[test]
fn every_bound_tuple_is_classified_exactly_once() {
    const N: usize = 30;
    let members: HashSet<LrcParams> = enumerate_optimal_params(N).unwrap().into_iter().map(|t| t.params).collect();
    let mut checked = 0;
    for n in 1..=N {
        for k in 2..n {
            for r in 1..k {
                for delta in 3..=n {
                    let d = singleton_like_bound(n, k, r, delta);
                    if d < delta as i64 {
                        continue;
                    }
                    let p = tuple(n, k, d as usize, r, delta);
                    let listed = members.contains(&p);
                    let excluded = !exclusions_for(&p).is_empty();
                    assert!(listed != excluded, "{p}: listed {listed}, excluded {excluded}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000, "{checked}");
}

#[test]
fn small_enumeration() {
    let all = enumerate_optimal_params(10).unwrap();
    let ps: Vec<LrcParams> = all.iter().map(|t| t.params).collect();
    assert!(ps.contains(&tuple(9, 5, 3, 3, 3)));
    assert!(ps.contains(&tuple(10, 5, 4, 3, 3)));
    assert!(ps.contains(&tuple(10, 2, 5, 1, 5)));
    assert!(!ps.contains(&tuple(10, 3, 5, 2, 4)));
    let mut sorted = ps.clone();
    sorted.sort_by_key(|p| (p.n, p.k, p.d, p.r, p.delta));
    sorted.dedup();
    assert_eq!(sorted, ps);
    assert!(all.iter().all(|t| t.status != Status::Nonexistent));
    assert!(matches!(enumerate_optimal_params(129), Err(Error::Range(_))));
}

#[test]
fn claim_one_evidence() {
    let r = verify_claim1();
    assert!(r.holds, "{r:?}");
    assert_eq!(r.value("subspaces"), Some(5797));
    assert_eq!(r.value("weight5_words_in_mds"), Some(0));
    assert_eq!(r.value("max_cover_11_3_6"), Some(10));
}

#[test]
fn claim_two_evidence() {
    let r = verify_claim2();
    assert!(r.holds, "{r:?}");
    assert_eq!(r.value("support_intersection"), Some(1));
}

#[test]
fn geometric_evidence() {
    let r = verify_geometric_nonexistence();
    assert!(r.holds, "{r:?}");
    assert_eq!(r.value("line_pairs_meeting_once"), Some(210));
    assert_eq!(r.families, vec!["NX-24-d10", "NX-24-d15"]);
    for id in &r.families {
        assert_eq!(crate::constructions::lookup(id).unwrap().status, Status::Nonexistent);
    }
    assert!(verify_geometric_nonexistence_with(7, 50).holds);
}

#[test]
fn counting_evidence() {
    let r = verify_counting_bounds();
    assert!(r.holds, "{r:?}");
    for (name, v) in [
        ("common_point_bound", 17),
        ("union_bound", 21),
        ("line_count_bound", 9),
        ("lambda_bound", 5),
        ("weight6_room", 26),
    ] {
        assert_eq!(r.value(name), Some(v), "{name}");
    }
}
