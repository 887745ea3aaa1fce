use std::collections::BTreeSet;

use num_bigint::BigUint;
use polyplateau_core::{
    count_dpp_closed, enumerate_dccp, enumerate_dpp, generic_is_valid_dpp, oracle_enumerate_dpp,
    CellSet2D, ColumnConvexPolyomino, DirectedPlateauPolyhypercube, DEFAULT_NODE_BUDGET,
};
use proptest::prelude::*;

/// All `(d-1)`-tuples of directed column-convex width-`k` polyominoes whose
/// areas sum to `n`.
fn trace_tuples(d: usize, k: usize, n: usize) -> Vec<Vec<ColumnConvexPolyomino>> {
    fn go(
        axes: usize,
        k: usize,
        left: usize,
        acc: &mut Vec<ColumnConvexPolyomino>,
        out: &mut Vec<Vec<ColumnConvexPolyomino>>,
    ) {
        if axes == 0 {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for j in 1..=left {
            for p in enumerate_dccp(k, j).unwrap() {
                acc.push(p);
                go(axes - 1, k, left - j, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d - 1, k, n, &mut Vec::new(), &mut out);
    out
}

fn projected_tuple(d: usize, cells: &polyplateau_core::CellSetD) -> Vec<CellSet2D> {
    (2..=d)
        .map(|l| cells.project_plane(l).unwrap().normalized())
        .collect()
}

#[test]
fn projection_is_a_bijection_onto_trace_tuples() {
    for d in [3, 4] {
        for k in 1..=3 {
            for n in 0..=8 {
                let objects = oracle_enumerate_dpp(d, k, n, DEFAULT_NODE_BUDGET).unwrap();
                let images: BTreeSet<Vec<CellSet2D>> =
                    objects.iter().map(|c| projected_tuple(d, c)).collect();
                assert_eq!(
                    images.len(),
                    objects.len(),
                    "not injective at d={d} k={k} n={n}"
                );
                let targets: BTreeSet<Vec<CellSet2D>> = trace_tuples(d, k, n)
                    .iter()
                    .map(|t| t.iter().map(|p| p.rasterize()).collect())
                    .collect();
                assert_eq!(images, targets, "image mismatch at d={d} k={k} n={n}");
            }
        }
    }
}

#[test]
fn fast_enumerator_matches_oracle_cell_sets() {
    for d in [3, 4] {
        for k in 1..=3 {
            for n in 0..=8 {
                let oracle: BTreeSet<_> = oracle_enumerate_dpp(d, k, n, DEFAULT_NODE_BUDGET)
                    .unwrap()
                    .into_iter()
                    .collect();
                let fast: BTreeSet<_> = enumerate_dpp(d, k, n)
                    .unwrap()
                    .iter()
                    .map(|p| p.rasterize())
                    .collect();
                assert_eq!(fast, oracle, "d={d} k={k} n={n}");
                assert_eq!(
                    BigUint::from(oracle.len()),
                    count_dpp_closed(d, k, n).unwrap()
                );
            }
        }
    }
}

#[test]
fn enumerated_objects_are_valid_and_project_correctly() {
    for d in 3..=5 {
        for k in 1..=3 {
            for n in 0..=12 {
                let all = enumerate_dpp(d, k, n).unwrap();
                assert_eq!(BigUint::from(all.len()), count_dpp_closed(d, k, n).unwrap());
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                for p in &all {
                    assert_eq!(p.width(), k);
                    assert_eq!(p.lateral_area(), n as u64);
                    let cells = p.rasterize();
                    assert!(generic_is_valid_dpp(&cells));
                    assert_eq!(cells.len() as u64, p.hypervolume());
                    assert_eq!(cells.lateral_area(), n as u64);
                    for l in 2..=d {
                        let trace = p.project(l).unwrap();
                        assert_eq!(trace.width(), k);
                        assert_eq!(cells.project_plane(l).unwrap(), trace.rasterize());
                    }
                }
            }
        }
    }
}

#[test]
fn minimal_lateral_area_has_one_object() {
    for d in 3..=6 {
        for k in 1..=5 {
            assert_eq!(
                enumerate_dpp(d, k, (d - 1) * k).unwrap().len(),
                1,
                "d={d} k={k}"
            );
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(
        enumerate_dpp(4, 2, 9).unwrap(),
        enumerate_dpp(4, 2, 9).unwrap()
    );
}

proptest! {
    #[test]
    fn projections_round_trip(d in 3usize..6, k in 1usize..4, extra in 0usize..5, pick in any::<prop::sample::Index>()) {
        let n = (d - 1) * k + extra;
        let all = enumerate_dpp(d, k, n).unwrap();
        let p = &all[pick.index(all.len())];
        let back = DirectedPlateauPolyhypercube::from_projections(d, &p.projections()).unwrap();
        prop_assert_eq!(&back, p);
        let sum: u64 = p.projections().iter().map(|t| t.area()).sum();
        prop_assert_eq!(sum, p.lateral_area());
    }
}
