mod common;

use convex_lines::chains::{has_k_cell_unbounded, is_cap, is_cup, longest_cap, longest_cup, subset_k_cell_unbounded};
use convex_lines::geom::orientation;
use convex_lines::{Line, LineFamily, Rat, Side};
use proptest::prelude::*;

use common::*;

fn family(max_n: usize) -> impl Strategy<Value = LineFamily> {
    prop::collection::vec(((-8i64..=8, 1i64..=3), (-8i64..=8, 1i64..=3)), 1..=max_n).prop_filter_map(
        "distinct slopes",
        |v| LineFamily::new(v.into_iter().map(|((a, b), (c, d))| Line::new(Rat::new(a, b), Rat::new(c, d))).collect()).ok(),
    )
}

/// Slope-sorted duals turn strictly the same way at every consecutive triple.
fn duals_turn(f: &LineFamily, turn: i8) -> bool {
    let d = f.duals();
    d.windows(3).all(|w| orientation(&w[0], &w[1], &w[2]) == turn)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_program_matches_brute_force(f in family(7)) {
        prop_assert_eq!(longest_cup(&f).size, brute_chain(&f, 1));
        prop_assert_eq!(longest_cap(&f).size, brute_chain(&f, -1));
    }

    #[test]
    fn cups_are_concave_dual_chains(f in family(6)) {
        prop_assert_eq!(is_cup(&f), duals_turn(&f, -1));
        prop_assert_eq!(is_cap(&f), duals_turn(&f, 1));
    }

    #[test]
    fn witnesses_and_their_subsets_are_chains(f in family(7)) {
        for (r, pred) in [(longest_cup(&f), is_cup as fn(&LineFamily) -> bool), (longest_cap(&f), is_cap)] {
            prop_assert!(pred(&f.subset(&r.witness)));
            for drop in 0..r.witness.len() {
                let mut w = r.witness.clone();
                w.remove(drop);
                if !w.is_empty() {
                    prop_assert!(pred(&f.subset(&w)));
                }
            }
        }
    }

    #[test]
    fn cup_and_cap_only_when_small(f in family(5)) {
        prop_assert_eq!(is_cup(&f) && is_cap(&f), f.len() <= 2);
    }

    #[test]
    fn mirror_swaps_unbounded_sides(f in family(6)) {
        let m = convex_lines::construct::reflect_y(&f);
        for side in [Side::Left, Side::Right] {
            prop_assert_eq!(
                subset_k_cell_unbounded(&f, 4, side).is_some(),
                subset_k_cell_unbounded(&m, 4, side.mirror()).is_some()
            );
        }
    }
}

#[test]
fn whole_arrangement_unbounded_cells_match_oracle() {
    let mut rng = rng(21);
    for _ in 0..60 {
        let f = random_family(&mut rng, 5, 6, 3);
        for side in [Side::Left, Side::Right] {
            for k in 2..=5 {
                let want = brute_cells(&f).into_iter().any(|v| {
                    let o = cell_oracle(&f, &v).unwrap();
                    o.class == side.class() && o.bounding.len() >= k
                });
                assert_eq!(has_k_cell_unbounded(&f, k, side).is_some(), want, "k={k} {side}");
            }
        }
    }
}

#[test]
fn subset_unbounded_cells_match_oracle() {
    let mut rng = rng(22);
    for _ in 0..40 {
        let f = random_family(&mut rng, 6, 6, 3);
        let want = convex_lines::subsets::Combinations::new(f.len(), 4).find(|s| {
            let sub = f.subset(s);
            brute_cells(&sub).into_iter().any(|v| {
                let o = cell_oracle(&sub, &v).unwrap();
                o.class == Side::Right.class() && o.bounding.len() == 4
            })
        });
        assert_eq!(subset_k_cell_unbounded(&f, 4, Side::Right), want);
    }
}
