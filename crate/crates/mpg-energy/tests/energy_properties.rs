use mpg_arena::{generate, load_arena, Arc, Arena, ExactRational, FareyTerm, GenSpec, Owner};
use mpg_energy::{
    inc_set, is_compatible, is_consistent, least_sepm, lift_delta, min_credit, value_iteration,
    EnergyGame, EnergyValue, Sepm,
};
use mpg_oracle::brute_min_credit;
use proptest::prelude::*;

use EnergyValue::{Finite, Top};

const GAMMA_EX: &str = include_str!("../../../fixtures/gamma_ex.mpg");

fn example() -> Arena {
    load_arena(GAMMA_EX).unwrap()
}

fn plus_one(a: &Arena) -> EnergyGame<'_> {
    EnergyGame::shifted(a, &ExactRational::from_integer(-1))
}

#[test]
fn least_sepm_of_example_plus_one() {
    let a = example();
    let g = plus_one(&a);
    let (f, stats) = value_iteration(&g, None, None);
    let expected = [0, 4, 8, 4, 0, 4, 0].map(Finite);
    assert_eq!(f.levels, expected);
    assert_eq!(stats.total, stats.per_vertex.iter().sum::<u64>());
    assert_eq!(min_credit(&f, 2), Finite(8));
    assert_eq!(lift_delta(&g, &f.levels, 2), Finite(8));
    assert!(inc_set(&g, &f.levels).is_empty());
}

#[test]
fn reweighting_conventions_agree() {
    let a = example();
    let unit = FareyTerm {
        num: 1,
        den: 1,
        index: 1,
    };
    let g = EnergyGame::reweighted(&a, -2, unit);
    assert_eq!(g.weights(), plus_one(&a).weights());
}

#[test]
fn compatibility_at_e() {
    let a = example();
    let g = plus_one(&a);
    let f = least_sepm(&g);
    // arcs 4..8 leave E towards A, C, F, G
    let compatible: Vec<bool> = (4..8).map(|e| is_compatible(&g, &f.levels, e)).collect();
    assert_eq!(compatible, [true, false, false, true]);
    let mut top = f.levels.clone();
    top[4] = Top;
    assert!((4..8).all(|e| is_compatible(&g, &top, e)));
}

#[test]
fn zero_map_inconsistencies_of_example_plus_one() {
    let a = example();
    let g = plus_one(&a);
    let zero = Sepm::zero(7, g.cap());
    assert_eq!(inc_set(&g, &zero.levels), vec![2, 3, 5]);
}

#[test]
fn single_negative_loop() {
    let a = Arena::new(
        vec![Owner::Player1],
        vec![Arc {
            src: 0,
            dst: 0,
            weight: -1,
        }],
    )
    .unwrap();
    let g = EnergyGame::with_cap(&a, vec![-1], 0);
    assert_eq!(inc_set(&g, &[Finite(0)]), vec![0]);
    assert_eq!(least_sepm(&g).levels, vec![Top]);
}

#[test]
fn nonnegative_weights_need_no_lift() {
    let a = generate(&GenSpec::new(6, 5, 3));
    let g = EnergyGame::new(&a, a.arcs().iter().map(|e| e.weight.abs()).collect());
    let (f, stats) = value_iteration(&g, None, None);
    assert_eq!(f.levels, vec![Finite(0); 6]);
    assert_eq!(stats.total, 0);
}

#[test]
fn positive_self_loop_needs_no_credit() {
    let a = Arena::new(
        vec![Owner::Player0],
        vec![Arc {
            src: 0,
            dst: 0,
            weight: 2,
        }],
    )
    .unwrap();
    assert_eq!(
        min_credit(&least_sepm(&EnergyGame::from_arena(&a)), 0),
        Finite(0)
    );
}

#[test]
fn least_sepm_matches_credit_oracle() {
    for seed in 0..50u64 {
        let n = 1 + (seed % 6) as usize;
        let a = generate(&GenSpec::new(n, 4, 1000 + seed));
        let g = EnergyGame::from_arena(&a);
        let f = least_sepm(&g);
        let oracle = brute_min_credit(&a, g.weights());
        let got: Vec<Option<i64>> = f.levels.iter().map(|l| l.finite()).collect();
        assert_eq!(got, oracle, "seed {seed}");
    }
}

fn arb_game() -> impl Strategy<Value = (Arena, Vec<i64>, i64)> {
    (1usize..5, any::<u64>(), 0i64..7).prop_flat_map(|(n, seed, cap)| {
        let a = generate(&GenSpec::new(n, 3, seed).with_max_out_degree(3));
        let m = a.m();
        (Just(a), prop::collection::vec(-4i64..4, m), Just(cap))
    })
}

fn arb_level(cap: i64) -> impl Strategy<Value = EnergyValue> {
    prop_oneof![(0..=cap).prop_map(Finite), Just(Top)]
}

fn all_maps(n: usize, cap: i64) -> Vec<Vec<EnergyValue>> {
    let mut maps = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for m in &maps {
            for l in (0..=cap).map(Finite).chain([Top]) {
                let mut e = m.clone();
                e.push(l);
                next.push(e);
            }
        }
        maps = next;
    }
    maps
}

proptest! {
    #[test]
    fn delta_is_monotone(
        (a, w, cap) in arb_game(),
        pairs in prop::collection::vec((arb_level(6), arb_level(6)), 4),
    ) {
        let g = EnergyGame::with_cap(&a, w, cap);
        let clamp = |l: EnergyValue| match l {
            Finite(k) => Finite(k.min(cap)),
            Top => Top,
        };
        let f: Vec<EnergyValue> = pairs.iter().take(a.n()).map(|p| clamp(p.0.min(p.1))).collect();
        let h: Vec<EnergyValue> = pairs.iter().take(a.n()).map(|p| clamp(p.0.max(p.1))).collect();
        for v in 0..a.n() {
            prop_assert!(lift_delta(&g, &f, v) <= lift_delta(&g, &h, v));
        }
    }

    #[test]
    fn output_is_the_least_fixpoint((a, w, cap) in arb_game()) {
        let g = EnergyGame::with_cap(&a, w, cap);
        let (f, stats) = value_iteration(&g, None, None);
        prop_assert!(inc_set(&g, &f.levels).is_empty());
        for v in 0..a.n() {
            prop_assert!(stats.per_vertex[v] <= cap as u64 + 1);
        }
        for m in all_maps(a.n(), cap) {
            if (0..a.n()).all(|v| is_consistent(&g, &m, v)) {
                prop_assert!(f.levels.iter().zip(&m).all(|(x, y)| x <= y));
            }
        }
    }

    #[test]
    fn warm_start_from_a_heavier_game((a, w, _cap) in arb_game(), bump in 0i64..3) {
        let heavy: Vec<i64> = w.iter().map(|x| x + bump).collect();
        let max_abs = w.iter().chain(&heavy).map(|x| x.abs()).max().unwrap();
        let cap = (a.n() as i64 - 1) * max_abs;
        let light = EnergyGame::with_cap(&a, w, cap);
        let f0 = least_sepm(&EnergyGame::with_cap(&a, heavy, cap));
        let cold = least_sepm(&light);
        prop_assert!(f0.le(&cold));
        let (warm, _) = value_iteration(&light, Some(&f0.levels), None);
        prop_assert_eq!(warm, cold);
    }
}
