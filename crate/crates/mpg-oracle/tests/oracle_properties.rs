use mpg_arena::{
    generate, load_arena, project, Arc, Arena, ExactRational, GenSpec, Owner, Strategy,
};
use mpg_oracle::{
    brute_min_credit, brute_min_max_values, brute_values, min_cycle_mean_reachable,
    min_reachable_cycle_mean, outcome_payoff, OracleError, StrategyProfile,
};

const GAMMA_EX: &str = include_str!("../../../fixtures/gamma_ex.mpg");

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

/// Profile on the example game choosing the named successor everywhere.
fn example_profile(a: &Arena, targets: [usize; 7]) -> StrategyProfile {
    let choice = (0..7)
        .map(|v| {
            *a.out_arcs(v)
                .iter()
                .find(|&&e| a.arc(e).dst == targets[v])
                .unwrap()
        })
        .collect();
    StrategyProfile { choice }
}

#[test]
fn example_payoffs() {
    let a = load_arena(GAMMA_EX).unwrap();
    // A→B, B→C, C→D, D→A, E→F, F→G, G→F
    let p = example_profile(&a, [1, 2, 3, 0, 5, 6, 5]);
    assert_eq!(outcome_payoff(&a, &p, 4), q(-1, 1));
    assert_eq!(outcome_payoff(&a, &p, 0), q(-1, 1));
    let self_loop = Arena::new(
        vec![Owner::Player1],
        vec![Arc {
            src: 0,
            dst: 0,
            weight: 7,
        }],
    )
    .unwrap();
    let p = StrategyProfile { choice: vec![0] };
    assert_eq!(outcome_payoff(&self_loop, &p, 0), q(7, 1));
}

#[test]
fn example_values_and_optimal_set() {
    let a = load_arena(GAMMA_EX).unwrap();
    let sol = brute_values(&a).unwrap();
    assert_eq!(sol.values, vec![q(-1, 1); 7]);
    assert_eq!(sol.optimal.len(), 4);
    let at_e: Vec<usize> = sol
        .optimal
        .iter()
        .map(|s| a.arc(s.choice[4].unwrap()).dst)
        .collect();
    assert_eq!(at_e, vec![0, 2, 5, 6]);
}

#[test]
fn minimiser_picks_the_lighter_loop() {
    let a = Arena::new(
        vec![Owner::Player1],
        vec![
            Arc {
                src: 0,
                dst: 0,
                weight: 2,
            },
            Arc {
                src: 0,
                dst: 0,
                weight: 5,
            },
        ],
    )
    .unwrap();
    assert_eq!(brute_values(&a).unwrap().values, vec![q(2, 1)]);
}

#[test]
fn guard_rejects_huge_games() {
    let n = 12;
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..4 {
            arcs.push(Arc {
                src: u,
                dst: (u + v) % n,
                weight: 0,
            });
        }
    }
    let a = Arena::new(vec![Owner::Player0; n], arcs).unwrap();
    assert!(matches!(
        brute_values(&a),
        Err(OracleError::TooLarge { .. })
    ));
}

#[test]
fn random_values_lie_on_the_value_grid_and_are_determined() {
    for seed in 0..200u64 {
        let n = 1 + (seed % 6) as usize;
        let a = generate(&GenSpec::new(n, 5, seed).with_max_out_degree(3));
        let sol = brute_values(&a).unwrap();
        let w = a.max_abs_weight();
        for val in &sol.values {
            assert!(*val.denom() <= n as i64, "seed {seed}");
            assert!(val.numer().abs() <= val.denom() * w, "seed {seed}");
        }
        assert!(!sol.optimal.is_empty());
        assert_eq!(brute_min_max_values(&a).unwrap(), sol.values, "seed {seed}");
    }
}

#[test]
fn cycle_means_of_simple_graphs() {
    let tri = Arena::new(
        vec![Owner::Player1; 3],
        vec![
            Arc {
                src: 0,
                dst: 1,
                weight: 1,
            },
            Arc {
                src: 1,
                dst: 2,
                weight: 2,
            },
            Arc {
                src: 2,
                dst: 0,
                weight: 3,
            },
        ],
    )
    .unwrap();
    assert_eq!(min_reachable_cycle_mean(&tri, 0), Some(q(2, 1)));
    let two = Arena::new(
        vec![Owner::Player1; 3],
        vec![
            Arc {
                src: 0,
                dst: 1,
                weight: 0,
            },
            Arc {
                src: 0,
                dst: 2,
                weight: 0,
            },
            Arc {
                src: 1,
                dst: 1,
                weight: 1,
            },
            Arc {
                src: 2,
                dst: 2,
                weight: -2,
            },
        ],
    )
    .unwrap();
    assert_eq!(min_reachable_cycle_mean(&two, 0), Some(q(-2, 1)));
    assert_eq!(min_reachable_cycle_mean(&two, 1), Some(q(1, 1)));
}

#[test]
fn optimal_strategies_of_example_secure_minus_one() {
    let a = load_arena(GAMMA_EX).unwrap();
    for sigma in brute_values(&a).unwrap().optimal {
        let p = project(&a, &sigma).unwrap();
        for v in 0..7 {
            assert_eq!(min_cycle_mean_reachable(&p, v), Some(q(-1, 1)));
        }
    }
}

#[test]
fn karp_agrees_with_profile_enumeration_on_projections() {
    for seed in 0..100u64 {
        let n = 1 + (seed % 6) as usize;
        let a = generate(&GenSpec::new(n, 5, seed).with_max_out_degree(3));
        let sol = brute_values(&a).unwrap();
        let sigma: &Strategy = &sol.optimal[0];
        let p = project(&a, sigma).unwrap();
        for v in 0..n {
            assert_eq!(
                min_cycle_mean_reachable(&p, v),
                Some(sol.values[v]),
                "seed {seed}"
            );
        }
    }
}

#[test]
fn credits_on_small_games() {
    let a = Arena::new(
        vec![Owner::Player0, Owner::Player1],
        vec![
            Arc {
                src: 0,
                dst: 1,
                weight: -3,
            },
            Arc {
                src: 1,
                dst: 0,
                weight: 4,
            },
            Arc {
                src: 1,
                dst: 1,
                weight: -1,
            },
        ],
    )
    .unwrap();
    let w: Vec<i64> = a.arcs().iter().map(|e| e.weight).collect();
    assert_eq!(brute_min_credit(&a, &w), vec![None, None]);
    let w = vec![-3, 4, 0];
    assert_eq!(brute_min_credit(&a, &w), vec![Some(3), Some(0)]);
}
