use mpg_arena::{
    farey_brute_force, farey_sequence, generate, load_arena, scaled_weight, serialize_arena, Arc,
    Arena, ArenaError, FareyTerm, GenSpec, Owner,
};
use proptest::prelude::*;

const GAMMA_EX: &str = include_str!("../../../fixtures/gamma_ex.mpg");

#[test]
fn example_game_loads_with_expected_bounds() {
    let a = load_arena(GAMMA_EX).unwrap();
    assert_eq!((a.n(), a.m()), (7, 10));
    assert_eq!((a.w_minus(), a.w_plus(), a.max_abs_weight()), (-5, 3, 5));
    let v0: Vec<&str> = a
        .vertices_of(Owner::Player0)
        .into_iter()
        .map(|v| a.name(v).unwrap())
        .collect();
    assert_eq!(v0, ["B", "D", "E", "G"]);
}

#[test]
fn smallest_legal_arena() {
    let a = load_arena("mpg 1 1\nv 0 0\ne 0 0 0\n").unwrap();
    assert_eq!(a.max_abs_weight(), 0);
}

#[test]
fn sink_is_rejected() {
    let err = load_arena("mpg 2 1\nv 0 0\nv 1 0\ne 1 0 2\n").unwrap_err();
    assert_eq!(err, ArenaError::SinkVertex(0));
}

#[test]
fn induced_subarena_on_example() {
    let a = load_arena(GAMMA_EX).unwrap();
    let fg = a.induced_subarena(&[5, 6]).unwrap();
    assert_eq!(
        fg.arena.arcs(),
        &[
            Arc {
                src: 0,
                dst: 1,
                weight: -5
            },
            Arc {
                src: 1,
                dst: 0,
                weight: 3
            }
        ]
    );
    let all: Vec<usize> = (0..7).collect();
    assert_eq!(a.induced_subarena(&all).unwrap().arena, a);
    let e = a.induced_subarena(&[4]).unwrap();
    assert_eq!((e.arena.n(), e.arena.m()), (1, 0));
}

#[test]
fn farey_matches_brute_force_up_to_forty() {
    for n in 1..=40 {
        let seq = farey_sequence(n);
        let streamed: Vec<(i64, i64)> = seq.terms().iter().map(|t| (t.num, t.den)).collect();
        let oracle = farey_brute_force(n);
        assert_eq!(streamed, oracle, "order {n}");
        assert_eq!(seq.len(), oracle.len(), "order {n}");
    }
}

#[test]
fn farey_order_seven_is_the_sorted_reduced_set() {
    let seq = farey_sequence(7);
    assert_eq!(seq.len(), 19);
    for w in seq.terms().windows(2) {
        assert!(w[0].num * w[1].den < w[1].num * w[0].den);
        assert_eq!(w[1].num * w[0].den - w[0].num * w[1].den, 1);
    }
}

fn arb_arena() -> impl Strategy<Value = Arena> {
    (1usize..8, 0i64..20, any::<u64>(), 1usize..5)
        .prop_map(|(n, w, seed, d)| generate(&GenSpec::new(n, w, seed).with_max_out_degree(d)))
}

proptest! {
    #[test]
    fn load_serialize_round_trip(a in arb_arena()) {
        let text = serialize_arena(&a);
        let b = load_arena(&text).unwrap();
        prop_assert_eq!(&b, &a);
        prop_assert_eq!(serialize_arena(&b), text);
    }

    #[test]
    fn adjacency_is_a_transpose(a in arb_arena()) {
        for (id, arc) in a.arcs().iter().enumerate() {
            prop_assert!(a.out_arcs(arc.src).contains(&id));
            prop_assert!(a.in_arcs(arc.dst).contains(&id));
        }
        let outs: usize = (0..a.n()).map(|v| a.out_arcs(v).len()).sum();
        let ins: usize = (0..a.n()).map(|v| a.in_arcs(v).len()).sum();
        prop_assert_eq!(outs, a.m());
        prop_assert_eq!(ins, a.m());
    }

    #[test]
    fn scaled_weights_decrease_along_scan_order(
        w in -30i64..30, n in 1i64..9, i1 in -5i64..5, di in 0i64..3, j1 in 0usize..64, j2 in 0usize..64,
    ) {
        let seq = farey_sequence(n);
        let s = seq.len();
        let (j1, j2) = (1 + j1 % (s - 1), 1 + j2 % (s - 1));
        let i2 = i1 + di;
        prop_assume!((i1, j1) < (i2, j2));
        let (f1, f2): (FareyTerm, FareyTerm) = (seq.term(j1), seq.term(j2));
        let lhs = f2.den as i128 * scaled_weight(w, i1, f1) as i128;
        let rhs = f1.den as i128 * scaled_weight(w, i2, f2) as i128;
        prop_assert!(lhs > rhs);
    }
}
