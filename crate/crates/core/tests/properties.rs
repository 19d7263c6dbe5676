use std::collections::HashMap;
use std::sync::OnceLock;

use proptest::prelude::*;

use wreathlab::automorphisms::{block_map, blocks_of, make_autospec, BlockKind, LampAutSpec};
use wreathlab::dl::{action_neighbors, element_of_vertex, graph_neighbors, vertex_of_element};
use wreathlab::group::{automorphism_group, FiniteGroup, GroupAut};
use wreathlab::twisted::{
    block_class_count, reidemeister_abelian, reidemeister_fh, twisted_classes, window_class_count,
    window_class_count_direct,
};
use wreathlab::wreath::{
    ball, normal_form, parse_word, GeneratingSet, LampConfig, Side, Word, WreathElement, WreathGroup,
    word_length_ct,
};

fn element(n: usize) -> impl Strategy<Value = WreathElement> {
    (prop::collection::btree_map(-5i64..=5, 1..n, 0..4), -4i64..=4)
        .prop_map(|(lamps, m)| WreathElement::new(LampConfig::from_pairs(lamps).unwrap(), m))
}

fn lamplighter_and_elements(k: usize) -> impl Strategy<Value = (usize, Vec<WreathElement>)> {
    prop::sample::select(vec![2usize, 3, 5])
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(element(n), k)))
}

fn word(set: GeneratingSet, n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    let alphabet = Word::alphabet(set, n);
    prop::collection::vec(prop::sample::select(alphabet), 0..=max_len)
        .prop_map(move |tokens| Word { set, n, tokens })
}

fn units(n: usize) -> Vec<usize> {
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// A random compatible automorphism of `L_n` with a unit `ξ`.
fn cyclic_spec(n: usize) -> impl Strategy<Value = (WreathGroup, LampAutSpec)> {
    (prop::sample::select(units(n)), -3i64..=3, prop::bool::ANY, prop::option::of(element(n))).prop_map(
        move |(k, c, flip, conj)| {
            let w = WreathGroup::lamplighter(n).unwrap();
            let xi = GroupAut::cyclic_unit(w.base(), k).unwrap();
            let s = make_autospec(&w, xi, c, if flip { -1 } else { 1 }).unwrap();
            let s = match conj {
                Some(x) => s.with_conjugator(x),
                None => s,
            };
            (w, s)
        },
    )
}

fn any_cyclic_spec() -> impl Strategy<Value = (WreathGroup, LampAutSpec)> {
    prop::sample::select(vec![2usize, 3, 4, 5, 6, 7]).prop_flat_map(cyclic_spec)
}

fn reflecting_spec(n: usize) -> impl Strategy<Value = (WreathGroup, LampAutSpec)> {
    cyclic_spec(n).prop_map(|(w, mut s)| {
        s.epsilon = -1;
        s.conjugator = None;
        (w, s)
    })
}

/// Distances in the `{a, t}` Cayley graph of `L_n`, computed once.
fn at_ball(n: usize) -> &'static HashMap<WreathElement, usize> {
    static BALLS: OnceLock<Vec<HashMap<WreathElement, usize>>> = OnceLock::new();
    let balls = BALLS.get_or_init(|| {
        [2usize, 3]
            .iter()
            .map(|&n| ball(&WreathGroup::lamplighter(n).unwrap(), GeneratingSet::AT, 7).distance)
            .collect()
    });
    &balls[n - 2]
}

/// Orbits of `x ~ y x φ(y)^{-1}` by closing over every `y`.
fn twisted_orbits_brute(g: &FiniteGroup, phi: &GroupAut) -> usize {
    let mut seen = vec![false; g.order()];
    let mut count = 0;
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        count += 1;
        for y in g.elements() {
            seen[g.mul(g.mul(y, x), g.inv(phi.apply(y)))] = true;
        }
    }
    count
}

fn small_groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::cyclic(6).unwrap(),
        FiniteGroup::cyclic(8).unwrap(),
        FiniteGroup::direct_sum(vec![FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(2).unwrap()]).unwrap(),
        FiniteGroup::direct_sum(vec![FiniteGroup::cyclic(3).unwrap(), FiniteGroup::cyclic(3).unwrap()]).unwrap(),
        FiniteGroup::dihedral(6).unwrap(),
        FiniteGroup::dihedral(8).unwrap(),
        FiniteGroup::quaternion8(),
        FiniteGroup::alternating(4).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_associative((n, xs) in lamplighter_and_elements(3)) {
        let w = WreathGroup::lamplighter(n).unwrap();
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(w.mul(&w.mul(x, y), z), w.mul(x, &w.mul(y, z)));
    }

    #[test]
    fn inverses_cancel((n, xs) in lamplighter_and_elements(1)) {
        let w = WreathGroup::lamplighter(n).unwrap();
        let x = &xs[0];
        prop_assert!(w.mul(x, &w.inv(x)).is_identity());
        prop_assert!(w.mul(&w.inv(x), x).is_identity());
        prop_assert_eq!(w.mul(&w.identity(), x), x.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normal_forms_are_sound_and_unique((n, xs) in lamplighter_and_elements(1)) {
        let w = WreathGroup::lamplighter(n).unwrap();
        let g = &xs[0];
        for side in [Side::Rf, Side::Lf] {
            let nf = normal_form(&w, g, side).unwrap();
            prop_assert_eq!(&nf.to_element(), g);
            let back = w.eval_word(&nf.to_word()).unwrap();
            prop_assert_eq!(&back, g);
            prop_assert_eq!(normal_form(&w, &back, side).unwrap(), nf);
        }
    }

    #[test]
    fn words_round_trip_through_text(
        set in prop::sample::select(vec![GeneratingSet::AT, GeneratingSet::TA]),
        n in 2usize..=5,
        seed in prop::collection::vec(any::<prop::sample::Index>(), 0..=5),
    ) {
        let alphabet = Word::alphabet(set, n);
        let tokens = seed.iter().map(|i| *i.get(&alphabet)).collect();
        let word = Word { set, n, tokens };
        prop_assert_eq!(parse_word(&word.to_string(), set, n).unwrap(), word);
    }

    #[test]
    fn closed_form_length_matches_bfs(wd in (2usize..=3).prop_flat_map(|n| word(GeneratingSet::AT, n, 7))) {
        let n = wd.n;
        let w = WreathGroup::lamplighter(n).unwrap();
        let g = w.eval_word(&wd).unwrap();
        let bfs = at_ball(n).get(&g).copied().expect("inside the ball");
        prop_assert_eq!(word_length_ct(&w, &g).unwrap() as usize, bfs);
        prop_assert!(bfs <= wd.len());
    }

    #[test]
    fn dl_vertices_match_the_action((n, xs) in lamplighter_and_elements(1)) {
        let w = WreathGroup::lamplighter(n).unwrap();
        let g = &xs[0];
        let v = vertex_of_element(g);
        prop_assert_eq!(&element_of_vertex(&v, n).unwrap(), g);
        let mut from_graph = graph_neighbors(&v, n, n);
        let mut from_action: Vec<_> = action_neighbors(&w, g).iter().map(vertex_of_element).collect();
        from_graph.sort_by_key(|v| v.to_string());
        from_action.sort_by_key(|v| v.to_string());
        prop_assert_eq!(from_graph, from_action);
    }

    #[test]
    fn automorphisms_are_homomorphisms(((w, s), x, y) in any_cyclic_spec().prop_flat_map(|(w, s)| {
        let n = w.base().order();
        (Just((w, s)), element(n), element(n))
    })) {
        prop_assert_eq!(w.apply_aut(&s, &w.mul(&x, &y)), w.mul(&w.apply_aut(&s, &x), &w.apply_aut(&s, &y)));
        prop_assert_eq!(w.apply_aut(&s, &w.t()).shift, s.epsilon as i64);
    }

    #[test]
    fn composition_matches_sequential_application(((w, s1, s2), x) in (2usize..=7).prop_flat_map(|n| {
        (cyclic_spec(n), cyclic_spec(n), element(n))
    }).prop_map(|((w, s1), (_, s2), x)| ((w, s1, s2), x))) {
        let both = w.compose_aut(&s2, &s1);
        prop_assert_eq!(w.apply_aut(&both, &x), w.apply_aut(&s2, &w.apply_aut(&s1, &x)));
    }

    #[test]
    fn twisted_class_methods_agree(gi in 0usize..8, pick in any::<prop::sample::Index>()) {
        let g = &small_groups()[gi];
        let auts = automorphism_group(g, 64).unwrap();
        let phi = pick.get(&auts);
        let report = twisted_classes(g, phi);
        prop_assert_eq!(report.count, twisted_orbits_brute(g, phi));
        prop_assert_eq!(report.count, reidemeister_fh(g, phi));
        prop_assert_eq!(report.representatives.len(), report.count);
        if g.is_abelian() {
            prop_assert_eq!(report.count, reidemeister_abelian(g, phi).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn blocks_partition_the_window((w, s) in prop::sample::select(vec![2usize, 3, 4, 5]).prop_flat_map(reflecting_spec),
                                   lo in -4i64..=0, len in 1i64..=6) {
        let window: Vec<i64> = (lo..lo + len).collect();
        let blocks = blocks_of(&s, &window).unwrap();
        for &p in &window {
            let hits = blocks.iter().filter(|&&(a, b)| a == p || b == p).count();
            prop_assert_eq!(hits, 1);
        }
        for &(a, b) in &blocks {
            prop_assert_eq!(a + b, s.offset);
            let m = block_map(&w, &s, a).unwrap();
            let kind = if a == b { BlockKind::Middle } else { BlockKind::Pair };
            prop_assert_eq!(m.kind, kind);
            prop_assert_eq!(m.partner, b);
        }
        let pair_counts: Vec<usize> = blocks.iter().filter(|(a, b)| a != b)
            .map(|&(a, _)| block_class_count(&w, &s, a, 10_000).unwrap()).collect();
        prop_assert!(pair_counts.windows(2).all(|p| p[0] == p[1]));
    }

    #[test]
    fn window_count_factors_over_blocks((w, s) in prop::sample::select(vec![2usize, 3, 4, 5]).prop_flat_map(reflecting_spec),
                                        lo in -2i64..=1, len in 1i64..=2) {
        let window: Vec<i64> = (lo..lo + len).collect();
        let direct = window_class_count_direct(&w, &s, &window, 100_000);
        prop_assume!(direct.is_ok());
        prop_assert_eq!(window_class_count(&w, &s, &window, 100_000).unwrap(), direct.unwrap());
    }
}
