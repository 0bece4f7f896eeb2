use std::collections::HashSet;

use hexcut::boundary::{emit_word, from_hexagons, parse_word, BoundaryCycle};
use hexcut::formats::{parse_hexbound, write_hexbound};
use hexcut::generators::random_benzenoid;
use hexcut::indices::compute_all;
use hexcut::lattice::{edge_class, hex_vertices, rotate120, HexCoord, VertexCoord};
use hexcut::oracle::{build_graph, oracle_values, DEFAULT_BOUND};
use hexcut::treealgo::{definitional_oracle, TreeIndex, WeightedTree};
use proptest::prelude::*;

fn lattice_vertex() -> impl Strategy<Value = VertexCoord> {
    (-200i64..200, -200i64..200, any::<bool>()).prop_map(|(q, r, right)| {
        let (x, y) = HexCoord::new(q, r).center();
        if right {
            VertexCoord::new(x + 2, y)
        } else {
            VertexCoord::new(x - 2, y)
        }
    })
}

fn tree() -> impl Strategy<Value = WeightedTree> {
    (1usize..13).prop_flat_map(|n| {
        (
            prop::collection::vec(0u64..10, n),
            prop::collection::vec((any::<prop::sample::Index>(), 0u64..10), n - 1),
        )
            .prop_map(|(weights, links)| {
                let edges = links.iter().enumerate().map(|(i, (p, w))| (p.index(i + 1), i + 1, *w)).collect();
                WeightedTree::new(weights, edges).unwrap()
            })
    })
}

fn relabel(t: &WeightedTree, perm: &[usize]) -> WeightedTree {
    let mut weights = vec![0; t.len()];
    for (i, &w) in t.weights().iter().enumerate() {
        weights[perm[i]] = w;
    }
    let edges = t.edges().iter().map(|&(a, b, w)| (perm[b], perm[a], w)).collect();
    WeightedTree::new(weights, edges).unwrap()
}

fn benzenoid() -> impl Strategy<Value = (HashSet<HexCoord>, BoundaryCycle)> {
    (1usize..25, any::<u64>()).prop_map(|(n, seed)| {
        let hs: HashSet<HexCoord> = random_benzenoid(n, seed).into_iter().collect();
        let z = from_hexagons(&hs).unwrap();
        (hs, z)
    })
}

proptest! {
    #[test]
    fn rotation_has_order_three(v in lattice_vertex()) {
        prop_assert_eq!(rotate120(rotate120(rotate120(v))), v);
        prop_assert_eq!(rotate120(v).kind(), v.kind());
    }

    #[test]
    fn rotation_is_injective(a in lattice_vertex(), b in lattice_vertex()) {
        prop_assert_eq!(a == b, rotate120(a) == rotate120(b));
    }

    #[test]
    fn rotation_cycles_edge_classes(q in -50i64..50, r in -50i64..50) {
        let vs = hex_vertices(HexCoord::new(q, r));
        for i in 0..6 {
            let (a, b) = (vs[i], vs[(i + 1) % 6]);
            let class = edge_class(a, b).unwrap();
            prop_assert_eq!(edge_class(rotate120(a), rotate120(b)).unwrap(), class.rotated());
            prop_assert_eq!(edge_class(b, a).unwrap(), class);
        }
    }

    #[test]
    fn tree_primitives_match_oracle(t in tree()) {
        for which in TreeIndex::ALL {
            prop_assert_eq!(which.fast(&t).unwrap(), definitional_oracle(&t, which).unwrap(), "{:?}", which);
        }
    }

    #[test]
    fn tree_primitives_ignore_labels(t in tree(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..t.len()).collect();
        let mut rng = hexcut::generators::SplitMix64::new(seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.below(i + 1));
        }
        let u = relabel(&t, &perm);
        for which in TreeIndex::ALL {
            prop_assert_eq!(which.fast(&t).unwrap(), which.fast(&u).unwrap(), "{:?}", which);
        }
    }

    #[test]
    fn word_round_trip((_hs, z) in benzenoid()) {
        let w = emit_word(&z);
        let back = parse_word(&w).unwrap();
        prop_assert_eq!(emit_word(&back), w.clone());
        prop_assert_eq!(parse_hexbound(&write_hexbound(&z)).unwrap(), back);
        prop_assert_eq!(w.steps.len(), z.len());
    }

    #[test]
    fn start_and_orientation_do_not_matter((_hs, z) in benzenoid(), k in any::<usize>()) {
        let base = compute_all(&z).unwrap().values;
        let shifted = z.rotate_start(k);
        prop_assert_eq!(emit_word(&shifted), emit_word(&z));
        prop_assert_eq!(compute_all(&shifted).unwrap().values, base);
        let mut vs = shifted.vertices().to_vec();
        vs.reverse();
        let flipped = BoundaryCycle::from_vertices(vs).unwrap();
        prop_assert_eq!(compute_all(&flipped).unwrap().values, base);
        prop_assert_eq!(compute_all(&z.rotate120()).unwrap().values, base);
    }

    #[test]
    fn fast_matches_oracle((hs, z) in benzenoid()) {
        let g = build_graph(&hs).unwrap();
        prop_assert_eq!(compute_all(&z).unwrap().values, oracle_values(&g, DEFAULT_BOUND).unwrap());
        prop_assert_eq!(z.hexagon_count() as usize, hs.len());
    }
}
