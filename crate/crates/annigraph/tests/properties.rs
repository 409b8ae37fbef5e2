//! Property tests for the algebraic and graph invariants, driven by rings
//! sampled from the generated corpus and by random abstract graphs.

use annigraph::corpus::{generate_specs, CorpusConfig};
use annigraph::graph::{extra_edges, ExtNat, IdealGraph};
use annigraph::ideal::{annihilator, ideal_product, ideal_sum, IdealLattice};
use annigraph::oracle;
use annigraph::ring::FiniteRing;
use annigraph::ringspec::RingSpec;
use annigraph::verify::RingAnalysis;
use proptest::prelude::*;

fn corpus_ring() -> impl Strategy<Value = FiniteRing> {
    let specs = generate_specs(&CorpusConfig::all(24));
    proptest::sample::select(specs).prop_map(|s| s.build().unwrap())
}

fn analysis() -> impl Strategy<Value = RingAnalysis> {
    corpus_ring().prop_map(RingAnalysis::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Every AG edge is an A_I edge, and the element-witness adjacency agrees
    /// with the set-union definition on every vertex pair.
    #[test]
    fn ag_subgraph_and_adjacency_oracle(a in analysis()) {
        let verts = a.ai.vertices();
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                if a.ag.adjacent(i, j) {
                    prop_assert!(a.ai.adjacent(i, j));
                }
                prop_assert_eq!(
                    a.ai.adjacent(i, j),
                    oracle::ai_adjacent_by_definition(&a.ring, &verts[i], &verts[j])
                );
            }
        }
    }

    /// Non-adjacent pairs have comparable annihilators; incomparable
    /// annihilators force an edge; AG-distance 3 forces an edge; and every
    /// non-edge admits a common AG neighbor (the L2.1 transfer clauses,
    /// checked here independently of the verifier).
    #[test]
    fn edge_transfer_clauses(a in analysis()) {
        let verts = a.ai.vertices();
        let ann: Vec<Vec<usize>> = verts
            .iter()
            .map(|v| annihilator(&a.ring, v).unwrap().elements().to_vec())
            .collect();
        let subset = |x: &[usize], y: &[usize]| x.iter().all(|e| y.binary_search(e).is_ok());
        for i in 0..verts.len() {
            let d = a.ag.bfs_distances(i);
            for j in (i + 1)..verts.len() {
                let adj = a.ai.adjacent(i, j);
                if !adj {
                    prop_assert!(subset(&ann[i], &ann[j]) || subset(&ann[j], &ann[i]));
                    prop_assert!((0..verts.len())
                        .any(|k| a.ag.adjacent(i, k) && a.ag.adjacent(k, j)));
                }
                if !subset(&ann[i], &ann[j]) && !subset(&ann[j], &ann[i]) {
                    prop_assert!(adj);
                }
                if d[j] == 3 {
                    prop_assert!(adj);
                }
            }
        }
    }

    /// Edge criterion, forward direction, on every ring (reduced or not):
    /// an A_I edge forces I ∩ Ann(J) != 0 and J ∩ Ann(I) != 0.
    #[test]
    fn edge_forces_nonzero_intersections(a in analysis()) {
        let verts = a.ai.vertices();
        let zero = a.ring.zero();
        for i in 0..verts.len() {
            for j in (i + 1)..verts.len() {
                if !a.ai.adjacent(i, j) {
                    continue;
                }
                let ann_i = annihilator(&a.ring, &verts[i]).unwrap();
                let ann_j = annihilator(&a.ring, &verts[j]).unwrap();
                prop_assert!(verts[i]
                    .elements()
                    .iter()
                    .any(|&e| e != zero && ann_j.contains(e)));
                prop_assert!(verts[j]
                    .elements()
                    .iter()
                    .any(|&e| e != zero && ann_i.contains(e)));
            }
        }
    }

    /// The triangle-completion lemma behind the reduced triangle theorem:
    /// if I -- J is an extra edge and a third vertex K lies in Ann(IJ) with
    /// KI != 0 and KJ != 0, then I -- K -- J -- I is a triangle of A_I none
    /// of whose edges lies in AG.
    #[test]
    fn extra_edge_triangle_completion(a in analysis()) {
        let verts = a.ai.vertices();
        for &(i, j) in a.extra_edges() {
            let prod = ideal_product(&a.ring, &verts[i], &verts[j]).unwrap();
            let ann_ij = annihilator(&a.ring, &prod).unwrap();
            for k in 0..verts.len() {
                if k == i || k == j || !verts[k].is_subset_of(&ann_ij) {
                    continue;
                }
                let ki = ideal_product(&a.ring, &verts[k], &verts[i]).unwrap();
                let kj = ideal_product(&a.ring, &verts[k], &verts[j]).unwrap();
                if !ki.is_zero() && !kj.is_zero() {
                    prop_assert!(a.ai.adjacent(i, k) && !a.ag.adjacent(i, k));
                    prop_assert!(a.ai.adjacent(j, k) && !a.ag.adjacent(j, k));
                }
            }
        }
    }

    /// Annihilator laws across all ideal pairs of a sampled ring.
    #[test]
    fn annihilator_laws(ring in corpus_ring()) {
        let lat = IdealLattice::enumerate(&ring);
        for i in lat.ideals() {
            let ann_i = annihilator(&ring, i).unwrap();
            for j in lat.ideals() {
                let ann_j = annihilator(&ring, j).unwrap();
                let ann_ij =
                    annihilator(&ring, &ideal_product(&ring, i, j).unwrap()).unwrap();
                for &e in ann_i.elements().iter().chain(ann_j.elements()) {
                    prop_assert!(ann_ij.contains(e));
                }
                if i.is_subset_of(j) {
                    prop_assert!(ann_j.is_subset_of(&ann_i));
                }
            }
        }
    }

    /// I(J + K) = IJ + IK over sampled rings.
    #[test]
    fn product_distributes(ring in corpus_ring()) {
        let lat = IdealLattice::enumerate(&ring);
        let ideals = lat.ideals();
        // cap the cube at a fixed size to keep cases cheap
        let take = ideals.len().min(6);
        for i in &ideals[..take] {
            for j in &ideals[..take] {
                for k in ideals.iter().rev().take(take) {
                    let lhs = ideal_product(&ring, i, &ideal_sum(&ring, j, k).unwrap()).unwrap();
                    let rhs = ideal_sum(
                        &ring,
                        &ideal_product(&ring, i, j).unwrap(),
                        &ideal_product(&ring, i, k).unwrap(),
                    )
                    .unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }

    /// The sum-closure lattice agrees with the subset-scan oracle on rings
    /// small enough to scan.
    #[test]
    fn lattice_agrees_with_subset_scan(ring in corpus_ring()) {
        if ring.order() > 16 {
            return Ok(());
        }
        let fast: Vec<Vec<usize>> = IdealLattice::enumerate(&ring)
            .ideals()
            .iter()
            .map(|i| i.elements().to_vec())
            .collect();
        prop_assert_eq!(fast, oracle::all_ideals_subset_scan(&ring));
    }

    /// Graph metrics agree with brute-force oracles on random graphs.
    #[test]
    fn graph_metrics_match_oracles(
        n in 1usize..=8,
        bits in proptest::collection::vec(any::<bool>(), 0..=28),
    ) {
        let mut edges = Vec::new();
        let mut idx = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if idx < bits.len() && bits[idx] {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        let g = IdealGraph::synthetic(n, &edges);
        prop_assert_eq!(g.girth(), oracle::girth_by_cycle_enumeration(&g));
        prop_assert_eq!(g.diameter(), oracle::diameter_floyd_warshall(&g));
    }

    /// Girth values of A_I stay in {3, 4, inf}; when the graphs differ the
    /// infinite case is excluded; diameter <= 2 with two or more vertices.
    #[test]
    fn global_graph_bounds(a in analysis()) {
        match a.ai.girth() {
            ExtNat::Finite(g) => prop_assert!(g == 3 || g == 4),
            ExtNat::Infinite => {}
        }
        if !a.extra_edges().is_empty() {
            prop_assert!(a.ai.girth().is_finite());
        }
        if a.vertex_count() >= 2 {
            prop_assert!(a.ai.is_connected());
            match a.ai.diameter() {
                Some(ExtNat::Finite(d)) => prop_assert!(d <= 2),
                other => prop_assert!(false, "diameter {other:?}"),
            }
        }
    }

    /// Quotients by the nilradical are reduced; nilpotent-ideal quotient
    /// lattices stay consistent with the parent order.
    #[test]
    fn quotient_by_nilradical_reduced(ring in corpus_ring()) {
        let nil = ring.nilradical();
        if nil.len() < ring.order() {
            let q = ring.quotient(nil.elements()).unwrap();
            prop_assert!(q.is_reduced());
            prop_assert_eq!(q.order() * nil.len(), ring.order());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// render/parse round trip over random well-formed specifications.
    #[test]
    fn ringspec_round_trip(spec in spec_ast()) {
        let rendered = spec.render();
        let reparsed = RingSpec::parse(&rendered).unwrap();
        prop_assert_eq!(reparsed, spec);
    }
}

const PRIMES: [u64; 5] = [2, 3, 5, 7, 31];

fn atom_ast() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        (2u64..=9999).prop_map(RingSpec::Cyclic),
        (proptest::sample::select(&PRIMES[..]), 1usize..=5).prop_flat_map(|(p, d)| {
            proptest::collection::vec(0..p, d).prop_map(move |mut coeffs| {
                coeffs.push(1);
                RingSpec::PolyQuot(p, coeffs)
            })
        }),
        (proptest::sample::select(&PRIMES[..]), 1u32..=30)
            .prop_map(|(p, d)| RingSpec::NullSquare(p, d)),
    ]
}

fn spec_ast() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        atom_ast(),
        proptest::collection::vec(atom_ast(), 2..=4).prop_map(RingSpec::Product),
    ]
}

/// The product lattice has the product of the factor lattice sizes.
#[test]
fn product_lattice_size_multiplies() {
    let pairs = [("Z4", "Z9"), ("Z2", "Z16"), ("N(2,1)", "Z6")];
    for (l1, l2) in pairs {
        let r1 = RingSpec::parse(l1).unwrap().build().unwrap();
        let r2 = RingSpec::parse(l2).unwrap().build().unwrap();
        let prod = r1.product(&r2).unwrap();
        assert_eq!(
            IdealLattice::enumerate(&prod).len(),
            IdealLattice::enumerate(&r1).len() * IdealLattice::enumerate(&r2).len()
        );
    }
}

/// Minimal-ideal vertices keep their neighborhoods across both graphs on a
/// deterministic sample (the L-mini statement, outside the verifier).
#[test]
fn minimal_ideal_neighborhoods_agree() {
    for label in ["Z16", "Z2 x Z4", "Z2 x Z2 x Z2", "N(2,2)", "Z3 x Z9", "Z36"] {
        let ring = RingSpec::parse(label).unwrap().build().unwrap();
        let lat = IdealLattice::enumerate(&ring);
        let (ag, ai) = IdealGraph::build_pair(&ring, &lat);
        assert!(extra_edges(&ag, &ai).len() <= ai.edges().len());
        for v in ai.vertices() {
            if lat.is_minimal_ideal(v) {
                let na: Vec<String> =
                    ag.neighborhood(v).unwrap().iter().map(|i| i.to_string()).collect();
                let ni: Vec<String> =
                    ai.neighborhood(v).unwrap().iter().map(|i| i.to_string()).collect();
                assert_eq!(na, ni, "{label}: vertex {v}");
            }
        }
    }
}
