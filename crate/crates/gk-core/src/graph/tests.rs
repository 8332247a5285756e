use super::*;
use proptest::prelude::*;

fn g(vertices: &[u64], edges: &[(u64, u64)]) -> PrimeGraph {
    PrimeGraph::from_primes(vertices, edges).unwrap()
}

fn set(v: &[u64]) -> BTreeSet<Vertex> {
    v.iter().map(|&p| Vertex::Prime(p)).collect()
}

fn j4() -> PrimeGraph {
    g(
        &[2, 3, 5, 7, 11, 23, 29, 31, 37, 43],
        &[
            (2, 3),
            (2, 5),
            (2, 7),
            (2, 11),
            (3, 5),
            (3, 7),
            (3, 11),
            (5, 7),
        ],
    )
}

fn baby() -> PrimeGraph {
    let mut e: Vec<(u64, u64)> = [3, 5, 7, 11, 13, 17, 19, 23]
        .iter()
        .map(|&p| (2, p))
        .collect();
    e.extend([(3, 5), (3, 7), (3, 11), (3, 13), (5, 7), (5, 11)]);
    g(&[2, 3, 5, 7, 11, 13, 17, 19, 23, 31, 47], &e)
}

fn fi23() -> PrimeGraph {
    g(
        &[2, 3, 5, 7, 11, 13, 17, 23],
        &[
            (2, 3),
            (2, 5),
            (2, 7),
            (2, 11),
            (2, 13),
            (3, 5),
            (3, 7),
            (3, 13),
            (5, 7),
        ],
    )
}

fn th() -> PrimeGraph {
    g(
        &[2, 3, 5, 7, 13, 19, 31],
        &[(2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (3, 13)],
    )
}

#[test]
fn components_follow_two_first_convention() {
    let comps = j4().components();
    assert_eq!(comps.len(), 6);
    assert_eq!(comps[0], set(&[2, 3, 5, 7, 11]));
    assert_eq!(
        &comps[1..],
        &[set(&[23]), set(&[29]), set(&[31]), set(&[37]), set(&[43])]
    );
    assert!(PrimeGraph::empty().components().is_empty());
    let hs = g(&[2, 3, 5, 7, 11], &[(2, 3), (2, 5), (3, 5)]);
    assert_eq!(
        hs.components(),
        vec![set(&[2, 3, 5]), set(&[7]), set(&[11])]
    );
}

#[test]
fn independence_numbers() {
    assert_eq!(baby().independence_number(), 8);
    assert_eq!(fi23().independence_number(), 5);
    assert_eq!(g(&[2], &[]).independence_number(), 1);
    assert_eq!(j4().independence_number(), 7);
    assert_eq!(j4().t_at(Vertex::Prime(2)).unwrap(), 6);
    assert!(matches!(
        j4().t_at(Vertex::Prime(13)),
        Err(Error::VertexNotFound(_))
    ));
}

#[test]
fn clique_queries() {
    let f = fi23();
    let fours: Vec<_> = f
        .all_maximal_cliques()
        .into_iter()
        .filter(|c| c.len() == 4)
        .collect();
    assert_eq!(fours, vec![set(&[2, 3, 5, 7])]);
    assert!(!f.has_clique_of_size(5));
    assert!(!th().has_clique_of_size(4));
    let k4 = PrimeGraph::from_cliques([set(&[2, 3, 5, 7])]).unwrap();
    assert_eq!(k4.clique_number(), 4);
}

#[test]
fn pattern_search() {
    assert!(th()
        .contains_pattern(&Pattern::triangle_and_edge(), false)
        .is_none());
    assert!(fi23()
        .contains_pattern(&Pattern::two_f4_compact(), false)
        .is_none());
    let k3 = PrimeGraph::from_cliques([set(&[2, 3, 5])]).unwrap();
    let edge = Pattern::complete(2);
    let emb = k3.contains_pattern(&edge, false).unwrap();
    assert!(k3.has_edge(emb[0], emb[1]));
    let mut count = 0;
    search::for_each_embedding(&edge.adjacency(), &k3.dense().adj, false, &[0, 1], |_| {
        count += 1;
        false
    });
    assert_eq!(count, 6);
}

#[test]
fn functional_updates() {
    let m24 = g(
        &[2, 3, 5, 7, 11, 23],
        &[(2, 3), (2, 5), (2, 7), (3, 5), (3, 7)],
    );
    let fi22 = g(
        &[2, 3, 5, 7, 11, 13],
        &[(2, 3), (2, 5), (2, 7), (2, 11), (3, 5), (3, 7)],
    );
    let added = m24.with_edge(Vertex::Prime(3), Vertex::Prime(11)).unwrap();
    assert!(is_isomorphic(&added, &fi22).is_some());
    assert_eq!(m24.edge_count(), 5);
    assert_eq!(m24.with_vertex(Vertex::Prime(7)).unwrap(), m24);
    assert!(matches!(
        m24.with_edge(Vertex::Prime(3), Vertex::Prime(3)),
        Err(Error::SelfLoop(_))
    ));
    let u = g(&[2, 3], &[(2, 3)]).union(&g(&[5], &[])).unwrap();
    assert_eq!((u.vertex_count(), u.edge_count()), (3, 1));
}

#[test]
fn constructor_rejects_bad_input() {
    assert!(PrimeGraph::from_primes(&[4], &[]).is_err());
    assert!(matches!(
        PrimeGraph::from_primes(&[2], &[(2, 3)]),
        Err(Error::VertexNotFound(_))
    ));
    let many: Vec<Vertex> = (1..=65).map(Vertex::Symbolic).collect();
    assert!(matches!(
        PrimeGraph::new(many, []),
        Err(Error::TooManyVertices(64))
    ));
}

#[test]
fn identity_isomorphism() {
    let b = baby();
    let map = is_isomorphic(&b, &b).unwrap();
    assert_eq!(map.len(), b.vertex_count());
    assert!(distinguishing_invariant(&b, &b).is_none());
    let m = g(&[2, 3], &[]);
    let d = distinguishing_invariant(&j4(), &m).unwrap();
    assert_eq!(d.invariant, "vertex_count");
}

#[test]
fn symbolic_vertices_behave_like_primes() {
    let sym = PrimeGraph::new(
        [Vertex::Prime(2), Vertex::Symbolic(1), Vertex::Symbolic(2)],
        [(Vertex::Prime(2), Vertex::Symbolic(1))],
    )
    .unwrap();
    let con = g(&[2, 3, 5], &[(2, 5)]);
    assert!(is_isomorphic(&sym, &con).is_some());
    assert!(Vertex::Prime(1_000_003) < Vertex::Symbolic(1));
    assert_eq!(Vertex::Symbolic(3).to_string(), "r3");
    assert_eq!("r3".parse::<Vertex>().unwrap(), Vertex::Symbolic(3));
    assert!("r0".parse::<Vertex>().is_err());
}

#[test]
fn serialization_round_trips() {
    let mut b = baby().with_vertex(Vertex::Symbolic(1)).unwrap();
    b = b.with_edge(Vertex::Symbolic(1), Vertex::Prime(2)).unwrap();
    let json = b.to_json();
    assert!(json.ends_with("}\n"));
    assert_eq!(PrimeGraph::from_json(&json).unwrap(), b);
    assert_eq!(PrimeGraph::from_json(&json).unwrap().to_json(), json);
    let dot = b.to_dot();
    assert!(dot.starts_with("graph gk {\n") && dot.contains("  \"2\" -- \"r1\";\n"));
    assert_eq!(PrimeGraph::from_dot(&dot).unwrap().to_dot(), dot);
    assert!(PrimeGraph::from_dot("graph gk {\n  \"2\"\n}\n").is_err());
}

#[test]
fn json_layout_is_fixed() {
    let s = g(&[2, 3, 11], &[(3, 2)]).to_json();
    assert_eq!(
        s,
        "{\n  \"edges\": [\n    [\n      \"2\",\n      \"3\"\n    ]\n  ],\n  \"vertices\": [\n    \"2\",\n    \"3\",\n    \"11\"\n  ]\n}\n"
    );
}

const SMALL_PRIMES: [u64; 14] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43];

fn arb_graph(max: usize) -> impl Strategy<Value = PrimeGraph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let vs = &SMALL_PRIMES[..n];
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((vs[i], vs[j]));
                    }
                    k += 1;
                }
            }
            PrimeGraph::from_primes(vs, &edges).unwrap()
        })
    })
}

fn brute_independence(g: &PrimeGraph) -> usize {
    let d = g.dense();
    (0u64..1 << d.len())
        .filter(|&s| bits(s).all(|i| d.adj[i] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

proptest! {
    #[test]
    fn independence_matches_subset_oracle(g in arb_graph(12)) {
        prop_assert_eq!(g.independence_number(), brute_independence(&g));
        let d = g.dense();
        let brute_clique = (0u64..1 << d.len())
            .filter(|&s| bits(s).all(|i| (d.adj[i] | 1 << i) & s == s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0);
        prop_assert_eq!(g.clique_number(), brute_clique);
    }

    #[test]
    fn isomorphism_survives_relabelling(g in arb_graph(12), seed in any::<u64>()) {
        let mut labels: Vec<Vertex> = g.vertices().iter().copied().collect();
        let mut rng = seed;
        for i in (1..labels.len()).rev() {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            labels.swap(i, (rng >> 33) as usize % (i + 1));
        }
        let map: BTreeMap<Vertex, Vertex> = g.vertices().iter().copied().zip(labels).collect();
        let h = g.relabel(&map).unwrap();
        let iso = is_isomorphic(&g, &h);
        prop_assert!(iso.is_some());
        let iso = iso.unwrap();
        for (a, b) in g.edges() {
            prop_assert!(h.has_edge(iso[a], iso[b]));
        }
        prop_assert!(is_isomorphic(&h, &g).is_some());
        let (gi, hi) = (g.invariants(), h.invariants());
        prop_assert_eq!(
            GraphInvariants { t_at_two: None, ..gi.clone() },
            GraphInvariants { t_at_two: None, ..hi }
        );
        let two = Vertex::Prime(2);
        prop_assert_eq!(gi.t_at_two, Some(h.t_at(iso[&two]).unwrap()));
    }

    #[test]
    fn isomorphism_is_exact(a in arb_graph(7), b in arb_graph(7)) {
        let brute = {
            let (da, db) = (a.dense(), b.dense());
            da.len() == db.len() && {
                let mut found = false;
                search::for_each_embedding(&da.adj, &db.adj, true, &(0..da.len()).collect::<Vec<_>>(), |_| {
                    found = true;
                    true
                });
                found
            }
        };
        prop_assert_eq!(is_isomorphic(&a, &b).is_some(), brute);
    }

    #[test]
    fn components_partition_and_edges_merge(g in arb_graph(12), i in 0usize..12, j in 0usize..12) {
        let comps = g.components();
        let mut all = BTreeSet::new();
        for c in &comps {
            prop_assert!(c.is_disjoint(&all));
            all.extend(c.iter().copied());
        }
        prop_assert_eq!(&all, g.vertices());
        let inv = g.invariants();
        prop_assert!(inv.component_count >= inv.isolated_vertex_count);
        prop_assert!(inv.independence_number >= inv.component_count);
        prop_assert_eq!(inv.degree_sequence.iter().sum::<usize>(), 2 * inv.edge_count);
        let n = g.vertex_count();
        let (u, v) = (SMALL_PRIMES[i % n], SMALL_PRIMES[j % n]);
        if u != v {
            let h = g.with_edge(Vertex::Prime(u), Vertex::Prime(v)).unwrap();
            prop_assert!(h.component_count() <= g.component_count());
        }
    }

    #[test]
    fn dot_and_json_round_trip(g in arb_graph(12)) {
        let dot = g.to_dot();
        let from_dot = PrimeGraph::from_dot(&dot).unwrap();
        prop_assert_eq!(&from_dot, &g);
        prop_assert_eq!(from_dot.to_dot(), dot);
        let json = g.to_json();
        let from_json = PrimeGraph::from_json(&json).unwrap();
        prop_assert_eq!(&from_json, &g);
        prop_assert_eq!(from_json.to_json(), json);
    }

    #[test]
    fn induced_embedding_implies_plain(g in arb_graph(9), p in arb_graph(4)) {
        let pat = Pattern::from_graph(&p);
        if g.contains_pattern(&pat, true).is_some() {
            prop_assert!(g.contains_pattern(&pat, false).is_some());
        }
    }
}
