use super::*;
use proptest::prelude::{prop_assert_eq, proptest, Just, Strategy as _};
use FamilySlice as F;
use GroupId as Id;
use RuleId::*;
use Sporadic as Sp;

fn sp(s: Sporadic) -> Candidate {
    Candidate::Concrete(Id::Sporadic(s))
}

fn names(cs: &[Candidate]) -> Vec<String> {
    cs.iter().map(Candidate::to_string).collect()
}

fn rules(target: Sporadic) -> BTreeMap<Candidate, RuleId> {
    recognise(target)
        .unwrap()
        .eliminations
        .iter()
        .map(|r| (r.candidate, r.rule().expect("eliminated")))
        .collect()
}

#[test]
fn candidates_for_the_monster() {
    let got = candidate_socles(Sp::M).unwrap();
    assert_eq!(
        names(&got),
        [
            "sporadic:J1",
            "sporadic:M22",
            "sporadic:ON",
            "sporadic:Ly",
            "sporadic:J4",
            "sporadic:Fi24",
            "psl3_4",
            "2e6_2",
            "sz:*"
        ]
    );
}

#[test]
fn candidates_for_three_component_targets() {
    let ly = candidate_socles(Sp::Ly).unwrap();
    assert_eq!(
        ly,
        [
            sp(Sp::J1),
            sp(Sp::M22),
            sp(Sp::ON),
            Candidate::Concrete(Id::Psl3_4),
            Candidate::Concrete(Id::TwoE6_2),
            Candidate::Slice(F::TwoB2)
        ]
    );
    let on = candidate_socles(Sp::ON).unwrap();
    assert_eq!(
        on,
        [
            sp(Sp::J1),
            sp(Sp::M22),
            Candidate::Concrete(Id::Psl3_4),
            Candidate::Slice(F::TwoB2)
        ]
    );
    let fi24 = candidate_socles(Sp::Fi24).unwrap();
    assert!(fi24.contains(&sp(Sp::Ly)) && fi24.contains(&sp(Sp::ON)));
    assert!(!fi24.contains(&sp(Sp::Fi24)));
}

#[test]
fn candidates_have_enough_components() {
    for &t in &RECOGNISABLE_BY_TYPE {
        let s = Catalog::builtin()
            .sporadic_graph(t)
            .unwrap()
            .component_count();
        for c in candidate_socles(t).unwrap() {
            if let Candidate::Concrete(id) = c {
                let cs = families::component_partition_in(Catalog::builtin(), id).unwrap();
                assert!(cs.len() >= s, "{c} under {t}");
            }
        }
    }
}

#[test]
fn j4_needs_no_candidates() {
    let r = recognise(Sp::J4).unwrap();
    assert!(r.eliminations.is_empty());
    assert!(r.shortcut.unwrap().contains("6 connected components"));
    assert_eq!(r.verdict, UnlabelledStatus::Recognisable);
}

#[test]
fn verdicts_match_the_catalog_for_all_sporadics() {
    for s in Sporadic::ALL {
        let report = recognise(s).unwrap();
        let row = Catalog::builtin().recognisability(s).unwrap();
        assert_eq!(report.verdict, row.unlabelled, "{s}");
        let recognisable = RECOGNISABLE_BY_TYPE.contains(&s);
        assert_eq!(
            report.verdict == UnlabelledStatus::Recognisable,
            recognisable,
            "{s}"
        );
        if !recognisable {
            assert!(!report.witnesses.is_empty(), "{s}");
            assert!(
                report.witnesses.iter().all(|w| !w.isomorphism.is_empty()),
                "{s}"
            );
        }
    }
}

#[test]
fn monster_fi24_ly_rules() {
    assert!(rules(Sp::M).values().all(|&r| r == R2));
    let fi24 = rules(Sp::Fi24);
    for (c, r) in &fi24 {
        let late = [sp(Sp::ON), sp(Sp::Ly), Candidate::Concrete(Id::TwoE6_2)].contains(c);
        assert_eq!(*r, if late { R5 } else { R2 }, "{c}");
    }
    let ly = rules(Sp::Ly);
    assert_eq!(ly[&Candidate::Concrete(Id::TwoE6_2)], R1);
    assert_eq!(ly[&sp(Sp::ON)], R5);
    assert_eq!(ly[&sp(Sp::J1)], R2);
}

#[test]
fn on_needs_module_arguments() {
    assert!(rules(Sp::ON).values().all(|&r| r == R5));
}

#[test]
fn baby_monster_rules() {
    let b = rules(Sp::B);
    assert_eq!(b[&sp(Sp::J4)], R5);
    assert_eq!(b[&Candidate::Slice(F::F4Large)], R4);
    assert_eq!(b[&sp(Sp::Fi23)], R2);
}

#[test]
fn thompson_rules() {
    let th = rules(Sp::Th);
    assert_eq!(th[&sp(Sp::ON)], R6);
    assert_eq!(th[&sp(Sp::J1)], R6);
    assert_eq!(th[&sp(Sp::M22)], R5);
    assert_eq!(th[&Candidate::Concrete(Id::POmegaMinus(5))], R1);
    assert_eq!(th[&Candidate::Slice(F::TwoG2Large)], R1);
    assert_eq!(th[&Candidate::Slice(F::TwoB2)], R5);
}

#[test]
fn fischer_23_rules() {
    let fi23 = rules(Sp::Fi23);
    for c in [sp(Sp::Ly), sp(Sp::J1), Candidate::Concrete(Id::TwoE6_2)] {
        assert_eq!(fi23[&c], R6, "{c}");
    }
    assert_eq!(fi23[&Candidate::Concrete(Id::TwoF4(1))], R4);
    assert_eq!(fi23[&Candidate::Slice(F::TwoF4Large)], R4);
    assert_eq!(fi23[&Candidate::Slice(F::F4Large)], R1);
}

/// Candidates the engine only disposes of after the reference rule.
const LATER_THAN_REFERENCE: [(Sporadic, Candidate); 2] = [
    (Sp::Th, Candidate::Concrete(Id::Sporadic(Sp::J1))),
    (Sp::Fi23, Candidate::Concrete(Id::Sporadic(Sp::J1))),
];

#[test]
fn engine_never_needs_a_later_rule_than_the_reference() {
    for &t in &RECOGNISABLE_BY_TYPE {
        for r in recognise(t).unwrap().eliminations {
            let Verdict::Eliminated {
                rule, earlier_rule, ..
            } = r.verdict
            else {
                panic!("{} survives", r.candidate)
            };
            let reference = reference_rule(t, r.candidate).expect("reference rule");
            assert_eq!(earlier_rule, rule < reference, "{t} {}", r.candidate);
            if rule > reference {
                assert!(
                    LATER_THAN_REFERENCE.contains(&(t, r.candidate)),
                    "{t} {}",
                    r.candidate
                );
            }
        }
    }
}

#[test]
fn earlier_rule_eliminations_are_flagged_in_the_trace() {
    let th = recognise(Sp::Th).unwrap();
    let suz = th
        .eliminations
        .iter()
        .find(|r| r.candidate == sp(Sp::Suz))
        .unwrap();
    let Verdict::Eliminated {
        rule,
        earlier_rule,
        trace,
        ..
    } = &suz.verdict
    else {
        panic!()
    };
    assert_eq!(*rule, R3);
    assert!(earlier_rule);
    assert!(trace.last().unwrap().contains("R5"));
}

#[test]
fn parallel_and_sequential_agree() {
    for t in [Sp::Th, Sp::Fi23, Sp::B] {
        let a = recognise_in(Catalog::builtin(), t, Strategy::Parallel).unwrap();
        let b = recognise_in(Catalog::builtin(), t, Strategy::Sequential).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
    }
}

#[test]
fn r6_is_independent_of_search_order() {
    let engine = Engine::new(Catalog::builtin(), Sp::Th).unwrap();
    let fwd = engine.r6_search(Id::Sporadic(Sp::ON), false).unwrap();
    let rev = engine.r6_search(Id::Sporadic(Sp::ON), true).unwrap();
    assert_eq!(fwd, rev);
    let R6Outcome::Eliminated {
        completions,
        configurations,
        ..
    } = fwd
    else {
        panic!("{fwd:?}")
    };
    assert!(completions > 0 && configurations > 0);
}

#[test]
fn on_under_th_has_a_completion_onto_th() {
    // Both have seven primes; adding 5-7 and 2-11 to Γ(ON) gives Γ(Th).
    let on = Catalog::builtin().sporadic_graph(Sp::ON).unwrap();
    let th = Catalog::builtin().sporadic_graph(Sp::Th).unwrap();
    let g = on
        .with_edge(Vertex::Prime(5), Vertex::Prime(7))
        .unwrap()
        .with_edge(Vertex::Prime(2), Vertex::Prime(11))
        .unwrap();
    assert!(crate::graph::is_isomorphic(&g, th).is_some());
    let engine = Engine::new(Catalog::builtin(), Sp::Th).unwrap();
    let R6Outcome::Eliminated { completions, .. } =
        engine.r6_search(Id::Sporadic(Sp::ON), false).unwrap()
    else {
        panic!()
    };
    assert!(completions >= 1);
}

#[test]
fn suzuki_shape_one_one_one_delegates() {
    let r = eliminate_family(Sp::ON, F::TwoB2).unwrap();
    let Verdict::Eliminated { trace, .. } = &r.verdict else {
        panic!()
    };
    assert!(trace.iter().any(|l| l.contains("m in {1,2}")));
    for g in ["2B2(2^3): R5", "2B2(2^5): R5"] {
        assert!(trace.iter().any(|l| l.contains(g)), "{g}");
    }
}

#[test]
fn unsupported_targets_are_rejected() {
    assert!(matches!(
        candidate_socles(Sp::M11),
        Err(Error::UnsupportedTarget(_))
    ));
    assert!(matches!(
        apply_filters(Sp::Co1, sp(Sp::J1)),
        Err(Error::UnsupportedTarget(_))
    ));
}

#[test]
fn report_serialisation_is_stable() {
    let r = recognise(Sp::ON).unwrap();
    let json = r.to_json();
    assert!(json.ends_with("}\n"));
    let keys: Vec<usize> = [
        "\"target\"",
        "\"verdict\"",
        "\"shortcut\"",
        "\"eliminations\"",
        "\"witnesses\"",
    ]
    .iter()
    .map(|k| json.find(k).unwrap())
    .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    let text = r.to_text();
    assert!(text.starts_with("target: O'N\nverdict: recognisable\n"));
    assert!(text.contains("sporadic:J1: eliminated at R5"));
}

fn partitions_into_three(n: usize) -> usize {
    (1..=n)
        .flat_map(|a| (a..=n).map(move |b| (a, b)))
        .filter(|&(a, b)| n >= a + b && n - a - b >= b)
        .count()
}

#[test]
fn suzuki_shapes_count_partitions() {
    for max in 3..12 {
        let expected: usize = (3..=max).map(partitions_into_three).sum();
        assert_eq!(suzuki_shapes(max).len(), expected);
    }
}

#[test]
fn combinatorics_helpers() {
    assert_eq!(
        combinations(&[2, 3, 5], 2),
        [vec![2, 3], vec![2, 5], vec![3, 5]]
    );
    assert_eq!(combinations(&[2], 2), Vec::<Vec<u64>>::new());
    assert_eq!(permutations(4).len(), 24);
    let perms: BTreeSet<Vec<usize>> = permutations(3).into_iter().collect();
    assert_eq!(perms.len(), 6);
}

proptest! {
    #[test]
    fn canonical_key_ignores_new_vertex_labels(
        edges in proptest::collection::vec((0u32..5, 0u32..5), 0..10),
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
    ) {
        let v = |i: u32| if i < 2 { Vertex::Prime([2, 3][i as usize]) } else { Vertex::Symbolic(i) };
        let new = [Vertex::Symbolic(2), Vertex::Symbolic(3), Vertex::Symbolic(4)];
        let es: Vec<_> = edges.iter().filter(|(a, b)| a != b).map(|&(a, b)| (v(a), v(b))).collect();
        let g = PrimeGraph::new((0..5).map(v), es.clone()).unwrap();
        let relabel = |x: Vertex| match x {
            Vertex::Symbolic(i) => new[perm[i as usize - 2]],
            p => p,
        };
        let h = PrimeGraph::new((0..5).map(v), es.iter().map(|&(a, b)| (relabel(a), relabel(b)))).unwrap();
        prop_assert_eq!(canonical_key(&g, &new), canonical_key(&h, &new));
    }
}
