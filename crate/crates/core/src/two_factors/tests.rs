use super::*;
use crate::families::{d_graph, heawood, k33, pappus, t_graph, TVariant};

fn count_matchings(g: &Graph) -> u64 {
    let budget = EnumBudget::full().with_max(None);
    enumerate_perfect_matchings(g, &budget, |_| ControlFlow::Continue(())).visited
}

fn hexagon() -> Graph {
    Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap()
}

#[test]
fn small_matching_counts() {
    assert_eq!(count_matchings(&k33()), 6);
    assert_eq!(count_matchings(&hexagon()), 2);
    assert_eq!(count_matchings(&Graph::new(3, [(0, 1), (1, 2)]).unwrap()), 0);
}

#[test]
fn enumerated_matchings_are_perfect_and_distinct() {
    let g = pappus();
    let mut seen = std::collections::HashSet::new();
    enumerate_perfect_matchings(&g, &EnumBudget::full(), |m| {
        let pm = PerfectMatching::new(&g, m).unwrap();
        assert!(seen.insert(pm.edges().to_vec()));
        ControlFlow::Continue(())
    });
    assert!(!seen.is_empty());
}

#[test]
fn budget_truncates() {
    let s = enumerate_perfect_matchings(&pappus(), &EnumBudget::full().with_max(Some(3)), |_| {
        ControlFlow::Continue(())
    });
    assert_eq!(s.visited, 3);
    assert!(s.budget_exceeded);
}

#[test]
fn rejects_non_matchings() {
    let g = k33();
    assert!(PerfectMatching::new(&g, &[0, 1]).is_err());
    assert!(PerfectMatching::new(&g, &[0]).is_err());
    assert!(PerfectMatching::new(&g, &[99]).is_err());
}

#[test]
fn k33_is_two_factor_hamiltonian() {
    let r = classify(&k33(), &EnumBudget::full()).unwrap();
    assert_eq!(r.status, ReportStatus::Complete);
    assert_eq!(r.total_two_factors, Some(6));
    assert_eq!(r.flags.two_factor_hamiltonian, Some(true));
    assert_eq!(r.constant_parity, Some(Parity::Odd));
    assert!(r.witnesses.is_empty());
}

#[test]
fn heawood_factors_are_hamilton_circuits() {
    let g = heawood();
    enumerate_perfect_matchings(&g, &EnumBudget::full(), |m| {
        let f = two_factor_of(&g, &PerfectMatching::new(&g, m).unwrap()).unwrap();
        assert_eq!(f.circuit_lengths, vec![14]);
        ControlFlow::Continue(())
    });
    assert!(find_parity_witnesses(&g).is_none());
}

#[test]
fn pappus_is_pseudo_but_not_isomorphic() {
    let r = classify(&pappus(), &EnumBudget::full()).unwrap();
    assert_eq!(r.flags.pseudo_two_factor_isomorphic, Some(true));
    assert_eq!(r.flags.two_factor_isomorphic, Some(false));
    let counts: Vec<usize> = r.by_circuit_count.unwrap().keys().copied().collect();
    assert_eq!(counts, vec![1, 3]);
    assert!(r.by_circuit_lengths.unwrap().contains_key("6,6,6"));
}

#[test]
fn d8_witnesses_have_one_and_two_circuits() {
    let r = classify(&d_graph(8).unwrap(), &EnumBudget::parity()).unwrap();
    assert_eq!(r.flags.pseudo_two_factor_isomorphic, Some(false));
    let (odd, even) = r.witness_pair().unwrap();
    assert_eq!(odd.parity, Parity::Odd);
    assert_eq!(even.parity, Parity::Even);
    assert!(r.flags.implications_hold());
}

#[test]
fn parity_witnesses_for_t_and_d() {
    for g in [t_graph(1, TVariant::One).unwrap(), d_graph(9).unwrap()] {
        let (a, b) = find_parity_witnesses(&g).unwrap();
        assert_ne!(a.parity, b.parity);
        assert_eq!(a.circuit_lengths.iter().sum::<usize>(), g.vertex_count());
    }
}

#[test]
fn thread_count_does_not_change_reports() {
    for g in [pappus(), d_graph(10).unwrap(), heawood()] {
        for budget in [
            EnumBudget::full(),
            EnumBudget::parity(),
            EnumBudget::full().with_max(Some(7)),
            EnumBudget::parity().with_max(Some(2)),
        ] {
            let one = classify(&g, &budget).unwrap();
            for threads in [2, 3, 8] {
                assert_eq!(classify_with_threads(&g, &budget, threads).unwrap(), one);
            }
        }
    }
}

#[test]
fn rejects_non_cubic_and_disconnected() {
    assert!(classify(&hexagon(), &EnumBudget::full()).is_err());
    let two = Graph::new(
        12,
        k33().edges().iter().flat_map(|&(a, b)| [(a, b), (a + 6, b + 6)]),
    )
    .unwrap();
    assert_eq!(
        classify(&two, &EnumBudget::full()).unwrap_err(),
        ClassifyError::Graph(GraphError::DisconnectedInput)
    );
}
