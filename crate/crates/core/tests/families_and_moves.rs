mod common;

use common::{corpus, random_permutation};
use levi_core::families::{
    config_from_levi, cyclic_configuration, cyclic_levi, d_graph, heawood, levi, pappus,
    pappus_configuration, star_product, t_graph, CyclicParams, FamilyError, TVariant,
};
use levi_core::graph_core::{
    are_isomorphic, bipartition, canonical_form, essential_4ec, girth, Essential4ec, Side,
};
use levi_core::martinetti::{
    extend, extension_sites, reduce, reduction_sites, MartinettiError, ReductionClause,
    ReductionOption, ReductionSite,
};
use levi_core::two_factors::{classify, EnumBudget};
use levi_core::Graph;

fn levi_corpus() -> Vec<(String, Graph)> {
    corpus()
        .into_iter()
        .filter(|(_, g)| bipartition(g).is_some() && girth(g).is_some_and(|k| k >= 6))
        .collect()
}

#[test]
fn d_family_is_cyclic_013() {
    for n in 7..=15 {
        let c = cyclic_levi(CyclicParams::new(n, 1, 3)).unwrap();
        assert!(are_isomorphic(&d_graph(n).unwrap(), &c), "D({n})");
    }
}

#[test]
fn heawood_and_pappus_from_configurations() {
    assert!(are_isomorphic(&heawood(), &d_graph(7).unwrap()));
    assert!(are_isomorphic(&pappus(), &levi(&pappus_configuration())));
}

#[test]
fn configurations_round_trip_through_levi_graphs() {
    for (name, g) in levi_corpus() {
        let c = config_from_levi(&g, Side::Black).unwrap();
        assert!(are_isomorphic(&levi(&c), &g), "{name}");
    }
    let c = cyclic_configuration(CyclicParams::new(13, 1, 4)).unwrap();
    assert_eq!(config_from_levi(&levi(&c), Side::Black).unwrap().lines().len(), 13);
}

#[test]
fn non_configurations_are_rejected() {
    assert_eq!(
        cyclic_configuration(CyclicParams::new(6, 1, 3)).unwrap_err(),
        FamilyError::NotLinear(0, 3)
    );
    assert!(matches!(
        config_from_levi(&levi_core::families::k33(), Side::Black),
        Err(FamilyError::GirthTooSmall(4))
    ));
}

#[test]
fn t_variants_are_pairwise_non_isomorphic() {
    for n in 1..=2 {
        let g: Vec<Graph> = TVariant::ALL.iter().map(|&v| t_graph(n, v).unwrap()).collect();
        assert!(!are_isomorphic(&g[0], &g[1]));
        assert!(!are_isomorphic(&g[0], &g[2]));
        assert!(!are_isomorphic(&g[1], &g[2]));
    }
}

#[test]
fn extension_preserves_levi_properties_and_round_trips() {
    for (name, g) in levi_corpus().into_iter().filter(|(_, g)| g.vertex_count() <= 24) {
        let target = canonical_form(&g);
        for site in extension_sites(&g).unwrap() {
            let h = extend(&g, &site).unwrap();
            assert_eq!(h.vertex_count(), g.vertex_count() + 2);
            assert_eq!(h.edge_count(), g.edge_count() + 3);
            assert!(h.is_cubic() && bipartition(&h).is_some(), "{name}");
            assert!(girth(&h).unwrap() >= 6, "{name}");
            let n = g.vertex_count();
            let uv = h.edge_index(n, n + 1).unwrap();
            let back = [ReductionOption::Straight, ReductionOption::Crossed].into_iter().any(|o| {
                let s = ReductionSite::new(&h, uv, o).unwrap();
                reduce(&h, &s).is_ok_and(|r| canonical_form(&r) == target)
            });
            assert!(back, "{name} {site:?}");
        }
    }
}

/// Sites pass iff the points share no line and the lines share no point.
#[test]
fn extension_sites_match_configuration_reading() {
    let hosts = [
        pappus(),
        d_graph(9).unwrap(),
        d_graph(10).unwrap(),
        cyclic_levi(CyclicParams::new(13, 1, 4)).unwrap(),
        t_graph(1, TVariant::Two).unwrap(),
    ];
    for g in hosts {
        let sides = bipartition(&g).unwrap();
        let c = config_from_levi(&g, Side::Black).unwrap();
        let mut point_index = vec![usize::MAX; g.vertex_count()];
        for (k, v) in sides.vertices(Side::Black).enumerate() {
            point_index[v] = k;
        }
        let mut line_index = vec![usize::MAX; g.vertex_count()];
        for (k, v) in sides.vertices(Side::White).enumerate() {
            line_index[v] = k;
        }
        let sites = extension_sites(&g).unwrap();
        let mut expected = 0;
        for e1 in 0..g.edge_count() {
            for e2 in e1 + 1..g.edge_count() {
                let orient = |e| {
                    let (a, b) = g.edge(e);
                    if sides.side(a) == Side::Black {
                        (a, b)
                    } else {
                        (b, a)
                    }
                };
                let ((x1, y1), (x2, y2)) = (orient(e1), orient(e2));
                let ok = x1 != x2
                    && y1 != y2
                    && !c.collinear(point_index[x1], point_index[x2])
                    && c.parallel(line_index[y1], line_index[y2]);
                if ok {
                    expected += 1;
                    assert!(sites.iter().any(|s| (s.e1, s.e2) == (e1, e2)));
                }
            }
        }
        assert_eq!(sites.len(), expected);
    }
}

#[test]
fn reduction_validity_is_side_symmetric() {
    for (name, g) in levi_corpus().into_iter().filter(|(_, g)| g.vertex_count() <= 26) {
        // move a vertex of the other class to index 0 so the colors swap
        let w = g.neighbors(0).next().unwrap();
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.swap(0, w);
        let h = g.permuted(&perm);
        assert_ne!(
            bipartition(&h).unwrap().side(perm[0]),
            bipartition(&g).unwrap().side(0)
        );
        let certs = |x: &Graph| {
            let mut c: Vec<_> = reduction_sites(x).unwrap().into_iter().map(|s| s.after).collect();
            c.sort();
            c
        };
        assert_eq!(certs(&g), certs(&h), "{name}");
        assert_eq!(extension_sites(&g).unwrap().len(), extension_sites(&h).unwrap().len(), "{name}");
    }
}

#[test]
fn relabeled_hosts_keep_site_counts() {
    let p = pappus();
    let q = p.permuted(&random_permutation(18, 7));
    assert_eq!(extension_sites(&p).unwrap().len(), extension_sites(&q).unwrap().len());
}

#[test]
fn star_product_reductions_go_through_the_cut() {
    let h = heawood();
    let s = star_product(&h, 0, &h, 0, [0, 2, 1]).unwrap();
    let mut cut = s.join_edges.to_vec();
    cut.sort_unstable();
    match essential_4ec(&s.graph).unwrap() {
        Essential4ec::No { witness } => assert_eq!(witness.edges, cut),
        Essential4ec::Yes => panic!("star product has a non-trivial 3-edge cut"),
    }
    let sites = reduction_sites(&s.graph).unwrap();
    assert!(!sites.is_empty());
    for site in &sites {
        assert!(cut.contains(&site.edge));
        let r = reduce(&s.graph, site).unwrap();
        let verdict = classify(&r, &EnumBudget::parity()).unwrap();
        assert_eq!(verdict.flags.pseudo_two_factor_isomorphic, Some(false));
    }
}

#[test]
fn reduction_failures_name_their_clause() {
    let g = d_graph(9).unwrap();
    let mut clauses = std::collections::BTreeSet::new();
    for e in 0..g.edge_count() {
        for o in [ReductionOption::Straight, ReductionOption::Crossed] {
            let site = ReductionSite::new(&g, e, o).unwrap();
            match reduce(&g, &site) {
                Err(MartinettiError::InvalidReduction { clause }) => {
                    clauses.insert(format!("{clause}"));
                }
                other => panic!("D(9) reduced at {e}: {other:?}"),
            }
        }
    }
    assert!(clauses.contains("girth"));
}

#[test]
fn existing_edge_reduction_is_a_multi_edge() {
    // in the cube every reduction re-adds an edge that is already present
    let g = common::cube();
    let site = ReductionSite::new(&g, 0, ReductionOption::Straight).unwrap();
    assert_eq!(
        reduce(&g, &site).unwrap_err(),
        MartinettiError::InvalidReduction { clause: ReductionClause::MultiEdge }
    );
}
