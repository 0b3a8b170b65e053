use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::families::{
    cyclic_levi, d_graph, heawood, k33, pappus, star_product, t_graph_from, CyclicParams,
    SegmentTemplate, TVariant,
};
use crate::graph_core::{are_isomorphic, essential_4ec, Essential4ec, Graph};
use crate::martinetti::{
    extend, extension_sites, extensions_up_to_iso, is_irreducible, reduce, reduction_sites,
    ReductionOption, ReductionSite,
};
use crate::two_factors::{
    classify, find_parity_witnesses, ClassificationReport, EnumBudget, Parity, ReportStatus,
};

use super::{d_witness_pair, t_witness_pair_in, WitnessError, WitnessPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimGroup {
    Classify,
    D,
    T,
    Martinetti,
    Star,
}

impl ClaimGroup {
    pub const ALL: [ClaimGroup; 5] = [
        ClaimGroup::Classify,
        ClaimGroup::D,
        ClaimGroup::T,
        ClaimGroup::Martinetti,
        ClaimGroup::Star,
    ];
}

impl FromStr for ClaimGroup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classify" => Ok(ClaimGroup::Classify),
            "d" => Ok(ClaimGroup::D),
            "t" => Ok(ClaimGroup::T),
            "martinetti" => Ok(ClaimGroup::Martinetti),
            "star" => Ok(ClaimGroup::Star),
            _ => Err(format!(
                "unknown claim group {s:?} (expected classify, d, t, martinetti or star)"
            )),
        }
    }
}

impl fmt::Display for ClaimGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimGroup::Classify => "classify",
            ClaimGroup::D => "d",
            ClaimGroup::T => "t",
            ClaimGroup::Martinetti => "martinetti",
            ClaimGroup::Star => "star",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest `n` for the D-family claims.
    pub nmax: usize,
    /// Largest `n` for the T-family claims.
    pub t_max: usize,
    pub groups: BTreeSet<ClaimGroup>,
    /// Segment used for the T family; the standard `G_T` when `None`.
    pub t_segment: Option<SegmentTemplate>,
    pub threads: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            nmax: 15,
            t_max: 2,
            groups: ClaimGroup::ALL.into_iter().collect(),
            t_segment: None,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    /// The claim holds, but the explicit construction did not reproduce.
    TemplateInvalid,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub group: ClaimGroup,
    pub statement: String,
    pub status: ClaimStatus,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ledger {
    pub all_pass: bool,
    pub passed: usize,
    pub template_invalid: usize,
    pub failed: usize,
    pub claims: Vec<ClaimResult>,
}

type Check = Box<dyn Fn() -> (ClaimStatus, String) + Send + Sync>;

struct Claim {
    id: String,
    group: ClaimGroup,
    statement: String,
    check: Check,
}

fn claim(
    group: ClaimGroup,
    id: String,
    statement: String,
    check: impl Fn() -> Result<String, String> + Send + Sync + 'static,
) -> Claim {
    Claim {
        id,
        group,
        statement,
        check: Box::new(move || match check() {
            Ok(ev) => (ClaimStatus::Pass, ev),
            Err(ev) => (ClaimStatus::Fail, ev),
        }),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn full(g: &Graph) -> Result<ClassificationReport, String> {
    let r = classify(g, &EnumBudget::full()).map_err(|e| e.to_string())?;
    ensure(r.status == ReportStatus::Complete, || "enumeration budget exceeded".into())?;
    Ok(r)
}

fn parity_verdict(g: &Graph) -> Result<Option<bool>, String> {
    let r = classify(g, &EnumBudget::parity()).map_err(|e| e.to_string())?;
    ensure(r.flags.implications_hold(), || "flag implications violated".into())?;
    Ok(r.flags.pseudo_two_factor_isomorphic)
}

fn witness_check(
    pair: Result<WitnessPair, WitnessError>,
    host: impl Fn() -> Result<Graph, String>,
) -> (ClaimStatus, String) {
    let fallback = |why: String| match host() {
        Ok(g) => match find_parity_witnesses(&g) {
            Some((a, b)) => (
                ClaimStatus::TemplateInvalid,
                format!(
                    "claim true, template not reproduced: {why}; enumeration found circuit counts {} and {}",
                    a.circuit_count, b.circuit_count
                ),
            ),
            None => (
                ClaimStatus::Fail,
                format!("template not reproduced ({why}) and no parity witnesses exist"),
            ),
        },
        Err(e) => (ClaimStatus::Fail, e),
    };
    match pair {
        Ok(p) => {
            let g = match host() {
                Ok(g) => g,
                Err(e) => return (ClaimStatus::Fail, e),
            };
            match parity_verdict(&g) {
                Ok(Some(false)) => (
                    ClaimStatus::Pass,
                    format!(
                        "{} gives {:?}; {} gives {:?}",
                        p.hamiltonian_formula,
                        p.hamiltonian.circuit_lengths,
                        p.disconnected_formula,
                        p.disconnected.circuit_lengths
                    ),
                ),
                Ok(v) => (
                    ClaimStatus::Fail,
                    format!("witnesses validate but enumeration reports pseudo-2FI = {v:?}"),
                ),
                Err(e) => (ClaimStatus::Fail, e),
            }
        }
        Err(WitnessError::TemplateInvalid(why)) => fallback(why),
        Err(e @ (WitnessError::MissingJunctionEdge { .. } | WitnessError::VertexReuse(_))) => {
            fallback(e.to_string())
        }
        Err(e) => (ClaimStatus::Fail, e.to_string()),
    }
}

fn classify_claims(out: &mut Vec<Claim>) {
    let g = ClaimGroup::Classify;
    out.push(claim(
        g,
        "classify.k33".into(),
        "K33 has exactly 6 two-factors, all 6-circuits".into(),
        || {
            let r = full(&k33())?;
            ensure(
                r.total_two_factors == Some(6)
                    && r.flags.two_factor_hamiltonian == Some(true)
                    && r.flags.pseudo_two_factor_isomorphic == Some(true),
                || format!("report {:?}", r.by_circuit_lengths),
            )?;
            Ok("6 two-factors, profile {6: 6}".into())
        },
    ));
    out.push(claim(
        g,
        "classify.heawood".into(),
        "the Heawood graph is 2-factor hamiltonian (24 two-factors, all 14-circuits)".into(),
        || {
            let r = full(&heawood())?;
            ensure(
                r.total_two_factors == Some(24) && r.flags.two_factor_hamiltonian == Some(true),
                || format!("total {:?}, profiles {:?}", r.total_two_factors, r.by_circuit_lengths),
            )?;
            Ok("24 two-factors, all Hamilton circuits".into())
        },
    ));
    out.push(claim(
        g,
        "classify.pappus".into(),
        "the Pappus graph is pseudo 2-factor isomorphic but not 2-factor isomorphic".into(),
        || {
            let r = full(&pappus())?;
            let counts: Vec<usize> = r
                .by_circuit_count
                .as_ref()
                .map(|c| c.keys().copied().collect())
                .unwrap_or_default();
            ensure(
                r.flags.pseudo_two_factor_isomorphic == Some(true)
                    && r.flags.two_factor_isomorphic == Some(false)
                    && r.constant_parity == Some(Parity::Odd)
                    && counts.iter().all(|c| [1, 3].contains(c)),
                || format!("flags {:?}, circuit counts {counts:?}", r.flags),
            )?;
            Ok(format!(
                "{} two-factors, circuit counts {counts:?}",
                r.total_two_factors.unwrap_or(0)
            ))
        },
    ));
}

fn d_claims(out: &mut Vec<Claim>, nmax: usize) {
    let g = ClaimGroup::D;
    for n in 7..=nmax {
        out.push(claim(
            g,
            format!("d.iso.{n}"),
            format!("D({n}) is the Levi graph of the cyclic configuration {{0,1,3}} mod {n}"),
            move || {
                let d = d_graph(n).map_err(|e| e.to_string())?;
                let c = cyclic_levi(CyclicParams::new(n, 1, 3)).map_err(|e| e.to_string())?;
                ensure(are_isomorphic(&d, &c), || "not isomorphic".into())?;
                Ok("isomorphic".into())
            },
        ));
    }
    if nmax >= 7 {
        out.push(claim(
            g,
            "d.heawood".into(),
            "D(7) is the Heawood graph and is pseudo 2-factor isomorphic".into(),
            || {
                let d = d_graph(7).map_err(|e| e.to_string())?;
                ensure(are_isomorphic(&d, &heawood()), || "D(7) is not Heawood".into())?;
                ensure(parity_verdict(&d)? == Some(true), || "parity differs".into())?;
                Ok("isomorphic to Heawood; all 2-factors Hamiltonian".into())
            },
        ));
    }
    for n in 8..=nmax {
        out.push(Claim {
            id: format!("d.witness.{n}"),
            group: g,
            statement: format!(
                "D({n}) has a Hamiltonian 2-factor and one with exactly two circuits"
            ),
            check: Box::new(move || {
                witness_check(d_witness_pair(n), || d_graph(n).map_err(|e| e.to_string()))
            }),
        });
    }
    for n in 7..=nmax {
        out.push(claim(
            g,
            format!("d.irreducible.{n}"),
            format!("D({n}) is Martinetti irreducible"),
            move || {
                let d = d_graph(n).map_err(|e| e.to_string())?;
                ensure(is_irreducible(&d).map_err(|e| e.to_string())?, || {
                    "has a valid reduction".into()
                })?;
                Ok("no valid reduction site".into())
            },
        ));
    }
}

fn t_claims(out: &mut Vec<Claim>, t_max: usize, seg: SegmentTemplate) {
    let g = ClaimGroup::T;
    for n in 1..=t_max {
        for variant in TVariant::ALL {
            let seg = seg.clone();
            let k = variant.number();
            out.push(Claim {
                id: format!("t.witness.{n}.{k}"),
                group: g,
                statement: format!(
                    "T{k}({n}) has a Hamiltonian 2-factor and one with exactly two circuits"
                ),
                check: Box::new(move || {
                    let host = || t_graph_from(&seg, n, variant).map_err(|e| e.to_string());
                    let pair = match host() {
                        Ok(h) => t_witness_pair_in(&h, n, variant),
                        Err(e) => return (ClaimStatus::Fail, e),
                    };
                    witness_check(pair, host)
                }),
            });
        }
        let seg = seg.clone();
        out.push(claim(
            g,
            format!("t.noniso.{n}"),
            format!("T1({n}), T2({n}), T3({n}) are pairwise non-isomorphic"),
            move || {
                let gs = TVariant::ALL
                    .map(|v| t_graph_from(&seg, n, v).map_err(|e| e.to_string()));
                let gs: Vec<Graph> = gs.into_iter().collect::<Result<_, _>>()?;
                for a in 0..3 {
                    for b in a + 1..3 {
                        ensure(!are_isomorphic(&gs[a], &gs[b]), || {
                            format!("T{}({n}) and T{}({n}) are isomorphic", a + 1, b + 1)
                        })?;
                    }
                }
                Ok("no isomorphism between any two variants".into())
            },
        ));
    }
    for variant in TVariant::ALL {
        let seg = seg.clone();
        let k = variant.number();
        out.push(claim(
            g,
            format!("t.irreducible.{k}"),
            format!("T{k}(1) is Martinetti irreducible"),
            move || {
                let h = t_graph_from(&seg, 1, variant).map_err(|e| e.to_string())?;
                ensure(is_irreducible(&h).map_err(|e| e.to_string())?, || {
                    "has a valid reduction".into()
                })?;
                Ok("no valid reduction site".into())
            },
        ));
    }
}

/// Reduces `h` at the edge joining its two newest vertices and looks for `g`.
fn round_trip(g: &Graph, h: &Graph) -> bool {
    let n = h.vertex_count();
    let Some(e) = h.edge_index(n - 2, n - 1) else {
        return false;
    };
    [ReductionOption::Straight, ReductionOption::Crossed]
        .into_iter()
        .filter_map(|o| ReductionSite::new(h, e, o).ok())
        .filter_map(|s| reduce(h, &s).ok())
        .any(|r| are_isomorphic(&r, g))
}

fn martinetti_claims(out: &mut Vec<Claim>, nmax: usize) {
    let g = ClaimGroup::Martinetti;
    out.push(claim(
        g,
        "martinetti.heawood".into(),
        "the Fano configuration is not Martinetti extendible".into(),
        || {
            let s = extension_sites(&heawood()).map_err(|e| e.to_string())?;
            ensure(s.is_empty(), || format!("{} sites", s.len()))?;
            Ok("no extension site".into())
        },
    ));
    out.push(claim(
        g,
        "martinetti.pappus.unique".into(),
        "the Pappus configuration is Martinetti extendible in a unique way".into(),
        || {
            let c = extensions_up_to_iso(&pappus()).map_err(|e| e.to_string())?;
            ensure(c.len() == 1, || format!("{} classes", c.len()))?;
            Ok(format!("{} sites, 1 isomorphism class", c[0].multiplicity))
        },
    ));
    out.push(claim(
        g,
        "martinetti.pappus.extension".into(),
        "the extension of Pappus is not pseudo 2-factor isomorphic and reduces back".into(),
        || {
            let p = pappus();
            let site = *extension_sites(&p)
                .map_err(|e| e.to_string())?
                .first()
                .ok_or("no site")?;
            let h = extend(&p, &site).map_err(|e| e.to_string())?;
            ensure(parity_verdict(&h)? == Some(false), || "extension is pseudo-2FI".into())?;
            ensure(!is_irreducible(&h).map_err(|e| e.to_string())?, || "irreducible".into())?;
            ensure(round_trip(&p, &h), || "no reduction recovers Pappus".into())?;
            Ok("parity witnesses found; reduction at uv recovers Pappus".into())
        },
    ));
    out.push(claim(
        g,
        "martinetti.pappus.irreducible".into(),
        "the Pappus configuration is Martinetti irreducible".into(),
        || {
            ensure(is_irreducible(&pappus()).map_err(|e| e.to_string())?, || {
                "has a valid reduction".into()
            })?;
            Ok("no valid reduction site".into())
        },
    ));
    let top = nmax.min(10);
    out.push(claim(
        g,
        "martinetti.round_trip".into(),
        format!("every extension of Pappus and D(8..{top}) reduces back to the original"),
        move || {
            let mut hosts = vec![pappus()];
            for n in 8..=top {
                hosts.push(d_graph(n).map_err(|e| e.to_string())?);
            }
            let mut count = 0;
            for host in &hosts {
                for site in extension_sites(host).map_err(|e| e.to_string())? {
                    let h = extend(host, &site).map_err(|e| e.to_string())?;
                    ensure(round_trip(host, &h), || format!("site {site:?} does not round trip"))?;
                    count += 1;
                }
            }
            Ok(format!("{count} extensions checked"))
        },
    ));
}

const PAIRINGS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn star_claims(out: &mut Vec<Claim>) {
    for pairing in PAIRINGS {
        out.push(claim(
            ClaimGroup::Star,
            format!("star.{}{}{}", pairing[0], pairing[1], pairing[2]),
            format!(
                "H0*H0 with pairing {pairing:?} is 2-factor hamiltonian, reducible only through its 3-edge-cut, and every reduction is not pseudo 2-factor isomorphic"
            ),
            move || {
                let h = heawood();
                let s = star_product(&h, 0, &h, 0, pairing).map_err(|e| e.to_string())?;
                let g = &s.graph;
                ensure(g.vertex_count() == 26, || "wrong order".into())?;
                ensure(full(g)?.flags.two_factor_hamiltonian == Some(true), || {
                    "not 2FH".into()
                })?;
                let mut cut = s.join_edges.to_vec();
                cut.sort_unstable();
                match essential_4ec(g).map_err(|e| e.to_string())? {
                    Essential4ec::No { witness } if witness.edges == cut => {}
                    other => return Err(format!("essential 4-edge-connectivity: {other:?}")),
                }
                let sites = reduction_sites(g).map_err(|e| e.to_string())?;
                ensure(!sites.is_empty(), || "no reduction".into())?;
                for site in &sites {
                    ensure(cut.contains(&site.edge), || {
                        format!("reduction at edge {} outside the cut", site.edge)
                    })?;
                    let r = reduce(g, site).map_err(|e| e.to_string())?;
                    ensure(parity_verdict(&r)? == Some(false), || {
                        format!("reduction at edge {} is pseudo-2FI", site.edge)
                    })?;
                }
                Ok(format!("{} reductions, all through the cut, none pseudo-2FI", sites.len()))
            },
        ));
    }
}

/// Runs the selected claims and returns the ledger in fixed claim order.
pub fn verify_claim_suite(config: &SuiteConfig) -> Ledger {
    let mut claims = Vec::new();
    for group in &config.groups {
        match group {
            ClaimGroup::Classify => classify_claims(&mut claims),
            ClaimGroup::D => d_claims(&mut claims, config.nmax),
            ClaimGroup::T => t_claims(
                &mut claims,
                config.t_max,
                config.t_segment.clone().unwrap_or_else(SegmentTemplate::g_t),
            ),
            ClaimGroup::Martinetti => martinetti_claims(&mut claims, config.nmax),
            ClaimGroup::Star => star_claims(&mut claims),
        }
    }
    let run = |c: &Claim| {
        let (status, evidence) = (c.check)();
        ClaimResult {
            id: c.id.clone(),
            group: c.group,
            statement: c.statement.clone(),
            status,
            evidence,
        }
    };
    let results: Vec<ClaimResult> = if config.threads <= 1 {
        claims.iter().map(run).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .expect("thread pool")
            .install(|| claims.par_iter().map(run).collect())
    };
    let count = |s| results.iter().filter(|r| r.status == s).count();
    Ledger {
        all_pass: results.iter().all(|r| r.status == ClaimStatus::Pass),
        passed: count(ClaimStatus::Pass),
        template_invalid: count(ClaimStatus::TemplateInvalid),
        failed: count(ClaimStatus::Fail),
        claims: results,
    }
}
