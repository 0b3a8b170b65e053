use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use serde::Serialize;

use levi_core::families::{
    cyclic_levi, d_graph, heawood, k33, pappus, star_product, t_graph, CyclicParams, TVariant,
};
use levi_core::graph_core::io::{to_graph6, write_graph};
use levi_core::graph_core::{
    bipartition, canonical_form, edge_connectivity, essential_4ec, find_isomorphism, girth,
    is_connected, Essential4ec,
};
use levi_core::martinetti::{
    extension_sites, extensions_up_to_iso, is_irreducible, reduce_with, reduction_sites_with,
    MartinettiMove, MoveKind, ReduceOptions,
};
use levi_core::two_factors::{classify_with_threads, EnumBudget, ReportStatus};
use levi_core::witnesses::{
    d_witness_pair, t_witness_pair, verify_claim_suite, ClaimGroup, ClaimStatus, SuiteConfig,
};
use levi_core::Graph;

use crate::input::{attach_labels, format, graph_pair, graphs};
// a closed stdout (e.g. `| head`) ends the process quietly instead of panicking
macro_rules! out_raw {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if write!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

use crate::{
    Cli, ClassifyArgs, Command, FamilyArg, GenArgs, Global, IsoArgs, MartinettiCommand, ModeArg,
    MoveArgs, VerifyArgs, WitnessArgs,
};

pub enum Failure {
    Usage(String),
    Input(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

type Outcome = Result<ExitCode, Failure>;

pub fn run(cli: &Cli) -> Result<ExitCode, String> {
    let g = &cli.global;
    let result = match &cli.command {
        Command::Gen(a) => gen(g, a),
        Command::Classify(a) => classify_cmd(g, a),
        Command::Props(a) => props(g, &a.input),
        Command::Iso(a) => iso(g, a),
        Command::Martinetti(m) => martinetti(g, m),
        Command::Witnesses(a) => witnesses(g, a),
        Command::VerifyPaper(a) => verify(g, a),
    };
    match result {
        Ok(code) => Ok(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("levi: usage: {msg}");
            Ok(ExitCode::from(2))
        }
        Err(Failure::Input(msg)) => Err(msg),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

fn emit(global: &Global, g: &Graph) {
    out_raw!("{}", write_graph(g, format(global.format)));
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--family {family} requires {flag}")))
}

fn gen(global: &Global, a: &GenArgs) -> Outcome {
    let fail = |e: levi_core::families::FamilyError| Failure::Input(e.to_string());
    let g = match a.family {
        FamilyArg::K33 => k33(),
        FamilyArg::Heawood => heawood(),
        FamilyArg::Pappus => pappus(),
        FamilyArg::D => d_graph(need(a.n, "--n", "d")?).map_err(fail)?,
        FamilyArg::T => {
            let n = need(a.n, "--n", "t")?;
            let v = TVariant::from_number(need(a.variant, "--variant", "t")?)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            t_graph(n, v).map_err(fail)?
        }
        FamilyArg::Cyclic => {
            let n = need(a.n, "--n", "cyclic")?;
            let base = a
                .base
                .as_deref()
                .ok_or_else(|| Failure::Usage("--family cyclic requires --base".into()))?;
            let [x, y, z] = <[usize; 3]>::try_from(base)
                .map_err(|_| Failure::Usage("--base takes three values".into()))?;
            let mut s = [x % n.max(1), y % n.max(1), z % n.max(1)];
            s.sort_unstable();
            let shift = |v: usize| (v + n - s[0]) % n;
            cyclic_levi(CyclicParams::new(n, shift(s[1]), shift(s[2]))).map_err(fail)?
        }
        FamilyArg::Star => {
            let p = a.pairing.as_deref().unwrap_or(&[0, 1, 2]);
            let pairing = <[usize; 3]>::try_from(p)
                .map_err(|_| Failure::Usage("--pairing takes three values".into()))?;
            let h = heawood();
            star_product(&h, 0, &h, 0, pairing).map_err(fail)?.graph
        }
    };
    if let Some(path) = &a.labels {
        std::fs::write(path, json_line(&g.labels()) + "\n")
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    emit(global, &g);
    Ok(ExitCode::SUCCESS)
}

fn classify_cmd(global: &Global, a: &ClassifyArgs) -> Outcome {
    let base = match a.mode {
        ModeArg::Full => EnumBudget::full(),
        ModeArg::Parity => EnumBudget::parity(),
    };
    let budget = match a.budget {
        None => base,
        Some(0) => base.with_max(None),
        Some(k) => base.with_max(Some(k)),
    };
    let mut code = ExitCode::SUCCESS;
    for g in graphs(&a.input.input, global.format)? {
        let r = match classify_with_threads(&g, &budget, global.threads) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("levi: {}: {e}", to_graph6(&g));
                code = ExitCode::from(1);
                continue;
            }
        };
        if global.verbose {
            eprintln!("{}: {:?}", r.graph, r.status);
            if let Some(profiles) = &r.by_circuit_lengths {
                eprintln!("  {:>12}  lengths", "2-factors");
                for (k, c) in profiles {
                    eprintln!("  {c:>12}  {k}");
                }
            }
        }
        if global.json {
            out!("{}", json_line(&r));
        } else {
            let show = |f: Option<bool>| f.map_or("?".to_string(), |b| b.to_string());
            let status = match r.status {
                ReportStatus::Complete => "complete",
                ReportStatus::EarlyExit => "early-exit",
                ReportStatus::BudgetExceeded => "budget-exceeded",
            };
            out!(
                "{} {status} total={} 2FH={} 2FI={} pseudo2FI={}",
                r.graph,
                r.total_two_factors.map_or("?".to_string(), |t| t.to_string()),
                show(r.flags.two_factor_hamiltonian),
                show(r.flags.two_factor_isomorphic),
                show(r.flags.pseudo_two_factor_isomorphic),
            );
        }
    }
    Ok(code)
}

#[derive(Serialize)]
struct Props {
    graph: String,
    vertices: usize,
    edges: usize,
    cubic: bool,
    bipartite: bool,
    connected: bool,
    girth: Option<usize>,
    edge_connectivity: Option<usize>,
    essentially_4_edge_connected: Option<bool>,
    cut_witness: Option<Vec<(usize, usize)>>,
    canonical: String,
}

fn props(global: &Global, input: &str) -> Outcome {
    for g in graphs(input, global.format)? {
        let connected = is_connected(&g);
        let (ess, witness) = match essential_4ec(&g) {
            Ok(Essential4ec::Yes) => (Some(true), None),
            Ok(Essential4ec::No { witness }) => (
                Some(false),
                Some(witness.edges.iter().map(|&e| g.edge(e)).collect()),
            ),
            Err(_) => (None, None),
        };
        let p = Props {
            graph: to_graph6(&g),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            cubic: g.is_cubic(),
            bipartite: bipartition(&g).is_some(),
            connected,
            girth: girth(&g),
            edge_connectivity: edge_connectivity(&g).ok(),
            essentially_4_edge_connected: ess,
            cut_witness: witness,
            canonical: canonical_form(&g).to_string(),
        };
        if global.json {
            out!("{}", json_line(&p));
        } else {
            let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
            let mut s = String::new();
            let _ = write!(
                s,
                "{} n={} m={} cubic={} bipartite={} connected={} girth={} lambda={} ess4ec={}",
                p.graph,
                p.vertices,
                p.edges,
                p.cubic,
                p.bipartite,
                p.connected,
                opt(p.girth),
                opt(p.edge_connectivity),
                p.essentially_4_edge_connected
                    .map_or("-".to_string(), |b| b.to_string()),
            );
            if let Some(w) = &p.cut_witness {
                let _ = write!(s, " cut={w:?}");
            }
            out!("{s}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn iso(global: &Global, a: &IsoArgs) -> Outcome {
    let (g, h) = graph_pair(&a.first, &a.second, global.format)?;
    let map = find_isomorphism(&g, &h);
    if global.json {
        #[derive(Serialize)]
        struct Iso {
            isomorphic: bool,
            mapping: Option<Vec<usize>>,
        }
        out!(
            "{}",
            json_line(&Iso {
                isomorphic: map.is_some(),
                mapping: map
            })
        );
    } else {
        out!("{}", map.is_some());
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct LoggedMove<'a> {
    graph: String,
    #[serde(flatten)]
    mv: &'a MartinettiMove,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<&'static str, String>>,
}

fn site_labels(g: &Graph, mv: &MartinettiMove) -> Option<BTreeMap<&'static str, String>> {
    g.labels()?;
    let name = |v: usize| g.display_vertex(v);
    let pairs: Vec<(&'static str, usize)> = match &mv.kind {
        MoveKind::Extension(s) => vec![("x1", s.x1), ("y1", s.y1), ("x2", s.x2), ("y2", s.y2)],
        MoveKind::Reduction(s) => vec![
            ("u", s.u),
            ("v", s.v),
            ("x1", s.x[0]),
            ("x2", s.x[1]),
            ("y1", s.y[0]),
            ("y2", s.y[1]),
        ],
    };
    Some(pairs.into_iter().map(|(k, v)| (k, name(v))).collect())
}

fn write_log(path: Option<&Path>, entries: &[String]) -> Result<(), Failure> {
    if let Some(path) = path {
        let body = format!("[{}]\n", entries.join(",\n"));
        std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn pick<T: Clone>(items: Vec<T>, site: Option<usize>) -> Result<Vec<T>, Failure> {
    match site {
        None => Ok(items),
        Some(k) => items
            .get(k)
            .cloned()
            .map(|s| vec![s])
            .ok_or_else(|| Failure::Input(format!("site {k} out of range ({} sites)", items.len()))),
    }
}

fn martinetti(global: &Global, cmd: &MartinettiCommand) -> Outcome {
    let err = |e: levi_core::martinetti::MartinettiError| Failure::Input(e.to_string());
    match cmd {
        MartinettiCommand::Extend(a) => {
            let mut log = Vec::new();
            for g in load(global, a)? {
                let sites = if a.up_to_iso {
                    extensions_up_to_iso(&g)
                        .map_err(err)?
                        .into_iter()
                        .map(|c| c.site)
                        .collect()
                } else {
                    extension_sites(&g).map_err(err)?
                };
                for site in pick(sites, a.site)? {
                    let (h, mv) = MartinettiMove::extension(&g, site).map_err(err)?;
                    emit(global, &h);
                    log.push(logged(&g, &mv));
                }
            }
            write_log(a.log.as_deref(), &log)?;
        }
        MartinettiCommand::Reduce {
            moves: a,
            allow_disconnected,
        } => {
            let opts = ReduceOptions {
                allow_disconnected: *allow_disconnected,
            };
            let mut log = Vec::new();
            for g in load(global, a)? {
                let mut sites = reduction_sites_with(&g, opts).map_err(err)?;
                if a.up_to_iso {
                    let mut seen = HashSet::new();
                    sites.retain(|s| seen.insert(s.after.clone()));
                }
                for site in pick(sites, a.site)? {
                    let h = reduce_with(&g, &site, opts).map_err(err)?;
                    let mv = MartinettiMove {
                        before: canonical_form(&g),
                        after: canonical_form(&h),
                        kind: MoveKind::Reduction(site),
                    };
                    emit(global, &h);
                    log.push(logged(&g, &mv));
                }
            }
            write_log(a.log.as_deref(), &log)?;
        }
        MartinettiCommand::Sites {
            input,
            labels,
            allow_disconnected,
        } => {
            let opts = ReduceOptions {
                allow_disconnected: *allow_disconnected,
            };
            for g in graphs(&input.input, global.format)? {
                let g = attach_labels(g, labels.as_deref())?;
                let ext = extension_sites(&g).map_err(err)?;
                let red = reduction_sites_with(&g, opts).map_err(err)?;
                if global.json {
                    #[derive(Serialize)]
                    struct Sites<'a> {
                        graph: String,
                        extension_sites: &'a [levi_core::martinetti::ExtensionSite],
                        reduction_sites: &'a [levi_core::martinetti::ReductionSite],
                    }
                    out!(
                        "{}",
                        json_line(&Sites {
                            graph: to_graph6(&g),
                            extension_sites: &ext,
                            reduction_sites: &red,
                        })
                    );
                } else {
                    let d = |v: usize| g.display_vertex(v);
                    for s in &ext {
                        out!("extension {}-{} {}-{}", d(s.x1), d(s.y1), d(s.x2), d(s.y2));
                    }
                    for s in &red {
                        out!(
                            "reduction {}-{} {:?} {}",
                            d(s.u),
                            d(s.v),
                            s.option,
                            s.after.as_ref().map_or(String::new(), |c| c.to_string())
                        );
                    }
                }
                if global.verbose {
                    eprintln!(
                        "{}: {} extension sites, {} reduction sites",
                        to_graph6(&g),
                        ext.len(),
                        red.len()
                    );
                }
            }
        }
        MartinettiCommand::Irreducible(input) => {
            for g in graphs(&input.input, global.format)? {
                let irr = is_irreducible(&g).map_err(err)?;
                if global.json {
                    #[derive(Serialize)]
                    struct Irr {
                        graph: String,
                        irreducible: bool,
                    }
                    out!(
                        "{}",
                        json_line(&Irr {
                            graph: to_graph6(&g),
                            irreducible: irr
                        })
                    );
                } else {
                    out!("{irr}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load(global: &Global, a: &MoveArgs) -> Result<Vec<Graph>, Failure> {
    graphs(&a.input.input, global.format)?
        .into_iter()
        .map(|g| attach_labels(g, a.labels.as_deref()).map_err(Failure::Input))
        .collect()
}

fn logged(g: &Graph, mv: &MartinettiMove) -> String {
    json_line(&LoggedMove {
        graph: to_graph6(g),
        mv,
        labels: site_labels(g, mv),
    })
}

fn witnesses(global: &Global, a: &WitnessArgs) -> Outcome {
    let pair = match a.family {
        FamilyArg::D => d_witness_pair(a.n),
        FamilyArg::T => {
            let k = a
                .variant
                .ok_or_else(|| Failure::Usage("--family t requires --variant".into()))?;
            let v = TVariant::from_number(k).map_err(|e| Failure::Usage(e.to_string()))?;
            t_witness_pair(a.n, v)
        }
        _ => return Err(Failure::Usage("witnesses supports --family d or t".into())),
    }
    .map_err(|e| Failure::Input(e.to_string()))?;
    if global.json {
        out!("{}", json_line(&pair));
    } else {
        out!(
            "{} hamiltonian {} {:?}",
            pair.family, pair.hamiltonian_formula, pair.hamiltonian.circuit_lengths
        );
        out!(
            "{} two-circuit {} {:?}",
            pair.family, pair.disconnected_formula, pair.disconnected.circuit_lengths
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(global: &Global, a: &VerifyArgs) -> Outcome {
    let groups = match &a.claims {
        None => ClaimGroup::ALL.into_iter().collect(),
        Some(list) => list
            .iter()
            .map(|s| s.trim().parse::<ClaimGroup>())
            .collect::<Result<_, _>>()
            .map_err(Failure::Usage)?,
    };
    let config = SuiteConfig {
        nmax: a.nmax,
        t_max: a.t_max,
        groups,
        t_segment: None,
        threads: global.threads,
    };
    let ledger = verify_claim_suite(&config);
    if global.json {
        out!("{}", json_line(&ledger));
    } else {
        for c in &ledger.claims {
            let tag = match c.status {
                ClaimStatus::Pass => "PASS",
                ClaimStatus::TemplateInvalid => "TMPL",
                ClaimStatus::Fail => "FAIL",
            };
            out!("{tag} {} {}", c.id, c.evidence);
        }
        out!(
            "{} passed, {} template mismatches, {} failed",
            ledger.passed, ledger.template_invalid, ledger.failed
        );
    }
    if global.verbose {
        for c in &ledger.claims {
            eprintln!("{:<32} {}", c.id, c.statement);
        }
    }
    Ok(if ledger.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
