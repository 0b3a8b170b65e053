use std::io::Read;
use std::path::Path;

use levi_core::graph_core::io::{read_graph, Format};
use levi_core::Graph;

use crate::FormatArg;

pub fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Graph6 => Format::Graph6,
        FormatArg::Edgelist => Format::EdgeList,
    }
}

fn stdin_text() -> Result<String, String> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| format!("reading stdin: {e}"))?;
    Ok(s)
}

fn parse_lines(text: &str, origin: &str) -> Result<Vec<Graph>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            read_graph(l.trim(), Format::Graph6)
                .map_err(|e| format!("{origin} line {}: {e}", i + 1))
        })
        .collect()
}

/// Graphs named by a command-line operand.
///
/// With graph6, the operand is the graph itself or `-` for one graph per stdin
/// line. With edge lists, it is a file path or `-`, holding a single graph.
pub fn graphs(operand: &str, fmt: FormatArg) -> Result<Vec<Graph>, String> {
    match (fmt, operand) {
        (FormatArg::Graph6, "-") => parse_lines(&stdin_text()?, "stdin"),
        (FormatArg::Graph6, s) => parse_lines(s, "argument"),
        (FormatArg::Edgelist, op) => {
            let text = if op == "-" {
                stdin_text()?
            } else {
                std::fs::read_to_string(op).map_err(|e| format!("{op}: {e}"))?
            };
            let g = read_graph(&text, Format::EdgeList).map_err(|e| format!("{op}: {e}"))?;
            Ok(vec![g])
        }
    }
}

/// Two operands that may both read from stdin, in order.
pub fn graph_pair(a: &str, b: &str, fmt: FormatArg) -> Result<(Graph, Graph), String> {
    if a == "-" && b == "-" {
        if fmt == FormatArg::Edgelist {
            return Err("only one edge-list operand can come from stdin".into());
        }
        let mut gs = parse_lines(&stdin_text()?, "stdin")?.into_iter();
        return match (gs.next(), gs.next()) {
            (Some(g), Some(h)) => Ok((g, h)),
            _ => Err("expected two graphs on stdin".into()),
        };
    }
    let one = |op: &str| -> Result<Graph, String> {
        let mut gs = graphs(op, fmt)?;
        match gs.len() {
            1 => Ok(gs.remove(0)),
            k => Err(format!("expected one graph from {op}, got {k}")),
        }
    };
    Ok((one(a)?, one(b)?))
}

pub fn attach_labels(g: Graph, path: Option<&Path>) -> Result<Graph, String> {
    let Some(path) = path else {
        return Ok(g);
    };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let labels: Option<Vec<String>> =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    match labels {
        Some(l) => g.with_labels(l).map_err(|e| format!("{}: {e}", path.display())),
        None => Ok(g),
    }
}
