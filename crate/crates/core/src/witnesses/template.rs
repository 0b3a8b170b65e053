//! Symbolic path templates and 2-factor formulas over family vertex labels.
//!
//! A vertex token is `name_index^sup` where the index is `i`, `i-1`, `m`,
//! `n` or a literal. A formula is a `|`-separated list of circuits; each
//! circuit is either a bare circuit template or a parenthesized sequence of
//! template references (`L^1[1..m]`, `M_1`, `P^3[1]`) and vertex tokens.

use std::fmt;

use super::WitnessError;

/// Values for the free symbols of a template.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Env {
    pub i: Option<usize>,
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Atom {
    I,
    M,
    N,
    Lit(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Expr {
    atom: Atom,
    minus: usize,
}

impl Expr {
    fn parse(s: &str) -> Option<Expr> {
        let (head, minus) = match s.split_once('-') {
            Some((h, k)) => (h, k.parse().ok()?),
            None => (s, 0),
        };
        let atom = match head {
            "i" => Atom::I,
            "m" => Atom::M,
            "n" => Atom::N,
            lit => Atom::Lit(lit.parse().ok()?),
        };
        Some(Expr { atom, minus })
    }

    fn eval(&self, env: &Env) -> Option<usize> {
        let base = match self.atom {
            Atom::I => env.i?,
            Atom::M => env.m,
            Atom::N => env.n,
            Atom::Lit(k) => k,
        };
        base.checked_sub(self.minus)
    }

    fn uses_i(&self) -> bool {
        self.atom == Atom::I
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.atom {
            Atom::I => write!(f, "i")?,
            Atom::M => write!(f, "m")?,
            Atom::N => write!(f, "n")?,
            Atom::Lit(k) => write!(f, "{k}")?,
        }
        if self.minus > 0 {
            write!(f, "-{}", self.minus)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct SymVertex {
    name: String,
    index: Expr,
    sup: usize,
}

impl SymVertex {
    fn parse(tok: &str) -> Option<SymVertex> {
        let (name, rest) = tok.split_once('_')?;
        let (index, sup) = rest.split_once('^')?;
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_lowercase()) {
            return None;
        }
        Some(SymVertex {
            name: name.to_string(),
            index: Expr::parse(index)?,
            sup: sup.parse().ok()?,
        })
    }

    fn instantiate(&self, env: &Env) -> Option<String> {
        Some(format!("{}_{}^{}", self.name, self.index.eval(env)?, self.sup))
    }
}

/// A named vertex sequence, possibly closed into a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTemplate {
    pub name: &'static str,
    vertices: Vec<SymVertex>,
    pub circuit: bool,
    /// Whether the template has the free index `i`.
    pub indexed: bool,
}

impl PathTemplate {
    /// Parses a whitespace-separated token list. A circuit is written with its
    /// first vertex repeated at the end.
    pub fn parse(name: &'static str, text: &str) -> Result<PathTemplate, WitnessError> {
        let mut vertices = text
            .split_whitespace()
            .map(|t| {
                SymVertex::parse(t).ok_or_else(|| {
                    WitnessError::TemplateInvalid(format!("{name}: bad vertex token {t:?}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let circuit = vertices.len() > 3 && vertices.first() == vertices.last();
        if circuit {
            vertices.pop();
        }
        let indexed = vertices.iter().any(|v| v.index.uses_i());
        Ok(PathTemplate {
            name,
            vertices,
            circuit,
            indexed,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Concrete labels, without the closing repeat for circuits.
    pub fn instantiate(&self, env: &Env) -> Result<Vec<String>, WitnessError> {
        self.vertices
            .iter()
            .map(|v| {
                v.instantiate(env).ok_or_else(|| {
                    WitnessError::TemplateInvalid(format!(
                        "{}: index {} undefined",
                        self.name, v.index
                    ))
                })
            })
            .collect()
    }
}

const TEMPLATE_TEXT: [(&str, &str); 14] = [
    ("L^1", "u_i^1 u_i^2 u_i^3 u_i^4 v_i^2 v_i^1"),
    ("L^2", "u_i^4 u_i^3 u_i^2 u_i^1 v_i^1 v_i^2"),
    (
        "M_1",
        "u_1^4 v_1^2 u_2^4 u_2^3 u_3^2 u_3^3 u_3^4 v_2^2 v_2^1 u_3^1 v_3^1 v_3^2",
    ),
    ("M_2", "u_m^4 v_m^2 v_m^1 u_m^1 u_m^2 u_m^3 w_m^1 w_m^2 u_1^4"),
    ("N", "u_i^2 u_i^1 v_i-1^1 v_i-1^2 u_i^4 u_i^3"),
    (
        "N_m",
        "w_m^2 w_m^1 v_m^1 v_m^2 w_m^4 w_m^3 u_1^4 v_1^2 u_2^4 u_2^3",
    ),
    ("C_1", "u_1^1 u_1^2 u_1^3 u_2^2 u_2^1 v_1^1 u_1^1"),
    ("C_2", "u_1^1 u_1^2 u_1^3 u_1^4 w_m^2 w_m^1 u_1^1"),
    (
        "C_3",
        "v_1^1 v_1^2 u_2^4 v_2^2 v_2^1 u_3^1 v_3^1 v_3^2 u_3^4 u_3^3 u_3^2 u_2^3 u_2^2 u_2^1 v_1^1",
    ),
    (
        "P^1",
        "u_i^2 w_i^1 u_i^1 w_i^2 u_i^3 w_i^3 x_i^3 y_i^3 z_i^3 v_i^3 t_i^2 v_i^1 z_i^1 y_i^2 x_i^2 t_i^1 x_i^1 y_i^1 z_i^2 v_i^2",
    ),
    (
        "P^2",
        "u_i^2 w_i^1 u_i^1 w_i^2 u_i^3 w_i^3 x_i^3 y_i^3 z_i^2 v_i^2",
    ),
    (
        "P^3",
        "v_i^1 t_i^2 v_i^3 z_i^3 y_i^2 x_i^2 t_i^1 x_i^1 y_i^1 z_i^1 v_i^1",
    ),
    (
        "Q^1",
        "u_i^3 w_i^3 u_i^2 w_i^1 u_i^1 w_i^2 x_i^2 y_i^2 z_i^3 v_i^3 t_i^2 v_i^1 z_i^1 y_i^1 x_i^1 t_i^1 x_i^3 y_i^3 z_i^2 v_i^2",
    ),
    (
        "Q^2",
        "u_i^3 w_i^2 u_i^1 w_i^1 u_i^2 w_i^3 x_i^3 y_i^3 z_i^2 v_i^2",
    ),
];

/// All path templates, parsed.
pub fn templates() -> Result<Vec<PathTemplate>, WitnessError> {
    TEMPLATE_TEXT
        .iter()
        .map(|&(name, text)| PathTemplate::parse(name, text))
        .collect()
}

pub fn template(name: &str) -> Result<PathTemplate, WitnessError> {
    let &(name, text) = TEMPLATE_TEXT
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| WitnessError::TemplateInvalid(format!("unknown template {name}")))?;
    PathTemplate::parse(name, text)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Item {
    /// template over an index range; `None` for templates without `i`
    Ref {
        template: PathTemplate,
        range: Option<(Expr, Expr)>,
    },
    Vertex(SymVertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct CircuitSpec {
    items: Vec<Item>,
    /// parenthesized: closes back on the first vertex
    wrapped: bool,
}

/// A parsed 2-factor formula such as `C_1 | (M_1 L^2[4..m] u_1^4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    pub text: String,
    circuits: Vec<CircuitSpec>,
}

fn parse_ref(tok: &str) -> Result<Item, WitnessError> {
    let bad = || WitnessError::TemplateInvalid(format!("bad template reference {tok:?}"));
    let (name, range) = match tok.split_once('[') {
        Some((name, rest)) => {
            let inner = rest.strip_suffix(']').ok_or_else(bad)?;
            let (a, b) = inner.split_once("..").unwrap_or((inner, inner));
            let a = Expr::parse(a).ok_or_else(bad)?;
            let b = Expr::parse(b).ok_or_else(bad)?;
            (name, Some((a, b)))
        }
        None => (tok, None),
    };
    let template = template(name)?;
    if template.indexed != range.is_some() {
        return Err(WitnessError::TemplateInvalid(format!(
            "{tok}: index range required exactly for templates with free i"
        )));
    }
    Ok(Item::Ref { template, range })
}

impl Formula {
    pub fn parse(text: &str) -> Result<Formula, WitnessError> {
        let circuits = text
            .split('|')
            .map(|part| {
                let part = part.trim();
                let (inner, wrapped) = match part.strip_prefix('(') {
                    Some(rest) => (
                        rest.strip_suffix(')').ok_or_else(|| {
                            WitnessError::TemplateInvalid(format!("unbalanced {part:?}"))
                        })?,
                        true,
                    ),
                    None => (part, false),
                };
                let items = inner
                    .split_whitespace()
                    .map(|tok| {
                        if tok.starts_with(|c: char| c.is_ascii_uppercase()) {
                            parse_ref(tok)
                        } else {
                            SymVertex::parse(tok).map(Item::Vertex).ok_or_else(|| {
                                WitnessError::TemplateInvalid(format!("bad vertex token {tok:?}"))
                            })
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if !wrapped {
                    let single_circuit = matches!(items.as_slice(), [Item::Ref { template, .. }] if template.circuit);
                    if !single_circuit {
                        return Err(WitnessError::TemplateInvalid(format!(
                            "{part:?} is neither a circuit template nor parenthesized"
                        )));
                    }
                }
                Ok(CircuitSpec { items, wrapped })
            })
            .collect::<Result<Vec<_>, WitnessError>>()?;
        Ok(Formula {
            text: text.to_string(),
            circuits,
        })
    }

    /// Instantiates each circuit as a list of pieces (label sequences) to be
    /// concatenated. Every circuit ends by repeating its first vertex.
    pub fn pieces(&self, m: usize, n: usize) -> Result<Vec<Vec<Vec<String>>>, WitnessError> {
        let base = Env { i: None, m, n };
        self.circuits
            .iter()
            .map(|c| {
                let mut pieces = Vec::new();
                for item in &c.items {
                    match item {
                        Item::Vertex(v) => pieces.push(vec![v.instantiate(&base).ok_or_else(
                            || WitnessError::TemplateInvalid(format!("index {} undefined", v.index)),
                        )?]),
                        Item::Ref { template, range: None } => {
                            pieces.push(template.instantiate(&base)?)
                        }
                        Item::Ref {
                            template,
                            range: Some((a, b)),
                        } => {
                            let undefined = || {
                                WitnessError::TemplateInvalid(format!(
                                    "{}: range bound undefined",
                                    template.name
                                ))
                            };
                            let lo = a.eval(&base).ok_or_else(undefined)?;
                            let hi = b.eval(&base).ok_or_else(undefined)?;
                            for i in lo..=hi {
                                pieces.push(template.instantiate(&Env { i: Some(i), m, n })?);
                            }
                        }
                    }
                }
                if !c.wrapped {
                    let first = pieces[0][0].clone();
                    pieces.push(vec![first]);
                }
                Ok(pieces)
            })
            .collect()
    }

    pub fn circuit_count(&self) -> usize {
        self.circuits.len()
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_templates_parse() {
        let t = templates().unwrap();
        assert_eq!(t.len(), 14);
        let len = |name: &str| t.iter().find(|p| p.name == name).unwrap().len();
        assert_eq!(len("P^1"), 20);
        assert_eq!(len("Q^1"), 20);
        assert_eq!(len("P^2"), 10);
        assert_eq!(len("P^3"), 10);
        assert_eq!(len("C_3"), 14);
        assert!(t.iter().find(|p| p.name == "C_1").unwrap().circuit);
        assert!(!t.iter().find(|p| p.name == "M_1").unwrap().indexed);
        assert!(t.iter().find(|p| p.name == "N").unwrap().indexed);
    }

    #[test]
    fn index_expressions() {
        let env = Env { i: Some(3), m: 4, n: 13 };
        let n = template("N").unwrap().instantiate(&env).unwrap();
        assert_eq!(n[2], "v_2^1");
        assert_eq!(template("M_2").unwrap().instantiate(&env).unwrap()[0], "u_4^4");
        assert!(template("L^1").unwrap().instantiate(&Env { i: None, m: 1, n: 3 }).is_err());
    }

    #[test]
    fn formulas_expand_ranges() {
        let f = Formula::parse("C_1 | (M_1 L^2[4..m] u_1^4)").unwrap();
        let p = f.pieces(5, 15).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p[1].len(), 4);
        assert_eq!(p[1][1][0], "u_4^4");
        // empty range
        assert_eq!(f.pieces(3, 9).unwrap()[1].len(), 2);
        assert!(Formula::parse("M_1").is_err());
        assert!(Formula::parse("(L^1 u_1^1)").is_err());
        assert!(Formula::parse("(X_9)").is_err());
    }
}
