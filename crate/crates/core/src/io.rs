//! The `.alg` algebra file format and DOT rendering of Hasse diagrams.
//!
//! An `.alg` file is a TOML document:
//!
//! ```toml
//! name = "chain4"
//! elements = ["0", "a", "b", "1"]
//! covers = [["0", "a"], ["a", "b"], ["b", "1"]]   # or `leq = [...]`
//! unit = "1"                                      # required with `mul`
//! mul = [["a", "b", "a"], ...]                    # one triple per ordered pair
//! imp = [["a", "b", "1"], ...]                    # optional, cross-checked
//! involution = [["0", "1"], ["a", "b"], ...]      # optional, one pair per element
//! ```
//!
//! A document with `mul` loads as a residuated structure, otherwise as a
//! bare lattice. A supplied `imp` must equal the derived residuum.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{validate_lattice, Carrier, Elem, FiniteLattice, Involution, OrderInput, Table};
use crate::residuated::{check_residuated, ResiduatedStructure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<[String; 2]>>,
}

/// A validated document: the lattice, and the structure when `mul` is given.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub name: String,
    pub lattice: FiniteLattice,
    pub structure: Option<ResiduatedStructure>,
    pub involution: Option<Involution>,
}

pub fn parse_document(text: &str) -> Result<AlgebraDocument> {
    toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map(|s| line_column(text, s.start)).unwrap_or((1, 1));
        Error::Syntax {
            line,
            column,
            message: e.message().to_string(),
        }
    })
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

pub fn serialize(doc: &AlgebraDocument) -> String {
    toml::to_string(doc).expect("documents are always representable")
}

fn table_from_triples(carrier: &Carrier, triples: &[[String; 3]], what: &str) -> Result<Table> {
    let n = carrier.size();
    let mut data = vec![None; n * n];
    for [x, y, z] in triples {
        let (x, y, z) = (carrier.index(x)?, carrier.index(y)?, carrier.index(z)?);
        match data[x * n + y] {
            Some(prev) if prev != z => {
                return Err(Error::Validation(format!(
                    "{what}: conflicting entries for ({}, {})",
                    carrier.label(x),
                    carrier.label(y)
                )))
            }
            _ => data[x * n + y] = Some(z),
        }
    }
    let data = data
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                Error::Validation(format!(
                    "{what}: missing entry for ({}, {})",
                    carrier.label(i / n),
                    carrier.label(i % n)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table::from_rows(n, data))
}

/// Validates a document and builds the lattice, structure and involution.
pub fn load(doc: &AlgebraDocument) -> Result<LoadedAlgebra> {
    let carrier = Carrier::new(doc.elements.iter().cloned())?;
    let lattice = match (&doc.covers, &doc.leq) {
        (Some(_), Some(_)) => return Err(Error::Validation("give either `covers` or `leq`, not both".into())),
        (Some(c), None) => validate_lattice(carrier.clone(), &pairs(c), OrderInput::Covers)?,
        (None, Some(l)) => validate_lattice(carrier.clone(), &pairs(l), OrderInput::Full)?,
        (None, None) => validate_lattice(carrier.clone(), &[] as &[(&str, &str)], OrderInput::Covers)?,
    };
    let structure = match (&doc.mul, &doc.unit) {
        (None, None) => None,
        (None, Some(_)) => return Err(Error::Validation("`unit` given without `mul`".into())),
        (Some(_), None) => return Err(Error::Validation("`mul` requires `unit`".into())),
        (Some(mul), Some(unit)) => {
            let mul = table_from_triples(&carrier, mul, "mul")?;
            let unit = carrier.index(unit)?;
            let r = match &doc.imp {
                None => ResiduatedStructure::from_mul(lattice.clone(), mul, unit)?,
                Some(imp) => {
                    let imp = table_from_triples(&carrier, imp, "imp")?;
                    ResiduatedStructure::with_imp(lattice.clone(), mul, imp, unit)?
                }
            };
            if let Some(f) = check_residuated(&r).failure {
                return Err(Error::Validation(f.message));
            }
            Some(r)
        }
    };
    if doc.imp.is_some() && doc.mul.is_none() {
        return Err(Error::Validation("`imp` given without `mul`".into()));
    }
    let involution = match &doc.involution {
        None => None,
        Some(entries) => {
            let mut map = vec![None; carrier.size()];
            for [x, y] in entries {
                let (x, y) = (carrier.index(x)?, carrier.index(y)?);
                if map[x].is_some_and(|p| p != y) {
                    return Err(Error::Validation(format!("involution: conflicting images of {}", carrier.label(x))));
                }
                map[x] = Some(y);
            }
            let map = map
                .iter()
                .enumerate()
                .map(|(x, v)| v.ok_or_else(|| Error::Validation(format!("involution: no image for {}", carrier.label(x)))))
                .collect::<Result<Vec<_>>>()?;
            Some(Involution::new(&lattice, map).map_err(|e| Error::Validation(e.to_string()))?)
        }
    };
    Ok(LoadedAlgebra {
        name: doc.name.clone(),
        lattice,
        structure,
        involution,
    })
}

fn pairs(list: &[[String; 2]]) -> Vec<(&str, &str)> {
    list.iter().map(|[x, y]| (x.as_str(), y.as_str())).collect()
}

/// Reads and validates an `.alg` file.
pub fn load_file(path: &std::path::Path) -> Result<LoadedAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Validation(format!("{}: {e}", path.display())))?;
    load(&parse_document(&text)?)
}

/// A document describing `lattice` by its Hasse covers, with full `mul` and
/// `imp` tables when a structure is given.
pub fn to_document(
    name: &str,
    lattice: &FiniteLattice,
    structure: Option<&ResiduatedStructure>,
    involution: Option<&Involution>,
) -> AlgebraDocument {
    let lb = |e: Elem| lattice.label(e).to_string();
    let table = |f: &dyn Fn(Elem, Elem) -> Elem| {
        lattice
            .elements()
            .flat_map(|x| lattice.elements().map(move |y| (x, y)))
            .map(|(x, y)| [lb(x), lb(y), lb(f(x, y))])
            .collect()
    };
    AlgebraDocument {
        name: name.to_string(),
        elements: lattice.carrier().labels().to_vec(),
        covers: Some(lattice.hasse_covers().into_iter().map(|(x, y)| [lb(x), lb(y)]).collect()),
        leq: None,
        unit: structure.map(|r| lb(r.unit())),
        mul: structure.map(|r| table(&|x, y| r.mul(x, y))),
        imp: structure.map(|r| table(&|x, y| r.imp(x, y))),
        involution: involution.map(|i| lattice.elements().map(|x| [lb(x), lb(i.apply(x))]).collect()),
    }
}

const HIGHLIGHT: &str = "style=filled, fillcolor=lightgrey";

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of any finite order given by labels and `leq`.
pub fn render_order(labels: &[String], leq: impl Fn(usize, usize) -> bool, highlight: &[usize]) -> String {
    let n = labels.len();
    let lt = |x: usize, y: usize| x != y && leq(x, y);
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, l) in labels.iter().enumerate() {
        let style = if highlight.contains(&i) { format!(", {HIGHLIGHT}") } else { String::new() };
        writeln!(out, "  n{i} [label={}{style}];", quote(l)).unwrap();
    }
    for x in 0..n {
        for y in 0..n {
            if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                writeln!(out, "  n{x} -> n{y};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Deterministic DOT text: nodes in carrier order, one upward edge per
/// Hasse cover in lexicographic order.
pub fn render_dot(lat: &FiniteLattice, highlight: Option<&[Elem]>) -> String {
    render_order(lat.carrier().labels(), |x, y| lat.leq(x, y), highlight.unwrap_or(&[]))
}
