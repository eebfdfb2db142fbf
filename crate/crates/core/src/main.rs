use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twistlab::io::{load_file, render_dot, render_order, serialize, to_document, LoadedAlgebra};
use twistlab::kleene::{
    build_pa, closure_under, cor2_condition, dn_closure_check, dn_imp_triviality_check, imp_lemma_condition,
    is_kleene, is_sublattice, lem1_condition, th1_check, th3_check, th4_check, PairOp,
};
use twistlab::residuated::{check_mv, check_prop1, check_residuated, mv_to_residuated, residuated_to_mv, satisfies_dnl};
use twistlab::search::{run_task, EnumerationTask, Hypothesis, Mode, Target};
use twistlab::twist::{
    build_twist, check_componentwise_negation, check_orthogonal_dnl, check_swap_interdefinability, pair_index,
};
use twistlab::{CheckReport, Error, Flavor, Involution, ResiduatedStructure};

#[derive(Parser)]
#[command(name = "twistlab", version, about = "Twist-products of finite residuated lattices and their Kleene subsets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms of the algebra in FILE.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "def1")]
        what: CheckWhat,
    },
    /// Build and verify the twist-product of FILE.
    Twist {
        file: PathBuf,
        #[arg(long)]
        flavor: Flavor,
        /// Write the twist-product as an algebra file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks on the subset P_a for the focal element a.
    Pa {
        file: PathBuf,
        #[arg(long)]
        focal: String,
        #[arg(long, value_enum, default_value = "sublattice")]
        what: PaWhat,
        /// List every violation, not only the least one (sublattice, closure-bc).
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Print the Hasse diagram of FILE, or of its P_a.
    Render {
        file: PathBuf,
        /// Render P_a for this focal element instead of the lattice.
        #[arg(long)]
        pa: Option<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Comma-separated labels to highlight; pair labels like (a,b) stay whole.
        #[arg(long, value_parser = parse_labels, default_value = "")]
        highlight: Labels,
    },
    /// Sweep all lattices up to a size for a theorem target.
    Search {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        target: String,
        /// Drop these hypotheses and look for a counterexample.
        #[arg(long, value_delimiter = ',')]
        without: Vec<Hypothesis>,
        /// Write the first counterexample as an algebra file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone)]
struct Labels(Vec<String>);

/// Splits on commas outside parentheses.
fn parse_labels(s: &str) -> Result<Labels, String> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim().to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim().to_string());
    out.retain(|l| !l.is_empty());
    Ok(Labels(out))
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckWhat {
    Def1,
    Prop1,
    Dnl,
    Mv,
    Distributive,
}

#[derive(Clone, Copy, ValueEnum)]
enum PaWhat {
    Sublattice,
    Kleene,
    Th1,
    Th3,
    Th4,
    Lem1,
    Cor2,
    Implem,
    ClosureBc,
    ClosureDn,
    Triviality,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

enum Outcome {
    Report(CheckReport),
    Text(String),
    Verdict(String, bool),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Report(r)) => {
            print!("{r}");
            ExitCode::from(if r.passed() { 0 } else { 1 })
        }
        Ok(Outcome::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verdict(t, ok)) => {
            print!("{t}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn structure(alg: &LoadedAlgebra) -> Result<&ResiduatedStructure, Error> {
    alg.structure
        .as_ref()
        .ok_or_else(|| Error::Validation(format!("{} has no `mul`; this check needs a residuated structure", alg.name)))
}

/// The file's involution, else `x → 0` when it is one.
fn involution(alg: &LoadedAlgebra, r: &ResiduatedStructure) -> Result<Involution, Error> {
    match &alg.involution {
        Some(i) => Ok(i.clone()),
        None => Involution::new(r.lattice(), r.negation())
            .map_err(|_| Error::Validation("no `involution` given and x → 0 is not an involution".into())),
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Check { file, what } => check(&load_file(&file)?, what).map(Outcome::Report),
        Command::Twist { file, flavor, out } => twist(&load_file(&file)?, flavor, out.as_deref()),
        Command::Pa { file, focal, what, all_witnesses } => {
            let alg = load_file(&file)?;
            let a = alg.lattice.index(&focal)?;
            let report = pa(&alg, a, what)?;
            if !all_witnesses {
                return Ok(Outcome::Report(report));
            }
            let listing = violations(&alg, a, what)?;
            Ok(Outcome::Verdict(format!("{report}{listing}"), report.passed()))
        }
        Command::Render { file, pa, format: Format::Dot, highlight: Labels(highlight) } => {
            let alg = load_file(&file)?;
            match pa {
                None => {
                    let hl = highlight.iter().map(|h| alg.lattice.index(h)).collect::<Result<Vec<_>, _>>()?;
                    Ok(Outcome::Text(render_dot(&alg.lattice, Some(&hl))))
                }
                Some(focal) => {
                    let p = build_pa(&alg.lattice, alg.lattice.index(&focal)?);
                    let labels: Vec<String> = p.members().iter().map(|&q| p.label(q)).collect();
                    let hl = highlight
                        .iter()
                        .map(|h| labels.iter().position(|l| l == h).ok_or_else(|| Error::UnknownLabel(h.clone())))
                        .collect::<Result<Vec<_>, _>>()?;
                    let members = p.members();
                    let twist = twistlab::twist::twist_lattice(&alg.lattice);
                    let n = alg.lattice.size();
                    let leq = |i: usize, j: usize| twist.leq(pair_index(n, members[i]), pair_index(n, members[j]));
                    Ok(Outcome::Text(render_order(&labels, leq, &hl)))
                }
            }
        }
        Command::Search { max_size, target, without, out } => {
            let target: Target = target.parse()?;
            let mode = if without.is_empty() { Mode::Verify } else { Mode::FalsifyWithout(without) };
            let report = run_task(&EnumerationTask::new(max_size, target, mode)?)?;
            if let (Some(path), Some(c)) = (&out, &report.first) {
                let name = format!("{}-counterexample", target.id());
                let doc = to_document(&name, &c.lattice, c.structure.as_ref(), c.involution.as_ref());
                write(path, &serialize(&doc))?;
            }
            Ok(Outcome::Verdict(report.to_string(), report.first.is_none()))
        }
    }
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Validation(format!("{}: {e}", path.display())))
}

fn check(alg: &LoadedAlgebra, what: CheckWhat) -> Result<CheckReport, Error> {
    Ok(match what {
        CheckWhat::Distributive => alg.lattice.is_distributive(),
        CheckWhat::Def1 => {
            let r = structure(alg)?;
            let integral = CheckReport::flag(
                "integral",
                r.is_integral(),
                vec![r.unit()],
                format!("unit {} ≠ top {}", r.lattice().label(r.unit()), r.lattice().label(r.lattice().top())),
            );
            CheckReport::all("integral commutative residuated lattice", vec![check_residuated(r), integral])
        }
        CheckWhat::Prop1 => check_prop1(structure(alg)?)?,
        CheckWhat::Dnl => satisfies_dnl(structure(alg)?),
        CheckWhat::Mv => {
            let r = structure(alg)?;
            let m = residuated_to_mv(r);
            let axioms = check_mv(&m);
            let round_trip = match mv_to_residuated(&m) {
                Ok(back) => CheckReport::flag(
                    "round trip",
                    back.mul_table() == r.mul_table() && back.imp_table() == r.imp_table() && back.lattice() == r.lattice(),
                    Vec::new(),
                    "recovered structure differs",
                ),
                Err(e) => CheckReport::fail("round trip", "", Vec::new(), e.to_string()),
            };
            CheckReport::all("MV-algebra", vec![axioms, round_trip])
        }
    })
}

fn twist(alg: &LoadedAlgebra, flavor: Flavor, out: Option<&Path>) -> Result<Outcome, Error> {
    let r = structure(alg)?;
    let inv = match flavor {
        Flavor::Bc => None,
        Flavor::Dn => Some(involution(alg, r)?),
    };
    let t = build_twist(r, flavor, inv)?;
    let alg2 = t.algebra();
    let l = t.lattice();
    let integral = CheckReport::flag(
        "integral",
        alg2.is_integral(),
        vec![alg2.unit()],
        format!("unit {} ≠ top {}", l.label(alg2.unit()), l.label(l.top())),
    );
    let residuated = check_residuated(alg2).renamed("commutative residuated");
    let swap = check_swap_interdefinability(&t);
    // integrality is asserted only for the dn product, swap
    // interdefinability only for bc
    let mut asserted = vec![residuated.clone()];
    let mut shown = vec![residuated, integral.clone()];
    match flavor {
        Flavor::Bc => {
            if let Ok(o) = check_orthogonal_dnl(&t) {
                asserted.push(o.clone());
                shown.push(o);
            }
            asserted.push(swap.clone());
            shown.push(swap);
        }
        Flavor::Dn => {
            let extra = [satisfies_dnl(alg2), check_componentwise_negation(&t)];
            asserted.push(integral);
            asserted.extend(extra.iter().cloned());
            shown.extend(extra);
        }
    }
    let summary = shown
        .iter()
        .map(|c| match c.message() {
            None => format!("{}: pass", c.name),
            Some(m) => format!("{}: fail ({m})", c.name),
        })
        .collect::<Vec<_>>()
        .join("; ");
    let report = CheckReport::all(format!("{flavor} twist-product of {}", alg.name), asserted);
    if let Some(path) = out {
        let doc = to_document(&format!("{}-{flavor}", alg.name), l, Some(alg2), None);
        write(path, &serialize(&doc))?;
    }
    Ok(Outcome::Verdict(format!("{summary}\n{report}"), report.passed()))
}

/// One line per violation for `--all-witnesses`.
fn violations(alg: &LoadedAlgebra, a: usize, what: PaWhat) -> Result<String, Error> {
    let p = build_pa(&alg.lattice, a);
    let lines: Vec<String> = match what {
        PaWhat::Sublattice => p
            .sublattice_violations()
            .iter()
            .map(|(sym, e)| escape_line(&p, &sym.to_string(), e))
            .collect(),
        PaWhat::ClosureBc => {
            let r = structure(alg)?;
            [PairOp::OdotBc, PairOp::ImpBc]
                .into_iter()
                .flat_map(|op| {
                    let p = &p;
                    p.escapes(move |x, y| op.apply(r, None, x, y)).into_iter().map(move |e| escape_line(p, op.symbol(), &e))
                })
                .collect()
        }
        _ => return Err(Error::Validation("--all-witnesses applies to `sublattice` and `closure-bc`".into())),
    };
    let mut out = format!("violations: {}\n", lines.len());
    for l in lines {
        out.push_str(&format!("  {l}\n"));
    }
    Ok(out)
}

fn escape_line(p: &twistlab::kleene::PaSubset, symbol: &str, e: &twistlab::kleene::Escape) -> String {
    format!("{} {symbol} {} = {} ∉ {}", p.label(e.left), p.label(e.right), p.label(e.value), p.name())
}

fn pa(alg: &LoadedAlgebra, a: usize, what: PaWhat) -> Result<CheckReport, Error> {
    let l = &alg.lattice;
    let p = build_pa(l, a);
    Ok(match what {
        PaWhat::Sublattice => is_sublattice(&p),
        PaWhat::Kleene => is_kleene(&p.lattice()?, &p.swap_involution()),
        PaWhat::Th1 => th1_check(l, a),
        PaWhat::Th3 => th3_check(l, a).report(),
        PaWhat::Th4 => th4_check(structure(alg)?, a)?,
        PaWhat::Lem1 => lem1_condition(structure(alg)?, a)?.report(),
        PaWhat::Cor2 => cor2_condition(structure(alg)?, a)?.report(),
        PaWhat::Implem => imp_lemma_condition(structure(alg)?, a)?.report(),
        PaWhat::ClosureBc => {
            let r = structure(alg)?;
            CheckReport::all(
                "bc closure",
                vec![closure_under(&p, r, None, PairOp::OdotBc), closure_under(&p, r, None, PairOp::ImpBc)],
            )
        }
        PaWhat::ClosureDn => {
            let r = structure(alg)?;
            dn_closure_check(r, &involution(alg, r)?, a).report()
        }
        PaWhat::Triviality => {
            let r = structure(alg)?;
            dn_imp_triviality_check(r, &involution(alg, r)?, a)?
        }
    })
}
