//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails or overruns its time budget.

mod support;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use support::{corpus, elem, oracle_lattice_count, oracle_residuation_count, pair};
use twistlab::kleene::{
    build_pa, closure_under, cor2_condition, dn_imp_triviality_check, imp_lemma_condition, is_sublattice,
    lem1_condition, th3_condition, th4_conditions, PairOp,
};
use twistlab::residuated::{check_mv, check_prop1, check_residuated, mv_to_residuated, residuated_to_mv, satisfies_dnl};
use twistlab::search::{enumerate_involutions, enumerate_lattices, enumerate_residuations};
use twistlab::twist::{
    build_twist, check_componentwise_negation, check_orthogonal_dnl, check_swap_interdefinability, pair_index,
    twist_lattice,
};
use twistlab::{FiniteLattice, Flavor, Involution, ResiduatedStructure};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const CHAIN4_PA_NODES: [&str; 11] = [
    "(0,1)", "(0,b)", "(a,1)", "(0,a)", "(a,b)", "(a,a)", "(b,a)", "(a,0)", "(1,a)", "(b,0)", "(1,0)",
];

// Drawn segments through (a,a) split into two covers each.
const CHAIN4_PA_COVERS: [(&str, &str); 14] = [
    ("(0,1)", "(0,b)"),
    ("(0,1)", "(a,1)"),
    ("(0,b)", "(0,a)"),
    ("(0,b)", "(a,b)"),
    ("(a,1)", "(a,b)"),
    ("(0,a)", "(a,a)"),
    ("(a,a)", "(a,0)"),
    ("(a,b)", "(a,a)"),
    ("(a,a)", "(b,a)"),
    ("(b,a)", "(1,a)"),
    ("(b,a)", "(b,0)"),
    ("(a,0)", "(b,0)"),
    ("(1,a)", "(1,0)"),
    ("(b,0)", "(1,0)"),
];

const L6_PA_NODES: [&str; 21] = [
    "(0,1)", "(0,d)", "(a,1)", "(0,c)", "(b,d)", "(a,d)", "(0,a)", "(a,c)", "(c,d)", "(b,a)", "(a,a)", "(a,b)",
    "(d,c)", "(c,a)", "(a,0)", "(d,a)", "(d,b)", "(c,0)", "(1,a)", "(d,0)", "(1,0)",
];

const L6_PA_COVERS: [(&str, &str); 38] = [
    ("(0,1)", "(0,d)"),
    ("(0,d)", "(b,d)"),
    ("(0,1)", "(a,1)"),
    ("(0,1)", "(0,c)"),
    ("(0,d)", "(a,d)"),
    ("(0,d)", "(0,a)"),
    ("(a,1)", "(a,d)"),
    ("(a,d)", "(c,d)"),
    ("(a,1)", "(a,c)"),
    ("(a,c)", "(d,c)"),
    ("(0,c)", "(0,a)"),
    ("(0,a)", "(b,a)"),
    ("(0,c)", "(a,c)"),
    ("(a,c)", "(a,b)"),
    ("(b,d)", "(c,d)"),
    ("(b,d)", "(b,a)"),
    ("(a,d)", "(a,a)"),
    ("(a,a)", "(d,a)"),
    ("(0,a)", "(a,a)"),
    ("(a,a)", "(a,0)"),
    ("(a,c)", "(a,a)"),
    ("(a,a)", "(c,a)"),
    ("(c,d)", "(c,a)"),
    ("(c,a)", "(1,a)"),
    ("(b,a)", "(c,a)"),
    ("(c,a)", "(c,0)"),
    ("(a,b)", "(a,0)"),
    ("(a,0)", "(c,0)"),
    ("(a,b)", "(d,b)"),
    ("(d,c)", "(d,a)"),
    ("(d,a)", "(1,a)"),
    ("(d,c)", "(d,b)"),
    ("(a,0)", "(d,0)"),
    ("(d,a)", "(d,0)"),
    ("(d,b)", "(d,0)"),
    ("(d,0)", "(1,0)"),
    ("(c,0)", "(1,0)"),
    ("(1,a)", "(1,0)"),
];

fn label_set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn cover_labels(l: &FiniteLattice) -> BTreeSet<(String, String)> {
    l.hasse_covers().into_iter().map(|(x, y)| (l.label(x).to_string(), l.label(y).to_string())).collect()
}

type Shape = (BTreeSet<String>, BTreeSet<(String, String)>);

/// P_a(L) members as labels and the cover set of P_a as a lattice.
fn pa_shape(l: &FiniteLattice, a: &str) -> Result<Shape, String> {
    let p = build_pa(l, elem(l, a));
    let members = p.members().iter().map(|&q| p.label(q)).collect();
    let pl = p.lattice().map_err(|e| e.to_string())?;
    Ok((members, cover_labels(&pl)))
}

fn criterion_1() -> Outcome {
    let chain = corpus("chain4.alg").lattice;
    let (members, covers) = pa_shape(&chain, "a")?;
    ensure!(members == label_set(&CHAIN4_PA_NODES), "members {members:?}");
    let want: BTreeSet<(String, String)> = CHAIN4_PA_COVERS.iter().map(|(x, y)| (x.to_string(), y.to_string())).collect();
    ensure!(covers == want, "covers differ: computed {covers:?}");
    Ok(format!("{} members, {} covers", members.len(), covers.len()))
}

fn criterion_2() -> Outcome {
    let l6 = corpus("l6.alg");
    let (members, covers) = pa_shape(&l6.lattice, "a")?;
    ensure!(members == label_set(&L6_PA_NODES), "members {members:?}");
    let want: BTreeSet<(String, String)> = L6_PA_COVERS.iter().map(|(x, y)| (x.to_string(), y.to_string())).collect();
    ensure!(covers == want, "covers differ: computed {covers:?}");
    let r = l6.structure.unwrap();
    let m = residuated_to_mv(&r);
    let mv = check_mv(&m);
    ensure!(mv.passed(), "MV axioms: {mv}");
    let back = mv_to_residuated(&m).map_err(|e| e.to_string())?;
    ensure!(back.mul_table() == r.mul_table() && back.imp_table() == r.imp_table(), "round trip changed the tables");
    ensure!(back.lattice().relation() == r.lattice().relation(), "round trip changed the order");
    Ok(format!("{} members, {} covers, MV round trip exact", members.len(), covers.len()))
}

fn criterion_3() -> Outcome {
    let n5 = corpus("n5.alg").lattice;
    let p = build_pa(&n5, elem(&n5, "a"));
    let violations = p.sublattice_violations();
    let target = (pair(&n5, "a", "1"), pair(&n5, "c", "b"), pair(&n5, "1", "b"));
    ensure!(
        violations.iter().any(|(s, e)| *s == '⊔' && (e.left, e.right, e.value) == target),
        "(a,1) ⊔ (c,b) = (1,b) not among {} violations",
        violations.len()
    );
    let first = is_sublattice(&p);
    ensure!(first == is_sublattice(&build_pa(&n5, elem(&n5, "a"))), "first witness not stable");
    let w = first.witness().ok_or("sublattice check passed")?.to_vec();
    let n = n5.size();
    let (l, r, v) = (w[0], w[1], w[2]);
    ensure!(
        (l, r, v) == (pair_index(n, violations[0].1.left), pair_index(n, violations[0].1.right), pair_index(n, violations[0].1.value)),
        "reported witness is not the least violation"
    );

    let l6 = corpus("l6.alg");
    let s = l6.structure.as_ref().unwrap();
    let lat = &l6.lattice;
    let pd = build_pa(lat, elem(lat, "d"));
    let (cd, db) = (pair(lat, "c", "d"), pair(lat, "d", "b"));
    // (x,y)⊙(z,v) = (x·z, (x→v)∧(z→y)) evaluated from the file's tables
    let by_hand = (s.mul(cd.0, db.0), lat.meet(s.imp(cd.0, db.1), s.imp(db.0, cd.1)));
    ensure!(by_hand == pair(lat, "a", "c"), "hand evaluation gives {}", pd.label(by_hand));
    let escapes = pd.escapes(|x, y| PairOp::OdotBc.apply(s, None, x, y));
    ensure!(
        escapes.iter().any(|e| (e.left, e.right, e.value) == (cd, db, by_hand)),
        "(c,d) ⊙ (d,b) = (a,c) not among {} escapes",
        escapes.len()
    );
    let closure = closure_under(&pd, s, None, PairOp::OdotBc);
    ensure!(closure == closure_under(&pd, s, None, PairOp::OdotBc), "first witness not stable");
    Ok(format!(
        "N5: {} violations, first {}; P_d: {} escapes, first {}",
        violations.len(),
        first.message().unwrap(),
        escapes.len(),
        closure.message().unwrap()
    ))
}

fn twist_summary(r: &ResiduatedStructure, flavor: Flavor) -> Result<twistlab::TwistAlgebra, String> {
    let t = build_twist(r, flavor, None).map_err(|e| e.to_string())?;
    let rep = check_residuated(t.algebra());
    ensure!(rep.passed(), "{flavor}: {rep}");
    Ok(t)
}

fn criterion_4() -> Outcome {
    for name in ["chain4.alg", "l6.alg"] {
        let r = corpus(name).structure.unwrap();
        let t = twist_summary(&r, Flavor::Bc)?;
        let l = r.lattice();
        ensure!(t.algebra().unit() == t.index((l.top(), l.top())), "{name}: unit is not (1,1)");
    }
    let r = corpus("l6.alg").structure.unwrap();
    let t = twist_summary(&r, Flavor::Dn)?;
    let l = r.lattice();
    ensure!(t.algebra().is_integral(), "dn product is not integral");
    let dnl = satisfies_dnl(t.algebra());
    ensure!(dnl.passed(), "dn product: {dnl}");
    ensure!(t.zero() == (l.bottom(), l.top()), "zero is {}", t.label(t.zero()));
    ensure!(t.index(t.zero()) == t.lattice().bottom(), "zero is not the bottom");
    Ok("bc on chain4 and l6, dn on l6".into())
}

fn criterion_5() -> Outcome {
    let mut instances = 0;
    let mut counts = Vec::new();
    for n in 1..=6 {
        let lattices = enumerate_lattices(n).map_err(|e| e.to_string())?;
        let oracle = oracle_lattice_count(n);
        ensure!(lattices.len() == oracle, "size {n}: {} lattices, oracle {oracle}", lattices.len());
        counts.push(oracle);
        for l in &lattices {
            for a in l.elements() {
                instances += 1;
                let (c, s) = (th3_condition(l, a), is_sublattice(&build_pa(l, a)));
                ensure!(c.passed() == s.passed(), "disagreement at {}:\n{c}{s}", l.label(a));
            }
        }
    }
    Ok(format!("class counts {counts:?}, {instances} instances, 0 disagreements"))
}

fn criterion_6() -> Outcome {
    let (mut structures, mut instances) = (0, 0);
    for n in 1..=5 {
        for l in enumerate_lattices(n).map_err(|e| e.to_string())? {
            let rs = enumerate_residuations(&l);
            let oracle = oracle_residuation_count(&l);
            ensure!(rs.len() == oracle, "{} structures on a size-{n} lattice, oracle {oracle}", rs.len());
            structures += rs.len();
            for r in &rs {
                for a in l.elements() {
                    let t = th4_conditions(r, a).map_err(|e| e.to_string())?;
                    if !t.hypotheses_hold() {
                        continue;
                    }
                    instances += 1;
                    let p = build_pa(&l, a);
                    let odot = closure_under(&p, r, None, PairOp::OdotBc).passed();
                    let imp = closure_under(&p, r, None, PairOp::ImpBc).passed();
                    ensure!(odot == t.conditions_hold(), "⊙-closure {odot} vs conditions at {}", l.label(a));
                    ensure!(odot == imp, "⊙-closure {odot} vs ⇒-closure {imp} at {}", l.label(a));
                }
            }
        }
    }
    ensure!(instances > 0, "no instance satisfied the hypotheses");
    Ok(format!("{structures} structures, {instances} instances, 0 disagreements"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for name in ["chain4.alg", "l6.alg"] {
        let alg = corpus(name);
        let r = alg.structure.as_ref().unwrap();
        for a in alg.lattice.elements().filter(|&a| alg.lattice.is_atom(a)) {
            let reports = [
                lem1_condition(r, a).map_err(|e| e.to_string())?,
                cor2_condition(r, a).map_err(|e| e.to_string())?,
                imp_lemma_condition(r, a).map_err(|e| e.to_string())?,
            ];
            for rep in &reports {
                ensure!(rep.agree(), "{name}, {}: {}", alg.lattice.label(a), rep.report());
                checked += 1;
            }
        }
    }
    let l6 = corpus("l6.alg");
    let cor2 = cor2_condition(l6.structure.as_ref().unwrap(), elem(&l6.lattice, "a")).map_err(|e| e.to_string())?;
    ensure!(cor2.condition.passed() && cor2.closure.passed(), "l6, a: {}", cor2.report());
    Ok(format!("{checked} condition/closure pairs agree; l6 at a satisfies the atom condition"))
}

fn triviality_instance(r: &ResiduatedStructure, inv: &Involution) -> Result<(), String> {
    let l = r.lattice();
    for a in l.elements() {
        let p = build_pa(l, a);
        let closed = closure_under(&p, r, Some(inv), PairOp::ImpDn).passed();
        ensure!(closed == (l.size() == 1), "size {}, focal {}: closure {closed}", l.size(), l.label(a));
        let rep = dn_imp_triviality_check(r, inv, a).map_err(|e| e.to_string())?;
        ensure!(rep.passed(), "{rep}");
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut algebras = 0;
    for name in ["chain4.alg", "l6.alg", "diamond.alg", "trivial.alg"] {
        let alg = corpus(name);
        let r = alg.structure.as_ref().unwrap();
        for inv in enumerate_involutions(&alg.lattice) {
            triviality_instance(r, &inv).map_err(|e| format!("{name}: {e}"))?;
            algebras += 1;
        }
    }
    for n in 1..=4 {
        for l in enumerate_lattices(n).map_err(|e| e.to_string())? {
            let invs = enumerate_involutions(&l);
            for r in enumerate_residuations(&l) {
                for inv in &invs {
                    triviality_instance(&r, inv)?;
                    algebras += 1;
                }
            }
        }
    }
    Ok(format!("{algebras} algebra/involution pairs, 0 exceptions"))
}

fn criterion_9() -> Outcome {
    for name in ["chain4.alg", "l6.alg"] {
        let t = twist_summary(&corpus(name).structure.unwrap(), Flavor::Bc)?;
        let rep = check_swap_interdefinability(&t);
        ensure!(rep.passed(), "{name}: {rep}");
    }
    for name in ["l6.alg", "diamond.alg", "trivial.alg"] {
        let t = twist_summary(&corpus(name).structure.unwrap(), Flavor::Dn)?;
        let rep = check_componentwise_negation(&t);
        ensure!(rep.passed(), "{name}: {rep}");
    }
    let t = twist_summary(&corpus("l6.alg").structure.unwrap(), Flavor::Bc)?;
    let rep = check_orthogonal_dnl(&t).map_err(|e| e.to_string())?;
    ensure!(rep.passed(), "orthogonal DNL: {rep}");

    let mut integral = Vec::new();
    for name in ["chain4.alg", "l6.alg", "diamond.alg", "trivial.alg"] {
        integral.push(corpus(name).structure.unwrap());
    }
    for n in 1..=5 {
        for l in enumerate_lattices(n).map_err(|e| e.to_string())? {
            integral.extend(enumerate_residuations(&l));
        }
    }
    let dn: Vec<_> = integral
        .iter()
        .filter(|r| satisfies_dnl(r).passed() && r.size() <= 4)
        .filter_map(|r| build_twist(r, Flavor::Dn, None).ok())
        .map(|t| t.algebra().clone())
        .collect();
    let total = integral.len() + dn.len();
    for r in integral.iter().chain(&dn) {
        let rep = check_prop1(r).map_err(|e| e.to_string())?;
        ensure!(rep.passed(), "{rep}");
    }

    for name in ["chain4.alg", "l6.alg", "n5.alg", "diamond.alg", "trivial.alg"] {
        let l = corpus(name).lattice;
        let d = l.is_distributive().passed();
        ensure!(twist_lattice(&l).is_distributive().passed() == d, "{name}: L² distributivity differs");
        for a in l.elements() {
            if let Ok(pl) = build_pa(&l, a).lattice() {
                ensure!(pl.is_distributive().passed() == d, "{name}: P_{} distributivity differs", l.label(a));
            }
        }
    }
    Ok(format!("identities hold; derived-identity oracle on {total} integral structures"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("P_a(chain4) members and covers", 1, criterion_1),
        ("P_a(l6) members, covers and MV round trip", 1, criterion_2),
        ("N5 and P_d(l6) counterexample witnesses", 1, criterion_3),
        ("bc and dn twist-products are residuated", 10, criterion_4),
        ("sublattice criterion sweep up to size 6", 120, criterion_5),
        ("⊙-closure criterion sweep up to size 5", 300, criterion_6),
        ("atom criteria agree on chain4 and l6", 10, criterion_7),
        ("dn ⇒-closure only on the trivial algebra", 60, criterion_8),
        ("twist and transfer identities", 60, criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*limit);
        let (verdict, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("pass", d),
            Ok(d) => ("fail", format!("over the {limit:?} budget; {d}")),
            Err(e) => ("fail", e),
        };
        if verdict == "fail" {
            failed += 1;
        }
        println!("criterion {}: {verdict} [{:.3}s, limit {}s] {title}: {detail}", i + 1, elapsed.as_secs_f64(), limit.as_secs());
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
