//! Exhaustive small-model enumeration: lattices up to isomorphism, integral
//! residuations and antitone involutions on them, and sweeps that check a
//! theorem on every instance or hunt for a counterexample once hypotheses
//! are dropped.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::kleene::{
    build_pa, closure_under, dn_closure_check, dn_imp_triviality_check, evaluate_cor2, evaluate_imp_lemma,
    evaluate_lem1, is_pseudo_kleene, is_sublattice, th1_check, th3_condition, th4_conditions, PairOp,
};
use crate::order::{Carrier, Elem, FiniteLattice, Involution, Table};
use crate::residuated::{check_residuated, satisfies_dnl, ResiduatedStructure};
use crate::twist::{build_twist, Flavor};

pub const MAX_SIZE: usize = 7;

/// Canonical code of a lattice: the upper-triangle order bits over the
/// non-extremal elements, minimised over all relabelings that list every
/// element after everything below it.
pub type Code = u64;

fn middle_labels(m: usize) -> impl Iterator<Item = String> {
    (0..m).map(|i| ((b'a' + i as u8) as char).to_string())
}

fn labels_for(n: usize) -> Vec<String> {
    match n {
        1 => vec!["0".into()],
        _ => std::iter::once("0".to_string())
            .chain(middle_labels(n - 2))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    }
}

/// Code of the relation `leq` on middle positions `0..m`, or `None` if the
/// labelling is not natural.
fn natural_code(m: usize, leq: impl Fn(usize, usize) -> bool) -> Option<Code> {
    let mut code = 0;
    for p in 0..m {
        for q in 0..m {
            if p > q && leq(p, q) {
                return None;
            }
            if p < q {
                code = (code << 1) | leq(p, q) as Code;
            }
        }
    }
    Some(code)
}

/// Canonical code of any lattice, invariant under relabeling.
pub fn canonical_form(lat: &FiniteLattice) -> Code {
    let middle: Vec<Elem> = lat.elements().filter(|&e| e != lat.bottom() && e != lat.top()).collect();
    let m = middle.len();
    middle
        .iter()
        .copied()
        .permutations(m)
        .filter_map(|perm| natural_code(m, |p, q| lat.leq(perm[p], perm[q])))
        .min()
        .expect("every finite poset has a natural labelling")
}

fn decode(n: usize, code: Code) -> FiniteLattice {
    let mut leq = vec![false; n * n];
    for x in 0..n {
        leq[x * n + x] = true;
        leq[x] = true;
        leq[x * n + n - 1] = true;
    }
    let m = n.saturating_sub(2);
    let mut bit = (m * m.saturating_sub(1) / 2) as u32;
    for p in 0..m {
        for q in p + 1..m {
            bit -= 1;
            if (code >> bit) & 1 == 1 {
                leq[(p + 1) * n + q + 1] = true;
            }
        }
    }
    FiniteLattice::from_relation(Carrier::new(labels_for(n)).unwrap(), leq).expect("decoded code is a lattice")
}

/// One lattice per isomorphism class of `n`-element lattices, sorted by
/// canonical code. Element `0` is the bottom and `n-1` the top.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>> {
    if !(1..=MAX_SIZE).contains(&n) {
        return Err(Error::SizeOutOfRange(n));
    }
    if n <= 2 {
        return Ok(vec![decode(n, 0)]);
    }
    let m = n - 2;
    // below[k] = strict down-set of middle element k, as a bitmask
    let mut codes = BTreeSet::new();
    let mut below = vec![0u32; m];
    extend_posets(m, 0, &mut below, &mut |below| {
        let leq = |p: usize, q: usize| p == q || below[q] >> p & 1 == 1;
        if is_lattice_with_bounds(m, &leq) {
            let code = (0..m)
                .permutations(m)
                .filter_map(|perm| {
                    let mut inv = vec![0; m];
                    for (pos, &e) in perm.iter().enumerate() {
                        inv[pos] = e;
                    }
                    natural_code(m, |p, q| leq(inv[p], inv[q]))
                })
                .min()
                .unwrap();
            codes.insert(code);
        }
    });
    Ok(codes.into_iter().map(|c| decode(n, c)).collect())
}

/// Adds middle element `k` with every down-closed set of earlier elements.
fn extend_posets(m: usize, k: usize, below: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if k == m {
        visit(below);
        return;
    }
    for set in 0u32..(1 << k) {
        let closed = (0..k).filter(|&j| set >> j & 1 == 1).all(|j| below[j] & !set == 0);
        if closed {
            below[k] = set;
            extend_posets(m, k + 1, below, visit);
        }
    }
    below[k] = 0;
}

/// Whether the middle poset plus a fresh bottom and top is a lattice, i.e.
/// every pair of middle elements has a least upper bound (meets then exist
/// in a finite bounded poset).
fn is_lattice_with_bounds(m: usize, leq: &impl Fn(usize, usize) -> bool) -> bool {
    for x in 0..m {
        for y in x + 1..m {
            let upper: Vec<usize> = (0..m).filter(|&u| leq(x, u) && leq(y, u)).collect();
            let least = upper.iter().filter(|&&u| upper.iter().all(|&v| leq(u, v))).count();
            if !upper.is_empty() && least == 0 {
                return false;
            }
        }
    }
    true
}

/// Every commutative, associative, monotone multiplication with unit = top
/// that has a residuum. Each output re-passes `check_residuated`.
pub fn enumerate_residuations(lat: &FiniteLattice) -> Vec<ResiduatedStructure> {
    let n = lat.size();
    let (bot, top) = (lat.bottom(), lat.top());
    let mut t: Vec<Option<Elem>> = vec![None; n * n];
    for x in lat.elements() {
        t[top * n + x] = Some(x);
        t[x * n + top] = Some(x);
        if x != top || n == 1 {
            t[bot * n + x] = Some(bot);
            t[x * n + bot] = Some(bot);
        }
    }
    let free: Vec<(Elem, Elem)> = lat
        .elements()
        .filter(|&e| e != bot && e != top)
        .tuple_combinations()
        .chain(lat.elements().filter(|&e| e != bot && e != top).map(|e| (e, e)))
        .sorted()
        .collect();
    let mut out = Vec::new();
    assign_entries(lat, &free, 0, &mut t, &mut |t| {
        let mul = Table::from_rows(n, t.iter().map(|v| v.unwrap()).collect());
        if let Ok(r) = ResiduatedStructure::from_mul(lat.clone(), mul, top) {
            if check_residuated(&r).passed() {
                out.push(r);
            }
        }
    });
    out
}

fn assign_entries(
    lat: &FiniteLattice,
    free: &[(Elem, Elem)],
    k: usize,
    t: &mut Vec<Option<Elem>>,
    visit: &mut impl FnMut(&[Option<Elem>]),
) {
    let n = lat.size();
    let Some(&(i, j)) = free.get(k) else {
        visit(t);
        return;
    };
    let bound = lat.meet(i, j);
    for v in lat.elements().filter(|&v| lat.leq(v, bound)) {
        t[i * n + j] = None;
        t[j * n + i] = None;
        let monotone = lat.elements().all(|a| {
            lat.elements().all(|b| match t[a * n + b] {
                None => true,
                Some(w) => {
                    (!(lat.leq(i, a) && lat.leq(j, b)) || lat.leq(v, w))
                        && (!(lat.leq(a, i) && lat.leq(b, j)) || lat.leq(w, v))
                }
            })
        });
        if monotone {
            t[i * n + j] = Some(v);
            t[j * n + i] = Some(v);
            assign_entries(lat, free, k + 1, t, visit);
        }
    }
    t[i * n + j] = None;
    t[j * n + i] = None;
}

/// Every antitone involution on `lat`, in lexicographic order of maps.
pub fn enumerate_involutions(lat: &FiniteLattice) -> Vec<Involution> {
    let n = lat.size();
    let mut map = vec![usize::MAX; n];
    let mut out = Vec::new();
    pair_up(lat, &mut map, &mut out);
    out.sort_by(|a, b| a.map().cmp(b.map()));
    out
}

fn pair_up(lat: &FiniteLattice, map: &mut Vec<Elem>, out: &mut Vec<Involution>) {
    let Some(x) = map.iter().position(|&v| v == usize::MAX) else {
        out.push(Involution::unchecked(map.clone()));
        return;
    };
    for y in x..map.len() {
        if map[y] != usize::MAX {
            continue;
        }
        map[x] = y;
        map[y] = x;
        let antitone = lat.elements().all(|a| {
            lat.elements().all(|b| {
                map[a] == usize::MAX || map[b] == usize::MAX || !lat.leq(a, b) || lat.leq(map[b], map[a])
            })
        });
        if antitone {
            pair_up(lat, map, out);
        }
        map[x] = usize::MAX;
        map[y] = usize::MAX;
    }
}

/// A droppable hypothesis of a sweep target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hypothesis {
    Idempotent,
    JoinIrreducible,
    MeetIrreducible,
    ComparableWithAll,
    DualIdempotent,
    Distributive,
    Atom,
    Sublattice,
    Dnl,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 9] = [
        Hypothesis::Idempotent,
        Hypothesis::JoinIrreducible,
        Hypothesis::MeetIrreducible,
        Hypothesis::ComparableWithAll,
        Hypothesis::DualIdempotent,
        Hypothesis::Distributive,
        Hypothesis::Atom,
        Hypothesis::Sublattice,
        Hypothesis::Dnl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Idempotent => "idempotent",
            Hypothesis::JoinIrreducible => "join_irreducible",
            Hypothesis::MeetIrreducible => "meet_irreducible",
            Hypothesis::ComparableWithAll => "comparable_with_all",
            Hypothesis::DualIdempotent => "dual_idempotent",
            Hypothesis::Distributive => "distributive",
            Hypothesis::Atom => "atom",
            Hypothesis::Sublattice => "sublattice",
            Hypothesis::Dnl => "dnl",
        }
    }

    fn holds(self, inst: &Instance) -> bool {
        let l = inst.lattice;
        let a = inst.focal.unwrap_or(l.top());
        match self {
            Hypothesis::Idempotent => inst.structure.is_some_and(|r| r.mul(a, a) == a),
            Hypothesis::JoinIrreducible => l.is_join_irreducible(a),
            Hypothesis::MeetIrreducible => l.is_meet_irreducible(a),
            Hypothesis::ComparableWithAll => l.comparable_with_all(a),
            Hypothesis::DualIdempotent => match (inst.structure, inst.involution) {
                (Some(r), Some(i)) => r.mul(i.apply(a), i.apply(a)) == i.apply(a),
                _ => false,
            },
            Hypothesis::Distributive => l.is_distributive().passed(),
            Hypothesis::Atom => l.is_atom(a),
            Hypothesis::Sublattice => is_sublattice(&build_pa(l, a)).passed(),
            Hypothesis::Dnl => inst.structure.is_some_and(|r| satisfies_dnl(r).passed()),
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Hypothesis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Hypothesis::ALL
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| format!("unknown hypothesis `{s}`"))
    }
}

/// Sweep targets, one per theorem-shaped statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Comparability/irreducibility characterisation of `P_a`.
    Th1,
    /// Sublattice `P_a` with swap is pseudo-Kleene; distributivity transfers.
    Th2,
    /// Quadruple condition ⟺ sublattice.
    Th3,
    /// Conditions (3) and (4) ⟺ `⊙`-closure, and `⊙`- ⟺ `⇒`-closure.
    Th4,
    /// The `bc` twist-product is commutative residuated.
    Th5,
    /// The `dn` twist-product is integral residuated with DNL.
    Th6,
    Lem1,
    Cor2,
    ImpLemma,
    DnClosure,
    Triviality,
}

impl Target {
    pub const ALL: [Target; 11] = [
        Target::Th1,
        Target::Th2,
        Target::Th3,
        Target::Th4,
        Target::Th5,
        Target::Th6,
        Target::Lem1,
        Target::Cor2,
        Target::ImpLemma,
        Target::DnClosure,
        Target::Triviality,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Target::Th1 => "th1",
            Target::Th2 => "th2",
            Target::Th3 => "th3",
            Target::Th4 => "th4",
            Target::Th5 => "th5",
            Target::Th6 => "th6",
            Target::Lem1 => "lem1",
            Target::Cor2 => "cor2",
            Target::ImpLemma => "implem",
            Target::DnClosure => "dnclosure",
            Target::Triviality => "triviality",
        }
    }

    /// The hypotheses an instance must satisfy to count.
    pub fn hypotheses(self) -> &'static [Hypothesis] {
        use Hypothesis::*;
        match self {
            Target::Th1 | Target::Th3 | Target::Th5 | Target::Triviality => &[],
            Target::Th2 => &[Sublattice],
            Target::Th4 => &[Idempotent, JoinIrreducible, MeetIrreducible, ComparableWithAll],
            Target::Th6 => &[Dnl],
            Target::Lem1 => &[Distributive],
            Target::Cor2 | Target::ImpLemma => &[Distributive, Atom],
            Target::DnClosure => &[Idempotent, JoinIrreducible, MeetIrreducible, DualIdempotent, ComparableWithAll],
        }
    }

    fn universe(self) -> Universe {
        match self {
            Target::Th1 | Target::Th2 | Target::Th3 => Universe::LatticeFocal,
            Target::Th5 | Target::Th6 => Universe::Structure,
            Target::Th4 | Target::Lem1 | Target::Cor2 | Target::ImpLemma => Universe::StructureFocal,
            Target::DnClosure | Target::Triviality => Universe::InvolutionFocal,
        }
    }

    /// `None` if the conclusion holds on the instance, else a description.
    fn violation(self, inst: &Instance) -> Option<String> {
        let l = inst.lattice;
        let a = inst.focal.unwrap_or(l.top());
        let fails = |r: crate::report::CheckReport| (!r.passed()).then(|| r.to_string());
        match self {
            Target::Th1 => {
                let r = th1_check(l, a);
                let ok = r.child("equivalence").is_some_and(|c| c.passed())
                    && r.child("implies sublattice").is_some_and(|c| c.passed());
                (!ok).then(|| r.to_string())
            }
            Target::Th2 => {
                let p = build_pa(l, a);
                let pl = match p.lattice() {
                    Ok(pl) => pl,
                    Err(e) => return Some(e.to_string()),
                };
                let pk = is_pseudo_kleene(&pl, &p.swap_involution());
                if !pk.passed() {
                    return Some(pk.to_string());
                }
                let (dl, dp) = (l.is_distributive().passed(), pl.is_distributive().passed());
                (dl != dp).then(|| format!("L distributive = {dl}, P_a distributive = {dp}"))
            }
            Target::Th3 => {
                let (c, s) = (th3_condition(l, a), is_sublattice(&build_pa(l, a)));
                (c.passed() != s.passed()).then(|| format!("{c}{s}"))
            }
            Target::Th4 => {
                let r = inst.structure?;
                let t = th4_conditions(r, a).ok()?;
                let p = build_pa(l, a);
                let odot = closure_under(&p, r, None, PairOp::OdotBc);
                let imp = closure_under(&p, r, None, PairOp::ImpBc);
                let ok = odot.passed() == t.conditions_hold() && odot.passed() == imp.passed();
                (!ok).then(|| format!("{}{odot}{imp}", t.report()))
            }
            Target::Th5 => {
                let r = inst.structure?;
                match build_twist(r, Flavor::Bc, None) {
                    Err(e) => Some(e.to_string()),
                    Ok(t) => fails(check_residuated(t.algebra())),
                }
            }
            Target::Th6 => {
                let r = inst.structure?;
                match build_twist(r, Flavor::Dn, None) {
                    Err(e) => Some(e.to_string()),
                    Ok(t) => {
                        let alg = t.algebra();
                        let mut rep = crate::report::CheckReport::all(
                            "dn twist-product",
                            vec![
                                check_residuated(alg),
                                crate::report::CheckReport::flag("integral", alg.is_integral(), vec![], "unit ≠ top"),
                                satisfies_dnl(alg),
                            ],
                        );
                        rep.name = "dn twist-product".into();
                        fails(rep)
                    }
                }
            }
            Target::Lem1 | Target::Cor2 | Target::ImpLemma => {
                let r = inst.structure?;
                let rep = match self {
                    Target::Lem1 => evaluate_lem1(r, a),
                    Target::Cor2 => evaluate_cor2(r, a),
                    _ => evaluate_imp_lemma(r, a),
                };
                (!rep.agree()).then(|| rep.report().to_string())
            }
            Target::DnClosure => {
                let d = dn_closure_check(inst.structure?, inst.involution?, a);
                fails(d.closure)
            }
            Target::Triviality => match dn_imp_triviality_check(inst.structure?, inst.involution?, a) {
                Err(e) => Some(e.to_string()),
                Ok(r) => fails(r),
            },
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTarget(s.to_string()))
    }
}

#[derive(Clone, Copy)]
enum Universe {
    LatticeFocal,
    Structure,
    StructureFocal,
    InvolutionFocal,
}

struct Instance<'a> {
    lattice: &'a FiniteLattice,
    structure: Option<&'a ResiduatedStructure>,
    involution: Option<&'a Involution>,
    focal: Option<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Verify,
    FalsifyWithout(Vec<Hypothesis>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationTask {
    pub max_size: usize,
    pub target: Target,
    pub mode: Mode,
}

impl EnumerationTask {
    pub fn new(max_size: usize, target: Target, mode: Mode) -> Result<Self> {
        if !(1..=MAX_SIZE).contains(&max_size) {
            return Err(Error::SizeOutOfRange(max_size));
        }
        if let Mode::FalsifyWithout(flags) = &mode {
            if let Some(h) = flags.iter().find(|h| !target.hypotheses().contains(h)) {
                return Err(Error::UnknownHypothesis {
                    target: target.id().to_string(),
                    flag: h.name().to_string(),
                });
            }
        }
        Ok(EnumerationTask { max_size, target, mode })
    }

    fn active_hypotheses(&self) -> Vec<Hypothesis> {
        let dropped: &[Hypothesis] = match &self.mode {
            Mode::Verify => &[],
            Mode::FalsifyWithout(flags) => flags,
        };
        self.target.hypotheses().iter().copied().filter(|h| !dropped.contains(h)).collect()
    }
}

/// An instance on which the conclusion failed.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub lattice: FiniteLattice,
    pub structure: Option<ResiduatedStructure>,
    pub involution: Option<Involution>,
    pub focal: Option<Elem>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct TaskReport {
    pub task: EnumerationTask,
    pub lattices: usize,
    /// Instances generated, whether or not the hypotheses held.
    pub scanned: usize,
    /// Instances on which every active hypothesis held.
    pub instances: usize,
    pub violations: usize,
    pub first: Option<Counterexample>,
}

impl TaskReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for TaskReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match &self.task.mode {
            Mode::Verify => "verify".to_string(),
            Mode::FalsifyWithout(h) => format!("falsify without {}", h.iter().join(",")),
        };
        writeln!(f, "search {} up to size {} ({mode})", self.task.target, self.task.max_size)?;
        writeln!(
            f,
            "lattices: {}; instances scanned: {}; hypotheses held: {}; violations: {}",
            self.lattices, self.scanned, self.instances, self.violations
        )?;
        match &self.first {
            None if matches!(self.task.mode, Mode::FalsifyWithout(_)) => writeln!(f, "exhausted: no counterexample"),
            None => writeln!(f, "verdict: pass"),
            Some(c) => {
                let l = &c.lattice;
                writeln!(f, "counterexample on {}-element lattice with covers {}", l.size(), covers_text(l))?;
                if let Some(r) = &c.structure {
                    let mul = l.elements().flat_map(|x| l.elements().map(move |y| (x, y)));
                    writeln!(f, "mul: {}", mul.map(|(x, y)| format!("{}·{}={}", l.label(x), l.label(y), l.label(r.mul(x, y)))).join(" "))?;
                }
                if let Some(i) = &c.involution {
                    writeln!(f, "involution: {}", l.elements().map(|x| format!("{}'={}", l.label(x), l.label(i.apply(x)))).join(" "))?;
                }
                if let Some(a) = c.focal {
                    writeln!(f, "focal: {}", l.label(a))?;
                }
                write!(f, "{}", c.detail)
            }
        }
    }
}

fn covers_text(l: &FiniteLattice) -> String {
    l.hasse_covers().iter().map(|&(x, y)| format!("{}<{}", l.label(x), l.label(y))).join(" ")
}

/// Runs the task over all lattices of size `1..=max_size`. Verify mode scans
/// everything; falsify mode stops at the first counterexample in stream
/// order.
pub fn run_task(task: &EnumerationTask) -> Result<TaskReport> {
    let hyps = task.active_hypotheses();
    let stop_early = matches!(task.mode, Mode::FalsifyWithout(_));
    let mut report = TaskReport {
        task: task.clone(),
        lattices: 0,
        scanned: 0,
        instances: 0,
        violations: 0,
        first: None,
    };
    for n in 1..=task.max_size {
        for l in enumerate_lattices(n)? {
            report.lattices += 1;
            let flow = visit_instances(&l, task.target.universe(), &mut |inst| {
                report.scanned += 1;
                if !hyps.iter().all(|h| h.holds(inst)) {
                    return ControlFlow::Continue(());
                }
                report.instances += 1;
                if let Some(detail) = task.target.violation(inst) {
                    report.violations += 1;
                    if report.first.is_none() {
                        report.first = Some(Counterexample {
                            lattice: inst.lattice.clone(),
                            structure: inst.structure.cloned(),
                            involution: inst.involution.cloned(),
                            focal: inst.focal,
                            detail,
                        });
                    }
                    if stop_early {
                        return ControlFlow::Break(());
                    }
                }
                ControlFlow::Continue(())
            });
            if flow.is_break() {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn visit_instances(
    l: &FiniteLattice,
    universe: Universe,
    visit: &mut impl FnMut(&Instance) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let base = Instance {
        lattice: l,
        structure: None,
        involution: None,
        focal: None,
    };
    match universe {
        Universe::LatticeFocal => {
            for a in l.elements() {
                visit(&Instance { focal: Some(a), ..base })?;
            }
        }
        Universe::Structure | Universe::StructureFocal => {
            for r in enumerate_residuations(l) {
                let inst = Instance { structure: Some(&r), ..base };
                if matches!(universe, Universe::Structure) {
                    visit(&inst)?;
                } else {
                    for a in l.elements() {
                        visit(&Instance { focal: Some(a), ..inst })?;
                    }
                }
            }
        }
        Universe::InvolutionFocal => {
            let invs = enumerate_involutions(l);
            for r in enumerate_residuations(l) {
                for i in &invs {
                    for a in l.elements() {
                        visit(&Instance {
                            lattice: l,
                            structure: Some(&r),
                            involution: Some(i),
                            focal: Some(a),
                        })?;
                    }
                }
            }
        }
    }
    ControlFlow::Continue(())
}
