//! The Kleene-candidate subset `P_a(L) = {(x,y) : x∧y ≤ a ≤ x∨y}` of the
//! full twist-product, its structural predicates, and the closure criteria
//! for the pair operations.
//!
//! Every biconditional is evaluated as two independent scans plus an
//! agreement flag; neither side is derived from the other. When a
//! hypothesis fails, the conditional checks still compute both sides and
//! report them.

use crate::error::{Error, Result};
use crate::order::{Carrier, Elem, FiniteLattice, Involution};
use crate::report::CheckReport;
use crate::residuated::ResiduatedStructure;
use crate::twist::{imp_bc, imp_dn, odot_bc, odot_dn, pair_index, pair_join, pair_label, pair_leq, pair_meet, pair_of, swap, Pair};

/// `P_a(L)` with members in canonical pair order and a membership bitmap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaSubset {
    base: FiniteLattice,
    focal: Elem,
    members: Vec<Pair>,
    member: Vec<bool>,
}

pub fn build_pa(base: &FiniteLattice, a: Elem) -> PaSubset {
    let n = base.size();
    let member: Vec<bool> = (0..n * n)
        .map(|i| {
            let (x, y) = pair_of(n, i);
            base.leq(base.meet(x, y), a) && base.leq(a, base.join(x, y))
        })
        .collect();
    let members = (0..n * n).filter(|&i| member[i]).map(|i| pair_of(n, i)).collect();
    PaSubset {
        base: base.clone(),
        focal: a,
        members,
        member,
    }
}

/// One escaping value: `left op right = value ∉ P_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Escape {
    pub left: Pair,
    pub right: Pair,
    pub value: Pair,
}

impl PaSubset {
    pub fn base(&self) -> &FiniteLattice {
        &self.base
    }

    pub fn focal(&self) -> Elem {
        self.focal
    }

    pub fn members(&self) -> &[Pair] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, p: Pair) -> bool {
        self.member[pair_index(self.base.size(), p)]
    }

    pub fn position(&self, p: Pair) -> Option<usize> {
        self.members.binary_search_by_key(&pair_index(self.base.size(), p), |&q| pair_index(self.base.size(), q)).ok()
    }

    pub fn label(&self, p: Pair) -> String {
        pair_label(&self.base, p)
    }

    /// `P_a` written with the focal label, e.g. `P_a`.
    pub fn name(&self) -> String {
        format!("P_{}", self.base.label(self.focal))
    }

    fn index(&self, p: Pair) -> Elem {
        pair_index(self.base.size(), p)
    }

    /// Every member pair `(p, q)` and binary op for which the result escapes,
    /// in lexicographic member order.
    pub fn escapes(&self, op: impl Fn(Pair, Pair) -> Pair) -> Vec<Escape> {
        let mut out = Vec::new();
        for &p in &self.members {
            for &q in &self.members {
                let value = op(p, q);
                if !self.contains(value) {
                    out.push(Escape { left: p, right: q, value });
                }
            }
        }
        out
    }

    /// All `⊔` and `⊓` escapes, `⊔` first for each member pair.
    pub fn sublattice_violations(&self) -> Vec<(char, Escape)> {
        let mut out = Vec::new();
        for &p in &self.members {
            for &q in &self.members {
                let j = pair_join(&self.base, p, q);
                if !self.contains(j) {
                    out.push(('⊔', Escape { left: p, right: q, value: j }));
                }
                let m = pair_meet(&self.base, p, q);
                if !self.contains(m) {
                    out.push(('⊓', Escape { left: p, right: q, value: m }));
                }
            }
        }
        out
    }

    fn escape_message(&self, symbol: &str, e: &Escape) -> String {
        format!(
            "{} {symbol} {} = {} ∉ {}",
            self.label(e.left),
            self.label(e.right),
            self.label(e.value),
            self.name()
        )
    }

    /// `P_a` as a lattice under the restricted `⊔`/`⊓`. Element `i` is the
    /// member `members()[i]`. Requires `P_a` to be a sublattice.
    pub fn lattice(&self) -> Result<FiniteLattice> {
        if let Some(f) = is_sublattice(self).failure {
            return Err(Error::PreconditionViolated(format!(
                "{} is not a sublattice: {}",
                self.name(),
                f.message
            )));
        }
        let k = self.members.len();
        let labels: Vec<String> = self.members.iter().map(|&p| self.label(p)).collect();
        let leq = (0..k * k)
            .map(|i| pair_leq(&self.base, self.members[i / k], self.members[i % k]))
            .collect();
        FiniteLattice::from_relation(Carrier::new(labels)?, leq)
    }

    /// `(x,y) ↦ (y,x)` on the indices of [`lattice`](Self::lattice).
    pub fn swap_involution(&self) -> Involution {
        Involution::unchecked(
            self.members
                .iter()
                .map(|&p| self.position(swap(p)).expect("P_a is closed under swap"))
                .collect(),
        )
    }

    /// Restricts a pair operation to a table over member positions, if the
    /// subset is closed under it.
    pub fn restrict(&self, op: impl Fn(Pair, Pair) -> Pair) -> Option<crate::order::Table> {
        let k = self.members.len();
        let mut data = Vec::with_capacity(k * k);
        for &p in &self.members {
            for &q in &self.members {
                data.push(self.position(op(p, q))?);
            }
        }
        Some(crate::order::Table::from_rows(k, data))
    }
}

/// Closure under `⊔` and `⊓` of the full twist-product.
pub fn is_sublattice(p: &PaSubset) -> CheckReport {
    match p.sublattice_violations().first() {
        None => CheckReport::pass("sublattice"),
        Some((sym, e)) => CheckReport::fail(
            "sublattice",
            sym.to_string(),
            vec![p.index(e.left), p.index(e.right), p.index(e.value)],
            p.escape_message(&sym.to_string(), e),
        ),
    }
}

/// The quadruple condition characterising when `P_a` is a sublattice:
/// `(x∧y)∨(z∧v) ≤ a ≤ (x∨y)∧(z∨v)` implies
/// `((x∨z)∧y∧v)∨(x∧z∧(y∨v)) ≤ a ≤ (x∨z∨(y∧v))∧((x∧z)∨y∨v)`.
pub fn th3_condition(l: &FiniteLattice, a: Elem) -> CheckReport {
    let (m, j) = (|x, y| l.meet(x, y), |x, y| l.join(x, y));
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                for v in l.elements() {
                    let lo = j(m(x, y), m(z, v));
                    let hi = m(j(x, y), j(z, v));
                    if !(l.leq(lo, a) && l.leq(a, hi)) {
                        continue;
                    }
                    let lo2 = j(m(m(j(x, z), y), v), m(m(x, z), j(y, v)));
                    let hi2 = m(j(j(x, z), m(y, v)), j(j(m(x, z), y), v));
                    if !(l.leq(lo2, a) && l.leq(a, hi2)) {
                        return CheckReport::fail(
                            "sublattice condition",
                            "",
                            vec![x, y, z, v],
                            format!(
                                "premise holds for (x,y,z,v) = ({},{},{},{}) but {} ≤ {} ≤ {} fails",
                                l.label(x),
                                l.label(y),
                                l.label(z),
                                l.label(v),
                                l.label(lo2),
                                l.label(a),
                                l.label(hi2)
                            ),
                        );
                    }
                }
            }
        }
    }
    CheckReport::pass("sublattice condition")
}

/// `x ∧ x' ≤ y ∨ y'` for all `x, y`, after checking `'` is an antitone
/// involution.
pub fn is_pseudo_kleene(lat: &FiniteLattice, inv: &Involution) -> CheckReport {
    let inv_report = lat.check_involution(inv.map());
    if let Some(f) = inv_report.failure {
        return CheckReport::fail("pseudo-Kleene", "antitone involution", f.witness, f.message);
    }
    for x in lat.elements() {
        let lo = lat.meet(x, inv.apply(x));
        for y in lat.elements() {
            let hi = lat.join(y, inv.apply(y));
            if !lat.leq(lo, hi) {
                return CheckReport::fail(
                    "pseudo-Kleene",
                    "x∧x' ≤ y∨y'",
                    vec![x, y],
                    format!(
                        "{x}∧{x}' = {} ≰ {} = {y}∨{y}'",
                        lat.label(lo),
                        lat.label(hi),
                        x = lat.label(x),
                        y = lat.label(y)
                    ),
                );
            }
        }
    }
    CheckReport::pass("pseudo-Kleene")
}

/// Pseudo-Kleene and distributive.
pub fn is_kleene(lat: &FiniteLattice, inv: &Involution) -> CheckReport {
    CheckReport::all("Kleene", vec![is_pseudo_kleene(lat, inv), lat.is_distributive()])
}

/// `x ↦ (x,a)` lands in `P_a`, is injective, and preserves and reflects
/// order, joins and meets.
pub fn check_embedding(l: &FiniteLattice, a: Elem) -> Result<CheckReport> {
    let p = build_pa(l, a);
    if let Some(f) = is_sublattice(&p).failure {
        return Err(Error::PreconditionViolated(format!(
            "{} is not a sublattice: {}",
            p.name(),
            f.message
        )));
    }
    let emb = |x: Elem| (x, a);
    let mut children = Vec::new();
    let outside = l.elements().find(|&x| !p.contains(emb(x)));
    children.push(CheckReport::flag(
        "lands in P_a",
        outside.is_none(),
        outside.into_iter().collect(),
        outside.map(|x| format!("{} ∉ {}", p.label(emb(x)), p.name())).unwrap_or_default(),
    ));
    let mut clash = None;
    let mut order = None;
    let mut ops = None;
    for x in l.elements() {
        for y in l.elements() {
            if x != y && emb(x) == emb(y) && clash.is_none() {
                clash = Some((x, y));
            }
            if l.leq(x, y) != pair_leq(l, emb(x), emb(y)) && order.is_none() {
                order = Some((x, y));
            }
            let ok = pair_join(l, emb(x), emb(y)) == emb(l.join(x, y))
                && pair_meet(l, emb(x), emb(y)) == emb(l.meet(x, y));
            if !ok && ops.is_none() {
                ops = Some((x, y));
            }
        }
    }
    let lbl = |o: Option<(Elem, Elem)>, what: &str| {
        o.map(|(x, y)| format!("{what} at ({}, {})", l.label(x), l.label(y))).unwrap_or_default()
    };
    let wit = |o: Option<(Elem, Elem)>| o.map(|(x, y)| vec![x, y]).unwrap_or_default();
    children.push(CheckReport::flag("injective", clash.is_none(), wit(clash), lbl(clash, "collision")));
    children.push(CheckReport::flag("order embedding", order.is_none(), wit(order), lbl(order, "order mismatch")));
    children.push(CheckReport::flag("lattice homomorphism", ops.is_none(), wit(ops), lbl(ops, "∨/∧ not preserved")));
    Ok(CheckReport::all("embedding x ↦ (x,a)", children))
}

/// Compares "every element is comparable with `a` and `a` is join- and
/// meet-irreducible" against "`P_a` is exactly the set of pairs comparable
/// with `(a,a)`". Passes iff both hold; the `equivalence` child records
/// whether they agree regardless of verdict.
pub fn th1_check(l: &FiniteLattice, a: Elem) -> CheckReport {
    let p = build_pa(l, a);
    let n = l.size();
    let comparable = l.comparable_with_all(a);
    let join_irr = l.is_join_irreducible(a);
    let meet_irr = l.is_meet_irreducible(a);
    let iii = comparable && join_irr && meet_irr;
    let cond_iii = CheckReport::all(
        "comparable and irreducible",
        vec![
            CheckReport::flag("comparable with all", comparable, vec![a], "some element is incomparable with a"),
            CheckReport::flag("join-irreducible", join_irr, vec![a], "a is a join of two other elements"),
            CheckReport::flag("meet-irreducible", meet_irr, vec![a], "a is a meet of two other elements"),
        ],
    );

    let aa = (a, a);
    let comparable_pairs: Vec<bool> = (0..n * n)
        .map(|i| {
            let q = pair_of(n, i);
            pair_leq(l, q, aa) || pair_leq(l, aa, q)
        })
        .collect();
    let not_comparable = (0..n * n).find(|&i| p.member[i] && !comparable_pairs[i]);
    let not_member = (0..n * n).find(|&i| !p.member[i] && comparable_pairs[i]);
    let subset = not_comparable.is_none();
    let equal = subset && not_member.is_none();
    let cond_i = CheckReport::flag(
        "members comparable with (a,a)",
        subset,
        not_comparable.into_iter().collect(),
        not_comparable
            .map(|i| format!("{} ∈ {} is incomparable with {}", p.label(pair_of(n, i)), p.name(), p.label(aa)))
            .unwrap_or_default(),
    );
    let diff = not_comparable.or(not_member);
    let cond_ii = CheckReport::flag(
        "P_a equals pairs comparable with (a,a)",
        equal,
        diff.into_iter().collect(),
        diff.map(|i| format!("membership and comparability with {} differ at {}", p.label(aa), p.label(pair_of(n, i))))
            .unwrap_or_default(),
    );
    let agree = iii == equal && subset == equal;
    let equivalence = CheckReport::flag(
        "equivalence",
        agree,
        vec![a],
        format!("irreducibility/comparability = {iii}, comparable-pair characterisation = {equal}, subset = {subset}"),
    );
    let sub = is_sublattice(&p);
    let consequence = CheckReport::flag(
        "implies sublattice",
        !iii || sub.passed(),
        sub.witness().map(|w| w.to_vec()).unwrap_or_default(),
        sub.message().unwrap_or_default().to_string(),
    );
    CheckReport::all("comparability characterisation", vec![cond_iii, cond_i, cond_ii, equivalence, consequence])
}

/// The quadruple condition evaluated next to the sublattice scan.
pub fn th3_check(l: &FiniteLattice, a: Elem) -> CriterionReport {
    CriterionReport {
        name: "sublattice criterion",
        condition: th3_condition(l, a),
        closure: is_sublattice(&build_pa(l, a)),
    }
}

/// Hypothesis and condition flags of the `⊙`-closure criterion for an
/// integral base.
#[derive(Clone, Debug)]
pub struct Th4Report {
    pub idempotent: CheckReport,
    pub join_irreducible: CheckReport,
    pub meet_irreducible: CheckReport,
    pub comparable: CheckReport,
    /// `a·x < a` implies `a·x = 0`.
    pub cond3: CheckReport,
    /// `a < x·y` implies `(x→a)∧(y→a) = a`.
    pub cond4: CheckReport,
}

impl Th4Report {
    pub fn hypotheses_hold(&self) -> bool {
        [&self.idempotent, &self.join_irreducible, &self.meet_irreducible, &self.comparable]
            .iter()
            .all(|r| r.passed())
    }

    pub fn conditions_hold(&self) -> bool {
        self.cond3.passed() && self.cond4.passed()
    }

    pub fn report(&self) -> CheckReport {
        let hyps = CheckReport::all(
            "hypotheses",
            vec![
                self.idempotent.clone(),
                self.join_irreducible.clone(),
                self.meet_irreducible.clone(),
                self.comparable.clone(),
            ],
        );
        let conds = CheckReport::all("conditions", vec![self.cond3.clone(), self.cond4.clone()]);
        CheckReport::all("closure criterion", vec![hyps, conds])
    }
}

pub fn th4_conditions(r: &ResiduatedStructure, a: Elem) -> Result<Th4Report> {
    if !r.is_integral() {
        return Err(Error::PreconditionViolated("base is not integral".into()));
    }
    let l = r.lattice();
    let lb = |e| l.label(e);
    let zero = l.bottom();
    let aa = r.mul(a, a);
    let idempotent = CheckReport::flag(
        "a·a = a",
        aa == a,
        vec![a],
        format!("{}·{0} = {}", lb(a), lb(aa)),
    );
    let incomparable = l.elements().find(|&x| !l.comparable(x, a));
    let comparable = CheckReport::flag(
        "comparable with all",
        incomparable.is_none(),
        incomparable.into_iter().collect(),
        incomparable.map(|x| format!("{} ∥ {}", lb(a), lb(x))).unwrap_or_default(),
    );
    let join_irreducible = CheckReport::flag("join-irreducible", l.is_join_irreducible(a), vec![a], "a is a join of two other elements");
    let meet_irreducible = CheckReport::flag("meet-irreducible", l.is_meet_irreducible(a), vec![a], "a is a meet of two other elements");

    let c3 = l.elements().find(|&x| {
        let ax = r.mul(a, x);
        l.lt(ax, a) && ax != zero
    });
    let cond3 = CheckReport::flag(
        "a·x < a implies a·x = 0",
        c3.is_none(),
        c3.into_iter().collect(),
        c3.map(|x| format!("{}·{} = {}", lb(a), lb(x), lb(r.mul(a, x)))).unwrap_or_default(),
    );
    let c4 = l
        .elements()
        .flat_map(|x| l.elements().map(move |y| (x, y)))
        .find(|&(x, y)| l.lt(a, r.mul(x, y)) && l.meet(r.imp(x, a), r.imp(y, a)) != a);
    let cond4 = CheckReport::flag(
        "a < x·y implies (x→a)∧(y→a) = a",
        c4.is_none(),
        c4.map(|(x, y)| vec![x, y]).unwrap_or_default(),
        c4.map(|(x, y)| {
            format!(
                "{a} < {x}·{y} but ({x}→{a})∧({y}→{a}) = {}",
                lb(l.meet(r.imp(x, a), r.imp(y, a))),
                a = lb(a),
                x = lb(x),
                y = lb(y)
            )
        })
        .unwrap_or_default(),
    );
    Ok(Th4Report {
        idempotent,
        join_irreducible,
        meet_irreducible,
        comparable,
        cond3,
        cond4,
    })
}

/// Hypotheses, conditions (3) and (4), and `⊙`/`⇒` closure of `P_a` in the
/// `bc` product. Passes iff every hypothesis and condition holds and, given
/// the hypotheses, `⊙`-closure agrees with the conditions and with
/// `⇒`-closure.
pub fn th4_check(r: &ResiduatedStructure, a: Elem) -> Result<CheckReport> {
    let t = th4_conditions(r, a)?;
    let p = build_pa(r.lattice(), a);
    let odot = closure_under(&p, r, None, PairOp::OdotBc);
    let imp = closure_under(&p, r, None, PairOp::ImpBc);
    let agree = !t.hypotheses_hold() || (odot.passed() == t.conditions_hold() && odot.passed() == imp.passed());
    let instance = CheckReport::flag(
        "theorem instance",
        agree,
        Vec::new(),
        format!(
            "conditions {}, ⊙-closure {}, ⇒-closure {}",
            if t.conditions_hold() { "hold" } else { "fail" },
            verdict(&odot),
            verdict(&imp)
        ),
    );
    let base = t.report();
    let mut report = CheckReport::all(base.name.clone(), vec![base.clone(), instance.clone()]);
    let mut children = base.children;
    children.extend([odot, imp, instance]);
    report.children = children;
    Ok(report)
}

/// The four pair operations, bound to a base and (for `dn`) an involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOp {
    OdotBc,
    ImpBc,
    OdotDn,
    ImpDn,
}

impl PairOp {
    pub fn symbol(self) -> &'static str {
        match self {
            PairOp::OdotBc | PairOp::OdotDn => "⊙",
            PairOp::ImpBc | PairOp::ImpDn => "⇒",
        }
    }

    /// Evaluates the operation; `dn` operations use `inv` or, without one,
    /// the base negation `x → 0`.
    pub fn apply(self, r: &ResiduatedStructure, inv: Option<&Involution>, p: Pair, q: Pair) -> Pair {
        match self {
            PairOp::OdotBc => odot_bc(r, p, q),
            PairOp::ImpBc => imp_bc(r, p, q),
            PairOp::OdotDn | PairOp::ImpDn => {
                let owned;
                let inv = match inv {
                    Some(i) => i,
                    None => {
                        owned = Involution::unchecked(r.negation());
                        &owned
                    }
                };
                if self == PairOp::OdotDn {
                    odot_dn(r, inv, p, q)
                } else {
                    imp_dn(r, inv, p, q)
                }
            }
        }
    }
}

/// `op` maps `P × P` into `P`.
pub fn closure_check(p: &PaSubset, symbol: &str, op: impl Fn(Pair, Pair) -> Pair) -> CheckReport {
    let name = format!("closed under {symbol}");
    match p.escapes(op).first() {
        None => CheckReport::pass(name),
        Some(e) => CheckReport::fail(
            name,
            symbol,
            vec![p.index(e.left), p.index(e.right), p.index(e.value)],
            p.escape_message(symbol, e),
        ),
    }
}

pub fn closure_under(p: &PaSubset, r: &ResiduatedStructure, inv: Option<&Involution>, op: PairOp) -> CheckReport {
    closure_check(p, op.symbol(), |x, y| op.apply(r, inv, x, y))
}

/// A closure condition evaluated next to the closure scan it characterises.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub name: &'static str,
    pub condition: CheckReport,
    pub closure: CheckReport,
}

impl CriterionReport {
    pub fn agree(&self) -> bool {
        self.condition.passed() == self.closure.passed()
    }

    pub fn report(&self) -> CheckReport {
        let agreement = CheckReport::flag(
            "agreement",
            self.agree(),
            Vec::new(),
            format!(
                "condition {} but closure {}",
                verdict(&self.condition),
                verdict(&self.closure)
            ),
        );
        CheckReport::all(self.name, vec![self.condition.clone(), self.closure.clone(), agreement])
    }
}

fn verdict(r: &CheckReport) -> &'static str {
    if r.passed() {
        "passes"
    } else {
        "fails"
    }
}

fn scan_members(
    p: &PaSubset,
    name: &str,
    holds: impl Fn(Pair, Pair) -> bool,
    describe: impl Fn(Pair, Pair) -> String,
) -> CheckReport {
    for &bc in p.members() {
        for &de in p.members() {
            if !holds(bc, de) {
                return CheckReport::fail(name, "", vec![p.index(bc), p.index(de)], describe(bc, de));
            }
        }
    }
    CheckReport::pass(name)
}

/// `(b·d)∧(b→e)∧(d→c) ≤ a ≤ (b·d)∨(b→e)` and `a ≤ (b·d)∨(d→c)` for all
/// `(b,c), (d,e) ∈ P_a`, next to `⊙`-closure. No hypothesis gate.
pub fn evaluate_lem1(r: &ResiduatedStructure, a: Elem) -> CriterionReport {
    let l = r.lattice();
    let p = build_pa(l, a);
    let condition = scan_members(
        &p,
        "meet/join condition",
        |(b, c), (d, e)| {
            let (f, g, h) = (r.mul(b, d), r.imp(b, e), r.imp(d, c));
            l.leq(l.meet(l.meet(f, g), h), a) && l.leq(a, l.join(f, g)) && l.leq(a, l.join(f, h))
        },
        |bc, de| format!("fails for {}, {}", p.label(bc), p.label(de)),
    );
    let closure = closure_under(&p, r, None, PairOp::OdotBc);
    CriterionReport { name: "⊙-closure criterion", condition, closure }
}

pub fn lem1_condition(r: &ResiduatedStructure, a: Elem) -> Result<CriterionReport> {
    require_distributive(r)?;
    Ok(evaluate_lem1(r, a))
}

/// Atom form of the `⊙`-closure criterion: with `f = b·d` and
/// `i = (b→e)∧(d→c)`, either `f∧i = a`, or `f∧i = 0` and (`a ≤ f` or
/// `a ≤ i`). No hypothesis gate.
pub fn evaluate_cor2(r: &ResiduatedStructure, a: Elem) -> CriterionReport {
    let l = r.lattice();
    let p = build_pa(l, a);
    let zero = l.bottom();
    let condition = scan_members(
        &p,
        "atom condition",
        |(b, c), (d, e)| {
            let f = r.mul(b, d);
            let i = l.meet(r.imp(b, e), r.imp(d, c));
            let fi = l.meet(f, i);
            fi == a || (fi == zero && (l.leq(a, f) || l.leq(a, i)))
        },
        |bc, de| format!("neither (i) nor (ii) holds for {}, {}", p.label(bc), p.label(de)),
    );
    let closure = closure_under(&p, r, None, PairOp::OdotBc);
    CriterionReport { name: "⊙-closure criterion (atom)", condition, closure }
}

pub fn cor2_condition(r: &ResiduatedStructure, a: Elem) -> Result<CriterionReport> {
    require_distributive(r)?;
    require_atom(r, a)?;
    Ok(evaluate_cor2(r, a))
}

/// Atom form of the `⇒`-closure criterion: with `i = (b→d)∧(e→c)` and
/// `h = b·e`, either `i∧h = a`, or `i∧h = 0` and (`a ≤ i` or `a ≤ h`).
/// No hypothesis gate.
pub fn evaluate_imp_lemma(r: &ResiduatedStructure, a: Elem) -> CriterionReport {
    let l = r.lattice();
    let p = build_pa(l, a);
    let zero = l.bottom();
    let condition = scan_members(
        &p,
        "atom condition",
        |(b, c), (d, e)| {
            let i = l.meet(r.imp(b, d), r.imp(e, c));
            let h = r.mul(b, e);
            let ih = l.meet(i, h);
            ih == a || (ih == zero && (l.leq(a, i) || l.leq(a, h)))
        },
        |bc, de| format!("neither (i) nor (ii) holds for {}, {}", p.label(bc), p.label(de)),
    );
    let closure = closure_under(&p, r, None, PairOp::ImpBc);
    CriterionReport { name: "⇒-closure criterion (atom)", condition, closure }
}

pub fn imp_lemma_condition(r: &ResiduatedStructure, a: Elem) -> Result<CriterionReport> {
    require_distributive(r)?;
    require_atom(r, a)?;
    Ok(evaluate_imp_lemma(r, a))
}

fn require_distributive(r: &ResiduatedStructure) -> Result<()> {
    match r.lattice().is_distributive().failure {
        None => Ok(()),
        Some(f) => Err(Error::HypothesisViolated(format!("lattice is not distributive: {}", f.message))),
    }
}

fn require_atom(r: &ResiduatedStructure, a: Elem) -> Result<()> {
    if !r.is_integral() {
        return Err(Error::HypothesisViolated("base is not bounded (unit ≠ top)".into()));
    }
    if !r.lattice().is_atom(a) {
        return Err(Error::HypothesisViolated(format!("{} is not an atom", r.lattice().label(a))));
    }
    Ok(())
}

/// For a fixed point `a = a'` of an antitone involution on `L` with `P_a`
/// a sublattice: `P_a` is closed under `(x,y) ↦ (x',y')`, and `L` is
/// pseudo-Kleene iff `P_a` with the componentwise involution is. Passes iff
/// the closure holds and the two verdicts agree.
pub fn selfdual_transfer_check(l: &FiniteLattice, inv: &Involution, a: Elem) -> Result<CheckReport> {
    if let Some(f) = l.check_involution(inv.map()).failure {
        return Err(Error::HypothesisViolated(format!("not an antitone involution: {}", f.message)));
    }
    if inv.apply(a) != a {
        return Err(Error::HypothesisViolated(format!(
            "{} is not a fixed point ({0}' = {}); fixed points: [{}]",
            l.label(a),
            l.label(inv.apply(a)),
            inv.fixed_points().iter().map(|&x| l.label(x)).collect::<Vec<_>>().join(", ")
        )));
    }
    let p = build_pa(l, a);
    let pl = p.lattice().map_err(|e| Error::HypothesisViolated(e.to_string()))?;
    let comp = |(x, y): Pair| (inv.apply(x), inv.apply(y));

    let escaping = p.members().iter().copied().find(|&q| !p.contains(comp(q)));
    let closed = CheckReport::flag(
        "closed under componentwise involution",
        escaping.is_none(),
        escaping.map(|q| vec![p.index(q)]).unwrap_or_default(),
        escaping.map(|q| format!("{}' = {} ∉ {}", p.label(q), p.label(comp(q)), p.name())).unwrap_or_default(),
    );
    let on_lattice = is_pseudo_kleene(l, inv);
    let on_pa = match escaping {
        None => {
            let map = p.members().iter().map(|&q| p.position(comp(q)).unwrap()).collect();
            is_pseudo_kleene(&pl, &Involution::unchecked(map))
        }
        Some(_) => CheckReport::fail("pseudo-Kleene", "", Vec::new(), "involution does not act on P_a"),
    };
    let agree = on_lattice.passed() == on_pa.passed();
    let agreement = CheckReport::flag(
        "agreement",
        agree,
        Vec::new(),
        format!("L {} but P_a {}", verdict(&on_lattice), verdict(&on_pa)),
    );
    let mut report = CheckReport::all("pseudo-Kleene transfer", vec![closed.clone(), agreement.clone()]);
    report.children = vec![
        closed,
        on_lattice.renamed("L pseudo-Kleene"),
        on_pa.renamed("P_a pseudo-Kleene"),
        agreement,
    ];
    Ok(report)
}

/// Hypothesis flags and the `⊙`-closure verdict for the `dn` product.
#[derive(Clone, Debug)]
pub struct DnClosureReport {
    pub flags: Vec<CheckReport>,
    pub closure: CheckReport,
}

impl DnClosureReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.flags.iter().all(|f| f.passed())
    }

    pub fn flag(&self, name: &str) -> Option<&CheckReport> {
        self.flags.iter().find(|f| f.name == name)
    }

    /// Passes unless every hypothesis holds and the closure still fails.
    pub fn report(&self) -> CheckReport {
        let instance = CheckReport::flag(
            "theorem instance",
            !self.hypotheses_hold() || self.closure.passed(),
            self.closure.witness().map(|w| w.to_vec()).unwrap_or_default(),
            self.closure.message().unwrap_or_default().to_string(),
        );
        let hyps = CheckReport::all("hypotheses", self.flags.clone());
        let mut r = CheckReport::all("⊙ (dn) closure", vec![instance.clone()]);
        r.children = vec![hyps, self.closure.clone(), instance];
        r
    }
}

/// `P_a` closure under the `dn` product `(x,y)⊙(z,v) = (x·z, (y'·v')')`.
///
/// Hypothesis flags: integral base, `a·a = a`, join- and
/// meet-irreducibility, `a'·a' = a'`, and comparability of `a` with every
/// element (the argument relies on it through the comparable-pair
/// characterisation of `P_a`).
pub fn dn_closure_check(r: &ResiduatedStructure, inv: &Involution, a: Elem) -> DnClosureReport {
    let l = r.lattice();
    let lb = |e| l.label(e);
    let na = inv.apply(a);
    let flags = vec![
        CheckReport::flag("integral", r.is_integral(), vec![], "unit is not the top"),
        CheckReport::flag("a·a = a", r.mul(a, a) == a, vec![a], format!("{}·{0} = {}", lb(a), lb(r.mul(a, a)))),
        CheckReport::flag("join-irreducible", l.is_join_irreducible(a), vec![a], "a is a join of two other elements"),
        CheckReport::flag("meet-irreducible", l.is_meet_irreducible(a), vec![a], "a is a meet of two other elements"),
        CheckReport::flag(
            "a'·a' = a'",
            r.mul(na, na) == na,
            vec![na],
            format!("{}·{0} = {}", lb(na), lb(r.mul(na, na))),
        ),
        CheckReport::flag("comparable with all", l.comparable_with_all(a), vec![a], "some element is incomparable with a"),
    ];
    let p = build_pa(l, a);
    let closure = closure_under(&p, r, Some(inv), PairOp::OdotDn);
    DnClosureReport { flags, closure }
}

/// `P_a` is closed under the `dn` implication iff `|L| = 1`. For `|L| ≥ 2`
/// the check also names an escaping product among `(0,a), (a,0), (a,1),
/// (1,a)`.
pub fn dn_imp_triviality_check(r: &ResiduatedStructure, inv: &Involution, a: Elem) -> Result<CheckReport> {
    let l = r.lattice();
    if !r.is_integral() {
        return Err(Error::HypothesisViolated("base is not bounded (unit ≠ top)".into()));
    }
    if let Some(f) = l.check_involution(inv.map()).failure {
        return Err(Error::HypothesisViolated(format!("not an antitone involution: {}", f.message)));
    }
    let p = build_pa(l, a);
    let closure = closure_under(&p, r, Some(inv), PairOp::ImpDn);
    let trivial = l.size() == 1;
    let instance = CheckReport::flag(
        "closed iff |L| = 1",
        closure.passed() == trivial,
        Vec::new(),
        format!("|L| = {} but closure {}", l.size(), verdict(&closure)),
    );
    let mut children = vec![closure.clone(), instance.clone()];
    if !trivial {
        let (zero, one) = (l.bottom(), l.top());
        let four = [(zero, a), (a, zero), (a, one), (one, a)];
        let named = [((one, a), (zero, a)), ((a, zero), (a, one))]
            .into_iter()
            .chain(four.iter().flat_map(|&x| four.iter().map(move |&y| (x, y))))
            .map(|(x, y)| (x, y, imp_dn(r, inv, x, y)))
            .find(|&(_, _, v)| !p.contains(v));
        children.push(match named {
            Some((x, y, v)) => CheckReport::pass(format!(
                "escape among (0,a),(a,0),(a,1),(1,a): {}",
                p.escape_message("⇒", &Escape { left: x, right: y, value: v })
            )),
            None => CheckReport::fail(
                "escape among (0,a),(a,0),(a,1),(1,a)",
                "⇒",
                Vec::new(),
                "no product of two of these pairs leaves P_a",
            ),
        });
    }
    let mut report = CheckReport::all("⇒ (dn) closure triviality", vec![instance]);
    report.children = children;
    Ok(report)
}
