//! Commutative residuated lattices on finite lattices, and the MV-algebra
//! bridge.
//!
//! A [`ResiduatedStructure`] keeps the monoid unit separate from the lattice
//! top, so non-integral structures (such as the full twist-product with unit
//! `(1,1)`) are represented by the same type. The constant `0` used by
//! negation `x' := x → 0` is always the lattice bottom.

use crate::error::{Error, Result};
use crate::order::{Carrier, Elem, FiniteLattice, Table};
use crate::report::CheckReport;
use crate::twist::check_adjoint;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResiduatedStructure {
    lattice: FiniteLattice,
    mul: Table,
    imp: Table,
    unit: Elem,
}

impl ResiduatedStructure {
    /// Assembles the tables without checking anything; run
    /// [`check_residuated`] to validate.
    pub fn from_parts(lattice: FiniteLattice, mul: Table, imp: Table, unit: Elem) -> Self {
        ResiduatedStructure { lattice, mul, imp, unit }
    }

    /// Derives the residuum of `mul` and returns the structure.
    pub fn from_mul(lattice: FiniteLattice, mul: Table, unit: Elem) -> Result<Self> {
        let imp = derive_residuum(&lattice, &mul, unit)?;
        Ok(ResiduatedStructure { lattice, mul, imp, unit })
    }

    /// Like [`from_mul`](Self::from_mul), but also requires the supplied
    /// implication table to equal the derived residuum.
    pub fn with_imp(lattice: FiniteLattice, mul: Table, imp: Table, unit: Elem) -> Result<Self> {
        let derived = derive_residuum(&lattice, &mul, unit)?;
        for y in lattice.elements() {
            for z in lattice.elements() {
                if imp.get(y, z) != derived.get(y, z) {
                    return Err(Error::ImpMismatch {
                        y: lattice.label(y).to_string(),
                        z: lattice.label(z).to_string(),
                        supplied: lattice.label(imp.get(y, z)).to_string(),
                        derived: lattice.label(derived.get(y, z)).to_string(),
                    });
                }
            }
        }
        Ok(ResiduatedStructure { lattice, mul, imp: derived, unit })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul.get(x, y)
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp.get(x, y)
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn imp_table(&self) -> &Table {
        &self.imp
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    /// `x' := x → 0`.
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.imp(x, self.lattice.bottom())
    }

    pub fn negation(&self) -> Vec<Elem> {
        self.lattice.elements().map(|x| self.neg(x)).collect()
    }

    /// The unit is the lattice top.
    pub fn is_integral(&self) -> bool {
        self.unit == self.lattice.top()
    }
}

/// Commutativity, associativity and unit law of `mul`.
pub fn check_monoid(lattice: &FiniteLattice, mul: &Table, unit: Elem) -> CheckReport {
    let l = |e| lattice.label(e);
    let els = || lattice.elements();
    let mut children = Vec::new();

    let comm = els()
        .flat_map(|x| els().map(move |y| (x, y)))
        .find(|&(x, y)| mul.get(x, y) != mul.get(y, x));
    children.push(match comm {
        None => CheckReport::pass("commutative"),
        Some((x, y)) => CheckReport::fail(
            "commutative",
            "x·y = y·x",
            vec![x, y],
            format!("{}·{} = {} but {1}·{0} = {}", l(x), l(y), l(mul.get(x, y)), l(mul.get(y, x))),
        ),
    });

    let mut assoc = None;
    'outer: for x in els() {
        for y in els() {
            for z in els() {
                if mul.get(mul.get(x, y), z) != mul.get(x, mul.get(y, z)) {
                    assoc = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    children.push(match assoc {
        None => CheckReport::pass("associative"),
        Some((x, y, z)) => CheckReport::fail(
            "associative",
            "(x·y)·z = x·(y·z)",
            vec![x, y, z],
            format!(
                "({x}·{y})·{z} = {} but {x}·({y}·{z}) = {}",
                l(mul.get(mul.get(x, y), z)),
                l(mul.get(x, mul.get(y, z))),
                x = l(x),
                y = l(y),
                z = l(z)
            ),
        ),
    });

    let unit_fail = els().find(|&x| mul.get(unit, x) != x || mul.get(x, unit) != x);
    children.push(match unit_fail {
        None => CheckReport::pass("unit"),
        Some(x) => CheckReport::fail(
            "unit",
            "1·x = x",
            vec![x],
            format!("{}·{} = {} ≠ {1}", l(unit), l(x), l(mul.get(unit, x))),
        ),
    });
    CheckReport::all("commutative monoid", children)
}

fn check_monotone(lattice: &FiniteLattice, mul: &Table) -> CheckReport {
    let l = |e| lattice.label(e);
    for x in lattice.elements() {
        for y in lattice.elements() {
            if !lattice.leq(x, y) {
                continue;
            }
            for z in lattice.elements() {
                if !lattice.leq(mul.get(x, z), mul.get(y, z)) {
                    return CheckReport::fail(
                        "monotone",
                        "x ≤ y implies x·z ≤ y·z",
                        vec![x, y, z],
                        format!(
                            "{x} ≤ {y} but {x}·{z} = {} ≰ {} = {y}·{z}",
                            l(mul.get(x, z)),
                            l(mul.get(y, z)),
                            x = l(x),
                            y = l(y),
                            z = l(z)
                        ),
                    );
                }
            }
        }
    }
    CheckReport::pass("monotone")
}

/// Commutative monoid laws, adjointness and monotonicity of `·`.
pub fn check_residuated(r: &ResiduatedStructure) -> CheckReport {
    let lat = r.lattice();
    CheckReport::all(
        "commutative residuated lattice",
        vec![
            check_monoid(lat, &r.mul, r.unit),
            check_adjoint(lat, &r.mul, &r.imp),
            check_monotone(lat, &r.mul),
        ],
    )
}

/// Computes `y → z = max{x : x·y ≤ z}` and re-verifies adjointness.
pub fn derive_residuum(lattice: &FiniteLattice, mul: &Table, unit: Elem) -> Result<Table> {
    let monoid = check_monoid(lattice, mul, unit);
    if let Some(f) = monoid.failure {
        return Err(Error::NotAMonoid(f.message));
    }
    let n = lattice.size();
    let mut data = Vec::with_capacity(n * n);
    for y in lattice.elements() {
        for z in lattice.elements() {
            let no_residuum = || Error::NoResiduum {
                y: lattice.label(y).to_string(),
                z: lattice.label(z).to_string(),
                witness: (y, z),
            };
            let mut below = lattice.elements().filter(|&x| lattice.leq(mul.get(x, y), z));
            let first = below.next().ok_or_else(no_residuum)?;
            let sup = below.fold(first, |acc, x| lattice.join(acc, x));
            if !lattice.leq(mul.get(sup, y), z) {
                return Err(no_residuum());
            }
            data.push(sup);
        }
    }
    let imp = Table::from_rows(n, data);
    let adj = check_adjoint(lattice, mul, &imp);
    if let Some(w) = adj.witness() {
        // `·` is not monotone, so the set of x with x·y ≤ z is not a down-set
        return Err(Error::NoResiduum {
            y: lattice.label(w[1]).to_string(),
            z: lattice.label(w[2]).to_string(),
            witness: (w[1], w[2]),
        });
    }
    Ok(imp)
}

pub fn is_integral(r: &ResiduatedStructure) -> bool {
    r.is_integral()
}

/// `(x → 0) → 0 = x` for all `x`.
pub fn satisfies_dnl(r: &ResiduatedStructure) -> CheckReport {
    let lat = r.lattice();
    match lat.elements().find(|&x| r.neg(r.neg(x)) != x) {
        None => CheckReport::pass("double negation law"),
        Some(x) => CheckReport::fail(
            "double negation law",
            "(x→0)→0 = x",
            vec![x],
            format!(
                "({x}→0)→0 = {}→0 = {} ≠ {x}",
                lat.label(r.neg(x)),
                lat.label(r.neg(r.neg(x))),
                x = lat.label(x)
            ),
        ),
    }
}

/// The nine derived properties of integral commutative residuated lattices.
/// Refuses structures that are not residuated or not integral.
pub fn check_prop1(r: &ResiduatedStructure) -> Result<CheckReport> {
    let res = check_residuated(r);
    if let Some(f) = res.failure {
        return Err(Error::PreconditionViolated(format!("not residuated: {}", f.message)));
    }
    if !r.is_integral() {
        return Err(Error::PreconditionViolated(format!(
            "not integral: unit {} ≠ top {}",
            r.lattice().label(r.unit()),
            r.lattice().label(r.lattice().top())
        )));
    }
    Ok(check_prop1_ungated(r))
}

/// [`check_prop1`] without the integrality gate, for negative testing.
pub fn check_prop1_ungated(r: &ResiduatedStructure) -> CheckReport {
    let lat = r.lattice();
    let n = lat.size();
    let one = r.unit();
    let l = |e| lat.label(e);
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let triples = || pairs().flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)));

    fn clause<T>(name: &str, hit: Option<T>, witness: impl Fn(&T) -> Vec<Elem>, msg: impl Fn(&T) -> String) -> CheckReport {
        match hit {
            None => CheckReport::pass(name),
            Some(t) => CheckReport::fail(name, "", witness(&t), msg(&t)),
        }
    }
    let w3 = |&(x, y, z): &(Elem, Elem, Elem)| vec![x, y, z];
    let w2 = |&(x, y): &(Elem, Elem)| vec![x, y];

    let children = vec![
        clause(
            "(i)",
            triples().find(|&(x, y, z)| lat.leq(x, y) && !lat.leq(r.mul(x, z), r.mul(y, z))),
            w3,
            |&(x, y, z)| format!("{} ≤ {} but {0}·{2} ≰ {1}·{2}", l(x), l(y), l(z)),
        ),
        clause(
            "(ii)",
            pairs().find(|&(x, y)| !lat.leq(r.mul(x, y), x) || !lat.leq(r.mul(x, y), y)),
            w2,
            |&(x, y)| format!("{}·{} = {} is not below both factors", l(x), l(y), l(r.mul(x, y))),
        ),
        clause(
            "(iii)",
            (0..n).find(|&x| r.imp(one, x) != x),
            |&x| vec![x],
            |&x| format!("{}→{} = {} ≠ {1}", l(one), l(x), l(r.imp(one, x))),
        ),
        clause(
            "(iv)",
            pairs().find(|&(x, y)| !lat.leq(x, r.imp(y, x))),
            w2,
            |&(x, y)| format!("{} ≰ {}→{0} = {}", l(x), l(y), l(r.imp(y, x))),
        ),
        clause(
            "(v)",
            pairs().find(|&(x, y)| (r.imp(x, y) == one) != lat.leq(x, y)),
            w2,
            |&(x, y)| format!("{}→{} = {} but {0} ≤ {1} is {}", l(x), l(y), l(r.imp(x, y)), lat.leq(x, y)),
        ),
        clause(
            "(vi)",
            triples().find(|&(x, y, z)| lat.leq(x, y) && !lat.leq(r.imp(y, z), r.imp(x, z))),
            w3,
            |&(x, y, z)| format!("{} ≤ {} but {1}→{2} ≰ {0}→{2}", l(x), l(y), l(z)),
        ),
        clause(
            "(vii)",
            triples().find(|&(x, y, z)| lat.leq(x, y) && !lat.leq(r.imp(z, x), r.imp(z, y))),
            w3,
            |&(x, y, z)| format!("{} ≤ {} but {2}→{0} ≰ {2}→{1}", l(x), l(y), l(z)),
        ),
        clause(
            "(viii)",
            triples().find(|&(x, y, z)| r.imp(x, lat.meet(y, z)) != lat.meet(r.imp(x, y), r.imp(x, z))),
            w3,
            |&(x, y, z)| format!("{0}→({1}∧{2}) ≠ ({0}→{1})∧({0}→{2})", l(x), l(y), l(z)),
        ),
        clause(
            "(ix)",
            triples().find(|&(x, y, z)| r.imp(r.mul(x, y), z) != r.imp(x, r.imp(y, z))),
            w3,
            |&(x, y, z)| format!("({0}·{1})→{2} ≠ {0}→({1}→{2})", l(x), l(y), l(z)),
        ),
    ];
    CheckReport::all("derived identities", children)
}

/// `(M, ⊕, ¬, 0)` given by tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVAlgebra {
    pub carrier: Carrier,
    pub oplus: Table,
    pub neg: Vec<Elem>,
    pub zero: Elem,
}

/// Involutive negation, commutative monoid `(M, ⊕, 0)` and the Łukasiewicz
/// axiom `¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x`.
pub fn check_mv(m: &MVAlgebra) -> CheckReport {
    let n = m.carrier.size();
    let l = |e| m.carrier.label(e);
    let neg = |x: Elem| m.neg[x];
    let op = |x, y| m.oplus.get(x, y);
    if m.neg.len() != n || m.oplus.size() != n || m.zero >= n {
        return CheckReport::fail("MV-algebra", "tables", Vec::new(), "tables do not match the carrier size");
    }
    if let Some(x) = (0..n).find(|&x| neg(neg(x)) != x) {
        return CheckReport::fail(
            "MV-algebra",
            "¬¬x = x",
            vec![x],
            format!("¬¬{} = {} ≠ {0}", l(x), l(neg(neg(x)))),
        );
    }
    for x in 0..n {
        for y in 0..n {
            if op(x, y) != op(y, x) {
                return CheckReport::fail("MV-algebra", "x⊕y = y⊕x", vec![x, y], format!("{}⊕{} ≠ {1}⊕{0}", l(x), l(y)));
            }
            for z in 0..n {
                if op(op(x, y), z) != op(x, op(y, z)) {
                    return CheckReport::fail(
                        "MV-algebra",
                        "(x⊕y)⊕z = x⊕(y⊕z)",
                        vec![x, y, z],
                        format!("({0}⊕{1})⊕{2} ≠ {0}⊕({1}⊕{2})", l(x), l(y), l(z)),
                    );
                }
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| op(x, m.zero) != x) {
        return CheckReport::fail(
            "MV-algebra",
            "x⊕0 = x",
            vec![x],
            format!("{}⊕{} = {} ≠ {0}", l(x), l(m.zero), l(op(x, m.zero))),
        );
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = op(neg(op(neg(x), y)), y);
            let rhs = op(neg(op(neg(y), x)), x);
            if lhs != rhs {
                return CheckReport::fail(
                    "MV-algebra",
                    "¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x",
                    vec![x, y],
                    format!("¬(¬{0}⊕{1})⊕{1} = {2} but ¬(¬{1}⊕{0})⊕{0} = {3}", l(x), l(y), l(lhs), l(rhs)),
                );
            }
        }
    }
    CheckReport::pass("MV-algebra")
}

/// Lattice, `x·y := ¬(¬x⊕¬y)`, `x→y := ¬x⊕y` and unit `¬0` of an
/// MV-algebra. The result is re-checked to be a residuated lattice.
pub fn mv_to_residuated(m: &MVAlgebra) -> Result<ResiduatedStructure> {
    let report = check_mv(m);
    if let Some(f) = report.failure {
        return Err(Error::NotMV(f.message));
    }
    let n = m.carrier.size();
    let neg = |x: Elem| m.neg[x];
    let op = |x, y| m.oplus.get(x, y);
    let join = Table::from_fn(n, |x, y| op(neg(op(neg(x), y)), y));
    let meet = Table::from_fn(n, |x, y| neg(join.get(neg(x), neg(y))));
    let leq = (0..n * n).map(|i| join.get(i / n, i % n) == i % n).collect();
    let lattice = FiniteLattice::from_relation(m.carrier.clone(), leq)
        .map_err(|e| Error::NotMV(format!("derived order is not a lattice: {e}")))?;
    if lattice.join_table() != &join || lattice.meet_table() != &meet {
        return Err(Error::NotMV("derived ∨/∧ disagree with the lattice order".into()));
    }
    let mul = Table::from_fn(n, |x, y| neg(op(neg(x), neg(y))));
    let imp = Table::from_fn(n, |x, y| op(neg(x), y));
    let r = ResiduatedStructure::from_parts(lattice, mul, imp, neg(m.zero));
    if let Some(f) = check_residuated(&r).failure {
        return Err(Error::NotMV(format!("derived structure is not residuated: {}", f.message)));
    }
    Ok(r)
}

/// `¬x := x → 0`, `x⊕y := ¬(¬x·¬y)`, zero the lattice bottom.
pub fn residuated_to_mv(r: &ResiduatedStructure) -> MVAlgebra {
    let n = r.size();
    let neg = r.negation();
    let oplus = Table::from_fn(n, |x, y| neg[r.mul(neg[x], neg[y])]);
    MVAlgebra {
        carrier: r.lattice().carrier().clone(),
        oplus,
        neg,
        zero: r.lattice().bottom(),
    }
}
