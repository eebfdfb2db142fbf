//! The full twist-product `L × L` and its two adjoint operation pairs.
//!
//! Pairs are ordered by `(x,y) ≤ (z,v)` iff `x ≤ z` and `v ≤ y`, so
//! `(x,y) ⊔ (z,v) = (x∨z, y∧v)` and `(x,y) ⊓ (z,v) = (x∧z, y∨v)`; the bottom
//! is `(0,1)` and the top `(1,0)`. A pair `(x,y)` over a base of size `n`
//! has index `x * n + y` in every pair table.
//!
//! Two flavours of `⊙`/`⇒` are provided:
//!
//! * [`Flavor::Bc`]: `(x,y)⊙(z,v) = (x·z, (x→v)∧(z→y))` and
//!   `(x,y)⇒(z,v) = ((x→z)∧(v→y), x·v)`, unit `(1,1)`. Requires an integral
//!   base; the result is residuated but not integral.
//! * [`Flavor::Dn`]: `(x,y)⊙(z,v) = (x·z, (y'·v')')` and
//!   `(x,y)⇒(z,v) = (x→z, (y'→v')')`, unit `(1,0)`, for an antitone
//!   involution `'` (by default `x ↦ x→0` on a base with the double
//!   negation law).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::order::{Carrier, Elem, FiniteLattice, Involution, Table};
use crate::report::CheckReport;
use crate::residuated::{check_residuated, satisfies_dnl, ResiduatedStructure};

pub type Pair = (Elem, Elem);

#[inline]
pub fn pair_index(n: usize, (x, y): Pair) -> Elem {
    x * n + y
}

#[inline]
pub fn pair_of(n: usize, index: Elem) -> Pair {
    (index / n, index % n)
}

pub fn pair_label(base: &FiniteLattice, (x, y): Pair) -> String {
    format!("({},{})", base.label(x), base.label(y))
}

#[inline]
pub fn pair_leq(base: &FiniteLattice, (x, y): Pair, (z, v): Pair) -> bool {
    base.leq(x, z) && base.leq(v, y)
}

#[inline]
pub fn pair_join(base: &FiniteLattice, (x, y): Pair, (z, v): Pair) -> Pair {
    (base.join(x, z), base.meet(y, v))
}

#[inline]
pub fn pair_meet(base: &FiniteLattice, (x, y): Pair, (z, v): Pair) -> Pair {
    (base.meet(x, z), base.join(y, v))
}

/// `(x,y) ↦ (y,x)`.
#[inline]
pub fn swap((x, y): Pair) -> Pair {
    (y, x)
}

/// The full twist-product lattice on all ordered pairs, labelled `(x,y)`.
pub fn twist_lattice(base: &FiniteLattice) -> FiniteLattice {
    let n = base.size();
    let m = n * n;
    let labels: Vec<String> = (0..m).map(|i| pair_label(base, pair_of(n, i))).collect();
    let carrier = Carrier::new(labels).expect("pair labels of distinct labels are distinct");
    let leq = (0..m * m)
        .map(|i| pair_leq(base, pair_of(n, i / m), pair_of(n, i % m)))
        .collect();
    let meet = Table::from_fn(m, |p, q| pair_index(n, pair_meet(base, pair_of(n, p), pair_of(n, q))));
    let join = Table::from_fn(m, |p, q| pair_index(n, pair_join(base, pair_of(n, p), pair_of(n, q))));
    let bottom = pair_index(n, (base.bottom(), base.top()));
    let top = pair_index(n, (base.top(), base.bottom()));
    FiniteLattice::from_parts_unchecked(carrier, leq, meet, join, bottom, top)
}

pub fn odot_bc(r: &ResiduatedStructure, (x, y): Pair, (z, v): Pair) -> Pair {
    let l = r.lattice();
    (r.mul(x, z), l.meet(r.imp(x, v), r.imp(z, y)))
}

pub fn imp_bc(r: &ResiduatedStructure, (x, y): Pair, (z, v): Pair) -> Pair {
    let l = r.lattice();
    (l.meet(r.imp(x, z), r.imp(v, y)), r.mul(x, v))
}

pub fn odot_dn(r: &ResiduatedStructure, inv: &Involution, (x, y): Pair, (z, v): Pair) -> Pair {
    (r.mul(x, z), inv.apply(r.mul(inv.apply(y), inv.apply(v))))
}

pub fn imp_dn(r: &ResiduatedStructure, inv: &Involution, (x, y): Pair, (z, v): Pair) -> Pair {
    (r.imp(x, z), inv.apply(r.imp(inv.apply(y), inv.apply(v))))
}

/// `mul[p][q] ≤ r ⟺ p ≤ imp[q][r]` for all `p, q, r` of `lattice`.
pub fn check_adjoint(lattice: &FiniteLattice, mul: &Table, imp: &Table) -> CheckReport {
    for p in lattice.elements() {
        for q in lattice.elements() {
            let pq = mul.get(p, q);
            for r in lattice.elements() {
                let lhs = lattice.leq(pq, r);
                let rhs = lattice.leq(p, imp.get(q, r));
                if lhs != rhs {
                    let l = |e| lattice.label(e);
                    return CheckReport::fail(
                        "adjointness",
                        "x·y ≤ z iff x ≤ y→z",
                        vec![p, q, r],
                        format!(
                            "{p}·{q} = {} {} {r} but {p} {} {q}→{r} = {}",
                            l(pq),
                            if lhs { "≤" } else { "≰" },
                            if rhs { "≤" } else { "≰" },
                            l(imp.get(q, r)),
                            p = l(p),
                            q = l(q),
                            r = l(r)
                        ),
                    );
                }
            }
        }
    }
    CheckReport::pass("adjointness")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Bc,
    Dn,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Bc => "bc",
            Flavor::Dn => "dn",
        })
    }
}

impl FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bc" => Ok(Flavor::Bc),
            "dn" => Ok(Flavor::Dn),
            other => Err(format!("unknown flavor `{other}` (expected bc or dn)")),
        }
    }
}

/// A fully tabulated twist-product algebra together with its base.
#[derive(Clone, Debug)]
pub struct TwistAlgebra {
    base: ResiduatedStructure,
    involution: Option<Involution>,
    flavor: Flavor,
    algebra: ResiduatedStructure,
}

impl TwistAlgebra {
    pub fn base(&self) -> &ResiduatedStructure {
        &self.base
    }

    /// The involution used by the `dn` operations.
    pub fn involution(&self) -> Option<&Involution> {
        self.involution.as_ref()
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The pair algebra as a residuated structure over the pair lattice.
    pub fn algebra(&self) -> &ResiduatedStructure {
        &self.algebra
    }

    pub fn lattice(&self) -> &FiniteLattice {
        self.algebra.lattice()
    }

    pub fn index(&self, p: Pair) -> Elem {
        pair_index(self.base.size(), p)
    }

    pub fn pair(&self, index: Elem) -> Pair {
        pair_of(self.base.size(), index)
    }

    pub fn odot(&self, p: Pair, q: Pair) -> Pair {
        self.pair(self.algebra.mul(self.index(p), self.index(q)))
    }

    pub fn imp(&self, p: Pair, q: Pair) -> Pair {
        self.pair(self.algebra.imp(self.index(p), self.index(q)))
    }

    /// `(0,1)`, the bottom of the pair lattice.
    pub fn zero(&self) -> Pair {
        let l = self.base.lattice();
        (l.bottom(), l.top())
    }

    pub fn label(&self, p: Pair) -> String {
        pair_label(self.base.lattice(), p)
    }
}

/// Tabulates one of the two pair algebras.
///
/// `bc` needs an integral residuated base. `dn` needs an integral
/// residuated base with the double negation law, unless an explicit
/// involution is supplied, in which case that map is used as `'` as is.
pub fn build_twist(r: &ResiduatedStructure, flavor: Flavor, inv: Option<Involution>) -> Result<TwistAlgebra> {
    if let Some(f) = check_residuated(r).failure {
        return Err(Error::HypothesisViolated(format!("base is not residuated: {}", f.message)));
    }
    if !r.is_integral() {
        return Err(Error::HypothesisViolated(format!(
            "base is not integral: unit {} ≠ top {}",
            r.lattice().label(r.unit()),
            r.lattice().label(r.lattice().top())
        )));
    }
    let base = r.lattice();
    let n = base.size();
    let lattice = twist_lattice(base);
    let m = n * n;
    let (involution, mul, imp, unit) = match flavor {
        Flavor::Bc => {
            let mul = Table::from_fn(m, |p, q| pair_index(n, odot_bc(r, pair_of(n, p), pair_of(n, q))));
            let imp = Table::from_fn(m, |p, q| pair_index(n, imp_bc(r, pair_of(n, p), pair_of(n, q))));
            (None, mul, imp, pair_index(n, (base.top(), base.top())))
        }
        Flavor::Dn => {
            let inv = match inv {
                Some(inv) => inv,
                None => {
                    if let Some(f) = satisfies_dnl(r).failure {
                        return Err(Error::HypothesisViolated(format!(
                            "base lacks the double negation law: {}",
                            f.message
                        )));
                    }
                    Involution::new(base, r.negation())?
                }
            };
            let mul = Table::from_fn(m, |p, q| pair_index(n, odot_dn(r, &inv, pair_of(n, p), pair_of(n, q))));
            let imp = Table::from_fn(m, |p, q| pair_index(n, imp_dn(r, &inv, pair_of(n, p), pair_of(n, q))));
            (Some(inv), mul, imp, pair_index(n, (base.top(), base.bottom())))
        }
    };
    Ok(TwistAlgebra {
        base: r.clone(),
        involution,
        flavor,
        algebra: ResiduatedStructure::from_parts(lattice, mul, imp, unit),
    })
}

/// `p⊙q = s(p ⇒ s(q))` and `p⇒q = s(p ⊙ s(q))` with `s` the swap. These
/// identities characterise the `bc` pair; on `dn` tables they are expected
/// to fail.
pub fn check_swap_interdefinability(t: &TwistAlgebra) -> CheckReport {
    let n = t.base.size();
    for p in 0..n * n {
        for q in 0..n * n {
            let (pp, qq) = (pair_of(n, p), pair_of(n, q));
            let prod = t.odot(pp, qq);
            let via = swap(t.imp(pp, swap(qq)));
            if prod != via {
                return CheckReport::fail(
                    "swap interdefinability",
                    "p⊙q = (p ⇒ q')'",
                    vec![p, q],
                    format!(
                        "{}⊙{} = {} but ({0} ⇒ {1}')' = {}",
                        t.label(pp),
                        t.label(qq),
                        t.label(prod),
                        t.label(via)
                    ),
                );
            }
            let res = t.imp(pp, qq);
            let via = swap(t.odot(pp, swap(qq)));
            if res != via {
                return CheckReport::fail(
                    "swap interdefinability",
                    "p⇒q = (p ⊙ q')'",
                    vec![p, q],
                    format!(
                        "{} ⇒ {} = {} but ({0} ⊙ {1}')' = {}",
                        t.label(pp),
                        t.label(qq),
                        t.label(res),
                        t.label(via)
                    ),
                );
            }
        }
    }
    CheckReport::pass("swap interdefinability")
}

/// With `p' := p ⇒ (0,1)` on a `bc` algebra over a base with the double
/// negation law: for every pair `(x,y)` with `x ≤ y'`, `(x,y)' = (y,x)` and
/// `(x,y)'' = (x,y)`.
pub fn check_orthogonal_dnl(t: &TwistAlgebra) -> Result<CheckReport> {
    if t.flavor != Flavor::Bc {
        return Err(Error::HypothesisViolated("orthogonal double negation concerns the bc operations".into()));
    }
    if let Some(f) = satisfies_dnl(&t.base).failure {
        return Err(Error::HypothesisViolated(format!(
            "base lacks the double negation law: {}",
            f.message
        )));
    }
    let base = t.base.lattice();
    let zero = t.zero();
    let n = base.size();
    for x in base.elements() {
        for y in base.elements() {
            if !base.leq(x, t.base.neg(y)) {
                continue;
            }
            let p = (x, y);
            let once = t.imp(p, zero);
            if once != (y, x) {
                return Ok(CheckReport::fail(
                    "orthogonal double negation",
                    "(x,y)' = (y,x)",
                    vec![pair_index(n, p)],
                    format!("{}' = {} ≠ {}", t.label(p), t.label(once), t.label((y, x))),
                ));
            }
            let twice = t.imp(once, zero);
            if twice != p {
                return Ok(CheckReport::fail(
                    "orthogonal double negation",
                    "(x,y)'' = (x,y)",
                    vec![pair_index(n, p)],
                    format!("{}'' = {} ≠ {0}", t.label(p), t.label(twice)),
                ));
            }
        }
    }
    Ok(CheckReport::pass("orthogonal double negation"))
}

/// `(x,y) ⇒ (0,1) = (x', y')` for every pair, where `'` is the algebra's
/// involution (`dn`) or the base negation `x → 0` (`bc`).
pub fn check_componentwise_negation(t: &TwistAlgebra) -> CheckReport {
    let n = t.base.size();
    let neg = |x: Elem| match &t.involution {
        Some(inv) => inv.apply(x),
        None => t.base.neg(x),
    };
    let zero = t.zero();
    for p in 0..n * n {
        let (x, y) = pair_of(n, p);
        let got = t.imp((x, y), zero);
        let want = (neg(x), neg(y));
        if got != want {
            return CheckReport::fail(
                "componentwise negation",
                "(x,y) ⇒ (0,1) = (x',y')",
                vec![p],
                format!(
                    "{} ⇒ {} = {} ≠ {}",
                    t.label((x, y)),
                    t.label(zero),
                    t.label(got),
                    t.label(want)
                ),
            );
        }
    }
    CheckReport::pass("componentwise negation")
}
