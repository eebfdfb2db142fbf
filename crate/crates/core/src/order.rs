//! Finite lattices as dense tables.
//!
//! Elements are indices into the carrier's label list. Every lattice built
//! here is validated: the order is a partial order and all binary meets and
//! joins exist.
//!
//! Join-irreducibility uses the binary formulation only: `a` is
//! join-irreducible iff `a = x ∨ y` forces `a = x` or `a = y`. Under this
//! convention the bottom element is join-irreducible (and, dually, the top
//! is meet-irreducible), unlike textbooks that exclude the empty join.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::report::CheckReport;

pub type Elem = usize;

/// Ordered list of distinct, non-empty element labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Carrier {
    names: Vec<String>,
}

impl Carrier {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidLabel(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Carrier { names })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.names.len()
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.names[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, label: &str) -> Result<Elem> {
        self.names
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

/// Dense `n × n` table of elements, used for binary operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    data: Vec<Elem>,
}

impl Table {
    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                data.push(f(x, y));
            }
        }
        Table { n, data }
    }

    /// Builds a table from row-major data; `data.len()` must be `n * n`.
    pub fn from_rows(n: usize, data: Vec<Elem>) -> Self {
        assert_eq!(data.len(), n * n, "table data must have n*n entries");
        Table { n, data }
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.data[x * self.n + y]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.data
    }
}

/// Whether a list of order pairs is the full relation or only covers to be
/// closed reflexively and transitively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderInput {
    Covers,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    carrier: Carrier,
    leq: Vec<bool>,
    meet: Table,
    join: Table,
    bottom: Elem,
    top: Elem,
}

/// Validates a labelled order relation and computes meet and join tables.
pub fn validate_lattice<A, B>(
    carrier: Carrier,
    pairs: &[(A, B)],
    input: OrderInput,
) -> Result<FiniteLattice>
where
    A: AsRef<str>,
    B: AsRef<str>,
{
    let idx: Vec<(Elem, Elem)> = pairs
        .iter()
        .map(|(x, y)| Ok((carrier.index(x.as_ref())?, carrier.index(y.as_ref())?)))
        .collect::<Result<_>>()?;
    match input {
        OrderInput::Covers => FiniteLattice::from_covers(carrier, &idx),
        OrderInput::Full => {
            let n = carrier.size();
            let mut leq = vec![false; n * n];
            for &(x, y) in &idx {
                leq[x * n + y] = true;
            }
            FiniteLattice::from_relation(carrier, leq)
        }
    }
}

impl FiniteLattice {
    /// Builds a lattice from cover pairs (index form), closing them
    /// reflexively and transitively.
    pub fn from_covers(carrier: Carrier, covers: &[(Elem, Elem)]) -> Result<Self> {
        let n = carrier.size();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(x, y) in covers {
            leq[x * n + y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        FiniteLattice::from_relation(carrier, leq)
    }

    /// Builds a lattice from the full order relation as a row-major boolean
    /// table (`leq[x * n + y]` means `x ≤ y`).
    pub fn from_relation(carrier: Carrier, leq: Vec<bool>) -> Result<Self> {
        let n = carrier.size();
        assert_eq!(leq.len(), n * n, "relation must have n*n entries");
        let at = |x: Elem, y: Elem| leq[x * n + y];
        for x in 0..n {
            if !at(x, x) {
                return Err(Error::NotAPoset {
                    axiom: "reflexivity",
                    witness: vec![x],
                    message: format!("{0} ≰ {0}", carrier.label(x)),
                });
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if at(x, y) && at(y, x) {
                    return Err(Error::NotAPoset {
                        axiom: "antisymmetry",
                        witness: vec![x, y],
                        message: format!(
                            "{0} ≤ {1} and {1} ≤ {0}",
                            carrier.label(x),
                            carrier.label(y)
                        ),
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !at(x, y) {
                    continue;
                }
                for z in 0..n {
                    if at(y, z) && !at(x, z) {
                        return Err(Error::NotAPoset {
                            axiom: "transitivity",
                            witness: vec![x, y, z],
                            message: format!(
                                "{} ≤ {} ≤ {} but not {0} ≤ {2}",
                                carrier.label(x),
                                carrier.label(y),
                                carrier.label(z)
                            ),
                        });
                    }
                }
            }
        }

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<Elem> = (0..n).filter(|&z| at(z, x) && at(z, y)).collect();
                let glb = lower.iter().copied().find(|&m| lower.iter().all(|&z| at(z, m)));
                let upper: Vec<Elem> = (0..n).filter(|&z| at(x, z) && at(y, z)).collect();
                let lub = upper.iter().copied().find(|&j| upper.iter().all(|&z| at(j, z)));
                let missing = match (glb, lub) {
                    (None, _) => Some("greatest lower bound"),
                    (_, None) => Some("least upper bound"),
                    _ => None,
                };
                if let Some(bound) = missing {
                    return Err(Error::NotALattice {
                        x: carrier.label(x).to_string(),
                        y: carrier.label(y).to_string(),
                        bound,
                        witness: (x, y),
                    });
                }
                meet[x * n + y] = glb.unwrap();
                join[x * n + y] = lub.unwrap();
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|x| at(b, x))).expect("finite lattice has a bottom");
        let top = (0..n).find(|&t| (0..n).all(|x| at(x, t))).expect("finite lattice has a top");
        Ok(FiniteLattice {
            carrier,
            leq,
            meet: Table::from_rows(n, meet),
            join: Table::from_rows(n, join),
            bottom,
            top,
        })
    }

    /// Builds a lattice from a relation known to be a lattice order with
    /// matching tables. Only used for constructions whose lattice laws are
    /// separately tested (twist products).
    pub(crate) fn from_parts_unchecked(
        carrier: Carrier,
        leq: Vec<bool>,
        meet: Table,
        join: Table,
        bottom: Elem,
        top: Elem,
    ) -> Self {
        FiniteLattice {
            carrier,
            leq,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn elements(&self) -> Range<Elem> {
        self.carrier.elements()
    }

    pub fn label(&self, e: Elem) -> &str {
        self.carrier.label(e)
    }

    pub fn index(&self, label: &str) -> Result<Elem> {
        self.carrier.index(label)
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size() + y]
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Elem, y: Elem) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.get(x, y)
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// The same carrier with the order reversed.
    pub fn dual(&self) -> FiniteLattice {
        let n = self.size();
        let leq = (0..n * n).map(|i| self.leq[(i % n) * n + i / n]).collect();
        FiniteLattice {
            carrier: self.carrier.clone(),
            leq,
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Passes iff `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples; the
    /// witness is the first violating triple in carrier order.
    pub fn is_distributive(&self) -> CheckReport {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return CheckReport::fail(
                            "distributive",
                            "x∧(y∨z) = (x∧y)∨(x∧z)",
                            vec![x, y, z],
                            format!(
                                "{x}∧({y}∨{z}) = {} but ({x}∧{y})∨({x}∧{z}) = {}",
                                self.label(lhs),
                                self.label(rhs),
                                x = self.label(x),
                                y = self.label(y),
                                z = self.label(z),
                            ),
                        );
                    }
                }
            }
        }
        CheckReport::pass("distributive")
    }

    pub fn is_join_irreducible(&self, a: Elem) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.join(x, y) != a || x == a || y == a))
    }

    pub fn is_meet_irreducible(&self, a: Elem) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.meet(x, y) != a || x == a || y == a))
    }

    pub fn comparable_with_all(&self, a: Elem) -> bool {
        self.elements().all(|x| self.comparable(x, a))
    }

    /// `a` covers the bottom element.
    pub fn is_atom(&self, a: Elem) -> bool {
        self.covers(self.bottom, a)
    }

    /// `x ⋖ y`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: Elem, y: Elem) -> bool {
        self.lt(x, y) && !self.elements().any(|z| self.lt(x, z) && self.lt(z, y))
    }

    /// The Hasse cover relation, lexicographic by carrier index.
    pub fn hasse_covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if self.covers(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Passes iff `map` is a total, self-inverse, order-reversing table.
    pub fn check_involution(&self, map: &[Elem]) -> CheckReport {
        let n = self.size();
        if map.len() != n || map.iter().any(|&e| e >= n) {
            return CheckReport::fail(
                "involution",
                "total",
                Vec::new(),
                format!("map must send each of the {n} elements to an element"),
            );
        }
        for x in self.elements() {
            if map[map[x]] != x {
                return CheckReport::fail(
                    "involution",
                    "x'' = x",
                    vec![x],
                    format!("{}'' = {} ≠ {}", self.label(x), self.label(map[map[x]]), self.label(x)),
                );
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                if self.leq(x, y) && !self.leq(map[y], map[x]) {
                    return CheckReport::fail(
                        "involution",
                        "x ≤ y implies y' ≤ x'",
                        vec![x, y],
                        format!(
                            "{} ≤ {} but {}' = {} ≰ {} = {}'",
                            self.label(x),
                            self.label(y),
                            self.label(y),
                            self.label(map[y]),
                            self.label(map[x]),
                            self.label(x)
                        ),
                    );
                }
            }
        }
        CheckReport::pass("involution")
    }
}

/// A validated antitone involution on a specific lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Involution {
    map: Vec<Elem>,
}

impl Involution {
    pub fn new(lattice: &FiniteLattice, map: Vec<Elem>) -> Result<Self> {
        let report = lattice.check_involution(&map);
        match report.failure {
            None => Ok(Involution { map }),
            Some(f) => Err(Error::PreconditionViolated(format!("not an antitone involution: {}", f.message))),
        }
    }

    /// Wraps a table without checking it. Operations that "evaluate for any
    /// supplied map" accept these for negative experiments.
    pub fn unchecked(map: Vec<Elem>) -> Self {
        Involution { map }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn fixed_points(&self) -> Vec<Elem> {
        (0..self.map.len()).filter(|&x| self.map[x] == x).collect()
    }
}
