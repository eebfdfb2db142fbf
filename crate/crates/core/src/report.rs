//! Outcome of an axiom, hypothesis or theorem check.

use std::fmt;

use crate::order::Elem;

/// Why a check failed. `witness` holds element indices in the carrier the
/// check ran over (pair-lattice indices for twist-product checks), so a
/// failure can be re-evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub clause: String,
    pub witness: Vec<Elem>,
    pub message: String,
}

/// Pass, or fail with the lexicographically first witness. Composite checks
/// carry their parts as `children`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub failure: Option<Failure>,
    pub children: Vec<CheckReport>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            failure: None,
            children: Vec::new(),
        }
    }

    pub fn fail(
        name: impl Into<String>,
        clause: impl Into<String>,
        witness: Vec<Elem>,
        message: impl Into<String>,
    ) -> Self {
        CheckReport {
            name: name.into(),
            failure: Some(Failure {
                clause: clause.into(),
                witness,
                message: message.into(),
            }),
            children: Vec::new(),
        }
    }

    /// A report that passes iff every child passes; the failure is copied
    /// from the first failing child.
    pub fn all(name: impl Into<String>, children: Vec<CheckReport>) -> Self {
        let failure = children
            .iter()
            .find_map(|c| c.failure.as_ref().map(|f| (c.name.clone(), f.clone())))
            .map(|(child, f)| Failure {
                clause: if f.clause.is_empty() {
                    child
                } else {
                    format!("{child}: {}", f.clause)
                },
                ..f
            });
        CheckReport {
            name: name.into(),
            failure,
            children,
        }
    }

    /// Boolean flag as a report; `message` explains a `false`.
    pub fn flag(name: impl Into<String>, holds: bool, witness: Vec<Elem>, message: impl Into<String>) -> Self {
        let name = name.into();
        if holds {
            CheckReport::pass(name)
        } else {
            CheckReport::fail(name, "", witness, message)
        }
    }

    pub fn with_children(mut self, children: Vec<CheckReport>) -> Self {
        self.children = children;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn witness(&self) -> Option<&[Elem]> {
        self.failure.as_ref().map(|f| f.witness.as_slice())
    }

    pub fn message(&self) -> Option<&str> {
        self.failure.as_ref().map(|f| f.message.as_str())
    }

    pub fn child(&self, name: &str) -> Option<&CheckReport> {
        self.children.iter().find(|c| c.name == name)
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match &self.failure {
            None => writeln!(f, "{pad}{}: pass", self.name)?,
            Some(fail) if fail.message.is_empty() => writeln!(f, "{pad}{}: fail", self.name)?,
            Some(fail) => writeln!(f, "{pad}{}: fail ({})", self.name, fail.message)?,
        }
        for c in &self.children {
            c.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}
