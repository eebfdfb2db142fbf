//! Finite residuated lattices, their twist-products, and the Kleene
//! candidate subsets `P_a(L)`.

pub mod error;
pub mod io;
pub mod kleene;
pub mod order;
pub mod report;
pub mod residuated;
pub mod search;
pub mod twist;

pub use error::{Error, Result};
pub use order::{validate_lattice, Carrier, Elem, FiniteLattice, Involution, OrderInput, Table};
pub use report::{CheckReport, Failure};
pub use residuated::{MVAlgebra, ResiduatedStructure};
pub use twist::{Flavor, Pair, TwistAlgebra};
