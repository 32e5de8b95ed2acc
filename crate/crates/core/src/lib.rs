//! Exact computations with monomial ideals: saturations and symbolic
//! multi-powers, torsion lengths and their asymptotic fits, Newton polyhedra,
//! and Castelnuovo–Mumford regularity.

pub mod asymptotics;
pub mod checks;
pub mod dsl;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod ideal;
pub mod lp;
pub mod multi;
pub mod poly;
pub mod random;
pub mod regularity;
pub mod ring;
pub mod saturation;

pub use error::{Error, Result};
pub use ideal::{minimalize, multi_power, MonomialIdeal};
pub use multi::MultiIndex;
pub use poly::SparsePoly;
pub use ring::{Exponent, RingCtx};
pub use saturation::IdealFamily;
