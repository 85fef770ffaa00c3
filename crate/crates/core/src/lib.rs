//! Homological invariants of finite-dimensional bound quiver algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`quiver`]: quivers, paths and the graph analyses (SCCs, `Q^∞`, final subhearts).
//! * [`algebra`]: bound quiver algebras `kQ/I` for truncated, monomial and linear ideals.
//! * [`pathcalc`]: the combinatorial syzygy calculus of path modules `Ap`.
//! * [`linrep`]: exact linear algebra on quiver representations (Hom, iso, syzygies).
//! * [`homgor`]: perfect paths, Gorenstein-projectives, periodicity and Co-Gorenstein verdicts.
//! * [`itphi`]: the Igusa–Todorov φ function and φ-dimension bounds.
//! * [`format`], [`corpus`], [`shell`]: file formats, the embedded example corpus and the CLI driver.
//!
//! Modules are LEFT modules throughout. Paths are stored in traversal order; the
//! algebra product `p·q` (written `pq`) means "traverse `q`, then `p`".

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod field;
pub mod format;
pub mod homgor;
pub mod itphi;
pub mod linrep;
pub mod matrix;
pub mod pathcalc;
pub mod quiver;
pub mod random;
pub mod shell;

use std::fmt;

pub use error::{Error, Result};

/// A natural number or infinity; used for path lengths and homological dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    Finite(usize),
    Infinite,
}

impl Dim {
    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(n) => Some(n),
            Dim::Infinite => None,
        }
    }

    pub fn succ(self) -> Dim {
        match self {
            Dim::Finite(n) => Dim::Finite(n + 1),
            Dim::Infinite => Dim::Infinite,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::Infinite => write!(f, "inf"),
        }
    }
}
