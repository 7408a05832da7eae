//! Numerical semigroups, their ideals and numerical duplications.
//!
//! The crate computes Apéry sets, orders, factorization lengths and
//! microinvariants, and decides the tangent-cone properties of monomial
//! curves numerically: Cohen-Macaulay, Gorenstein and complete-intersection
//! associated graded rings, M-purity, symmetry and homogeneity. The
//! [`validate`] module sweeps an enumerated corpus and checks that every
//! duplication criterion agrees with the property computed directly on the
//! duplicated semigroup.

pub mod analysis;
pub mod corpus;
pub mod duplication;
pub mod error;
pub mod homogeneity;
pub mod ideal;
pub mod limits;
pub mod report;
pub mod search;
pub mod semigroup;
pub mod tangent_cone;
pub mod validate;
pub mod verdict;
pub mod window;

pub use duplication::{duplicate, sumset_shift, DuplicationInput};
pub use error::{Error, Result};
pub use ideal::{RelativeIdeal, SemigroupIdeal};
pub use semigroup::{Factorization, NumericalSemigroup};
pub use tangent_cone::AperyProfile;
pub use verdict::{DupVerdict, PropertyReport, Verdict, Witness};
