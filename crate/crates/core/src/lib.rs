//! Mod-p homology of classifying spaces of gauge groups.
//!
//! For a simply-connected simple compact Lie group `G` and the principal
//! `G`-bundle over `S^4` with second Chern class `k`, the gauge group `G_k`
//! sits in a fibration `Omega^3 G<3> -> BG_k -> BG`. This crate presents the
//! mod-p homology of the spaces involved as free graded-commutative algebras
//! and computes their Poincaré series exactly:
//!
//! * [`series`]: truncated power series with big-integer coefficients.
//! * [`algebra`]: generator presentations, tensor products, quotients by a
//!   free generator, and a monomial-counting oracle.
//! * [`groups`]: Lie group types and the `--group` spec grammar.
//! * [`catalog`]: the loop-space presentations, `H_*(BG_k)` and regime logic.
//! * [`document`] and [`cli`]: the `bgk` command-line front end.
//!
//! Only vector-space dimensions are modelled. Products, coproducts and
//! Steenrod operations are not.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod document;
pub mod groups;
pub mod prime;
pub mod series;

pub use algebra::{AlgebraError, AlgebraPresentation, Family, Generator, Kind};
pub use catalog::{
    anick_t, bgk_homology, classifying_space_bg, group_g, loops2_sphere_2pminus1, loops3_g3,
    loops3_sphere, mh_odd, su2_mod3_bgk, verdict, CatalogError, Regime, Verdict,
};
pub use groups::{lookup, parse_spec, GroupError, GroupType};
pub use prime::{OddPrime, PrimeError};
pub use series::{PowerSeries, SeriesError};
