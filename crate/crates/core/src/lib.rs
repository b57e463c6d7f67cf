//! Exact Schubert calculus for Grassmannians `Gr(k, n)` and complete flag
//! varieties `Fl(n)`.
//!
//! Every quantity is computed with arbitrary-precision integers or rationals.
//! Most results are reachable by two unrelated routes (for instance divided
//! differences versus pipe dreams for Schubert polynomials, or face volumes
//! versus Ehrhart counts for degrees), and the test suite checks them against
//! each other.
//!
//! Module map:
//!
//! * [`comb`]: partitions, tableaux, permutations, Bruhat order.
//! * [`poly`]: exact multivariate polynomials, derivatives, divided differences.
//! * [`schur`]: Schur polynomials, Pieri sets, Littlewood–Richardson coefficients.
//! * [`grassmannian`]: the Schubert basis of `H*(Gr(k, n))`, degrees, Plücker quadrics.
//! * [`flag`]: Schubert polynomials, Monk's rule and structure constants of `H*(Fl(n))`.
//! * [`pipedream`]: reduced pipe dreams and the monomial sum over them.
//! * [`gz`]: Gelfand–Zetlin patterns, Kogan faces, Demazure characters, volumes.
//! * [`cli`]: the command-line front end used by the `schubert` binary.

pub mod cli;
pub mod comb;
pub mod error;
pub mod flag;
pub mod grassmannian;
pub mod gz;
pub mod pipedream;
pub mod poly;
pub mod schur;

pub use comb::{
    partition::{Partition, Rect},
    permutation::{Permutation, ReducedWord},
    tableau::Tableau,
};
pub use error::{Error, Result};
pub use flag::{FlClassSum, SchubertPoly};
pub use grassmannian::GrClassSum;
pub use gz::{FormalCharacter, GzPattern, KoganFace, Weight};
pub use pipedream::PipeDream;
pub use poly::{DiffOperator, MultiPoly};
pub use schur::SchurExpansion;

