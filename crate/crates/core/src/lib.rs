//! Exact computational workbench for intertwining modules, Hecke algebras
//! and contragredient representations of finite groups.
//!
//! Everything is computed over exact fields (prime fields, small extension
//! fields, the rationals), so every identity checked by the crate is an
//! exact equality rather than a numerical approximation. The main layers:
//!
//! * [`field`] / [`matrix`] — exact scalars and deterministic linear algebra;
//! * [`group`] — enumerated finite groups, cosets and double cosets;
//! * [`rep`] — matrix representations: duals, Hom spaces, induction,
//!   composition factors, isotypic socles and coquotients;
//! * [`hecke`] — the intertwining algebra of a pair `(G, K, ϱ)` with its
//!   convolution, anti-involution, module actions and pairing;
//! * [`semisimple`] — deciders for the socle-versus-coquotient semisimplicity
//!   conditions and their transfer properties;
//! * [`sample`] — seeded random module constructions for property tests.

pub mod error;
pub mod field;
pub mod group;
pub mod hecke;
pub mod matrix;
pub mod meataxe;
pub mod radical;
pub mod rep;
pub mod sample;
pub mod semisimple;

pub use error::{FieldError, GroupError, HeckeError, RepError};
pub use field::{Field, Scalar};
pub use group::{DoubleCosetSystem, GroupTable, SubgroupHandle, DEFAULT_ORDER_CAP};
pub use matrix::{Matrix, RowSpace};
pub use rep::{HomSpace, Representation};
