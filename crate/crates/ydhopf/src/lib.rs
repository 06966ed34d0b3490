//! Exact computational engine for braided Hopf algebras in Yetter-Drinfeld
//! categories over finite abelian group algebras, with mechanical
//! verification of the smash-product duality (R#H)#H^d = R(x)(H#H^d) and of
//! the Yetter-Drinfeld structure on Hom(V,W). All arithmetic is in a prime
//! field, so every check is an exact matrix identity with zero tolerance.
//!
//! Layering, bottom up: [`field`]/[`group`]/[`linalg`] provide the exact
//! substrate; [`yd`] and [`morphism`] the category (graded objects with
//! action, sparse maps, braiding); [`expr`] the diagram-term compiler;
//! [`hopf`], [`dual`], [`harpoon`], [`smash`], [`homyd`] the algebraic
//! structures; [`duality`] the theorem machinery; [`qta`] the generated
//! example family; [`fileio`], [`report`], [`cli`] the reproducibility
//! surface.

pub mod cli;
pub mod dual;
pub mod duality;
pub mod error;
pub mod expr;
pub mod field;
pub mod fileio;
pub mod group;
pub mod harpoon;
pub mod homyd;
pub mod hopf;
pub mod linalg;
pub mod morphism;
pub mod qta;
pub mod report;
pub mod smash;
pub mod yd;
pub mod ydcond;

pub use error::{Error, Result};
pub use field::{primitive_root_of_unity, Field, Scalar};
pub use group::{Character, Group, GroupElem};
pub use linalg::FpMat;
pub use morphism::{solve_left_inverse, LinearMorphism};
pub use yd::{Context, TensorWord, YdObject};
