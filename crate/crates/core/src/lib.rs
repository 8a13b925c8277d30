//! Genomic Schur functions of two-row shapes and their 0-Hecke modules.
//!
//! The crate enumerates standard and increasing gapless tableaux, builds the
//! two tableau modules of the 0-Hecke algebra, runs the descent-preserving
//! bijection to standard tableaux in both directions, splits increasing
//! gapless tableaux into genome classes, and checks that those classes stack
//! into a filtration of the gapless module whose quotients are modules on
//! standard tableaux.
//!
//! ```
//! use genomic_schur::{bijection::phi, tableau::Tableau};
//!
//! let t: Tableau = "1 2 4 5 / 2 3 5 6".parse().unwrap();
//! assert_eq!(phi(&t).unwrap().output.to_string(), "1 4 / 2 5 / 3 / 6");
//! ```

pub mod bijection;
pub mod combinatorics;
pub mod error;
pub mod genome;
pub mod hecke;
pub mod qsym;
pub mod tableau;
pub mod verify;

pub use combinatorics::{Cell, Composition, Family, Partition, TwoRowPartition};
pub use error::{Error, Result};
pub use qsym::QSymExpr;
pub use tableau::Tableau;
