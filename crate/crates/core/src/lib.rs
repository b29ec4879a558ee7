//! Cobordism invariants of knots in thickened surfaces.
//!
//! Knots are given as signed Gauss codes (`"O1+ O2+ U1+ U2+"`). From a code the
//! crate builds the Carter surface as a ribbon graph, computes the distinguished
//! halves of the diagram and their homological intersection numbers, and derives
//! the polynomials `u+`/`u-`, the graded matrix `T(D)` and its primitive
//! reduction, covering knots, the graded genus, cobordism certificates and slice
//! obstructions. All arithmetic is exact.
//!
//! ```
//! use knotcob::diagram::GaussCode;
//! use knotcob::fatgraph::build_carter;
//! use knotcob::invariants::u_polynomials;
//!
//! let code: GaussCode = "O1+ O2+ U1+ U2+".parse().unwrap();
//! let d = build_carter(&code);
//! let (up, um) = u_polynomials(&d);
//! assert_eq!(up.to_string(), "t");
//! assert_eq!(um.to_string(), "t");
//! ```

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod diagram;
pub mod error;
pub mod fatgraph;
pub mod fuzz;
pub mod graded;
pub mod invariants;
pub mod linalg;
pub mod slice;

mod sign;

pub use error::Error;
pub use sign::Sign;
