//! Combinatorial invariants of hyperplane arrangements and the monodromy
//! data of their Milnor fibers, in exact arithmetic.
//!
//! * [`lattice`]: intersection lattice, Möbius values, Betti numbers,
//!   dense edges.
//! * [`bounds`]: which eigenvalue orders each homology degree admits.
//! * [`zeta`]: the monodromy zeta function.
//! * [`lines`]: the exact spectrum on `H_1` for line arrangements, via
//!   superabundance of curve systems through the vertices.
//! * [`section`]: generic plane sections with a certified flat bijection.
//!
//! ```
//! use milnor_core::{builtin, build_lattice, admissible_orders};
//! use milnor_core::lines::spectrum;
//!
//! let l = build_lattice(&builtin::braid(3)?);
//! assert_eq!(admissible_orders(&l, 1, true)?, vec![1, 3]);
//!
//! let r = spectrum(&build_lattice(&builtin::triangle_medians()))?;
//! assert_eq!(r.charpoly, "(t-1)^5 (t^2+t+1)^1");
//! # Ok::<(), milnor_core::Error>(())
//! ```

pub mod arrangement;
pub mod bounds;
pub mod builtin;
pub mod eigen;
pub mod error;
pub mod lattice;
pub mod lines;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod section;
pub mod zeta;

pub use arrangement::{parse_arrangement, Arrangement, LinearForm};
pub use bounds::{admissible_orders, bounds_report, BoundsReport};
pub use eigen::EigenvalueSpectrum;
pub use error::{Error, Result};
pub use lattice::{build_lattice, Flat, IntersectionLattice};
pub use lines::{ExponentConvention, LineSystem, SpectrumReport, SuperabundanceCertificate};
pub use poly::IntPolynomial;
pub use scalar::{Rational, Scalar};
pub use section::{generic_section, Section};
pub use zeta::{zeta_function, CycloExpression};
