//! Arithmetic, set algebra and incidence geometry over finite valuation rings
//! `Z/p^r Z` and `F_q[x]/(x^r)`, with exact checks of sum-product, expander,
//! incidence and collinearity bounds.
//!
//! ```
//! use fvr::ring::Ring;
//! use fvr::setalg::{sumset, RSet};
//!
//! let ring = Ring::parse("zpr:p=3,r=2").unwrap();
//! let a = RSet::parse(&ring, "1,2,4").unwrap();
//! assert_eq!(sumset(&a, &a).unwrap().to_string(), "2,3,4,5,6,8");
//! ```

pub mod checks;
pub mod error;
pub mod experiment;
pub mod geometry;
pub mod incidence;
pub mod ring;
pub mod setalg;

pub use error::{Error, Result};
