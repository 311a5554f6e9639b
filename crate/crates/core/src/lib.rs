//! Soft rough approximations of soft sets over finite approximation spaces.
//!
//! A [`SoftSet`] maps attributes to subsets of a [`Universe`]; a [`Partition`]
//! of that universe (the quotient of an indiscernibility relation) induces
//! attribute-wise lower and upper approximations. On top of these sit exact
//! accuracy and roughness measures ([`measures`]), six entropy measures
//! ([`entropy`]), a brute-force claim checker ([`oracle`]) and a pixel-grid
//! demonstration of overlap detection ([`gridlab`]).
//!
//! ```
//! use softrough::{approx, measures, Partition, SoftSet, Universe};
//!
//! let x = Universe::new(["a", "b", "c", "d"]).unwrap();
//! let p = Partition::from_blocks(&x, &[["a", "b"], ["c", "d"]]).unwrap();
//! let s = SoftSet::from_labels(
//!     &x,
//!     &[("a1", vec!["a", "b", "d"]), ("a2", vec!["b", "c", "d"]), ("a3", vec!["c"])],
//! )
//! .unwrap();
//! let rough = approx::soft_rough(&p, &s).unwrap();
//! assert!(rough.boundary().total.is_full());
//! assert_eq!(measures::accuracy_pawlak(&p, &s).unwrap(), softrough::Ratio::new(2, 5));
//! ```

pub mod approx;
pub mod entropy;
pub mod error;
pub mod examples;
pub mod fmt;
pub mod gridlab;
pub mod measures;
pub mod oracle;
pub mod set;
pub mod softset;
pub mod space;

pub use error::{Error, Result, Undefined};
pub use set::ElementSet;
pub use softset::{Family, ProductSoftSet, SoftSet, SpecialClass};
pub use space::{Partition, Universe};

/// Exact ratio used by every accuracy and roughness measure.
pub type Ratio = num_rational::Ratio<u64>;

pub type Beta64 = entropy::Beta<f64>;
pub type Beta32 = entropy::Beta<f32>;
pub type EntropyReport64 = entropy::EntropyReport<f64>;
pub type EntropyReport32 = entropy::EntropyReport<f32>;
