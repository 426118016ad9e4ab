//! Interval-valued intuitionistic fuzzy numbers (IVIFNs) with exact arithmetic.
//!
//! The crate provides
//!
//! - [`Ivifn`] and its statistics ([`StatVector`]): score, accuracy, the three
//!   entropies and the two uncertainty indices;
//! - the two lexicographic total orders selected by [`OrderSelector`], the
//!   containment order [`subset_leq`] and [`rank`];
//! - suprema and infima of arbitrary families described by [`ChainStats`],
//!   plus finite [`join`] and [`meet`];
//! - finite IVIFS with cut sets, decomposition and Zadeh's extension ([`Ivifs`]);
//! - a brute-force [`oracle`] used to check all of the above.
//!
//! ```
//! use ivifn::{compare, Ivifn, OrderSelector};
//! use std::cmp::Ordering;
//!
//! let a = Ivifn::from_ratios((3, 10), (3, 10), (1, 10), (5, 10)).unwrap();
//! let b = Ivifn::from_ratios((3, 20), (9, 20), (3, 10), (3, 10)).unwrap();
//! assert_eq!(compare(&a, &b, OrderSelector::Hzx).relation, Ordering::Greater);
//! assert_eq!(compare(&a, &b, OrderSelector::Wlw).relation, Ordering::Less);
//! ```

#![allow(clippy::result_large_err)]

pub mod chain;
pub mod ivifn;
pub mod ivifs;
pub mod oracle;
pub mod order;
pub mod rational;

pub use chain::{
    from_stats, infimum, join, level_statistics, lower_level_statistics, meet, supremum,
    ChainError, ChainStats, Level,
};
pub use ivifn::{Field, Ivifn, StatVector, ValidationError};
pub use ivifs::{Ivifs, IvifsError};
pub use order::{
    compare, extremes, rank, subset_leq, xu_compare, ComparisonOutcome, DecidedAt, OrderSelector,
    RankError, RankedItem,
};
pub use rational::{ParseRationalError, Rational};
