//! Pointwise best-possible bounds on the set of bivariate copulas with a
//! prescribed value `t` of Gini's gamma.
//!
//! The crate is split in three layers:
//!
//! - [`copula`], [`quadrature`], [`lattice`], [`rank`]: evaluators for the
//!   Fréchet–Hoeffding bounds, the product copula and the point-constrained
//!   bound copulas, C-volumes, a Simpson rule for Gini's gamma, grid-based
//!   copula / quasi-copula property checks and the sample rank coefficient.
//! - [`bounds`]: the closed-form machinery. Five candidate values `θ₁..θ₅`,
//!   the regions where each one binds, the upper bound `Ḡ_t` and the lower
//!   bound `G̲_t`, the piecewise gamma of the lower point-bound copula, the
//!   classification of the bounds and a witness copula that attains `Ḡ_t`.
//! - [`oracle`]: an exact linear program over checkerboard copulas that
//!   bounds `Ḡ_t` from below and `G̲_t` from above, used for certification.
//!
//! ```
//! use gini_core::bounds::{upper_bound, lower_bound, GammaTarget};
//! use gini_core::copula::UnitPoint;
//!
//! let p = UnitPoint::new(0.5, 0.5).unwrap();
//! let t = GammaTarget::new(0.0).unwrap();
//! let up = upper_bound(p, t).bound;
//! assert!((up - 6f64.sqrt() / 6.0).abs() < 1e-12);
//! assert!((lower_bound(p, t) - (0.5 - 6f64.sqrt() / 6.0)).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod copula;
pub mod error;
pub mod format;
pub mod lattice;
pub mod oracle;
pub mod quadrature;
pub mod rank;

pub use error::{Error, Result};
