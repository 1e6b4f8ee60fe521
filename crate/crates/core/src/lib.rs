//! Exact calculator for Gysin pushforwards along isotropic Schubert bundles
//! and their flag-bundle models.
//!
//! The crate evaluates universal pushforward formulas for symplectic and
//! even-orthogonal Grassmann bundles by multivariate Laurent-polynomial
//! coefficient extraction, entirely in exact integer arithmetic. Two
//! independent routes (the closed kernel and a step-by-step tower recursion)
//! cross-check each other, and the underlying strict-partition combinatorics
//! is exposed on its own.
//!
//! ```
//! use gysin_core::{AmbientShape, ChernModel, InputClass, StrictPartition};
//! use gysin_core::gysin::gysin_closed;
//!
//! // degree of the Lagrangian Grassmannian of a 4-space (a quadric threefold)
//! let shape = AmbientShape::symplectic(2, 2)?;
//! let model = ChernModel::trivial(shape);
//! let mu = StrictPartition::new(vec![4, 3])?;
//! let t1 = InputClass::variable(2, 0)?;
//! let t2 = InputClass::variable(2, 1)?;
//! let result = gysin_closed(&model, &mu, &t1.add(&t2).pow(3))?;
//! assert_eq!(result.value, gysin_core::GradedPolynomial::from_int(2));
//! # Ok::<(), gysin_core::Error>(())
//! ```

pub mod chern_models;
pub mod error;
pub mod graded_ring;
pub mod gysin;
pub mod laurent;
pub mod partitions;

pub use chern_models::{ChernModel, ModelVariant};
pub use error::{Error, Result};
pub use graded_ring::{GradedPolynomial, Generator, Homogeneity, Monomial};
pub use gysin::{
    gysin_closed, gysin_schubert, gysin_tower, halve_components, GysinResult, InputClass, Route,
};
pub use laurent::LaurentPolynomial;
pub use partitions::{
    AmbientShape, FibrationProfile, FormType, OrdinaryPartition, PartitionProfile, StrictPartition,
};
