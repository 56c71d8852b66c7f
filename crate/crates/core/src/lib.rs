//! Executable companions to the slice-rank analysis of the group-theoretic
//! approach to fast matrix multiplication: group algebras over `F_p`, the
//! Jennings series, slice-rank bounds, exact rank oracles for small tensors,
//! triple product property checks and matching constructions.

pub mod error;
pub mod group;
pub mod group_algebra;
pub mod groupspec;
pub mod jennings;
pub mod linalg;
pub mod matchings;
pub mod numeric;
pub mod slice_bounds;
pub mod tensor_rank;
pub mod tpp_omega;
pub mod verdict;
pub mod young;

pub use error::{Error, Result};
pub use group::{Element, Group, QuotientData, Subgroup};
pub use groupspec::GroupSpec;
pub use jennings::{DegreeHistogram, JenningsSeries, PDegreeVector};
pub use linalg::{PrimeField, Subspace};
pub use matchings::{AnyMatching, BorderMatching, Matching};
pub use tensor_rank::Tensor3;
pub use tpp_omega::{StppInstance, TppInstance};
pub use verdict::{Budget, Verdict};
