//! Algorithms for graphs without a k-fan: detection, extremal constructions,
//! spectral radius, small-order exhaustive search and lemma checks.

pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod fan;
pub mod formats;
pub mod graph;
pub mod lemmas;
pub mod matching;
pub mod maxcut;
pub mod quotient;
pub mod search;
pub mod spectral;

pub use constructions::{ex_fan, f_chvatal_hanson, ExValue, ExtremalSpec};
pub use error::{Error, Result};
pub use fan::{contains_fan, FanWitness};
pub use graph::{Graph, VertexSet};
pub use matching::MatchingResult;
pub use quotient::QuotientMatrix;
pub use spectral::{spectral_radius, SpectralResult};
