//! Windowed module constructions: highest-weight data, Verma windows with their
//! contravariant forms, ŝl₂ embeddings, vacuum windows and the ideal J(ℓ,0).

use thiserror::Error;

pub mod sl2;
pub mod vacuum;
pub mod verma;
pub mod weights;

pub use sl2::{sl2_embedding, sl2_vacuum_windows, Root, Sl2Embedding, Sl2Kind, Sl2VacuumReport};
pub use vacuum::{ideal_window, IdealWindowReport};
pub use weights::{highest_weight_action, triples_equivalent, validate_triple, TripleCheck, WeightData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("{0} is not in the Cartan part 𝓗")]
    NotInCartan(String),
    #[error("invalid weight data: {0}")]
    InvalidTriple(String),
    #[error("ŝl₂ relation check failed: {0}")]
    RelationFailure(String),
}
