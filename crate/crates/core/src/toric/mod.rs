//! Moment polygons of toric surfaces, their fans and the Fano classification.

mod fan;
mod models;
mod polytope;

pub use fan::{Fan, FanoClass, FanoTag, FanoWitness, MinimalCone};
pub use models::{model_params, standard_model};
pub use polytope::{Facet, MomentPolytope, Orientation, Point, Validation};

use crate::error::Result;

/// Classifies a validated Fano polygon among the five templates.
pub fn classify_fano(p: &MomentPolytope) -> Result<FanoClass> {
    Fan::of(p).classify()
}
