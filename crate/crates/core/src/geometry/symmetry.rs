use std::collections::HashSet;

use num_traits::{One, Signed};

use super::{Fan, GeometryError};
use crate::linalg;

/// Whether the unimodular matrix `g` (row-major, acting on column vectors
/// of `N`) permutes the vertex set of the polytope.
pub fn verify_symmetry(fan: &Fan, g: &[Vec<i64>]) -> Result<bool, GeometryError> {
    let m = fan.dim();
    if g.len() != m || g.iter().any(|row| row.len() != m) {
        return Err(GeometryError::MatrixShape { dim: m });
    }
    let det = linalg::determinant(&linalg::from_ints(g));
    if !det.abs().is_one() {
        return Err(GeometryError::NotUnimodular {
            det: det.to_string(),
        });
    }
    let vertices: HashSet<&[i64]> = fan.polytope().vertices().iter().map(Vec::as_slice).collect();
    Ok(fan.polytope().vertices().iter().all(|v| {
        let image: Vec<i64> = g.iter().map(|row| super::dot(row, v)).collect();
        vertices.contains(image.as_slice())
    }))
}
