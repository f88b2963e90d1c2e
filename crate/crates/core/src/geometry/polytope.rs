use serde::{Deserialize, Serialize};

use super::{gcd_of, GeometryError};

/// An integer point of the lattice `N = Z^m`.
pub type LatticeVector = Vec<i64>;

/// The on-disk polytope description.
///
/// `vertices` holds one vertex per entry, each a list of `dim` integers
/// (i.e. the vertices are the *columns* of the usual vertex matrix, written
/// out as rows).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub dim: usize,
    pub vertices: Vec<LatticeVector>,
    #[serde(default)]
    pub name: Option<String>,
}

/// A lattice polytope given by its primitive, pairwise distinct vertices.
///
/// Whether the origin is interior is only known once the fan is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoPolytope {
    dim: usize,
    vertices: Vec<LatticeVector>,
    name: Option<String>,
}

impl FanoPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[i64] {
        &self.vertices[i]
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn to_document(&self) -> PolytopeDocument {
        PolytopeDocument {
            dim: self.dim,
            vertices: self.vertices.clone(),
            name: self.name.clone(),
        }
    }
}

pub fn load_polytope(doc: &PolytopeDocument) -> Result<FanoPolytope, GeometryError> {
    let dim = doc.dim;
    if dim == 0 {
        return Err(GeometryError::ZeroDimension);
    }
    for (index, v) in doc.vertices.iter().enumerate() {
        if v.len() != dim {
            return Err(GeometryError::RaggedVertex {
                index,
                expected: dim,
                found: v.len(),
            });
        }
        let gcd = gcd_of(v);
        if gcd != 1 {
            return Err(GeometryError::NotPrimitive { index, gcd });
        }
    }
    for (i, a) in doc.vertices.iter().enumerate() {
        if let Some(j) = doc.vertices[i + 1..].iter().position(|b| a == b) {
            return Err(GeometryError::DuplicateVertex {
                first: i,
                second: i + 1 + j,
            });
        }
    }
    if doc.vertices.len() <= dim {
        return Err(GeometryError::TooFewVertices {
            dim,
            needed: dim + 1,
            found: doc.vertices.len(),
        });
    }
    Ok(FanoPolytope {
        dim,
        vertices: doc.vertices.clone(),
        name: doc.name.clone(),
    })
}
