use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::{primitive, Fan, FanoPolytope, GeometryError, LatticeVector, MaximalCone};

/// The polar dual `P = { w : <v, w> >= -1 }` of a reflexive simplicial Fano
/// polytope, with its edge graph.
///
/// Vertex `j` is the facet normal of maximal cone `j` of the fan, so the
/// vertex order is the lexicographic order of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPolytope {
    vertices: Vec<LatticeVector>,
    cones: Vec<MaximalCone>,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<Vec<LatticeVector>>,
}

impl DualPolytope {
    pub fn dim(&self) -> usize {
        self.vertices.first().map_or(0, Vec::len)
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn cone_of_vertex(&self, j: usize) -> &MaximalCone {
        &self.cones[j]
    }

    /// Neighbor indices of vertex `j`, ascending.
    pub fn neighbors(&self, j: usize) -> &[usize] {
        &self.neighbors[j]
    }

    /// Primitive edge directions leaving vertex `j`, aligned with
    /// [`neighbors`](Self::neighbors).
    pub fn edge_generators(&self, j: usize) -> &[LatticeVector] {
        &self.edges[j]
    }

    pub fn index_of(&self, w: &[i64]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(w)).ok()
    }

    /// Componentwise bounds of the vertex coordinates.
    pub fn bounding_box(&self) -> Vec<(i64, i64)> {
        (0..self.dim())
            .map(|k| {
                let it = self.vertices.iter().map(|v| v[k]);
                (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
            })
            .collect()
    }
}

pub fn polar_dual(fan: &Fan) -> Result<DualPolytope, GeometryError> {
    let m = fan.dim();
    let mut vertices = Vec::with_capacity(fan.cones().len());
    for i in 0..fan.cones().len() {
        let w: Option<Vec<i64>> = fan
            .normal(i)
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten())
            .collect();
        vertices.push(w.ok_or(GeometryError::NotReflexive { cone: i })?);
    }

    let mut by_ridge: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (j, cone) in fan.cones().iter().enumerate() {
        for skip in 0..m {
            let mut ridge = cone.generators().to_vec();
            ridge.remove(skip);
            by_ridge.entry(ridge).or_default().push(j);
        }
    }
    let mut neighbors = vec![Vec::with_capacity(m); vertices.len()];
    for pair in by_ridge.values() {
        if let [a, b] = pair[..] {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
    }
    for list in &mut neighbors {
        list.sort_unstable();
    }
    let edges = neighbors
        .iter()
        .enumerate()
        .map(|(j, list)| {
            list.iter()
                .map(|&k| {
                    let diff: Vec<i64> = vertices[k]
                        .iter()
                        .zip(&vertices[j])
                        .map(|(a, b)| a - b)
                        .collect();
                    primitive(&diff)
                })
                .collect()
        })
        .collect();

    Ok(DualPolytope {
        vertices,
        cones: fan.cones().to_vec(),
        neighbors,
        edges,
    })
}

/// Rays `lambda_j = (v_j, 1)` and generators `mu_j = (w_j, 1)` of the cone
/// over `Q` and over its dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricDiagram {
    pub rays: Vec<LatticeVector>,
    pub generators: Vec<LatticeVector>,
}

pub fn toric_diagram(q: &FanoPolytope, p: &DualPolytope) -> ToricDiagram {
    let lift = |v: &LatticeVector| {
        let mut out = v.clone();
        out.push(1);
        out
    };
    ToricDiagram {
        rays: q.vertices().iter().map(lift).collect(),
        generators: p.vertices().iter().map(lift).collect(),
    }
}
