use std::collections::HashMap;

use num_traits::{One, Signed};

use super::{combinations, FanoPolytope, GeometryError};
use crate::algebra::Rational;
use crate::linalg;
use crate::parallel::Execution;

/// A maximal cone, given by the sorted indices of its ray generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaximalCone {
    generators: Vec<usize>,
}

impl MaximalCone {
    pub fn new(mut generators: Vec<usize>) -> Self {
        generators.sort_unstable();
        MaximalCone { generators }
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.generators.binary_search(&vertex).is_ok()
    }

    /// Generator matrix with the generators as rows.
    pub fn generator_rows(&self, q: &FanoPolytope) -> Vec<Vec<i64>> {
        self.generators.iter().map(|&i| q.vertex(i).to_vec()).collect()
    }
}

/// The face fan of a simplicial Fano polytope.
///
/// Cones are stored in lexicographic order of their facet normals `w`
/// (`<v, w> = -1` on the facet), which is also the vertex order of the polar
/// dual.
#[derive(Debug, Clone, PartialEq)]
pub struct Fan {
    polytope: FanoPolytope,
    cones: Vec<MaximalCone>,
    normals: Vec<Vec<Rational>>,
}

impl Fan {
    pub fn polytope(&self) -> &FanoPolytope {
        &self.polytope
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn cones(&self) -> &[MaximalCone] {
        &self.cones
    }

    /// Facet normal of cone `i`, the solution of `<v, w> = -1` on its
    /// generators.
    pub fn normal(&self, i: usize) -> &[Rational] {
        &self.normals[i]
    }

    pub fn cone_index(&self, cone: &MaximalCone) -> Option<usize> {
        self.cones.iter().position(|c| c == cone)
    }
}

pub fn build_fan(q: &FanoPolytope) -> Result<Fan, GeometryError> {
    build_fan_with(q, Execution::default())
}

/// Exhaustive facet enumeration over all `dim`-subsets of the vertices.
pub fn build_fan_with(q: &FanoPolytope, exec: Execution) -> Result<Fan, GeometryError> {
    let m = q.dim();
    let minus_one = vec![-Rational::one(); m];
    let subsets = combinations(q.vertices().len(), m);
    let candidates = exec.map(&subsets, |subset| {
        let rows: Vec<Vec<i64>> = subset.iter().map(|&i| q.vertex(i).to_vec()).collect();
        let w = linalg::solve(&linalg::from_ints(&rows), &minus_one)?;
        let mut on_facet = Vec::new();
        for (j, v) in q.vertices().iter().enumerate() {
            if subset.contains(&j) {
                continue;
            }
            let value = pairing(v, &w);
            if value < -Rational::one() {
                return None;
            }
            if value == -Rational::one() {
                on_facet.push(j);
            }
        }
        Some((subset.clone(), w, on_facet))
    });

    let mut facets = Vec::new();
    for (subset, w, extra) in candidates.into_iter().flatten() {
        if !extra.is_empty() {
            let mut vertices = subset;
            vertices.extend(extra);
            vertices.sort_unstable();
            return Err(GeometryError::NotSimplicial { vertices });
        }
        facets.push((w, MaximalCone::new(subset)));
    }
    if facets.is_empty() {
        return Err(GeometryError::OriginNotInterior);
    }
    facets.sort_by(|a, b| a.0.cmp(&b.0));

    // every ridge of a complete fan lies in exactly two maximal cones
    let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
    for (_, cone) in &facets {
        for skip in 0..m {
            let mut ridge = cone.generators().to_vec();
            ridge.remove(skip);
            *ridges.entry(ridge).or_default() += 1;
        }
    }
    if ridges.values().any(|&count| count != 2) {
        return Err(GeometryError::OriginNotInterior);
    }

    let (normals, cones) = facets.into_iter().unzip();
    Ok(Fan {
        polytope: q.clone(),
        cones,
        normals,
    })
}

pub(crate) fn pairing(v: &[i64], w: &[Rational]) -> Rational {
    v.iter()
        .zip(w)
        .map(|(&a, b)| b * Rational::from_integer(a.into()))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub smooth: bool,
    /// `(cone index, determinant)` for every cone with `|det| != 1`.
    pub offending: Vec<(usize, Rational)>,
}

pub fn smoothness_check(fan: &Fan) -> SmoothnessReport {
    let offending: Vec<(usize, Rational)> = fan
        .cones()
        .iter()
        .enumerate()
        .filter_map(|(i, cone)| {
            let det = linalg::determinant(&linalg::from_ints(&cone.generator_rows(fan.polytope())));
            (!det.abs().is_one()).then_some((i, det))
        })
        .collect();
    SmoothnessReport {
        smooth: offending.is_empty(),
        offending,
    }
}
