//! Fano polytopes, their fans, polar duals and toric diagrams.

mod datasets;
mod dual;
mod fan;
mod polytope;
mod symmetry;

pub use datasets::{builtin, builtin_names, nill_paffenholz_symmetries, parameter_labels};
pub use dual::{polar_dual, toric_diagram, DualPolytope, ToricDiagram};
pub use fan::{build_fan, build_fan_with, smoothness_check, Fan, MaximalCone, SmoothnessReport};
pub use polytope::{load_polytope, FanoPolytope, LatticeVector, PolytopeDocument};
pub use symmetry::verify_symmetry;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("vertex {index} has {found} entries, expected {expected}")]
    RaggedVertex {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {index} is not primitive (gcd of entries is {gcd})")]
    NotPrimitive { index: usize, gcd: i64 },
    #[error("vertices {first} and {second} coincide")]
    DuplicateVertex { first: usize, second: usize },
    #[error("need at least {needed} vertices in dimension {dim}, found {found}")]
    TooFewVertices {
        dim: usize,
        needed: usize,
        found: usize,
    },
    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,
    #[error("polytope not simplicial (facet through vertices {vertices:?} and more)")]
    NotSimplicial { vertices: Vec<usize> },
    #[error("polytope not reflexive (dual vertex of cone {cone} is not integral)")]
    NotReflexive { cone: usize },
    #[error("fan is not smooth: {count} maximal cone(s) have |det| != 1")]
    NotSmooth { count: usize },
    #[error("symmetry matrix must be {dim}x{dim}")]
    MatrixShape { dim: usize },
    #[error("symmetry matrix is not unimodular (det = {det})")]
    NotUnimodular { det: String },
    #[error("lattice coordinate overflow")]
    Overflow,
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn gcd_of(v: &[i64]) -> i64 {
    v.iter()
        .fold(0i64, |g, &x| num_integer::Integer::gcd(&g, &x))
}

/// The primitive lattice vector on the ray through `v` (nonzero `v`).
pub(crate) fn primitive(v: &[i64]) -> Vec<i64> {
    let g = gcd_of(v);
    v.iter().map(|x| x / g).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
