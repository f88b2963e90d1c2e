use super::{load_polytope, FanoPolytope, PolytopeDocument};

/// Vertex matrix of the seven-dimensional example, one row per coordinate
/// and one column per vertex `v_1 .. v_12`.
const NILL_PAFFENHOLZ_ROWS: [[i64; 12]; 7] = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
    [0, 0, 0, -1, -1, -1, 0, 0, 0, 2, 1, -1],
];

pub fn builtin_names() -> &'static [&'static str] {
    &["nill-paffenholz", "p1", "p2", "p1xp1", "p1cubed"]
}

/// One of the bundled polytopes, by name.
pub fn builtin(name: &str) -> Option<FanoPolytope> {
    let vertices: Vec<Vec<i64>> = match name {
        "nill-paffenholz" => (0..12)
            .map(|col| NILL_PAFFENHOLZ_ROWS.iter().map(|row| row[col]).collect())
            .collect(),
        "p1" => vec![vec![1], vec![-1]],
        "p2" => vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
        "p1xp1" => vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        "p1cubed" => (0..3)
            .flat_map(|k| {
                [1, -1].map(|sign| {
                    let mut v = vec![0; 3];
                    v[k] = sign;
                    v
                })
            })
            .collect(),
        _ => return None,
    };
    let doc = PolytopeDocument {
        dim: vertices[0].len(),
        vertices,
        name: Some(name.to_string()),
    };
    Some(load_polytope(&doc).expect("bundled polytope is valid"))
}

/// Coordinate permutations of `N = Z^7` known to preserve the
/// seven-dimensional example (as row-major permutation matrices).
pub fn nill_paffenholz_symmetries() -> Vec<Vec<Vec<i64>>> {
    let swaps: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
    swaps
        .iter()
        .map(|&(a, b)| {
            (0..7)
                .map(|i| {
                    let src = if i == a {
                        b
                    } else if i == b {
                        a
                    } else {
                        i
                    };
                    (0..7).map(|j| i64::from(j == src)).collect()
                })
                .collect()
        })
        .collect()
}

/// Display labels for the torus parameters of a `dim`-dimensional fan.
/// The seven-dimensional case uses `a1 a2 a3 b1 b2 b3 c`.
pub fn parameter_labels(dim: usize) -> Vec<String> {
    if dim == 7 {
        ["a1", "a2", "a3", "b1", "b2", "b3", "c"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (1..=dim).map(|i| format!("x{i}")).collect()
    }
}
