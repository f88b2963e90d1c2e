//! Shared fixtures for the seven-dimensional example.
#![allow(dead_code)]

use toric_chow::algebra::{LinearForm, Rational};
use toric_chow::geometry::MaximalCone;

const LABELS: [&str; 7] = ["a_1", "a_2", "a_3", "b_1", "b_2", "b_3", "c"];

/// Parses weights such as `c-a_1-a_3+2b_2` over the seven torus parameters.
pub fn parse_weight(text: &str) -> LinearForm {
    let mut form = LinearForm::zero();
    let mut rest = text;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body[1..].find(['+', '-']).map_or(body.len(), |i| i + 1);
        let term = &body[..end];
        let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
        let coeff: i64 = if digits == 0 { 1 } else { term[..digits].parse().unwrap() };
        let label = &term[digits..];
        let index = LABELS.iter().position(|l| *l == label).unwrap_or_else(|| panic!("label {label}"));
        form = form.add(&LinearForm::variable(index).scale(&Rational::from_integer((sign * coeff).into())));
        rest = &body[end..];
    }
    form
}

/// Zero-based cone for a fixed point: signs of the three `x` factors, the
/// `y = p_k` factor and the sign of `z`.
pub fn fixed_point_cone(x_signs: &str, k: usize, z_positive: bool) -> MaximalCone {
    let mut gens: Vec<usize> = x_signs
        .chars()
        .enumerate()
        .map(|(i, s)| if s == '+' { i + 1 } else { 6 - i })
        .collect();
    gens.extend(match k {
        1 => [8, 9, 10],
        2 => [7, 9, 10],
        3 => [7, 8, 10],
        _ => [7, 8, 9],
    });
    gens.push(if z_positive { 11 } else { 12 });
    MaximalCone::new(gens.into_iter().map(|g| g - 1).collect())
}

/// `a_1 + a_2 + a_3 - b_1 - b_2 - b_3 - 2c`
pub fn balance_form() -> LinearForm {
    parse_weight("a_1+a_2+a_3-b_1-b_2-b_3-2c")
}

/// Vertices `w_1 .. w_64` of the dual polytope, in the tabulated order.
pub const DUAL_VERTICES: [[i64; 7]; 64] = [
    [-1, -1, -1, -1, -1, -1, -1],
    [-1, -1, -1, -1, 1, -1, -1],
    [-1, -1, -1, -1, -1, 1, -1],
    [-1, -1, -1, 1, -1, -1, -1],
    [-1, -1, 2, -1, -1, -1, -1],
    [-1, 2, -1, -1, -1, -1, -1],
    [2, -1, -1, -1, -1, -1, -1],
    [-1, -1, -1, -1, -1, -1, 1],
    [-1, -1, 2, -1, 1, -1, -1],
    [-1, 2, -1, -1, 1, -1, -1],
    [2, -1, -1, -1, 1, -1, -1],
    [-1, -1, -1, -1, 5, -1, 1],
    [-1, -1, 2, -1, -1, 1, -1],
    [-1, 2, -1, -1, -1, 1, -1],
    [2, -1, -1, -1, -1, 1, -1],
    [-1, -1, -1, -1, -1, 5, 1],
    [-1, -1, 2, 1, -1, -1, -1],
    [-1, 2, -1, 1, -1, -1, -1],
    [2, -1, -1, 1, -1, -1, -1],
    [-1, -1, -1, 5, -1, -1, 1],
    [-1, 2, 2, -1, -1, -1, -1],
    [2, -1, 2, -1, -1, -1, -1],
    [-1, -1, 0, -1, -1, -1, 1],
    [2, 2, -1, -1, -1, -1, -1],
    [-1, 0, -1, -1, -1, -1, 1],
    [0, -1, -1, -1, -1, -1, 1],
    [2, 2, 2, 1, -1, -1, -1],
    [2, 2, 2, -1, -1, -1, -1],
    [2, 2, 2, -1, -1, 1, -1],
    [2, 2, 2, -1, 1, -1, -1],
    [2, 2, -1, 1, -1, -1, -1],
    [2, -1, 2, 1, -1, -1, -1],
    [-1, 2, 2, 1, -1, -1, -1],
    [0, 0, 0, 5, -1, -1, 1],
    [0, 0, 0, -1, -1, -1, 1],
    [2, 2, -1, -1, -1, 1, -1],
    [2, -1, 2, -1, -1, 1, -1],
    [-1, 2, 2, -1, -1, 1, -1],
    [0, 0, 0, -1, -1, 5, 1],
    [2, 2, -1, -1, 1, -1, -1],
    [2, -1, 2, -1, 1, -1, -1],
    [-1, 2, 2, -1, 1, -1, -1],
    [0, 0, 0, -1, 5, -1, 1],
    [0, 0, -1, 5, -1, -1, 1],
    [-1, -1, 0, -1, 5, -1, 1],
    [-1, 0, -1, -1, 5, -1, 1],
    [0, -1, -1, -1, 5, -1, 1],
    [-1, -1, 0, -1, -1, 5, 1],
    [-1, 0, -1, -1, -1, 5, 1],
    [0, -1, -1, -1, -1, 5, 1],
    [-1, -1, 0, 5, -1, -1, 1],
    [-1, 0, -1, 5, -1, -1, 1],
    [0, -1, -1, 5, -1, -1, 1],
    [-1, 0, 0, -1, -1, -1, 1],
    [0, -1, 0, -1, -1, -1, 1],
    [0, 0, -1, -1, -1, -1, 1],
    [0, -1, 0, 5, -1, -1, 1],
    [0, -1, 0, -1, 5, -1, 1],
    [0, -1, 0, -1, -1, 5, 1],
    [0, 0, -1, -1, -1, 5, 1],
    [0, 0, -1, -1, 5, -1, 1],
    [-1, 0, 0, -1, 5, -1, 1],
    [-1, 0, 0, -1, -1, 5, 1],
    [-1, 0, 0, 5, -1, -1, 1],
];

/// `(w, cone generators v_i, neighbours w_j)`, all indices one-based.
pub const NEIGHBOR_TABLE: [(usize, [usize; 7], [usize; 7]); 16] = [
    (1, [1, 2, 3, 7, 8, 9, 11], [2, 3, 4, 5, 6, 7, 8]),
    (3, [1, 2, 3, 7, 8, 10, 11], [1, 2, 4, 13, 14, 15, 16]),
    (7, [2, 3, 6, 7, 8, 9, 11], [1, 11, 15, 19, 22, 24, 26]),
    (8, [1, 2, 3, 7, 8, 9, 12], [1, 12, 16, 20, 23, 25, 26]),
    (19, [2, 3, 6, 8, 9, 10, 11], [4, 7, 11, 15, 31, 32, 53]),
    (20, [1, 2, 3, 8, 9, 10, 12], [4, 8, 12, 16, 51, 52, 53]),
    (24, [3, 5, 6, 7, 8, 9, 11], [6, 7, 28, 31, 36, 40, 56]),
    (26, [2, 3, 6, 7, 8, 9, 12], [7, 8, 47, 50, 53, 55, 56]),
    (27, [4, 5, 6, 8, 9, 10, 11], [28, 29, 30, 31, 32, 33, 34]),
    (28, [4, 5, 6, 7, 8, 9, 11], [21, 22, 24, 27, 29, 30, 35]),
    (31, [3, 5, 6, 8, 9, 10, 11], [18, 19, 24, 27, 36, 40, 44]),
    (34, [4, 5, 6, 8, 9, 10, 12], [27, 35, 39, 43, 44, 57, 64]),
    (35, [4, 5, 6, 7, 8, 9, 12], [28, 34, 39, 43, 54, 55, 56]),
    (44, [3, 5, 6, 8, 9, 10, 12], [31, 34, 52, 53, 56, 60, 61]),
    (53, [2, 3, 6, 8, 9, 10, 12], [19, 20, 26, 44, 47, 50, 57]),
    (56, [3, 5, 6, 7, 8, 9, 12], [24, 25, 26, 35, 44, 60, 61]),
];

/// `(row, x signs, y = p_k, weights)`; the last weight carries the sign of `z`.
pub const FIXED_POINT_WEIGHTS: [(&str, &str, usize, [&str; 7]); 32] = [
    ("1-1", "+++", 1, ["a_1", "a_2", "a_3", "b_2-b_1", "b_3-b_1", "-b_1", "c+2b_1"]),
    ("1-2", "-++", 1, ["-a_1", "a_2", "a_3", "b_2-b_1", "b_3-b_1", "-b_1", "c-a_1+2b_1"]),
    ("1-3", "+-+", 1, ["a_1", "-a_2", "a_3", "b_2-b_1", "b_3-b_1", "-b_1", "c-a_2+2b_1"]),
    ("1-4", "++-", 1, ["a_1", "a_2", "-a_3", "b_2-b_1", "b_3-b_1", "-b_1", "c-a_3+2b_1"]),
    ("1-5", "+--", 1, ["a_1", "-a_2", "-a_3", "b_2-b_1", "b_3-b_1", "-b_1", "c-a_2-a_3+2b_1"]),
    ("1-6", "-+-", 1, ["-a_1", "a_2", "-a_3", "b_2-b_1", "b_3-b_1", "-b_1", "c-a_1-a_3+2b_1"]),
    ("1-7", "--+", 1, ["-a_1", "-a_2", "a_3", "b_2-b_1", "b_3-b_1", "-b_1", "c-a_1-a_2+2b_1"]),
    ("1-8", "---", 1, ["-a_1", "-a_2", "-a_3", "b_2-b_1", "b_3-b_1", "-b_1", "c-a_1-a_2-a_3+2b_1"]),
    ("2-1", "+++", 2, ["a_1", "a_2", "a_3", "b_1-b_2", "b_3-b_2", "-b_2", "c+2b_2"]),
    ("2-2", "-++", 2, ["-a_1", "a_2", "a_3", "b_1-b_2", "b_3-b_2", "-b_2", "c-a_1+2b_2"]),
    ("2-3", "+-+", 2, ["a_1", "-a_2", "a_3", "b_1-b_2", "b_3-b_2", "-b_2", "c-a_2+2b_2"]),
    ("2-4", "++-", 2, ["a_1", "a_2", "-a_3", "b_1-b_2", "b_3-b_2", "-b_2", "c-a_3+2b_2"]),
    ("2-5", "+--", 2, ["a_1", "-a_2", "-a_3", "b_1-b_2", "b_3-b_2", "-b_2", "c-a_2-a_3+2b_2"]),
    ("2-6", "-+-", 2, ["-a_1", "a_2", "-a_3", "b_1-b_2", "b_3-b_2", "-b_2", "c-a_1-a_3+2b_2"]),
    ("2-7", "--+", 2, ["-a_1", "-a_2", "a_3", "b_1-b_2", "b_3-b_2", "-b_2", "c-a_1-a_2+2b_2"]),
    ("2-8", "---", 2, ["-a_1", "-a_2", "-a_3", "b_1-b_2", "b_3-b_2", "-b_2", "c-a_1-a_2-a_3+2b_2"]),
    ("3-1", "+++", 3, ["a_1", "a_2", "a_3", "b_1-b_3", "b_2-b_3", "-b_3", "c+2b_3"]),
    ("3-2", "-++", 3, ["-a_1", "a_2", "a_3", "b_1-b_3", "b_2-b_3", "-b_3", "c-a_1+2b_3"]),
    ("3-3", "+-+", 3, ["a_1", "-a_2", "a_3", "b_1-b_3", "b_2-b_3", "-b_3", "c-a_2+2b_3"]),
    ("3-4", "++-", 3, ["a_1", "a_2", "-a_3", "b_1-b_3", "b_2-b_3", "-b_3", "c-a_3+2b_3"]),
    ("3-5", "+--", 3, ["a_1", "-a_2", "-a_3", "b_1-b_3", "b_2-b_3", "-b_3", "c-a_2-a_3+2b_3"]),
    ("3-6", "-+-", 3, ["-a_1", "a_2", "-a_3", "b_1-b_3", "b_2-b_3", "-b_3", "c-a_1-a_3+2b_3"]),
    ("3-7", "--+", 3, ["-a_1", "-a_2", "a_3", "b_1-b_3", "b_2-b_3", "-b_3", "c-a_1-a_2+2b_3"]),
    ("3-8", "---", 3, ["-a_1", "-a_2", "-a_3", "b_1-b_3", "b_2-b_3", "-b_3", "c-a_1-a_2-a_3+2b_3"]),
    ("4-1", "+++", 4, ["a_1", "a_2", "a_3", "b_1", "b_2", "b_3", "c"]),
    ("4-2", "-++", 4, ["-a_1", "a_2", "a_3", "b_1", "b_2", "b_3", "c-a_1"]),
    ("4-3", "+-+", 4, ["a_1", "-a_2", "a_3", "b_1", "b_2", "b_3", "c-a_2"]),
    ("4-4", "++-", 4, ["a_1", "a_2", "-a_3", "b_1", "b_2", "b_3", "c-a_3"]),
    ("4-5", "+--", 4, ["a_1", "-a_2", "-a_3", "b_1", "b_2", "b_3", "c-a_2-a_3"]),
    ("4-6", "-+-", 4, ["-a_1", "a_2", "-a_3", "b_1", "b_2", "b_3", "c-a_1-a_3"]),
    ("4-7", "--+", 4, ["-a_1", "-a_2", "a_3", "b_1", "b_2", "b_3", "c-a_1-a_2"]),
    ("4-8", "---", 4, ["-a_1", "-a_2", "-a_3", "b_1", "b_2", "b_3", "c-a_1-a_2-a_3"]),
];
