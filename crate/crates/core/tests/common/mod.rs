#![allow(dead_code)]

use latfree_core::{IntMatrix, Simplex};
use rand::Rng;

/// Vertex matrices of the seven 3D classes; columns are the vertices.
pub const S_MATRICES: [[[i64; 4]; 3]; 7] = [
    [[0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 6]],
    [[0, 2, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]],
    [[0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]],
    [[0, 1, 2, 3], [0, 0, 4, 0], [0, 0, 0, 4]],
    [[0, 1, 2, 3], [0, 0, 5, 0], [0, 0, 0, 5]],
    [[0, 3, 1, 2], [0, 0, 3, 0], [0, 0, 0, 3]],
    [[0, 4, 1, 2], [0, 0, 2, 0], [0, 0, 0, 4]],
];

pub fn s(i: usize) -> Simplex {
    let m = S_MATRICES[i - 1];
    let vertices = (0..4).map(|j| (0..3).map(|r| m[r][j]).collect()).collect();
    Simplex::new(vertices).unwrap()
}

pub fn all_s() -> Vec<Simplex> {
    (1..=7).map(s).collect()
}

/// Random word of length <= 12 in shears, swaps and sign flips.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    use latfree_core::linalg::{unimodular_from_word, ElementaryOp};
    let len = rng.gen_range(0..=12);
    let word: Vec<ElementaryOp> = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => {
                let target = rng.gen_range(0..n);
                let mut source = rng.gen_range(0..n - 1);
                if source >= target {
                    source += 1;
                }
                let k = if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=2);
                ElementaryOp::Shear { target, source, k }
            }
            1 => ElementaryOp::Swap(rng.gen_range(0..n), rng.gen_range(0..n)),
            _ => ElementaryOp::Flip(rng.gen_range(0..n)),
        })
        .collect();
    unimodular_from_word(n, &word).unwrap()
}

pub fn random_shift<R: Rng>(rng: &mut R, n: usize) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-5..=5)).collect()
}
