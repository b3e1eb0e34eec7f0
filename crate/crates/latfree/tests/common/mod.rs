#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use latfree::latfree_core::{IntMatrix, Simplex};
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

/// The slanted facets `alpha . x <= r` of the fourteen 4D axis classes.
pub const T_INEQUALITIES: [([i64; 4], i64); 14] = [
    ([21, 14, 6, 1], 42),
    ([15, 10, 3, 2], 30),
    ([12, 8, 3, 1], 24),
    ([10, 5, 4, 1], 20),
    ([9, 6, 2, 1], 18),
    ([6, 4, 1, 1], 12),
    ([6, 3, 2, 1], 12),
    ([5, 2, 2, 1], 10),
    ([4, 4, 3, 1], 12),
    ([4, 3, 3, 2], 12),
    ([4, 2, 1, 1], 8),
    ([3, 1, 1, 1], 6),
    ([2, 2, 1, 1], 6),
    ([1, 1, 1, 1], 4),
];

pub fn s(i: usize) -> Simplex {
    let m = S_MATRICES[i - 1];
    let vertices = (0..4).map(|j| (0..3).map(|r| m[r][j]).collect()).collect();
    Simplex::new(vertices).unwrap()
}

pub fn all_s() -> Vec<Simplex> {
    (1..=7).map(s).collect()
}

/// `conv(0, (r/alpha_1) e_1, ..., (r/alpha_4) e_4)`
pub fn t(i: usize) -> Simplex {
    let (alpha, r) = T_INEQUALITIES[i - 1];
    let lambdas: Vec<i64> = alpha.iter().map(|a| r / a).collect();
    Simplex::axis(&lambdas).unwrap()
}

pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    use latfree::latfree_core::linalg::{unimodular_from_word, ElementaryOp};
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

/// Relabels the vertices: vertex `j` of the result is vertex `perm[j]`.
pub fn relabel(s: &Simplex, perm: &[usize]) -> Simplex {
    Simplex::new(perm.iter().map(|&k| s.vertex(k).to_vec()).collect()).unwrap()
}

pub fn write_simplex(dir: &Path, name: &str, s: &Simplex) -> PathBuf {
    let path = dir.join(name);
    let doc = serde_json::json!({ "dim": s.dim(), "vertices": s.vertices() });
    std::fs::write(&path, doc.to_string()).unwrap();
    path
}

pub fn latfree<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_latfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}
