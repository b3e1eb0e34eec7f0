//! Canonical forms for simplices under `x -> M x + v` with `M` unimodular,
//! up to relabeling of the vertices.
//!
//! The row Hermite normal form is a complete invariant for the left action
//! of `GL_d(Z)` on a nonsingular edge matrix. Translation is removed by
//! taking edges from a base vertex, and relabeling by minimizing over every
//! choice of base and every order of the remaining vertices.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::polytope::Simplex;

/// Lexicographically least row-HNF over all `(d+1)!` vertex labelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub dim: usize,
    pub h: IntMatrix,
}

/// `s_j = m * t_{sigma[j]} + v` for every vertex index `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub m: IntMatrix,
    pub v: Vec<i64>,
    pub sigma: Vec<usize>,
}

impl EquivalenceWitness {
    /// Checks `|det m| = 1` and the vertex equations exactly.
    pub fn verify(&self, s: &Simplex, t: &Simplex) -> Result<bool> {
        if !self.m.is_unimodular()? {
            return Ok(false);
        }
        let mut seen = alloc::vec![false; s.vertices().len()];
        for (j, &k) in self.sigma.iter().enumerate() {
            if k >= seen.len() || seen[k] {
                return Ok(false);
            }
            seen[k] = true;
            let mut image = self.m.mul_vec(t.vertex(k))?;
            for (x, &shift) in image.iter_mut().zip(&self.v) {
                *x = linalg::add(*x, shift)?;
            }
            if image != s.vertex(j) {
                return Ok(false);
            }
        }
        Ok(self.sigma.len() == seen.len())
    }
}

/// One vertex labeling: a base vertex and an order of the others.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Labeling {
    base: usize,
    order: Vec<usize>,
}

/// Calls `f` with every permutation of `items`, in lexicographic order.
fn for_each_permutation(
    items: &mut [usize],
    mut f: impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    items.sort_unstable();
    loop {
        f(items)?;
        // next lexicographic permutation
        let Some(i) = (1..items.len()).rev().find(|&i| items[i - 1] < items[i]) else {
            return Ok(());
        };
        let j = (i..items.len())
            .rev()
            .find(|&j| items[j] > items[i - 1])
            .unwrap();
        items.swap(i - 1, j);
        items[i..].reverse();
    }
}

/// Every labeling with its HNF.
fn for_each_labeling(
    s: &Simplex,
    mut f: impl FnMut(&Labeling, IntMatrix) -> Result<()>,
) -> Result<()> {
    let n = s.dim() + 1;
    for base in 0..n {
        let mut rest: Vec<usize> = (0..n).filter(|&k| k != base).collect();
        for_each_permutation(&mut rest, |order| {
            let edges = s.edge_matrix_ordered(base, order)?;
            let h = edges.row_hnf().map_err(|e| match e {
                Error::Singular => Error::Degenerate,
                e => e,
            })?;
            f(
                &Labeling {
                    base,
                    order: order.to_vec(),
                },
                h.h,
            )
        })?;
    }
    Ok(())
}

fn minimal_labeling(s: &Simplex) -> Result<(Labeling, IntMatrix)> {
    let mut best: Option<(Labeling, IntMatrix)> = None;
    for_each_labeling(s, |lab, h| {
        if best.as_ref().is_none_or(|(_, b)| h < *b) {
            best = Some((lab.clone(), h));
        }
        Ok(())
    })?;
    Ok(best.expect("a simplex has at least one labeling"))
}

pub fn canonical_form(s: &Simplex) -> Result<CanonicalForm> {
    let (_, h) = minimal_labeling(s)?;
    Ok(CanonicalForm { dim: s.dim(), h })
}

fn same_dim(s: &Simplex, t: &Simplex) -> Result<()> {
    if s.dim() == t.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: t.dim(),
        })
    }
}

pub fn are_equivalent(s: &Simplex, t: &Simplex) -> Result<bool> {
    same_dim(s, t)?;
    Ok(canonical_form(s)? == canonical_form(t)?)
}

/// Recovers an explicit transform taking `t` onto `s`, or `None` if the two
/// simplices are not equivalent.
///
/// With labelings of `s` and `t` that reach the same HNF `h`, we have
/// `u_s E_s = h = u_t E_t`, so `E_s = m E_t` for `m = u_s^{-1} u_t`.
pub fn find_witness(s: &Simplex, t: &Simplex) -> Result<Option<EquivalenceWitness>> {
    same_dim(s, t)?;
    let (lab_s, h) = minimal_labeling(s)?;
    let mut lab_t = None;
    for_each_labeling(t, |lab, ht| {
        if lab_t.is_none() && ht == h {
            lab_t = Some(lab.clone());
        }
        Ok(())
    })?;
    let Some(lab_t) = lab_t else {
        return Ok(None);
    };

    let us = s
        .edge_matrix_ordered(lab_s.base, &lab_s.order)?
        .row_hnf()?
        .u;
    let ut = t
        .edge_matrix_ordered(lab_t.base, &lab_t.order)?
        .row_hnf()?
        .u;
    let m = us.unimodular_inverse()?.mul(&ut)?;
    let mt = m.mul_vec(t.vertex(lab_t.base))?;
    let v = s
        .vertex(lab_s.base)
        .iter()
        .zip(&mt)
        .map(|(&a, &b)| linalg::sub(a, b))
        .collect::<Result<Vec<_>>>()?;
    let mut sigma = alloc::vec![0; s.dim() + 1];
    sigma[lab_s.base] = lab_t.base;
    for (&js, &jt) in lab_s.order.iter().zip(&lab_t.order) {
        sigma[js] = jt;
    }
    let w = EquivalenceWitness { m, v, sigma };
    if !w.verify(s, t)? {
        return Err(Error::Internal("equivalence witness failed verification"));
    }
    Ok(Some(w))
}
