//! Integral simplices, their facet inequalities, and lattice-point scans.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

/// Default cap on the number of integer points in a scanned bounding box.
pub const DEFAULT_POINT_BUDGET: u128 = 100_000_000;

/// Upper bound on the integer points a lattice scan may visit, measured as
/// the point count of the coordinate bounding box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointBudget(pub u128);

impl Default for PointBudget {
    fn default() -> Self {
        PointBudget(DEFAULT_POINT_BUDGET)
    }
}

/// The convex hull of `d + 1` affinely independent integer points in `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<Vec<i64>>,
}

impl Simplex {
    /// Validates shape (`d >= 2`, `d + 1` points of length `d`) and affine
    /// independence.
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidInput("a simplex needs dimension at least 2"));
        }
        let d = n - 1;
        for v in &vertices {
            if v.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: v.len(),
                });
            }
        }
        let s = Simplex { vertices };
        if s.edge_matrix(0)?.det()? == 0 {
            return Err(Error::Degenerate);
        }
        Ok(s)
    }

    /// `conv(0, v1, ..., vd)` where the `vi` are the columns of `m`.
    pub fn from_origin_and_columns(m: &IntMatrix) -> Result<Self> {
        let mut vertices = vec![vec![0; m.rows()]];
        vertices.extend((0..m.cols()).map(|j| m.column(j)));
        Simplex::new(vertices)
    }

    /// `conv(0, l1*e1, ..., ld*ed)`.
    pub fn axis(lambdas: &[i64]) -> Result<Self> {
        Simplex::from_origin_and_columns(&IntMatrix::diagonal(lambdas))
    }

    /// `conv(0, e1, ..., ed)`.
    pub fn unit(dim: usize) -> Self {
        Simplex::from_origin_and_columns(&IntMatrix::identity(dim))
            .expect("unit simplex is non-degenerate")
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[i64] {
        &self.vertices[i]
    }

    /// Columns `v_k - v_base` for every `k != base`, in index order.
    pub fn edge_matrix(&self, base: usize) -> Result<IntMatrix> {
        let order: Vec<usize> = (0..self.vertices.len()).filter(|&k| k != base).collect();
        self.edge_matrix_ordered(base, &order)
    }

    /// Columns `v_{order[k]} - v_base`.
    pub fn edge_matrix_ordered(&self, base: usize, order: &[usize]) -> Result<IntMatrix> {
        let d = self.dim();
        let b = &self.vertices[base];
        let mut m = IntMatrix::zeros(d, order.len());
        for (col, &k) in order.iter().enumerate() {
            for i in 0..d {
                m[(i, col)] = linalg::sub(self.vertices[k][i], b[i])?;
            }
        }
        Ok(m)
    }

    /// Image under `x -> m*x + shift`.
    pub fn transform(&self, m: &IntMatrix, shift: &[i64]) -> Result<Simplex> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let mut w = m.mul_vec(v)?;
                for (x, &t) in w.iter_mut().zip(shift) {
                    *x = linalg::add(*x, t)?;
                }
                Ok(w)
            })
            .collect::<Result<Vec<_>>>()?;
        Simplex::new(vertices)
    }

    /// Inclusive coordinate bounds of the given vertices.
    fn bounding_box(&self, which: impl Iterator<Item = usize> + Clone) -> (Vec<i64>, Vec<i64>) {
        let d = self.dim();
        let lo = (0..d)
            .map(|i| {
                which
                    .clone()
                    .map(|k| self.vertices[k][i])
                    .min()
                    .unwrap_or(0)
            })
            .collect();
        let hi = (0..d)
            .map(|i| {
                which
                    .clone()
                    .map(|k| self.vertices[k][i])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        (lo, hi)
    }

    /// One inequality per vertex, describing the facet opposite to it.
    pub fn facets(&self) -> Result<Vec<FacetIneq>> {
        let d = self.dim();
        let edges = self.edge_matrix(0)?;
        let det = edges.det()?;
        if det == 0 {
            return Err(Error::Degenerate);
        }
        let sign = det.signum();
        // row k of adj(E) is orthogonal to every edge except edge k, where it
        // evaluates to det(E)
        let adj = edges.adjugate()?;
        let mut out = Vec::with_capacity(d + 1);
        let mut sum = vec![0i64; d];
        for k in 0..d {
            for (s, &x) in sum.iter_mut().zip(adj.row(k)) {
                *s = linalg::add(*s, x)?;
            }
        }
        let opposite_origin = sum
            .iter()
            .map(|&x| linalg::mul(x, sign))
            .collect::<Result<Vec<_>>>()?;
        out.push(FacetIneq::through(opposite_origin, 0, self.vertex(1))?);
        for k in 0..d {
            let normal = adj
                .row(k)
                .iter()
                .map(|&x| linalg::mul(x, -sign))
                .collect::<Result<Vec<_>>>()?;
            out.push(FacetIneq::through(normal, k + 1, self.vertex(0))?);
        }
        Ok(out)
    }

    /// Integer points of the interior or closure, in lexicographic order.
    pub fn lattice_points(&self, region: Region, budget: PointBudget) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.scan_region(region, budget, |p| {
            out.push(p.to_vec());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// Integer points with equality on facet `facet` (the one opposite
    /// vertex `facet`) and strict inequality on every other facet.
    pub fn facet_relint_points(&self, facet: usize, budget: PointBudget) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.scan_facet_relint(facet, budget, |p| {
            out.push(p.to_vec());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// Visits the points of `region` in lexicographic order until `visit`
    /// breaks. Returns whether the scan was cut short.
    pub fn scan_region<F>(&self, region: Region, budget: PointBudget, visit: F) -> Result<bool>
    where
        F: FnMut(&[i64]) -> ControlFlow<()>,
    {
        self.scan_region_with(&self.facets()?, region, budget, visit)
    }

    /// [`Simplex::scan_region`] with the facets of `self` precomputed.
    pub(crate) fn scan_region_with<F>(
        &self,
        facets: &[FacetIneq],
        region: Region,
        budget: PointBudget,
        visit: F,
    ) -> Result<bool>
    where
        F: FnMut(&[i64]) -> ControlFlow<()>,
    {
        let kind = match region {
            Region::Interior => Kind::Lt,
            Region::Closure => Kind::Le,
        };
        let constraints = facets.iter().map(|f| (f, kind)).collect::<Vec<_>>();
        let (lo, hi) = self.bounding_box(0..=self.dim());
        Scanner::new(&constraints, lo, hi, budget)?.run(visit)
    }

    /// Like [`Simplex::facet_relint_points`] but streaming with early exit.
    pub fn scan_facet_relint<F>(&self, facet: usize, budget: PointBudget, visit: F) -> Result<bool>
    where
        F: FnMut(&[i64]) -> ControlFlow<()>,
    {
        self.scan_facet_relint_with(&self.facets()?, facet, budget, visit)
    }

    pub(crate) fn scan_facet_relint_with<F>(
        &self,
        facets: &[FacetIneq],
        facet: usize,
        budget: PointBudget,
        visit: F,
    ) -> Result<bool>
    where
        F: FnMut(&[i64]) -> ControlFlow<()>,
    {
        if facet > self.dim() {
            return Err(Error::InvalidInput("facet index out of range"));
        }
        let constraints = facets
            .iter()
            .map(|f| {
                let kind = if f.opposite_vertex == facet {
                    Kind::Eq
                } else {
                    Kind::Lt
                };
                (f, kind)
            })
            .collect::<Vec<_>>();
        let (lo, hi) = self.bounding_box((0..=self.dim()).filter(|&k| k != facet));
        Scanner::new(&constraints, lo, hi, budget)?.run(visit)
    }
}

/// Which integer points of a simplex to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Interior,
    Closure,
}

/// `normal . x <= rhs`, tight on every vertex except `opposite_vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacetIneq {
    /// Primitive: the gcd of the entries is 1.
    pub normal: Vec<i64>,
    pub rhs: i64,
    pub opposite_vertex: usize,
}

impl FacetIneq {
    fn through(normal: Vec<i64>, opposite_vertex: usize, on_facet: &[i64]) -> Result<Self> {
        let g = normal.iter().try_fold(0, |g, &x| linalg::gcd(g, x))?;
        if g == 0 {
            return Err(Error::Degenerate);
        }
        let normal: Vec<i64> = normal.into_iter().map(|x| x / g).collect();
        let rhs = dot(&normal, on_facet)?;
        Ok(FacetIneq {
            normal,
            rhs,
            opposite_vertex,
        })
    }

    /// `normal . x` computed exactly.
    pub fn eval(&self, x: &[i64]) -> Result<i64> {
        dot(&self.normal, x)
    }
}

/// Scans the integer points of `lo..=hi` that satisfy every constraint.
pub(crate) fn scan_constraints<F>(
    constraints: &[(FacetIneq, Kind)],
    lo: Vec<i64>,
    hi: Vec<i64>,
    budget: PointBudget,
    visit: F,
) -> Result<bool>
where
    F: FnMut(&[i64]) -> ControlFlow<()>,
{
    let refs: Vec<(&FacetIneq, Kind)> = constraints.iter().map(|(f, k)| (f, *k)).collect();
    Scanner::new(&refs, lo, hi, budget)?.run(visit)
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    let mut acc: i128 = 0;
    for (&x, &y) in a.iter().zip(b) {
        acc = acc
            .checked_add(x as i128 * y as i128)
            .ok_or(Error::Overflow)?;
    }
    linalg::narrow(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kind {
    Le,
    Lt,
    Eq,
}

/// Depth-first scan over a coordinate box. At each depth the admissible
/// range of the next coordinate is cut down by every constraint, using the
/// extreme values the remaining coordinates can still contribute.
struct Scanner {
    d: usize,
    normals: Vec<Vec<i128>>,
    rhs: Vec<i128>,
    kinds: Vec<Kind>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    // tail_min[c][k] = min over the box of sum_{j >= k} normal_c[j] * x_j
    tail_min: Vec<Vec<i128>>,
    tail_max: Vec<Vec<i128>>,
}

impl Scanner {
    fn new(
        constraints: &[(&FacetIneq, Kind)],
        lo: Vec<i64>,
        hi: Vec<i64>,
        budget: PointBudget,
    ) -> Result<Self> {
        let d = lo.len();
        let volume = lo.iter().zip(&hi).try_fold(1u128, |acc, (&l, &h)| {
            acc.checked_mul((h as i128 - l as i128 + 1) as u128)
        });
        let volume = volume.unwrap_or(u128::MAX);
        if volume > budget.0 {
            return Err(Error::BoxTooLarge {
                volume,
                budget: budget.0,
            });
        }
        let mut normals = Vec::new();
        let mut rhs = Vec::new();
        let mut kinds = Vec::new();
        let mut tail_min = Vec::new();
        let mut tail_max = Vec::new();
        for (f, kind) in constraints {
            // every partial sum is bounded by sum |n_j| * max|x_j|, which
            // must stay well inside i128
            let mut bound: i128 = (f.rhs as i128).abs();
            for j in 0..d {
                let m = (lo[j] as i128).abs().max((hi[j] as i128).abs());
                bound = bound
                    .checked_add((f.normal[j] as i128).abs() * m)
                    .ok_or(Error::Overflow)?;
            }
            if bound > i128::MAX / 4 {
                return Err(Error::Overflow);
            }
            let n: Vec<i128> = f.normal.iter().map(|&x| x as i128).collect();
            let mut mins = vec![0i128; d + 1];
            let mut maxs = vec![0i128; d + 1];
            for j in (0..d).rev() {
                let a = n[j] * lo[j] as i128;
                let b = n[j] * hi[j] as i128;
                mins[j] = mins[j + 1] + a.min(b);
                maxs[j] = maxs[j + 1] + a.max(b);
            }
            normals.push(n);
            rhs.push(f.rhs as i128);
            kinds.push(*kind);
            tail_min.push(mins);
            tail_max.push(maxs);
        }
        Ok(Scanner {
            d,
            normals,
            rhs,
            kinds,
            lo,
            hi,
            tail_min,
            tail_max,
        })
    }

    fn run<F>(&self, mut visit: F) -> Result<bool>
    where
        F: FnMut(&[i64]) -> ControlFlow<()>,
    {
        let mut point = vec![0i64; self.d];
        let mut partial = vec![0i128; self.normals.len()];
        Ok(self
            .descend(0, &mut point, &mut partial, &mut visit)
            .is_break())
    }

    /// Admissible interval of coordinate `k` given the partial sums of the
    /// coordinates before it.
    #[allow(clippy::needless_range_loop)] // c indexes five parallel tables
    fn range(&self, k: usize, partial: &[i128]) -> Option<(i64, i64)> {
        let mut lo = self.lo[k] as i128;
        let mut hi = self.hi[k] as i128;
        for c in 0..self.normals.len() {
            let n = self.normals[c][k];
            let rest_min = self.tail_min[c][k + 1];
            let rest_max = self.tail_max[c][k + 1];
            // upper constraint: partial + n*x + rest_min <= rhs (or < rhs)
            let mut cap = self.rhs[c] - partial[c] - rest_min;
            if self.kinds[c] == Kind::Lt {
                cap -= 1;
            }
            if !clip_upper(n, cap, &mut lo, &mut hi) {
                return None;
            }
            if self.kinds[c] == Kind::Eq {
                // lower constraint: partial + n*x + rest_max >= rhs
                let need = self.rhs[c] - partial[c] - rest_max;
                // n*x >= need  <=>  (-n)*x <= -need
                if !clip_upper(-n, -need, &mut lo, &mut hi) {
                    return None;
                }
            }
            if lo > hi {
                return None;
            }
        }
        if lo > hi {
            None
        } else {
            Some((lo as i64, hi as i64))
        }
    }

    fn descend<F>(
        &self,
        k: usize,
        point: &mut [i64],
        partial: &mut [i128],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[i64]) -> ControlFlow<()>,
    {
        if k == self.d {
            return visit(point);
        }
        let Some((lo, hi)) = self.range(k, partial) else {
            return ControlFlow::Continue(());
        };
        for x in lo..=hi {
            point[k] = x;
            for (c, p) in partial.iter_mut().enumerate() {
                *p += self.normals[c][k] * x as i128;
            }
            let flow = self.descend(k + 1, point, partial, visit);
            for (c, p) in partial.iter_mut().enumerate() {
                *p -= self.normals[c][k] * x as i128;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Intersects `[lo, hi]` with `{x : n*x <= cap}`. Returns false if empty.
fn clip_upper(n: i128, cap: i128, lo: &mut i128, hi: &mut i128) -> bool {
    if n > 0 {
        *hi = (*hi).min(cap.div_euclid(n));
    } else if n < 0 {
        // x >= cap / n, rounded up
        let m = -n;
        let bound = -(cap.div_euclid(m));
        *lo = (*lo).max(bound);
    } else if cap < 0 {
        return false;
    }
    lo <= hi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1() -> Simplex {
        Simplex::axis(&[2, 3, 6]).unwrap()
    }

    fn brute_force(s: &Simplex, strict: bool) -> Vec<Vec<i64>> {
        let fs = s.facets().unwrap();
        let d = s.dim();
        let lo: Vec<i64> = (0..d)
            .map(|i| s.vertices().iter().map(|v| v[i]).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|i| s.vertices().iter().map(|v| v[i]).max().unwrap())
            .collect();
        let mut out = Vec::new();
        let mut p = lo.clone();
        loop {
            let ok = fs.iter().all(|f| {
                let v = f.eval(&p).unwrap();
                if strict {
                    v < f.rhs
                } else {
                    v <= f.rhs
                }
            });
            if ok {
                out.push(p.clone());
            }
            let mut i = d;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if p[i] < hi[i] {
                    p[i] += 1;
                    break;
                }
                p[i] = lo[i];
            }
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(
            Simplex::new(vec![vec![0, 0], vec![1, 1], vec![2, 2]]),
            Err(Error::Degenerate)
        );
        assert!(matches!(
            Simplex::new(vec![vec![0, 0], vec![1, 0], vec![0]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            Simplex::new(vec![vec![0], vec![1]]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn s1_slanted_facet() {
        let fs = s1().facets().unwrap();
        assert_eq!(fs[0].normal, vec![3, 2, 1]);
        assert_eq!(fs[0].rhs, 6);
        assert_eq!((fs[1].normal.clone(), fs[1].rhs), (vec![-1, 0, 0], 0));
        assert_eq!((fs[2].normal.clone(), fs[2].rhs), (vec![0, -1, 0], 0));
        assert_eq!((fs[3].normal.clone(), fs[3].rhs), (vec![0, 0, -1], 0));
    }

    #[test]
    fn unit_simplex_facets() {
        let fs = Simplex::unit(2).facets().unwrap();
        assert_eq!((fs[0].normal.clone(), fs[0].rhs), (vec![1, 1], 1));
        assert_eq!((fs[1].normal.clone(), fs[1].rhs), (vec![-1, 0], 0));
        assert_eq!((fs[2].normal.clone(), fs[2].rhs), (vec![0, -1], 0));
    }

    #[test]
    fn facets_tight_exactly_off_opposite_vertex() {
        let s = Simplex::new(vec![
            vec![0, 3, 1],
            vec![4, 1, 2],
            vec![-1, 2, 0],
            vec![2, -3, 5],
        ])
        .unwrap();
        for f in s.facets().unwrap() {
            for (k, v) in s.vertices().iter().enumerate() {
                let val = f.eval(v).unwrap();
                if k == f.opposite_vertex {
                    assert!(val < f.rhs);
                } else {
                    assert_eq!(val, f.rhs);
                }
            }
        }
    }

    #[test]
    fn interior_points() {
        let b = PointBudget::default();
        let s3 = Simplex::axis(&[3, 3, 3]).unwrap();
        assert!(s3.lattice_points(Region::Interior, b).unwrap().is_empty());
        let s = Simplex::axis(&[4, 4, 4]).unwrap();
        assert!(s
            .lattice_points(Region::Interior, b)
            .unwrap()
            .contains(&vec![1, 1, 1]));
        let u = Simplex::unit(3);
        assert_eq!(
            u.lattice_points(Region::Closure, b).unwrap(),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }

    #[test]
    fn scan_matches_brute_force() {
        let s = Simplex::new(vec![
            vec![0, 3, 1],
            vec![4, 1, 2],
            vec![-1, 2, 0],
            vec![2, -3, 5],
        ])
        .unwrap();
        for (region, strict) in [(Region::Interior, true), (Region::Closure, false)] {
            let got = s.lattice_points(region, PointBudget::default()).unwrap();
            assert_eq!(got, brute_force(&s, strict));
        }
    }

    #[test]
    fn facet_relint_examples() {
        let b = PointBudget::default();
        let s3 = Simplex::axis(&[3, 3, 3]).unwrap();
        assert_eq!(s3.facet_relint_points(0, b).unwrap(), vec![vec![1, 1, 1]]);
        // facet x3 = 0 is opposite vertex 3
        assert_eq!(s1().facet_relint_points(3, b).unwrap(), vec![vec![1, 1, 0]]);
        let u = Simplex::unit(3);
        for k in 0..4 {
            assert!(u.facet_relint_points(k, b).unwrap().is_empty());
        }
    }

    #[test]
    fn budget_guard() {
        let s = Simplex::axis(&[2, 3, 7, 43, 1806]).unwrap();
        assert!(s
            .lattice_points(Region::Interior, PointBudget::default())
            .unwrap()
            .is_empty());
        match s.lattice_points(Region::Interior, PointBudget(1_000_000)) {
            Err(Error::BoxTooLarge { volume, .. }) => assert_eq!(volume, 3 * 4 * 8 * 44 * 1807),
            other => panic!("unexpected {other:?}"),
        }
    }
}
