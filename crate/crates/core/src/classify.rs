//! Lattice-freeness, maximality, and the sublattice structure of the
//! integer points in facet relative interiors.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::linalg::{self, EchelonBasis, IntMatrix};
use crate::polytope::{scan_constraints, FacetIneq, Kind, PointBudget, Region, Simplex};

/// No integer point lies in the interior.
pub fn is_lattice_free(s: &Simplex, budget: PointBudget) -> Result<bool> {
    let hit = s.scan_region(Region::Interior, budget, |_| ControlFlow::Break(()))?;
    Ok(!hit)
}

/// Lattice-free, and every facet has an integer point in its relative
/// interior. This facet criterion characterizes maximality for integral
/// lattice-free simplices.
pub fn is_maximal_lattice_free(s: &Simplex, budget: PointBudget) -> Result<bool> {
    let facets = s.facets()?;
    for k in 0..=s.dim() {
        if !s.scan_facet_relint_with(&facets, k, budget, |_| ControlFlow::Break(()))? {
            return Ok(false);
        }
    }
    let hit = s.scan_region_with(
        &facets,
        Region::Interior,
        budget,
        |_| ControlFlow::Break(()),
    )?;
    Ok(!hit)
}

/// Integer-point structure of one facet's relative interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FacetLattice {
    NoPoints,
    Points {
        count: u64,
        /// Rank of the lattice spanned by `p - p0`, where `p0` is the
        /// lexicographically first point.
        span_rank: usize,
        /// Largest `s` such that the points contain a unimodular image of
        /// the cube `{0,1}^s`, i.e. `p + sum_{k in K} b_k` for every subset
        /// `K`, with `b_1..b_s` extendable to a basis of the facet lattice.
        sublattice_rank: usize,
    },
}

impl FacetLattice {
    pub fn count(&self) -> u64 {
        match self {
            FacetLattice::NoPoints => 0,
            FacetLattice::Points { count, .. } => *count,
        }
    }

    pub fn span_rank(&self) -> Option<usize> {
        match self {
            FacetLattice::NoPoints => None,
            FacetLattice::Points { span_rank, .. } => Some(*span_rank),
        }
    }

    pub fn sublattice_rank(&self) -> Option<usize> {
        match self {
            FacetLattice::NoPoints => None,
            FacetLattice::Points {
                sublattice_rank, ..
            } => Some(*sublattice_rank),
        }
    }
}

/// Per-facet report, indexed by the opposite vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacetLatticeReport {
    pub facets: Vec<FacetLattice>,
}

impl FacetLatticeReport {
    /// Number of facets whose sublattice rank is the full facet dimension.
    pub fn full_rank_facets(&self) -> usize {
        let full = self.facets.len().saturating_sub(2);
        self.facets
            .iter()
            .filter(|f| f.sublattice_rank() == Some(full))
            .count()
    }
}

pub fn facet_lattice_report(s: &Simplex, budget: PointBudget) -> Result<FacetLatticeReport> {
    let d = s.dim();
    let facets = s.facets()?;
    let mu = normal_dependency(&facets)?;
    let mut out = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut points = Vec::new();
        s.scan_facet_relint_with(&facets, k, budget, |p| {
            points.push(p.to_vec());
            ControlFlow::Continue(())
        })?;
        if points.is_empty() {
            out.push(FacetLattice::NoPoints);
            continue;
        }
        let mut basis = EchelonBasis::new(d);
        for p in &points[1..] {
            basis.insert(&difference(p, &points[0])?)?;
        }
        let sublattice_rank = cube_rank(&facets, &mu, k, points.clone(), budget)?;
        out.push(FacetLattice::Points {
            count: points.len() as u64,
            span_rank: basis.rank(),
            sublattice_rank,
        });
    }
    Ok(FacetLatticeReport { facets: out })
}

/// At most one facet carries a full `(d-1)`-dimensional unit cube of
/// relative-interior integer points.
pub fn observation_holds(s: &Simplex, budget: PointBudget) -> Result<bool> {
    Ok(facet_lattice_report(s, budget)?.full_rank_facets() <= 1)
}

fn difference(p: &[i64], q: &[i64]) -> Result<Vec<i64>> {
    p.iter().zip(q).map(|(&a, &b)| linalg::sub(a, b)).collect()
}

fn translate(p: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    p.iter().zip(b).map(|(&x, &y)| x.checked_add(y)).collect()
}

/// Positive integers `mu` with `sum_l mu_l a_l = 0` over the outward facet
/// normals `a_l`: the signed maximal minors of the normal matrix.
fn normal_dependency(facets: &[FacetIneq]) -> Result<Vec<i64>> {
    let mut mu = Vec::with_capacity(facets.len());
    for l in 0..facets.len() {
        let cols: Vec<&[i64]> = facets
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != l)
            .map(|(_, f)| f.normal.as_slice())
            .collect();
        let minor = IntMatrix::from_columns(&cols)?.det()?;
        mu.push(if l % 2 == 0 {
            minor
        } else {
            linalg::sub(0, minor)?
        });
    }
    if mu[0] < 0 {
        for x in &mut mu {
            *x = linalg::sub(0, *x)?;
        }
    }
    let g = mu.iter().try_fold(0, |g, &x| linalg::gcd(g, x))?;
    if mu.iter().any(|&x| x <= 0) {
        return Err(Error::Internal(
            "facet normals are not positively dependent",
        ));
    }
    Ok(mu.into_iter().map(|x| x / g).collect())
}

/// `b_1..b_k` extend to a basis of the saturated lattice they live in iff
/// the gcd of their maximal minors is 1.
fn is_primitive_system(vectors: &[Vec<i64>]) -> Result<bool> {
    let k = vectors.len();
    let n = vectors[0].len();
    let mut g = 0i64;
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        let rows: Vec<Vec<i64>> = vectors
            .iter()
            .map(|v| cols.iter().map(|&c| v[c]).collect())
            .collect();
        g = linalg::gcd(g, IntMatrix::from_rows(&rows)?.det()?)?;
        if g == 1 {
            return Ok(true);
        }
        // next k-subset of 0..n
        let Some(i) = (0..k).rev().find(|&i| cols[i] < n - k + i) else {
            return Ok(false);
        };
        cols[i] += 1;
        for j in i + 1..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
}

/// Largest unimodular cube among the relative-interior points of facet `k`.
///
/// A cube `p + {0,1}^s B` fits iff `a_l p + sum_i (a_l b_i)^+ <= r_l - 1`
/// for every other facet `l`. Weighting by `mu` and summing cancels `p`, so
/// every fitting cube has `sum_i N(b_i) <= R` with
/// `N(b) = sum_{l != k} mu_l (a_l b)^+`, which is symmetric in `b`. Edges
/// are tried in increasing `N`, and this bound cuts the search.
fn cube_rank(
    facets: &[FacetIneq],
    mu: &[i64],
    k: usize,
    mut points: Vec<Vec<i64>>,
    budget: PointBudget,
) -> Result<usize> {
    let d = facets.len() - 1;
    points.sort();
    let others: Vec<usize> = (0..=d).filter(|&l| l != k).collect();
    let mut radius = mu[k] as i128 * facets[k].rhs as i128;
    for &l in &others {
        radius += mu[l] as i128 * (facets[l].rhs as i128 - 1);
    }
    let norm = |b: &[i64]| -> Result<i128> {
        let mut n = 0i128;
        for &l in &others {
            n += mu[l] as i128 * (facets[l].eval(b)? as i128).max(0);
        }
        Ok(n)
    };

    // every edge is a difference of two points, so |a_l b| is at most the
    // spread of a_l over the points, and at most radius / mu_l
    let mut constraints = Vec::new();
    constraints.push((
        FacetIneq {
            normal: facets[k].normal.clone(),
            rhs: 0,
            opposite_vertex: k,
        },
        Kind::Eq,
    ));
    for &l in &others {
        let values = points
            .iter()
            .map(|p| facets[l].eval(p))
            .collect::<Result<Vec<_>>>()?;
        let spread = values.iter().max().unwrap() - values.iter().min().unwrap();
        let cap = linalg::narrow((radius / mu[l] as i128).min(spread as i128))?;
        let neg = facets[l]
            .normal
            .iter()
            .map(|&x| linalg::sub(0, x))
            .collect::<Result<Vec<_>>>()?;
        constraints.push((
            FacetIneq {
                normal: facets[l].normal.clone(),
                rhs: cap,
                opposite_vertex: l,
            },
            Kind::Le,
        ));
        constraints.push((
            FacetIneq {
                normal: neg,
                rhs: cap,
                opposite_vertex: l,
            },
            Kind::Le,
        ));
    }
    let mut hi = Vec::with_capacity(d);
    for j in 0..d {
        let max = points.iter().map(|p| p[j]).max().unwrap();
        let min = points.iter().map(|p| p[j]).min().unwrap();
        hi.push(linalg::sub(max, min)?);
    }
    let lo = hi.iter().map(|&x| -x).collect();

    let mut candidates = Vec::new();
    let mut failure = None;
    scan_constraints(&constraints, lo, hi, budget, |b| {
        // one of b, -b: first nonzero entry positive
        if b.iter().find(|&&x| x != 0).is_none_or(|&x| x < 0) {
            return ControlFlow::Continue(());
        }
        match norm(b) {
            Ok(n) if n <= radius => candidates.push((n, b.to_vec())),
            Ok(_) => {}
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    candidates.sort();

    let mut search = CubeSearch {
        dim: d,
        target: 0,
        found: false,
        work: 0,
        limit: budget.0 / CUBE_SEARCH_COST,
        radius,
        candidates,
        edges: Vec::new(),
    };
    // largest target first: the norm bound is tightest when many edges are
    // still needed, so deciding "no full cube" is cheap
    for target in (1..d).rev() {
        search.target = target;
        search.extend(&points, 0, 0)?;
        if search.found {
            return Ok(target);
        }
    }
    Ok(0)
}

/// Point lookups per unit of point budget; a lookup costs far more than a
/// step of the box scan.
const CUBE_SEARCH_COST: u128 = 16;

struct CubeSearch {
    dim: usize,
    target: usize,
    found: bool,
    /// point lookups so far, capped by `limit`
    work: u128,
    limit: u128,
    radius: i128,
    /// `(N(b), b)` in increasing order
    candidates: Vec<(i128, Vec<i64>)>,
    edges: Vec<Vec<i64>>,
}

impl CubeSearch {
    fn charge(&mut self, amount: usize) -> Result<()> {
        self.work += amount as u128;
        if self.work > self.limit {
            return Err(Error::SearchTooLarge { budget: self.limit });
        }
        Ok(())
    }

    /// Least total norm of `needed` candidates from index `start` on that
    /// are independent modulo `span`, if it is at most `room`.
    fn greedy_completion(
        &mut self,
        span: &EchelonBasis,
        start: usize,
        needed: usize,
        room: i128,
    ) -> Result<Option<i128>> {
        let mut span = span.clone();
        let mut sum = 0;
        let mut count = 0;
        for j in start..self.candidates.len() {
            self.charge(1)?;
            let n = self.candidates[j].0;
            if sum + (needed - count) as i128 * n > room {
                return Ok(None);
            }
            if span.insert(&self.candidates[j].1)? {
                sum += n;
                count += 1;
                if count == needed {
                    return Ok(Some(sum));
                }
            }
        }
        Ok(None)
    }

    /// Looks for `target` edges. `bases` (sorted) are the points `p` for
    /// which the cube spanned by the current edges at `p` lies in the point
    /// set; `used` is the sum of their norms.
    fn extend(&mut self, bases: &[Vec<i64>], start: usize, used: i128) -> Result<()> {
        if self.edges.len() == self.target {
            self.found = true;
            return Ok(());
        }
        let needed = self.target - self.edges.len();
        let mut span = EchelonBasis::new(self.dim);
        for e in &self.edges {
            span.insert(e)?;
        }
        for i in start..self.candidates.len() {
            // this edge and the remaining ones all have norm >= N(b)
            if used + needed as i128 * self.candidates[i].0 > self.radius {
                break;
            }
            if !span.clone().insert(&self.candidates[i].1)? {
                continue;
            }
            // the cheapest completion from here on is found greedily, since
            // independence modulo the span is a matroid
            if self
                .greedy_completion(&span, i, needed, self.radius - used)?
                .is_none()
            {
                break;
            }
            self.charge(bases.len())?;
            let (n, b) = &self.candidates[i];
            let n = *n;
            // the extended cube at p is the old cube at p and at p + b
            let next: Vec<Vec<i64>> = bases
                .iter()
                .filter(|p| translate(p, b).is_some_and(|q| bases.binary_search(&q).is_ok()))
                .cloned()
                .collect();
            if next.is_empty() {
                continue;
            }
            self.edges.push(b.clone());
            if is_primitive_system(&self.edges)? {
                self.extend(&next, i + 1, used + n)?;
            }
            self.edges.pop();
            if self.found {
                break;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn b() -> PointBudget {
        PointBudget::default()
    }

    #[test]
    fn lattice_free_examples() {
        assert!(is_lattice_free(&Simplex::axis(&[3, 3, 3]).unwrap(), b()).unwrap());
        assert!(!is_lattice_free(&Simplex::axis(&[4, 4, 4]).unwrap(), b()).unwrap());
        assert!(is_lattice_free(&Simplex::unit(3), b()).unwrap());
    }

    #[test]
    fn maximal_examples() {
        assert!(is_maximal_lattice_free(&Simplex::axis(&[2, 2]).unwrap(), b()).unwrap());
        assert!(!is_maximal_lattice_free(&Simplex::unit(3), b()).unwrap());
        assert!(!is_maximal_lattice_free(&Simplex::axis(&[2, 2, 2]).unwrap(), b()).unwrap());
    }

    #[test]
    fn report_examples() {
        let s3 = Simplex::axis(&[3, 3, 3]).unwrap();
        let r = facet_lattice_report(&s3, b()).unwrap();
        assert_eq!(r.facets[0].count(), 1);
        assert_eq!(r.facets[0].span_rank(), Some(0));
        assert_eq!(r.facets[0].sublattice_rank(), Some(0));

        let s1 = Simplex::axis(&[2, 3, 6]).unwrap();
        let r = facet_lattice_report(&s1, b()).unwrap();
        assert_eq!(r.facets[3].count(), 1);
        assert_eq!(r.facets[3].span_rank(), Some(0));

        let u = Simplex::unit(2);
        let r = facet_lattice_report(&u, b()).unwrap();
        assert_eq!(r.facets, vec![FacetLattice::NoPoints; 3]);
    }

    #[test]
    fn ranks_grow_with_facet_size() {
        // facet x3 = 0 of conv(0, 5e1, 5e2, 2e3) holds the interior of a
        // 5-triangle: (1,1),(1,2),(1,3),(2,1),(2,2),(3,1)
        let s = Simplex::axis(&[5, 5, 2]).unwrap();
        let r = facet_lattice_report(&s, b()).unwrap();
        assert_eq!(
            r.facets[3],
            FacetLattice::Points {
                count: 6,
                span_rank: 2,
                sublattice_rank: 2
            }
        );
    }

    #[test]
    fn spanning_is_weaker_than_holding_a_cube() {
        // facet x2 = 0 of S6 holds (1,0,1), (2,0,1), (2,0,2): they span a
        // rank-2 lattice, but no unimodular square fits
        let s6 = Simplex::new(vec![
            vec![0, 0, 0],
            vec![3, 0, 0],
            vec![1, 3, 0],
            vec![2, 0, 3],
        ])
        .unwrap();
        let r = facet_lattice_report(&s6, b()).unwrap();
        assert_eq!(r.facets[2].count(), 3);
        assert_eq!(r.facets[2].span_rank(), Some(2));
        assert_eq!(r.facets[2].sublattice_rank(), Some(1));
        assert_eq!(r.full_rank_facets(), 0);
    }

    #[test]
    fn primitive_systems() {
        assert!(is_primitive_system(&[vec![1, 0, 0]]).unwrap());
        assert!(!is_primitive_system(&[vec![2, 0, 2]]).unwrap());
        assert!(is_primitive_system(&[vec![1, 1, 0], vec![0, 1, 1]]).unwrap());
        assert!(!is_primitive_system(&[vec![1, 1, 0], vec![1, -1, 0]]).unwrap());
    }

    #[test]
    fn triangle_observation() {
        let t = Simplex::axis(&[2, 2]).unwrap();
        let r = facet_lattice_report(&t, b()).unwrap();
        assert!(r
            .facets
            .iter()
            .all(|f| f.count() == 1 && f.sublattice_rank() == Some(0)));
        assert!(observation_holds(&t, b()).unwrap());
    }
}
