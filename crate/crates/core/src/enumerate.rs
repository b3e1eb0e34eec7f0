//! The two classification engines: a bounded search over Hermite-normal-form
//! parameters in dimension three, and the unit-fraction search for simplices
//! with their vertices on the coordinate axes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::classify::is_maximal_lattice_free;
use crate::equivalence::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::polytope::{FacetIneq, PointBudget, Simplex};

/// Entries of the upper triangular vertex matrix
///
/// ```text
/// | a  b  d |
/// | 0  c  e |
/// | 0  0  f |
/// ```
///
/// whose columns, together with the origin, span a 3D simplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnfParams3 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

impl HnfParams3 {
    /// Requires `a >= 1`, `c, f >= 2`, `0 <= b < c` and `0 <= d, e < f`.
    pub fn new(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> Result<Self> {
        let ok = a >= 1
            && c >= 2
            && f >= 2
            && (0..c).contains(&b)
            && (0..f).contains(&d)
            && (0..f).contains(&e);
        if !ok {
            return Err(Error::InvalidInput("HNF parameters out of range"));
        }
        Ok(HnfParams3 { a, b, c, d, e, f })
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&[
            [self.a, self.b, self.d],
            [0, self.c, self.e],
            [0, 0, self.f],
        ])
        .expect("3x3")
    }

    pub fn simplex(&self) -> Simplex {
        Simplex::from_origin_and_columns(&self.matrix()).expect("triangular with positive diagonal")
    }
}

/// Bounds on `(a, c, f)` for maximal simplices with `a >= 2`.
pub const WIDE_BASE_A: (i64, i64) = (2, 6);
pub const WIDE_BASE_C_MAX: i64 = 18;
pub const WIDE_BASE_F_MAX: i64 = 8;

/// Bounds on `(c, f)` for maximal simplices with `a = 1`.
///
/// The case `a = 1, e > 0, c > e` carries no bound of its own: every such
/// simplex is equivalent to one with `a >= 2`, so it is found through the
/// first box and merged by canonical form.
pub const UNIT_BASE_C_MAX: i64 = 8;
pub const UNIT_BASE_F_MAX: i64 = 16;

/// All candidate parameter tuples, in a fixed order.
pub fn candidate_params() -> impl Iterator<Item = HnfParams3> {
    let wide = (WIDE_BASE_A.0..=WIDE_BASE_A.1)
        .flat_map(|a| (2..=WIDE_BASE_C_MAX).map(move |c| (a, c, WIDE_BASE_F_MAX)));
    let unit = (2..=UNIT_BASE_C_MAX).map(|c| (1, c, UNIT_BASE_F_MAX));
    wide.chain(unit).flat_map(|(a, c, f_max)| {
        (2..=f_max).flat_map(move |f| {
            (0..c).flat_map(move |b| {
                (0..f).flat_map(move |d| (0..f).map(move |e| HnfParams3 { a, b, c, d, e, f }))
            })
        })
    })
}

/// One equivalence class found by [`enumerate_3d`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub form: CanonicalForm,
    /// Lexicographically least surviving parameter tuple of the class.
    pub params: HnfParams3,
    pub representative: Simplex,
    /// Number of surviving parameter tuples in the class.
    pub multiplicity: u64,
}

/// Classes sorted by canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassificationResult {
    pub classes: Vec<ClassEntry>,
}

/// Partial result of one shard of the parameter search.
#[derive(Debug, Clone, Default)]
pub struct ShardOutcome {
    classes: BTreeMap<CanonicalForm, ClassEntry>,
}

impl ShardOutcome {
    fn absorb(&mut self, entry: ClassEntry) {
        match self.classes.get_mut(&entry.form) {
            Some(existing) => {
                existing.multiplicity += entry.multiplicity;
                if entry.params < existing.params {
                    existing.params = entry.params;
                    existing.representative = entry.representative;
                }
            }
            None => {
                self.classes.insert(entry.form.clone(), entry);
            }
        }
    }
}

/// Runs the candidates whose position in [`candidate_params`] is congruent
/// to `shard` modulo `shards`.
pub fn enumerate_3d_shard(shard: usize, shards: usize) -> Result<ShardOutcome> {
    if shards == 0 || shard >= shards {
        return Err(Error::InvalidInput("shard index out of range"));
    }
    let budget = PointBudget::default();
    let mut out = ShardOutcome::default();
    for params in candidate_params().skip(shard).step_by(shards) {
        let s = params.simplex();
        if !is_maximal_lattice_free(&s, budget)? {
            continue;
        }
        out.absorb(ClassEntry {
            form: canonical_form(&s)?,
            params,
            representative: s,
            multiplicity: 1,
        });
    }
    Ok(out)
}

/// Combines shards; the result does not depend on how the work was split.
pub fn merge_shards(shards: impl IntoIterator<Item = ShardOutcome>) -> ClassificationResult {
    let mut all = ShardOutcome::default();
    for shard in shards {
        for (_, entry) in shard.classes {
            all.absorb(entry);
        }
    }
    ClassificationResult {
        classes: all.classes.into_values().collect(),
    }
}

/// Every integral maximal lattice-free simplex in dimension three, up to
/// unimodular equivalence.
pub fn enumerate_3d() -> Result<ClassificationResult> {
    Ok(merge_shards([enumerate_3d_shard(0, 1)?]))
}

/// Nondecreasing `lambda_1 <= ... <= lambda_d`, each at least 2, describing
/// `conv(0, lambda_1 e_1, ..., lambda_d e_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisLambda(Vec<i64>);

impl AxisLambda {
    pub fn new(lambdas: Vec<i64>) -> Result<Self> {
        if lambdas.len() < 2 {
            return Err(Error::InvalidInput(
                "axis simplex needs dimension at least 2",
            ));
        }
        if lambdas[0] < 2 || lambdas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(
                "lambdas must be nondecreasing and at least 2",
            ));
        }
        Ok(AxisLambda(lambdas))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn simplex(&self) -> Result<Simplex> {
        Simplex::axis(&self.0)
    }
}

/// `lambda*_1 = 2`, `lambda*_j = 1 + prod_{i<j} lambda*_i` and finally
/// `lambda*_d = prod_{i<d} lambda*_i`.
pub fn sylvester_bounds(d: usize) -> Result<Vec<i64>> {
    if d < 2 {
        return Err(Error::InvalidInput("dimension must be at least 2"));
    }
    let mut out = vec![2i64];
    let mut product = 2i64;
    for _ in 2..d {
        let next = linalg::add(product, 1)?;
        product = linalg::mul(product, next)?;
        out.push(next);
    }
    out.push(product);
    Ok(out)
}

/// Exact fraction in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    fn new(num: i128, den: i128) -> Self {
        let mut g = {
            let (mut a, mut b) = (num.unsigned_abs(), den.unsigned_abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a as i128
        };
        if g == 0 {
            g = 1;
        }
        if den < 0 {
            g = -g;
        }
        Frac {
            num: num / g,
            den: den / g,
        }
    }

    /// `self - 1/x`
    fn minus_unit(self, x: i64) -> Result<Frac> {
        let x = x as i128;
        let num = self
            .num
            .checked_mul(x)
            .and_then(|n| n.checked_sub(self.den))
            .ok_or(Error::Overflow)?;
        let den = self.den.checked_mul(x).ok_or(Error::Overflow)?;
        Ok(Frac::new(num, den))
    }
}

fn unit_fraction_sum_minus_one(lambdas: &[i64]) -> Result<Frac> {
    lambdas
        .iter()
        .try_fold(Frac::new(1, 1), |acc, &x| acc.minus_unit(x))
}

/// Maximal lattice-free iff `sum 1/lambda_j = 1`.
///
/// The slanted facet has `x = (1, ..., 1)` as its least-weight point with
/// positive coordinates, so the simplex is lattice-free iff the sum is at
/// least 1 and the slanted facet has a relative-interior point iff it is at
/// most 1. The coordinate facets are lower-dimensional axis simplices that
/// always carry interior points once every `lambda_j >= 2`.
pub fn axis_is_maximal(lambda: &AxisLambda) -> Result<bool> {
    Ok(unit_fraction_sum_minus_one(lambda.values())?.num == 0)
}

/// The facet opposite the origin, in primitive form.
pub fn axis_facet(lambda: &AxisLambda) -> Result<FacetIneq> {
    let l = lambda
        .values()
        .iter()
        .try_fold(1i64, |acc, &x| linalg::lcm(acc, x))?;
    let alphas: Vec<i64> = lambda.values().iter().map(|&x| l / x).collect();
    let g = alphas.iter().try_fold(0, |g, &x| linalg::gcd(g, x))?;
    Ok(FacetIneq {
        normal: alphas.iter().map(|&x| x / g).collect(),
        rhs: l / g,
        opposite_vertex: 0,
    })
}

/// Every axis vector with `sum 1/lambda_j = 1`, in lexicographic order.
pub fn enumerate_axis(d: usize) -> Result<Vec<AxisLambda>> {
    if d < 2 {
        return Err(Error::InvalidInput("dimension must be at least 2"));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(d);
    unit_fraction_dfs(d, Frac::new(1, 1), 2, &mut prefix, &mut out)?;
    Ok(out)
}

/// Fills the remaining `d - prefix.len()` slots so that their unit
/// fractions sum to `rest`, keeping the sequence nondecreasing from `min`.
fn unit_fraction_dfs(
    d: usize,
    rest: Frac,
    min: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<AxisLambda>,
) -> Result<()> {
    let slots = (d - prefix.len()) as i128;
    if slots == 1 {
        if rest.num == 1 && rest.den >= min as i128 {
            prefix.push(linalg::narrow(rest.den)?);
            out.push(AxisLambda(prefix.clone()));
            prefix.pop();
        }
        return Ok(());
    }
    // 1/x < rest, and slots/x >= rest since later terms are no larger
    let lo = (min as i128).max(rest.den / rest.num + 1);
    let hi = slots.checked_mul(rest.den).ok_or(Error::Overflow)? / rest.num;
    for x in lo..=hi {
        let x = linalg::narrow(x)?;
        prefix.push(x);
        unit_fraction_dfs(d, rest.minus_unit(x)?, x, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(v: &[i64]) -> AxisLambda {
        AxisLambda::new(v.to_vec()).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(HnfParams3::new(1, 2, 4, 3, 0, 4).is_ok());
        assert!(HnfParams3::new(0, 0, 2, 0, 0, 2).is_err());
        assert!(HnfParams3::new(1, 4, 4, 0, 0, 2).is_err());
        assert!(HnfParams3::new(1, 0, 1, 0, 0, 2).is_err());
        assert!(HnfParams3::new(1, 0, 2, 0, 2, 2).is_err());
    }

    #[test]
    fn candidate_count() {
        let wide: i64 = 5 * (2..=18).sum::<i64>() * (2..=8).map(|f| f * f).sum::<i64>();
        let unit: i64 = (2..=8).sum::<i64>() * (2..=16).map(|f| f * f).sum::<i64>();
        assert_eq!(candidate_params().count() as i64, wide + unit);
    }

    #[test]
    fn filtered_candidate() {
        let p = HnfParams3::new(2, 0, 2, 0, 0, 2).unwrap();
        assert!(!is_maximal_lattice_free(&p.simplex(), PointBudget::default()).unwrap());
        let p = HnfParams3::new(1, 2, 4, 3, 0, 4).unwrap();
        assert!(is_maximal_lattice_free(&p.simplex(), PointBudget::default()).unwrap());
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(sylvester_bounds(2).unwrap(), vec![2, 2]);
        assert_eq!(sylvester_bounds(3).unwrap(), vec![2, 3, 6]);
        assert_eq!(sylvester_bounds(4).unwrap(), vec![2, 3, 7, 42]);
        assert_eq!(sylvester_bounds(5).unwrap(), vec![2, 3, 7, 43, 1806]);
        assert_eq!(sylvester_bounds(7).unwrap()[6], 10_650_056_950_806);
        assert_eq!(sylvester_bounds(8), Err(Error::Overflow));
        assert!(sylvester_bounds(1).is_err());
    }

    #[test]
    fn axis_enumeration_small() {
        let two: Vec<_> = enumerate_axis(2).unwrap();
        assert_eq!(two, vec![lam(&[2, 2])]);
        let three = enumerate_axis(3).unwrap();
        assert_eq!(
            three,
            vec![lam(&[2, 3, 6]), lam(&[2, 4, 4]), lam(&[3, 3, 3])]
        );
    }

    #[test]
    fn axis_maximality_examples() {
        assert!(axis_is_maximal(&lam(&[2, 3, 7, 43, 1806])).unwrap());
        assert!(!axis_is_maximal(&lam(&[2, 2, 2])).unwrap());
        assert!(!axis_is_maximal(&lam(&[4, 4, 4, 5])).unwrap());
    }

    #[test]
    fn axis_facet_examples() {
        let f = axis_facet(&lam(&[2, 3, 7, 42])).unwrap();
        assert_eq!((f.normal, f.rhs), (vec![21, 14, 6, 1], 42));
        let f = axis_facet(&lam(&[4, 4, 4, 4])).unwrap();
        assert_eq!((f.normal, f.rhs), (vec![1, 1, 1, 1], 4));
        let f = axis_facet(&lam(&[2, 2])).unwrap();
        assert_eq!((f.normal, f.rhs), (vec![1, 1], 2));
    }

    #[test]
    fn axis_lambda_validation() {
        assert!(AxisLambda::new(vec![1, 2]).is_err());
        assert!(AxisLambda::new(vec![3, 2]).is_err());
        assert!(AxisLambda::new(vec![2]).is_err());
    }
}
