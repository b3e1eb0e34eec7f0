mod common;

use latfree_core::{PointBudget, Region, Simplex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn simplex3() -> impl Strategy<Value = Simplex> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 4)
        .prop_filter_map("degenerate", |v| Simplex::new(v).ok())
}

/// Full box scan with barycentric-free rational test: `x` lies in the
/// closed simplex iff every facet inequality holds.
fn box_scan(s: &Simplex, strict: bool) -> Vec<Vec<i64>> {
    let facets = s.facets().unwrap();
    let d = s.dim();
    let lo: Vec<i64> = (0..d)
        .map(|i| s.vertices().iter().map(|v| v[i]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|i| s.vertices().iter().map(|v| v[i]).max().unwrap())
        .collect();
    let mut out = Vec::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let p = vec![x, y, z];
                if facets.iter().all(|f| {
                    let v = f.eval(&p).unwrap();
                    if strict {
                        v < f.rhs
                    } else {
                        v <= f.rhs
                    }
                }) {
                    out.push(p);
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn vertices_are_tight_on_exactly_d_facets(s in simplex3()) {
        let facets = s.facets().unwrap();
        for (k, v) in s.vertices().iter().enumerate() {
            let tight = facets.iter().filter(|f| f.eval(v).unwrap() == f.rhs).count();
            prop_assert_eq!(tight, 3);
            prop_assert!(facets[k].eval(v).unwrap() < facets[k].rhs);
        }
        for f in &facets {
            let g = f.normal.iter().fold(0i64, |g, &x| num_gcd(g, x));
            prop_assert_eq!(g, 1);
        }
    }

    #[test]
    fn scan_agrees_with_box_scan(s in simplex3()) {
        let b = PointBudget::default();
        prop_assert_eq!(s.lattice_points(Region::Interior, b).unwrap(), box_scan(&s, true));
        prop_assert_eq!(s.lattice_points(Region::Closure, b).unwrap(), box_scan(&s, false));
    }

    #[test]
    fn interior_plus_boundary_is_closure(s in simplex3()) {
        let b = PointBudget::default();
        let facets = s.facets().unwrap();
        let closure = s.lattice_points(Region::Closure, b).unwrap();
        let interior = s.lattice_points(Region::Interior, b).unwrap();
        let boundary: Vec<_> = closure
            .iter()
            .filter(|p| facets.iter().any(|f| f.eval(p).unwrap() == f.rhs))
            .cloned()
            .collect();
        prop_assert_eq!(interior.len() + boundary.len(), closure.len());
        prop_assert!(interior.iter().all(|p| !boundary.contains(p)));
        // each facet's relative interior sits in the boundary
        for k in 0..=3 {
            for p in s.facet_relint_points(k, b).unwrap() {
                prop_assert!(boundary.contains(&p));
            }
        }
    }

    #[test]
    fn closure_count_is_unimodular_invariant(s in simplex3(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = common::random_unimodular(&mut rng, 3);
        let v = common::random_shift(&mut rng, 3);
        let t = s.transform(&m, &v).unwrap();
        let b = PointBudget::default();
        prop_assert_eq!(
            s.lattice_points(Region::Closure, b).unwrap().len(),
            t.lattice_points(Region::Closure, b).unwrap().len()
        );
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}
