//! JSON report documents. Every report carries the tool name and version;
//! all numbers are exact integers.

use latfree_core::{
    axis_facet, AxisLambda, ClassificationResult, EquivalenceWitness, FacetIneq, FacetLattice,
    FacetLatticeReport, HnfParams3,
};
use serde::Serialize;

use crate::format::{CanonicalDoc, SimplexDoc};

pub const TOOL: &str = "latfree";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Report<I: Serialize, R: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub inputs: I,
    pub results: R,
}

impl<I: Serialize, R: Serialize> Report<I, R> {
    pub fn new(command: &'static str, inputs: I, results: R) -> Self {
        Report {
            tool: TOOL,
            version: VERSION,
            command,
            inputs,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Serialize)]
pub struct NoInputs {}

#[derive(Debug, Serialize)]
pub struct ParamsDoc {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

impl From<&HnfParams3> for ParamsDoc {
    fn from(p: &HnfParams3) -> Self {
        ParamsDoc {
            a: p.a,
            b: p.b,
            c: p.c,
            d: p.d,
            e: p.e,
            f: p.f,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassDoc {
    pub params: ParamsDoc,
    pub representative: SimplexDoc,
    pub canonical_form: CanonicalDoc,
    pub multiplicity: u64,
}

#[derive(Debug, Serialize)]
pub struct Enumerate3dResults {
    pub class_count: usize,
    pub classes: Vec<ClassDoc>,
}

impl From<&ClassificationResult> for Enumerate3dResults {
    fn from(r: &ClassificationResult) -> Self {
        Enumerate3dResults {
            class_count: r.classes.len(),
            classes: r
                .classes
                .iter()
                .map(|c| ClassDoc {
                    params: (&c.params).into(),
                    representative: SimplexDoc::from_simplex(&c.representative),
                    canonical_form: (&c.form).into(),
                    multiplicity: c.multiplicity,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DimInput {
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityDoc {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

impl From<&FacetIneq> for InequalityDoc {
    fn from(f: &FacetIneq) -> Self {
        InequalityDoc {
            normal: f.normal.clone(),
            rhs: f.rhs,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AxisRow {
    pub lambdas: Vec<i64>,
    pub facet: InequalityDoc,
}

#[derive(Debug, Serialize)]
pub struct AxisResults {
    pub dim: usize,
    pub sylvester_bounds: Vec<i64>,
    pub count: usize,
    pub simplices: Vec<AxisRow>,
}

impl AxisResults {
    pub fn new(dim: usize, bounds: Vec<i64>, lambdas: &[AxisLambda]) -> latfree_core::Result<Self> {
        let simplices = lambdas
            .iter()
            .map(|l| {
                Ok(AxisRow {
                    lambdas: l.values().to_vec(),
                    facet: (&axis_facet(l)?).into(),
                })
            })
            .collect::<latfree_core::Result<Vec<_>>>()?;
        Ok(AxisResults {
            dim,
            sylvester_bounds: bounds,
            count: simplices.len(),
            simplices,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct FileInput {
    pub file: String,
}

#[derive(Debug, Serialize)]
pub struct FacetDoc {
    pub opposite_vertex: usize,
    pub inequality: InequalityDoc,
    pub interior_points: u64,
    /// `null` when the facet has no relative-interior integer point
    pub span_rank: Option<usize>,
    pub sublattice_rank: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct CheckResults {
    pub dim: usize,
    pub lattice_free: bool,
    pub maximal: bool,
    pub facets: Vec<FacetDoc>,
    /// Sublattice rank per facet, `null` for facets without points.
    pub facet_ranks: Vec<Option<usize>>,
    /// Only meaningful for maximal simplices; `null` otherwise.
    pub observation_holds: Option<bool>,
}

impl CheckResults {
    pub fn new(
        dim: usize,
        lattice_free: bool,
        maximal: bool,
        facets: &[FacetIneq],
        report: &FacetLatticeReport,
    ) -> Self {
        let docs: Vec<FacetDoc> = facets
            .iter()
            .zip(&report.facets)
            .map(|(f, l)| FacetDoc {
                opposite_vertex: f.opposite_vertex,
                inequality: f.into(),
                interior_points: l.count(),
                span_rank: l.span_rank(),
                sublattice_rank: l.sublattice_rank(),
            })
            .collect();
        CheckResults {
            dim,
            lattice_free,
            maximal,
            facet_ranks: report
                .facets
                .iter()
                .map(FacetLattice::sublattice_rank)
                .collect(),
            facets: docs,
            observation_holds: maximal.then(|| report.full_rank_facets() <= 1),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PairInput {
    pub first: String,
    pub second: String,
}

#[derive(Debug, Serialize)]
pub struct WitnessDoc {
    /// Rows of the unimodular matrix.
    pub m: Vec<Vec<i64>>,
    pub v: Vec<i64>,
    /// `first.vertices[j] = m * second.vertices[sigma[j]] + v`
    pub sigma: Vec<usize>,
}

impl From<&EquivalenceWitness> for WitnessDoc {
    fn from(w: &EquivalenceWitness) -> Self {
        WitnessDoc {
            m: w.m.to_rows(),
            v: w.v.clone(),
            sigma: w.sigma.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EquivResults {
    pub equivalent: bool,
    pub witness: Option<WitnessDoc>,
}
