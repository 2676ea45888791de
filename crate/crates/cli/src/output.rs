//! JSON shapes emitted by the commands. Field order here is output order.

use num_traits::Zero;
use serde::Serialize;

use tlcell_core::cellular::DecompositionMatrix;
use tlcell_core::oracle::CommutantReport;
use tlcell_core::{CyclotomicScalar, LaurentPoly, Matrix, PlanarDiagram, RationalFunction, TLElement};

/// A scalar as readable text plus its exact raw form.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Scalar {
    pub value: String,
    pub raw: Raw,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Raw {
    /// Numerator and denominator as `[exponent of v, coefficient]`, lowest first.
    Generic { num: Vec<(i64, String)>, den: Vec<(i64, String)> },
    /// Residue `sum c_k z^k` modulo the n-th cyclotomic polynomial, as `[k, "p/q"]`.
    Cyclotomic { order: u32, residue: Vec<(usize, String)> },
}

fn laurent_pairs(p: &LaurentPoly) -> Vec<(i64, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

impl From<&RationalFunction> for Scalar {
    fn from(x: &RationalFunction) -> Self {
        Scalar { value: x.to_string(), raw: Raw::Generic { num: laurent_pairs(x.numerator()), den: laurent_pairs(x.denominator()) } }
    }
}

impl From<&CyclotomicScalar> for Scalar {
    fn from(x: &CyclotomicScalar) -> Self {
        let residue = x.residue().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.to_string())).collect();
        Scalar { value: x.to_string(), raw: Raw::Cyclotomic { order: x.order(), residue } }
    }
}

#[derive(Debug, Serialize)]
pub struct Diagram {
    pub source: usize,
    pub target: usize,
    /// Endpoint pairs; bottom points are negative, top points positive.
    pub pairs: Vec<[i64; 2]>,
}

impl From<&PlanarDiagram> for Diagram {
    fn from(d: &PlanarDiagram) -> Self {
        Diagram { source: d.source(), target: d.target(), pairs: d.signed_pairs() }
    }
}

#[derive(Debug, Serialize)]
pub struct Term {
    pub diagram: Diagram,
    pub coeff: Scalar,
}

#[derive(Debug, Serialize)]
pub struct JwOutput {
    pub d: usize,
    pub terms: Vec<Term>,
}

impl JwOutput {
    pub fn new(d: usize, p: &TLElement<tlcell_core::Generic>) -> Self {
        let terms = p.sorted_terms().into_iter().map(|(dg, c)| Term { diagram: dg.into(), coeff: c.into() }).collect();
        JwOutput { d, terms }
    }
}

#[derive(Debug, Serialize)]
pub struct CountOutput {
    /// `b(d, r; t)` for `t = dr, dr - 2, ...` read from the smallest `t` up.
    pub b: Vec<u64>,
    pub total: u64,
}

#[derive(Debug, Serialize)]
pub struct GramOutput {
    pub d: usize,
    pub r: usize,
    pub t: usize,
    /// Order of `v`; absent over `Q(v)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    pub basis: Vec<Diagram>,
    pub matrix: Vec<Vec<Scalar>>,
    pub rank: usize,
}

pub fn scalar_matrix<E>(m: &Matrix<E>) -> Vec<Vec<Scalar>>
where
    for<'a> &'a E: Into<Scalar>,
{
    m.iter_rows().map(|row| row.iter().map(Into::into).collect()).collect()
}

#[derive(Debug, Serialize)]
pub struct TableRowOutput {
    pub t: usize,
    pub b: u64,
    pub m: u64,
    pub mu: u64,
    pub ranks: std::collections::BTreeMap<&'static str, u64>,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct DecompositionOutput {
    pub cells: Vec<usize>,
    /// `matrix[i][j] = d_{s t}` with `s = cells[i]`, `t = cells[j]`.
    pub matrix: Vec<Vec<u8>>,
    pub consistent: bool,
}

impl DecompositionOutput {
    pub fn new(dm: &DecompositionMatrix, b: &[u64], mu: &[u64]) -> Self {
        DecompositionOutput { cells: dm.cells.clone(), matrix: dm.dense(), consistent: dm.violations(b, mu).is_empty() }
    }
}

#[derive(Debug, Serialize)]
pub struct TableOutput {
    pub d: usize,
    pub r: usize,
    pub ell: usize,
    pub order: u32,
    pub routes: Vec<&'static str>,
    pub rows: Vec<TableRowOutput>,
    pub agree: bool,
    pub total_dimension: u64,
    pub edge_case: bool,
    pub decomposition: DecompositionOutput,
}

#[derive(Debug, Serialize)]
pub struct OracleOutput {
    pub d: usize,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    pub divided_power_bound: usize,
    pub unknowns: usize,
    pub end_dim: usize,
    /// `[weight, dimension]`, lowest weight first.
    pub weight_dims: Vec<(i64, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub highest_weight_counts: Option<Vec<(usize, usize)>>,
}

impl From<&CommutantReport> for OracleOutput {
    fn from(r: &CommutantReport) -> Self {
        OracleOutput {
            d: r.d,
            r: r.r,
            order: r.order,
            divided_power_bound: r.bound,
            unknowns: r.unknowns,
            end_dim: r.end_dim,
            weight_dims: r.weight_dims.iter().map(|(&w, &n)| (w, n)).collect(),
            highest_weight_counts: r.highest_weight_counts.as_ref().map(|m| m.iter().map(|(&t, &n)| (t, n)).collect()),
        }
    }
}
