use std::collections::BTreeMap;

use serde::Serialize;

use tlcell_core::cellular::{decomposition_matrix, ensure_specializable, generic_rank, gram_matrix, gram_matrix_at, multiplicity_table};
use tlcell_core::diagrams::{b_total, b_vector, basis_diagrams};
use tlcell_core::linalg::rank;
use tlcell_core::oracle::commutant_report;
use tlcell_core::projectors::jones_wenzl;
use tlcell_core::{Error, MultiplicityTable, Route, SpecializationParams};

use crate::output::{scalar_matrix, CountOutput, DecompositionOutput, GramOutput, JwOutput, OracleOutput, TableOutput, TableRowOutput};
use crate::{CliError, RouteArg};

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize");
    s.push('\n');
    s
}

pub fn selected_routes(arg: RouteArg) -> Vec<Route> {
    match arg {
        RouteArg::Formula => vec![Route::Formula],
        RouteArg::Recursive => vec![Route::Recursion],
        RouteArg::Weights => vec![Route::Weights],
        RouteArg::Gram => vec![Route::GramRank],
        RouteArg::All => vec![Route::Formula, Route::Recursion, Route::Weights, Route::GramRank],
    }
}

/// `ell > d` first, so that case is reported as such rather than as a
/// vanishing denominator.
fn require_ell(d: usize, params: &SpecializationParams) -> Result<(), CliError> {
    if params.ell() as usize <= d {
        return Err(Error::EllTooSmall { ell: params.ell(), d }.into());
    }
    Ok(ensure_specializable(d, params)?)
}

pub fn mult_table(d: usize, r: usize, params: &SpecializationParams, routes: &[Route]) -> Result<TableOutput, CliError> {
    require_ell(d, params)?;
    let ell = params.ell() as usize;
    let table = if routes.contains(&Route::GramRank) {
        multiplicity_table(d, r, params)?
    } else {
        MultiplicityTable::new(d, r, ell, &b_vector(d, r))?
    };
    let mut rows = Vec::new();
    for row in &table.rows {
        let ranks: BTreeMap<&'static str, u64> = routes.iter().map(|&x| (x.name(), row.routes[&x])).collect();
        let first = row.routes[&routes[0]];
        let agree = ranks.values().all(|&v| v == first);
        rows.push(TableRowOutput { t: row.t, b: row.b, m: row.m, mu: first, ranks, agree });
    }
    let mut mu = vec![0; d * r + 1];
    for row in &rows {
        mu[row.t] = row.mu;
    }
    let dm = decomposition_matrix(d, r, ell)?;
    Ok(TableOutput {
        d,
        r,
        ell,
        order: params.order(),
        routes: routes.iter().map(|x| x.name()).collect(),
        agree: rows.iter().all(|x| x.agree),
        rows,
        total_dimension: tlcell_core::tilting::total_dimension(&mu, ell)?,
        edge_case: table.is_edge_case(),
        decomposition: DecompositionOutput::new(&dm, &b_vector(d, r), &mu),
    })
}

pub fn table_csv(table: &TableOutput) -> String {
    let mut s = format!("t,b,m,mu,{},agree\n", table.routes.join(","));
    for row in &table.rows {
        let ranks: Vec<String> = table.routes.iter().map(|x| row.ranks[x].to_string()).collect();
        s.push_str(&format!("{},{},{},{},{},{}\n", row.t, row.b, row.m, row.mu, ranks.join(","), row.agree));
    }
    s
}

pub fn gram(d: usize, r: usize, t: usize, params: Option<&SpecializationParams>) -> Result<String, CliError> {
    let (matrix, rk) = match params {
        None => {
            let g = gram_matrix(d, r, t)?;
            (scalar_matrix(&g), generic_rank(&g))
        }
        Some(p) => {
            require_ell(d, p)?;
            let g = gram_matrix_at(d, r, t, p)?;
            (scalar_matrix(&g), rank(&p.field(), &g))
        }
    };
    let basis = basis_diagrams(d, r, t).iter().map(Into::into).collect();
    Ok(to_json(&GramOutput { d, r, t, order: params.map(SpecializationParams::order), basis, matrix, rank: rk }))
}

pub fn jw(d: usize) -> String {
    to_json(&JwOutput::new(d, &jones_wenzl(d)))
}

pub fn count(d: usize, r: usize) -> String {
    let n = d * r;
    let b = b_vector(d, r);
    let b = (0..=n).filter(|t| (n - t) % 2 == 0).map(|t| b[t]).collect();
    to_json(&CountOutput { b, total: b_total(d, r) as u64 })
}

pub fn oracle(d: usize, r: usize, params: Option<&SpecializationParams>) -> Result<String, CliError> {
    if let Some(p) = params {
        require_ell(d, p)?;
    }
    let report = commutant_report(d, r, params).map_err(|e| match e {
        Error::DimensionBound { .. } => CliError::Usage(e.to_string()),
        e => e.into(),
    })?;
    Ok(to_json(&OracleOutput::from(&report)))
}
