//! The verification suites behind `tlcell verify`.
//!
//! Each check reports an expected and an actual value and passes on exact
//! equality. Checks run on a small worker pool and are reported in
//! declaration order, so the report depends only on the suite and seed.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use tlcell_core::arith::{parse_cyclotomic, parse_rational_function, quantum_binomial, quantum_factorial, quantum_integer, specialize};
use tlcell_core::cellular::{
    decomposition_matrix, generic_rank, gram_matrix, gram_matrix_at, multiplicity_table, simple_dims, verify_c3, C3Config, CellDatum,
};
use tlcell_core::diagrams::{b_total, b_vector, basis_diagrams, enumerate_all, enumerate_monic_all, m_vector, tableaux};
use tlcell_core::linalg::{determinant, Matrix};
use tlcell_core::oracle::{commutant_dim, divided_power_bound, highest_weight_counts, mat_mul, mat_scale, tensor_action, weyl_action};
use tlcell_core::projectors::{hecke_symmetrizer_image, jones_wenzl, tensor_projector, BlockProjector};
use tlcell_core::tilting::{example_sub_closed_form, sub_top_determinant, total_dimension, weight_dim, TiltingShape};
use tlcell_core::{Field, Generic, LaurentPoly, PlanarDiagram, RationalFunction, Route, SpecializationParams, TLElement};

use crate::Suite;

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub params: Value,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

type Outcome = Result<(Value, Value), String>;

struct Check {
    id: String,
    params: Value,
    job: Box<dyn Fn() -> Outcome + Send + Sync>,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, id: &str, params: Value, job: impl Fn() -> Outcome + Send + Sync + 'static) {
        self.0.push(Check { id: id.to_string(), params, job: Box::new(job) });
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Arith => "arith",
        Suite::Diagrams => "diagrams",
        Suite::Jw => "jw",
        Suite::Cellular => "cellular",
        Suite::Tilting => "tilting",
        Suite::Oracle => "oracle",
        Suite::All => "all",
    }
}

pub fn run(suite: Suite, seed: u64, threads: usize, inject_failure: bool, timing: bool) -> Report {
    let mut checks = Checks::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Arith {
        arith(&mut checks, seed);
    }
    if all || suite == Suite::Diagrams {
        diagrams(&mut checks, seed);
    }
    if all || suite == Suite::Jw {
        jw(&mut checks);
    }
    if all || suite == Suite::Cellular {
        cellular(&mut checks, seed);
    }
    if all || suite == Suite::Tilting {
        tilting(&mut checks);
    }
    if all || suite == Suite::Oracle {
        oracle(&mut checks);
    }
    if inject_failure {
        injected(&mut checks);
    }
    let results = execute(checks.0, threads, timing);
    let passed = results.iter().all(|c| c.pass);
    Report { suite: suite_name(suite), seed, checks: results, passed }
}

fn execute(checks: Vec<Check>, threads: usize, timing: bool) -> Vec<CheckResult> {
    let next = AtomicUsize::new(0);
    let done = Mutex::new(Vec::with_capacity(checks.len()));
    std::thread::scope(|scope| {
        for _ in 0..threads.min(checks.len()).max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(check) = checks.get(i) else { break };
                let start = Instant::now();
                let (expected, actual) = match (check.job)() {
                    Ok(pair) => pair,
                    Err(msg) => (Value::Null, json!({ "error": msg })),
                };
                if timing {
                    eprintln!("{} {} {:.3}s", check.id, check.params, start.elapsed().as_secs_f64());
                }
                let pass = !expected.is_null() && expected == actual;
                let result = CheckResult { id: check.id.clone(), params: check.params.clone(), expected, actual, pass };
                done.lock().unwrap().push((i, result));
            });
        }
    });
    let mut done = done.into_inner().unwrap();
    done.sort_by_key(|(i, _)| *i);
    done.into_iter().map(|(_, r)| r).collect()
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let low = rng.gen_range(-4i64..=4);
    let len = rng.gen_range(0..5);
    LaurentPoly::from_terms((0..len).map(|k| (low + k, rng.gen_range(-3i64..=3))))
}

fn random_ratfunc(rng: &mut ChaCha8Rng) -> RationalFunction {
    let num = random_laurent(rng);
    loop {
        let den = random_laurent(rng);
        if let Some(x) = RationalFunction::new(num.clone(), den) {
            return x;
        }
    }
}

fn axioms_hold<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> bool {
    f.add(&f.add(a, b), c) == f.add(a, &f.add(b, c))
        && f.mul(a, &f.add(b, c)) == f.add(&f.mul(a, b), &f.mul(a, c))
        && f.mul(&f.mul(a, b), c) == f.mul(a, &f.mul(b, c))
        && (f.is_zero(a) || f.inv(a).is_some_and(|x| f.is_one(&f.mul(a, &x))))
}

const SAMPLES: usize = 64;

fn arith(checks: &mut Checks, seed: u64) {
    checks.add("arith.field_axioms", json!({ "field": "Q(v)", "samples": SAMPLES }), move || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ok = (0..SAMPLES)
            .filter(|_| {
                let (a, b, c) = (random_ratfunc(&mut rng), random_ratfunc(&mut rng), random_ratfunc(&mut rng));
                axioms_hold(&Generic, &a, &b, &c)
            })
            .count();
        Ok((json!(SAMPLES), json!(ok)))
    });
    for n in [8u32, 12, 15, 20] {
        checks.add("arith.field_axioms", json!({ "field": "cyclotomic", "order": n, "samples": SAMPLES }), move || {
            let params = SpecializationParams::new(n).map_err(err)?;
            let f = params.field();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(n));
            let mut elem = || loop {
                if let Ok(x) = specialize(&random_ratfunc(&mut rng), &params) {
                    return x;
                }
            };
            let ok = (0..SAMPLES)
                .filter(|_| {
                    let (a, b, c) = (elem(), elem(), elem());
                    axioms_hold(&f, &a, &b, &c)
                })
                .count();
            Ok((json!(SAMPLES), json!(ok)))
        });
        checks.add("arith.specialize_homomorphism", json!({ "order": n, "samples": SAMPLES }), move || {
            let params = SpecializationParams::new(n).map_err(err)?;
            let f = params.field();
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(u64::from(n)));
            let (mut defined, mut ok) = (0, 0);
            for _ in 0..SAMPLES {
                let (a, b) = (random_ratfunc(&mut rng), random_ratfunc(&mut rng));
                if let (Ok(x), Ok(y)) = (specialize(&a, &params), specialize(&b, &params)) {
                    defined += 1;
                    let sum = specialize(&(&a + &b), &params).map_err(err)?;
                    let prod = specialize(&(&a * &b), &params).map_err(err)?;
                    ok += usize::from(sum == f.add(&x, &y) && prod == f.mul(&x, &y));
                }
            }
            Ok((json!(defined), json!(ok)))
        });
        checks.add("arith.print_parse", json!({ "order": n, "samples": SAMPLES }), move || {
            let params = SpecializationParams::new(n).map_err(err)?;
            let f = params.field();
            let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(n));
            let mut ok = 0;
            for _ in 0..SAMPLES {
                let a = random_ratfunc(&mut rng);
                let generic = parse_rational_function(&a.to_string()).map_err(err)? == a;
                let special = match specialize(&a, &params) {
                    Ok(x) => parse_cyclotomic(&f.render(&x), &f).map_err(err)? == x,
                    Err(_) => true,
                };
                ok += usize::from(generic && special);
            }
            Ok((json!(SAMPLES), json!(ok)))
        });
    }
    checks.add("arith.quantum_integer_bar", json!({ "m": "-12..=12" }), || {
        let bad: Vec<i64> = (-12..=12).filter(|&m| quantum_integer(m).bar() != quantum_integer(m)).collect();
        Ok((json!([]), json!(bad)))
    });
    for m in 0..=10usize {
        checks.add("arith.quantum_binomial", json!({ "m": m }), move || {
            let mut products = Vec::new();
            for j in 0..=m {
                let c = quantum_binomial(m, j).map_err(err)?;
                products.push((&(&c * &quantum_factorial(j)) * &quantum_factorial(m - j)).to_string());
            }
            Ok((json!(vec![quantum_factorial(m).to_string(); m + 1]), json!(products)))
        });
    }
    for ell in 2..=7u32 {
        checks.add("arith.quantum_integer_vanishing", json!({ "ell": ell, "m": "1..=30" }), move || {
            let f = SpecializationParams::from_ell(ell).map_err(err)?.field();
            let zeros: Vec<i64> = (1..=30).filter(|&m| f.is_zero(&f.from_laurent(&quantum_integer(m)))).collect();
            let multiples: Vec<i64> = (1..=30).filter(|m| m % i64::from(ell) == 0).collect();
            Ok((json!(multiples), json!(zeros)))
        });
    }
}

fn catalan(n: usize) -> u64 {
    (0..n as u64).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn diagrams(checks: &mut Checks, seed: u64) {
    for d in 1..=4 {
        for r in 1..=5 {
            checks.add("diagrams.b_equals_m", json!({ "d": d, "r": r }), move || {
                let b: Vec<usize> = (0..=d * r).map(|t| basis_diagrams(d, r, t).len()).collect();
                Ok((json!(m_vector(d, r)), json!(b)))
            });
        }
    }
    for n in 0..=10 {
        checks.add("diagrams.catalan", json!({ "n": n }), move || {
            let squares: u64 = (0..=n).filter(|t| (n - t) % 2 == 0).map(|t| (enumerate_monic_all(t, n).len() as u64).pow(2)).sum();
            Ok((json!([catalan(n), catalan(n)]), json!([enumerate_all(n, n).len(), squares])))
        });
    }
    for n in 1..=10 {
        checks.add("diagrams.descents", json!({ "n": n }), move || {
            let all = enumerate_all(n, n);
            let ok = all
                .iter()
                .filter(|x| tableaux(x).is_ok_and(|(s, t)| s.descents() == x.left_set() && t.descents() == x.right_set()))
                .count();
            Ok((json!(all.len()), json!(ok)))
        });
    }
    for n in 1..=8 {
        checks.add("diagrams.monic_factorization", json!({ "n": n }), move || {
            let all = enumerate_all(n, n);
            let ok = all
                .iter()
                .filter(|x| {
                    let (a, b) = x.factor_monic();
                    a.is_monic() && b.is_monic() && PlanarDiagram::from_monic_pair(&a, &b).as_ref() == Ok(x)
                })
                .count();
            Ok((json!(all.len()), json!(ok)))
        });
    }
    checks.add("diagrams.associativity", json!({ "shapes": [2, 6, 6, 4], "samples": SAMPLES }), move || {
        let (a, b, c) = (enumerate_all(2, 6), enumerate_all(6, 6), enumerate_all(6, 4));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = 0;
        for _ in 0..SAMPLES {
            let x = &a[rng.gen_range(0..a.len())];
            let y = &b[rng.gen_range(0..b.len())];
            let z = &c[rng.gen_range(0..c.len())];
            let (xy, k1) = x.compose(y).map_err(err)?;
            let (left, k2) = xy.compose(z).map_err(err)?;
            let (yz, k3) = y.compose(z).map_err(err)?;
            let (right, k4) = x.compose(&yz).map_err(err)?;
            ok += usize::from(left == right && k1 + k2 == k3 + k4 && left.is_planar());
        }
        Ok((json!(SAMPLES), json!(ok)))
    });
}

fn idempotent(f: &Generic, p: &TLElement<Generic>) -> Result<bool, String> {
    Ok(p.compose(f, p).map_err(err)? == *p)
}

/// `den` divides a power of `[d]!` iff it divides `([d]!)^k` with `k` its length.
fn divides_power(den: &LaurentPoly, base: &LaurentPoly) -> bool {
    let k = (den.high_exp() - den.low_exp()) as u32 + 1;
    base.pow(k).div_exact(den).is_some()
}

fn jw(checks: &mut Checks) {
    let f = Generic;
    for d in 1..=6 {
        checks.add("jw.identity_coefficient", json!({ "d": d }), move || {
            let c = jones_wenzl(d).coeff(&PlanarDiagram::identity(d)).map(ToString::to_string);
            Ok((json!("1"), json!(c)))
        });
        checks.add("jw.idempotent", json!({ "d": d }), move || Ok((json!(true), json!(idempotent(&f, &jones_wenzl(d))?))));
        checks.add("jw.annihilated", json!({ "d": d }), move || {
            let p = jones_wenzl(d);
            let mut nonzero = Vec::new();
            for i in 1..d {
                let fi = TLElement::from_diagram(&f, PlanarDiagram::generator_f(i, d).map_err(err)?);
                if !fi.compose(&f, &p).map_err(err)?.is_empty() || !p.compose(&f, &fi).map_err(err)?.is_empty() {
                    nonzero.push(i);
                }
            }
            Ok((json!([]), json!(nonzero)))
        });
        checks.add("jw.denominators", json!({ "d": d }), move || {
            let base = quantum_factorial(d);
            let bad = jones_wenzl(d).terms().filter(|(_, c)| !divides_power(c.denominator(), &base)).count();
            Ok((json!(0), json!(bad)))
        });
    }
    for d in 1..=5 {
        checks.add("jw.hecke_image", json!({ "d": d }), move || Ok((json!(true), json!(hecke_symmetrizer_image(d) == *jones_wenzl(d)))));
    }
    // the dr <= 12 cases where p has at most a few hundred terms
    for (d, r) in [(1, 12), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (4, 2)] {
        checks.add("jw.tensor_idempotent", json!({ "d": d, "r": r }), move || Ok((json!(true), json!(idempotent(&f, &tensor_projector(d, r))?))));
    }
}

fn cellular(checks: &mut Checks, seed: u64) {
    for d in 1..=4usize {
        for r in 1..=8 / d {
            checks.add("cellular.generic_rank", json!({ "d": d, "r": r }), move || {
                let n = d * r;
                let mut ranks = Vec::new();
                let mut symmetric = true;
                for t in (0..=n).filter(|t| (n - t) % 2 == 0) {
                    let g = gram_matrix(d, r, t).map_err(err)?;
                    symmetric &= g.is_symmetric();
                    ranks.push(generic_rank(&g));
                }
                let b = b_vector(d, r);
                let expect: Vec<usize> = (0..=n).filter(|t| (n - t) % 2 == 0).map(|t| b[t] as usize).collect();
                Ok((json!({ "ranks": expect, "symmetric": true }), json!({ "ranks": ranks, "symmetric": symmetric })))
            });
        }
    }
    for (d, r) in [(1, 4), (2, 2), (2, 3), (3, 2)] {
        for ell in d + 1..=5 {
            checks.add("cellular.specialization_commutes", json!({ "d": d, "r": r, "ell": ell }), move || {
                let params = SpecializationParams::from_ell(ell as u32).map_err(err)?;
                let f = params.field();
                let n = d * r;
                let mut bad = Vec::new();
                for t in (0..=n).filter(|t| (n - t) % 2 == 0) {
                    let g = gram_matrix(d, r, t).map_err(err)?.try_map(|x| f.from_rational_function(x)).map_err(err)?;
                    if g != gram_matrix_at(d, r, t, &params).map_err(err)? {
                        bad.push(t);
                    }
                }
                Ok((json!([]), json!(bad)))
            });
        }
    }
    for d in 1..=3 {
        for r in 2..=4 {
            checks.add("cellular.sub_top_closed_form", json!({ "d": d, "r": r }), move || {
                let f = Generic;
                let g = gram_matrix(d, r, d * r - 2).map_err(err)?;
                let closed = example_sub_closed_form(&f, d, r).map_err(err)?;
                let det = determinant(&f, &g).map_err(err)?;
                let want = sub_top_determinant(&f, d, r).map_err(err)?;
                Ok((json!([true, want.to_string()]), json!([g == closed.matrix, det.to_string()])))
            });
        }
    }
    for (d, r) in [(2, 2), (2, 3), (3, 2)] {
        checks.add("cellular.projected_independence", json!({ "d": d, "r": r }), move || {
            let n = d * r;
            let index: BTreeMap<PlanarDiagram, usize> = enumerate_all(n, n).into_iter().enumerate().map(|(i, x)| (x, i)).collect();
            let proj = BlockProjector::new(Generic, d, r).map_err(err)?;
            let datum = CellDatum::new(d, r).map_err(err)?;
            let mut rows = Vec::new();
            for (t, i, j) in datum.labels() {
                let x = proj.projected_basis_element(&datum.diagram(t, i, j)).map_err(err)?;
                let mut row = vec![RationalFunction::zero(); index.len()];
                for (dg, c) in x.terms() {
                    row[index[dg]] = c.clone();
                }
                rows.push(row);
            }
            let rk = generic_rank(&Matrix::from_rows(rows).map_err(err)?);
            Ok((json!(b_total(d, r)), json!(rk)))
        });
    }
    for d in 1..=6usize {
        for r in 1..=6 / d {
            checks.add("cellular.c3", json!({ "d": d, "r": r }), move || {
                let rep = verify_c3(d, r, C3Config { seed, ..C3Config::default() }).map_err(err)?;
                Ok((json!(0), json!(rep.violations.len())))
            });
        }
    }
    checks.add("cellular.simple_dims", json!({ "d": 2, "r": 3, "ell": 3 }), || {
        let dims = simple_dims(2, 3, &SpecializationParams::from_ell(3).map_err(err)?).map_err(err)?;
        Ok((json!({ "0": 0, "2": 3, "4": 1, "6": 1 }), json!(dims)))
    });
}

fn tilting(checks: &mut Checks) {
    for d in 1..=3usize {
        for r in 1..=4usize {
            for ell in d + 1..=7 {
                let params = json!({ "d": d, "r": r, "ell": ell });
                checks.add("tilting.routes", params.clone(), move || {
                    let p = SpecializationParams::from_ell(ell as u32).map_err(err)?;
                    let table = multiplicity_table(d, r, &p).map_err(err)?;
                    let per_route = |route: Route| -> Vec<u64> { table.rows.iter().map(|row| row.routes[&route]).collect() };
                    let formula = per_route(Route::Formula);
                    let names = [Route::Recursion, Route::Weights, Route::GramRank];
                    let expected: BTreeMap<&str, &Vec<u64>> = names.iter().map(|x| (x.name(), &formula)).collect();
                    let actual: BTreeMap<&str, Vec<u64>> = names.iter().map(|&x| (x.name(), per_route(x))).collect();
                    Ok((json!(expected), json!(actual)))
                });
                checks.add("tilting.conservation", params.clone(), move || {
                    let p = SpecializationParams::from_ell(ell as u32).map_err(err)?;
                    let table = multiplicity_table(d, r, &p).map_err(err)?;
                    let total = total_dimension(&table.mu_vector(), ell).map_err(err)?;
                    let bounded = table.rows.iter().all(|row| row.mu <= row.m);
                    Ok((json!([((d + 1) as u64).pow(r as u32), true]), json!([total, bounded])))
                });
                checks.add("tilting.decomposition", params, move || {
                    let p = SpecializationParams::from_ell(ell as u32).map_err(err)?;
                    let table = multiplicity_table(d, r, &p).map_err(err)?;
                    let dm = decomposition_matrix(d, r, ell).map_err(err)?;
                    let bad = dm.violations(&b_vector(d, r), &table.mu_vector());
                    Ok((json!([true, []]), json!([dm.is_lower_unitriangular(), bad])))
                });
            }
        }
    }
    checks.add("tilting.worked_example", json!({ "d": 2, "r": 3, "ell": 3 }), || {
        let table = multiplicity_table(2, 3, &SpecializationParams::from_ell(3).map_err(err)?).map_err(err)?;
        let mu: Vec<u64> = table.rows.iter().map(|row| row.mu).collect();
        let dims: Vec<usize> = [0, 2, 4, 6].iter().map(|&t| TiltingShape::new(t, 3).map(|s| s.dimension())).collect::<Result<_, _>>().map_err(err)?;
        Ok((json!({ "mu": [0, 3, 1, 1], "tilting_dims": [1, 3, 6, 12], "total": 27 }), json!({ "mu": mu, "tilting_dims": dims, "total": table.total_dimension().map_err(err)? })))
    });
}

/// Pairs with `(d + 1)^r <= 32`, kept small enough for the default suite.
fn oracle_pairs() -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..=8).map(|d| (d, 1)).collect();
    out.extend([(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (3, 2), (4, 2), (5, 2)]);
    out
}

fn oracle(checks: &mut Checks) {
    for (d, r) in oracle_pairs() {
        checks.add("oracle.generic", json!({ "d": d, "r": r }), move || {
            let f = Generic;
            let m = m_vector(d, r);
            let action = tensor_action(&f, d, r, 1).map_err(err)?;
            let (_, dim) = commutant_dim(&action);
            let weights: BTreeMap<i64, usize> = action.weight_dims();
            let expect_weights: BTreeMap<i64, u64> = weights.keys().map(|&w| Ok((w, weight_dim(d, r, w)?))).collect::<Result<_, tlcell_core::Error>>().map_err(err)?;
            let n = d * r;
            let expect_hw: BTreeMap<usize, usize> = (0..=n).filter(|t| (n - t) % 2 == 0).map(|t| (t, m[t] as usize)).collect();
            let sum: u64 = m.iter().map(|x| x * x).sum();
            Ok((
                json!({ "commutant": sum, "highest_weights": expect_hw, "weights": expect_weights }),
                json!({ "commutant": dim, "highest_weights": highest_weight_counts(&action), "weights": weights }),
            ))
        });
        checks.add("oracle.specialized", json!({ "d": d, "r": r, "ell": d + 1 }), move || {
            let params = SpecializationParams::from_ell(d as u32 + 1).map_err(err)?;
            let action = tensor_action(&params.field(), d, r, divided_power_bound(d, Some(&params))).map_err(err)?;
            Ok((json!(b_total(d, r)), json!(commutant_dim(&action).1)))
        });
    }
    for d in 1..=5 {
        checks.add("oracle.divided_powers", json!({ "d": d, "m": "1..=3" }), move || {
            let f = Generic;
            let a = weyl_action(&f, d, 3).map_err(err)?;
            let mut power = a.e(0).clone();
            let mut ok = Vec::new();
            for m in 1..=3 {
                power = mat_mul(&f, a.e(1), &power);
                ok.push(mat_scale(&f, a.e(m), &f.from_laurent(&quantum_factorial(m))) == power);
            }
            Ok((json!([true, true, true]), json!(ok)))
        });
    }
}

/// A corrupted `p_3` with its last term dropped; exercises the failure path.
fn injected(checks: &mut Checks) {
    checks.add("inject.jw_idempotent", json!({ "d": 3, "mutation": "drop last term" }), || {
        let f = Generic;
        let p = jones_wenzl(3);
        let mut q = (*p).clone();
        let last = p.sorted_terms().last().map(|(dg, _)| (*dg).clone()).ok_or("empty projector")?;
        q.retain(|dg| *dg != last);
        Ok((json!(true), json!(idempotent(&f, &q)?)))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use tlcell_core::linalg::rank;

    #[test]
    fn catalan_numbers() {
        assert_eq!((0..8).map(catalan).collect::<Vec<_>>(), [1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn report_order_ignores_thread_count() {
        let one = run(Suite::Arith, 7, 1, false, false);
        let four = run(Suite::Arith, 7, 4, false, false);
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
        assert!(one.passed);
    }

    #[test]
    fn injected_failure_fails() {
        let mut checks = Checks::default();
        injected(&mut checks);
        let results = execute(checks.0, 1, false);
        assert!(!results[0].pass);
    }

    #[test]
    fn ranks_match_at_specializations() {
        let p = SpecializationParams::from_ell(3).unwrap();
        let g = gram_matrix_at(2, 3, 4, &p).unwrap();
        assert_eq!(rank(&p.field(), &g), 1);
    }
}
