//! The commutant cross-check on every `(d, r)` with `(d + 1)^r <= 2500`.
//! Hours on one core; run with `--ignored`.

use std::collections::BTreeMap;
use std::time::Instant;

use tlcell_core::arith::{Generic, SpecializationParams};
use tlcell_core::diagrams::{b_total, m_vector};
use tlcell_core::oracle::{commutant_dim, divided_power_bound, highest_weight_counts, tensor_action, MAX_DIMENSION};
use tlcell_core::tilting::weight_dim;

fn grid() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for d in 1..MAX_DIMENSION {
        for r in 1.. {
            if (d + 1).pow(r as u32) > MAX_DIMENSION {
                break;
            }
            out.push((d, r));
        }
    }
    // cheapest first, so a partial run still covers the most pairs
    out.sort_by_key(|&(d, r)| ((d + 1).pow(r as u32) * r, d));
    out
}

fn check(d: usize, r: usize) {
    let m = m_vector(d, r);
    let n = d * r;
    let sum: u64 = m.iter().map(|x| x * x).sum();
    let generic = tensor_action(&Generic, d, r, 1).unwrap();
    assert_eq!(commutant_dim(&generic).1 as u64, sum, "({d},{r}) generic");
    for (w, k) in generic.weight_dims() {
        assert_eq!(k as u64, weight_dim(d, r, w).unwrap(), "({d},{r}) weight {w}");
    }
    let expect: BTreeMap<usize, usize> = (0..=n).filter(|t| (n - t) % 2 == 0).map(|t| (t, m[t] as usize)).collect();
    assert_eq!(highest_weight_counts(&generic), expect, "({d},{r}) highest weights");
    let params = SpecializationParams::from_ell(d as u32 + 1).unwrap();
    let special = tensor_action(&params.field(), d, r, divided_power_bound(d, Some(&params))).unwrap();
    assert_eq!(commutant_dim(&special).1, b_total(d, r), "({d},{r}) at ell = {}", d + 1);
}

#[test]
fn grid_is_ordered_and_complete() {
    let g = grid();
    assert_eq!(g.iter().filter(|x| x.1 == 1).count(), MAX_DIMENSION - 1);
    assert!(g.contains(&(1, 11)) && g.contains(&(6, 4)) && g.contains(&(49, 2)));
    assert!(!g.contains(&(1, 12)) && !g.contains(&(50, 2)));
}

#[test]
#[ignore]
fn full_grid() {
    for (d, r) in grid() {
        let start = Instant::now();
        check(d, r);
        eprintln!("({d},{r}) ok in {:.1}s", start.elapsed().as_secs_f64());
    }
}
