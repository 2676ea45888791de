use std::collections::BTreeSet;

use super::planar::{Endpoint, PlanarDiagram, Slot};
use crate::error::{Error, Result};

/// `{d, 2d, ..., (r-1)d}`.
pub fn block_boundaries(d: usize, r: usize) -> BTreeSet<usize> {
    (1..r).map(|k| k * d).collect()
}

/// Monic diagrams `t -> n` whose left set lies in `allowed`, in canonical order.
pub fn enumerate_monic(t: usize, n: usize, allowed: &BTreeSet<usize>) -> Vec<PlanarDiagram> {
    enumerate_monic_by(t, n, |i| allowed.contains(&i))
}

/// All monic diagrams `t -> n`.
pub fn enumerate_monic_all(t: usize, n: usize) -> Vec<PlanarDiagram> {
    enumerate_monic_by(t, n, |_| true)
}

/// `B(d, r; t)`.
pub fn basis_diagrams(d: usize, r: usize, t: usize) -> Vec<PlanarDiagram> {
    let b = d * r;
    enumerate_monic_by(t, b, |i| i % d == 0 && i < b)
}

fn enumerate_monic_by(t: usize, n: usize, allowed: impl Fn(usize) -> bool) -> Vec<PlanarDiagram> {
    let mut out = Vec::new();
    if t > n || (n - t) % 2 != 0 {
        return out;
    }
    let mut word = Vec::with_capacity(n);
    monic_dfs(t, n, &allowed, &mut word, 0, 0, &mut out);
    out.sort();
    out
}

fn monic_dfs(
    t: usize,
    n: usize,
    allowed: &impl Fn(usize) -> bool,
    word: &mut Vec<Slot>,
    depth: usize,
    through: usize,
    out: &mut Vec<PlanarDiagram>,
) {
    let j = word.len();
    if j == n {
        if depth == 0 && through == t {
            out.push(PlanarDiagram::monic_from_slots(word));
        }
        return;
    }
    let rem = n - j;
    let need = depth + (t - through);
    if rem < need {
        return;
    }
    if depth == 0 && through < t {
        word.push(Slot::Through);
        monic_dfs(t, n, allowed, word, 0, through + 1, out);
        word.pop();
    }
    if rem > need {
        word.push(Slot::Open);
        monic_dfs(t, n, allowed, word, depth + 1, through, out);
        word.pop();
    }
    // a small arc (j, j+1) in 1-based terms has left end j
    if depth > 0 && (word[j - 1] != Slot::Open || allowed(j)) {
        word.push(Slot::Close);
        monic_dfs(t, n, allowed, word, depth - 1, through, out);
        word.pop();
    }
}

/// Every diagram `s -> n`, in canonical order.
pub fn enumerate_all(s: usize, n: usize) -> Vec<PlanarDiagram> {
    if (s + n) % 2 != 0 {
        return Vec::new();
    }
    // Boundary in cyclic order: bottoms left to right, then tops right to left.
    let cyc: Vec<Endpoint> = (1..=s).map(Endpoint::Bottom).chain((1..=n).rev().map(Endpoint::Top)).collect();
    let mut out: Vec<PlanarDiagram> = noncrossing_matchings(&(0..s + n).collect::<Vec<_>>())
        .into_iter()
        .map(|m| {
            let pairs: Vec<_> = m.into_iter().map(|(a, b)| (cyc[a], cyc[b])).collect();
            PlanarDiagram::from_pairs(s, n, &pairs).expect("non-crossing by construction")
        })
        .collect();
    out.sort();
    out
}

fn noncrossing_matchings(free: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if free.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (1..free.len()).step_by(2) {
        let inside = noncrossing_matchings(&free[1..k]);
        let outside = noncrossing_matchings(&free[k + 1..]);
        for a in &inside {
            for b in &outside {
                let mut m = Vec::with_capacity(free.len() / 2);
                m.push((free[0], free[k]));
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                out.push(m);
            }
        }
    }
    out
}

/// `b(d, r; t) = |B(d, r; t)|`, by enumeration.
pub fn b_count(d: usize, r: usize, t: usize) -> usize {
    basis_diagrams(d, r, t).len()
}

/// `b(d, r) = sum_t b(d, r; t)^2`.
pub fn b_total(d: usize, r: usize) -> usize {
    (0..=d * r).map(|t| b_count(d, r, t).pow(2)).sum()
}

/// `m(d, r; t)` for `t = 0..=dr` from the Clebsch-Gordan rule
/// `Delta(d) (x) Delta(s) = sum of Delta(u)` for `u = |d-s| ..= d+s` step 2.
pub fn m_vector(d: usize, r: usize) -> Vec<u64> {
    assert!(d >= 1 && r >= 1);
    let mut m = vec![0u64; d + 1];
    m[d] = 1;
    for k in 1..r {
        let top = d * (k + 1);
        let mut next = vec![0u64; top + 1];
        for (t, slot) in next.iter_mut().enumerate() {
            let lo = t.abs_diff(d);
            let mut s = lo;
            while s <= t + d {
                if s < m.len() {
                    *slot += m[s];
                }
                s += 2;
            }
        }
        m = next;
    }
    m
}

pub fn m_count(d: usize, r: usize, t: usize) -> u64 {
    m_vector(d, r).get(t).copied().unwrap_or(0)
}

/// `b(d, r; t)` for `t = 0..=dr`.
pub fn b_vector(d: usize, r: usize) -> Vec<u64> {
    (0..=d * r).map(|t| b_count(d, r, t) as u64).collect()
}

/// Splits `D' in B(d, r+1; t)` into its restriction `D in B(d, r; k)` to the
/// first `dr` top points and the number `i` of arcs ending in the last block;
/// `k = t - d + 2i`.
pub fn restrict_last_block(dp: &PlanarDiagram, d: usize) -> Result<(PlanarDiagram, usize)> {
    let n = dp.target();
    if !dp.is_monic() || n < d {
        return Err(Error::ShapeMismatch("need a monic diagram with at least one block".into()));
    }
    let head = n - d;
    let slots = dp.top_slots();
    let mut stack = Vec::new();
    let mut restricted = slots[..head].to_vec();
    let mut i = 0;
    for (j, s) in slots.iter().enumerate() {
        match s {
            Slot::Open => stack.push(j),
            Slot::Close => {
                let o = stack.pop().expect("balanced");
                if j >= head {
                    if o >= head {
                        return Err(Error::NotBasisEligible("arc inside the last block".into()));
                    }
                    restricted[o] = Slot::Through;
                    i += 1;
                }
            }
            Slot::Through => {}
        }
    }
    Ok((PlanarDiagram::monic_from_slots(&restricted), i))
}

/// Inverse of [`restrict_last_block`]: joins the rightmost `i` through strands
/// of `D` to the first `i` points of a new block of width `d`.
pub fn extend_by_block(dg: &PlanarDiagram, d: usize, i: usize) -> Result<PlanarDiagram> {
    let k = dg.source();
    if !dg.is_monic() || i > d.min(k) {
        return Err(Error::OutOfRange(format!("cannot attach {i} arcs to a monic diagram with {k} strands")));
    }
    let mut slots = dg.top_slots();
    let mut seen = 0;
    for s in slots.iter_mut().rev() {
        if seen == i {
            break;
        }
        if *s == Slot::Through {
            *s = Slot::Open;
            seen += 1;
        }
    }
    slots.extend(std::iter::repeat(Slot::Close).take(i));
    slots.extend(std::iter::repeat(Slot::Through).take(d - i));
    Ok(PlanarDiagram::monic_from_slots(&slots))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::planar::Endpoint::Top as T;

    #[test]
    fn identity_only_at_full_rank() {
        let all = enumerate_monic_all(5, 5);
        assert_eq!(all, vec![PlanarDiagram::identity(5)]);
    }

    #[test]
    fn zero_strands_six_points() {
        let ds = enumerate_monic(0, 6, &BTreeSet::from([2, 4]));
        let expect = PlanarDiagram::from_pairs(0, 6, &[(T(1), T(6)), (T(2), T(3)), (T(4), T(5))]).unwrap();
        assert_eq!(ds, vec![expect]);
        assert_eq!(enumerate_monic_all(0, 6).len(), 5);
    }

    #[test]
    fn sub_top_cell_has_r_minus_one() {
        for d in 1..=4 {
            for r in 2..=5 {
                assert_eq!(b_count(d, r, d * r - 2), r - 1, "({d},{r})");
            }
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(b_vector(2, 3), vec![1, 0, 3, 0, 2, 0, 1]);
        assert_eq!(b_vector(1, 4), vec![2, 0, 3, 0, 1]);
        assert_eq!(m_vector(2, 3), vec![1, 0, 3, 0, 2, 0, 1]);
        assert_eq!(m_vector(1, 4), vec![2, 0, 3, 0, 1]);
        for d in 1..=4 {
            assert_eq!(m_vector(d, 1), (0..=d).map(|t| u64::from(t == d)).collect::<Vec<_>>());
            assert_eq!(b_vector(d, 1), m_vector(d, 1));
        }
        assert_eq!(b_total(2, 3), 15);
    }

    #[test]
    fn full_enumeration_is_catalan() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132];
        for n in 0..=6 {
            assert_eq!(enumerate_all(n, n).len(), catalan[n]);
        }
        assert_eq!(enumerate_all(1, 3).len(), 2);
        assert!(enumerate_all(1, 2).is_empty());
    }

    #[test]
    fn block_bijection_round_trips() {
        for d in 1..=3 {
            for r in 1..=3 {
                for t in 0..=d * (r + 1) {
                    let mut preimages = 0;
                    for dp in basis_diagrams(d, r + 1, t) {
                        let (dg, i) = restrict_last_block(&dp, d).unwrap();
                        assert_eq!(dg.source() + d, t + 2 * i);
                        assert!(basis_diagrams(d, r, dg.source()).contains(&dg));
                        assert_eq!(extend_by_block(&dg, d, i).unwrap(), dp);
                        preimages += 1;
                    }
                    let forward: usize = (0..=d)
                        .filter(|&i| t + 2 * i >= d && t + 2 * i - d >= i)
                        .map(|i| b_count(d, r, t + 2 * i - d))
                        .sum();
                    assert_eq!(preimages, forward, "({d},{r},{t})");
                }
            }
        }
    }
}
