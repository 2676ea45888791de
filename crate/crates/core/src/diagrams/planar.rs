use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A point on the boundary of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    /// `B_i`, 1-based.
    Bottom(usize),
    /// `T_j`, 1-based.
    Top(usize),
}

impl Endpoint {
    pub fn signed(self) -> i64 {
        match self {
            Endpoint::Bottom(i) => -(i as i64),
            Endpoint::Top(j) => j as i64,
        }
    }

    pub fn from_signed(x: i64) -> Result<Self> {
        match x {
            0 => Err(Error::Parse("endpoint label 0 is not allowed".into())),
            x if x < 0 => Ok(Endpoint::Bottom(x.unsigned_abs() as usize)),
            x => Ok(Endpoint::Top(x as usize)),
        }
    }
}

/// A Temperley-Lieb diagram `t -> N`: a non-crossing perfect pairing of `t`
/// bottom points and `N` top points.
///
/// Point `i < t` is `B_{i+1}`; point `t + j` is `T_{j+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    source: u8,
    target: u8,
    partner: Vec<u8>,
}

/// Diagrams are limited to 255 boundary points.
pub const MAX_POINTS: usize = 255;

impl PlanarDiagram {
    fn from_partner_unchecked(source: usize, target: usize, partner: Vec<u8>) -> Self {
        debug_assert_eq!(partner.len(), source + target);
        Self { source: source as u8, target: target as u8, partner }
    }

    pub fn identity(n: usize) -> Self {
        assert!(2 * n <= MAX_POINTS, "diagram too large");
        let partner = (0..n).map(|i| (n + i) as u8).chain((0..n).map(|i| i as u8)).collect();
        Self::from_partner_unchecked(n, n, partner)
    }

    /// The generator `f_i` of `TL_N`.
    pub fn generator_f(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("f_{i} needs 1 <= i <= N-1 with N = {n}")));
        }
        let mut p: Vec<u8> = Self::identity(n).partner;
        let (b, t) = (i - 1, n + i - 1);
        p[b] = (b + 1) as u8;
        p[b + 1] = b as u8;
        p[t] = (t + 1) as u8;
        p[t + 1] = t as u8;
        Ok(Self::from_partner_unchecked(n, n, p))
    }

    /// The monic diagram `N-2 -> N` with a single top arc `(T_i, T_{i+1})`.
    pub fn cap(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("cap at {i} needs 1 <= i <= N-1 with N = {n}")));
        }
        let mut tops = vec![Slot::Through; n];
        tops[i - 1] = Slot::Open;
        tops[i] = Slot::Close;
        Ok(Self::monic_from_slots(&tops))
    }

    pub fn from_pairs(source: usize, target: usize, pairs: &[(Endpoint, Endpoint)]) -> Result<Self> {
        let total = source + target;
        if total > MAX_POINTS {
            return Err(Error::OutOfRange(format!("{total} boundary points exceeds {MAX_POINTS}")));
        }
        let index = |e: Endpoint| -> Result<usize> {
            match e {
                Endpoint::Bottom(i) if (1..=source).contains(&i) => Ok(i - 1),
                Endpoint::Top(j) if (1..=target).contains(&j) => Ok(source + j - 1),
                _ => Err(Error::ShapeMismatch(format!("endpoint {e:?} outside {source} -> {target}"))),
            }
        };
        let mut partner = vec![u8::MAX; total];
        for &(a, b) in pairs {
            let (a, b) = (index(a)?, index(b)?);
            if a == b || partner[a] != u8::MAX || partner[b] != u8::MAX {
                return Err(Error::ShapeMismatch("every endpoint must occur in exactly one pair".into()));
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        if partner.iter().any(|&p| p == u8::MAX) {
            return Err(Error::ShapeMismatch("every endpoint must occur in exactly one pair".into()));
        }
        let d = Self::from_partner_unchecked(source, target, partner);
        if !d.is_planar() {
            return Err(Error::ShapeMismatch("pairing is not planar".into()));
        }
        Ok(d)
    }

    /// Builds a diagram from signed labels (`-i` for `B_i`, `j` for `T_j`).
    pub fn from_signed_pairs(source: usize, target: usize, pairs: &[[i64; 2]]) -> Result<Self> {
        let pairs = pairs
            .iter()
            .map(|&[a, b]| Ok((Endpoint::from_signed(a)?, Endpoint::from_signed(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(source, target, &pairs)
    }

    pub fn source(&self) -> usize {
        self.source as usize
    }

    pub fn target(&self) -> usize {
        self.target as usize
    }

    fn endpoint(&self, p: usize) -> Endpoint {
        if p < self.source() {
            Endpoint::Bottom(p + 1)
        } else {
            Endpoint::Top(p - self.source() + 1)
        }
    }

    /// Partner of an endpoint.
    pub fn partner(&self, e: Endpoint) -> Endpoint {
        let p = match e {
            Endpoint::Bottom(i) => i - 1,
            Endpoint::Top(j) => self.source() + j - 1,
        };
        self.endpoint(self.partner[p] as usize)
    }

    /// Pairs in canonical order: each pair as (smaller, larger) with bottom
    /// points before top points, sorted lexicographically.
    pub fn pairs(&self) -> Vec<(Endpoint, Endpoint)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(p, &q)| p < q as usize)
            .map(|(p, &q)| (self.endpoint(p), self.endpoint(q as usize)))
            .collect()
    }

    pub fn signed_pairs(&self) -> Vec<[i64; 2]> {
        self.pairs().into_iter().map(|(a, b)| [a.signed(), b.signed()]).collect()
    }

    pub fn through_count(&self) -> usize {
        let s = self.source();
        (0..s).filter(|&i| self.partner[i] as usize >= s).count()
    }

    pub fn is_monic(&self) -> bool {
        self.through_count() == self.source()
    }

    pub fn is_identity(&self) -> bool {
        let s = self.source();
        self.source == self.target && (0..s).all(|i| self.partner[i] as usize == s + i)
    }

    /// Standard interleaving test: walking the boundary of the rectangle, the
    /// pairs must nest like parentheses.
    pub fn is_planar(&self) -> bool {
        let (s, n) = (self.source(), self.target());
        let mut order: Vec<usize> = (0..s).collect();
        order.extend((0..n).rev().map(|j| s + j));
        let mut pos = vec![0usize; s + n];
        for (k, &p) in order.iter().enumerate() {
            pos[p] = k;
        }
        let mut stack = Vec::new();
        for &p in &order {
            let q = self.partner[p] as usize;
            if pos[q] > pos[p] {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Left endpoints `i` of small upper arcs `(T_i, T_{i+1})`.
    pub fn left_set(&self) -> BTreeSet<usize> {
        let s = self.source();
        (0..self.target().saturating_sub(1)).filter(|&j| self.partner[s + j] as usize == s + j + 1).map(|j| j + 1).collect()
    }

    /// Left endpoints `i` of small lower arcs `(B_i, B_{i+1})`.
    pub fn right_set(&self) -> BTreeSet<usize> {
        (0..self.source().saturating_sub(1)).filter(|&i| self.partner[i] as usize == i + 1).map(|i| i + 1).collect()
    }

    /// 1-based right endpoints of top arcs, increasing.
    pub fn top_arc_right_ends(&self) -> Vec<usize> {
        let s = self.source();
        (0..self.target()).filter(|&j| (self.partner[s + j] as usize) >= s && (self.partner[s + j] as usize) < s + j).map(|j| j + 1).collect()
    }

    /// 1-based right endpoints of bottom arcs, increasing.
    pub fn bottom_arc_right_ends(&self) -> Vec<usize> {
        (0..self.source()).filter(|&i| (self.partner[i] as usize) < i).map(|i| i + 1).collect()
    }

    /// Reflection in a horizontal line.
    pub fn star(&self) -> Self {
        let (s, n) = (self.source(), self.target());
        let relabel = |p: usize| if p < s { n + p } else { p - s };
        let mut partner = vec![0u8; s + n];
        for p in 0..s + n {
            partner[relabel(p)] = relabel(self.partner[p] as usize) as u8;
        }
        Self::from_partner_unchecked(n, s, partner)
    }

    /// Side-by-side juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Self {
        let (s1, n1, s2, n2) = (self.source(), self.target(), other.source(), other.target());
        assert!(s1 + n1 + s2 + n2 <= MAX_POINTS, "diagram too large");
        let map1 = |p: usize| if p < s1 { p } else { s1 + s2 + (p - s1) };
        let map2 = |p: usize| if p < s2 { s1 + p } else { s1 + s2 + n1 + (p - s2) };
        let mut partner = vec![0u8; s1 + s2 + n1 + n2];
        for p in 0..s1 + n1 {
            partner[map1(p)] = map1(self.partner[p] as usize) as u8;
        }
        for p in 0..s2 + n2 {
            partner[map2(p)] = map2(other.partner[p] as usize) as u8;
        }
        Self::from_partner_unchecked(s1 + s2, n1 + n2, partner)
    }

    /// Stacks `g` on top of `self` (so `self` is applied first) and returns the
    /// resulting diagram together with the number of closed loops removed.
    pub fn compose(&self, g: &Self) -> Result<(Self, usize)> {
        if self.target != g.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} with {} -> {}",
                self.source, self.target, g.source, g.target
            )));
        }
        Ok(self.compose_unchecked(g))
    }

    pub(crate) fn compose_unchecked(&self, g: &Self) -> (Self, usize) {
        let (t, u, w) = (self.source(), self.target(), g.target());
        let mut partner = vec![u8::MAX; t + w];
        let mut seen = vec![false; u];
        // Walk from an outer endpoint through the middle row until leaving again.
        // `in_f` tells which diagram the current point belongs to.
        let walk = |mut in_f: bool, mut p: usize, seen: &mut [bool]| -> usize {
            loop {
                if in_f {
                    let q = self.partner[p] as usize;
                    if q < t {
                        return q;
                    }
                    let m = q - t;
                    seen[m] = true;
                    in_f = false;
                    p = m;
                } else {
                    let q = g.partner[p] as usize;
                    if q >= u {
                        return t + (q - u);
                    }
                    seen[q] = true;
                    in_f = true;
                    p = t + q;
                }
            }
        };
        for b in 0..t {
            if partner[b] == u8::MAX {
                let e = walk(true, b, &mut seen);
                partner[b] = e as u8;
                partner[e] = b as u8;
            }
        }
        for j in 0..w {
            if partner[t + j] == u8::MAX {
                let e = walk(false, u + j, &mut seen);
                partner[t + j] = e as u8;
                partner[e] = (t + j) as u8;
            }
        }
        let mut loops = 0;
        for m in 0..u {
            if seen[m] {
                continue;
            }
            loops += 1;
            // closed cycle alternating between g's bottom arcs and f's top arcs
            let mut x = m;
            loop {
                seen[x] = true;
                let y = g.partner[x] as usize;
                seen[y] = true;
                x = self.partner[t + y] as usize - t;
                if x == m {
                    break;
                }
            }
        }
        (Self::from_partner_unchecked(t, w, partner), loops)
    }

    /// `D = D1 o star(D2)` with `D1`, `D2` monic `t -> N`, `t` the through count.
    pub fn factor_monic(&self) -> (Self, Self) {
        let s = self.source();
        let tops: Vec<Slot> = (0..self.target()).map(|j| slot_of(&self.partner, s, s + j)).collect();
        let bottoms: Vec<Slot> = (0..s).map(|i| slot_of(&self.partner, s, i)).collect();
        (Self::monic_from_slots(&tops), Self::monic_from_slots(&bottoms))
    }

    /// Inverse of [`factor_monic`](Self::factor_monic).
    pub fn from_monic_pair(d1: &Self, d2: &Self) -> Result<Self> {
        if !d1.is_monic() || !d2.is_monic() || d1.source != d2.source {
            return Err(Error::ShapeMismatch("need two monic diagrams with the same source".into()));
        }
        d2.star().compose(d1).map(|(d, _)| d)
    }

    pub(crate) fn monic_from_slots(tops: &[Slot]) -> Self {
        let n = tops.len();
        let t = tops.iter().filter(|s| **s == Slot::Through).count();
        let mut partner = vec![0u8; t + n];
        let mut stack = Vec::new();
        let mut b = 0;
        for (j, s) in tops.iter().enumerate() {
            match s {
                Slot::Through => {
                    partner[b] = (t + j) as u8;
                    partner[t + j] = b as u8;
                    b += 1;
                }
                Slot::Open => stack.push(j),
                Slot::Close => {
                    let i = stack.pop().expect("balanced slots");
                    partner[t + i] = (t + j) as u8;
                    partner[t + j] = (t + i) as u8;
                }
            }
        }
        Self::from_partner_unchecked(t, n, partner)
    }

    /// Top row of a monic diagram as a slot word.
    pub(crate) fn top_slots(&self) -> Vec<Slot> {
        let s = self.source();
        (0..self.target()).map(|j| slot_of(&self.partner, s, s + j)).collect()
    }

    fn sort_key(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.partner.iter().enumerate().filter(|&(p, &q)| p < q as usize).map(|(p, &q)| (p as u8, q))
    }
}

fn slot_of(partner: &[u8], source: usize, p: usize) -> Slot {
    let q = partner[p] as usize;
    let same_side = (p < source) == (q < source);
    if !same_side {
        Slot::Through
    } else if q > p {
        Slot::Open
    } else {
        Slot::Close
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Slot {
    Through,
    Open,
    Close,
}

impl Ord for PlanarDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.source, self.target).cmp(&(other.source, other.target)).then_with(|| self.sort_key().cmp(other.sort_key()))
    }
}

impl PartialOrd for PlanarDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, [a, b]) in self.signed_pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{a},{b}]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:{self}", self.source, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Endpoint::{Bottom as B, Top as T};

    /// The 6 -> 6 diagram with top arcs (1,4),(2,3), bottom arcs (2,3),(5,6)
    /// and through arcs B1-T5, B4-T6.
    pub(crate) fn figure_one() -> PlanarDiagram {
        PlanarDiagram::from_pairs(
            6,
            6,
            &[(T(1), T(4)), (T(2), T(3)), (B(2), B(3)), (B(5), B(6)), (B(1), T(5)), (B(4), T(6))],
        )
        .unwrap()
    }

    #[test]
    fn generators() {
        let f1 = PlanarDiagram::generator_f(1, 2).unwrap();
        assert_eq!(f1.pairs(), vec![(B(1), B(2)), (T(1), T(2))]);
        let f2 = PlanarDiagram::generator_f(2, 3).unwrap();
        assert_eq!(f2.pairs(), vec![(B(1), T(1)), (B(2), B(3)), (T(2), T(3))]);
        assert!(PlanarDiagram::generator_f(3, 3).is_err());
        assert!(PlanarDiagram::generator_f(0, 3).is_err());
    }

    #[test]
    fn relations() {
        let f1 = PlanarDiagram::generator_f(1, 2).unwrap();
        assert_eq!(f1.compose(&f1).unwrap(), (f1.clone(), 1));
        let a = PlanarDiagram::generator_f(1, 3).unwrap();
        let b = PlanarDiagram::generator_f(2, 3).unwrap();
        let (ab, l1) = a.compose(&b).unwrap();
        let (aba, l2) = ab.compose(&a).unwrap();
        assert_eq!((aba, l1 + l2), (a.clone(), 0));
        let fig = figure_one();
        assert_eq!(PlanarDiagram::identity(6).compose(&fig).unwrap(), (fig.clone(), 0));
        assert_eq!(fig.compose(&PlanarDiagram::identity(6)).unwrap(), (fig, 0));
    }

    #[test]
    fn rejects_bad_pairings() {
        assert!(PlanarDiagram::from_pairs(0, 4, &[(T(1), T(3)), (T(2), T(4))]).is_err());
        assert!(PlanarDiagram::from_pairs(2, 2, &[(B(1), T(2)), (B(2), T(1))]).is_err());
        assert!(PlanarDiagram::from_pairs(2, 0, &[(B(1), B(1))]).is_err());
        assert!(PlanarDiagram::from_pairs(1, 1, &[]).is_err());
        assert!(PlanarDiagram::from_signed_pairs(1, 1, &[[0, 1]]).is_err());
    }

    #[test]
    fn figure_one_sets() {
        let fig = figure_one();
        assert!(fig.is_planar());
        assert_eq!(fig.left_set(), BTreeSet::from([2]));
        assert_eq!(fig.right_set(), BTreeSet::from([2, 5]));
        assert_eq!(fig.through_count(), 2);
        let st = fig.star();
        assert_eq!(st.left_set(), BTreeSet::from([2, 5]));
        assert_eq!(st.right_set(), BTreeSet::from([2]));
        assert_eq!(st.star(), fig);
    }

    #[test]
    fn factorization() {
        let fig = figure_one();
        let (d1, d2) = fig.factor_monic();
        assert_eq!((d1.source(), d1.target()), (2, 6));
        assert_eq!(d1.pairs(), vec![(B(1), T(5)), (B(2), T(6)), (T(1), T(4)), (T(2), T(3))]);
        assert_eq!(d2.pairs(), vec![(B(1), T(1)), (B(2), T(4)), (T(2), T(3)), (T(5), T(6))]);
        assert_eq!(PlanarDiagram::from_monic_pair(&d1, &d2).unwrap(), fig);
        let id = PlanarDiagram::identity(4);
        assert_eq!(id.factor_monic(), (id.clone(), id.clone()));
        let f2 = PlanarDiagram::generator_f(2, 4).unwrap();
        let cap = PlanarDiagram::cap(2, 4).unwrap();
        assert_eq!(f2.factor_monic(), (cap.clone(), cap));
    }

    #[test]
    fn text_form() {
        let d = PlanarDiagram::from_signed_pairs(1, 3, &[[-1, 1], [2, 3]]).unwrap();
        assert_eq!(d.to_string(), "[[-1,1],[2,3]]");
        assert_eq!(PlanarDiagram::from_signed_pairs(1, 3, &d.signed_pairs()).unwrap(), d);
        assert_eq!(PlanarDiagram::identity(0).to_string(), "[]");
    }

    #[test]
    fn empty_diagram_is_unit() {
        let e = PlanarDiagram::identity(0);
        assert!(e.is_identity());
        assert_eq!(e.compose(&e).unwrap(), (e.clone(), 0));
        let cup = PlanarDiagram::cap(1, 2).unwrap();
        assert_eq!(e.compose(&cup).unwrap(), (cup.clone(), 0));
        assert_eq!(cup.compose(&cup.star()).unwrap(), (e, 1));
    }
}
