use std::collections::BTreeSet;
use std::fmt;

use super::planar::PlanarDiagram;
use crate::error::{Error, Result};

/// A standard tableau with at most two rows, filled with `1..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoRowTableau {
    rows: [Vec<usize>; 2],
}

impl TwoRowTableau {
    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Result<Self> {
        let t = Self { rows: [first, second] };
        if !t.is_standard() {
            return Err(Error::ShapeMismatch(format!("not a standard two-row tableau: {t}")));
        }
        Ok(t)
    }

    /// Second row given by `second`, first row the rest of `1..=n`.
    pub fn from_second_row(n: usize, second: Vec<usize>) -> Result<Self> {
        let set: BTreeSet<usize> = second.iter().copied().collect();
        let first = (1..=n).filter(|i| !set.contains(i)).collect();
        Self::new(first, second)
    }

    pub fn rows(&self) -> (&[usize], &[usize]) {
        (&self.rows[0], &self.rows[1])
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows[0].len(), self.rows[1].len())
    }

    pub fn size(&self) -> usize {
        self.rows[0].len() + self.rows[1].len()
    }

    pub fn is_standard(&self) -> bool {
        let [a, b] = &self.rows;
        let n = a.len() + b.len();
        let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
        all.sort_unstable();
        a.len() >= b.len()
            && all.iter().copied().eq(1..=n)
            && a.windows(2).all(|w| w[0] < w[1])
            && b.windows(2).all(|w| w[0] < w[1])
            && b.iter().zip(a).all(|(y, x)| x < y)
    }

    /// `i` is a descent when `i + 1` lies in a strictly lower row than `i`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let second: BTreeSet<usize> = self.rows[1].iter().copied().collect();
        (1..self.size()).filter(|i| !second.contains(i) && second.contains(&(i + 1))).collect()
    }
}

impl fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &[usize]| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "{} / {}", join(&self.rows[0]), join(&self.rows[1]))
    }
}

/// `(S(D), T(D))`: second rows are the right ends of the upper, respectively
/// lower, arcs of `D: N -> N`.
pub fn tableaux(d: &PlanarDiagram) -> Result<(TwoRowTableau, TwoRowTableau)> {
    if d.source() != d.target() {
        return Err(Error::ShapeMismatch(format!("tableaux need N -> N, got {} -> {}", d.source(), d.target())));
    }
    let n = d.target();
    Ok((TwoRowTableau::from_second_row(n, d.top_arc_right_ends())?, TwoRowTableau::from_second_row(n, d.bottom_arc_right_ends())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::planar::Endpoint::{Bottom as B, Top as T};

    #[test]
    fn figure_one_tableaux() {
        let fig = PlanarDiagram::from_pairs(
            6,
            6,
            &[(T(1), T(4)), (T(2), T(3)), (B(2), B(3)), (B(5), B(6)), (B(1), T(5)), (B(4), T(6))],
        )
        .unwrap();
        let (s, t) = tableaux(&fig).unwrap();
        assert_eq!(s.rows(), (&[1, 2, 5, 6][..], &[3, 4][..]));
        assert_eq!(t.rows(), (&[1, 2, 4, 5][..], &[3, 6][..]));
        assert_eq!(s.descents(), fig.left_set());
        assert_eq!(t.descents(), fig.right_set());
    }

    #[test]
    fn small_cases() {
        let (s, t) = tableaux(&PlanarDiagram::identity(4)).unwrap();
        assert_eq!(s.rows(), (&[1, 2, 3, 4][..], &[][..]));
        assert_eq!(s, t);
        let (s, t) = tableaux(&PlanarDiagram::generator_f(1, 2).unwrap()).unwrap();
        assert_eq!(s.rows(), (&[1][..], &[2][..]));
        assert_eq!(s, t);
        assert!(TwoRowTableau::new(vec![2, 3], vec![1]).is_err());
    }
}
