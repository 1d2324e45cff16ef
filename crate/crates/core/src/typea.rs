//! Grassmannians `G(k, n)`: partitions in a `k × (n − k)` box, order ideals
//! of the ambient quiver of `A_{n−1}/k`, and Grassmannian permutations.
//!
//! Box `(i, j)` (row `i` in `1..=k`, column `j` in `1..=n−k`) is ordered
//! componentwise, box `(1, 1)` is the minimum, and it carries color
//! `k − i + j`. Part `λ_i` of a partition fills row `i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::heap::{AmbientQuiver, Ideal, MinusculeSpace, VertexSet};
use crate::rootsys::{DynkinType, Family, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianShape {
    k: usize,
    n: usize,
}

impl GrassmannianShape {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::Parse(format!("need 1 <= k < n, got k={k}, n={n}")));
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.k
    }

    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    pub fn space(&self) -> Result<MinusculeSpace> {
        MinusculeSpace::new(DynkinType::new(Family::A, self.n - 1)?, self.k)
    }

    /// Every partition fitting in the box, in no particular order.
    pub fn partitions(&self) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if acc.len() == rows {
                out.push(Partition::new(acc.clone()));
                return;
            }
            for p in 0..=max {
                acc.push(p);
                rec(rows, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.rows(), self.cols(), &mut Vec::new(), &mut out);
        out
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts nothing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn fits(&self, shape: &GrassmannianShape) -> bool {
        self.is_decreasing()
            && self.0.len() <= shape.rows()
            && self.0.iter().all(|&p| p <= shape.cols())
    }

    fn check_fits(&self, shape: &GrassmannianShape) -> Result<()> {
        if self.fits(shape) {
            Ok(())
        } else {
            Err(Error::PartitionOverflow {
                partition: self.to_string(),
                rows: shape.rows(),
                cols: shape.cols(),
            })
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "0" {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let lambda = Partition::new(parts);
        if !lambda.is_decreasing() {
            return Err(Error::Parse(format!(
                "partition {s:?} is not weakly decreasing"
            )));
        }
        Ok(lambda)
    }
}

/// The box model of the ambient quiver of `A_{n−1}/k`, checked to be
/// poset-isomorphic to the componentwise order on the grid.
#[derive(Debug, Clone)]
pub struct Grid<'a> {
    shape: GrassmannianShape,
    ambient: &'a AmbientQuiver,
    box_vertex: Vec<Vec<usize>>,
    vertex_box: Vec<(usize, usize)>,
}

impl<'a> Grid<'a> {
    pub fn new(ambient: &'a AmbientQuiver) -> Result<Grid<'a>> {
        let space = ambient.space();
        if space.dynkin().family() != Family::A {
            return Err(Error::NotTypeA(space.to_string()));
        }
        let shape = GrassmannianShape::new(space.node(), space.dynkin().rank() + 1)?;
        let (k, cols) = (shape.rows(), shape.cols());
        let q = ambient.quiver();

        // Same-colored vertices listed bottom-up.
        let mut chains: Vec<Vec<usize>> = vec![Vec::new(); space.dynkin().rank() + 1];
        for v in 0..q.len() {
            if q.successor(v).is_none() {
                let mut cur = Some(v);
                while let Some(c) = cur {
                    chains[q.color(v)].push(c);
                    cur = q.predecessor(c);
                }
            }
        }

        let mut box_vertex = vec![vec![0; cols + 1]; k + 1];
        let mut vertex_box = vec![(0, 0); q.len()];
        for (i, row) in box_vertex.iter_mut().enumerate().skip(1) {
            for (j, slot) in row.iter_mut().enumerate().skip(1) {
                let color = k + j - i;
                let rank = i.min(j);
                let v = *chains[color].get(rank - 1).ok_or_else(|| {
                    Error::Construction(format!("no vertex for box ({i},{j}) of color {color}"))
                })?;
                *slot = v;
                vertex_box[v] = (i, j);
            }
        }
        if q.len() != k * cols {
            return Err(Error::Construction(format!(
                "{} vertices for a {k}x{cols} grid",
                q.len()
            )));
        }
        for u in 0..q.len() {
            for v in 0..q.len() {
                let (a, b) = (vertex_box[u], vertex_box[v]);
                let grid_le = a.0 <= b.0 && a.1 <= b.1;
                if grid_le != q.precedes(u, v) {
                    return Err(Error::Construction(format!(
                        "grid order disagrees with quiver order at boxes {a:?}, {b:?}"
                    )));
                }
            }
        }
        Ok(Grid {
            shape,
            ambient,
            box_vertex,
            vertex_box,
        })
    }

    pub fn shape(&self) -> GrassmannianShape {
        self.shape
    }

    pub fn ambient(&self) -> &'a AmbientQuiver {
        self.ambient
    }

    /// Ambient vertex of box `(i, j)` (1-based).
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        self.box_vertex[i][j]
    }

    pub fn box_of(&self, v: usize) -> (usize, usize) {
        self.vertex_box[v]
    }

    pub fn box_color(&self, i: usize, j: usize) -> usize {
        self.shape.k + j - i
    }

    pub fn boxes(&self, boxes: &[(usize, usize)]) -> VertexSet {
        boxes.iter().map(|&(i, j)| self.vertex(i, j)).collect()
    }

    pub fn partition_to_ideal(&self, lambda: &Partition) -> Result<Ideal<'a>> {
        lambda.check_fits(&self.shape)?;
        let mut members = VertexSet::empty();
        for i in 1..=self.shape.rows() {
            for j in 1..=lambda.part(i) {
                members.insert(self.vertex(i, j));
            }
        }
        self.ambient.ideal(members)
    }

    pub fn ideal_to_partition(&self, ideal: &Ideal<'_>) -> Partition {
        let mut parts = vec![0; self.shape.rows()];
        for v in ideal.members().iter() {
            let (i, j) = self.vertex_box[v];
            parts[i - 1] = parts[i - 1].max(j);
        }
        Partition::new(parts)
    }
}

/// `w(k+1−i) = k+1−i+λ_i` for `i = 1..k`, remaining values ascending.
pub fn partition_to_permutation(
    shape: &GrassmannianShape,
    lambda: &Partition,
) -> Result<Vec<usize>> {
    lambda.check_fits(shape)?;
    let k = shape.k;
    let mut w = vec![0; shape.n];
    let mut used = vec![false; shape.n + 1];
    for i in 1..=k {
        let pos = k + 1 - i;
        let val = pos + lambda.part(i);
        w[pos - 1] = val;
        used[val] = true;
    }
    let mut rest = (1..=shape.n).filter(|&v| !used[v]);
    for slot in w.iter_mut().skip(k) {
        *slot = rest.next().expect("complement has n - k values");
    }
    Ok(w)
}

pub fn permutation_to_partition(shape: &GrassmannianShape, w: &[usize]) -> Result<Partition> {
    let n = shape.n;
    let k = shape.k;
    let mut seen = vec![false; n + 1];
    let is_perm = w.len() == n
        && w.iter().all(|&v| {
            let fresh = (1..=n).contains(&v) && !seen[v];
            if fresh {
                seen[v] = true;
            }
            fresh
        });
    if !is_perm {
        return Err(Error::Parse(format!(
            "{w:?} is not a permutation of 1..{n}"
        )));
    }
    let grassmannian =
        w[..k].windows(2).all(|p| p[0] < p[1]) && w[k..].windows(2).all(|p| p[0] < p[1]);
    if !grassmannian {
        return Err(Error::NotGrassmannian(w.to_vec(), k));
    }
    let parts = (1..=k).map(|i| w[k - i] - (k + 1 - i)).collect();
    Ok(Partition::new(parts))
}

/// One-line notation of `s_{β_1} ∘ ⋯ ∘ s_{β_r}` acting on `{1..n}`, where
/// `s_i` swaps `i` and `i + 1`.
pub fn word_to_permutation(word: &WeylWord, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|x| {
            word.letters().iter().rev().fold(x, |y, &i| {
                if y == i {
                    i + 1
                } else if y == i + 1 {
                    i
                } else {
                    y
                }
            })
        })
        .collect()
}

/// One-line form `2357146` when `n ≤ 9`, comma separated otherwise.
pub fn format_permutation(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
    if w.len() <= 9 {
        parts.concat()
    } else {
        parts.join(",")
    }
}

pub fn parse_permutation(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let bad = || Error::Parse(format!("bad permutation {s:?}"));
    if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}

pub fn oracle_smooth(lambda: &Partition) -> bool {
    lambda.parts().windows(2).all(|w| w[0] == w[1])
}

/// All outer corners `(i, λ_i)` with `λ_i > λ_{i+1}` lie on one antidiagonal.
pub fn oracle_gorenstein(lambda: &Partition) -> bool {
    let rows = lambda.parts().len();
    let mut diagonals = (1..=rows)
        .filter(|&i| lambda.part(i) > lambda.part(i + 1))
        .map(|i| i + lambda.part(i));
    match diagonals.next() {
        None => true,
        Some(d) => diagonals.all(|e| e == d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn g47() -> GrassmannianShape {
        GrassmannianShape::new(4, 7).unwrap()
    }

    #[test]
    fn permutations_from_partitions() {
        assert_eq!(
            partition_to_permutation(&g47(), &lam("3,2,1,1")).unwrap(),
            vec![2, 3, 5, 7, 1, 4, 6]
        );
        assert_eq!(
            partition_to_permutation(&g47(), &lam("3")).unwrap(),
            vec![1, 2, 3, 7, 4, 5, 6]
        );
        // Printed as 2341567 in the source example, which is not
        // Grassmannian at 4; the formula gives the 4-inversion element.
        assert_eq!(
            partition_to_permutation(&g47(), &lam("1,1,1,1")).unwrap(),
            vec![2, 3, 4, 5, 1, 6, 7]
        );
        assert!(partition_to_permutation(&g47(), &lam("4")).is_err());
        assert!(partition_to_permutation(&g47(), &lam("1,1,1,1,1")).is_err());
    }

    #[test]
    fn permutations_back_to_partitions() {
        assert_eq!(
            permutation_to_partition(&g47(), &[1, 2, 3, 7, 4, 5, 6]).unwrap(),
            lam("3")
        );
        assert_eq!(
            permutation_to_partition(&g47(), &[1, 2, 3, 4, 5, 6, 7]).unwrap(),
            Partition::default()
        );
        assert!(matches!(
            permutation_to_partition(&g47(), &[2, 3, 4, 1, 5, 6, 7]),
            Err(Error::NotGrassmannian(..))
        ));
        assert!(permutation_to_partition(&g47(), &[1, 1, 2, 3, 4, 5, 6]).is_err());
    }

    #[test]
    fn roundtrips_over_the_box() {
        let shape = g47();
        let partitions = shape.partitions();
        assert_eq!(partitions.len(), 35);
        for p in partitions {
            let w = partition_to_permutation(&shape, &p).unwrap();
            assert_eq!(permutation_to_partition(&shape, &w).unwrap(), p);
        }
    }

    #[test]
    fn oracles() {
        assert!(oracle_smooth(&lam("3,3")));
        assert!(oracle_smooth(&Partition::default()));
        assert!(!oracle_smooth(&lam("3,2,1,1")));
        assert!(!oracle_gorenstein(&lam("3,2,1,1")));
        assert!(oracle_gorenstein(&lam("2,1")));
        assert!(oracle_gorenstein(&lam("3,3")));
    }

    #[test]
    fn parsing_and_formatting() {
        assert_eq!(lam("3, 2,1,1,0").parts(), &[3, 2, 1, 1]);
        assert_eq!(lam("").parts(), &[] as &[usize]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(format_permutation(&[2, 3, 5, 7, 1, 4, 6]), "2357146");
        assert_eq!(
            format_permutation(&[1, 2, 3, 4, 5, 6, 7, 8, 10, 9]),
            "1,2,3,4,5,6,7,8,10,9"
        );
        assert_eq!(
            parse_permutation("2357146").unwrap(),
            vec![2, 3, 5, 7, 1, 4, 6]
        );
        assert_eq!(parse_permutation("(1,2,10)").unwrap(), vec![1, 2, 10]);
    }

    #[test]
    fn word_action_on_points() {
        assert_eq!(word_to_permutation(&WeylWord(vec![]), 3), vec![1, 2, 3]);
        assert_eq!(word_to_permutation(&WeylWord(vec![1]), 3), vec![2, 1, 3]);
        // s1 s2: 1 -> s1(s2(1)) = 2, 2 -> s1(3) = 3, 3 -> s1(2) = 1
        assert_eq!(word_to_permutation(&WeylWord(vec![1, 2]), 3), vec![2, 3, 1]);
    }

    #[test]
    fn grid_model_of_g47() {
        let amb = AmbientQuiver::build(g47().space().unwrap()).unwrap();
        let grid = Grid::new(&amb).unwrap();
        assert_eq!(grid.vertex(1, 1), amb.minimum());
        let ideal = grid.partition_to_ideal(&lam("3,2,1,1")).unwrap();
        assert_eq!(ideal.len(), 7);
        assert_eq!(grid.ideal_to_partition(&ideal), lam("3,2,1,1"));
        for i in 1..=4 {
            for j in 1..=3 {
                assert_eq!(amb.color(grid.vertex(i, j)), grid.box_color(i, j));
            }
        }
        assert_eq!(
            grid.partition_to_ideal(&lam("3,3,3,3")).unwrap(),
            amb.full_ideal()
        );
        assert!(grid
            .partition_to_ideal(&Partition::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn grid_rejects_other_types() {
        let amb = AmbientQuiver::build("D4/1".parse().unwrap()).unwrap();
        assert!(matches!(Grid::new(&amb), Err(Error::NotTypeA(_))));
    }
}
