//! Simply-laced root systems in Bourbaki numbering.
//!
//! Roots are integer coordinate vectors over the simple roots; weights are
//! carried by their pairings with the simple coroots. Node indices are
//! 1-based throughout, so `coords[i - 1]` is the coefficient of `α_i`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        write!(f, "{c}")
    }
}

/// An admissible simply-laced Dynkin type with at least one minuscule node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => {
                if rank == 8 {
                    return Err(Error::InvalidDynkin(
                        "E8 has no minuscule weight".to_string(),
                    ));
                }
                rank == 6 || rank == 7
            }
        };
        if !ok {
            return Err(Error::InvalidDynkin(format!(
                "{family}{rank}: rank out of range (A: >= 1, D: >= 4, E: 6 or 7)"
            )));
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the Dynkin diagram as unordered pairs of 1-based nodes.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            Family::E => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..n).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Minuscule nodes, from the classical table restricted to simply-laced types.
    pub fn minuscule_nodes(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::A => (1..=n).collect(),
            Family::D => vec![1, n - 1, n],
            Family::E if n == 6 => vec![1, 6],
            Family::E => vec![7],
        }
    }

    /// `|R+|` from the closed formulas.
    pub fn expected_positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E if n == 6 => 36,
            Family::E => 63,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty Dynkin type".to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in Dynkin type {s:?}")))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'D' => Family::D,
            'E' => Family::E,
            'B' | 'C' => {
                return Err(Error::InvalidDynkin(format!(
                    "{s}: non-simply-laced types are not supported"
                )))
            }
            'F' | 'G' => {
                return Err(Error::InvalidDynkin(format!(
                    "{s}: non-simply-laced and without minuscule weight"
                )))
            }
            other => {
                return Err(Error::InvalidDynkin(format!(
                    "unknown family {other:?} in {s:?}"
                )))
            }
        };
        DynkinType::new(family, rank)
    }
}

/// Coefficients of a root (or any lattice vector) over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn negated(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }
}

/// A word in the simple reflections, letters are 1-based nodes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(words: &[WeylWord]) -> WeylWord {
        WeylWord(words.iter().flat_map(|w| w.0.iter().copied()).collect())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Position of a root relative to the maximal parabolic of a minuscule node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    NegNonLevi,
    PosNonLevi,
    PosLevi,
    NegLevi,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<RootVector>,
    root_set: HashSet<RootVector>,
}

impl RootSystem {
    pub fn new(dynkin: DynkinType) -> Self {
        let n = dynkin.rank();
        let mut cartan = vec![vec![0; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in dynkin.edges() {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }

        let mut rs = RootSystem {
            dynkin,
            cartan,
            positive_roots: Vec::new(),
            root_set: HashSet::new(),
        };

        // Close the simple roots under simple reflections, keeping positives.
        let mut seen: HashSet<RootVector> = HashSet::new();
        let mut queue: VecDeque<RootVector> = VecDeque::new();
        for node in 1..=n {
            let a = rs.simple_root_unchecked(node);
            seen.insert(a.clone());
            queue.push_back(a);
        }
        let mut positive = Vec::new();
        while let Some(root) = queue.pop_front() {
            for node in 1..=n {
                let r = rs.reflect_unchecked(node, &root);
                if r.is_positive() && seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
            positive.push(root);
        }
        positive.sort_by(|a, b| {
            let ha: i32 = a.0.iter().sum();
            let hb: i32 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let mut root_set: HashSet<RootVector> = positive.iter().cloned().collect();
        root_set.extend(positive.iter().map(RootVector::negated));
        rs.positive_roots = positive;
        rs.root_set = root_set;
        debug_assert_eq!(
            rs.positive_roots.len(),
            dynkin.expected_positive_root_count()
        );
        rs
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.rank() {
            Err(Error::InvalidNode {
                node,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// `⟨α_a^∨, α_b⟩` for 1-based nodes.
    pub fn cartan_entry(&self, a: usize, b: usize) -> i32 {
        self.cartan[a - 1][b - 1]
    }

    pub fn simple_root(&self, node: usize) -> Result<RootVector> {
        self.check_node(node)?;
        Ok(self.simple_root_unchecked(node))
    }

    fn simple_root_unchecked(&self, node: usize) -> RootVector {
        let mut v = vec![0; self.rank()];
        v[node - 1] = 1;
        RootVector(v)
    }

    /// `⟨v, α_node^∨⟩`.
    pub fn pairing(&self, v: &RootVector, node: usize) -> i32 {
        v.0.iter()
            .zip(&self.cartan)
            .map(|(c, row)| c * row[node - 1])
            .sum()
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.root_set.contains(v)
    }

    pub fn reflect_simple(&self, node: usize, v: &RootVector) -> Result<RootVector> {
        self.check_node(node)?;
        if v.0.len() != self.rank() {
            return Err(Error::Parse(format!(
                "vector of length {} in rank {}",
                v.0.len(),
                self.rank()
            )));
        }
        Ok(self.reflect_unchecked(node, v))
    }

    fn reflect_unchecked(&self, node: usize, v: &RootVector) -> RootVector {
        let p = self.pairing(v, node);
        let mut out = v.clone();
        out.0[node - 1] -= p;
        out
    }

    fn check_word(&self, word: &WeylWord) -> Result<()> {
        word.0.iter().try_for_each(|&l| self.check_node(l))
    }

    /// Applies the letters in reading order: the first letter acts first, so
    /// `apply_word([a, b], v) = s_b(s_a(v))`. For a reduced word of `w` this
    /// computes `w⁻¹(v)`; the reversed word computes `w(v)`.
    pub fn apply_word(&self, word: &WeylWord, v: &RootVector) -> Result<RootVector> {
        self.check_word(word)?;
        let mut out = v.clone();
        for &l in &word.0 {
            out = self.reflect_unchecked(l, &out);
        }
        Ok(out)
    }

    /// `ℓ(w) = #{α > 0 : w(α) < 0}` for the element `w` spelled by `word`.
    pub fn length_by_inversions(&self, word: &WeylWord) -> Result<usize> {
        self.check_word(word)?;
        // ℓ(w) = ℓ(w⁻¹), and apply_word on the word itself yields w⁻¹.
        let mut count = 0;
        for root in &self.positive_roots {
            let mut v = root.clone();
            for &l in &word.0 {
                v = self.reflect_unchecked(l, &v);
            }
            if v.is_negative() {
                count += 1;
            }
        }
        Ok(count)
    }

    pub fn minuscule_nodes(&self) -> Vec<usize> {
        self.dynkin.minuscule_nodes()
    }

    pub fn classify_root(&self, minuscule_node: usize, v: &RootVector) -> Result<RootClass> {
        self.check_node(minuscule_node)?;
        if !self.is_root(v) {
            return Err(Error::NotARoot(v.0.clone()));
        }
        let levi = v.0[minuscule_node - 1] == 0;
        Ok(match (v.is_positive(), levi) {
            (true, true) => RootClass::PosLevi,
            (true, false) => RootClass::PosNonLevi,
            (false, true) => RootClass::NegLevi,
            (false, false) => RootClass::NegNonLevi,
        })
    }

    /// Simple reflection of a weight given by its Dynkin labels `⟨μ, α_i^∨⟩`.
    pub fn reflect_weight(&self, node: usize, labels: &[i32]) -> Vec<i32> {
        let m = labels[node - 1];
        labels
            .iter()
            .zip(&self.cartan[node - 1])
            .map(|(l, c)| l - m * c)
            .collect()
    }

    /// The orbit `W·ϖ_node`, found breadth-first (neighbors by ascending node).
    pub fn weight_orbit(&self, node: usize) -> Result<Vec<Vec<i32>>> {
        self.check_node(node)?;
        let mut start = vec![0; self.rank()];
        start[node - 1] = 1;
        let mut seen: HashSet<Vec<i32>> = HashSet::from([start.clone()]);
        let mut order = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(mu) = queue.pop_front() {
            for i in 1..=self.rank() {
                if mu[i - 1] != 0 {
                    let next = self.reflect_weight(i, &mu);
                    if seen.insert(next.clone()) {
                        order.push(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(order)
    }

    /// Greedy descent from `ϖ_node` to the lowest weight of its orbit, taking
    /// the smallest node with label 1 at each step. Returns the labels in
    /// descent order; the reverse is a reduced word of the longest element
    /// of `W^P`.
    pub fn lowest_weight_descent(&self, node: usize) -> Result<Vec<usize>> {
        self.check_node(node)?;
        let allowed = self.minuscule_nodes();
        if !allowed.contains(&node) {
            return Err(Error::NotMinuscule {
                dynkin: self.dynkin.to_string(),
                node,
                allowed,
            });
        }
        let mut mu = vec![0; self.rank()];
        mu[node - 1] = 1;
        let mut path = Vec::new();
        while let Some(i) = (1..=self.rank()).find(|&i| mu[i - 1] == 1) {
            mu = self.reflect_weight(i, &mu);
            if mu.iter().any(|&l| l.abs() > 1) {
                return Err(Error::Construction(format!(
                    "weight {mu:?} has a label outside [-1, 1]"
                )));
            }
            path.push(i);
        }
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn rv(v: &[i32]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn a2_cartan_and_roots() {
        let a2 = rs("A2");
        assert_eq!(a2.cartan(), &[vec![2, -1], vec![-1, 2]]);
        let roots: HashSet<_> = a2.positive_roots().iter().cloned().collect();
        let expected: HashSet<_> = [rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])].into();
        assert_eq!(roots, expected);
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs("A6").positive_roots().len(), 21);
        // (dim E6 - rank) / 2 = (78 - 6) / 2
        assert_eq!(rs("E6").positive_roots().len(), (78 - 6) / 2);
        assert_eq!(rs("E7").positive_roots().len(), (133 - 7) / 2);
        for n in 4..=8 {
            assert_eq!(rs(&format!("D{n}")).positive_roots().len(), n * (n - 1));
        }
    }

    #[test]
    fn rejects_inadmissible_types() {
        assert!(
            matches!("E8".parse::<DynkinType>(), Err(Error::InvalidDynkin(m)) if m.contains("no minuscule"))
        );
        assert!("B3".parse::<DynkinType>().is_err());
        assert!("C4".parse::<DynkinType>().is_err());
        assert!("G2".parse::<DynkinType>().is_err());
        assert!("F4".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("A0".parse::<DynkinType>().is_err());
        assert!("E5".parse::<DynkinType>().is_err());
        assert!("X".parse::<DynkinType>().is_err());
    }

    #[test]
    fn cartan_is_simply_laced() {
        for t in ["A1", "A7", "D4", "D6", "E6", "E7"] {
            let r = rs(t);
            let c = r.cartan();
            for (i, row) in c.iter().enumerate() {
                assert_eq!(row[i], 2);
                for (j, &x) in row.iter().enumerate() {
                    assert_eq!(x, c[j][i]);
                    if i != j {
                        assert!(x == 0 || x == -1);
                    }
                }
            }
        }
    }

    #[test]
    fn simple_reflections() {
        let a2 = rs("A2");
        assert_eq!(a2.reflect_simple(1, &rv(&[1, 0])).unwrap(), rv(&[-1, 0]));
        assert_eq!(a2.reflect_simple(1, &rv(&[0, 1])).unwrap(), rv(&[1, 1]));
        let a6 = rs("A6");
        // ⟨α3+α4+α5, α4^∨⟩ = -1 + 2 - 1 = 0, so s_4 fixes this root.
        assert_eq!(
            a6.reflect_simple(4, &rv(&[0, 0, 1, 1, 1, 0])).unwrap(),
            rv(&[0, 0, 1, 1, 1, 0])
        );
        assert_eq!(
            a6.reflect_simple(4, &rv(&[0, 0, 1, 1, 0, 0])).unwrap(),
            rv(&[0, 0, 1, 0, 0, 0])
        );
        assert!(a2.reflect_simple(3, &rv(&[1, 0])).is_err());
    }

    #[test]
    fn apply_word_examples() {
        let a2 = rs("A2");
        let v = rv(&[1, 0]);
        assert_eq!(a2.apply_word(&WeylWord::default(), &v).unwrap(), v);
        assert_eq!(
            a2.apply_word(&WeylWord(vec![1, 2]), &v).unwrap(),
            rv(&[-1, -1])
        );
    }

    #[test]
    fn lengths() {
        let a2 = rs("A2");
        assert_eq!(a2.length_by_inversions(&WeylWord::default()).unwrap(), 0);
        assert_eq!(a2.length_by_inversions(&WeylWord(vec![1, 1])).unwrap(), 0);
        assert_eq!(
            a2.length_by_inversions(&WeylWord(vec![1, 2, 1])).unwrap(),
            3
        );
    }

    #[test]
    fn minuscule_tables() {
        assert_eq!(rs("A6").minuscule_nodes(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(rs("D5").minuscule_nodes(), vec![1, 4, 5]);
        assert_eq!(rs("E6").minuscule_nodes(), vec![1, 6]);
        assert_eq!(rs("E7").minuscule_nodes(), vec![7]);
    }

    #[test]
    fn classify_examples() {
        let a6 = rs("A6");
        assert_eq!(
            a6.classify_root(4, &rv(&[0, 1, 0, 0, 0, 0])).unwrap(),
            RootClass::PosLevi
        );
        assert_eq!(
            a6.classify_root(4, &rv(&[0, 0, -1, -1, -1, 0])).unwrap(),
            RootClass::NegNonLevi
        );
        assert_eq!(
            a6.classify_root(4, &rv(&[0, 1, 1, 1, 1, 0])).unwrap(),
            RootClass::PosNonLevi
        );
        assert_eq!(
            a6.classify_root(4, &rv(&[0, -1, 0, 0, 0, 0])).unwrap(),
            RootClass::NegLevi
        );
        assert!(matches!(
            a6.classify_root(4, &rv(&[1, 0, 1, 0, 0, 0])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for t in ["A5", "D5", "E6", "E7"] {
            let r = rs(t);
            for node in 1..=r.rank() {
                let a = r.simple_root(node).unwrap();
                let mut image: Vec<_> = r
                    .positive_roots()
                    .iter()
                    .filter(|x| **x != a)
                    .map(|x| r.reflect_simple(node, x).unwrap())
                    .collect();
                let mut orig: Vec<_> = r
                    .positive_roots()
                    .iter()
                    .filter(|x| **x != a)
                    .cloned()
                    .collect();
                image.sort();
                orig.sort();
                assert_eq!(image, orig, "{t} s_{node}");
            }
        }
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(rs("E6").weight_orbit(1).unwrap().len(), 27);
        assert_eq!(rs("E7").weight_orbit(7).unwrap().len(), 56);
        assert_eq!(rs("A6").weight_orbit(4).unwrap().len(), 35);
        assert_eq!(rs("D5").weight_orbit(1).unwrap().len(), 10);
        assert_eq!(rs("D5").weight_orbit(5).unwrap().len(), 16);
    }

    #[test]
    fn descent_reaches_lowest_weight() {
        let e7 = rs("E7");
        let path = e7.lowest_weight_descent(7).unwrap();
        assert_eq!(path.len(), 27);
        assert_eq!(path[0], 7);
        assert!(rs("E7").lowest_weight_descent(1).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn word_then_reverse_is_identity(
                letters in proptest::collection::vec(1usize..=6, 0..20),
                root_idx in 0usize..36,
            ) {
                let e6 = rs("E6");
                let v = e6.positive_roots()[root_idx].clone();
                let w = WeylWord(letters);
                let there = e6.apply_word(&w, &v).unwrap();
                prop_assert!(e6.is_root(&there));
                let back = e6.apply_word(&w.reversed(), &there).unwrap();
                prop_assert_eq!(back, v);
            }

            #[test]
            fn reflection_is_involution(node in 1usize..=7, root_idx in 0usize..63, neg in any::<bool>()) {
                let e7 = rs("E7");
                let mut v = e7.positive_roots()[root_idx].clone();
                if neg { v = v.negated(); }
                let once = e7.reflect_simple(node, &v).unwrap();
                prop_assert_eq!(e7.reflect_simple(node, &once).unwrap(), v);
            }

            #[test]
            fn length_bounded_by_letters(letters in proptest::collection::vec(1usize..=5, 0..16)) {
                let d5 = rs("D5");
                let w = WeylWord(letters);
                let l = d5.length_by_inversions(&w).unwrap();
                prop_assert!(l <= w.len());
                prop_assert_eq!(l % 2, w.len() % 2);
            }
        }
    }
}
