//! Quivers (heaps) of minuscule Weyl group elements and their order ideals.
//!
//! Vertices are 0-based here: vertex `v` is bit `v` of a [`VertexSet`] and
//! corresponds to the `(v + 1)`-th letter of the word the quiver was built
//! from. Arrows go from a smaller index to a larger one ("downwards"), and
//! `u ≼ v` iff there is an oriented path from `v` to `u`. The ambient quiver
//! of a minuscule space has its unique minimum at the last vertex.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsys::{DynkinType, RootSystem, RootVector, WeylWord};

/// A subset of quiver vertices, stored as a 64-bit mask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const MAX_VERTICES: usize = 64;

    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Lowercase hex with a `0x` prefix; bit `v` is vertex `v + 1` in the
    /// 1-based numbering used on the command line.
    pub fn to_hex(self) -> String {
        format!("{:#x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t
            .strip_prefix("0x")
            .or_else(|| t.strip_prefix("0X"))
            .unwrap_or(t);
        u64::from_str_radix(digits, 16)
            .map(VertexSet)
            .map_err(|_| Error::Parse(format!("bad hex mask {s:?}")))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// The colored quiver of a word, with successor/predecessor maps and the
/// reachability order precomputed.
#[derive(Debug, Clone)]
pub struct Quiver {
    colors: Vec<usize>,
    successor: Vec<Option<usize>>,
    predecessor: Vec<Option<usize>>,
    arrows: Vec<(usize, usize)>,
    children: Vec<VertexSet>,
    parents: Vec<VertexSet>,
    below: Vec<VertexSet>,
    above: Vec<VertexSet>,
}

impl Quiver {
    /// Builds the quiver of `word`: an arrow `i → j` exists iff the colors
    /// pair nontrivially and `i < j < s(i)`, or `i < j` when `s(i)` is absent.
    pub fn from_word(rs: &RootSystem, word: &WeylWord) -> Result<Quiver> {
        let colors = word.letters().to_vec();
        let r = colors.len();
        if r > VertexSet::MAX_VERTICES {
            return Err(Error::TooManyVertices(r));
        }
        for &c in &colors {
            rs.check_node(c)?;
        }

        let mut successor = vec![None; r];
        let mut predecessor = vec![None; r];
        for i in 0..r {
            successor[i] = (i + 1..r).find(|&j| colors[j] == colors[i]);
            predecessor[i] = (0..i).rev().find(|&j| colors[j] == colors[i]);
        }

        let mut arrows = Vec::new();
        let mut children = vec![VertexSet::empty(); r];
        let mut parents = vec![VertexSet::empty(); r];
        for i in 0..r {
            let end = successor[i].unwrap_or(r);
            for j in i + 1..end {
                if rs.cartan_entry(colors[j], colors[i]) != 0 {
                    arrows.push((i, j));
                    children[i].insert(j);
                    parents[j].insert(i);
                }
            }
        }

        let mut below = vec![VertexSet::empty(); r];
        for v in (0..r).rev() {
            let mut b = VertexSet::singleton(v);
            for c in children[v].iter() {
                b = b.union(below[c]);
            }
            below[v] = b;
        }
        let mut above = vec![VertexSet::empty(); r];
        for v in 0..r {
            let mut a = VertexSet::singleton(v);
            for p in parents[v].iter() {
                a = a.union(above[p]);
            }
            above[v] = a;
        }

        Ok(Quiver {
            colors,
            successor,
            predecessor,
            arrows,
            children,
            parents,
            below,
            above,
        })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn successor(&self, v: usize) -> Option<usize> {
        self.successor[v]
    }

    pub fn predecessor(&self, v: usize) -> Option<usize> {
        self.predecessor[v]
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn children(&self, v: usize) -> VertexSet {
        self.children[v]
    }

    pub fn parents(&self, v: usize) -> VertexSet {
        self.parents[v]
    }

    /// `{u : u ≼ v}`, including `v`.
    pub fn below(&self, v: usize) -> VertexSet {
        self.below[v]
    }

    /// `{u : u ≽ v}`, including `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        self.above[v]
    }

    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.below[v].contains(u)
    }

    /// Longest arrow path (counted in vertices) from each member of `set`
    /// staying inside `set`; zero for non-members.
    pub fn heights_within(&self, set: VertexSet) -> Vec<usize> {
        let mut h = vec![0; self.len()];
        for v in (0..self.len()).rev() {
            if set.contains(v) {
                h[v] = 1 + self.children[v]
                    .intersection(set)
                    .iter()
                    .map(|c| h[c])
                    .max()
                    .unwrap_or(0);
            }
        }
        h
    }

    /// Members of `set` maximal for `≼` restricted to `set`.
    pub fn maximal_within(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .filter(|&v| self.above[v].intersection(set) == VertexSet::singleton(v))
            .collect()
    }

    pub fn minimal_within(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .filter(|&v| self.below[v].intersection(set) == VertexSet::singleton(v))
            .collect()
    }

    /// Reads a word off `set`: members sorted by height within `set`
    /// (descending), then color (ascending), then index.
    pub fn word_within(&self, set: VertexSet) -> WeylWord {
        WeylWord(
            self.linear_extension_within(set)
                .into_iter()
                .map(|v| self.colors[v])
                .collect(),
        )
    }

    pub fn linear_extension_within(&self, set: VertexSet) -> Vec<usize> {
        let h = self.heights_within(set);
        let mut vs: Vec<usize> = set.iter().collect();
        vs.sort_by(|&a, &b| {
            h[b].cmp(&h[a])
                .then(self.colors[a].cmp(&self.colors[b]))
                .then(a.cmp(&b))
        });
        vs
    }

    /// Whether `set` is downward closed; otherwise a violating pair
    /// `(lower, upper)` with `upper` a member and `lower` missing.
    pub fn check_down_closed(&self, set: VertexSet) -> std::result::Result<(), (usize, usize)> {
        for v in set.iter() {
            if let Some(u) = self.below[v].difference(set).first() {
                return Err((u, v));
            }
        }
        Ok(())
    }

    /// Connected components of the subgraph induced on `subset`, arrows
    /// taken without direction. Components are ordered by smallest vertex.
    pub fn connected_components(&self, subset: VertexSet) -> Vec<VertexSet> {
        let mut remaining = subset;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::empty();
                for v in frontier.iter() {
                    next = next.union(self.children[v]).union(self.parents[v]);
                }
                next = next.intersection(subset).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn induced(&self, set: VertexSet) -> ColoredPoset {
        let vertices: Vec<usize> = set.iter().collect();
        let colors = vertices.iter().map(|&v| self.colors[v]).collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|(a, b)| set.contains(*a) && set.contains(*b))
            .copied()
            .collect();
        ColoredPoset {
            vertices,
            colors,
            arrows,
        }
    }
}

/// A vertex subset presented on its own: vertices (ambient indices), their
/// colors and the arrows between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPoset {
    pub vertices: Vec<usize>,
    pub colors: Vec<usize>,
    pub arrows: Vec<(usize, usize)>,
}

/// A minuscule homogeneous space `G/P_ϖ`.
#[derive(Debug, Clone)]
pub struct MinusculeSpace {
    root_system: RootSystem,
    node: usize,
}

impl MinusculeSpace {
    pub fn new(dynkin: DynkinType, node: usize) -> Result<Self> {
        let allowed = dynkin.minuscule_nodes();
        if !allowed.contains(&node) {
            return Err(Error::NotMinuscule {
                dynkin: dynkin.to_string(),
                node,
                allowed,
            });
        }
        Ok(Self {
            root_system: RootSystem::new(dynkin),
            node,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn dynkin(&self) -> DynkinType {
        self.root_system.dynkin()
    }

    pub fn node(&self) -> usize {
        self.node
    }

    /// `dim G/P`: positive roots with nonzero coefficient at the node.
    pub fn dimension(&self) -> usize {
        self.root_system
            .positive_roots()
            .iter()
            .filter(|r| r.coords()[self.node - 1] != 0)
            .count()
    }
}

impl fmt::Display for MinusculeSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.dynkin(), self.node)
    }
}

impl FromStr for MinusculeSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (t, n) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected <type><rank>/<node>, got {s:?}")))?;
        let dynkin: DynkinType = t.parse()?;
        let node: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad node in {s:?}")))?;
        MinusculeSpace::new(dynkin, node)
    }
}

/// The quiver `Q_ϖ` of the longest element of `W^P`.
#[derive(Debug, Clone)]
pub struct AmbientQuiver {
    space: MinusculeSpace,
    word: WeylWord,
    quiver: Quiver,
    orbit_size: usize,
}

impl AmbientQuiver {
    pub fn build(space: MinusculeSpace) -> Result<AmbientQuiver> {
        let rs = space.root_system();
        let node = space.node();
        let descent = rs.lowest_weight_descent(node)?;
        let word = WeylWord(descent.into_iter().rev().collect());
        let quiver = Quiver::from_word(rs, &word)?;
        let orbit_size = rs.weight_orbit(node)?.len();
        let ambient = AmbientQuiver {
            space,
            word,
            quiver,
            orbit_size,
        };
        ambient.check_construction()?;
        Ok(ambient)
    }

    fn check_construction(&self) -> Result<()> {
        let q = &self.quiver;
        let n = q.len();
        let fail = |m: String| Err(Error::Construction(format!("{}: {m}", self.space)));
        if n != self.space.dimension() {
            return fail(format!(
                "{n} vertices but dim G/P = {}",
                self.space.dimension()
            ));
        }
        let min = n - 1;
        if q.color(min) != self.space.node() {
            return fail("minimum does not carry the minuscule node".into());
        }
        for v in 0..n {
            if !q.precedes(min, v) {
                return fail(format!("vertex {v} is not above the minimum"));
            }
            let mut chain = v;
            while let Some(s) = q.successor(chain) {
                if !q.precedes(s, chain) {
                    return fail(format!(
                        "same-color vertices {chain} and {s} are incomparable"
                    ));
                }
                chain = s;
            }
        }
        if q.connected_components(q.all()).len() > 1 {
            return fail("quiver is disconnected".into());
        }
        Ok(())
    }

    pub fn space(&self) -> &MinusculeSpace {
        &self.space
    }

    pub fn root_system(&self) -> &RootSystem {
        self.space.root_system()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// The reduced word of the longest element of `W^P` the quiver was built from.
    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.quiver.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quiver.is_empty()
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    pub fn minimum(&self) -> usize {
        self.len() - 1
    }

    pub fn color(&self, v: usize) -> usize {
        self.quiver.color(v)
    }

    /// `s^k(v)`, or `None` once the iteration leaves the quiver.
    pub fn successor_k(&self, v: usize, k: usize) -> Option<usize> {
        let mut cur = v;
        for _ in 0..k {
            cur = self.quiver.successor(cur)?;
        }
        Some(cur)
    }

    pub fn connected_components(&self, subset: VertexSet) -> Vec<VertexSet> {
        self.quiver.connected_components(subset)
    }

    pub fn ideal(&self, members: VertexSet) -> Result<Ideal<'_>> {
        if !members.is_subset(self.quiver.all()) {
            let v = members.difference(self.quiver.all()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange(v));
        }
        self.quiver
            .check_down_closed(members)
            .map_err(|(lower, upper)| Error::NotAnIdeal { lower, upper })?;
        Ok(Ideal {
            ambient: self,
            members,
        })
    }

    pub fn empty_ideal(&self) -> Ideal<'_> {
        Ideal {
            ambient: self,
            members: VertexSet::empty(),
        }
    }

    pub fn full_ideal(&self) -> Ideal<'_> {
        Ideal {
            ambient: self,
            members: self.quiver.all(),
        }
    }

    /// Every order ideal exactly once, by ascending membership mask.
    pub fn enumerate_ideals(&self) -> impl Iterator<Item = Ideal<'_>> + '_ {
        let mut masks = Vec::new();
        self.collect_ideals(self.len(), VertexSet::empty(), &mut masks);
        masks.sort();
        masks.into_iter().map(move |members| Ideal {
            ambient: self,
            members,
        })
    }

    // Decides vertices from the bottom up; `remaining` vertices 0..remaining
    // are still open.
    fn collect_ideals(&self, remaining: usize, current: VertexSet, out: &mut Vec<VertexSet>) {
        if remaining == 0 {
            out.push(current);
            return;
        }
        let v = remaining - 1;
        self.collect_ideals(v, current, out);
        if self.quiver.children(v).is_subset(current) {
            let mut with = current;
            with.insert(v);
            self.collect_ideals(v, with, out);
        }
    }

    /// Resolves a reduced word of an element of `W^P` to its ideal by adding
    /// one vertex per letter, reading the word from the right.
    pub fn ideal_from_word(&self, word: &WeylWord) -> Result<Ideal<'_>> {
        let rs = self.root_system();
        for &l in word.letters() {
            rs.check_node(l)?;
        }
        let len = rs.length_by_inversions(word)?;
        if len != word.len() {
            return Err(Error::InvalidWord(format!(
                "{word} is not reduced (length {len})"
            )));
        }
        let node = self.space.node();
        for t in (1..=rs.rank()).filter(|&t| t != node) {
            let image = rs.apply_word(&word.reversed(), &rs.simple_root(t)?)?;
            if !image.is_positive() {
                return Err(Error::InvalidWord(format!(
                    "{word} is not a minimal coset representative (w(α{t}) < 0)"
                )));
            }
        }
        let mut members = VertexSet::empty();
        for &letter in word.letters().iter().rev() {
            let next = (0..self.len())
                .rev()
                .find(|&v| self.color(v) == letter && !members.contains(v));
            match next {
                Some(v) if self.quiver.children(v).is_subset(members) => members.insert(v),
                _ => {
                    return Err(Error::InvalidWord(format!(
                        "{word} does not spell an order ideal of {}",
                        self.space
                    )))
                }
            }
        }
        self.ideal(members)
    }

    pub fn simple_root(&self, node: usize) -> Result<RootVector> {
        self.root_system().simple_root(node)
    }
}

/// A downward-closed vertex set of an ambient quiver: one Schubert variety.
#[derive(Debug, Clone, Copy)]
pub struct Ideal<'a> {
    ambient: &'a AmbientQuiver,
    members: VertexSet,
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ambient, other.ambient) && self.members == other.members
    }
}

impl Eq for Ideal<'_> {}

/// One hole of a quiver. `essential` and `gorenstein` are filled in by the
/// analysis; `gorenstein` is only set for essential holes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoleRecord {
    pub vertex: usize,
    pub color: usize,
    pub is_virtual: bool,
    pub essential: bool,
    pub gorenstein: Option<bool>,
}

impl<'a> Ideal<'a> {
    pub fn ambient(&self) -> &'a AmbientQuiver {
        self.ambient
    }

    pub fn members(&self) -> VertexSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn is_subset(&self, other: &Ideal<'_>) -> bool {
        self.members.is_subset(other.members)
    }

    fn quiver(&self) -> &'a Quiver {
        &self.ambient.quiver
    }

    /// The canonical reduced word of this element of `W^P`.
    pub fn word(&self) -> WeylWord {
        self.quiver().word_within(self.members)
    }

    pub fn peaks(&self) -> VertexSet {
        self.quiver().maximal_within(self.members)
    }

    /// Heights of members (zero entries for non-members).
    pub fn height_vector(&self) -> Vec<usize> {
        self.quiver().heights_within(self.members)
    }

    pub fn heights(&self) -> std::collections::BTreeMap<usize, usize> {
        let h = self.height_vector();
        self.members.iter().map(|v| (v, h[v])).collect()
    }

    /// Holes, ordered by vertex, with only `is_virtual` meaningful.
    pub fn holes(&self) -> Vec<HoleRecord> {
        let q = self.quiver();
        let rs = self.ambient.root_system();
        let members = self.members;
        let mut out = Vec::new();
        for v in 0..q.len() {
            let c = q.color(v);
            let adjacent = |j: usize| j != v && rs.cartan_entry(c, q.color(j)) != 0;
            let is_virtual = if members.contains(v) {
                let top_of_color = q.predecessor(v).is_none_or(|p| !members.contains(p));
                let upper = q.above(v).intersection(members);
                if !top_of_color || upper.iter().filter(|&j| adjacent(j)).count() != 2 {
                    continue;
                }
                false
            } else {
                if q.successor(v).is_some() {
                    continue;
                }
                // The point has a single virtual hole at the minimum.
                let touches = if members.is_empty() {
                    v == self.ambient.minimum()
                } else {
                    members.iter().any(adjacent)
                };
                if !touches {
                    continue;
                }
                true
            };
            out.push(HoleRecord {
                vertex: v,
                color: c,
                is_virtual,
                essential: false,
                gorenstein: None,
            });
        }
        out
    }

    /// `Q_w^v = {j ∈ Q_w : j ≽ v}`.
    pub fn up_set(&self, v: usize) -> Result<VertexSet> {
        if !self.contains(v) {
            return Err(Error::VertexNotInIdeal(v));
        }
        Ok(self.quiver().above(v).intersection(self.members))
    }

    /// `Q_{w,v}`: the ideal with `Q_w^v` removed.
    pub fn minus(&self, v: usize) -> Result<Ideal<'a>> {
        let up = self.up_set(v)?;
        Ok(self.with_members(self.members.difference(up)))
    }

    /// The largest sub-ideal containing no vertex of `k`.
    pub fn avoiding(&self, k: VertexSet) -> Result<Ideal<'a>> {
        if !k.is_subset(self.members) {
            return Err(Error::NotASubset {
                small: k.to_hex(),
                big: self.members.to_hex(),
            });
        }
        let q = self.quiver();
        let removed = k
            .iter()
            .fold(VertexSet::empty(), |acc, v| acc.union(q.above(v)));
        Ok(self.with_members(self.members.difference(removed)))
    }

    // Caller guarantees `members` is down-closed.
    pub(crate) fn with_members(&self, members: VertexSet) -> Ideal<'a> {
        debug_assert!(self.quiver().check_down_closed(members).is_ok());
        Ideal {
            ambient: self.ambient,
            members,
        }
    }

    pub fn induced(&self) -> ColoredPoset {
        self.quiver().induced(self.members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ambient(s: &str) -> AmbientQuiver {
        AmbientQuiver::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn ambient_sizes() {
        assert_eq!(ambient("A6/4").len(), 12);
        assert_eq!(ambient("D4/4").len(), 6);
        assert_eq!(ambient("E6/1").len(), 16);
        assert_eq!(ambient("E7/7").len(), 27);
        let a1 = ambient("A1/1");
        assert_eq!(a1.len(), 1);
        assert!(a1.quiver().arrows().is_empty());
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(ambient("A6/4").enumerate_ideals().count(), 35);
        assert_eq!(ambient("E6/1").enumerate_ideals().count(), 27);
        assert_eq!(ambient("E7/7").enumerate_ideals().count(), 56);
        assert_eq!(ambient("A1/1").enumerate_ideals().count(), 2);
    }

    #[test]
    fn enumeration_is_sorted_and_down_closed() {
        let amb = ambient("D5/5");
        let masks: Vec<_> = amb.enumerate_ideals().map(|i| i.members()).collect();
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
        for m in masks {
            assert!(amb.quiver().check_down_closed(m).is_ok());
        }
    }

    #[test]
    fn rejects_non_ideal() {
        let amb = ambient("A2/1");
        // vertex 0 is the top, vertex 1 the minimum
        let err = amb.ideal(VertexSet::singleton(0)).unwrap_err();
        assert_eq!(err, Error::NotAnIdeal { lower: 1, upper: 0 });
        assert!(matches!(
            amb.ideal(VertexSet::singleton(5)),
            Err(Error::VertexOutOfRange(5))
        ));
    }

    #[test]
    fn minimum_is_node_colored() {
        for s in ["A6/4", "D5/1", "D5/4", "E6/6", "E7/7"] {
            let amb = ambient(s);
            assert_eq!(amb.color(amb.minimum()), amb.space().node());
            assert_eq!(
                amb.quiver().minimal_within(amb.quiver().all()),
                VertexSet::singleton(amb.minimum())
            );
        }
    }

    #[test]
    fn full_ideal_word_of_a2() {
        let amb = ambient("A2/1");
        let w = amb.full_ideal().word();
        assert_eq!(w.len(), 2);
        assert_eq!(amb.root_system().length_by_inversions(&w).unwrap(), 2);
        assert_eq!(w.letters().last(), Some(&1));
        assert!(amb.empty_ideal().word().is_empty());
    }

    #[test]
    fn chain_heights_and_peaks() {
        // A_n/1 is a chain of n vertices.
        let amb = ambient("A5/1");
        let full = amb.full_ideal();
        let mut hs: Vec<_> = full.heights().into_values().collect();
        hs.sort();
        assert_eq!(hs, vec![1, 2, 3, 4, 5]);
        assert_eq!(full.peaks().len(), 1);
        let top = full.peaks().first().unwrap();
        assert_eq!(full.up_set(top).unwrap(), VertexSet::singleton(top));
        assert_eq!(full.minus(top).unwrap().len(), 4);
    }

    #[test]
    fn empty_ideal_has_only_the_point_hole() {
        let amb = ambient("A6/4");
        let holes = amb.empty_ideal().holes();
        assert_eq!(holes.len(), 1);
        assert!(holes[0].is_virtual);
        assert_eq!(holes[0].vertex, amb.minimum());
        assert_eq!(holes[0].color, 4);
    }

    #[test]
    fn full_ideal_has_no_real_holes() {
        for s in ["A6/4", "D6/1", "D6/6", "E6/1", "E7/7"] {
            let amb = ambient(s);
            assert!(amb.full_ideal().holes().iter().all(|h| h.is_virtual), "{s}");
        }
    }

    #[test]
    fn successor_iteration() {
        let amb = ambient("A6/4");
        let v = 3;
        assert_eq!(amb.successor_k(v, 0), Some(v));
        let bottom = amb.minimum();
        assert_eq!(amb.successor_k(bottom, 1), None);
    }

    #[test]
    fn components_of_full_and_empty() {
        let amb = ambient("E6/6");
        assert!(amb.connected_components(VertexSet::empty()).is_empty());
        assert_eq!(amb.connected_components(amb.quiver().all()).len(), 1);
    }

    #[test]
    fn avoiding_and_errors() {
        let amb = ambient("D4/1");
        let full = amb.full_ideal();
        assert_eq!(full.avoiding(VertexSet::empty()).unwrap(), full);
        let some = amb.ideal(VertexSet::singleton(amb.minimum())).unwrap();
        assert!(some.avoiding(VertexSet::singleton(0)).is_err());
        assert!(matches!(some.up_set(0), Err(Error::VertexNotInIdeal(0))));
        assert!(some.minus(0).is_err());
    }

    #[test]
    fn hex_roundtrip_and_parse() {
        assert_eq!(VertexSet::from_bits(0xffff).to_hex(), "0xffff");
        assert_eq!(VertexSet::from_hex("0xFFFF").unwrap().bits(), 0xffff);
        assert_eq!(VertexSet::from_hex("1f").unwrap().bits(), 0x1f);
        assert!(VertexSet::from_hex("0xzz").is_err());
    }

    #[test]
    fn word_resolution_roundtrips() {
        let amb = ambient("E6/1");
        for ideal in amb.enumerate_ideals() {
            let again = amb.ideal_from_word(&ideal.word()).unwrap();
            assert_eq!(again, ideal);
        }
        assert!(amb.ideal_from_word(&WeylWord(vec![1, 1])).is_err());
        assert!(amb.ideal_from_word(&WeylWord(vec![2])).is_err());
    }
}
