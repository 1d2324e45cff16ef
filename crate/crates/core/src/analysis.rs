//! Geometric verdicts read off the quiver of a minuscule Schubert variety:
//! smoothness, Gorenstein property, essential and Gorenstein holes, the
//! irreducible components of the singular locus with their generic
//! singularities, stability under the stabilizer, the Gorenstein locus, and
//! the partition underlying the relative canonical model.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::heap::{ColoredPoset, HoleRecord, Ideal, Quiver, VertexSet};
use crate::rootsys::{RootClass, WeylWord};

pub fn is_smooth(ideal: &Ideal<'_>) -> bool {
    ideal.holes().iter().all(|h| h.is_virtual)
}

pub fn is_gorenstein(ideal: &Ideal<'_>) -> bool {
    peaks_level(ideal.ambient().quiver(), ideal.members())
}

/// All maximal vertices of `set` have the same height inside `set`.
fn peaks_level(q: &Quiver, set: VertexSet) -> bool {
    let h = q.heights_within(set);
    let mut peak_heights = q.maximal_within(set).iter().map(|p| h[p]);
    match peak_heights.next() {
        None => true,
        Some(first) => peak_heights.all(|x| x == first),
    }
}

/// Every hole of the ideal with the essential and Gorenstein flags filled.
pub fn classified_holes(ideal: &Ideal<'_>) -> Vec<HoleRecord> {
    let q = ideal.ambient().quiver();
    let mut holes = ideal.holes();
    let real: VertexSet = holes
        .iter()
        .filter(|h| !h.is_virtual)
        .map(|h| h.vertex)
        .collect();
    for hole in holes.iter_mut().filter(|h| !h.is_virtual) {
        let up = q.above(hole.vertex).intersection(ideal.members());
        let mut others = real;
        others.remove(hole.vertex);
        if up.is_disjoint(others) {
            hole.essential = true;
            hole.gorenstein = Some(peaks_level(q, up));
        }
    }
    holes
}

pub fn essential_holes(ideal: &Ideal<'_>) -> Vec<HoleRecord> {
    classified_holes(ideal)
        .into_iter()
        .filter(|h| h.essential)
        .collect()
}

/// Peaks of `Q_w^i` share one height, heights computed inside `Q_w^i`.
pub fn is_gorenstein_hole(ideal: &Ideal<'_>, hole: &HoleRecord) -> Result<bool> {
    essential_holes(ideal)
        .iter()
        .find(|h| h.vertex == hole.vertex && !hole.is_virtual)
        .and_then(|h| h.gorenstein)
        .ok_or(Error::NotEssential(hole.vertex))
}

/// One irreducible component of the singular locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularComponent {
    pub hole: HoleRecord,
    /// `Q_{w,i}`, the quiver of the component.
    pub component: VertexSet,
    /// `Q_w^i`, the quiver whose B-fixed point carries the generic singularity.
    pub singularity: VertexSet,
}

impl SingularComponent {
    pub fn singularity_shape(&self, ideal: &Ideal<'_>) -> ColoredPoset {
        ideal.ambient().quiver().induced(self.singularity)
    }
}

pub fn singular_components(ideal: &Ideal<'_>) -> Vec<SingularComponent> {
    essential_holes(ideal)
        .into_iter()
        .map(|hole| {
            let singularity = ideal
                .up_set(hole.vertex)
                .expect("essential holes are members");
            SingularComponent {
                hole,
                component: ideal.members().difference(singularity),
                singularity,
            }
        })
        .collect()
}

fn check_nested(big: &Ideal<'_>, small: &Ideal<'_>) -> Result<()> {
    if std::ptr::eq(big.ambient(), small.ambient()) && small.is_subset(big) {
        Ok(())
    } else {
        Err(Error::NotASubset {
            small: small.members().to_hex(),
            big: big.members().to_hex(),
        })
    }
}

/// Whether the generic point of `X(small)` lies in the Gorenstein locus of
/// `X(big)`: `small` contains every essential non-Gorenstein hole of `big`.
pub fn gorenstein_locus_contains(big: &Ideal<'_>, small: &Ideal<'_>) -> Result<bool> {
    check_nested(big, small)?;
    Ok(essential_holes(big)
        .iter()
        .filter(|h| h.gorenstein == Some(false))
        .all(|h| small.contains(h.vertex)))
}

/// Every singular-locus component of `X(big)` that contains `X(small)` has a
/// Gorenstein generic point. Containment is tested on the component quivers.
pub fn has_property_wy(big: &Ideal<'_>, small: &Ideal<'_>) -> Result<bool> {
    check_nested(big, small)?;
    for comp in singular_components(big) {
        if small.members().is_subset(comp.component) && !is_gorenstein_hole(big, &comp.hole)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn hole_colors(ideal: &Ideal<'_>) -> Vec<usize> {
    let mut c: Vec<usize> = ideal.holes().iter().map(|h| h.color).collect();
    c.sort_unstable();
    c.dedup();
    c
}

/// Stability of `X(small)` under the stabilizer of `X(big)`: the hole
/// colors of `small` are among the hole colors of `big`.
pub fn is_stable(big: &Ideal<'_>, small: &Ideal<'_>) -> Result<bool> {
    check_nested(big, small)?;
    let big_colors = hole_colors(big);
    Ok(hole_colors(small).iter().all(|c| big_colors.contains(c)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetReconstruction {
    /// `k_i` per hole vertex of `big`, `-1` meaning no truncation.
    pub offsets: BTreeMap<usize, i64>,
    /// `⋂_i Q_{w, s^{k_i}(i)}`.
    pub reconstructed: VertexSet,
}

/// For every hole `i` of `big` (virtual ones included), `k_i` is one less
/// than the first `k ≥ 0` with `s^k(i)` in `small`, or with `s^k(i)` absent;
/// then intersects the corresponding `Q_{w, s^{k_i}(i)}`.
pub fn offset_reconstruction(big: &Ideal<'_>, small: &Ideal<'_>) -> Result<OffsetReconstruction> {
    check_nested(big, small)?;
    let amb = big.ambient();
    let q = amb.quiver();
    let mut offsets = BTreeMap::new();
    let mut reconstructed = big.members();
    for hole in big.holes() {
        let mut k = 0usize;
        while let Some(x) = amb.successor_k(hole.vertex, k) {
            if small.contains(x) {
                break;
            }
            k += 1;
        }
        let offset = k as i64 - 1;
        offsets.insert(hole.vertex, offset);
        if offset >= 0 {
            let top = amb
                .successor_k(hole.vertex, k - 1)
                .expect("iterate exists below the stopping index");
            reconstructed = reconstructed.difference(q.above(top));
        }
    }
    Ok(OffsetReconstruction {
        offsets,
        reconstructed,
    })
}

/// Offsets `k_i` writing a stable `small` as an intersection of the
/// `Q_{w, s^{k_i}(i)}`; a failed reconstruction is reported as an error.
pub fn stable_hole_offsets(big: &Ideal<'_>, small: &Ideal<'_>) -> Result<BTreeMap<usize, i64>> {
    if !is_stable(big, small)? {
        return Err(Error::NotStable {
            small: small.members().to_hex(),
            big: big.members().to_hex(),
        });
    }
    let rec = offset_reconstruction(big, small)?;
    if rec.reconstructed != small.members() {
        return Err(Error::ReconstructionMismatch {
            expected: small.members().to_hex(),
            got: rec.reconstructed.to_hex(),
        });
    }
    Ok(rec.offsets)
}

/// Peaks grouped by height and the matching partition of the quiver.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CanonicalPartition {
    /// `A_1, …, A_n` by ascending peak height.
    pub peak_classes: Vec<VertexSet>,
    pub class_heights: Vec<usize>,
    /// `Q_w(1), …, Q_w(n)`.
    pub blocks: Vec<VertexSet>,
    /// `m_w(i)`: the minimal vertex of each block.
    pub block_minima: Vec<usize>,
    pub block_words: Vec<WeylWord>,
}

impl CanonicalPartition {
    /// `w(1)⋯w(n)`.
    pub fn concatenated_word(&self) -> WeylWord {
        WeylWord::concat(&self.block_words)
    }

    /// Checks the structural invariants against `ideal`; returns a
    /// description of the first violation.
    pub fn check(&self, ideal: &Ideal<'_>) -> std::result::Result<(), String> {
        let q = ideal.ambient().quiver();
        let mut union = VertexSet::empty();
        for (idx, block) in self.blocks.iter().enumerate() {
            if !union.is_disjoint(*block) {
                return Err(format!("block {} overlaps earlier blocks", idx + 1));
            }
            union = union.union(*block);
            let minima = q.minimal_within(*block);
            if minima.len() != 1 {
                return Err(format!(
                    "block {} has {} minimal vertices",
                    idx + 1,
                    minima.len()
                ));
            }
        }
        if union != ideal.members() {
            return Err("blocks do not cover the ideal".into());
        }
        let total: usize = self.block_words.iter().map(WeylWord::len).sum();
        if total != ideal.len() {
            return Err(format!("block lengths sum to {total}, not {}", ideal.len()));
        }
        let word = self.concatenated_word();
        let len = ideal
            .ambient()
            .root_system()
            .length_by_inversions(&word)
            .map_err(|e| e.to_string())?;
        if len != ideal.len() {
            return Err(format!("concatenated word {word} has length {len}"));
        }
        Ok(())
    }
}

pub fn canonical_partition(ideal: &Ideal<'_>) -> CanonicalPartition {
    let q = ideal.ambient().quiver();
    let members = ideal.members();
    let heights = ideal.height_vector();
    let peaks = ideal.peaks();

    let mut levels: Vec<usize> = peaks.iter().map(|p| heights[p]).collect();
    levels.sort_unstable();
    levels.dedup();
    let peak_classes: Vec<VertexSet> = levels
        .iter()
        .map(|&h| peaks.iter().filter(|&p| heights[p] == h).collect())
        .collect();
    let shadows: Vec<VertexSet> = peak_classes
        .iter()
        .map(|class| {
            class
                .iter()
                .fold(VertexSet::empty(), |acc, p| acc.union(q.below(p)))
                .intersection(members)
        })
        .collect();

    let mut blocks = Vec::with_capacity(shadows.len());
    for (i, shadow) in shadows.iter().enumerate() {
        let higher = shadows[i + 1..]
            .iter()
            .fold(VertexSet::empty(), |acc, s| acc.union(*s));
        blocks.push(shadow.difference(higher));
    }
    let block_minima = blocks
        .iter()
        .map(|b| q.minimal_within(*b).first().unwrap_or(0))
        .collect();
    let block_words = blocks.iter().map(|b| q.word_within(*b)).collect();
    CanonicalPartition {
        peak_classes,
        class_heights: levels,
        blocks,
        block_minima,
        block_words,
    }
}

/// Per canonical block, the largest order ideal of the block avoiding `k`.
pub fn zk_image(ideal: &Ideal<'_>, k: VertexSet) -> Result<Vec<VertexSet>> {
    if !k.is_subset(ideal.members()) {
        return Err(Error::NotASubset {
            small: k.to_hex(),
            big: ideal.members().to_hex(),
        });
    }
    let q = ideal.ambient().quiver();
    Ok(canonical_partition(ideal)
        .blocks
        .into_iter()
        .map(|block| {
            let removed = k
                .intersection(block)
                .iter()
                .fold(VertexSet::empty(), |acc, v| acc.union(q.above(v)));
            block.difference(removed)
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuiverClass {
    Peak,
    Hole,
    Levi,
}

impl QuiverClass {
    /// The root class `w⁻¹(α)` must fall in.
    pub fn expected_root_class(self) -> RootClass {
        match self {
            QuiverClass::Peak => RootClass::NegNonLevi,
            QuiverClass::Hole => RootClass::PosNonLevi,
            QuiverClass::Levi => RootClass::PosLevi,
        }
    }
}

pub fn classify_simple_root_via_quiver(ideal: &Ideal<'_>, node: usize) -> Result<QuiverClass> {
    let amb = ideal.ambient();
    amb.root_system().check_node(node)?;
    let peak = ideal.peaks().iter().any(|p| amb.color(p) == node);
    let hole = ideal.holes().iter().any(|h| h.color == node);
    match (peak, hole) {
        (true, true) => Err(Error::PeakAndHoleColor(node)),
        (true, false) => Ok(QuiverClass::Peak),
        (false, true) => Ok(QuiverClass::Hole),
        (false, false) => Ok(QuiverClass::Levi),
    }
}

/// Root-arithmetic side: the class of `w⁻¹(α_node)` for the ideal's element.
pub fn classify_simple_root_via_roots(ideal: &Ideal<'_>, node: usize) -> Result<RootClass> {
    let amb = ideal.ambient();
    let rs = amb.root_system();
    let image = rs.apply_word(&ideal.word(), &rs.simple_root(node)?)?;
    rs.classify_root(amb.space().node(), &image)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub space: String,
    pub ideal: VertexSet,
    pub dimension: usize,
    pub smooth: bool,
    pub gorenstein: bool,
    pub holes: Vec<HoleRecord>,
    pub singular_components: Vec<SingularComponent>,
    pub non_gorenstein_holes: VertexSet,
    pub canonical_partition: CanonicalPartition,
}

pub fn analyze(ideal: &Ideal<'_>) -> AnalysisReport {
    let holes = classified_holes(ideal);
    let non_gorenstein_holes = holes
        .iter()
        .filter(|h| h.gorenstein == Some(false))
        .map(|h| h.vertex)
        .collect();
    AnalysisReport {
        space: ideal.ambient().space().to_string(),
        ideal: ideal.members(),
        dimension: ideal.len(),
        smooth: holes.iter().all(|h| h.is_virtual),
        gorenstein: is_gorenstein(ideal),
        singular_components: singular_components(ideal),
        non_gorenstein_holes,
        canonical_partition: canonical_partition(ideal),
        holes,
    }
}
