//! Exhaustive sweeps checking the quiver verdicts against root arithmetic,
//! closed-form type A oracles and each other.

use std::fmt;
use std::str::FromStr;

use crate::analysis::{
    canonical_partition, classified_holes, classify_simple_root_via_quiver,
    classify_simple_root_via_roots, essential_holes, gorenstein_locus_contains, has_property_wy,
    is_gorenstein, is_smooth, is_stable, offset_reconstruction, singular_components,
};
use crate::error::{Error, Result};
use crate::heap::{AmbientQuiver, Ideal, MinusculeSpace, Quiver, VertexSet};
use crate::rootsys::{DynkinType, Family};
use crate::typea::{
    oracle_gorenstein, oracle_smooth, partition_to_permutation, word_to_permutation, Grid,
};

/// Failures kept verbatim per report; the rest are only counted.
const KEPT_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Heap,
    Imrac,
    GorensteinLocus,
    Stability,
    Partition,
    TypeaOracles,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Heap,
        Suite::Imrac,
        Suite::GorensteinLocus,
        Suite::Stability,
        Suite::Partition,
        Suite::TypeaOracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Heap => "heap",
            Suite::Imrac => "imrac",
            Suite::GorensteinLocus => "gorenstein-locus",
            Suite::Stability => "stability",
            Suite::Partition => "partition",
            Suite::TypeaOracles => "typea-oracles",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown suite {s:?}; expected one of heap, imrac, gorenstein-locus, \
                     stability, partition, typea-oracles, all"
                ))
            })
    }
}

/// Rank bounds for the built-in list of spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_rank_a: usize,
    pub max_rank_d: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_rank_a: 7,
            max_rank_d: 6,
        }
    }
}

impl SweepBounds {
    pub const ENV_VAR: &'static str = "MINUSCULE_MAX_RANK";

    /// Defaults, with both A and D bounds replaced by `MINUSCULE_MAX_RANK`
    /// when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) => {
                let r: usize = v.trim().parse().map_err(|_| {
                    Error::Parse(format!(
                        "{} must be a positive integer, got {v:?}",
                        Self::ENV_VAR
                    ))
                })?;
                Ok(SweepBounds {
                    max_rank_a: r,
                    max_rank_d: r,
                })
            }
            Err(_) => Ok(SweepBounds::default()),
        }
    }

    pub fn spaces(&self) -> Vec<MinusculeSpace> {
        let mut out = Vec::new();
        let mut push = |family, rank| {
            let dynkin = DynkinType::new(family, rank).expect("admissible by construction");
            for node in dynkin.minuscule_nodes() {
                out.push(MinusculeSpace::new(dynkin, node).expect("minuscule by construction"));
            }
        };
        for rank in 1..=self.max_rank_a {
            push(Family::A, rank);
        }
        for rank in 4..=self.max_rank_d {
            push(Family::D, rank);
        }
        push(Family::E, 6);
        push(Family::E, 7);
        out
    }
}

/// One violated check with enough data to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub big: Option<VertexSet>,
    pub small: Option<VertexSet>,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(b) = self.big {
            write!(f, "ideal={} ", b.to_hex())?;
        }
        if let Some(s) = self.small {
            write!(f, "small={} ", s.to_hex())?;
        }
        f.write_str(&self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub space: String,
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Set when the suite does not apply to the space.
    pub skipped: Option<String>,
}

impl SuiteReport {
    fn new(suite: Suite, space: &MinusculeSpace) -> Self {
        SuiteReport {
            suite,
            space: space.to_string(),
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            skipped: None,
        }
    }

    fn check(
        &mut self,
        ok: bool,
        big: Option<VertexSet>,
        small: Option<VertexSet>,
        msg: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if !ok {
            self.fail(big, small, msg());
        }
    }

    fn fail(&mut self, big: Option<VertexSet>, small: Option<VertexSet>, message: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(Failure {
                big,
                small,
                message,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub reports: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(SuiteReport::passed)
    }

    pub fn checked(&self) -> u64 {
        self.reports.iter().map(|r| r.checked).sum()
    }

    pub fn failure_count(&self) -> u64 {
        self.reports.iter().map(|r| r.failure_count).sum()
    }

    pub fn for_suite(&self, suite: Suite) -> impl Iterator<Item = &SuiteReport> {
        self.reports.iter().filter(move |r| r.suite == suite)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            let status = match (&r.skipped, r.passed()) {
                (Some(_), _) => "skip",
                (None, true) => "ok",
                (None, false) => "FAIL",
            };
            write!(
                f,
                "{status:<4} {:<16} {:<6} checked {:>8}",
                r.suite.name(),
                r.space,
                r.checked
            )?;
            if let Some(reason) = &r.skipped {
                write!(f, "  ({reason})")?;
            }
            if !r.passed() {
                write!(f, "  failures {}", r.failure_count)?;
            }
            writeln!(f)?;
            for fail in &r.failures {
                writeln!(
                    f,
                    "     reproduce: space={} suite={} {fail}",
                    r.space, r.suite
                )?;
            }
        }
        writeln!(
            f,
            "total: {} checks, {} failures: {}",
            self.checked(),
            self.failure_count(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Runs `suites` on every space, in the given order.
pub fn run(spaces: &[MinusculeSpace], suites: &[Suite]) -> VerifyReport {
    let mut reports = Vec::new();
    for space in spaces {
        match AmbientQuiver::build(space.clone()) {
            Ok(amb) => {
                for &suite in suites {
                    reports.push(run_suite(&amb, suite));
                }
            }
            Err(e) => {
                for &suite in suites {
                    let mut r = SuiteReport::new(suite, space);
                    r.fail(None, None, format!("ambient quiver: {e}"));
                    reports.push(r);
                }
            }
        }
    }
    VerifyReport { reports }
}

pub fn run_suite(amb: &AmbientQuiver, suite: Suite) -> SuiteReport {
    let mut r = SuiteReport::new(suite, amb.space());
    let ideals: Vec<Ideal<'_>> = amb.enumerate_ideals().collect();
    match suite {
        Suite::Heap => heap_suite(amb, &ideals, &mut r),
        Suite::Imrac => imrac_suite(amb, &ideals, &mut r),
        Suite::GorensteinLocus => gorenstein_locus_suite(&ideals, &mut r),
        Suite::Stability => stability_suite(&ideals, &mut r),
        Suite::Partition => partition_suite(&ideals, &mut r),
        Suite::TypeaOracles => typea_suite(amb, &ideals, &mut r),
    }
    r
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Closed-form number of Schubert varieties of the space.
pub fn expected_ideal_count(space: &MinusculeSpace) -> usize {
    let rank = space.dynkin().rank();
    match space.dynkin().family() {
        Family::A => binomial(rank + 1, space.node()),
        Family::D if space.node() == 1 => 2 * rank,
        Family::D => 1 << (rank - 1),
        Family::E if rank == 6 => 27,
        Family::E => 56,
    }
}

fn heap_suite(amb: &AmbientQuiver, ideals: &[Ideal<'_>], r: &mut SuiteReport) {
    let rs = amb.root_system();
    let q = amb.quiver();
    let node = amb.space().node();

    let expected = expected_ideal_count(amb.space());
    r.check(ideals.len() == amb.orbit_size(), None, None, || {
        format!(
            "{} ideals but weight orbit has {}",
            ideals.len(),
            amb.orbit_size()
        )
    });
    r.check(ideals.len() == expected, None, None, || {
        format!("{} ideals, closed form gives {expected}", ideals.len())
    });
    r.check(
        amb.connected_components(q.all()).len() == 1,
        None,
        None,
        || "ambient quiver is disconnected".into(),
    );
    for v in 0..q.len() {
        let same: Vec<usize> = (0..q.len()).filter(|&u| q.color(u) == q.color(v)).collect();
        let chain = same.iter().all(|&u| q.precedes(u, v) || q.precedes(v, u));
        r.check(chain, None, None, || {
            format!("color class of vertex {} is not a chain", v + 1)
        });
        let steps = q.successor(v).is_none_or(|s| {
            q.predecessor(s) == Some(v)
                && q.precedes(s, v)
                && same
                    .iter()
                    .all(|&u| u == v || u == s || !(q.precedes(s, u) && q.precedes(u, v)))
        });
        r.check(steps, None, None, || {
            format!("successor of vertex {} skips its color chain", v + 1)
        });
    }

    for ideal in ideals {
        let m = Some(ideal.members());
        r.check(
            q.check_down_closed(ideal.members()).is_ok(),
            m,
            None,
            || "not down-closed".into(),
        );

        let word = ideal.word();
        r.check(word.len() == ideal.len(), m, None, || {
            format!("word {word} has wrong length")
        });
        let len = rs.length_by_inversions(&word);
        r.check(len.as_ref().ok() == Some(&ideal.len()), m, None, || {
            format!("word {word} is not reduced ({len:?})")
        });

        let rev = word.reversed();
        for t in (1..=rs.rank()).filter(|&t| t != node) {
            let image = rs
                .simple_root(t)
                .and_then(|a| rs.apply_word(&rev, &a))
                .map(|v| v.is_positive());
            r.check(image == Ok(true), m, None, || {
                format!("w(alpha_{t}) is not positive for word {word}")
            });
        }

        match Quiver::from_word(rs, &word) {
            Ok(own) => {
                let order = q.linear_extension_within(ideal.members());
                r.check(isomorphic(q, &order, &own), m, None, || {
                    format!("quiver of word {word} differs from the induced subquiver")
                });
            }
            Err(e) => r.fail(m, None, format!("quiver of word {word}: {e}")),
        }

        let back = amb.ideal_from_word(&word).map(|i| i.members());
        r.check(back.as_ref().ok() == m.as_ref(), m, None, || {
            format!("word {word} resolves to {back:?}")
        });

        let peaks = ideal.peaks();
        r.check(ideal.is_empty() || !peaks.is_empty(), m, None, || {
            "no peaks".into()
        });
        let comparable = peaks
            .iter()
            .any(|a| peaks.iter().any(|b| a != b && q.precedes(a, b)));
        r.check(!comparable, m, None, || "comparable peaks".into());

        let h = ideal.height_vector();
        let rec = ideal.members().iter().all(|v| {
            let child_max = q
                .children(v)
                .intersection(ideal.members())
                .iter()
                .map(|c| h[c])
                .max()
                .unwrap_or(0);
            h[v] == child_max + 1
        });
        r.check(rec, m, None, || "height recursion fails".into());
    }
}

/// Whether `own` (vertices `0..`) matches `ambient` on the vertices `order`
/// placed in the same positions, colors and order relation included.
fn isomorphic(ambient: &Quiver, order: &[usize], own: &Quiver) -> bool {
    own.len() == order.len()
        && (0..own.len()).all(|a| {
            own.color(a) == ambient.color(order[a])
                && (0..own.len())
                    .all(|b| own.precedes(a, b) == ambient.precedes(order[a], order[b]))
        })
}

fn imrac_suite(amb: &AmbientQuiver, ideals: &[Ideal<'_>], r: &mut SuiteReport) {
    let rank = amb.root_system().rank();
    for ideal in ideals {
        let m = Some(ideal.members());
        for node in 1..=rank {
            let quiver = classify_simple_root_via_quiver(ideal, node);
            let roots = classify_simple_root_via_roots(ideal, node);
            let ok = matches!((&quiver, &roots), (Ok(c), Ok(rc)) if c.expected_root_class() == *rc);
            r.check(ok, m, None, || {
                format!("node {node}: quiver {quiver:?}, roots {roots:?}")
            });
        }
    }
}

fn nested_pairs<'i, 'a>(
    ideals: &'i [Ideal<'a>],
) -> impl Iterator<Item = (&'i Ideal<'a>, &'i Ideal<'a>)> {
    ideals.iter().flat_map(move |big| {
        ideals
            .iter()
            .filter(|s| s.is_subset(big))
            .map(move |s| (big, s))
    })
}

fn gorenstein_locus_suite(ideals: &[Ideal<'_>], r: &mut SuiteReport) {
    for ideal in ideals {
        let m = Some(ideal.members());
        let smooth = is_smooth(ideal);
        let gor = is_gorenstein(ideal);
        let holes = classified_holes(ideal);
        let real = holes.iter().filter(|h| !h.is_virtual).count();
        let essential = holes.iter().filter(|h| h.essential).count();
        r.check(!smooth || gor, m, None, || {
            "smooth but not Gorenstein".into()
        });
        r.check(
            smooth == (real == 0) && smooth == (essential == 0),
            m,
            None,
            || format!("smooth={smooth} with {real} holes, {essential} essential"),
        );
    }

    for big in ideals {
        let b = Some(big.members());
        let smalls: Vec<&Ideal<'_>> = ideals.iter().filter(|s| s.is_subset(big)).collect();
        let mut verdicts = Vec::with_capacity(smalls.len());
        for small in &smalls {
            let locus = gorenstein_locus_contains(big, small);
            let wy = has_property_wy(big, small);
            let s = Some(small.members());
            r.check(
                matches!((&locus, &wy), (Ok(x), Ok(y)) if x == y),
                b,
                s,
                || format!("locus {locus:?} but WY {wy:?}"),
            );
            verdicts.push(locus.unwrap_or(false));
        }
        for (i, s1) in smalls.iter().enumerate() {
            for (j, s2) in smalls.iter().enumerate() {
                if verdicts[i] && s1.is_subset(s2) {
                    r.check(verdicts[j], b, Some(s2.members()), || {
                        format!("locus verdict not monotone above {}", s1.members().to_hex())
                    });
                }
            }
        }
    }
}

fn stability_suite(ideals: &[Ideal<'_>], r: &mut SuiteReport) {
    for (big, small) in nested_pairs(ideals) {
        let (b, s) = (Some(big.members()), Some(small.members()));
        let stable = is_stable(big, small);
        let rec = offset_reconstruction(big, small).map(|o| o.reconstructed == small.members());
        r.check(
            matches!((&stable, &rec), (Ok(x), Ok(y)) if x == y),
            b,
            s,
            || format!("stable {stable:?} but reconstruction {rec:?}"),
        );
    }

    for ideal in ideals {
        let m = Some(ideal.members());
        let comps = singular_components(ideal);
        for c in &comps {
            let stable = ideal
                .ambient()
                .ideal(c.component)
                .and_then(|ci| is_stable(ideal, &ci));
            r.check(stable == Ok(true), m, Some(c.component), || {
                format!(
                    "component of hole {} is not stable ({stable:?})",
                    c.hole.vertex + 1
                )
            });
        }
        for (i, a) in comps.iter().enumerate() {
            for c in &comps[i + 1..] {
                r.check(
                    !a.component.is_subset(c.component) && !c.component.is_subset(a.component),
                    m,
                    None,
                    || {
                        format!(
                            "components {} and {} are nested",
                            a.component.to_hex(),
                            c.component.to_hex()
                        )
                    },
                );
            }
        }
        let essential = essential_holes(ideal).len();
        r.check(comps.len() == essential, m, None, || {
            "component count".into()
        });
    }
}

fn partition_suite(ideals: &[Ideal<'_>], r: &mut SuiteReport) {
    for ideal in ideals {
        let cp = canonical_partition(ideal);
        let check = cp.check(ideal);
        r.check(check.is_ok(), Some(ideal.members()), None, || {
            check.clone().unwrap_err()
        });
    }

    for (big, small) in nested_pairs(ideals) {
        let stable = is_stable(big, small).unwrap_or(false);
        let wy = has_property_wy(big, small).unwrap_or(false);
        if !(stable && wy) {
            continue;
        }
        let blocks = canonical_partition(big).blocks;
        let rest = big.members().difference(small.members());
        for comp in big.ambient().connected_components(rest) {
            let hits = blocks.iter().filter(|b| comp.is_subset(**b)).count();
            r.check(
                hits == 1,
                Some(big.members()),
                Some(small.members()),
                || format!("component {} lies in {hits} blocks", comp.to_hex()),
            );
        }
    }
}

fn typea_suite(amb: &AmbientQuiver, ideals: &[Ideal<'_>], r: &mut SuiteReport) {
    let grid = match Grid::new(amb) {
        Ok(g) => g,
        Err(Error::NotTypeA(_)) => {
            r.skipped = Some("not type A".into());
            return;
        }
        Err(e) => {
            r.fail(None, None, format!("grid model: {e}"));
            return;
        }
    };
    let shape = grid.shape();
    let partitions = shape.partitions();
    r.check(partitions.len() == ideals.len(), None, None, || {
        format!(
            "{} partitions but {} ideals",
            partitions.len(),
            ideals.len()
        )
    });
    for lambda in &partitions {
        let ideal = match grid.partition_to_ideal(lambda) {
            Ok(i) => i,
            Err(e) => {
                r.fail(None, None, format!("partition {lambda}: {e}"));
                continue;
            }
        };
        let m = Some(ideal.members());
        r.check(is_smooth(&ideal) == oracle_smooth(lambda), m, None, || {
            format!("partition {lambda}: smoothness disagrees with rectangle test")
        });
        r.check(
            is_gorenstein(&ideal) == oracle_gorenstein(lambda),
            m,
            None,
            || format!("partition {lambda}: Gorenstein verdict disagrees with corner test"),
        );
        let h = ideal.height_vector();
        let heights_ok = ideal.members().iter().all(|v| {
            let (i, j) = grid.box_of(v);
            h[v] == i + j - 1
        });
        r.check(heights_ok, m, None, || {
            format!("partition {lambda}: heights differ from i+j-1")
        });
        let expected = partition_to_permutation(&shape, lambda);
        let acted = word_to_permutation(&ideal.word(), shape.n());
        r.check(expected.as_ref().ok() == Some(&acted), m, None, || {
            format!("partition {lambda}: word acts as {acted:?}, expected {expected:?}")
        });
        r.check(grid.ideal_to_partition(&ideal) == *lambda, m, None, || {
            format!("partition {lambda} does not round-trip")
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(s: &str) -> MinusculeSpace {
        s.parse().unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_list("all").unwrap().len(), 6);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn default_space_list() {
        let spaces = SweepBounds::default().spaces();
        let names: Vec<String> = spaces.iter().map(|s| s.to_string()).collect();
        assert_eq!(names.len(), 28 + 9 + 3);
        assert!(names.contains(&"A7/4".to_string()));
        assert!(names.contains(&"D6/5".to_string()));
        assert!(!names.contains(&"D6/2".to_string()));
        assert_eq!(names.last().unwrap(), "E7/7");
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(expected_ideal_count(&space("A6/4")), 35);
        assert_eq!(expected_ideal_count(&space("D5/1")), 10);
        assert_eq!(expected_ideal_count(&space("D5/5")), 16);
        assert_eq!(expected_ideal_count(&space("E6/6")), 27);
        assert_eq!(expected_ideal_count(&space("E7/7")), 56);
    }

    #[test]
    fn imrac_count_on_a6_4() {
        let report = run(&[space("A6/4")], &[Suite::Imrac]);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checked(), 210);
    }

    #[test]
    fn all_suites_on_small_spaces() {
        let spaces = [
            space("A1/1"),
            space("A6/4"),
            space("D4/4"),
            space("D5/1"),
            space("E6/1"),
        ];
        let report = run(&spaces, &Suite::ALL);
        assert!(report.passed(), "{report}");
        let skipped = report
            .reports
            .iter()
            .filter(|r| r.skipped.is_some())
            .count();
        assert_eq!(skipped, 3);
    }

    #[test]
    fn failure_display_is_a_reproducer() {
        let mut r = SuiteReport::new(Suite::Stability, &space("A2/1"));
        r.check(
            false,
            Some(VertexSet::from_bits(3)),
            Some(VertexSet::from_bits(1)),
            || "boom".into(),
        );
        let text = VerifyReport { reports: vec![r] }.to_string();
        assert!(text.contains("reproduce: space=A2/1 suite=stability ideal=0x3 small=0x1 boom"));
        assert!(text.ends_with("FAIL\n"));
    }
}
