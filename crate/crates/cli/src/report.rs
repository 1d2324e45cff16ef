//! JSON and text documents for `analyze` and `enumerate`. Vertices are
//! numbered from 1 in every document.

use std::fmt::Write as _;

use minuscule::analysis::{analyze, classified_holes, AnalysisReport};
use minuscule::typea::{format_permutation, partition_to_permutation};
use minuscule::{Grid, Ideal, VertexSet};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub space: String,
    pub ideal_mask: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<String>,
    pub dimension: usize,
    pub smooth: bool,
    pub gorenstein: bool,
    pub holes: Vec<HoleDoc>,
    pub singular_components: Vec<ComponentDoc>,
    pub non_gorenstein_holes: Vec<usize>,
    pub canonical_partition: PartitionDoc,
}

#[derive(Debug, Clone, Serialize)]
pub struct HoleDoc {
    pub vertex: usize,
    pub color: usize,
    #[serde(rename = "virtual")]
    pub is_virtual: bool,
    pub essential: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentDoc {
    pub hole_vertex: usize,
    pub ideal_mask: String,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<String>,
    pub singularity: PosetDoc,
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetDoc {
    pub vertices: Vec<usize>,
    pub colors: Vec<usize>,
    pub arrows: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionDoc {
    pub classes: Vec<Vec<usize>>,
    pub blocks: Vec<Vec<usize>>,
    pub minima: Vec<usize>,
}

fn one_based(set: VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

/// Partition and permutation labels when the space is a Grassmannian.
fn type_a_labels(grid: Option<&Grid<'_>>, members: VertexSet) -> (Option<String>, Option<String>) {
    let Some(grid) = grid else {
        return (None, None);
    };
    let Ok(ideal) = grid.ambient().ideal(members) else {
        return (None, None);
    };
    let lambda = grid.ideal_to_partition(&ideal);
    let perm = partition_to_permutation(&grid.shape(), &lambda)
        .ok()
        .map(|w| format_permutation(&w));
    (Some(lambda.to_string()), perm)
}

impl ReportDoc {
    pub fn new(ideal: &Ideal<'_>) -> Self {
        Self::from_report(ideal, &analyze(ideal))
    }

    pub fn from_report(ideal: &Ideal<'_>, r: &AnalysisReport) -> Self {
        let amb = ideal.ambient();
        let grid = Grid::new(amb).ok();
        let (partition, permutation) = type_a_labels(grid.as_ref(), r.ideal);

        let holes = r
            .holes
            .iter()
            .map(|h| HoleDoc {
                vertex: h.vertex + 1,
                color: h.color,
                is_virtual: h.is_virtual,
                essential: h.essential,
                gorenstein: h.gorenstein,
            })
            .collect();

        let singular_components = r
            .singular_components
            .iter()
            .map(|c| {
                let (partition, permutation) = type_a_labels(grid.as_ref(), c.component);
                let shape = c.singularity_shape(ideal);
                ComponentDoc {
                    hole_vertex: c.hole.vertex + 1,
                    ideal_mask: c.component.to_hex(),
                    dimension: c.component.len(),
                    partition,
                    permutation,
                    singularity: PosetDoc {
                        vertices: shape.vertices.iter().map(|v| v + 1).collect(),
                        colors: shape.colors,
                        arrows: shape.arrows.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
                    },
                }
            })
            .collect();

        let cp = &r.canonical_partition;
        ReportDoc {
            space: r.space.clone(),
            ideal_mask: r.ideal.to_hex(),
            partition,
            permutation,
            dimension: r.dimension,
            smooth: r.smooth,
            gorenstein: r.gorenstein,
            holes,
            singular_components,
            non_gorenstein_holes: one_based(r.non_gorenstein_holes),
            canonical_partition: PartitionDoc {
                classes: cp.peak_classes.iter().map(|c| one_based(*c)).collect(),
                blocks: cp.blocks.iter().map(|b| one_based(*b)).collect(),
                minima: cp.block_minima.iter().map(|m| m + 1).collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "space        {}", self.space);
        let _ = writeln!(s, "ideal        {}", self.ideal_mask);
        if let Some(p) = &self.partition {
            let _ = writeln!(s, "partition    ({p})");
        }
        if let Some(p) = &self.permutation {
            let _ = writeln!(s, "permutation  {p}");
        }
        let _ = writeln!(s, "dimension    {}", self.dimension);
        let _ = writeln!(s, "smooth       {}", self.smooth);
        let _ = writeln!(s, "gorenstein   {}", self.gorenstein);
        for h in &self.holes {
            let kind = match (h.is_virtual, h.essential, h.gorenstein) {
                (true, _, _) => "virtual",
                (false, false, _) => "inessential",
                (false, true, Some(true)) => "essential, Gorenstein",
                (false, true, _) => "essential, not Gorenstein",
            };
            let _ = writeln!(s, "hole         {} (color {}): {kind}", h.vertex, h.color);
        }
        for c in &self.singular_components {
            let _ = write!(
                s,
                "component    hole {}: ideal {}, dimension {}",
                c.hole_vertex, c.ideal_mask, c.dimension
            );
            if let Some(p) = &c.partition {
                let _ = write!(s, ", partition ({p})");
            }
            if let Some(p) = &c.permutation {
                let _ = write!(s, ", permutation {p}");
            }
            let _ = writeln!(s, ", singularity on {:?}", c.singularity.vertices);
        }
        for (i, b) in self.canonical_partition.blocks.iter().enumerate() {
            let _ = writeln!(
                s,
                "block {}      {:?}, minimum {}",
                i + 1,
                b,
                self.canonical_partition.minima[i]
            );
        }
        s
    }
}

/// One `enumerate` record.
#[derive(Debug, Clone, Serialize)]
pub struct SummaryDoc {
    pub ideal_mask: String,
    pub dimension: usize,
    pub smooth: bool,
    pub gorenstein: bool,
    pub essential_holes: usize,
    pub non_gorenstein_holes: usize,
}

impl SummaryDoc {
    pub fn new(ideal: &Ideal<'_>) -> Self {
        let holes = classified_holes(ideal);
        SummaryDoc {
            ideal_mask: ideal.members().to_hex(),
            dimension: ideal.len(),
            smooth: holes.iter().all(|h| h.is_virtual),
            gorenstein: minuscule::analysis::is_gorenstein(ideal),
            essential_holes: holes.iter().filter(|h| h.essential).count(),
            non_gorenstein_holes: holes.iter().filter(|h| h.gorenstein == Some(false)).count(),
        }
    }

    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.ideal_mask,
            self.dimension,
            self.smooth,
            self.gorenstein,
            self.essential_holes,
            self.non_gorenstein_holes
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use minuscule::{AmbientQuiver, Partition};

    #[test]
    fn example_report_fields() {
        let amb = AmbientQuiver::build("A6/4".parse().unwrap()).unwrap();
        let grid = Grid::new(&amb).unwrap();
        let ideal = grid
            .partition_to_ideal(&Partition::new(vec![3, 2, 1, 1]))
            .unwrap();
        let doc = ReportDoc::new(&ideal);
        assert_eq!(doc.partition.as_deref(), Some("3,2,1,1"));
        assert_eq!(doc.permutation.as_deref(), Some("2357146"));
        assert_eq!(doc.non_gorenstein_holes, vec![grid.vertex(2, 1) + 1]);
        let perms: Vec<_> = doc
            .singular_components
            .iter()
            .map(|c| c.permutation.clone().unwrap())
            .collect();
        assert!(perms.contains(&"1237456".to_string()));
        assert!(perms.contains(&"2345167".to_string()));

        let json = doc.to_json();
        let keys = [
            "\"space\"",
            "\"ideal_mask\"",
            "\"partition\"",
            "\"permutation\"",
            "\"dimension\"",
            "\"smooth\"",
            "\"gorenstein\"",
            "\"holes\"",
            "\"singular_components\"",
            "\"non_gorenstein_holes\"",
            "\"canonical_partition\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn non_type_a_report_has_no_labels() {
        let amb = AmbientQuiver::build("E6/1".parse().unwrap()).unwrap();
        let doc = ReportDoc::new(&amb.full_ideal());
        assert!(doc.partition.is_none() && doc.permutation.is_none());
        assert!(doc.smooth && doc.gorenstein);
        assert!(!doc.to_json().contains("\"partition\""));
    }

    #[test]
    fn summary_line_columns() {
        let amb = AmbientQuiver::build("A1/1".parse().unwrap()).unwrap();
        let line = SummaryDoc::new(&amb.full_ideal()).to_line();
        assert_eq!(line, "0x1\t1\ttrue\ttrue\t0\t0");
    }
}
