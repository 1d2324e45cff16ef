//! Layered drawings of a Schubert quiver: one row per height, one column
//! per Dynkin node. Non-virtual holes are parenthesized (ASCII) or circled
//! (SVG) and peaks are starred (ASCII) or shaded (SVG).

use std::fmt::Write as _;

use minuscule::{DynkinType, Family, Ideal};

const CELL: usize = 6;
const STEP: usize = 60;
const MARGIN: usize = 40;

/// Left-to-right column of each node. The E branch node 2 sits right of
/// node 4, which it hangs from.
pub fn column_order(dynkin: DynkinType) -> Vec<usize> {
    match dynkin.family() {
        Family::A | Family::D => (1..=dynkin.rank()).collect(),
        Family::E => {
            let mut order = vec![1, 3, 4, 2];
            order.extend(5..=dynkin.rank());
            order
        }
    }
}

struct Layout {
    title: String,
    columns: Vec<usize>,
    /// `(vertex, color, height, is_peak, is_hole)`, vertices 1-based.
    cells: Vec<(usize, usize, usize, bool, bool)>,
    max_height: usize,
    arrows: Vec<(usize, usize)>,
    virtual_holes: Vec<(usize, usize)>,
}

impl Layout {
    fn new(ideal: &Ideal<'_>) -> Self {
        let amb = ideal.ambient();
        let q = amb.quiver();
        let heights = ideal.height_vector();
        let peaks = ideal.peaks();
        let holes = ideal.holes();
        let cells: Vec<_> = ideal
            .members()
            .iter()
            .map(|v| {
                let hole = holes.iter().any(|h| h.vertex == v && !h.is_virtual);
                (v + 1, q.color(v), heights[v], peaks.contains(v), hole)
            })
            .collect();
        Layout {
            title: format!(
                "{}  ideal {}  dimension {}",
                amb.space(),
                ideal.members().to_hex(),
                ideal.len()
            ),
            columns: column_order(amb.space().dynkin()),
            max_height: cells.iter().map(|c| c.2).max().unwrap_or(0),
            cells,
            arrows: q
                .arrows()
                .iter()
                .filter(|(a, b)| ideal.contains(*a) && ideal.contains(*b))
                .map(|&(a, b)| (a + 1, b + 1))
                .collect(),
            virtual_holes: holes
                .iter()
                .filter(|h| h.is_virtual)
                .map(|h| (h.vertex + 1, h.color))
                .collect(),
        }
    }

    fn column(&self, color: usize) -> usize {
        self.columns
            .iter()
            .position(|&c| c == color)
            .expect("color is a node")
    }
}

pub fn ascii(ideal: &Ideal<'_>) -> String {
    let l = Layout::new(ideal);
    let mut s = String::new();
    let _ = writeln!(s, "{}", l.title);
    let header: String = l.columns.iter().map(|c| format!("{c:^CELL$}")).collect();
    let _ = writeln!(s, "{:>5} |{}", "node", header.trim_end());
    let _ = writeln!(s, "{:->5}-+{}", "", "-".repeat(CELL * l.columns.len()));
    if l.cells.is_empty() {
        let _ = writeln!(s, "{:>5} |", "");
    }
    for h in (1..=l.max_height).rev() {
        let mut row = vec![String::new(); l.columns.len()];
        for &(v, color, height, peak, hole) in &l.cells {
            if height == h {
                row[l.column(color)] = match (hole, peak) {
                    (true, _) => format!("({v})"),
                    (false, true) => format!("{v}*"),
                    (false, false) => v.to_string(),
                };
            }
        }
        let _ = write!(s, "{h:>5} |");
        for cell in row {
            let _ = write!(s, "{cell:^CELL$}");
        }
        let line = s.trim_end_matches(' ').len();
        s.truncate(line);
        s.push('\n');
    }
    let list = |items: Vec<String>| {
        if items.is_empty() {
            "none".to_string()
        } else {
            items.join(" ")
        }
    };
    let peaks = l
        .cells
        .iter()
        .filter(|c| c.3)
        .map(|c| c.0.to_string())
        .collect();
    let holes = l
        .cells
        .iter()
        .filter(|c| c.4)
        .map(|c| format!("({})", c.0))
        .collect();
    let virtuals = l
        .virtual_holes
        .iter()
        .map(|(v, c)| format!("({v}):{c}"))
        .collect();
    let arrows = l.arrows.iter().map(|(a, b)| format!("{a}->{b}")).collect();
    let _ = writeln!(s, "peaks: {}", list(peaks));
    let _ = writeln!(s, "holes: {}", list(holes));
    let _ = writeln!(s, "virtual holes: {}", list(virtuals));
    let _ = writeln!(s, "arrows: {}", list(arrows));
    s
}

pub fn svg(ideal: &Ideal<'_>) -> String {
    let l = Layout::new(ideal);
    let width = 2 * MARGIN + STEP * l.columns.len();
    let height = 3 * MARGIN + STEP * l.max_height.max(1);
    let pos = |color: usize, h: usize| {
        let x = MARGIN + STEP * l.column(color) + STEP / 2;
        let y = 2 * MARGIN + STEP * (l.max_height - h) + STEP / 2;
        (x, y)
    };
    let at = |v: usize| {
        let c = l
            .cells
            .iter()
            .find(|c| c.0 == v)
            .expect("arrow ends are members");
        pos(c.1, c.2)
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"  <text x="{MARGIN}" y="{}">{}</text>"#,
        MARGIN / 2 + 6,
        l.title
    );
    for (i, c) in l.columns.iter().enumerate() {
        let x = MARGIN + STEP * i + STEP / 2;
        let _ = writeln!(
            s,
            r##"  <text x="{x}" y="{}" text-anchor="middle" fill="#888">{c}</text>"##,
            MARGIN + 10
        );
    }
    for &(a, b) in &l.arrows {
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let _ = writeln!(
            s,
            r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>"#
        );
    }
    for &(v, color, h, peak, hole) in &l.cells {
        let (x, y) = pos(color, h);
        let fill = if peak { "#d0d0d0" } else { "white" };
        let _ = writeln!(
            s,
            r#"  <circle cx="{x}" cy="{y}" r="14" fill="{fill}" stroke="black"/>"#
        );
        if hole {
            let _ = writeln!(
                s,
                r#"  <circle cx="{x}" cy="{y}" r="19" fill="none" stroke="red" stroke-width="2"/>"#
            );
        }
        let _ = writeln!(
            s,
            r#"  <text x="{x}" y="{}" text-anchor="middle">{v}</text>"#,
            y + 4
        );
    }
    if !l.virtual_holes.is_empty() {
        let items: Vec<String> = l
            .virtual_holes
            .iter()
            .map(|(v, c)| format!("{v} (color {c})"))
            .collect();
        let _ = writeln!(
            s,
            r#"  <text x="{MARGIN}" y="{}">virtual holes: {}</text>"#,
            height - MARGIN / 2,
            items.join(", ")
        );
    }
    s.push_str("</svg>\n");
    s
}
