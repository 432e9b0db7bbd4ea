//! Heatmap of the best lower bound over an `(n, d)` rectangle.

use std::fmt::Write as _;

use crate::sweep::GridCell;

/// Fill colours for best lower bounds 0..=12 (larger values use the last).
pub const PALETTE: [&str; 13] = [
    "#f7f7f7", "#fde725", "#b5de2b", "#6ece58", "#35b779", "#1f9e89", "#26828e", "#31688e",
    "#3e4989", "#482878", "#440154", "#2d0a3e", "#14051c",
];

const LEFT: u64 = 70;
const TOP: u64 = 40;
const BOTTOM: u64 = 60;
const LEGEND: u64 = 150;

fn bucket(v: i64) -> usize {
    v.clamp(0, PALETTE.len() as i64 - 1) as usize
}

fn tick_step(span: u64) -> u64 {
    [1u64, 2, 5, 10, 20, 25, 50, 100, 200, 250, 500, 1000, 2000, 5000, 10_000]
        .into_iter()
        .find(|s| span / s <= 10)
        .unwrap_or(span.div_ceil(10).max(1))
}

/// `d` runs left to right, `n` bottom to top; one `rect.cell` per grid cell.
pub fn render_svg(cells: &[GridCell], n_min: u64, n_max: u64, d_min: u64, d_max: u64) -> String {
    let cols = d_max - d_min + 1;
    let rows = n_max - n_min + 1;
    let cell = (960 / cols.max(rows)).clamp(2, 24);
    let plot_w = cols * cell;
    let plot_h = rows * cell;
    let width = LEFT + plot_w + LEGEND;
    let height = (TOP + plot_h + BOTTOM).max(TOP + 16 * PALETTE.len() as u64 + 60);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{LEFT}" y="20" font-size="13">Best certified lower bound on fib.gen(X_{{n,d}})</text>"#
    );

    let _ = writeln!(s, r#"<g id="cells" shape-rendering="crispEdges">"#);
    for c in cells {
        let x = LEFT + (c.d - d_min) * cell;
        let y = TOP + (n_max - c.n) * cell;
        let _ = writeln!(
            s,
            r#"<rect class="cell" x="{x}" y="{y}" width="{cell}" height="{cell}" fill="{}"/>"#,
            PALETTE[bucket(c.best_lower)]
        );
    }
    let _ = writeln!(s, "</g>");

    // axes
    let _ = writeln!(
        s,
        r##"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#333"/>"##
    );
    let step = tick_step(cols);
    let first = d_min.div_ceil(step) * step;
    for d in (first..=d_max).step_by(step as usize) {
        let x = LEFT + (d - d_min) * cell + cell / 2;
        let y = TOP + plot_h;
        let _ = writeln!(
            s,
            r##"<line x1="{x}" y1="{y}" x2="{x}" y2="{}" stroke="#333"/><text x="{x}" y="{}" text-anchor="middle">{d}</text>"##,
            y + 4,
            y + 16
        );
    }
    let step = tick_step(rows);
    let first = n_min.div_ceil(step) * step;
    for n in (first..=n_max).step_by(step as usize) {
        let y = TOP + (n_max - n) * cell + cell / 2;
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{y}" x2="{LEFT}" y2="{y}" stroke="#333"/><text x="{}" y="{}" text-anchor="end">{n}</text>"##,
            LEFT - 4,
            LEFT - 6,
            y + 4
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">d (degree)</text>"#,
        LEFT + plot_w / 2,
        TOP + plot_h + 40
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{}" text-anchor="middle" transform="rotate(-90 20 {})">n (dimension)</text>"#,
        TOP + plot_h / 2,
        TOP + plot_h / 2
    );

    // legend
    let lx = LEFT + plot_w + 20;
    let _ = writeln!(s, r#"<g id="legend"><text x="{lx}" y="{}">fib.gen &gt;=</text>"#, TOP - 6);
    for (i, color) in PALETTE.iter().enumerate() {
        let y = TOP + 16 * i as u64;
        let label = if i + 1 == PALETTE.len() { format!("{i}+") } else { i.to_string() };
        let _ = writeln!(
            s,
            r##"<rect class="legend" x="{lx}" y="{y}" width="12" height="12" fill="{color}" stroke="#999"/><text x="{}" y="{}">{label}</text>"##,
            lx + 18,
            y + 10
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}
