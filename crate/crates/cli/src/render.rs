use std::fmt::Write;

use noncrossing::ArcDiagram;

const SPACING: f64 = 40.0;
const MARGIN: f64 = 30.0;
const LOOP_RADIUS: f64 = 8.0;

/// Draws the vertices on a baseline with arcs as semicircles above it and
/// loops as small circles sitting on their vertex.
pub fn svg(d: &ArcDiagram) -> String {
    let n = d.n();
    let x = |v: usize| MARGIN + SPACING * (v as f64 - 1.0);
    let max_span = d.arcs().iter().map(|a| a.right - a.left).max().unwrap_or(0) as f64;
    let height_above = (max_span * SPACING / 2.0).max(2.0 * LOOP_RADIUS) + MARGIN;
    let baseline = height_above;
    let width = 2.0 * MARGIN + SPACING * (n.max(1) as f64 - 1.0);
    let height = baseline + MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"  <line x1="{}" y1="{baseline}" x2="{}" y2="{baseline}" stroke="black" stroke-width="1"/>"#,
        MARGIN / 2.0,
        width - MARGIN / 2.0
    );
    for a in d.arcs() {
        if a.is_loop() {
            let _ = writeln!(
                out,
                r#"  <circle class="loop" cx="{}" cy="{}" r="{LOOP_RADIUS}" fill="none" stroke="black"/>"#,
                x(a.left),
                baseline - LOOP_RADIUS
            );
        } else {
            let r = (x(a.right) - x(a.left)) / 2.0;
            let _ = writeln!(
                out,
                r#"  <path class="arc" d="M {} {baseline} A {r} {r} 0 0 1 {} {baseline}" fill="none" stroke="black"/>"#,
                x(a.left),
                x(a.right)
            );
        }
    }
    for v in 1..=n {
        let _ = writeln!(
            out,
            r#"  <circle class="vertex" cx="{}" cy="{baseline}" r="3" fill="black"/>"#,
            x(v)
        );
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="12" text-anchor="middle">{v}</text>"#,
            x(v),
            baseline + 18.0
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(text: &str) -> String {
        svg(&text.parse().unwrap())
    }

    #[test]
    fn empty_diagram_has_only_baseline_and_vertices() {
        let s = render("n=3; arcs=");
        assert_eq!(s.matches("<line").count(), 1);
        assert_eq!(s.matches(r#"class="vertex""#).count(), 3);
        assert!(!s.contains(r#"class="arc""#));
    }

    #[test]
    fn crossing_arcs() {
        let s = render("n=4; arcs=(1,3)(2,4)");
        assert_eq!(s.matches(r#"class="arc""#).count(), 2);
        assert!(s.contains("M 30 "));
        assert!(s.contains("M 70 "));
    }

    #[test]
    fn loop_glyph() {
        let s = render("n=1; arcs=(1,1)");
        assert_eq!(s.matches(r#"class="loop""#).count(), 1);
        assert_eq!(s, render("n=1; arcs=(1,1)"));
    }
}
