//! SVG drawing of the lattice path of a word: vertex `i` sits at `(i, e_i)`.

use std::fmt::Write;

use qshuffle::Word;

const UNIT: i64 = 40;
const MARGIN: i64 = 30;

/// Grid lines over `[0, len] x [lo, hi]`, the path as a heavy polyline, and
/// each letter written under its step. The empty word is a single dot
/// labelled with the unit symbol.
pub fn dyck_svg(w: &Word) -> String {
    let e = w.elevation_sequence();
    let len = w.len() as i64;
    let lo = (*e.iter().min().unwrap()).min(0);
    let hi = (*e.iter().max().unwrap()).max(len / 2);
    let width = len * UNIT + 2 * MARGIN;
    let height = (hi - lo) * UNIT + 2 * MARGIN + 20;
    let px = |i: i64| MARGIN + i * UNIT;
    let py = |h: i64| MARGIN + (hi - h) * UNIT;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(s, r#"<title>{}</title>"#, if w.is_empty() { "1".to_string() } else { w.to_ascii() }).unwrap();
    s.push_str("<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n");
    if len > 0 {
        for i in 0..=len {
            writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(i), py(hi), py(lo)).unwrap();
        }
        for h in lo..=hi {
            writeln!(s, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(h), px(0), px(len)).unwrap();
        }
    }
    s.push_str("</g>\n");
    let label_y = py(lo) + 20;
    if len == 0 {
        writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#, px(0), py(0)).unwrap();
        writeln!(s, r#"<text x="{}" y="{label_y}" font-size="16" text-anchor="middle">𝟙</text>"#, px(0)).unwrap();
    } else {
        let points: Vec<String> = e.iter().enumerate().map(|(i, h)| format!("{},{}", px(i as i64), py(*h))).collect();
        writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="black" stroke-width="4" stroke-linejoin="round"/>"#,
            points.join(" ")
        )
        .unwrap();
        for (i, a) in w.letters().enumerate() {
            let x = px(i as i64) + UNIT / 2;
            writeln!(
                s,
                r#"<text x="{x}" y="{label_y}" font-size="16" font-style="italic" text-anchor="middle">{}</text>"#,
                a.as_char()
            )
            .unwrap();
        }
    }
    s.push_str("</svg>\n");
    s
}
