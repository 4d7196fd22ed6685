//! Straight-line drawings of plane graphs.

use std::f64::consts::PI;
use std::io;
use std::path::Path;

use crate::planar::PlanarEmbedding;

const SIZE: f64 = 400.0;
const RADIUS: f64 = 170.0;

/// Barycentric (Tutte) placement: the longest face is pinned to a regular
/// polygon and every other vertex sits at the mean of its neighbours.
pub fn tutte_layout(emb: &PlanarEmbedding) -> Vec<(f64, f64)> {
    let g = emb.graph();
    let n = g.n();
    let centre = SIZE / 2.0;
    let mut pos = vec![(centre, centre); n];
    let mut pinned = vec![false; n];
    let faces = emb.faces();
    if let Some(outer) = faces.iter().max_by(|a, b| a.len().cmp(&b.len()).then(b.boundary.cmp(&a.boundary))) {
        let mut seen = Vec::new();
        for &v in &outer.boundary {
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
        let k = seen.len() as f64;
        for (i, &v) in seen.iter().enumerate() {
            let t = 2.0 * PI * i as f64 / k - PI / 2.0;
            pos[v] = (centre + RADIUS * t.cos(), centre + RADIUS * t.sin());
            pinned[v] = true;
        }
    }
    for _ in 0..10_000 {
        let mut delta: f64 = 0.0;
        for v in 0..n {
            if pinned[v] || g.degree(v) == 0 {
                continue;
            }
            let d = g.degree(v) as f64;
            let (sx, sy) = g
                .neighbors(v)
                .iter()
                .fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / d, sy / d);
            delta = delta.max((next.0 - pos[v].0).abs() + (next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if delta < 1e-9 {
            break;
        }
    }
    pos
}

pub fn embedding_svg(emb: &PlanarEmbedding) -> String {
    let pos = tutte_layout(emb);
    let g = emb.graph();
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"black\" stroke-width=\"1.5\">\n");
    for (u, v) in g.edges() {
        out.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>\n",
            pos[u].0, pos[u].1, pos[v].0, pos[v].1
        ));
    }
    out.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n");
    for (v, &(x, y)) in pos.iter().enumerate() {
        out.push_str(&format!(
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"7\" fill=\"white\" stroke=\"black\"/><text x=\"{x:.2}\" y=\"{:.2}\">{v}</text>\n",
            y + 3.5
        ));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn export_embedding_svg(emb: &PlanarEmbedding, path: &Path) -> io::Result<()> {
    std::fs::write(path, embedding_svg(emb))
}
