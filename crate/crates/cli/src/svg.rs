//! Straight-line drawings of an embedding.
//!
//! Each component is drawn separately: the vertices of its largest face are
//! pinned on a circle in boundary order and every other vertex is moved to
//! the average of its neighbors until the layout settles (Tutte's barycentric
//! method). Components are placed left to right.

use std::collections::BTreeMap;
use std::fmt::Write;

use d2color::embed::Embedding;
use d2color::{Coloring, VertexId};

use crate::document::LoadedGraph;

const PALETTE: [&str; 8] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
];

const CELL: f64 = 320.0;
const RADIUS: f64 = 130.0;
const ITERATIONS: usize = 500;

/// Fill color for palette index `c`.
pub fn fill(c: usize) -> String {
    match PALETTE.get(c) {
        Some(s) => s.to_string(),
        None => format!("hsl({}, 60%, 60%)", (c * 47) % 360),
    }
}

/// Barycentric coordinates for every vertex, in drawing units.
pub fn layout(e: &Embedding) -> BTreeMap<VertexId, (f64, f64)> {
    let g = e.graph();
    let faces = e.faces();
    let mut pos = BTreeMap::new();
    for (slot, comp) in g.component_sets().into_iter().enumerate() {
        let cx = CELL * slot as f64 + CELL / 2.0;
        let cy = CELL / 2.0;
        if comp.len() == 1 {
            pos.insert(*comp.iter().next().unwrap(), (cx, cy));
            continue;
        }
        let outer = faces
            .iter()
            .filter(|f| comp.contains(&f.darts[0].0))
            .max_by_key(|f| f.len())
            .expect("a component with an edge has a face");
        let mut pinned: Vec<VertexId> = Vec::new();
        for v in outer.boundary() {
            if !pinned.contains(&v) {
                pinned.push(v);
            }
        }
        let k = pinned.len() as f64;
        for (i, &v) in pinned.iter().enumerate() {
            let angle = std::f64::consts::TAU * i as f64 / k;
            pos.insert(v, (cx + RADIUS * angle.cos(), cy + RADIUS * angle.sin()));
        }
        let free: Vec<VertexId> = comp.iter().copied().filter(|v| !pinned.contains(v)).collect();
        for &v in &free {
            pos.insert(v, (cx, cy));
        }
        for _ in 0..ITERATIONS {
            for &v in &free {
                let nbrs = g.neighbors(v);
                let (sx, sy) = nbrs.iter().fold((0.0, 0.0), |(sx, sy), w| {
                    let (x, y) = pos[w];
                    (sx + x, sy + y)
                });
                let d = nbrs.len() as f64;
                pos.insert(v, (sx / d, sy / d));
            }
        }
    }
    pos
}

pub fn render(g: &LoadedGraph, e: &Embedding, coloring: Option<&Coloring>) -> String {
    let pos = layout(e);
    let components = g.graph.component_sets().len().max(1);
    let (w, h) = (CELL * components as f64, CELL);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">"
    );
    out.push_str("<g stroke=\"#333\" stroke-width=\"1.5\">\n");
    for (u, v) in g.graph.edges() {
        let ((x1, y1), (x2, y2)) = (pos[&u], pos[&v]);
        let _ = writeln!(out, "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>");
    }
    out.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n");
    for v in g.graph.vertices() {
        let (x, y) = pos[&v];
        let color = coloring.and_then(|c| c.get(v)).map_or("#fff".to_string(), fill);
        let label = escape(g.name(v));
        let _ = writeln!(
            out,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"9\" fill=\"{color}\" stroke=\"#333\"><title>{label}</title></circle>"
        );
        let _ = writeln!(out, "<text x=\"{x:.2}\" y=\"{:.2}\">{label}</text>", y + 3.5);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
