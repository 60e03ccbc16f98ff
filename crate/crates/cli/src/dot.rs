use std::fmt::Write;

use d2color::Coloring;

use crate::document::LoadedGraph;
use crate::svg::fill;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering; colored vertices are filled.
pub fn to_dot(g: &LoadedGraph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in g.graph.vertices() {
        let name = quote(g.name(v));
        match coloring.and_then(|c| c.get(v)) {
            Some(color) => {
                let _ = writeln!(out, "  {name} [fillcolor=\"{}\", xlabel=\"{color}\"];", fill(color));
            }
            None => {
                let _ = writeln!(out, "  {name};");
            }
        }
    }
    for (u, v) in g.graph.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.name(u)), quote(g.name(v)));
    }
    out.push_str("}\n");
    out
}
