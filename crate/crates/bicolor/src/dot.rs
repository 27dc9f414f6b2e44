//! DOT rendering. Output is a pure function of the input graph — node and
//! edge order follow the stored order — so exports are diffable and
//! byte-identical across runs.

use crate::petersen::ColoredGraph;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A two-row layout for a biregular graph: one `rank=same` block per side,
/// nodes labeled by the caller (alias plus class, typically), edges labeled
/// by their tag.
pub fn export_dot(
    name: &str,
    y_labels: &[String],
    x_labels: &[String],
    edges: &[(usize, usize, u8)],
) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {name} {{\n"));
    if !y_labels.is_empty() || !x_labels.is_empty() {
        out.push_str("  node [shape=box];\n");
    }
    for (prefix, labels) in [("y", y_labels), ("x", x_labels)] {
        if labels.is_empty() {
            continue;
        }
        out.push_str("  { rank=same;");
        for (i, label) in labels.iter().enumerate() {
            out.push_str(&format!(" {prefix}{i} [label=\"{}\"];", escape(label)));
        }
        out.push_str(" }\n");
    }
    for &(y, x, tag) in edges {
        out.push_str(&format!("  y{y} -- x{x} [label=\"{tag}\"];\n"));
    }
    out.push_str("}\n");
    out
}

/// The triangle graph with its edges labeled by w-color name.
pub fn petersen_dot(g: &ColoredGraph) -> String {
    let mut out = String::new();
    out.push_str("graph petersen {\n");
    for (i, v) in g.vertices().iter().enumerate() {
        out.push_str(&format!(
            "  v{i} [label=\"{}{}{}\"];\n",
            v[0], v[1], v[2]
        ));
    }
    for &(u, v, color) in g.edges() {
        out.push_str(&format!("  v{u} -- v{v} [label=\"{color}\"];\n"));
    }
    out.push_str("}\n");
    out
}
