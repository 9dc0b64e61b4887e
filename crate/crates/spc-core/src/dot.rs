//! Graphviz DOT export with deterministic vertex and edge order.

use std::fmt::Write;

use crate::graph::Graph;
use crate::labeling::{induced_edge_sign, LabelingError, SignedLabeling};

/// Renders `g` as an undirected DOT graph. Vertices carry their role names;
/// with a labeling, each vertex shows its sign and gets one of two fill
/// classes, and each edge is drawn solid (`+1`) or dashed (`-1`).
pub fn render_dot(g: &Graph, labeling: Option<&SignedLabeling>) -> Result<String, LabelingError> {
    if let Some(l) = labeling {
        if l.len() != g.num_vertices() {
            return Err(LabelingError::LengthMismatch {
                labels: l.len(),
                vertices: g.num_vertices(),
            });
        }
    }
    let mut out = String::new();
    out.push_str("graph spc {\n");
    out.push_str("  node [shape=circle, fontsize=11];\n");
    for v in g.vertices() {
        let name = g
            .role(v)
            .map(str::to_owned)
            .unwrap_or_else(|| v.to_string());
        match labeling {
            Some(l) => {
                let sign = l.sign(v);
                let fill = if sign.is_positive() { "white" } else { "gray83" };
                writeln!(
                    out,
                    "  {v} [label=\"{name} ({sign})\", style=filled, fillcolor={fill}];"
                )
                .expect("writing to a String cannot fail");
            }
            None => {
                writeln!(out, "  {v} [label=\"{name}\"];").expect("writing to a String cannot fail");
            }
        }
    }
    for &(u, v) in g.edges() {
        match labeling {
            Some(l) => {
                let style = if induced_edge_sign(l.sign(u), l.sign(v)).is_positive() {
                    "solid"
                } else {
                    "dashed"
                };
                writeln!(out, "  {u} -- {v} [style={style}];")
                    .expect("writing to a String cannot fail");
            }
            None => {
                writeln!(out, "  {u} -- {v};").expect("writing to a String cannot fail");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::labeling::evaluate;
    use crate::schemes;

    #[test]
    fn plain_bull_export() {
        let dot = render_dot(&families::bull(), None).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert!(dot.contains("0 [label=\"v1\"];"));
        assert!(!dot.contains("style=filled"));
    }

    #[test]
    fn labeled_export_styles_edges_by_induced_sign() {
        let s = schemes::path_square_scheme(8).unwrap();
        let dot = render_dot(&s.graph, Some(&s.labeling)).unwrap();
        assert_eq!(dot.matches("style=solid").count(), 6);
        assert_eq!(dot.matches("style=dashed").count(), 7);
        assert!(dot.contains("(+1)"));
        assert!(dot.contains("(-1)"));
    }

    #[test]
    fn labeled_export_of_splitting_star() {
        let s = schemes::spltg_star_scheme(8).unwrap();
        let dot = render_dot(&s.graph, Some(&s.labeling)).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 24);
        assert_eq!(dot.matches("[label=").count(), 18);
        let report = evaluate(&s.graph, &s.labeling).unwrap();
        assert_eq!(dot.matches("style=solid").count(), report.e_pos);
        assert_eq!(dot.matches("style=dashed").count(), report.e_neg);
    }

    #[test]
    fn export_is_deterministic() {
        let s = schemes::corona_scheme(4).unwrap();
        let a = render_dot(&s.graph, Some(&s.labeling)).unwrap();
        let b = render_dot(&s.graph, Some(&s.labeling)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_length_mismatch() {
        let g = families::bull();
        let short = SignedLabeling::from_values(&[1, -1]).unwrap();
        assert!(render_dot(&g, Some(&short)).is_err());
    }
}
