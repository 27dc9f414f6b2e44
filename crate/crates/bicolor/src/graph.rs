use crate::error::{Error, Result};
use crate::report::ValidationReport;
use serde::{Deserialize, Serialize};

/// Bipartite graph with parts `Y` (degree `lambda` intended) and `X`
/// (degree `mu` intended). Edges are `(y, x, tag)` triples; the tag is an
/// opaque small label (w-colors in the folded-graph instances, 0 elsewhere).
/// Edge identity is the position in `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiregularGraph {
    pub y_count: usize,
    pub x_count: usize,
    pub lambda: usize,
    pub mu: usize,
    pub edges: Vec<(usize, usize, u8)>,
}

impl BiregularGraph {
    /// Builds the graph, rejecting out-of-range endpoints and exact
    /// duplicate `(y, x, tag)` triples (parallel edges must differ in tag).
    pub fn new(
        y_count: usize,
        x_count: usize,
        lambda: usize,
        mu: usize,
        edges: Vec<(usize, usize, u8)>,
    ) -> Result<Self> {
        for (i, &(y, x, tag)) in edges.iter().enumerate() {
            if y >= y_count {
                return Err(Error::input(format!(
                    "edge {i}: y id {y} out of range (y_count {y_count})"
                )));
            }
            if x >= x_count {
                return Err(Error::input(format!(
                    "edge {i}: x id {x} out of range (x_count {x_count})"
                )));
            }
            if edges[..i].contains(&(y, x, tag)) {
                return Err(Error::input(format!(
                    "edge {i}: duplicate edge ({y}, {x}) with tag {tag}"
                )));
            }
        }
        Ok(BiregularGraph {
            y_count,
            x_count,
            lambda,
            mu,
            edges,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Indices of edges incident to Y-vertex `y`.
    pub fn y_star(&self, y: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.0 == y)
            .map(|(i, _)| i)
            .collect()
    }

    /// Indices of edges incident to X-vertex `x`.
    pub fn x_star(&self, x: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.1 == x)
            .map(|(i, _)| i)
            .collect()
    }

    /// Checks that every Y-vertex has degree exactly `lambda` and every
    /// X-vertex degree exactly `mu`.
    pub fn validate_biregular(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let mut y_deg = vec![0usize; self.y_count];
        let mut x_deg = vec![0usize; self.x_count];
        for &(y, x, _) in &self.edges {
            y_deg[y] += 1;
            x_deg[x] += 1;
        }
        for (y, &d) in y_deg.iter().enumerate() {
            if d != self.lambda {
                report.push(
                    "degree.y",
                    format!("y{y}"),
                    format!("degree {d}, expected lambda = {}", self.lambda),
                );
            }
        }
        for (x, &d) in x_deg.iter().enumerate() {
            if d != self.mu {
                report.push(
                    "degree.x",
                    format!("x{x}"),
                    format!("degree {d}, expected mu = {}", self.mu),
                );
            }
        }
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BiregularGraph = serde_json::from_str(text)?;
        // Re-run the constructor checks: serde bypasses `new`.
        BiregularGraph::new(raw.y_count, raw.x_count, raw.lambda, raw.mu, raw.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph() -> BiregularGraph {
        // y0 joined to x0 and x1: degree 2 on the single Y-vertex.
        BiregularGraph::new(1, 2, 1, 1, vec![(0, 0, 0), (0, 1, 0)]).unwrap()
    }

    #[test]
    fn single_edge_is_biregular() {
        let g = BiregularGraph::new(1, 1, 1, 1, vec![(0, 0, 0)]).unwrap();
        assert!(g.validate_biregular().ok());
    }

    #[test]
    fn overloaded_y_vertex_is_reported() {
        let g = path_graph();
        let report = g.validate_biregular();
        assert!(!report.ok());
        let v = report.of_kind("degree.y");
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].location, "y0");
        assert!(v[0].message.contains("degree 2"));
        // x-vertices are fine.
        assert!(report.of_kind("degree.x").is_empty());
    }

    #[test]
    fn out_of_range_ids_rejected() {
        assert!(BiregularGraph::new(1, 1, 1, 1, vec![(1, 0, 0)]).is_err());
        assert!(BiregularGraph::new(1, 1, 1, 1, vec![(0, 1, 0)]).is_err());
    }

    #[test]
    fn duplicate_edge_rejected_unless_tag_differs() {
        assert!(BiregularGraph::new(1, 1, 2, 2, vec![(0, 0, 1), (0, 0, 1)]).is_err());
        let g = BiregularGraph::new(1, 1, 2, 2, vec![(0, 0, 1), (0, 0, 2)]).unwrap();
        assert!(g.validate_biregular().ok());
    }

    #[test]
    fn json_round_trip() {
        let g = BiregularGraph::new(2, 1, 1, 2, vec![(0, 0, 3), (1, 0, 4)]).unwrap();
        let text = g.to_json();
        assert_eq!(
            text,
            r#"{"y_count":2,"x_count":1,"lambda":1,"mu":2,"edges":[[0,0,3],[1,0,4]]}"#
        );
        assert_eq!(BiregularGraph::from_json(&text).unwrap(), g);
    }

    #[test]
    fn from_json_rechecks_ids() {
        let bad = r#"{"y_count":1,"x_count":1,"lambda":1,"mu":1,"edges":[[5,0,0]]}"#;
        assert!(BiregularGraph::from_json(bad).is_err());
    }

    #[test]
    fn stars_list_edge_indices() {
        let g = BiregularGraph::new(2, 2, 2, 2, vec![(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)])
            .unwrap();
        assert_eq!(g.y_star(0), vec![0, 1]);
        assert_eq!(g.x_star(1), vec![1, 3]);
    }
}
