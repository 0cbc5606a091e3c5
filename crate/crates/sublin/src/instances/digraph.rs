//! Directed graphs with distinguished source and target vertices.

use std::collections::BTreeSet;

use super::{content_lines, parse_field, violation, ParseError, Violation};

/// A directed graph over vertices `1..=num_vertices` with a source `s` and a
/// target `t`. Edges are ordered pairs without duplicates; self-loops are
/// allowed and contribute 2 to the degree of their vertex.
///
/// Text format:
///
/// ```text
/// p dstcon <num_vertices> <num_edges> <s> <t>
/// e <u> <v>              (one line per edge)
/// ```
///
/// A degree cap (degree = in-degree + out-degree) is not part of the type;
/// bounded-degree instances are checked with [`Digraph::degree_violations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    pub num_vertices: u32,
    pub edges: Vec<(u32, u32)>,
    pub source: u32,
    pub target: u32,
}

impl Digraph {
    pub fn new(num_vertices: u32, edges: Vec<(u32, u32)>, source: u32, target: u32) -> Digraph {
        Digraph { num_vertices, edges, source, target }
    }

    /// In-degree plus out-degree for each vertex, indexed by `vertex - 1`.
    pub fn degrees(&self) -> Vec<u32> {
        let mut degrees = vec![0u32; self.num_vertices as usize];
        for &(u, v) in &self.edges {
            degrees[(u - 1) as usize] += 1;
            degrees[(v - 1) as usize] += 1;
        }
        degrees
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn degree_violations(&self, cap: u32) -> Vec<Violation> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > cap)
            .map(|(i, &d)| violation(format!("vertex {} has degree {}, cap is {}", i + 1, d, cap)))
            .collect()
    }

    /// Out-neighbors of each vertex in ascending order, indexed by `vertex - 1`.
    pub fn out_neighbors(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.num_vertices as usize];
        for &(u, v) in &self.edges {
            out[(u - 1) as usize].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
        }
        out
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.num_vertices;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == 0 || u > n || v == 0 || v > n {
                out.push(violation(format!("edge {} ({u},{v}) out of range 1..={n}", i + 1)));
            }
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            if !seen.insert((u, v)) {
                out.push(violation(format!("duplicate edge ({u},{v})")));
            }
        }
        for (name, vertex) in [("source", self.source), ("target", self.target)] {
            if vertex == 0 || vertex > n {
                out.push(violation(format!("{name} {vertex} out of range 1..={n}")));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Digraph, ParseError> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing `p dstcon` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 6 || fields[0] != "p" || fields[1] != "dstcon" {
            return Err(ParseError::new(
                line_no,
                format!("expected `p dstcon <n> <m> <s> <t>`, got `{header}`"),
            ));
        }
        let num_vertices: u32 = parse_field(line_no, fields[2], "vertex count")?;
        let num_edges: usize = parse_field(line_no, fields[3], "edge count")?;
        let source: u32 = parse_field(line_no, fields[4], "source")?;
        let target: u32 = parse_field(line_no, fields[5], "target")?;
        for (name, vertex) in [("source", source), ("target", target)] {
            if vertex == 0 || vertex > num_vertices {
                return Err(ParseError::new(
                    line_no,
                    format!("{name} {vertex} out of range 1..={num_vertices}"),
                ));
            }
        }

        let mut edges = Vec::with_capacity(num_edges);
        let mut seen = BTreeSet::new();
        for (line_no, line) in lines {
            if edges.len() == num_edges {
                return Err(ParseError::new(line_no, "more edge lines than the header declares"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "e" {
                return Err(ParseError::new(line_no, format!("expected `e <u> <v>`, got `{line}`")));
            }
            let u: u32 = parse_field(line_no, fields[1], "vertex")?;
            let v: u32 = parse_field(line_no, fields[2], "vertex")?;
            for vertex in [u, v] {
                if vertex == 0 || vertex > num_vertices {
                    return Err(ParseError::new(
                        line_no,
                        format!("vertex {vertex} out of range 1..={num_vertices}"),
                    ));
                }
            }
            if !seen.insert((u, v)) {
                return Err(ParseError::new(line_no, format!("duplicate edge ({u},{v})")));
            }
            edges.push((u, v));
        }
        if edges.len() != num_edges {
            return Err(ParseError::new(
                text.lines().count().max(1),
                format!("header declares {num_edges} edges, found {}", edges.len()),
            ));
        }
        Ok(Digraph { num_vertices, edges, source, target })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!(
            "p dstcon {} {} {} {}\n",
            self.num_vertices,
            self.edges.len(),
            self.source,
            self.target
        );
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let g = Digraph::parse("p dstcon 3 2 1 3\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Digraph::new(3, vec![(1, 2), (2, 3)], 1, 3));
        assert_eq!(Digraph::parse(&g.serialize()).unwrap(), g);
    }

    #[test]
    fn rejects_duplicate_edges() {
        let err = Digraph::parse("p dstcon 2 2 1 2\ne 1 2\ne 1 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("duplicate"), "{}", err.message);
    }

    #[test]
    fn rejects_out_of_range_endpoints() {
        assert!(Digraph::parse("p dstcon 2 1 1 2\ne 1 3\n").is_err());
        assert!(Digraph::parse("p dstcon 2 0 0 2\n").is_err());
    }

    #[test]
    fn self_loop_counts_twice_toward_degree() {
        let g = Digraph::new(2, vec![(1, 1), (1, 2)], 1, 2);
        assert_eq!(g.degrees(), vec![3, 1]);
        assert!(g.degree_violations(3).is_empty());
        let violations = g.degree_violations(2);
        assert_eq!(violations.len(), 1);
        assert!(violations[0].0.contains("vertex 1 has degree 3"));
    }

    #[test]
    fn out_neighbors_are_sorted() {
        let g = Digraph::new(3, vec![(1, 3), (1, 2)], 1, 3);
        assert_eq!(g.out_neighbors(), vec![vec![2, 3], vec![], vec![]]);
    }
}
