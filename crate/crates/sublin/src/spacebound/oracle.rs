//! Read-only edge oracles the metered algorithms query.
//!
//! An oracle answers "is there an edge from u to v" without handing out any
//! storage: whatever the oracle reads is input, not working space, so only
//! steps are charged. This is what lets the same search code run on a graph
//! given as an edge list and on the implication structure of a formula that
//! is never materialized as a graph.

use super::{BudgetExhausted, MeteredWorkspace};
use crate::instances::{Cnf2Formula, Digraph, Literal};

pub trait AdjacencyOracle {
    fn num_vertices(&self) -> u32;
    fn source(&self) -> u32;
    fn target(&self) -> u32;
    /// Steps are charged per unit of scanning the oracle does.
    fn has_edge(&self, from: u32, to: u32, ws: &mut MeteredWorkspace)
        -> Result<bool, BudgetExhausted>;
}

/// A digraph's adjacency matrix packed into row bitmasks; each query costs
/// one step.
pub struct ExplicitGraph {
    num_vertices: u32,
    source: u32,
    target: u32,
    words_per_row: usize,
    rows: Vec<u64>,
}

impl ExplicitGraph {
    pub fn new(graph: &Digraph) -> ExplicitGraph {
        let n = graph.num_vertices as usize;
        let words_per_row = n.div_ceil(64);
        let mut rows = vec![0u64; n * words_per_row];
        for &(u, v) in &graph.edges {
            let bit = (v - 1) as usize;
            rows[(u - 1) as usize * words_per_row + bit / 64] |= 1 << (bit % 64);
        }
        ExplicitGraph {
            num_vertices: graph.num_vertices,
            source: graph.source,
            target: graph.target,
            words_per_row,
            rows,
        }
    }
}

impl AdjacencyOracle for ExplicitGraph {
    fn num_vertices(&self) -> u32 {
        self.num_vertices
    }

    fn source(&self) -> u32 {
        self.source
    }

    fn target(&self) -> u32 {
        self.target
    }

    fn has_edge(&self, from: u32, to: u32, ws: &mut MeteredWorkspace)
        -> Result<bool, BudgetExhausted> {
        ws.step()?;
        let bit = (to - 1) as usize;
        let word = self.rows[(from - 1) as usize * self.words_per_row + bit / 64];
        Ok(word >> (bit % 64) & 1 == 1)
    }
}

/// Vertex encoding for implication structure: variable v's "true" vertex.
pub fn pos_vertex(var: u32) -> u32 {
    2 * var - 1
}

/// Variable v's "false" vertex.
pub fn neg_vertex(var: u32) -> u32 {
    2 * var
}

fn literal_vertex(lit: Literal) -> u32 {
    if lit.positive {
        pos_vertex(lit.var)
    } else {
        neg_vertex(lit.var)
    }
}

/// The implication structure of a formula, exposed as a graph on vertices
/// `1..=2*num_vars` without ever being built: a clause contributes the edge
/// from each literal's negation to the other literal. Queries scan the clause
/// list and charge one step per clause inspected.
pub struct ImplicationGraph<'a> {
    formula: &'a Cnf2Formula,
    source: u32,
    target: u32,
}

impl<'a> ImplicationGraph<'a> {
    pub fn new(formula: &'a Cnf2Formula, source: u32, target: u32) -> ImplicationGraph<'a> {
        ImplicationGraph { formula, source, target }
    }
}

impl AdjacencyOracle for ImplicationGraph<'_> {
    fn num_vertices(&self) -> u32 {
        2 * self.formula.num_vars
    }

    fn source(&self) -> u32 {
        self.source
    }

    fn target(&self) -> u32 {
        self.target
    }

    fn has_edge(&self, from: u32, to: u32, ws: &mut MeteredWorkspace)
        -> Result<bool, BudgetExhausted> {
        for clause in &self.formula.clauses {
            ws.step()?;
            let a = clause.first;
            let b = clause.second.unwrap_or(clause.first);
            let first_edge = (literal_vertex(a.negated()), literal_vertex(b));
            let second_edge = (literal_vertex(b.negated()), literal_vertex(a));
            if (from, to) == first_edge || (from, to) == second_edge {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
