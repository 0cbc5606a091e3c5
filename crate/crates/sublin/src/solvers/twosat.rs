//! Formula satisfiability via strongly connected components of the
//! implication graph.

use super::SatResult;
use crate::instances::{Cnf2Formula, Literal};

fn lit_node(lit: Literal) -> usize {
    2 * (lit.var - 1) as usize + usize::from(!lit.positive)
}

/// Implication graph on nodes `2(v-1)` (v true) and `2(v-1)+1` (v false):
/// a clause contributes the edge from each literal's negation to the other
/// literal, a unit clause the edge from its negation to itself.
fn implication_graph(formula: &Cnf2Formula) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); 2 * formula.num_vars as usize];
    for clause in &formula.clauses {
        let a = clause.first;
        let b = clause.second.unwrap_or(clause.first);
        adj[lit_node(a.negated())].push(lit_node(b));
        adj[lit_node(b.negated())].push(lit_node(a));
    }
    adj
}

/// Tarjan's algorithm with an explicit call stack; component ids increase in
/// reverse topological order (a component's successors all get smaller ids).
fn tarjan_components(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut order = vec![UNSEEN; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut component = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut calls: Vec<(usize, usize)> = Vec::new();
    let mut next_order = 0;
    let mut next_component = 0;

    for root in 0..n {
        if order[root] != UNSEEN {
            continue;
        }
        order[root] = next_order;
        lowlink[root] = next_order;
        next_order += 1;
        stack.push(root);
        on_stack[root] = true;
        calls.push((root, 0));

        while let Some(frame) = calls.last_mut() {
            let v = frame.0;
            if frame.1 < adj[v].len() {
                let w = adj[v][frame.1];
                frame.1 += 1;
                if order[w] == UNSEEN {
                    order[w] = next_order;
                    lowlink[w] = next_order;
                    next_order += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    calls.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(order[w]);
                }
            } else {
                calls.pop();
                if let Some(&(parent, _)) = calls.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == order[v] {
                    loop {
                        let w = stack.pop().expect("component stack holds v");
                        on_stack[w] = false;
                        component[w] = next_component;
                        if w == v {
                            break;
                        }
                    }
                    next_component += 1;
                }
            }
        }
    }
    component
}

/// Decides satisfiability in linear time. The witness sets a variable true
/// exactly when its true-node sits later in topological order than its
/// false-node, which satisfies every implication.
pub fn solve_2sat(formula: &Cnf2Formula) -> SatResult {
    let component = tarjan_components(&implication_graph(formula));
    let mut witness = Vec::with_capacity(formula.num_vars as usize);
    for v in 0..formula.num_vars as usize {
        let (pos, neg) = (component[2 * v], component[2 * v + 1]);
        if pos == neg {
            return SatResult::Unsatisfiable;
        }
        witness.push(pos < neg);
    }
    debug_assert!(formula.is_satisfied_by(&witness));
    SatResult::Satisfiable(witness)
}

/// Tries all assignments in lexicographic order (`x1` is the most significant
/// position, false before true) and returns the first satisfying one.
pub fn brute_2sat(formula: &Cnf2Formula) -> SatResult {
    let n = formula.num_vars;
    assert!(n <= 25, "brute force is limited to 25 variables, got {n}");
    for mask in 0u32..1 << n {
        let assignment: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
        if formula.is_satisfied_by(&assignment) {
            return SatResult::Satisfiable(assignment);
        }
    }
    SatResult::Unsatisfiable
}
