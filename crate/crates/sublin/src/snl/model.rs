//! Finite semantic models and explicit second-order witnesses.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::SnlError;

/// Explicitly enumerated interpreted relation `S_j` over universe elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub name: String,
    pub arity: usize,
    pub tuples: BTreeSet<Vec<String>>,
}

/// Model an SNL formula is evaluated against.
///
/// `T` ranges over subsets of `[positions] x universe`; with `functional_t`
/// set it ranges over total functions from positions to the universe.
/// `size_param` and `universe_constant` record the declared bound
/// `|universe| <= universe_constant * size_param`; leaving either at zero
/// disables that check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemanticModel {
    pub positions: u32,
    pub universe: Vec<String>,
    pub extra_universes: Vec<Vec<String>>,
    pub choice_sets: Vec<Vec<String>>,
    pub relations: Vec<Relation>,
    pub functional_t: bool,
    pub choice_limit: usize,
    pub size_param: u64,
    pub universe_constant: u64,
}

impl SemanticModel {
    /// Shape checks shared by evaluation and decision: distinct universe
    /// elements, choice sets within the declared limit, uniform relation
    /// arities, and the universe-size bound when one is declared.
    pub fn validate(&self) -> Result<(), SnlError> {
        let distinct: BTreeSet<&String> = self.universe.iter().collect();
        if distinct.len() != self.universe.len() {
            return Err(SnlError::DuplicateElement);
        }
        for (index, set) in self.choice_sets.iter().enumerate() {
            if set.len() > self.choice_limit {
                return Err(SnlError::ChoiceSetTooLarge {
                    index,
                    len: set.len(),
                    limit: self.choice_limit,
                });
            }
        }
        for relation in &self.relations {
            if let Some(tuple) = relation.tuples.iter().find(|t| t.len() != relation.arity) {
                return Err(SnlError::ArityMismatch {
                    name: relation.name.clone(),
                    expected: relation.arity,
                    got: tuple.len(),
                });
            }
        }
        let cap = self.universe_constant.saturating_mul(self.size_param);
        if cap > 0 && self.universe.len() as u64 > cap {
            return Err(SnlError::UniverseTooLarge {
                size: self.universe.len(),
                bound: cap,
            });
        }
        Ok(())
    }
}

/// Certificate size of a model: the size of its main universe.
pub fn cert_size(model: &SemanticModel) -> u64 {
    model.universe.len() as u64
}

/// Explicit value for the second-order object: the set of pairs `(i, v)`
/// at which `T` holds.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TRelation(pub BTreeSet<(u32, String)>);

impl TRelation {
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u32, String)>,
    {
        TRelation(pairs.into_iter().collect())
    }

    /// Total function holding `run[k]` at position `k + 1`.
    pub fn from_run(run: &[String]) -> Self {
        TRelation(
            run.iter()
                .enumerate()
                .map(|(k, v)| (k as u32 + 1, v.clone()))
                .collect(),
        )
    }
}
