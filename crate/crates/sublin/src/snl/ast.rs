//! Abstract syntax for SNL formulas.
//!
//! A formula is a quantifier prefix over three sorts of first-order
//! variables plus a quantifier-free matrix. The second-order object `T`
//! never appears in the prefix: the matrix refers to it through `T(i, v)`
//! atoms, and the surrounding machinery supplies it either explicitly
//! (evaluation) or by enumeration (decision).

use serde::{Deserialize, Serialize};

/// Which universe an element variable ranges over: the main one carrying
/// `T`, or one of the model's auxiliary universes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UniverseRef {
    Main,
    Extra(usize),
}

/// Range of a universally quantified index variable, resolved against the
/// model's position bound `P` at evaluation time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexBound {
    /// `1..=P`.
    Positions,
    /// `1..=P-k`, empty when `k >= P`.
    PositionsMinus(u32),
    /// `1..=b` independent of the model.
    Fixed(u32),
}

/// Element variable together with the universe it ranges over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElemVar {
    pub name: String,
    pub universe: UniverseRef,
}

/// Universally quantified index variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexVar {
    pub name: String,
    pub bound: IndexBound,
}

/// Domain of a trailing existential: one of the model's constant-size
/// choice sets, or a full universe. The machine-acceptance formula
/// quantifies its successor variable over the main universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChoiceDomain {
    Set(usize),
    Universe(UniverseRef),
}

/// Existentially quantified variable after the universals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoiceVar {
    pub name: String,
    pub domain: ChoiceDomain,
}

/// Term denoting a position in `[P]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexTerm {
    Const(u32),
    Var(String),
    /// Variable value plus a constant offset.
    Plus(String, u32),
    /// `last(T)`: the largest position at which `T` holds of anything,
    /// recomputed from the supplied `T` before each evaluation.
    Last,
}

/// Term denoting a universe element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ElemTerm {
    Var(String),
    Lit(String),
}

/// Atomic formula. Atoms mentioning a position outside `[P]`, or `last(T)`
/// of an empty `T`, are false rather than errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Atom {
    /// `T(i, v)`.
    T(IndexTerm, ElemTerm),
    /// `(u_1, ..., u_k) in S_j`, the relation given by its model index.
    In(Vec<ElemTerm>, usize),
    /// `u = v`.
    Eq(ElemTerm, ElemTerm),
    /// `i <= j`.
    Le(IndexTerm, IndexTerm),
    /// `symb(v, i) = a`: the i-th symbol of `v` is `a`, 1-indexed.
    Symb(ElemTerm, IndexTerm, char),
}

/// Quantifier-free boolean combination of atoms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Matrix {
    Atom(Atom),
    Not(Box<Matrix>),
    And(Vec<Matrix>),
    Or(Vec<Matrix>),
    Implies(Box<Matrix>, Box<Matrix>),
}

/// Prenex SNL formula: exists T, exists (leading elements), forall
/// (indices), forall (elements), exists (choices), matrix.
///
/// The leading element existentials sit outside the universals; the
/// machine-acceptance formula needs them for its endpoint variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnlFormula {
    pub leading_exists: Vec<ElemVar>,
    pub index_vars: Vec<IndexVar>,
    pub universe_vars: Vec<ElemVar>,
    pub choice_vars: Vec<ChoiceVar>,
    pub matrix: Matrix,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_round_trip_through_json() {
        let formula = SnlFormula {
            leading_exists: vec![ElemVar {
                name: "v0".into(),
                universe: UniverseRef::Main,
            }],
            index_vars: vec![IndexVar {
                name: "i".into(),
                bound: IndexBound::PositionsMinus(1),
            }],
            universe_vars: vec![ElemVar {
                name: "y".into(),
                universe: UniverseRef::Extra(0),
            }],
            choice_vars: vec![ChoiceVar {
                name: "z".into(),
                domain: ChoiceDomain::Set(0),
            }],
            matrix: Matrix::And(vec![
                Matrix::Atom(Atom::T(IndexTerm::Const(1), ElemTerm::Var("v0".into()))),
                Matrix::Implies(
                    Box::new(Matrix::Atom(Atom::Le(
                        IndexTerm::Var("i".into()),
                        IndexTerm::Last,
                    ))),
                    Box::new(Matrix::Or(vec![
                        Matrix::Atom(Atom::Eq(
                            ElemTerm::Var("y".into()),
                            ElemTerm::Var("z".into()),
                        )),
                        Matrix::Not(Box::new(Matrix::Atom(Atom::Symb(
                            ElemTerm::Var("v0".into()),
                            IndexTerm::Plus("i".into(), 1),
                            '1',
                        )))),
                    ])),
                ),
            ]),
        };
        let text = serde_json::to_string(&formula).unwrap();
        let back: SnlFormula = serde_json::from_str(&text).unwrap();
        assert_eq!(back, formula);
    }
}
