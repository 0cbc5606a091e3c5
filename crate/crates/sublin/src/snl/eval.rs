//! Three-valued evaluation and exact decision for SNL formulas.
//!
//! `eval_snl` checks one explicit witness. `decide_snl` searches the whole
//! witness space: total functions from positions to the universe in
//! functional mode, arbitrary subsets of `positions x universe` otherwise.
//! The functional search assigns positions one at a time and evaluates the
//! formula under the partial assignment in Kleene three-valued logic; a
//! definite verdict at depth `d` settles all `|U|^(P-d)` remaining
//! extensions at once, so every candidate is accounted for exactly even
//! though most are never visited individually.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::ast::{
    Atom, ChoiceDomain, ElemTerm, IndexBound, IndexTerm, Matrix, SnlFormula, UniverseRef,
};
use super::model::{SemanticModel, TRelation};
use super::SnlError;

/// Matrix evaluations a decision may spend before aborting.
pub const EVAL_BUDGET: u64 = 1 << 25;

/// Largest `positions * |universe|` accepted by the subset search.
pub const SUBSET_BITS_LIMIT: u64 = 20;

/// Domains at least this large get a pass with the variable left unbound
/// first; a definite verdict, or an unknown that never consulted the
/// variable, settles the quantifier without looping.
const PRE_EVAL_MIN: usize = 16;

/// Position counts beyond this would make the assignment stack and the
/// candidate counters useless even for one-element universes.
const MAX_POSITIONS: u32 = 1 << 12;

/// Outcome of deciding satisfiability over the witness space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnlDecision {
    pub satisfiable: bool,
    /// Size of the witness space; every candidate is settled by some
    /// evaluation, individually or as part of a pruned block.
    pub candidates: u128,
    /// Matrix evaluations spent.
    pub evaluations: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Truth {
    False,
    Unknown,
    True,
}

impl Truth {
    fn negate(self) -> Truth {
        match self {
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
            Truth::True => Truth::False,
        }
    }
}

/// Truth value plus, for unknowns, the set of unbound variable slots the
/// evaluation consulted. Definite values always carry an empty mask.
type Tv = (Truth, u64);

fn definite(value: bool) -> Tv {
    (if value { Truth::True } else { Truth::False }, 0)
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Elem(usize),
    Idx(usize),
}

impl Slot {
    fn bit(self) -> u64 {
        match self {
            Slot::Elem(s) => 1 << s,
            Slot::Idx(s) => 1 << (32 + s),
        }
    }
}

enum DomainC {
    Elems(Vec<u32>),
    /// Index range `1..=count`.
    Indices(u32),
}

impl DomainC {
    fn len(&self) -> usize {
        match self {
            DomainC::Elems(v) => v.len(),
            DomainC::Indices(count) => *count as usize,
        }
    }

    fn value(&self, k: usize) -> u32 {
        match self {
            DomainC::Elems(v) => v[k],
            DomainC::Indices(_) => k as u32 + 1,
        }
    }
}

struct QuantC {
    exists: bool,
    slot: Slot,
    domain: DomainC,
}

enum CElem {
    Var(usize),
    Lit(u32),
}

enum CIdx {
    Const(u32),
    Var(usize),
    Plus(usize, u32),
    Last,
}

enum CNode {
    T(CIdx, CElem),
    In(Vec<CElem>, usize),
    Eq(CElem, CElem),
    Le(CIdx, CIdx),
    Symb(CElem, CIdx, char),
    Not(Box<CNode>),
    And(Vec<CNode>),
    Or(Vec<CNode>),
    Implies(Box<CNode>, Box<CNode>),
}

struct CRel {
    arity: usize,
    tuples: BTreeSet<Vec<u32>>,
}

/// Formula and model resolved against each other: names become slots,
/// element strings become ids with the universe interned first, so an
/// element's id equals its universe index.
struct Compiled {
    quants: Vec<QuantC>,
    matrix: CNode,
    relations: Vec<CRel>,
    names: Vec<String>,
    ids: HashMap<String, u32>,
    universe_len: u32,
    positions: u32,
    elem_count: usize,
    idx_count: usize,
}

struct Compiler<'m> {
    model: &'m SemanticModel,
    names: Vec<String>,
    ids: HashMap<String, u32>,
    elem_slots: HashMap<String, usize>,
    idx_slots: HashMap<String, usize>,
}

impl Compiler<'_> {
    fn intern(&mut self, s: &str) -> u32 {
        if let Some(id) = self.ids.get(s) {
            return *id;
        }
        let id = self.names.len() as u32;
        self.names.push(s.to_string());
        self.ids.insert(s.to_string(), id);
        id
    }

    fn fresh(&mut self, name: &str) -> Result<(), SnlError> {
        if self.elem_slots.contains_key(name) || self.idx_slots.contains_key(name) {
            return Err(SnlError::DuplicateVariable(name.to_string()));
        }
        Ok(())
    }

    fn new_elem_slot(&mut self, name: &str) -> Result<usize, SnlError> {
        self.fresh(name)?;
        let slot = self.elem_slots.len();
        self.elem_slots.insert(name.to_string(), slot);
        Ok(slot)
    }

    fn new_idx_slot(&mut self, name: &str) -> Result<usize, SnlError> {
        self.fresh(name)?;
        let slot = self.idx_slots.len();
        self.idx_slots.insert(name.to_string(), slot);
        Ok(slot)
    }

    fn universe_domain(&self, r: UniverseRef, extra: &[Vec<u32>]) -> Result<Vec<u32>, SnlError> {
        match r {
            UniverseRef::Main => Ok((0..self.model.universe.len() as u32).collect()),
            UniverseRef::Extra(k) => extra.get(k).cloned().ok_or(SnlError::MissingReference {
                kind: "universe",
                index: k,
            }),
        }
    }

    fn elem_term(&mut self, t: &ElemTerm) -> Result<CElem, SnlError> {
        match t {
            ElemTerm::Var(name) => self
                .elem_slots
                .get(name)
                .map(|s| CElem::Var(*s))
                .ok_or_else(|| SnlError::UnboundVariable(name.clone())),
            ElemTerm::Lit(s) => Ok(CElem::Lit(self.intern(s))),
        }
    }

    fn idx_term(&self, t: &IndexTerm) -> Result<CIdx, SnlError> {
        let slot = |name: &String| {
            self.idx_slots
                .get(name)
                .copied()
                .ok_or_else(|| SnlError::UnboundVariable(name.clone()))
        };
        Ok(match t {
            IndexTerm::Const(k) => CIdx::Const(*k),
            IndexTerm::Var(name) => CIdx::Var(slot(name)?),
            IndexTerm::Plus(name, k) => CIdx::Plus(slot(name)?, *k),
            IndexTerm::Last => CIdx::Last,
        })
    }

    fn node(&mut self, m: &Matrix, relations: &[CRel]) -> Result<CNode, SnlError> {
        Ok(match m {
            Matrix::Atom(a) => self.atom(a, relations)?,
            Matrix::Not(x) => CNode::Not(Box::new(self.node(x, relations)?)),
            Matrix::And(xs) => CNode::And(
                xs.iter()
                    .map(|x| self.node(x, relations))
                    .collect::<Result<_, _>>()?,
            ),
            Matrix::Or(xs) => CNode::Or(
                xs.iter()
                    .map(|x| self.node(x, relations))
                    .collect::<Result<_, _>>()?,
            ),
            Matrix::Implies(a, b) => CNode::Implies(
                Box::new(self.node(a, relations)?),
                Box::new(self.node(b, relations)?),
            ),
        })
    }

    fn atom(&mut self, a: &Atom, relations: &[CRel]) -> Result<CNode, SnlError> {
        Ok(match a {
            Atom::T(i, e) => CNode::T(self.idx_term(i)?, self.elem_term(e)?),
            Atom::In(terms, rel) => {
                let arity = relations
                    .get(*rel)
                    .map(|r| r.arity)
                    .ok_or(SnlError::MissingReference {
                        kind: "relation",
                        index: *rel,
                    })?;
                if terms.len() != arity {
                    return Err(SnlError::ArityMismatch {
                        name: self.model.relations[*rel].name.clone(),
                        expected: arity,
                        got: terms.len(),
                    });
                }
                CNode::In(
                    terms
                        .iter()
                        .map(|t| self.elem_term(t))
                        .collect::<Result<_, _>>()?,
                    *rel,
                )
            }
            Atom::Eq(a, b) => CNode::Eq(self.elem_term(a)?, self.elem_term(b)?),
            Atom::Le(a, b) => CNode::Le(self.idx_term(a)?, self.idx_term(b)?),
            Atom::Symb(e, i, c) => CNode::Symb(self.elem_term(e)?, self.idx_term(i)?, *c),
        })
    }
}

fn compile(formula: &SnlFormula, model: &SemanticModel) -> Result<Compiled, SnlError> {
    let mut cp = Compiler {
        model,
        names: Vec::new(),
        ids: HashMap::new(),
        elem_slots: HashMap::new(),
        idx_slots: HashMap::new(),
    };
    for e in &model.universe {
        cp.intern(e);
    }
    let extra: Vec<Vec<u32>> = model
        .extra_universes
        .iter()
        .map(|u| u.iter().map(|e| cp.intern(e)).collect())
        .collect();
    let choices: Vec<Vec<u32>> = model
        .choice_sets
        .iter()
        .map(|u| u.iter().map(|e| cp.intern(e)).collect())
        .collect();
    let relations: Vec<CRel> = model
        .relations
        .iter()
        .map(|r| CRel {
            arity: r.arity,
            tuples: r
                .tuples
                .iter()
                .map(|t| t.iter().map(|e| cp.intern(e)).collect())
                .collect(),
        })
        .collect();

    let mut quants = Vec::new();
    for v in &formula.leading_exists {
        let slot = cp.new_elem_slot(&v.name)?;
        quants.push(QuantC {
            exists: true,
            slot: Slot::Elem(slot),
            domain: DomainC::Elems(cp.universe_domain(v.universe, &extra)?),
        });
    }
    for v in &formula.index_vars {
        let slot = cp.new_idx_slot(&v.name)?;
        let count = match v.bound {
            IndexBound::Positions => model.positions,
            IndexBound::PositionsMinus(k) => model.positions.saturating_sub(k),
            IndexBound::Fixed(k) => k,
        };
        quants.push(QuantC {
            exists: false,
            slot: Slot::Idx(slot),
            domain: DomainC::Indices(count),
        });
    }
    for v in &formula.universe_vars {
        let slot = cp.new_elem_slot(&v.name)?;
        quants.push(QuantC {
            exists: false,
            slot: Slot::Elem(slot),
            domain: DomainC::Elems(cp.universe_domain(v.universe, &extra)?),
        });
    }
    for v in &formula.choice_vars {
        let slot = cp.new_elem_slot(&v.name)?;
        let domain = match v.domain {
            ChoiceDomain::Set(j) => choices.get(j).cloned().ok_or(SnlError::MissingReference {
                kind: "choice set",
                index: j,
            })?,
            ChoiceDomain::Universe(u) => cp.universe_domain(u, &extra)?,
        };
        quants.push(QuantC {
            exists: true,
            slot: Slot::Elem(slot),
            domain: DomainC::Elems(domain),
        });
    }
    if cp.elem_slots.len() > 32 {
        return Err(SnlError::TooManyVariables(cp.elem_slots.len()));
    }
    if cp.idx_slots.len() > 32 {
        return Err(SnlError::TooManyVariables(cp.idx_slots.len()));
    }
    let matrix = cp.node(&formula.matrix, &relations)?;
    Ok(Compiled {
        quants,
        matrix,
        relations,
        names: cp.names,
        ids: cp.ids,
        universe_len: model.universe.len() as u32,
        positions: model.positions,
        elem_count: cp.elem_slots.len(),
        idx_count: cp.idx_slots.len(),
    })
}

/// The second-order object as the evaluator sees it. `Partial` is a prefix
/// of a total function, so `last(T)` is the final position even before it
/// is assigned; the other two views are complete.
enum TView<'a> {
    Partial(&'a [Option<u32>]),
    Full(&'a BTreeSet<(u32, u32)>),
    Bits { mask: u32, width: u32 },
}

struct Env {
    elems: Vec<Option<u32>>,
    idxs: Vec<Option<u32>>,
}

impl Env {
    fn new(elem_count: usize, idx_count: usize) -> Env {
        Env {
            elems: vec![None; elem_count],
            idxs: vec![None; idx_count],
        }
    }

    fn bind(&mut self, slot: Slot, value: u32) {
        match slot {
            Slot::Elem(s) => self.elems[s] = Some(value),
            Slot::Idx(s) => self.idxs[s] = Some(value),
        }
    }

    fn unbind(&mut self, slot: Slot) {
        match slot {
            Slot::Elem(s) => self.elems[s] = None,
            Slot::Idx(s) => self.idxs[s] = None,
        }
    }
}

enum RIdx {
    Val(u32),
    /// No value at all: `last` of an empty relation, or offset overflow.
    Nothing,
    Open(u64),
}

enum RElem {
    Val(u32),
    Open(u64),
}

struct Evaluator<'a> {
    c: &'a Compiled,
    budget: u64,
    evals: u64,
}

impl Evaluator<'_> {
    fn eval(&mut self, env: &mut Env, t: &TView) -> Result<Tv, SnlError> {
        self.prefix(0, env, t)
    }

    fn prefix(&mut self, qi: usize, env: &mut Env, t: &TView) -> Result<Tv, SnlError> {
        let Some(q) = self.c.quants.get(qi) else {
            self.evals += 1;
            if self.evals > self.budget {
                return Err(SnlError::BudgetExceeded(self.budget));
            }
            return Ok(self.node(&self.c.matrix, env, t));
        };
        let dom_len = q.domain.len();
        if dom_len == 0 {
            return Ok((if q.exists { Truth::False } else { Truth::True }, 0));
        }
        // A definite verdict with the variable unbound holds under every
        // binding, and an unknown whose mask omits the variable stays
        // unknown under every binding; both make the loop redundant.
        if dom_len >= PRE_EVAL_MIN {
            let pre = self.prefix(qi + 1, env, t)?;
            if pre.0 != Truth::Unknown || pre.1 & q.slot.bit() == 0 {
                return Ok(pre);
            }
        }
        let mut unknown = false;
        let mut mask = 0u64;
        for k in 0..dom_len {
            env.bind(q.slot, q.domain.value(k));
            let result = self.prefix(qi + 1, env, t);
            env.unbind(q.slot);
            let (truth, m) = result?;
            match truth {
                Truth::True if q.exists => return Ok((Truth::True, 0)),
                Truth::False if !q.exists => return Ok((Truth::False, 0)),
                Truth::Unknown => {
                    unknown = true;
                    mask |= m;
                }
                _ => {}
            }
        }
        if unknown {
            Ok((Truth::Unknown, mask))
        } else {
            Ok((if q.exists { Truth::False } else { Truth::True }, 0))
        }
    }

    fn node(&self, n: &CNode, env: &Env, t: &TView) -> Tv {
        match n {
            CNode::T(ci, ce) => self.atom_t(ci, ce, env, t),
            CNode::In(terms, rel) => self.atom_in(terms, *rel, env),
            CNode::Eq(a, b) => match (resolve_elem(a, env), resolve_elem(b, env)) {
                (RElem::Open(x), RElem::Open(y)) => (Truth::Unknown, x | y),
                (RElem::Open(x), _) | (_, RElem::Open(x)) => (Truth::Unknown, x),
                (RElem::Val(x), RElem::Val(y)) => definite(x == y),
            },
            CNode::Le(a, b) => self.atom_le(a, b, env, t),
            CNode::Symb(e, i, c) => self.atom_symb(e, i, *c, env, t),
            CNode::Not(x) => {
                let (truth, mask) = self.node(x, env, t);
                (truth.negate(), mask)
            }
            CNode::And(children) => {
                let mut unknown = false;
                let mut mask = 0;
                for child in children {
                    let (truth, m) = self.node(child, env, t);
                    match truth {
                        Truth::False => return (Truth::False, 0),
                        Truth::Unknown => {
                            unknown = true;
                            mask |= m;
                        }
                        Truth::True => {}
                    }
                }
                if unknown {
                    (Truth::Unknown, mask)
                } else {
                    (Truth::True, 0)
                }
            }
            CNode::Or(children) => {
                let mut unknown = false;
                let mut mask = 0;
                for child in children {
                    let (truth, m) = self.node(child, env, t);
                    match truth {
                        Truth::True => return (Truth::True, 0),
                        Truth::Unknown => {
                            unknown = true;
                            mask |= m;
                        }
                        Truth::False => {}
                    }
                }
                if unknown {
                    (Truth::Unknown, mask)
                } else {
                    (Truth::False, 0)
                }
            }
            CNode::Implies(a, b) => {
                let (ta, ma) = self.node(a, env, t);
                if ta == Truth::False {
                    return (Truth::True, 0);
                }
                let (tb, mb) = self.node(b, env, t);
                if tb == Truth::True {
                    return (Truth::True, 0);
                }
                if ta == Truth::True && tb == Truth::False {
                    return (Truth::False, 0);
                }
                let mut mask = 0;
                if ta == Truth::Unknown {
                    mask |= ma;
                }
                if tb == Truth::Unknown {
                    mask |= mb;
                }
                (Truth::Unknown, mask)
            }
        }
    }

    fn resolve_idx(&self, ci: &CIdx, env: &Env, t: &TView) -> RIdx {
        match ci {
            CIdx::Const(k) => RIdx::Val(*k),
            CIdx::Var(s) => match env.idxs[*s] {
                Some(v) => RIdx::Val(v),
                None => RIdx::Open(Slot::Idx(*s).bit()),
            },
            CIdx::Plus(s, k) => match env.idxs[*s] {
                Some(v) => v.checked_add(*k).map_or(RIdx::Nothing, RIdx::Val),
                None => RIdx::Open(Slot::Idx(*s).bit()),
            },
            CIdx::Last => match t {
                TView::Partial(_) => {
                    if self.c.positions >= 1 {
                        RIdx::Val(self.c.positions)
                    } else {
                        RIdx::Nothing
                    }
                }
                TView::Full(set) => set.iter().next_back().map_or(RIdx::Nothing, |p| {
                    RIdx::Val(p.0)
                }),
                TView::Bits { mask, width } => {
                    if *mask == 0 {
                        RIdx::Nothing
                    } else {
                        RIdx::Val((31 - mask.leading_zeros()) / width + 1)
                    }
                }
            },
        }
    }

    fn in_range(&self, i: u32) -> bool {
        i >= 1 && i <= self.c.positions
    }

    fn atom_t(&self, ci: &CIdx, ce: &CElem, env: &Env, t: &TView) -> Tv {
        let (i, e) = match (self.resolve_idx(ci, env, t), resolve_elem(ce, env)) {
            (RIdx::Nothing, _) => return definite(false),
            (RIdx::Val(i), _) if !self.in_range(i) => return definite(false),
            (_, RElem::Val(e)) if e >= self.c.universe_len => return definite(false),
            (RIdx::Open(x), RElem::Open(y)) => return (Truth::Unknown, x | y),
            (RIdx::Open(x), _) | (_, RElem::Open(x)) => return (Truth::Unknown, x),
            (RIdx::Val(i), RElem::Val(e)) => (i, e),
        };
        match t {
            TView::Partial(assign) => match assign[(i - 1) as usize] {
                Some(v) => definite(v == e),
                None => (Truth::Unknown, 0),
            },
            TView::Full(set) => definite(set.contains(&(i, e))),
            TView::Bits { mask, width } => definite(mask >> ((i - 1) * width + e) & 1 == 1),
        }
    }

    fn atom_in(&self, terms: &[CElem], rel: usize, env: &Env) -> Tv {
        let mut mask = 0;
        let mut tuple = Vec::with_capacity(terms.len());
        for term in terms {
            match resolve_elem(term, env) {
                RElem::Val(v) => tuple.push(v),
                RElem::Open(m) => mask |= m,
            }
        }
        if mask != 0 {
            return (Truth::Unknown, mask);
        }
        definite(self.c.relations[rel].tuples.contains(&tuple))
    }

    fn atom_le(&self, a: &CIdx, b: &CIdx, env: &Env, t: &TView) -> Tv {
        match (self.resolve_idx(a, env, t), self.resolve_idx(b, env, t)) {
            (RIdx::Nothing, _) | (_, RIdx::Nothing) => definite(false),
            (RIdx::Val(i), _) if !self.in_range(i) => definite(false),
            (_, RIdx::Val(j)) if !self.in_range(j) => definite(false),
            (RIdx::Open(x), RIdx::Open(y)) => (Truth::Unknown, x | y),
            (RIdx::Open(x), _) | (_, RIdx::Open(x)) => (Truth::Unknown, x),
            (RIdx::Val(i), RIdx::Val(j)) => definite(i <= j),
        }
    }

    fn atom_symb(&self, e: &CElem, i: &CIdx, c: char, env: &Env, t: &TView) -> Tv {
        match (resolve_elem(e, env), self.resolve_idx(i, env, t)) {
            (_, RIdx::Nothing) => definite(false),
            (RElem::Open(x), RIdx::Open(y)) => (Truth::Unknown, x | y),
            (RElem::Open(x), _) | (_, RIdx::Open(x)) => (Truth::Unknown, x),
            (RElem::Val(e), RIdx::Val(i)) => {
                let name = self.c.names.get(e as usize).map(String::as_str);
                match (name, i) {
                    (Some(name), 1..) => {
                        definite(name.chars().nth((i - 1) as usize) == Some(c))
                    }
                    _ => definite(false),
                }
            }
        }
    }
}

fn resolve_elem(ce: &CElem, env: &Env) -> RElem {
    match ce {
        CElem::Var(s) => match env.elems[*s] {
            Some(v) => RElem::Val(v),
            None => RElem::Open(Slot::Elem(*s).bit()),
        },
        CElem::Lit(id) => RElem::Val(*id),
    }
}

fn witness_pair(c: &Compiled, pos: u32, elem: &str) -> Result<(u32, u32), SnlError> {
    let id = c.ids.get(elem).copied().filter(|id| *id < c.universe_len);
    match id {
        Some(id) if pos >= 1 && pos <= c.positions => Ok((pos, id)),
        _ => Err(SnlError::WitnessOutOfRange {
            position: pos,
            element: elem.to_string(),
        }),
    }
}

fn function_assignment(c: &Compiled, witness: &TRelation) -> Result<Vec<Option<u32>>, SnlError> {
    let mut assign = vec![None; c.positions as usize];
    for (pos, elem) in &witness.0 {
        let (pos, id) = witness_pair(c, *pos, elem)?;
        let slot = &mut assign[(pos - 1) as usize];
        if slot.is_some() {
            return Err(SnlError::NotAFunction { position: pos });
        }
        *slot = Some(id);
    }
    if let Some(k) = assign.iter().position(Option::is_none) {
        return Err(SnlError::NotAFunction {
            position: k as u32 + 1,
        });
    }
    Ok(assign)
}

fn subset_pairs(c: &Compiled, witness: &TRelation) -> Result<BTreeSet<(u32, u32)>, SnlError> {
    witness
        .0
        .iter()
        .map(|(pos, elem)| witness_pair(c, *pos, elem))
        .collect()
}

/// Evaluates the formula against `model` with `witness` as the second-order
/// object. In functional mode the witness must be a total function from
/// positions to the universe.
pub fn eval_snl(
    formula: &SnlFormula,
    model: &SemanticModel,
    witness: &TRelation,
) -> Result<bool, SnlError> {
    model.validate()?;
    let c = compile(formula, model)?;
    let mut ev = Evaluator {
        c: &c,
        budget: EVAL_BUDGET,
        evals: 0,
    };
    let mut env = Env::new(c.elem_count, c.idx_count);
    let truth = if model.functional_t {
        let assign = function_assignment(&c, witness)?;
        ev.eval(&mut env, &TView::Partial(&assign))?.0
    } else {
        let set = subset_pairs(&c, witness)?;
        ev.eval(&mut env, &TView::Full(&set))?.0
    };
    debug_assert_ne!(truth, Truth::Unknown);
    Ok(truth == Truth::True)
}

/// Decides whether any witness satisfies the formula, accounting for the
/// full candidate space.
pub fn decide_snl(formula: &SnlFormula, model: &SemanticModel) -> Result<SnlDecision, SnlError> {
    model.validate()?;
    let c = compile(formula, model)?;
    if model.functional_t {
        decide_functional(&c, EVAL_BUDGET)
    } else {
        decide_subsets(&c, EVAL_BUDGET)
    }
}

fn powc(base: u32, exp: u32) -> Result<u128, SnlError> {
    (base as u128)
        .checked_pow(exp)
        .ok_or(SnlError::CandidateSpaceTooLarge)
}

fn decide_functional(c: &Compiled, budget: u64) -> Result<SnlDecision, SnlError> {
    if c.positions > MAX_POSITIONS {
        return Err(SnlError::CandidateSpaceTooLarge);
    }
    let total = powc(c.universe_len, c.positions)?;
    let mut ev = Evaluator {
        c,
        budget,
        evals: 0,
    };
    let mut env = Env::new(c.elem_count, c.idx_count);
    let mut assign = vec![None; c.positions as usize];
    let (true_count, seen) = search(c, &mut ev, &mut env, &mut assign, 0)?;
    debug_assert_eq!(seen, total);
    Ok(SnlDecision {
        satisfiable: true_count > 0,
        candidates: total,
        evaluations: ev.evals,
    })
}

/// Depth-first assignment of positions, in order. Returns how many total
/// extensions of the current prefix satisfy the formula and how many were
/// settled; a definite verdict under a partial assignment holds for every
/// extension, which keeps the bookkeeping exact without visiting them.
fn search(
    c: &Compiled,
    ev: &mut Evaluator,
    env: &mut Env,
    assign: &mut Vec<Option<u32>>,
    depth: usize,
) -> Result<(u128, u128), SnlError> {
    let truth = {
        let view = TView::Partial(assign);
        ev.eval(env, &view)?.0
    };
    let remaining = c.positions - depth as u32;
    match truth {
        Truth::True => {
            let block = powc(c.universe_len, remaining)?;
            Ok((block, block))
        }
        Truth::False => Ok((0, powc(c.universe_len, remaining)?)),
        Truth::Unknown => {
            // A complete assignment resolves every atom.
            debug_assert!(depth < c.positions as usize);
            if depth >= c.positions as usize {
                return Ok((0, 1));
            }
            let mut true_count = 0u128;
            let mut seen = 0u128;
            for e in 0..c.universe_len {
                assign[depth] = Some(e);
                let below = search(c, ev, env, assign, depth + 1);
                assign[depth] = None;
                let (t, s) = below?;
                true_count += t;
                seen += s;
            }
            Ok((true_count, seen))
        }
    }
}

fn decide_subsets(c: &Compiled, budget: u64) -> Result<SnlDecision, SnlError> {
    let bits = c.positions as u64 * c.universe_len as u64;
    if bits > SUBSET_BITS_LIMIT {
        return Err(SnlError::SubsetTooLarge {
            bits,
            limit: SUBSET_BITS_LIMIT,
        });
    }
    let mut ev = Evaluator {
        c,
        budget,
        evals: 0,
    };
    let mut env = Env::new(c.elem_count, c.idx_count);
    let mut satisfiable = false;
    for mask in 0..1u64 << bits {
        let view = TView::Bits {
            mask: mask as u32,
            width: c.universe_len,
        };
        let truth = ev.eval(&mut env, &view)?.0;
        debug_assert_ne!(truth, Truth::Unknown);
        satisfiable |= truth == Truth::True;
    }
    Ok(SnlDecision {
        satisfiable,
        candidates: 1u128 << bits,
        evaluations: ev.evals,
    })
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::snl::ast::{ChoiceVar, ElemVar, IndexVar};

    fn model(positions: u32, universe: &[&str], functional: bool) -> SemanticModel {
        SemanticModel {
            positions,
            universe: universe.iter().map(|s| s.to_string()).collect(),
            extra_universes: Vec::new(),
            choice_sets: Vec::new(),
            relations: Vec::new(),
            functional_t: functional,
            choice_limit: 2,
            size_param: 0,
            universe_constant: 0,
        }
    }

    fn bare(matrix: Matrix) -> SnlFormula {
        SnlFormula {
            leading_exists: Vec::new(),
            index_vars: Vec::new(),
            universe_vars: Vec::new(),
            choice_vars: Vec::new(),
            matrix,
        }
    }

    fn t_at(i: u32, e: &str) -> Matrix {
        Matrix::Atom(Atom::T(IndexTerm::Const(i), ElemTerm::Lit(e.into())))
    }

    fn pairs(list: &[(u32, &str)]) -> TRelation {
        TRelation::from_pairs(list.iter().map(|(i, e)| (*i, e.to_string())))
    }

    #[test]
    fn single_pair_witness() {
        let m = model(3, &["a", "b"], false);
        let f = bare(t_at(2, "b"));
        assert_eq!(eval_snl(&f, &m, &pairs(&[(2, "b")])), Ok(true));
        assert_eq!(eval_snl(&f, &m, &pairs(&[(2, "a")])), Ok(false));
    }

    #[test]
    fn empty_witness_satisfies_a_tautology() {
        let m = model(2, &["a"], false);
        let f = bare(Matrix::Or(vec![
            t_at(1, "a"),
            Matrix::Not(Box::new(t_at(1, "a"))),
        ]));
        assert_eq!(eval_snl(&f, &m, &TRelation::default()), Ok(true));
    }

    #[test]
    fn last_of_an_empty_witness_holds_of_nothing() {
        let m = model(2, &["a"], false);
        let f = bare(Matrix::Atom(Atom::T(
            IndexTerm::Last,
            ElemTerm::Lit("a".into()),
        )));
        assert_eq!(eval_snl(&f, &m, &TRelation::default()), Ok(false));
    }

    #[test]
    fn last_tracks_the_largest_held_position() {
        let m = model(4, &["a", "b"], false);
        let f = bare(Matrix::Atom(Atom::T(
            IndexTerm::Last,
            ElemTerm::Lit("b".into()),
        )));
        assert_eq!(eval_snl(&f, &m, &pairs(&[(1, "a"), (3, "b")])), Ok(true));
        assert_eq!(eval_snl(&f, &m, &pairs(&[(1, "b"), (3, "a")])), Ok(false));
    }

    #[test]
    fn functional_witnesses_must_be_total() {
        let m = model(2, &["a", "b"], true);
        let f = bare(t_at(1, "a"));
        assert_eq!(
            eval_snl(&f, &m, &pairs(&[(1, "a")])),
            Err(SnlError::NotAFunction { position: 2 })
        );
        assert_eq!(
            eval_snl(&f, &m, &pairs(&[(1, "a"), (1, "b"), (2, "a")])),
            Err(SnlError::NotAFunction { position: 1 })
        );
    }

    #[test]
    fn witnesses_must_stay_inside_the_model() {
        let m = model(2, &["a"], true);
        let f = bare(t_at(1, "a"));
        assert_eq!(
            eval_snl(&f, &m, &pairs(&[(1, "a"), (2, "a"), (5, "a")])),
            Err(SnlError::WitnessOutOfRange {
                position: 5,
                element: "a".into()
            })
        );
        assert_eq!(
            eval_snl(&f, &m, &pairs(&[(1, "q"), (2, "a")])),
            Err(SnlError::WitnessOutOfRange {
                position: 1,
                element: "q".into()
            })
        );
    }

    #[test]
    fn unknown_names_fail_compilation() {
        let m = model(1, &["a"], false);
        let f = bare(Matrix::Atom(Atom::T(
            IndexTerm::Const(1),
            ElemTerm::Var("z".into()),
        )));
        assert_eq!(
            eval_snl(&f, &m, &TRelation::default()),
            Err(SnlError::UnboundVariable("z".into()))
        );
    }

    #[test]
    fn index_comparison_is_reflexive_over_positions() {
        let m = model(3, &["a"], false);
        let mut f = bare(Matrix::Atom(Atom::Le(
            IndexTerm::Var("i".into()),
            IndexTerm::Var("i".into()),
        )));
        f.index_vars.push(IndexVar {
            name: "i".into(),
            bound: IndexBound::Positions,
        });
        assert_eq!(eval_snl(&f, &m, &TRelation::default()), Ok(true));

        let mut strict = bare(Matrix::Atom(Atom::Le(
            IndexTerm::Plus("i".into(), 1),
            IndexTerm::Var("i".into()),
        )));
        strict.index_vars.push(IndexVar {
            name: "i".into(),
            bound: IndexBound::Positions,
        });
        assert_eq!(eval_snl(&strict, &m, &TRelation::default()), Ok(false));
    }

    #[test]
    fn empty_index_ranges_are_vacuous() {
        let m = model(1, &["a"], false);
        let mut f = bare(Matrix::Atom(Atom::Le(
            IndexTerm::Const(2),
            IndexTerm::Const(1),
        )));
        f.index_vars.push(IndexVar {
            name: "i".into(),
            bound: IndexBound::PositionsMinus(1),
        });
        assert_eq!(eval_snl(&f, &m, &TRelation::default()), Ok(true));
    }

    #[test]
    fn choice_variables_range_over_their_set() {
        let mut m = model(1, &["a", "b"], false);
        m.choice_sets = vec![vec!["b".into()]];
        let mut f = bare(Matrix::Atom(Atom::Eq(
            ElemTerm::Var("w".into()),
            ElemTerm::Lit("b".into()),
        )));
        f.choice_vars.push(ChoiceVar {
            name: "w".into(),
            domain: ChoiceDomain::Set(0),
        });
        assert_eq!(eval_snl(&f, &m, &TRelation::default()), Ok(true));

        m.choice_sets = vec![Vec::new()];
        assert_eq!(eval_snl(&f, &m, &TRelation::default()), Ok(false));
    }

    #[test]
    fn symb_reads_element_names() {
        let m = model(1, &["ab", "cd"], false);
        let probe = |i: u32, c: char| {
            let f = bare(Matrix::Atom(Atom::Symb(
                ElemTerm::Lit("cd".into()),
                IndexTerm::Const(i),
                c,
            )));
            eval_snl(&f, &m, &TRelation::default())
        };
        assert_eq!(probe(2, 'd'), Ok(true));
        assert_eq!(probe(2, 'c'), Ok(false));
        assert_eq!(probe(3, 'd'), Ok(false));
        assert_eq!(probe(0, 'c'), Ok(false));
    }

    #[test]
    fn functional_decision_counts_every_assignment() {
        let m = model(2, &["a", "b"], true);
        let d = decide_snl(&bare(t_at(1, "a")), &m).unwrap();
        assert!(d.satisfiable);
        assert_eq!(d.candidates, 4);
        assert!(d.evaluations > 0);
    }

    #[test]
    fn single_valuedness_rules_out_conflicting_requirements() {
        let m = model(1, &["a", "b"], true);
        let f = bare(Matrix::And(vec![t_at(1, "a"), t_at(1, "b")]));
        let d = decide_snl(&f, &m).unwrap();
        assert!(!d.satisfiable);
        assert_eq!(d.candidates, 2);
    }

    #[test]
    fn no_total_functions_exist_over_an_empty_universe() {
        let m = model(2, &[], true);
        let f = bare(Matrix::Atom(Atom::Le(
            IndexTerm::Const(1),
            IndexTerm::Const(1),
        )));
        let d = decide_snl(&f, &m).unwrap();
        assert!(!d.satisfiable);
        assert_eq!(d.candidates, 0);
    }

    #[test]
    fn subset_decision_enumerates_two_to_the_bits() {
        let m = model(2, &["a", "b"], false);
        let d = decide_snl(&bare(t_at(1, "a")), &m).unwrap();
        assert!(d.satisfiable);
        assert_eq!(d.candidates, 16);
        assert_eq!(d.evaluations, 16);

        let never = bare(Matrix::And(vec![
            t_at(1, "a"),
            Matrix::Not(Box::new(t_at(1, "a"))),
        ]));
        assert!(!decide_snl(&never, &m).unwrap().satisfiable);
    }

    #[test]
    fn oversized_subset_spaces_are_rejected() {
        let m = model(11, &["a", "b"], false);
        assert_eq!(
            decide_snl(&bare(t_at(1, "a")), &m),
            Err(SnlError::SubsetTooLarge {
                bits: 22,
                limit: SUBSET_BITS_LIMIT
            })
        );
    }

    #[test]
    fn runaway_functional_searches_hit_the_budget() {
        let m = model(30, &["a", "b", "c", "d"], true);
        let f = bare(t_at(30, "a"));
        let c = compile(&f, &m).unwrap();
        assert_eq!(
            decide_functional(&c, 500),
            Err(SnlError::BudgetExceeded(500))
        );
    }

    #[test]
    fn quantifier_prefix_searches_the_universe() {
        let mut m = model(2, &["a", "b"], true);
        m.relations.push(crate::snl::model::Relation {
            name: "Good".into(),
            arity: 1,
            tuples: [vec!["b".to_string()]].into(),
        });
        // exists x held at position 1 that is Good: forces T(1) = b.
        let mut f = bare(Matrix::And(vec![
            Matrix::Atom(Atom::In(vec![ElemTerm::Var("x".into())], 0)),
            Matrix::Atom(Atom::T(IndexTerm::Const(1), ElemTerm::Var("x".into()))),
        ]));
        f.leading_exists.push(ElemVar {
            name: "x".into(),
            universe: UniverseRef::Main,
        });
        let d = decide_snl(&f, &m).unwrap();
        assert!(d.satisfiable);
        assert_eq!(d.candidates, 4);

        let e = eval_snl(&f, &m, &pairs(&[(1, "b"), (2, "a")]));
        assert_eq!(e, Ok(true));
        let e = eval_snl(&f, &m, &pairs(&[(1, "a"), (2, "b")]));
        assert_eq!(e, Ok(false));
    }

    #[test]
    fn adding_pairs_never_falsifies_positive_formulas() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = model(3, &["a", "b"], false);
        let elems = ["a", "b"];
        for _ in 0..150 {
            let f = bare(random_positive(&mut rng, 3, &elems, 0));
            let mut held: Vec<(u32, &str)> = Vec::new();
            for i in 1..=3u32 {
                for e in elems {
                    if rng.random_bool(0.4) {
                        held.push((i, e));
                    }
                }
            }
            let before = eval_snl(&f, &m, &pairs(&held)).unwrap();
            let missing: Vec<(u32, &str)> = (1..=3u32)
                .flat_map(|i| elems.iter().map(move |e| (i, *e)))
                .filter(|p| !held.contains(p))
                .collect();
            if missing.is_empty() {
                continue;
            }
            let extra = missing[rng.random_range(0..missing.len())];
            held.push(extra);
            let after = eval_snl(&f, &m, &pairs(&held)).unwrap();
            assert!(!(before && !after), "adding {extra:?} falsified {f:?}");
        }
    }

    fn random_positive(rng: &mut ChaCha8Rng, positions: u32, elems: &[&str], depth: u32) -> Matrix {
        if depth >= 3 || rng.random_bool(0.4) {
            return t_at(
                rng.random_range(1..=positions),
                elems[rng.random_range(0..elems.len())],
            );
        }
        let children = (0..rng.random_range(1..=3))
            .map(|_| random_positive(rng, positions, elems, depth + 1))
            .collect();
        if rng.random_bool(0.5) {
            Matrix::And(children)
        } else {
            Matrix::Or(children)
        }
    }
}
