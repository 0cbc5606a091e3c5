//! One-way machines, configuration packing, and acceptance formulas.
//!
//! A machine reads `< x >` left to right on a read-only tape and owns a
//! fixed block of work cells over a small alphabet. Configurations pack
//! into fixed-width digit strings; `build_acceptance_formula` enumerates
//! the step relation for a concrete input and produces a formula whose
//! functional witnesses are exactly the accepting runs, padded by a
//! self-loop on the canonical accepting configuration.

use std::collections::BTreeSet;

use super::ast::{
    Atom, ChoiceDomain, ChoiceVar, ElemTerm, ElemVar, IndexBound, IndexTerm, IndexVar, Matrix,
    SnlFormula, UniverseRef,
};
use super::model::{Relation, SemanticModel};
use super::SnlError;

/// Largest universe `build_acceptance_formula` will enumerate.
pub const UNIVERSE_CAP: u64 = 1 << 16;

/// Effect of one transition: target state, symbol written to the current
/// work cell, work-head motion, and whether the input head advances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MachineStep {
    pub state: usize,
    pub write: u8,
    pub work_move: i8,
    pub advance: bool,
}

/// Transition lookup on `(state, input symbol, work symbol)`; `None` halts
/// the machine without accepting.
pub type Delta = fn(usize, u8, u8) -> Option<MachineStep>;

/// One-way machine with a bounded work tape. `packing_room` is the
/// constant `c` in the space bound: configurations must fit in
/// `width(m) + c` digits for inputs of size `m`.
#[derive(Debug, Clone, Copy)]
pub struct OneWayMachine {
    pub name: &'static str,
    pub num_states: usize,
    pub start: usize,
    pub accept: usize,
    pub work_symbols: u8,
    pub work_cells: usize,
    pub packing_room: u32,
    pub delta: Delta,
}

/// Tape symbol at `pos`: the left marker, then the input, then right
/// markers from position `len + 1` on.
pub fn input_symbol(input: &str, pos: usize) -> u8 {
    if pos == 0 {
        b'<'
    } else {
        input.as_bytes().get(pos - 1).copied().unwrap_or(b'>')
    }
}

/// Runs the machine for at most `input.len() + 2` steps and reports
/// acceptance. Undefined transitions and work-head escapes reject.
pub fn simulate(machine: &OneWayMachine, input: &str) -> bool {
    let mut state = machine.start;
    let mut input_pos = 0usize;
    let mut work = vec![0u8; machine.work_cells];
    let mut work_pos = 0usize;
    for _ in 0..input.len() + 2 {
        if state == machine.accept {
            return true;
        }
        let symbol = input_symbol(input, input_pos);
        let current = work.get(work_pos).copied().unwrap_or(0);
        let Some(step) = (machine.delta)(state, symbol, current) else {
            return false;
        };
        state = step.state;
        if let Some(cell) = work.get_mut(work_pos) {
            *cell = step.write;
        }
        let moved = work_pos as isize + step.work_move as isize;
        if moved < 0 || moved as usize >= machine.work_cells.max(1) {
            return false;
        }
        work_pos = moved as usize;
        if step.advance {
            input_pos += 1;
        }
    }
    state == machine.accept
}

/// Digits of `base` needed to index `count` values; zero when one suffices.
pub fn width(base: u32, count: usize) -> u32 {
    let mut digits = 0;
    let mut reach = 1usize;
    while reach < count {
        reach = reach.saturating_mul(base as usize);
        digits += 1;
    }
    digits
}

/// Field layout of packed configurations: state, input position, work
/// position, then the work cells, zero padded to `len` digits total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Packing {
    pub base: u32,
    pub states_w: u32,
    pub ip_w: u32,
    pub wp_w: u32,
    pub cells: usize,
    pub len: u32,
}

impl Packing {
    pub fn plan(machine: &OneWayMachine, m: usize) -> Result<Packing, SnlError> {
        let base = machine.work_symbols as u32;
        if !(2..=10).contains(&base) {
            return Err(SnlError::AlphabetSize(base));
        }
        let states_w = width(base, machine.num_states);
        let ip_w = width(base, m);
        let wp_w = width(base, machine.work_cells.max(1));
        let len = ip_w + machine.packing_room;
        let needed = states_w + ip_w + wp_w + machine.work_cells as u32;
        if needed > len {
            return Err(SnlError::SpaceBoundExceeded {
                needed,
                allowed: len,
            });
        }
        Ok(Packing {
            base,
            states_w,
            ip_w,
            wp_w,
            cells: machine.work_cells,
            len,
        })
    }

    pub fn encode(&self, state: usize, input_pos: usize, work_pos: usize, work: &[u8]) -> String {
        let mut s = String::with_capacity(self.len as usize);
        push_digits(&mut s, state as u64, self.states_w, self.base);
        push_digits(&mut s, input_pos as u64, self.ip_w, self.base);
        push_digits(&mut s, work_pos as u64, self.wp_w, self.base);
        for &w in work {
            s.push((b'0' + w) as char);
        }
        while s.len() < self.len as usize {
            s.push('0');
        }
        s
    }
}

fn push_digits(out: &mut String, value: u64, digits: u32, base: u32) {
    for k in (0..digits).rev() {
        let d = value / (base as u64).pow(k) % base as u64;
        out.push((b'0' + d as u8) as char);
    }
}

fn work_combinations(base: u8, cells: usize) -> Vec<Vec<u8>> {
    let mut combos = vec![Vec::new()];
    for _ in 0..cells {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                (0..base).map(move |sym| {
                    let mut next = prefix.clone();
                    next.push(sym);
                    next
                })
            })
            .collect();
    }
    combos
}

/// The fixed run formula: a witness starts in `Init` (relation 0), ends in
/// `Acc` (relation 1), and every held configuration steps along `Tran`
/// (relation 2) to the configuration held next.
pub fn acceptance_formula() -> SnlFormula {
    let var = |n: &str| ElemTerm::Var(n.into());
    SnlFormula {
        leading_exists: vec![
            ElemVar {
                name: "v0".into(),
                universe: UniverseRef::Main,
            },
            ElemVar {
                name: "v1".into(),
                universe: UniverseRef::Main,
            },
        ],
        index_vars: vec![IndexVar {
            name: "i".into(),
            bound: IndexBound::PositionsMinus(1),
        }],
        universe_vars: vec![ElemVar {
            name: "v".into(),
            universe: UniverseRef::Main,
        }],
        choice_vars: vec![ChoiceVar {
            name: "w".into(),
            domain: ChoiceDomain::Universe(UniverseRef::Main),
        }],
        matrix: Matrix::And(vec![
            Matrix::Atom(Atom::In(vec![var("v0")], 0)),
            Matrix::Atom(Atom::T(IndexTerm::Const(1), var("v0"))),
            Matrix::Atom(Atom::In(vec![var("v1")], 1)),
            Matrix::Atom(Atom::T(IndexTerm::Last, var("v1"))),
            Matrix::Implies(
                Box::new(Matrix::Atom(Atom::T(IndexTerm::Var("i".into()), var("v")))),
                Box::new(Matrix::And(vec![
                    Matrix::Atom(Atom::In(vec![var("v"), var("w")], 2)),
                    Matrix::Atom(Atom::T(IndexTerm::Plus("i".into(), 1), var("w"))),
                ])),
            ),
        ]),
    }
}

/// Builds the acceptance formula and its model for `machine` on `input`,
/// sized to `size_param` tape positions (at least `input.len() + 2`). The
/// witness relation ranges over `size_param + 1` positions; the universe
/// is every packed digit string, so its size stays within
/// `base^(packing_room + 1) * size_param`.
pub fn build_acceptance_formula(
    machine: &OneWayMachine,
    input: &str,
    size_param: u32,
) -> Result<(SnlFormula, SemanticModel), SnlError> {
    let m = size_param as usize;
    if m < input.len() + 2 {
        return Err(SnlError::SizeParamTooSmall {
            m,
            len: input.len(),
        });
    }
    let packing = Packing::plan(machine, m)?;
    let count = (packing.base as u64)
        .checked_pow(packing.len)
        .unwrap_or(u64::MAX);
    if count > UNIVERSE_CAP {
        return Err(SnlError::UniverseTooLarge {
            size: count as usize,
            bound: UNIVERSE_CAP,
        });
    }
    let universe: Vec<String> = (0..count)
        .map(|v| {
            let mut s = String::new();
            push_digits(&mut s, v, packing.len, packing.base);
            s
        })
        .collect();

    let blanks = vec![0u8; machine.work_cells];
    let start = packing.encode(machine.start, 0, 0, &blanks);
    let accept = packing.encode(machine.accept, m - 1, 0, &blanks);

    let mut pairs = BTreeSet::new();
    pairs.insert(vec![accept.clone(), accept.clone()]);
    let head_slots = machine.work_cells.max(1);
    for state in (0..machine.num_states).filter(|s| *s != machine.accept) {
        for ip in 0..m {
            for wp in 0..head_slots {
                for work in work_combinations(machine.work_symbols, machine.work_cells) {
                    let symbol = input_symbol(input, ip);
                    let current = work.get(wp).copied().unwrap_or(0);
                    let Some(step) = (machine.delta)(state, symbol, current) else {
                        continue;
                    };
                    let source = packing.encode(state, ip, wp, &work);
                    let mut next_work = work.clone();
                    if let Some(cell) = next_work.get_mut(wp) {
                        *cell = step.write;
                    }
                    let moved = wp as isize + step.work_move as isize;
                    if moved < 0 || moved as usize >= head_slots {
                        return Err(SnlError::HeadOutOfRange(source));
                    }
                    let next_ip = ip + usize::from(step.advance);
                    if next_ip >= m {
                        return Err(SnlError::HeadOutOfRange(source));
                    }
                    let target = packing.encode(step.state, next_ip, moved as usize, &next_work);
                    if step.state == machine.accept && target != accept {
                        return Err(SnlError::NonCanonicalAccept(target));
                    }
                    pairs.insert(vec![source, target]);
                }
            }
        }
    }

    let relations = vec![
        Relation {
            name: "Init".into(),
            arity: 1,
            tuples: [vec![start]].into(),
        },
        Relation {
            name: "Acc".into(),
            arity: 1,
            tuples: [vec![accept]].into(),
        },
        Relation {
            name: "Tran".into(),
            arity: 2,
            tuples: pairs,
        },
    ];
    let model = SemanticModel {
        positions: size_param + 1,
        universe,
        extra_universes: Vec::new(),
        choice_sets: Vec::new(),
        relations,
        functional_t: true,
        choice_limit: 0,
        size_param: m as u64,
        universe_constant: (packing.base as u64)
            .checked_pow(machine.packing_room + 1)
            .unwrap_or(u64::MAX),
    };
    model.validate()?;
    Ok((acceptance_formula(), model))
}

fn always_step(state: usize, symbol: u8, _work: u8) -> Option<MachineStep> {
    match (state, symbol) {
        (0, b'>') => Some(MachineStep {
            state: 1,
            write: 0,
            work_move: 0,
            advance: false,
        }),
        (0, _) => Some(MachineStep {
            state: 0,
            write: 0,
            work_move: 0,
            advance: true,
        }),
        _ => None,
    }
}

/// Sweeps to the right marker and accepts everything.
pub fn always_accepting() -> OneWayMachine {
    OneWayMachine {
        name: "always",
        num_states: 2,
        start: 0,
        accept: 1,
        work_symbols: 2,
        work_cells: 0,
        packing_room: 1,
        delta: always_step,
    }
}

fn first_one_step(state: usize, symbol: u8, _work: u8) -> Option<MachineStep> {
    let go = |state, advance| {
        Some(MachineStep {
            state,
            write: 0,
            work_move: 0,
            advance,
        })
    };
    match (state, symbol) {
        (0, b'<') => go(1, true),
        (1, b'1') => go(2, true),
        (1, _) => go(4, false),
        (2, b'0') | (2, b'1') => go(2, true),
        (2, b'>') => go(3, false),
        _ => None,
    }
}

/// Accepts binary inputs whose first symbol is `1`.
pub fn first_symbol_one() -> OneWayMachine {
    OneWayMachine {
        name: "first-one",
        num_states: 5,
        start: 0,
        accept: 3,
        work_symbols: 2,
        work_cells: 0,
        packing_room: 3,
        delta: first_one_step,
    }
}

fn parity_step(state: usize, symbol: u8, work: u8) -> Option<MachineStep> {
    let scan = |write| {
        Some(MachineStep {
            state: 0,
            write,
            work_move: 0,
            advance: true,
        })
    };
    match (state, symbol) {
        (0, b'<') | (0, b'0') => scan(work),
        (0, b'1') => scan(1 - work),
        (0, b'>') => Some(MachineStep {
            state: if work == 0 { 1 } else { 2 },
            write: work,
            work_move: 0,
            advance: false,
        }),
        _ => None,
    }
}

/// Accepts binary inputs with an even number of `1`s, tracked in one work
/// cell.
pub fn even_parity() -> OneWayMachine {
    OneWayMachine {
        name: "parity",
        num_states: 3,
        start: 0,
        accept: 1,
        work_symbols: 2,
        work_cells: 1,
        packing_room: 3,
        delta: parity_step,
    }
}

/// A bundled machine paired with a reference decider for its language.
pub type ToyMachine = (OneWayMachine, fn(&str) -> bool);

/// The bundled machines paired with reference deciders for their
/// languages.
pub fn toy_machines() -> Vec<ToyMachine> {
    vec![
        (always_accepting(), |_| true),
        (first_symbol_one(), |x| x.starts_with('1')),
        (even_parity(), |x| {
            x.bytes().filter(|b| *b == b'1').count() % 2 == 0
        }),
    ]
}
