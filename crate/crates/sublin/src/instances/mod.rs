//! Problem instances, their text formats, and their size parameters.
//!
//! Six instance families are supported. Each family has a line-oriented text
//! format (described on the family type), a validator that reports every
//! broken invariant, and one or more applicable size parameters. Indices are
//! 1-based throughout: variables, vertices, rows, columns, states, and matrix
//! dimensions all start at 1, and positions inside strings do too.
//!
//! Text formats accept `#`-prefixed comment lines and blank lines everywhere
//! except in the cover format, whose alphabet contains `#` and whose lines are
//! significant. Parsing then serializing then parsing again is a fixed point
//! for every family.

mod cnf;
mod digraph;
mod gen;
mod hpp;
mod lp;
mod nfa;
mod uock;

pub use cnf::{Clause, Cnf2Formula, Literal};
pub use digraph::Digraph;
pub use gen::{gen_random, GenError, GenSpec};
pub(crate) use gen::{token_string, token_width};
pub use hpp::HppInstance;
pub use lp::{LpRow, LpSystem};
pub use nfa::NfaSpec;
pub use uock::UockInstance;

use std::fmt;
use thiserror::Error;

/// Parse failure with the 1-based line number of the offending input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// One broken instance invariant, in human-readable form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn violation(message: impl Into<String>) -> Violation {
    Violation(message.into())
}

/// Instance family tag; doubles as the text-format tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Cnf,
    Digraph,
    Lp,
    Nfa,
    Uock,
    Hpp,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Cnf, Family::Digraph, Family::Lp, Family::Nfa, Family::Uock, Family::Hpp];

    /// Format tag used in file headers and on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            Family::Cnf => "cnf",
            Family::Digraph => "dstcon",
            Family::Lp => "lp",
            Family::Nfa => "nfa",
            Family::Uock => "uock",
            Family::Hpp => "hpp",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag() == tag)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The size parameters an instance can be measured by.
///
/// `NfaProduct` is the state-count x alphabet-size x length product, and
/// `BitLength` is the length of the canonical text encoding (see
/// [`ParamInstance::encoding_len`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SizeParamKind {
    Vars,
    Clauses,
    Vertices,
    Edges,
    Rows,
    Cols,
    NfaProduct,
    Elements,
    BitLength,
}

impl SizeParamKind {
    pub fn name(self) -> &'static str {
        match self {
            SizeParamKind::Vars => "m_vbl",
            SizeParamKind::Clauses => "m_cls",
            SizeParamKind::Vertices => "m_ver",
            SizeParamKind::Edges => "m_edg",
            SizeParamKind::Rows => "m_row",
            SizeParamKind::Cols => "m_col",
            SizeParamKind::NfaProduct => "m_nfa",
            SizeParamKind::Elements => "m_elm",
            SizeParamKind::BitLength => "bitlength",
        }
    }
}

impl fmt::Display for SizeParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Requested size parameter does not apply to the instance's family.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("size parameter {kind} does not apply to {family} instances")]
pub struct ParamMismatch {
    pub kind: SizeParamKind,
    pub family: Family,
}

/// Instance payload, one variant per family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceData {
    Cnf(Cnf2Formula),
    Digraph(Digraph),
    Lp(LpSystem),
    Nfa(NfaSpec),
    Uock(UockInstance),
    Hpp(HppInstance),
}

impl InstanceData {
    pub fn family(&self) -> Family {
        match self {
            InstanceData::Cnf(_) => Family::Cnf,
            InstanceData::Digraph(_) => Family::Digraph,
            InstanceData::Lp(_) => Family::Lp,
            InstanceData::Nfa(_) => Family::Nfa,
            InstanceData::Uock(_) => Family::Uock,
            InstanceData::Hpp(_) => Family::Hpp,
        }
    }
}

/// An instance bundled with the size parameter it is measured by.
///
/// The declared parameter defaults per family (`m_vbl`, `m_ver`, `m_row`,
/// `m_nfa`, `m_elm`, `m_col` respectively) and can be overridden with any
/// applicable kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamInstance {
    pub data: InstanceData,
    pub declared_param: SizeParamKind,
}

impl ParamInstance {
    pub fn new(data: InstanceData) -> ParamInstance {
        let declared_param = default_param(data.family());
        ParamInstance { data, declared_param }
    }

    pub fn with_param(data: InstanceData, kind: SizeParamKind) -> Result<ParamInstance, ParamMismatch> {
        let family = data.family();
        if !applicable_params(family).contains(&kind) {
            return Err(ParamMismatch { kind, family });
        }
        Ok(ParamInstance { data, declared_param: kind })
    }

    pub fn family(&self) -> Family {
        self.data.family()
    }

    /// Parses `text` in the family's format; the declared parameter is the
    /// family default.
    pub fn parse(family: Family, text: &str) -> Result<ParamInstance, ParseError> {
        let data = match family {
            Family::Cnf => InstanceData::Cnf(Cnf2Formula::parse(text)?),
            Family::Digraph => InstanceData::Digraph(Digraph::parse(text)?),
            Family::Lp => InstanceData::Lp(LpSystem::parse(text)?),
            Family::Nfa => InstanceData::Nfa(NfaSpec::parse(text)?),
            Family::Uock => InstanceData::Uock(UockInstance::parse(text)?),
            Family::Hpp => InstanceData::Hpp(HppInstance::parse(text)?),
        };
        Ok(ParamInstance::new(data))
    }

    pub fn serialize(&self) -> String {
        match &self.data {
            InstanceData::Cnf(x) => x.serialize(),
            InstanceData::Digraph(x) => x.serialize(),
            InstanceData::Lp(x) => x.serialize(),
            InstanceData::Nfa(x) => x.serialize(),
            InstanceData::Uock(x) => x.serialize(),
            InstanceData::Hpp(x) => x.serialize(),
        }
    }

    /// All structural invariant violations; empty means the instance is valid.
    pub fn validate(&self) -> Vec<Violation> {
        match &self.data {
            InstanceData::Cnf(x) => x.validate(),
            InstanceData::Digraph(x) => x.validate(),
            InstanceData::Lp(x) => x.validate(),
            InstanceData::Nfa(x) => x.validate(),
            InstanceData::Uock(x) => x.validate(),
            InstanceData::Hpp(x) => x.validate(),
        }
    }

    /// Structural violations plus the family's bounded-shape check at `cap`:
    /// literal occurrences per variable for formulas, vertex degree for
    /// digraphs, nonzeros per column for constraint systems. The cap is
    /// ignored for the other families.
    pub fn validate_capped(&self, cap: u32) -> Vec<Violation> {
        let mut out = self.validate();
        match &self.data {
            InstanceData::Cnf(x) => out.extend(x.occurrence_violations(cap)),
            InstanceData::Digraph(x) => out.extend(x.degree_violations(cap)),
            InstanceData::Lp(x) => out.extend(x.column_violations(cap)),
            _ => {}
        }
        out
    }

    pub fn size_param(&self, kind: SizeParamKind) -> Result<u64, ParamMismatch> {
        if kind == SizeParamKind::BitLength {
            return Ok(self.encoding_len());
        }
        let value = match (&self.data, kind) {
            (InstanceData::Cnf(x), SizeParamKind::Vars) => x.num_vars as u64,
            (InstanceData::Cnf(x), SizeParamKind::Clauses) => x.clauses.len() as u64,
            (InstanceData::Digraph(x), SizeParamKind::Vertices) => x.num_vertices as u64,
            (InstanceData::Digraph(x), SizeParamKind::Edges) => x.edges.len() as u64,
            (InstanceData::Lp(x), SizeParamKind::Rows) => x.rows.len() as u64,
            (InstanceData::Lp(x), SizeParamKind::Cols) => x.num_cols as u64,
            (InstanceData::Nfa(x), SizeParamKind::NfaProduct) => {
                x.num_states as u64 * x.num_symbols as u64 * x.input_len as u64
            }
            (InstanceData::Uock(x), SizeParamKind::Elements) => x.pieces.len() as u64,
            (InstanceData::Hpp(x), SizeParamKind::Cols) => x.dim as u64,
            _ => return Err(ParamMismatch { kind, family: self.family() }),
        };
        Ok(value)
    }

    pub fn declared_size(&self) -> u64 {
        self.size_param(self.declared_param)
            .expect("declared parameter is checked at construction")
    }

    /// Length of the canonical text encoding, in symbols.
    ///
    /// For NFA instances the string-length parameter is part of the problem
    /// input in unary, so it contributes `input_len` symbols on top of the
    /// serialized text; every other family is measured by its serialization
    /// alone. Every applicable size parameter is at most the square of this
    /// length for instances produced by the generators in this crate.
    pub fn encoding_len(&self) -> u64 {
        let base = self.serialize().len() as u64;
        match &self.data {
            InstanceData::Nfa(x) => base + x.input_len as u64,
            _ => base,
        }
    }

    pub fn size_params(&self) -> Vec<(SizeParamKind, u64)> {
        applicable_params(self.family())
            .iter()
            .map(|&kind| (kind, self.size_param(kind).unwrap()))
            .collect()
    }
}

/// Size parameters applicable to a family, default first.
pub fn applicable_params(family: Family) -> &'static [SizeParamKind] {
    match family {
        Family::Cnf => &[SizeParamKind::Vars, SizeParamKind::Clauses, SizeParamKind::BitLength],
        Family::Digraph => &[SizeParamKind::Vertices, SizeParamKind::Edges, SizeParamKind::BitLength],
        Family::Lp => &[SizeParamKind::Rows, SizeParamKind::Cols, SizeParamKind::BitLength],
        Family::Nfa => &[SizeParamKind::NfaProduct, SizeParamKind::BitLength],
        Family::Uock => &[SizeParamKind::Elements, SizeParamKind::BitLength],
        Family::Hpp => &[SizeParamKind::Cols, SizeParamKind::BitLength],
    }
}

pub fn default_param(family: Family) -> SizeParamKind {
    applicable_params(family)[0]
}

/// Iterator over non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

pub(crate) fn parse_field<T: std::str::FromStr>(
    line_no: usize,
    token: &str,
    what: &str,
) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line_no, format!("bad {what} `{token}`")))
}
