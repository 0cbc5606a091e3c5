//! 2CNF formulas with clause width 1 or 2.

use std::collections::BTreeSet;
use std::fmt;

use super::{content_lines, parse_field, violation, ParseError, Violation};

/// A propositional literal over a 1-based variable index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: u32,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: u32) -> Literal {
        Literal { var, positive: true }
    }

    pub fn neg(var: u32) -> Literal {
        Literal { var, positive: false }
    }

    pub fn negated(self) -> Literal {
        Literal { var: self.var, positive: !self.positive }
    }

    /// Signed integer form: `v` for the positive literal, `-v` for the negation.
    pub fn code(self) -> i64 {
        if self.positive { self.var as i64 } else { -(self.var as i64) }
    }

    pub fn from_code(code: i64) -> Option<Literal> {
        let var = u32::try_from(code.unsigned_abs()).ok()?;
        if code == 0 {
            return None;
        }
        Some(Literal { var, positive: code > 0 })
    }

    pub fn satisfied_by(self, assignment: &[bool]) -> bool {
        assignment[(self.var - 1) as usize] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// A clause of one or two literals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    pub first: Literal,
    pub second: Option<Literal>,
}

impl Clause {
    pub fn unit(l: Literal) -> Clause {
        Clause { first: l, second: None }
    }

    pub fn pair(a: Literal, b: Literal) -> Clause {
        Clause { first: a, second: Some(b) }
    }

    pub fn width(&self) -> usize {
        if self.second.is_some() { 2 } else { 1 }
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        std::iter::once(self.first).chain(self.second)
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.literals().any(|l| l.satisfied_by(assignment))
    }

    /// Literal order fixed to (ascending variable, positive before negative).
    fn canonical(self) -> Clause {
        match self.second {
            Some(b) => {
                let key = |l: Literal| (l.var, !l.positive);
                if key(b) < key(self.first) {
                    Clause { first: b, second: Some(self.first) }
                } else {
                    self
                }
            }
            None => self,
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.second {
            Some(b) => write!(f, "{} {} 0", self.first, b),
            None => write!(f, "{} 0", self.first),
        }
    }
}

/// A 2CNF formula: a clause list over variables `1..=num_vars`.
///
/// Text format:
///
/// ```text
/// p cnf <num_vars> <num_clauses>
/// <lit> [<lit>] 0        (one line per clause)
/// ```
///
/// An occurrence cap is not part of the type; a formula where every variable
/// occurs (as either literal) at most k times is checked with
/// [`Cnf2Formula::occurrence_violations`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cnf2Formula {
    pub num_vars: u32,
    pub clauses: Vec<Clause>,
}

impl Cnf2Formula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Cnf2Formula {
        Cnf2Formula { num_vars, clauses }
    }

    /// Number of occurrences of each variable (positive and negative literals
    /// both count), indexed by `var - 1`.
    pub fn occurrence_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.num_vars as usize];
        for clause in &self.clauses {
            for lit in clause.literals() {
                counts[(lit.var - 1) as usize] += 1;
            }
        }
        counts
    }

    pub fn max_occurrence(&self) -> u32 {
        self.occurrence_counts().into_iter().max().unwrap_or(0)
    }

    pub fn occurrence_violations(&self, cap: u32) -> Vec<Violation> {
        self.occurrence_counts()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > cap)
            .map(|(i, &c)| violation(format!("variable {} occurs {} times, cap is {}", i + 1, c, cap)))
            .collect()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, clause) in self.clauses.iter().enumerate() {
            for lit in clause.literals() {
                if lit.var == 0 || lit.var > self.num_vars {
                    out.push(violation(format!(
                        "clause {}: variable {} out of range 1..={}",
                        i + 1,
                        lit.var,
                        self.num_vars
                    )));
                }
            }
        }
        out
    }

    /// True when `assignment` (indexed by `var - 1`) satisfies every clause.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars as usize
            && self.clauses.iter().all(|c| c.satisfied_by(assignment))
    }

    /// Removes duplicate clauses and unused variables.
    ///
    /// Clause literals are put in canonical order, duplicate clauses keep
    /// their first position, and surviving variables are renumbered densely in
    /// ascending order. Satisfiability is preserved, and afterwards every
    /// variable occurs in some clause, so `num_vars <= 2 * clauses.len()`.
    pub fn normalize(&self) -> Cnf2Formula {
        let mut seen = BTreeSet::new();
        let mut kept = Vec::new();
        for clause in &self.clauses {
            let canonical = clause.canonical();
            if seen.insert(canonical) {
                kept.push(canonical);
            }
        }
        let used: BTreeSet<u32> = kept.iter().flat_map(|c| c.literals().map(|l| l.var)).collect();
        let mut renumber = vec![0u32; self.num_vars as usize + 1];
        for (new_idx, &old) in used.iter().enumerate() {
            renumber[old as usize] = new_idx as u32 + 1;
        }
        let remap = |l: Literal| Literal { var: renumber[l.var as usize], positive: l.positive };
        let clauses = kept
            .into_iter()
            .map(|c| Clause { first: remap(c.first), second: c.second.map(remap) })
            .collect();
        Cnf2Formula { num_vars: used.len() as u32, clauses }
    }

    pub fn parse(text: &str) -> Result<Cnf2Formula, ParseError> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing `p cnf` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
            return Err(ParseError::new(line_no, format!("expected `p cnf <n> <m>`, got `{header}`")));
        }
        let num_vars: u32 = parse_field(line_no, fields[2], "variable count")?;
        let num_clauses: usize = parse_field(line_no, fields[3], "clause count")?;

        let mut clauses = Vec::with_capacity(num_clauses);
        for (line_no, line) in lines {
            if clauses.len() == num_clauses {
                return Err(ParseError::new(line_no, "more clause lines than the header declares"));
            }
            let mut lits = Vec::new();
            let mut terminated = false;
            for token in line.split_whitespace() {
                if terminated {
                    return Err(ParseError::new(line_no, "tokens after the terminating 0"));
                }
                let code: i64 = parse_field(line_no, token, "literal")?;
                if code == 0 {
                    terminated = true;
                    continue;
                }
                let lit = Literal::from_code(code)
                    .ok_or_else(|| ParseError::new(line_no, format!("bad literal `{token}`")))?;
                if lit.var > num_vars {
                    return Err(ParseError::new(
                        line_no,
                        format!("variable {} out of range 1..={num_vars}", lit.var),
                    ));
                }
                lits.push(lit);
            }
            if !terminated {
                return Err(ParseError::new(line_no, "clause line is not terminated by 0"));
            }
            match lits.len() {
                1 => clauses.push(Clause::unit(lits[0])),
                2 => clauses.push(Clause::pair(lits[0], lits[1])),
                0 => return Err(ParseError::new(line_no, "empty clause")),
                w => return Err(ParseError::new(line_no, format!("clause has width {w}, maximum is 2"))),
            }
        }
        if clauses.len() != num_clauses {
            return Err(ParseError::new(
                text.lines().count().max(1),
                format!("header declares {num_clauses} clauses, found {}", clauses.len()),
            ));
        }
        Ok(Cnf2Formula { num_vars, clauses })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            out.push_str(&clause.to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(v: u32) -> Literal {
        Literal::pos(v)
    }

    fn neg(v: u32) -> Literal {
        Literal::neg(v)
    }

    #[test]
    fn parses_units_and_pairs() {
        let f = Cnf2Formula::parse("p cnf 3 2\n1 -2 0\n3 0\n").unwrap();
        assert_eq!(f.num_vars, 3);
        assert_eq!(f.clauses, vec![Clause::pair(pos(1), neg(2)), Clause::unit(pos(3))]);
    }

    #[test]
    fn rejects_wide_clause() {
        let err = Cnf2Formula::parse("p cnf 3 1\n1 2 -3 0\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("width 3"), "{}", err.message);
    }

    #[test]
    fn rejects_out_of_range_variable() {
        let err = Cnf2Formula::parse("p cnf 2 1\n3 0\n").unwrap_err();
        assert!(err.message.contains("out of range"), "{}", err.message);
    }

    #[test]
    fn rejects_clause_count_mismatch() {
        assert!(Cnf2Formula::parse("p cnf 2 2\n1 0\n").is_err());
        assert!(Cnf2Formula::parse("p cnf 2 0\n1 0\n").is_err());
    }

    #[test]
    fn serialize_parse_round_trip() {
        let f = Cnf2Formula::parse("p cnf 4 3\n1 -2 0\n-3 4 0\n2 0\n").unwrap();
        assert_eq!(Cnf2Formula::parse(&f.serialize()).unwrap(), f);
    }

    #[test]
    fn normalize_drops_duplicate_clauses() {
        let c = Clause::pair(pos(1), pos(2));
        let f = Cnf2Formula::new(2, vec![c, c]);
        assert_eq!(f.normalize(), Cnf2Formula::new(2, vec![c]));
    }

    #[test]
    fn normalize_detects_reordered_duplicates() {
        let f = Cnf2Formula::new(2, vec![Clause::pair(pos(1), pos(2)), Clause::pair(pos(2), pos(1))]);
        assert_eq!(f.normalize().clauses.len(), 1);
    }

    #[test]
    fn normalize_renumbers_densely() {
        let f = Cnf2Formula::new(3, vec![Clause::pair(pos(1), pos(3))]);
        assert_eq!(f.normalize(), Cnf2Formula::new(2, vec![Clause::pair(pos(1), pos(2))]));
    }

    #[test]
    fn normalize_drops_unused_variable_of_tautology() {
        let f = Cnf2Formula::new(2, vec![Clause::pair(pos(2), neg(2))]);
        assert_eq!(f.normalize(), Cnf2Formula::new(1, vec![Clause::pair(pos(1), neg(1))]));
    }

    #[test]
    fn normalized_formula_has_no_unused_vars() {
        let f = Cnf2Formula::new(9, vec![Clause::pair(pos(4), neg(7)), Clause::unit(pos(9))]);
        let n = f.normalize();
        assert!(n.num_vars as usize <= 2 * n.clauses.len());
        assert!(n.occurrence_counts().iter().all(|&c| c >= 1));
    }

    #[test]
    fn occurrence_counts_include_both_polarities() {
        let f = Cnf2Formula::new(2, vec![Clause::pair(pos(1), neg(1)), Clause::unit(pos(2))]);
        assert_eq!(f.occurrence_counts(), vec![2, 1]);
        assert_eq!(f.max_occurrence(), 2);
        assert!(f.occurrence_violations(2).is_empty());
        assert_eq!(f.occurrence_violations(1).len(), 1);
    }
}
