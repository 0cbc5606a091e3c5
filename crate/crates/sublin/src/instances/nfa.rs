//! Nondeterministic finite automata paired with an input length, for the
//! accepting-path search problem.

use std::collections::{BTreeMap, BTreeSet};

use super::{content_lines, parse_field, violation, ParseError, Violation};

/// An NFA over states `1..=num_states` and symbols `0..num_symbols`, together
/// with the length `input_len` of the strings under consideration. The
/// instance asks for a string of that length accepted by the automaton, where
/// acceptance means some prefix of the run (including the empty one) ends in
/// a final state.
///
/// Text format, with `f` and `t` lines in any order and duplicates merged:
///
/// ```text
/// p nfa <num_states> <num_symbols> <input_len> <initial>
/// f <state>
/// t <state> <symbol> <state>
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfaSpec {
    pub num_states: u32,
    pub num_symbols: u32,
    pub input_len: u32,
    pub initial: u32,
    pub finals: BTreeSet<u32>,
    pub transitions: BTreeMap<(u32, u32), BTreeSet<u32>>,
}

impl NfaSpec {
    pub fn successors(&self, state: u32, symbol: u32) -> impl Iterator<Item = u32> + '_ {
        self.transitions.get(&(state, symbol)).into_iter().flatten().copied()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let state_ok = |q: u32| q >= 1 && q <= self.num_states;
        if !state_ok(self.initial) {
            out.push(violation(format!("initial state {} out of range 1..={}", self.initial, self.num_states)));
        }
        for &q in &self.finals {
            if !state_ok(q) {
                out.push(violation(format!("final state {q} out of range 1..={}", self.num_states)));
            }
        }
        for (&(q, a), nexts) in &self.transitions {
            if !state_ok(q) {
                out.push(violation(format!("transition source {q} out of range 1..={}", self.num_states)));
            }
            if a >= self.num_symbols {
                out.push(violation(format!("symbol {a} out of range 0..{}", self.num_symbols)));
            }
            for &next in nexts {
                if !state_ok(next) {
                    out.push(violation(format!("transition target {next} out of range 1..={}", self.num_states)));
                }
            }
            if nexts.is_empty() {
                out.push(violation(format!("empty successor set stored for ({q}, {a})")));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<NfaSpec, ParseError> {
        let mut lines = content_lines(text);
        let (line_no, header) =
            lines.next().ok_or_else(|| ParseError::new(1, "missing `p nfa` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 6 || fields[0] != "p" || fields[1] != "nfa" {
            return Err(ParseError::new(
                line_no,
                format!("expected `p nfa <Q> <S> <n> <q0>`, got `{header}`"),
            ));
        }
        let num_states: u32 = parse_field(line_no, fields[2], "state count")?;
        let num_symbols: u32 = parse_field(line_no, fields[3], "symbol count")?;
        let input_len: u32 = parse_field(line_no, fields[4], "input length")?;
        let initial: u32 = parse_field(line_no, fields[5], "initial state")?;
        if initial == 0 || initial > num_states {
            return Err(ParseError::new(line_no, format!("initial state {initial} out of range 1..={num_states}")));
        }

        let mut finals = BTreeSet::new();
        let mut transitions: BTreeMap<(u32, u32), BTreeSet<u32>> = BTreeMap::new();
        for (line_no, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["f", q] => {
                    let q: u32 = parse_field(line_no, q, "final state")?;
                    if q == 0 || q > num_states {
                        return Err(ParseError::new(line_no, format!("final state {q} out of range 1..={num_states}")));
                    }
                    finals.insert(q);
                }
                ["t", q, a, next] => {
                    let q: u32 = parse_field(line_no, q, "source state")?;
                    let a: u32 = parse_field(line_no, a, "symbol")?;
                    let next: u32 = parse_field(line_no, next, "target state")?;
                    if q == 0 || q > num_states || next == 0 || next > num_states {
                        return Err(ParseError::new(line_no, format!("state out of range 1..={num_states}")));
                    }
                    if a >= num_symbols {
                        return Err(ParseError::new(line_no, format!("symbol {a} out of range 0..{num_symbols}")));
                    }
                    transitions.entry((q, a)).or_default().insert(next);
                }
                _ => {
                    return Err(ParseError::new(
                        line_no,
                        format!("expected `f <q>` or `t <q> <a> <q'>`, got `{line}`"),
                    ));
                }
            }
        }
        Ok(NfaSpec { num_states, num_symbols, input_len, initial, finals, transitions })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!(
            "p nfa {} {} {} {}\n",
            self.num_states, self.num_symbols, self.input_len, self.initial
        );
        for q in &self.finals {
            out.push_str(&format!("f {q}\n"));
        }
        for (&(q, a), nexts) in &self.transitions {
            for next in nexts {
                out.push_str(&format!("t {q} {a} {next}\n"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let text = "p nfa 3 2 4 1\nf 3\nt 1 0 2\nt 1 0 3\nt 2 1 3\n";
        let nfa = NfaSpec::parse(text).unwrap();
        assert_eq!(nfa.num_states, 3);
        assert_eq!(nfa.successors(1, 0).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(nfa.serialize(), text);
        assert!(nfa.validate().is_empty());
    }

    #[test]
    fn line_order_and_duplicates_are_canonicalized() {
        let scrambled = "p nfa 2 1 1 1\nt 1 0 2\nf 2\nt 1 0 2\nf 2\n";
        let nfa = NfaSpec::parse(scrambled).unwrap();
        assert_eq!(nfa.serialize(), "p nfa 2 1 1 1\nf 2\nt 1 0 2\n");
    }

    #[test]
    fn rejects_out_of_range_lines() {
        assert!(NfaSpec::parse("p nfa 2 1 1 3\n").is_err());
        assert!(NfaSpec::parse("p nfa 2 1 1 1\nf 0\n").is_err());
        assert!(NfaSpec::parse("p nfa 2 1 1 1\nt 1 1 2\n").is_err());
        assert!(NfaSpec::parse("p nfa 2 1 1 1\nt 1 0 5\n").is_err());
        assert!(NfaSpec::parse("p nfa 2 1 1 1\nx 1\n").is_err());
    }

    #[test]
    fn no_successors_iterates_empty() {
        let nfa = NfaSpec::parse("p nfa 1 1 1 1\n").unwrap();
        assert_eq!(nfa.successors(1, 0).count(), 0);
    }
}
