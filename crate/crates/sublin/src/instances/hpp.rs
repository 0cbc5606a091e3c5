//! Square weight matrices asked for a maximum-value index sequence of a fixed
//! length from a fixed start index.

use super::{content_lines, parse_field, violation, ParseError, Violation};

/// An `dim x dim` matrix with entries in `1..=dim`, a sequence length
/// `length_d` in `1..=dim`, and a start index. A candidate solution is a
/// sequence of `length_d` indices beginning at `start`; its value is the sum
/// of the matrix entries along consecutive pairs.
///
/// Text format:
///
/// ```text
/// p hpp <dim> <length_d> <start>
/// <dim rows of dim integers>
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HppInstance {
    pub dim: u32,
    pub length_d: u32,
    pub start: u32,
    pub matrix: Vec<Vec<u32>>,
}

impl HppInstance {
    pub fn entry(&self, from: u32, to: u32) -> u32 {
        self.matrix[(from - 1) as usize][(to - 1) as usize]
    }

    /// Value of an index sequence, or `None` when the sequence has the wrong
    /// length, the wrong start, or an out-of-range index. A length-1 sequence
    /// has value 0.
    pub fn sequence_value(&self, seq: &[u32]) -> Option<u64> {
        if seq.len() != self.length_d as usize || seq.first() != Some(&self.start) {
            return None;
        }
        if seq.iter().any(|&i| i == 0 || i > self.dim) {
            return None;
        }
        Some(seq.windows(2).map(|p| self.entry(p[0], p[1]) as u64).sum())
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.length_d == 0 || self.length_d > self.dim {
            out.push(violation(format!("sequence length {} out of range 1..={}", self.length_d, self.dim)));
        }
        if self.start == 0 || self.start > self.dim {
            out.push(violation(format!("start index {} out of range 1..={}", self.start, self.dim)));
        }
        if self.matrix.len() != self.dim as usize {
            out.push(violation(format!("matrix has {} rows, expected {}", self.matrix.len(), self.dim)));
        }
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != self.dim as usize {
                out.push(violation(format!("matrix row {} has {} entries, expected {}", i + 1, row.len(), self.dim)));
            }
            for (j, &value) in row.iter().enumerate() {
                if value == 0 || value > self.dim {
                    out.push(violation(format!("entry ({}, {}) is {value}, out of range 1..={}", i + 1, j + 1, self.dim)));
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<HppInstance, ParseError> {
        let mut lines = content_lines(text);
        let (line_no, header) =
            lines.next().ok_or_else(|| ParseError::new(1, "missing `p hpp` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 5 || fields[0] != "p" || fields[1] != "hpp" {
            return Err(ParseError::new(
                line_no,
                format!("expected `p hpp <dim> <d> <start>`, got `{header}`"),
            ));
        }
        let dim: u32 = parse_field(line_no, fields[2], "matrix dimension")?;
        let length_d: u32 = parse_field(line_no, fields[3], "sequence length")?;
        let start: u32 = parse_field(line_no, fields[4], "start index")?;
        if length_d == 0 || length_d > dim {
            return Err(ParseError::new(line_no, format!("sequence length {length_d} out of range 1..={dim}")));
        }
        if start == 0 || start > dim {
            return Err(ParseError::new(line_no, format!("start index {start} out of range 1..={dim}")));
        }

        let mut matrix = Vec::with_capacity(dim as usize);
        for (line_no, line) in lines {
            if matrix.len() == dim as usize {
                return Err(ParseError::new(line_no, "more matrix rows than the header declares"));
            }
            let mut row = Vec::with_capacity(dim as usize);
            for token in line.split_whitespace() {
                let value: u32 = parse_field(line_no, token, "matrix entry")?;
                if value == 0 || value > dim {
                    return Err(ParseError::new(line_no, format!("entry {value} out of range 1..={dim}")));
                }
                row.push(value);
            }
            if row.len() != dim as usize {
                return Err(ParseError::new(line_no, format!("row has {} entries, expected {dim}", row.len())));
            }
            matrix.push(row);
        }
        if matrix.len() != dim as usize {
            return Err(ParseError::new(
                text.lines().count().max(1),
                format!("header declares {dim} matrix rows, found {}", matrix.len()),
            ));
        }
        Ok(HppInstance { dim, length_d, start, matrix })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("p hpp {} {} {}\n", self.dim, self.length_d, self.start);
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let text = "p hpp 2 2 1\n2 1\n1 2\n";
        let inst = HppInstance::parse(text).unwrap();
        assert_eq!(inst.entry(1, 1), 2);
        assert_eq!(inst.serialize(), text);
        assert!(inst.validate().is_empty());
    }

    #[test]
    fn sequence_values() {
        let inst = HppInstance::parse("p hpp 3 3 2\n1 2 3\n3 2 1\n2 2 2\n").unwrap();
        assert_eq!(inst.sequence_value(&[2, 1, 3]), Some(3 + 3));
        assert_eq!(inst.sequence_value(&[2, 2, 2]), Some(2 + 2));
        assert_eq!(inst.sequence_value(&[1, 2, 3]), None);
        assert_eq!(inst.sequence_value(&[2, 1]), None);
        assert_eq!(inst.sequence_value(&[2, 4, 1]), None);
    }

    #[test]
    fn length_one_sequence_has_value_zero() {
        let inst = HppInstance::parse("p hpp 1 1 1\n1\n").unwrap();
        assert_eq!(inst.sequence_value(&[1]), Some(0));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(HppInstance::parse("p hpp 2 3 1\n1 1\n1 1\n").is_err());
        assert!(HppInstance::parse("p hpp 2 2 0\n1 1\n1 1\n").is_err());
        assert!(HppInstance::parse("p hpp 2 2 1\n1 1 1\n1 1\n").is_err());
        assert!(HppInstance::parse("p hpp 2 2 1\n1 3\n1 1\n").is_err());
        assert!(HppInstance::parse("p hpp 2 2 1\n1 1\n").is_err());
        assert!(HppInstance::parse("p hpp 2 2 1\n1 1\n1 1\n1 1\n").is_err());
    }
}
