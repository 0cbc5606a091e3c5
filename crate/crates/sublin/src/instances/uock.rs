//! Cover instances: a target string and an ordered list of pieces, asked for
//! an index-increasing concatenation that spells the target.

use super::{violation, ParseError, Violation};

const ALPHABET: [char; 3] = ['0', '1', '#'];

fn alphabet_ok(s: &str) -> bool {
    s.chars().all(|c| ALPHABET.contains(&c))
}

/// A target string over `{0, 1, #}` and pieces over the same alphabet. A
/// solution is a strictly increasing sequence of piece indices whose
/// concatenation equals the target. Instances are expected to satisfy the
/// unique-occurrence promise: every piece that occurs in the target at all
/// occurs there exactly once ([`UockInstance::validate`] checks it).
///
/// Text format, with every line significant because `#` belongs to the
/// alphabet:
///
/// ```text
/// line 1:       the target (may be empty)
/// line 2:       the number of pieces
/// lines 3..:    one piece per line, each nonempty
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UockInstance {
    pub target: String,
    pub pieces: Vec<String>,
}

impl UockInstance {
    /// Number of start positions where `piece` occurs in the target;
    /// overlapping occurrences all count.
    pub fn occurrence_count(&self, piece: &str) -> usize {
        let w = self.target.as_bytes();
        let p = piece.as_bytes();
        if p.is_empty() || p.len() > w.len() {
            return 0;
        }
        (0..=w.len() - p.len()).filter(|&i| &w[i..i + p.len()] == p).count()
    }

    /// Whether `indices` (1-based) is strictly increasing and concatenates to
    /// the target.
    pub fn is_cover(&self, indices: &[u32]) -> bool {
        if indices.windows(2).any(|pair| pair[0] >= pair[1]) {
            return false;
        }
        if indices.iter().any(|&i| i == 0 || i as usize > self.pieces.len()) {
            return false;
        }
        let mut rest = self.target.as_str();
        for &i in indices {
            let piece = &self.pieces[(i - 1) as usize];
            match rest.strip_prefix(piece.as_str()) {
                Some(tail) => rest = tail,
                None => return false,
            }
        }
        rest.is_empty()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if !alphabet_ok(&self.target) {
            out.push(violation("target contains a symbol outside {0, 1, #}"));
        }
        for (i, piece) in self.pieces.iter().enumerate() {
            if piece.is_empty() {
                out.push(violation(format!("piece {} is empty", i + 1)));
            } else if !alphabet_ok(piece) {
                out.push(violation(format!("piece {} contains a symbol outside {{0, 1, #}}", i + 1)));
            } else {
                let count = self.occurrence_count(piece);
                if count > 1 {
                    out.push(violation(format!("piece {} occurs {count} times in the target", i + 1)));
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<UockInstance, ParseError> {
        let lines: Vec<&str> = text.lines().collect();
        if lines.len() < 2 {
            return Err(ParseError::new(lines.len().max(1), "expected a target line and a piece-count line"));
        }
        let target = lines[0];
        if !alphabet_ok(target) {
            return Err(ParseError::new(1, "target contains a symbol outside {0, 1, #}"));
        }
        let count: usize = lines[1]
            .parse()
            .map_err(|_| ParseError::new(2, format!("bad piece count `{}`", lines[1])))?;
        if lines.len() != 2 + count {
            return Err(ParseError::new(
                lines.len().min(2 + count),
                format!("expected {count} piece lines, found {}", lines.len() - 2),
            ));
        }
        let mut pieces = Vec::with_capacity(count);
        for (i, piece) in lines[2..].iter().enumerate() {
            if piece.is_empty() {
                return Err(ParseError::new(3 + i, "empty piece"));
            }
            if !alphabet_ok(piece) {
                return Err(ParseError::new(3 + i, "piece contains a symbol outside {0, 1, #}"));
            }
            pieces.push((*piece).to_string());
        }
        Ok(UockInstance { target: target.to_string(), pieces })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n{}\n", self.target, self.pieces.len());
        for piece in &self.pieces {
            out.push_str(piece);
            out.push('\n');
        }
        out
    }
}
