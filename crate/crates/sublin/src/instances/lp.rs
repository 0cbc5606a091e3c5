//! Systems of linear inequalities with at most two variables per row,
//! asked for a {0,1} assignment.

use num_traits::Zero;

use super::{content_lines, parse_field, violation, ParseError, Violation};
use crate::rational::{format_rat, parse_rat, Rat};

/// One inequality `sum of coef * x_col >= bound` with at most two nonzero
/// coefficients; entries are sorted by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpRow {
    pub entries: Vec<(u32, Rat)>,
    pub bound: Rat,
}

impl LpRow {
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        let mut sum = Rat::zero();
        for (col, coef) in &self.entries {
            if assignment[(col - 1) as usize] {
                sum += coef;
            }
        }
        sum >= self.bound
    }
}

/// A rational inequality system `A x >= b` over columns `1..=num_cols`, each
/// row holding at most two nonzero entries. The bound vector has one entry
/// per row.
///
/// Text format:
///
/// ```text
/// p lp <num_rows> <num_cols>
/// r <col>:<p>/<q> [<col>:<p>/<q>] >= <p>/<q>     (one line per row)
/// ```
///
/// A per-column cap on the number of nonzero entries is not part of the type;
/// it is checked with [`LpSystem::column_violations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSystem {
    pub num_cols: u32,
    pub rows: Vec<LpRow>,
}

impl LpSystem {
    pub fn new(num_cols: u32, rows: Vec<LpRow>) -> LpSystem {
        LpSystem { num_cols, rows }
    }

    pub fn num_rows(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Number of rows with a nonzero entry in each column, indexed by `col - 1`.
    pub fn column_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.num_cols as usize];
        for row in &self.rows {
            for (col, _) in &row.entries {
                counts[(col - 1) as usize] += 1;
            }
        }
        counts
    }

    pub fn max_column_count(&self) -> u32 {
        self.column_counts().into_iter().max().unwrap_or(0)
    }

    pub fn column_violations(&self, cap: u32) -> Vec<Violation> {
        self.column_counts()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > cap)
            .map(|(i, &c)| {
                violation(format!("column {} has {} nonzero entries, cap is {}", i + 1, c, cap))
            })
            .collect()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let row_no = i + 1;
            if row.entries.len() > 2 {
                out.push(violation(format!("row {row_no} has {} nonzero entries, maximum is 2", row.entries.len())));
            }
            for (col, coef) in &row.entries {
                if *col == 0 || *col > self.num_cols {
                    out.push(violation(format!("row {row_no}: column {col} out of range 1..={}", self.num_cols)));
                }
                if coef.is_zero() {
                    out.push(violation(format!("row {row_no}: zero coefficient stored for column {col}")));
                }
            }
            for pair in row.entries.windows(2) {
                if pair[0].0 >= pair[1].0 {
                    out.push(violation(format!("row {row_no}: entries not sorted by distinct column")));
                }
            }
        }
        out
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_cols as usize
            && self.rows.iter().all(|r| r.satisfied_by(assignment))
    }

    pub fn parse(text: &str) -> Result<LpSystem, ParseError> {
        let mut lines = content_lines(text);
        let (line_no, header) =
            lines.next().ok_or_else(|| ParseError::new(1, "missing `p lp` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "p" || fields[1] != "lp" {
            return Err(ParseError::new(line_no, format!("expected `p lp <m> <n>`, got `{header}`")));
        }
        let num_rows: usize = parse_field(line_no, fields[2], "row count")?;
        let num_cols: u32 = parse_field(line_no, fields[3], "column count")?;

        let mut rows = Vec::with_capacity(num_rows);
        for (line_no, line) in lines {
            if rows.len() == num_rows {
                return Err(ParseError::new(line_no, "more row lines than the header declares"));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() < 3 || tokens[0] != "r" || tokens[tokens.len() - 2] != ">=" {
                return Err(ParseError::new(
                    line_no,
                    format!("expected `r <entries> >= <p>/<q>`, got `{line}`"),
                ));
            }
            let bound = parse_rat(tokens[tokens.len() - 1])
                .map_err(|e| ParseError::new(line_no, e))?;
            let entry_tokens = &tokens[1..tokens.len() - 2];
            if entry_tokens.len() > 2 {
                return Err(ParseError::new(
                    line_no,
                    format!("row has {} entries, maximum is 2", entry_tokens.len()),
                ));
            }
            let mut entries: Vec<(u32, Rat)> = Vec::new();
            for token in entry_tokens {
                let (col, coef) = token.split_once(':').ok_or_else(|| {
                    ParseError::new(line_no, format!("expected `<col>:<p>/<q>`, got `{token}`"))
                })?;
                let col: u32 = parse_field(line_no, col, "column")?;
                if col == 0 || col > num_cols {
                    return Err(ParseError::new(line_no, format!("column {col} out of range 1..={num_cols}")));
                }
                let coef = parse_rat(coef).map_err(|e| ParseError::new(line_no, e))?;
                if coef.is_zero() {
                    return Err(ParseError::new(line_no, format!("zero coefficient for column {col}")));
                }
                if entries.iter().any(|(c, _)| *c == col) {
                    return Err(ParseError::new(line_no, format!("column {col} appears twice in one row")));
                }
                entries.push((col, coef));
            }
            entries.sort_by_key(|(c, _)| *c);
            rows.push(LpRow { entries, bound });
        }
        if rows.len() != num_rows {
            return Err(ParseError::new(
                text.lines().count().max(1),
                format!("header declares {num_rows} rows, found {}", rows.len()),
            ));
        }
        Ok(LpSystem { num_cols, rows })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("p lp {} {}\n", self.rows.len(), self.num_cols);
        for row in &self.rows {
            out.push('r');
            for (col, coef) in &row.entries {
                out.push_str(&format!(" {col}:{}", format_rat(coef)));
            }
            out.push_str(&format!(" >= {}\n", format_rat(&row.bound)));
        }
        out
    }
}
