//! 3-CNF formulas and the DIMACS `cnf` format.

use crate::format::{is_comment, ParseError};

use super::ReductionError;

/// A 3-CNF formula over variables `1..=num_vars`; literal `-i` negates `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    /// Checks literal ranges only; see [`CnfFormula::check_occurrences`].
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self, ReductionError> {
        for (j, c) in clauses.iter().enumerate() {
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(ReductionError::LiteralOutOfRange {
                        clause: j + 1,
                        literal: lit,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Every variable occurs exactly twice positively and twice negated.
    pub fn check_occurrences(&self) -> Result<(), ReductionError> {
        let mut pos = vec![0usize; self.num_vars + 1];
        let mut neg = vec![0usize; self.num_vars + 1];
        for &lit in self.clauses.iter().flatten() {
            if lit > 0 {
                pos[lit as usize] += 1;
            } else {
                neg[lit.unsigned_abs() as usize] += 1;
            }
        }
        match (1..=self.num_vars).find(|&i| pos[i] != 2 || neg[i] != 2) {
            Some(var) => Err(ReductionError::Occurrences {
                var,
                positive: pos[var],
                negative: neg[var],
            }),
            None => Ok(()),
        }
    }

    /// `assignment[i]` is the value of `x_{i+1}`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|c| {
                c.iter()
                    .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
            })
    }

    /// First satisfying assignment in binary counting order (`x_1` is the
    /// low bit). Exponential; for small fixtures only.
    pub fn solve_brute(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "brute-force SAT is limited to 31 variables");
        (0u64..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_satisfied_by(a))
    }

    /// Parses `p cnf <vars> <clauses>` followed by zero-terminated clauses of
    /// exactly three literals. Clauses may span lines.
    pub fn parse_dimacs(text: &str) -> Result<Self, ReductionError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        let mut current_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if is_comment(trimmed) || trimmed == "%" {
                continue;
            }
            let mut toks = trimmed.split_whitespace();
            if trimmed.starts_with('p') {
                if header.is_some() {
                    return Err(ParseError::new(line, "duplicate header").into());
                }
                let (Some("p"), Some("cnf"), Some(n), Some(m), None) =
                    (toks.next(), toks.next(), toks.next(), toks.next(), toks.next())
                else {
                    return Err(ParseError::new(line, "expected `p cnf <vars> <clauses>`").into());
                };
                let parse = |t: &str, what: &str| {
                    t.parse::<usize>()
                        .map_err(|_| ParseError::new(line, format!("invalid {what} count `{t}`")))
                };
                header = Some((parse(n, "variable")?, parse(m, "clause")?, line));
                continue;
            }
            let Some((n, _, _)) = header else {
                return Err(ParseError::new(line, "clause before the `p cnf` header").into());
            };
            for tok in toks {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| ParseError::new(line, format!("invalid literal `{tok}`")))?;
                if lit == 0 {
                    if current.len() != 3 {
                        return Err(ParseError::new(
                            line,
                            format!("clause has {} literals, expected 3", current.len()),
                        )
                        .into());
                    }
                    clauses.push([current[0], current[1], current[2]]);
                    current.clear();
                    continue;
                }
                if lit.unsigned_abs() as usize > n {
                    return Err(ParseError::new(line, format!("literal {lit} exceeds {n} variables")).into());
                }
                if current.is_empty() {
                    current_line = line;
                }
                current.push(lit);
            }
        }
        let Some((n, m, header_line)) = header else {
            return Err(ParseError::new(1, "missing `p cnf` header").into());
        };
        if !current.is_empty() {
            return Err(ParseError::new(current_line, "clause is not zero-terminated").into());
        }
        if clauses.len() != m {
            return Err(ParseError::new(
                header_line,
                format!("header declares {m} clauses, found {}", clauses.len()),
            )
            .into());
        }
        CnfFormula::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }
}
