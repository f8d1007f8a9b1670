//! OR-Library wt-file parsing, optima files, and the canonical
//! single-instance text format.

use thiserror::Error;

use super::SmtwtpInstance;

/// Number of instances per OR-Library wt set.
pub const ORLIB_SET_SIZE: usize = 125;

#[derive(Debug, Error)]
pub enum SmtwtpError {
    #[error("p/w/d length mismatch: {p}/{w}/{d}")]
    LengthMismatch { p: usize, w: usize, d: usize },
    #[error("job {job} has zero processing time")]
    ZeroProcessingTime { job: usize },
    #[error("schedule is not a permutation of the jobs")]
    InvalidPermutation,
    #[error("token {offset}: expected a non-negative integer, got {token:?}")]
    BadToken { offset: usize, token: String },
    #[error("expected {expected} tokens, found {found}")]
    TokenCount { expected: usize, found: usize },
    #[error("line {line}: {message}")]
    BadLine { line: usize, message: String },
}

fn tokens(text: &str) -> Result<Vec<u64>, SmtwtpError> {
    text.split_whitespace()
        .enumerate()
        .map(|(offset, tok)| {
            tok.parse::<u64>().map_err(|_| SmtwtpError::BadToken {
                offset,
                token: tok.to_string(),
            })
        })
        .collect()
}

/// Parse an OR-Library wt file: 125 consecutive instances, each encoded as
/// `n` processing times, then `n` weights, then `n` due dates.
pub fn parse_orlib(text: &str, n: usize) -> Result<Vec<SmtwtpInstance>, SmtwtpError> {
    let values = tokens(text)?;
    let expected = ORLIB_SET_SIZE * 3 * n;
    if values.len() != expected {
        return Err(SmtwtpError::TokenCount { expected, found: values.len() });
    }
    values
        .chunks_exact(3 * n)
        .map(|chunk| {
            SmtwtpInstance::new(
                chunk[..n].to_vec(),
                chunk[n..2 * n].to_vec(),
                chunk[2 * n..].to_vec(),
            )
        })
        .collect()
}

/// Serialize one instance back to the wt-file token sequence.
pub fn serialize_orlib(inst: &SmtwtpInstance) -> Vec<u64> {
    let mut out = Vec::with_capacity(3 * inst.n());
    out.extend_from_slice(inst.processing_times());
    out.extend_from_slice(inst.weights());
    out.extend_from_slice(inst.due_dates());
    out
}

/// Parse a file of 125 known optimal objective values, in instance order.
pub fn load_optima(text: &str) -> Result<Vec<u64>, SmtwtpError> {
    let values = tokens(text)?;
    if values.len() != ORLIB_SET_SIZE {
        return Err(SmtwtpError::TokenCount {
            expected: ORLIB_SET_SIZE,
            found: values.len(),
        });
    }
    Ok(values)
}

/// Canonical single-instance format: line 1 is `n`, then three lines of `n`
/// integers (processing times, weights, due dates).
pub fn parse_single(text: &str) -> Result<SmtwtpInstance, SmtwtpError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (line, header) = lines.next().ok_or(SmtwtpError::BadLine {
        line: 1,
        message: "empty input".into(),
    })?;
    let n: usize = header.trim().parse().map_err(|_| SmtwtpError::BadLine {
        line: line + 1,
        message: format!("expected job count, got {header:?}"),
    })?;

    let mut row = |name: &str| -> Result<Vec<u64>, SmtwtpError> {
        let (line, text) = lines.next().ok_or(SmtwtpError::BadLine {
            line: 0,
            message: format!("missing {name} line"),
        })?;
        let values = tokens(text).map_err(|e| SmtwtpError::BadLine {
            line: line + 1,
            message: e.to_string(),
        })?;
        if values.len() != n {
            return Err(SmtwtpError::BadLine {
                line: line + 1,
                message: format!("expected {n} {name} values, found {}", values.len()),
            });
        }
        Ok(values)
    };

    let p = row("processing time")?;
    let w = row("weight")?;
    let d = row("due date")?;
    SmtwtpInstance::new(p, w, d)
}

/// Inverse of [`parse_single`].
pub fn format_single(inst: &SmtwtpInstance) -> String {
    let join = |xs: &[u64]| {
        xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    format!(
        "{}\n{}\n{}\n{}\n",
        inst.n(),
        join(inst.processing_times()),
        join(inst.weights()),
        join(inst.due_dates())
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orlib_text(n: usize) -> String {
        // 125 synthetic instances in wt-file layout.
        let mut toks: Vec<u64> = Vec::new();
        for i in 0..ORLIB_SET_SIZE as u64 {
            toks.extend((0..n as u64).map(|j| 1 + (i + j) % 100)); // p
            toks.extend((0..n as u64).map(|j| (i * 7 + j) % 10)); // w
            toks.extend((0..n as u64).map(|j| (i * 13 + j * 3) % 400)); // d
        }
        toks.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn parse_orlib_reads_125_instances() {
        let text = orlib_text(40);
        let instances = parse_orlib(&text, 40).unwrap();
        assert_eq!(instances.len(), 125);
        assert!(instances.iter().all(|i| i.n() == 40));
    }

    #[test]
    fn parse_orlib_round_trips() {
        let text = orlib_text(40);
        let instances = parse_orlib(&text, 40).unwrap();
        let reserialized: Vec<u64> =
            instances.iter().flat_map(serialize_orlib).collect();
        let original: Vec<u64> = tokens(&text).unwrap();
        assert_eq!(reserialized, original);
    }

    #[test]
    fn parse_orlib_rejects_empty_and_bad_counts() {
        assert!(matches!(
            parse_orlib("", 40),
            Err(SmtwtpError::TokenCount { .. })
        ));
        assert!(matches!(
            parse_orlib("1 2 3", 40),
            Err(SmtwtpError::TokenCount { .. })
        ));
    }

    #[test]
    fn parse_orlib_names_the_bad_token() {
        let text = "1 2 x";
        match parse_orlib(text, 40) {
            Err(SmtwtpError::BadToken { offset: 2, token }) => assert_eq!(token, "x"),
            other => panic!("expected BadToken, got {other:?}"),
        }
    }

    #[test]
    fn load_optima_requires_exactly_125_values() {
        let good = (0..125).map(|i| i.to_string()).collect::<Vec<_>>().join("\n");
        assert_eq!(load_optima(&good).unwrap().len(), 125);
        assert!(load_optima("1 2 3").is_err());
    }

    #[test]
    fn single_instance_round_trips() {
        let inst = SmtwtpInstance::new(vec![2, 3, 1], vec![1, 2, 3], vec![1, 4, 9]).unwrap();
        let text = format_single(&inst);
        assert_eq!(parse_single(&text).unwrap(), inst);
    }

    #[test]
    fn single_instance_reports_line_errors() {
        assert!(parse_single("").is_err());
        assert!(parse_single("3\n1 2\n1 1 1\n0 0 0\n").is_err());
    }
}
