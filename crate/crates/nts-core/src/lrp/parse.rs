//! Canonical LRP text format.
//!
//! Header line `n m alpha rounding`, then `n` demand lines, `m` lines of
//! `capacity opening_cost`, then either `MATRIX` followed by `(n+m)` rows of
//! `(n+m)` reals, or `COORDS` followed by `(n+m)` lines of `x y`. The
//! `rounding` field is `none` or `nearest-integer` and applies to
//! coordinate-derived distances. `alpha` may be given as `auto` to use the
//! default penalty weight.

use thiserror::Error;

use super::{default_alpha, LrpInstance};

#[derive(Debug, Error)]
pub enum LrpError {
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { iter: text.lines().enumerate() }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), LrpError> {
        for (i, line) in self.iter.by_ref() {
            let trimmed = line.trim();
            if !trimmed.is_empty() && !trimmed.starts_with('#') {
                return Ok((i + 1, trimmed));
            }
        }
        Err(LrpError::Parse { line: 0, message: format!("unexpected end of input, expected {what}") })
    }
}

fn parse_f64(line: usize, tok: &str) -> Result<f64, LrpError> {
    tok.parse::<f64>().map_err(|_| LrpError::Parse {
        line,
        message: format!("expected a number, got {tok:?}"),
    })
}

pub fn parse_lrp(text: &str) -> Result<LrpInstance, LrpError> {
    let mut lines = Lines::new(text);

    let (hline, header) = lines.next("header")?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(LrpError::Parse {
            line: hline,
            message: "header must be \"n m alpha rounding\"".into(),
        });
    }
    let n: usize = fields[0].parse().map_err(|_| LrpError::Parse {
        line: hline,
        message: format!("bad client count {:?}", fields[0]),
    })?;
    let m: usize = fields[1].parse().map_err(|_| LrpError::Parse {
        line: hline,
        message: format!("bad depot count {:?}", fields[1]),
    })?;
    let alpha = if fields[2] == "auto" {
        None
    } else {
        Some(parse_f64(hline, fields[2])?)
    };
    let round = match fields[3] {
        "none" => false,
        "nearest-integer" => true,
        other => {
            return Err(LrpError::Parse {
                line: hline,
                message: format!("rounding must be none or nearest-integer, got {other:?}"),
            })
        }
    };

    let mut demand = Vec::with_capacity(n);
    for _ in 0..n {
        let (l, line) = lines.next("a demand line")?;
        demand.push(parse_f64(l, line)?);
    }

    let mut capacity = Vec::with_capacity(m);
    let mut opening_cost = Vec::with_capacity(m);
    for _ in 0..m {
        let (l, line) = lines.next("a depot line")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(LrpError::Parse {
                line: l,
                message: "depot line must be \"capacity opening_cost\"".into(),
            });
        }
        capacity.push(parse_f64(l, toks[0])?);
        opening_cost.push(parse_f64(l, toks[1])?);
    }

    let dim = n + m;
    let (l, mode) = lines.next("MATRIX or COORDS")?;
    match mode {
        "MATRIX" => {
            let mut travel = Vec::with_capacity(dim * dim);
            for _ in 0..dim {
                let (l, line) = lines.next("a matrix row")?;
                let row: Result<Vec<f64>, _> =
                    line.split_whitespace().map(|t| parse_f64(l, t)).collect();
                let row = row?;
                if row.len() != dim {
                    return Err(LrpError::Parse {
                        line: l,
                        message: format!("matrix row has {} entries, expected {dim}", row.len()),
                    });
                }
                travel.extend(row);
            }
            let alpha = alpha.unwrap_or_else(|| default_alpha(&travel));
            LrpInstance::new(demand, capacity, opening_cost, travel, alpha)
        }
        "COORDS" => {
            let mut coords = Vec::with_capacity(dim);
            for _ in 0..dim {
                let (l, line) = lines.next("a coordinate line")?;
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(LrpError::Parse {
                        line: l,
                        message: "coordinate line must be \"x y\"".into(),
                    });
                }
                coords.push((parse_f64(l, toks[0])?, parse_f64(l, toks[1])?));
            }
            LrpInstance::from_coords(demand, capacity, opening_cost, &coords, alpha, round)
        }
        other => Err(LrpError::Parse {
            line: l,
            message: format!("expected MATRIX or COORDS, got {other:?}"),
        }),
    }
}

/// Serialize in MATRIX form; `parse_lrp(serialize_lrp(i))` reproduces `i`.
pub fn serialize_lrp(inst: &LrpInstance) -> String {
    let dim = inst.n() + inst.m();
    let mut out = format!("{} {} {} none\n", inst.n(), inst.m(), inst.alpha());
    for d in inst.demand() {
        out.push_str(&format!("{d}\n"));
    }
    for j in 0..inst.m() {
        out.push_str(&format!("{} {}\n", inst.capacity()[j], inst.opening_cost()[j]));
    }
    out.push_str("MATRIX\n");
    for a in 0..dim {
        let row: Vec<String> = (0..dim).map(|b| inst.travel(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Sidecar file of best-known / lower-bound values: one `instance-id value`
/// pair per line. Blank lines and `#` comments are skipped.
pub fn load_reference_values(text: &str) -> Result<Vec<(String, f64)>, LrpError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(LrpError::Parse {
                line: i + 1,
                message: "expected \"instance-id value\"".into(),
            });
        }
        out.push((toks[0].to_string(), parse_f64(i + 1, toks[1])?));
    }
    Ok(out)
}
