//! PROFILE text format.
//!
//! ```text
//! # comment lines start with '#'
//! 3 3          <- header: n m
//! 1 0 1 2      <- multiplicity, then elements from highest to lowest
//! 2 2 0 1
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ranking::{Permutation, Profile, ProfileEntry};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} '{token}'")))
}

pub fn parse_profile(text: &str) -> Result<Profile> {
    let mut header: Option<(usize, u64, usize)> = None;
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some((n, _, _)) = header else {
            if tokens.len() != 2 {
                return Err(parse_err(line_no, "header must be 'n m'"));
            }
            let n: usize = parse_number(tokens[0], line_no, "element count")?;
            let m: u64 = parse_number(tokens[1], line_no, "voter count")?;
            if n == 0 {
                return Err(parse_err(line_no, "element count must be positive"));
            }
            header = Some((n, m, line_no));
            continue;
        };
        if tokens.len() != n + 1 {
            return Err(parse_err(
                line_no,
                format!("element count mismatch: expected {n} elements, found {}", tokens.len().saturating_sub(1)),
            ));
        }
        let multiplicity: u64 = parse_number(tokens[0], line_no, "multiplicity")?;
        if multiplicity == 0 {
            return Err(parse_err(line_no, "zero multiplicity"));
        }
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for tok in &tokens[1..] {
            let e: usize = parse_number(tok, line_no, "element")?;
            if e >= n {
                return Err(parse_err(line_no, format!("element {e} out of range")));
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(parse_err(line_no, "element repeated"));
            }
            order.push(e);
        }
        entries.push(ProfileEntry {
            ranking: Permutation::from_order(order)?,
            multiplicity,
        });
    }
    let (_, m, header_line) = header.ok_or_else(|| parse_err(1, "missing header"))?;
    if entries.is_empty() {
        return Err(parse_err(header_line, "no rankings"));
    }
    let total: u64 = entries.iter().map(|e| e.multiplicity).sum();
    if total != m {
        return Err(parse_err(
            header_line,
            format!("multiplicity sum mismatch (header {m}, entries {total})"),
        ));
    }
    Profile::new(entries)
}

pub fn serialize_profile(profile: &Profile) -> String {
    let mut out = format!("{} {}\n", profile.n(), profile.m());
    for entry in profile.entries() {
        write!(out, "{}", entry.multiplicity).unwrap();
        for e in entry.ranking.order() {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example() {
        let p = parse_profile("3 3\n1 0 1 2\n2 2 0 1\n").unwrap();
        assert_eq!((p.n(), p.m()), (3, 3));
        assert_eq!(p, Profile::from_orders([(1, vec![0, 1, 2]), (2, vec![2, 0, 1])]).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_profile("# family\n\n2 1\n# voter\n1 1 0\n").unwrap();
        assert_eq!(p.entries()[0].ranking.order(), &[1, 0]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_profile("3 1\n1 0 0 2\n").unwrap_err();
        assert_eq!(e.to_string(), "element repeated, line 2");
        let e = parse_profile("3 4\n1 0 1 2\n2 2 0 1\n").unwrap_err();
        assert!(e.to_string().starts_with("multiplicity sum mismatch"), "{e}");
        let e = parse_profile("3 1\n0 0 1 2\n").unwrap_err();
        assert_eq!(e.to_string(), "zero multiplicity, line 2");
        let e = parse_profile("3 1\n1 0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_profile("3 1\n1 0 1 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert!(parse_profile("").is_err());
        assert!(parse_profile("3 0\n").is_err());
        assert!(parse_profile("x 1\n").is_err());
    }

    #[test]
    fn serialize_round_trip() {
        let p = Profile::from_orders([(4, vec![3, 1, 0, 2]), (1, vec![0, 1, 2, 3])]).unwrap();
        let text = serialize_profile(&p);
        assert_eq!(text, "4 5\n4 3 1 0 2\n1 0 1 2 3\n");
        assert_eq!(parse_profile(&text).unwrap(), p);
    }
}
