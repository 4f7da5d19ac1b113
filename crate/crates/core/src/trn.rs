//! The TRN text format.
//!
//! ```text
//! 3
//! 111
//! ```
//!
//! Line 1 is the vertex count in decimal. Line 2 holds `n(n-1)/2` characters
//! over `{0, 1}`, one per pair `(i, j)`, `i < j`, in lexicographic order; `1`
//! means `i → j`. The writer always ends with a single newline; the reader
//! accepts a missing final newline, CRLF line endings, and a missing second
//! line when there are no pairs.

use crate::error::{Error, Result};
use crate::tournament::{pair_count, Tournament};

fn parse_error(line: usize, position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        position,
        message: message.into(),
    }
}

pub fn parse_trn(text: &str) -> Result<Tournament> {
    let mut lines: Vec<&str> = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .collect();
    if text.ends_with('\n') {
        lines.pop();
    }

    let header = lines.first().copied().unwrap_or("");
    if header.is_empty() {
        return Err(parse_error(1, 1, "expected a vertex count"));
    }
    if let Some(pos) = header.find(|c: char| !c.is_ascii_digit()) {
        let found = header[pos..].chars().next().unwrap_or_default();
        return Err(parse_error(
            1,
            header[..pos].chars().count() + 1,
            format!("expected a decimal digit, found {found:?}"),
        ));
    }
    let n: usize = header
        .parse()
        .map_err(|_| parse_error(1, 1, format!("vertex count {header} is too large")))?;
    let expected = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or_else(|| parse_error(1, 1, format!("vertex count {n} is too large")))?;

    let body = match lines.get(1) {
        Some(body) => *body,
        None if expected == 0 => "",
        None => {
            return Err(parse_error(
                2,
                1,
                format!("expected {expected} bits, found no bit line"),
            ))
        }
    };
    if lines.len() > 2 {
        return Err(parse_error(3, 1, "unexpected content after the bit line"));
    }

    let mut bits = Vec::with_capacity(expected.min(body.len()));
    for (idx, c) in body.chars().enumerate() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            other => {
                return Err(parse_error(
                    2,
                    idx + 1,
                    format!("expected '0' or '1', found {other:?}"),
                ))
            }
        }
    }
    if bits.len() != expected {
        return Err(parse_error(
            2,
            bits.len().min(expected) + 1,
            format!("expected {expected} bits, found {}", bits.len()),
        ));
    }
    debug_assert_eq!(bits.len(), pair_count(n));
    Ok(Tournament::from_bit_iter(n, bits))
}

pub fn write_trn(t: &Tournament) -> String {
    let mut out = String::with_capacity(pair_count(t.n()) + 24);
    out.push_str(&t.n().to_string());
    out.push('\n');
    out.extend(t.orientation_bits().map(|b| if b { '1' } else { '0' }));
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{random_tournament, transitive_tournament};
    use proptest::prelude::*;

    #[test]
    fn worked_encodings() {
        assert_eq!(parse_trn("3\n111").unwrap(), transitive_tournament(3));
        assert_eq!(write_trn(&transitive_tournament(3)), "3\n111\n");
        assert_eq!(write_trn(&transitive_tournament(0)), "0\n\n");
        assert_eq!(parse_trn("0\n\n").unwrap(), transitive_tournament(0));
        assert_eq!(parse_trn("0\n").unwrap(), transitive_tournament(0));
        assert_eq!(parse_trn("1").unwrap().n(), 1);
        // 0→1, 1→2, 2→0: pair (0,2) is the clear bit
        let cyc = parse_trn("3\n101\n").unwrap();
        assert!(cyc.beats(0, 1) && cyc.beats(1, 2) && cyc.beats(2, 0));
        assert_eq!(parse_trn("3\r\n111\r\n").unwrap(), transitive_tournament(3));
    }

    #[test]
    fn short_bit_line() {
        let err = parse_trn("3\n11").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                position: 3,
                message: "expected 3 bits, found 2".into()
            }
        );
        assert!(err.to_string().contains("expected 3 bits, found 2"));
    }

    #[test]
    fn malformed_inputs() {
        let at = |text: &str| match parse_trn(text) {
            Err(Error::Parse { line, position, .. }) => (line, position),
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        };
        assert_eq!(at(""), (1, 1));
        assert_eq!(at("x\n"), (1, 1));
        assert_eq!(at("3a\n111"), (1, 2));
        assert_eq!(at("-3\n111"), (1, 1));
        assert_eq!(at("3\n1x1"), (2, 2));
        assert_eq!(at("3\n1111"), (2, 4));
        assert_eq!(at("3"), (2, 1));
        assert_eq!(at("3\n111\n0"), (3, 1));
        assert_eq!(at("99999999999999999999\n"), (1, 1));
        assert_eq!(at("9999999999\n"), (1, 1));
    }

    #[test]
    fn random_round_trips() {
        for seed in 0..200 {
            let t = random_tournament((seed % 65) as usize, seed);
            assert_eq!(parse_trn(&write_trn(&t)).unwrap(), t);
        }
    }

    proptest! {
        #[test]
        fn write_parse_is_canonical(n in 0usize..40, seed: u64, crlf: bool, trailing: bool) {
            let t = random_tournament(n, seed);
            let canonical = write_trn(&t);
            let mut doc = canonical.clone();
            if !trailing { doc.pop(); }
            if crlf { doc = doc.replace('\n', "\r\n"); }
            let parsed = parse_trn(&doc).unwrap();
            prop_assert_eq!(&parsed, &t);
            prop_assert_eq!(write_trn(&parsed), canonical);
        }
    }
}
