//! File formats: the plain-text matrix format (first line n, then n rows of
//! `re+imi` entries) and CSV input for doubly stochastic matrices.

use num_complex::Complex64;
use specnorm_core::linalg::ComplexMatrix;
use specnorm_core::majorization::DoublyStochastic;

use crate::{CliError, Result};

/// Parse one complex entry: `1.5`, `2i`, `-i`, `1+2i`, `0.5-0.25i`,
/// `1e-3+2e-4i`.
pub fn parse_complex_entry(s: &str) -> Result<Complex64> {
    let t = s.trim();
    if t.is_empty() {
        return Err(CliError::Parse("empty matrix entry".into()));
    }
    let parse_part = |p: &str, what: &str| -> Result<f64> {
        match p {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => other
                .parse()
                .map_err(|_| CliError::Parse(format!("invalid {what} `{other}` in `{t}`"))),
        }
    };
    if let Some(body) = t.strip_suffix('i') {
        // Split at the sign separating the real part from the imaginary
        // part, skipping signs that belong to an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..body.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx]
                    .parse()
                    .map_err(|_| CliError::Parse(format!("invalid real part in `{t}`")))?;
                let im = parse_part(&body[idx..], "imaginary part")?;
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(0.0, parse_part(body, "imaginary part")?)),
        }
    } else {
        let re: f64 = t
            .parse()
            .map_err(|_| CliError::Parse(format!("invalid matrix entry `{t}`")))?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// Canonical `re+imi` form; both components round-trip through parse.
pub fn format_complex_entry(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

/// Matrix text: first line the dimension n, then n lines of n entries.
pub fn parse_matrix_text(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty matrix file".into()))?
        .trim()
        .parse()
        .map_err(|_| CliError::Parse("first line must be the dimension n".into()))?;
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| CliError::Parse(format!("expected {n} matrix rows, got {i}")))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != n {
            return Err(CliError::Parse(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                entries.len()
            )));
        }
        for e in entries {
            data.push(parse_complex_entry(e)?);
        }
    }
    if lines.next().is_some() {
        return Err(CliError::Parse(format!("more than {n} matrix rows present")));
    }
    Ok(ComplexMatrix::new(n, data)?)
}

pub fn write_matrix_text(m: &ComplexMatrix) -> String {
    let n = m.dim();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| format_complex_entry(m.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_matrix_file(path: &str) -> Result<ComplexMatrix> {
    parse_matrix_text(&std::fs::read_to_string(path)?)
}

/// CSV of n rows with n comma-separated nonnegative entries.
pub fn parse_doubly_stochastic_csv(text: &str) -> Result<DoublyStochastic> {
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            line.split(',')
                .map(|cell| {
                    cell.trim()
                        .parse()
                        .map_err(|_| CliError::Parse(format!("invalid number `{cell}`")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if n == 0 {
        return Err(CliError::Parse("empty matrix".into()));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Parse(format!("matrix must be {n}x{n}")));
    }
    Ok(DoublyStochastic::new(n, rows.concat())?)
}

pub fn read_doubly_stochastic_csv(path: &str) -> Result<DoublyStochastic> {
    parse_doubly_stochastic_csv(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn parses_entry_forms() {
        assert_eq!(parse_complex_entry("1.5").unwrap(), c(1.5, 0.0));
        assert_eq!(parse_complex_entry("-2").unwrap(), c(-2.0, 0.0));
        assert_eq!(parse_complex_entry("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex_entry("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex_entry("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex_entry("1+2i").unwrap(), c(1.0, 2.0));
        assert_eq!(parse_complex_entry("0.5-0.25i").unwrap(), c(0.5, -0.25));
        assert_eq!(parse_complex_entry("1e-3+2e-4i").unwrap(), c(1e-3, 2e-4));
        assert_eq!(parse_complex_entry("-1.5E2-3i").unwrap(), c(-150.0, -3.0));
        assert!(parse_complex_entry("").is_err());
        assert!(parse_complex_entry("1+2j").is_err());
        assert!(parse_complex_entry("x+yi").is_err());
    }

    #[test]
    fn entry_format_round_trips() {
        for z in [c(0.0, 0.0), c(1.0, -1.0), c(-0.125, 0.5), c(3.25, 0.0)] {
            let back = parse_complex_entry(&format_complex_entry(z)).unwrap();
            assert_eq!(back, z);
        }
    }

    #[test]
    fn matrix_text_round_trips() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(2.0, 0.0)],
        ])
        .unwrap();
        let text = write_matrix_text(&m);
        let back = parse_matrix_text(&text).unwrap();
        assert_eq!(&back, &m);
    }

    #[test]
    fn matrix_text_rejects_malformed_input() {
        assert!(parse_matrix_text("").is_err());
        assert!(parse_matrix_text("two\n1 2\n3 4\n").is_err());
        assert!(parse_matrix_text("2\n1 2\n").is_err());
        assert!(parse_matrix_text("2\n1 2 3\n4 5 6\n").is_err());
        assert!(parse_matrix_text("2\n1 2\n3 4\n5 6\n").is_err());
    }

    #[test]
    fn doubly_stochastic_csv() {
        let d = parse_doubly_stochastic_csv("0.5,0.5\n0.5,0.5\n").unwrap();
        assert_eq!(d.dim(), 2);
        assert!(parse_doubly_stochastic_csv("0.5,0.5\n0.5\n").is_err());
        assert!(parse_doubly_stochastic_csv("0.9,0.1\n0.5,0.5\n").is_err());
    }
}
