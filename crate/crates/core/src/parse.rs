//! The line-oriented `.pcp` text format.
//!
//! ```text
//! pcpres 1
//! n 3
//! orders 2 2 2
//! pow 2 = 3
//! conj 2 1 = 2 3      # x2^x1 = x2 x3
//! ```

use std::collections::HashSet;

use crate::element::ExponentVector;
use crate::error::{PcError, Result};
use crate::presentation::PcPresentation;

fn err(line: usize, msg: impl Into<String>) -> PcError {
    PcError::Parse { line, msg: msg.into() }
}

/// Meaningful lines with their 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| err(line, format!("expected {what}, found '{tok}'")))
}

/// A 1-based generator index in `1..=n`, returned 0-based.
fn parse_index(tok: &str, n: usize, line: usize) -> Result<usize> {
    let i = parse_usize(tok, line, "generator index")?;
    if i == 0 || i > n {
        return Err(err(line, format!("generator index {i} out of range 1..{n}")));
    }
    Ok(i - 1)
}

/// Parses `g^e` atoms into a normal form whose support starts after `after`
/// (0-based, exclusive).
fn parse_word(text: &str, orders: &[u32], after: usize, line: usize) -> Result<ExponentVector> {
    let n = orders.len();
    let mut v = vec![0u32; n];
    let mut prev: Option<usize> = None;
    for atom in text.split_whitespace() {
        let (g, e) = match atom.split_once('^') {
            Some((g, e)) => (g, Some(e)),
            None => (atom, None),
        };
        let g = parse_index(g, n, line)?;
        let e = match e {
            Some(e) => e
                .parse::<u32>()
                .map_err(|_| err(line, format!("bad exponent in '{atom}'")))?,
            None => 1,
        };
        if g <= after {
            return Err(err(
                line,
                format!("generator {} not allowed here, relation needs indices > {}", g + 1, after + 1),
            ));
        }
        if prev.is_some_and(|p| g <= p) {
            return Err(err(line, "word is not in normal form: indices must increase"));
        }
        if e >= orders[g] {
            return Err(err(
                line,
                format!("exponent {e} of generator {} is not below its relative order {}", g + 1, orders[g]),
            ));
        }
        v[g] = e;
        prev = Some(g);
    }
    Ok(ExponentVector::new(v))
}

pub fn parse_presentation(text: &str) -> Result<PcPresentation> {
    let mut lines = content_lines(text);
    let (l1, header) = lines.next().ok_or_else(|| err(1, "empty presentation file"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["pcpres", "1"] {
        return Err(err(l1, "expected header 'pcpres 1'"));
    }
    let (l2, nline) = lines.next().ok_or_else(|| err(l1 + 1, "missing 'n <count>' line"))?;
    let n = match nline.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", c] => parse_usize(c, l2, "generator count")?,
        _ => return Err(err(l2, "expected 'n <count>'")),
    };
    let (l3, oline) = lines.next().ok_or_else(|| err(l2 + 1, "missing 'orders' line"))?;
    let mut toks = oline.split_whitespace();
    if toks.next() != Some("orders") {
        return Err(err(l3, "expected 'orders p_1 ... p_n'"));
    }
    let orders = toks
        .map(|t| t.parse::<u32>().map_err(|_| err(l3, format!("bad relative order '{t}'"))))
        .collect::<Result<Vec<_>>>()?;
    if orders.len() != n {
        return Err(err(l3, format!("{} relative orders given for n = {n}", orders.len())));
    }
    for (i, &p) in orders.iter().enumerate() {
        if !pcdyn_ffield::is_prime(u64::from(p)) {
            return Err(err(l3, format!("relative order {p} of generator {} is not prime", i + 1)));
        }
    }

    let mut powers = Vec::new();
    let mut conjugates = Vec::new();
    let mut seen = HashSet::new();
    for (ln, line) in lines {
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| err(ln, "relation line needs '='"))?;
        let lhs: Vec<&str> = lhs.split_whitespace().collect();
        match lhs[..] {
            ["pow", i] => {
                let i = parse_index(i, n, ln)?;
                if !seen.insert((i, i)) {
                    return Err(err(ln, format!("duplicate power relation for generator {}", i + 1)));
                }
                powers.push((i, parse_word(rhs, &orders, i, ln)?));
            }
            ["conj", j, i] => {
                let j = parse_index(j, n, ln)?;
                let i = parse_index(i, n, ln)?;
                if i >= j {
                    return Err(err(ln, "conj <j> <i> needs i < j"));
                }
                if !seen.insert((j, i)) {
                    return Err(err(ln, format!("duplicate relation for x{}^x{}", j + 1, i + 1)));
                }
                conjugates.push((j, i, parse_word(rhs, &orders, i, ln)?));
            }
            _ => return Err(err(ln, format!("unrecognised line '{line}'"))),
        }
    }
    PcPresentation::from_relations(orders, &powers, &conjugates)
}

#[cfg(test)]
mod tests {
    use super::*;

    const D4: &str = "pcpres 1\nn 3\norders 2 2 2\npow 2 = 3\nconj 2 1 = 2 3\n";

    #[test]
    fn d4_roundtrip() {
        let p = parse_presentation(D4).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.conjugate_rhs(1, 0).as_slice(), &[0, 1, 1]);
        assert!(p.is_trivial_conjugate(2, 0));
        assert_eq!(parse_presentation(&p.to_pcp()).unwrap(), p);
    }

    #[test]
    fn cyclic_five() {
        let p = parse_presentation("# C5\npcpres 1\nn 1\norders 5\n").unwrap();
        assert_eq!(p.relative_orders(), &[5]);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_presentation("pcpres 1\nn 1\norders 4\n").unwrap_err();
        assert!(matches!(e, PcError::Parse { line: 3, ref msg } if msg.contains("not prime")));
        let e = parse_presentation("pcpres 1\nn 2\norders 2 2\npow 2 = 1\n").unwrap_err();
        assert!(matches!(e, PcError::Parse { line: 4, .. }));
        let e = parse_presentation("pcpres 1\nn 2\norders 2 2\npow 1 = 3\n").unwrap_err();
        assert!(matches!(e, PcError::Parse { line: 4, ref msg } if msg.contains("out of range")));
        let e = parse_presentation("pcpres 2\n").unwrap_err();
        assert!(matches!(e, PcError::Parse { line: 1, .. }));
        let e = parse_presentation("pcpres 1\nn 2\norders 2 2\nconj 1 2 = 2\n").unwrap_err();
        assert!(matches!(e, PcError::Parse { line: 4, .. }));
    }
}
