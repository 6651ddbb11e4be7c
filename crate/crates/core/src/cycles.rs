//! Cycle-notation input and output.
//!
//! The external format is 1-indexed and whitespace-insensitive, e.g.
//! `"(1,2,3)(4,5)"`. Points are 0-indexed everywhere else in the crate.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Parses 1-indexed disjoint cycle notation into a permutation of the given
/// degree. Unnamed points are fixed; `"()"` is the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Syntax("empty cycle expression".into()));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::Syntax(format!("expected '(' at: {rest}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Syntax("unclosed cycle".into()))?;
        let body = &rest[1..close];
        rest = &rest[close + 1..];
        if body.is_empty() {
            continue; // "()" denotes the identity cycle
        }
        let mut cycle = Vec::new();
        for token in body.split(',') {
            let value: usize = token
                .parse()
                .map_err(|_| Error::Syntax(format!("bad point {token:?}")))?;
            if value == 0 || value > degree {
                return Err(Error::PointOutOfRange {
                    point: value,
                    degree,
                });
            }
            cycle.push(value - 1);
        }
        cycles.push(cycle);
    }
    from_cycles(degree, &cycles)
}

/// Builds a permutation from 0-indexed cycles, requiring disjointness.
pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    for cycle in cycles {
        for (i, &p) in cycle.iter().enumerate() {
            if p >= degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree,
                });
            }
            if used[p] {
                return Err(Error::RepeatedPoint(p));
            }
            used[p] = true;
            images[p] = cycle[(i + 1) % cycle.len()];
        }
    }
    Permutation::from_images(images)
}

/// Formats a permutation in 1-indexed cycle notation; identity is `"()"`.
pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".into();
    }
    let mut out = String::new();
    for cycle in cycles {
        out.push('(');
        for (i, &pt) in cycle.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&(pt + 1).to_string());
        }
        out.push(')');
    }
    out
}
