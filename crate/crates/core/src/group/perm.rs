//! Permutation helpers. Input and output use 1-based points.

use crate::error::{Error, Result};

/// Parses cycle notation such as `(1 2)(3 4 5)` or `(1,2,3)` into a
/// 0-based image array of the given degree. `()` is the identity.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_end = rest
            .find(')')
            .filter(|_| rest.starts_with('('))
            .ok_or_else(|| Error::Parse(format!("bad cycle syntax in {text:?}")))?;
        let body = &rest[1..body_end];
        let points = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                let k: usize = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))?;
                if k == 0 || k > degree {
                    return Err(Error::Parse(format!("point {k} outside 1..={degree}")));
                }
                Ok(k - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        // cycles are composed left to right
        let mut cycle = vec![0; degree];
        for (i, c) in cycle.iter_mut().enumerate() {
            *c = i;
        }
        for (i, &a) in points.iter().enumerate() {
            cycle[a] = points[(i + 1) % points.len()];
        }
        let mut seen = std::collections::HashSet::new();
        if !points.iter().all(|p| seen.insert(*p)) {
            return Err(Error::Parse(format!("repeated point in cycle {body:?}")));
        }
        perm = perm.iter().map(|&x| cycle[x]).collect();
        rest = rest[body_end + 1..].trim_start();
    }
    Ok(perm)
}

/// Converts a 1-based image array to 0-based, validating it.
pub fn from_one_based(images: &[usize]) -> Result<Vec<usize>> {
    let n = images.len();
    let mut seen = vec![false; n];
    images
        .iter()
        .map(|&x| {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                Err(Error::Parse(format!("{images:?} is not a permutation of 1..={n}")))
            } else {
                Ok(x - 1)
            }
        })
        .collect()
}

pub fn cycle_string(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut pts = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            pts.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&pts.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = parse_cycles(4, "(1 2 3 4)").unwrap();
        assert_eq!(p, vec![1, 2, 3, 0]);
        assert_eq!(cycle_string(&p), "(1 2 3 4)");
        assert_eq!(cycle_string(&parse_cycles(5, "()").unwrap()), "()");
        // (1 2)(2 3) applied left to right sends 1 -> 2 -> 3
        let q = parse_cycles(3, "(1 2)(2 3)").unwrap();
        assert_eq!(q[0], 2);
        assert!(parse_cycles(3, "(1 4)").is_err());
        assert!(parse_cycles(3, "1 2").is_err());
        assert_eq!(from_one_based(&[2, 1, 3]).unwrap(), vec![1, 0, 2]);
        assert!(from_one_based(&[2, 2, 3]).is_err());
    }
}
