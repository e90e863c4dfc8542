//! Parsing of the element and subgroup arguments accepted on the command
//! line.
//!
//! An element is one of
//! - cycle notation, `(1 2 3)(4 5)`, for permutation groups;
//! - `#i`, the element with index `i` in the multiplication table;
//! - a word over the stored generators, `g1*g2^-1*g1`, with `1` or `e`
//!   for the identity.
//!
//! A subgroup is a comma-separated list of elements generating it, one of
//! the keywords `whole`, `trivial`, `derived`, `center`, `O_p`, `O_p'`,
//! `O^p`, or `order:k` / `order:k#i` for the `i`-th (from 0) normal
//! subgroup of order `k`.

use anyhow::{anyhow, bail, Context, Result};
use fusion_core::group::perm::parse_cycles;
use fusion_core::group::{FiniteGroup, Subgroup};

pub fn parse_element(g: &FiniteGroup, text: &str) -> Result<usize> {
    let text = text.trim();
    if text.starts_with('(') {
        let perms = g
            .permutations()
            .ok_or_else(|| anyhow!("{} is not a permutation group; use #i or a word", g.name()))?;
        let degree = perms.first().map_or(0, Vec::len);
        let p = parse_cycles(degree, text)?;
        return g
            .find_perm(&p)
            .ok_or_else(|| anyhow!("{text} is not an element of {}", g.name()));
    }
    if let Some(i) = text.strip_prefix('#') {
        let i: usize = i.parse().with_context(|| format!("bad element index {text:?}"))?;
        if i >= g.order() {
            bail!("element index {i} outside a group of order {}", g.order());
        }
        return Ok(i);
    }
    let mut acc = 0;
    for factor in text.split('*').map(str::trim) {
        if factor == "1" || factor == "e" {
            continue;
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, e.trim().parse::<i64>().with_context(|| format!("bad exponent in {factor:?}"))?),
            None => (factor, 1),
        };
        let k: usize = base
            .trim()
            .strip_prefix('g')
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| anyhow!("cannot read {factor:?} as an element"))?;
        let gens = g.generators();
        if k == 0 || k > gens.len() {
            bail!("generator g{k} does not exist; {} has {} generators", g.name(), gens.len());
        }
        let x = gens[k - 1];
        let x = if exp < 0 { g.inv(x) } else { x };
        let power = g.pow(x, exp.unsigned_abs() as usize);
        acc = g.mul(acc, power);
    }
    Ok(acc)
}

/// Splits at commas outside parentheses.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// A subgroup of `g`; `prime` resolves the `O_p` keywords.
pub fn parse_subgroup(g: &FiniteGroup, prime: u64, text: &str) -> Result<Subgroup> {
    let text = text.trim();
    let h = match text {
        "whole" => g.whole(),
        "trivial" => Subgroup::trivial(),
        "derived" => g.derived_subgroup(),
        "center" => g.center(),
        "O_p" => g.op_core(prime),
        "O_p'" => g.op_prime_core(prime),
        "O^p" => g.op_residual(prime),
        _ => {
            if let Some(rest) = text.strip_prefix("order:") {
                let (k, i) = match rest.split_once('#') {
                    Some((k, i)) => (k, i.parse::<usize>().with_context(|| format!("bad index in {text:?}"))?),
                    None => (rest, 0),
                };
                let k: usize = k.parse().with_context(|| format!("bad order in {text:?}"))?;
                let found: Vec<Subgroup> = g.normal_subgroups().into_iter().filter(|n| n.order() == k).collect();
                return found.into_iter().nth(i).ok_or_else(|| {
                    anyhow!("{} has no normal subgroup of order {k} with index {i}", g.name())
                });
            }
            let gens = split_top_level(text)
                .into_iter()
                .map(|e| parse_element(g, e))
                .collect::<Result<Vec<_>>>()?;
            g.generate(gens)
        }
    };
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fusion_core::corpus::bundled_entry;

    fn s4() -> FiniteGroup {
        bundled_entry("s4").unwrap().file.ingest(1000).unwrap()
    }

    #[test]
    fn elements() {
        let g = s4();
        let x = parse_element(&g, "(1 2 3)").unwrap();
        assert_eq!(g.elem_order(x), 3);
        assert_eq!(parse_element(&g, "e").unwrap(), 0);
        let a = parse_element(&g, "g1").unwrap();
        assert_eq!(parse_element(&g, "g1^-1*g1").unwrap(), 0);
        assert_eq!(parse_element(&g, &format!("#{a}")).unwrap(), a);
        assert!(parse_element(&g, "g9").is_err());
        assert!(parse_element(&g, "(1 5)").is_err());
    }

    #[test]
    fn subgroups() {
        let g = s4();
        assert_eq!(parse_subgroup(&g, 2, "derived").unwrap().order(), 12);
        assert_eq!(parse_subgroup(&g, 2, "O_p").unwrap().order(), 4);
        assert_eq!(parse_subgroup(&g, 2, "order:12").unwrap().order(), 12);
        assert_eq!(parse_subgroup(&g, 2, "(1 2 3), (1 2)(3 4)").unwrap().order(), 12);
        assert!(parse_subgroup(&g, 2, "order:5").is_err());
    }
}
