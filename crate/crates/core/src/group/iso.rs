use std::collections::VecDeque;

use super::{Elem, FiniteGroup};

/// Extends an assignment of generator images to a homomorphism on the
/// subgroup the generators span. Returns `None` if the assignment is
/// inconsistent or not injective.
fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[(Elem, Elem)]) -> Option<Vec<Option<Elem>>> {
    let mut map = vec![None; a.order()];
    let mut used = vec![false; b.order()];
    map[0] = Some(0);
    used[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x].expect("queued elements are mapped");
        for &(g, h) in gens {
            let y = a.mul(x, g);
            let fy = b.mul(fx, h);
            match map[y] {
                Some(v) if v != fy => return None,
                Some(_) => {}
                None => {
                    if std::mem::replace(&mut used[fy], true) {
                        return None;
                    }
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(map)
}

/// Searches for an isomorphism `a → b` that sends each `fixed.0` to
/// `fixed.1`. Generator images are chosen by backtracking among
/// elements of matching order.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup, fixed: &[(Elem, Elem)]) -> Option<Vec<Elem>> {
    if a.order() != b.order() {
        return None;
    }
    let mut gens: Vec<(Elem, Elem)> = fixed.to_vec();
    if extend(a, b, &gens).is_none() {
        return None;
    }
    let mut free = Vec::new();
    let mut span = a.generate(fixed.iter().map(|f| f.0));
    while span.order() < a.order() {
        let x = a.elements().find(|&x| !span.contains(x)).expect("proper");
        free.push(x);
        span = a.generate(fixed.iter().map(|f| f.0).chain(free.iter().copied()));
    }
    fn search(a: &FiniteGroup, b: &FiniteGroup, gens: &mut Vec<(Elem, Elem)>, free: &[Elem]) -> Option<Vec<Elem>> {
        let Some((&x, rest)) = free.split_first() else {
            let map = extend(a, b, gens)?;
            return map.into_iter().collect();
        };
        for y in b.elements() {
            if b.elem_order(y) != a.elem_order(x) {
                continue;
            }
            gens.push((x, y));
            if extend(a, b, gens).is_some() {
                if let Some(m) = search(a, b, gens, rest) {
                    return Some(m);
                }
            }
            gens.pop();
        }
        None
    }
    search(a, b, &mut gens, &free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::parse_cycles;

    #[test]
    fn isomorphism_search() {
        let s3a = FiniteGroup::from_permutations(
            "S3",
            3,
            &[parse_cycles(3, "(1 2)").unwrap(), parse_cycles(3, "(1 2 3)").unwrap()],
            100,
        )
        .unwrap();
        let s3b = FiniteGroup::from_permutations(
            "S3'",
            3,
            &[parse_cycles(3, "(1 2 3)").unwrap(), parse_cycles(3, "(2 3)").unwrap()],
            100,
        )
        .unwrap();
        let iso = find_isomorphism(&s3a, &s3b, &[]).unwrap();
        for x in s3a.elements() {
            for y in s3a.elements() {
                assert_eq!(iso[s3a.mul(x, y)], s3b.mul(iso[x], iso[y]));
            }
        }
        let c6 = FiniteGroup::from_permutations("C6", 5, &[parse_cycles(5, "(1 2)(3 4 5)").unwrap()], 100).unwrap();
        assert!(find_isomorphism(&s3a, &c6, &[]).is_none());
        // an involution cannot be sent to a 3-cycle
        let t = s3a.find_perm(&parse_cycles(3, "(1 2)").unwrap()).unwrap();
        let c = s3b.find_perm(&parse_cycles(3, "(1 2 3)").unwrap()).unwrap();
        assert!(find_isomorphism(&s3a, &s3b, &[(t, c)]).is_none());
    }
}
