//! Finite groups given by a full multiplication table.
//!
//! Elements are indices `0..order` with `0` the identity. Products are
//! written on the right: `mul(a, b)` is "first `a`, then `b`", and the
//! conjugate of `x` by `g` is `g⁻¹ x g`.

mod iso;
mod lattice;
pub mod perm;
mod quotient;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use iso::find_isomorphism;
pub use quotient::QuotientGroup;

pub type Elem = usize;

/// A subgroup, identified by its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<Elem>,
}

impl Subgroup {
    pub(crate) fn from_sorted(members: Vec<Elem>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub(crate) fn from_unsorted(mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.members.iter().all(|&x| other.contains(x))
    }

    /// Canonical lattice order: larger subgroups first, then lexicographic.
    pub fn canonical_cmp(&self, other: &Subgroup) -> std::cmp::Ordering {
        other
            .order()
            .cmp(&self.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<Elem>,
    inv: Vec<Elem>,
    orders: Vec<usize>,
    generators: Vec<Elem>,
    perms: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Builds a group from a Cayley table. Row and column 0 must be the
    /// identity; the table must be a Latin square and associative.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::NotAGroup(format!("row {i} is not a permutation")));
                }
            }
            table.extend_from_slice(row);
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                if std::mem::replace(&mut seen[table[i * n + j]], true) {
                    return Err(Error::NotAGroup(format!("column {j} is not a permutation")));
                }
            }
        }
        for i in 0..n {
            if table[i] != i || table[i * n] != i {
                return Err(Error::NotAGroup("index 0 is not the identity".into()));
            }
        }
        let g = Self::assemble(name.into(), n, table, None);
        g.check_associative()?;
        Ok(g)
    }

    /// Closes a set of permutations (0-based image arrays) under
    /// composition. Elements are numbered in breadth-first order from the
    /// identity, so the numbering is a function of the generator list.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        gens: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::NotAGroup(format!("{g:?} is not a permutation of degree {degree}")));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems = vec![identity.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(identity, 0usize);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let prod: Vec<usize> = elems[i].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&prod) {
                    if elems.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "group order",
                            limit: cap,
                            actual: elems.len() + 1,
                        });
                    }
                    index.insert(prod.clone(), elems.len());
                    elems.push(prod);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<usize> = elems[a].iter().map(|&x| elems[b][x]).collect();
                table[a * n + b] = index[&prod];
            }
        }
        let mut g = Self::assemble(name.into(), n, table, Some(elems));
        g.generators = gens
            .iter()
            .map(|p| g.find_perm(p).expect("generator is an element"))
            .collect();
        Ok(g)
    }

    fn assemble(name: String, n: usize, table: Vec<Elem>, perms: Option<Vec<Vec<usize>>>) -> Self {
        let mut inv = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b;
                    break;
                }
            }
        }
        let mut orders = vec![1; n];
        for (a, slot) in orders.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = table[x * n + a];
                k += 1;
            }
            *slot = k;
        }
        let mut g = FiniteGroup {
            name,
            n,
            table,
            inv,
            orders,
            generators: Vec::new(),
            perms,
        };
        g.generators = g.generating_set(&g.whole());
        g
    }

    /// Light's test: with a generating set `A`, `(xa)y = x(ay)` for all
    /// `x, y` and `a ∈ A` implies associativity.
    fn check_associative(&self) -> Result<()> {
        for &a in &self.generators {
            for x in 0..self.n {
                let xa = self.mul(x, a);
                for y in 0..self.n {
                    if self.mul(xa, y) != self.mul(x, self.mul(a, y)) {
                        return Err(Error::NotAGroup(format!(
                            "not associative at ({x}, {a}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut r = 0;
        for _ in 0..k % self.orders[a] {
            r = self.mul(r, a);
        }
        r
    }

    pub fn elem_order(&self, a: Elem) -> usize {
        self.orders[a]
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv[g], x), g)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.inv[x], self.conj(x, y))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn perm(&self, x: Elem) -> Option<&[usize]> {
        self.perms.as_ref().map(|p| p[x].as_slice())
    }

    pub fn permutations(&self) -> Option<&[Vec<usize>]> {
        self.perms.as_deref()
    }

    pub fn find_perm(&self, p: &[usize]) -> Option<Elem> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    /// Cycle notation (1-based) for permutation groups, `#i` otherwise.
    pub fn label(&self, x: Elem) -> String {
        match self.perm(x) {
            Some(p) => perm::cycle_string(p),
            None => format!("#{x}"),
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.n).collect())
    }

    pub fn generate<I: IntoIterator<Item = Elem>>(&self, gens: I) -> Subgroup {
        let gens: Vec<Elem> = gens.into_iter().filter(|&g| g != 0).collect();
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut members = vec![0];
        while let Some(y) = queue.pop_front() {
            for &g in &gens {
                let z = self.mul(y, g);
                if !seen[z] {
                    seen[z] = true;
                    members.push(z);
                    queue.push_back(z);
                }
            }
        }
        Subgroup::from_unsorted(members)
    }

    /// Greedy generating set: repeatedly adds the smallest member outside
    /// the subgroup generated so far.
    pub fn generating_set(&self, h: &Subgroup) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial();
        while current.order() < h.order() {
            let x = *h
                .members()
                .iter()
                .find(|&&x| !current.contains(x))
                .expect("a member outside a proper subgroup");
            gens.push(x);
            current = self.generate(gens.iter().copied());
        }
        gens
    }

    pub fn is_subgroup(&self, set: &[Elem]) -> bool {
        let h = Subgroup::from_unsorted(set.to_vec());
        h.contains(0)
            && h.members()
                .iter()
                .all(|&a| h.members().iter().all(|&b| h.contains(self.mul(a, b))))
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = self.generating_set(a);
        gens.extend(self.generating_set(b));
        self.generate(gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup::from_sorted(a.members().iter().copied().filter(|&x| b.contains(x)).collect())
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: Elem) -> Subgroup {
        Subgroup::from_unsorted(h.members().iter().map(|&x| self.conj(x, g)).collect())
    }

    fn normalizes(&self, g: Elem, h: &Subgroup) -> bool {
        h.members().iter().all(|&x| h.contains(self.conj(x, g)))
    }

    /// `N_K(H)`.
    pub fn normalizer_in(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        Subgroup::from_sorted(k.members().iter().copied().filter(|&g| self.normalizes(g, h)).collect())
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.normalizer_in(&self.whole(), h)
    }

    /// `C_K(H)`.
    pub fn centralizer_in(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        let gens = self.generating_set(h);
        Subgroup::from_sorted(
            k.members()
                .iter()
                .copied()
                .filter(|&g| gens.iter().all(|&x| self.mul(x, g) == self.mul(g, x)))
                .collect(),
        )
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        self.centralizer_in(&self.whole(), h)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    /// Is `H` normal in `K`?
    pub fn is_normal_in(&self, k: &Subgroup, h: &Subgroup) -> bool {
        self.generating_set(k).iter().all(|&g| self.normalizes(g, h))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators.iter().all(|&g| self.normalizes(g, h))
    }

    /// Smallest normal subgroup of `G` containing `H`.
    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        let mut gens: Vec<Elem> = Vec::new();
        let mut current = h.clone();
        loop {
            let mut grew = false;
            for &g in &self.generators {
                for &x in current.members() {
                    let y = self.conj(x, g);
                    if !current.contains(y) {
                        gens.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return current;
            }
            gens.extend(self.generating_set(&current));
            current = self.generate(gens.iter().copied());
            gens = self.generating_set(&current);
        }
    }

    /// `[H, K]`.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut gens = Vec::new();
        for &x in h.members() {
            for &y in k.members() {
                gens.push(self.commutator(x, y));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.generate(gens)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let g = self.whole();
        self.commutator_subgroup(&g, &g)
    }

    /// Subgroup generated by `x⁻¹ y` over the given pairs `(x, x^φ)`.
    pub fn commutator_span<I: IntoIterator<Item = (Elem, Elem)>>(&self, pairs: I) -> Subgroup {
        let mut gens: Vec<Elem> = pairs
            .into_iter()
            .map(|(x, y)| self.mul(self.inv(x), y))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        self.generate(gens)
    }

    pub fn is_p_group(&self, h: &Subgroup, p: u64) -> bool {
        let mut n = h.order();
        while n % p as usize == 0 {
            n /= p as usize;
        }
        n == 1
    }

    pub fn is_p_element(&self, x: Elem, p: u64) -> bool {
        is_power_of(self.orders[x], p)
    }

    /// Deterministic Sylow subgroup: grows a `p`-subgroup `P` by the
    /// smallest `x ∈ N_G(P) \ P` with `x^p ∈ P` until the order is the
    /// full `p`-part of `|G|`.
    pub fn sylow_subgroup(&self, p: u64) -> Subgroup {
        let target = p_part(self.n, p);
        let mut s = Subgroup::trivial();
        while s.order() < target {
            let n = self.normalizer(&s);
            let x = *n
                .members()
                .iter()
                .find(|&&x| !s.contains(x) && s.contains(self.pow(x, p as usize)))
                .expect("a p-subgroup that is not Sylow has a p-element above it in its normalizer");
            let mut gens = self.generating_set(&s);
            gens.push(x);
            s = self.generate(gens);
        }
        s
    }

    /// `O_p(G)`: the intersection of all Sylow `p`-subgroups.
    pub fn op_core(&self, p: u64) -> Subgroup {
        let s = self.sylow_subgroup(p);
        let mut core = s.clone();
        for g in self.elements() {
            core = self.intersection(&core, &self.conjugate_subgroup(&s, g));
        }
        core
    }

    /// `O_{p'}(G)`: the join of all normal `p'`-subgroups.
    pub fn op_prime_core(&self, p: u64) -> Subgroup {
        let mut acc = Subgroup::trivial();
        for x in self.elements() {
            if acc.contains(x) || self.orders[x] % p as usize == 0 {
                continue;
            }
            let ncl = self.normal_closure(&self.generate([x]));
            if ncl.order() % p as usize != 0 {
                acc = self.join(&acc, &ncl);
            }
        }
        acc
    }

    /// `O^p(G)`: generated by all `p'`-elements.
    pub fn op_residual(&self, p: u64) -> Subgroup {
        self.generate(self.elements().filter(|&x| self.orders[x] % p as usize != 0))
    }

    /// `H` as a group in its own right. Returns the group and the
    /// embedding (new index → old index); member order is preserved.
    pub fn subgroup_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<Elem>) {
        let emb = h.members().to_vec();
        let m = emb.len();
        let pos = |x: Elem| emb.binary_search(&x).expect("closed");
        let mut table = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = pos(self.mul(emb[i], emb[j]));
            }
        }
        let perms = self
            .perms
            .as_ref()
            .map(|p| emb.iter().map(|&x| p[x].clone()).collect());
        let g = Self::assemble(format!("{}|{}", self.name, m), m, table, perms);
        (g, emb)
    }

    /// External direct product; `(a, b)` has index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.n, b.n);
        let n = na * nb;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                table[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
            }
        }
        let perms = match (&a.perms, &b.perms) {
            (Some(pa), Some(pb)) => {
                let da = pa[0].len();
                Some(
                    (0..n)
                        .map(|x| {
                            let mut p = pa[x / nb].clone();
                            p.extend(pb[x % nb].iter().map(|&i| i + da));
                            p
                        })
                        .collect(),
                )
            }
            _ => None,
        };
        Self::assemble(format!("{}x{}", a.name, b.name), n, table, perms)
    }

    /// One representative (the smallest element) per conjugacy class.
    pub fn class_representatives(&self) -> Vec<Elem> {
        let mut seen = vec![false; self.n];
        let mut reps = Vec::new();
        for x in self.elements() {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for g in self.elements() {
                seen[self.conj(x, g)] = true;
            }
        }
        reps
    }
}

pub fn is_power_of(mut n: usize, p: u64) -> bool {
    while n % p as usize == 0 {
        n /= p as usize;
    }
    n == 1
}

pub fn p_part(mut n: usize, p: u64) -> usize {
    let mut r = 1;
    while n % p as usize == 0 {
        n /= p as usize;
        r *= p as usize;
    }
    r
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[cfg(test)]
mod tests {
    use super::perm::parse_cycles;
    use super::*;

    pub(crate) fn s4() -> FiniteGroup {
        FiniteGroup::from_permutations(
            "S4",
            4,
            &[parse_cycles(4, "(1 2)").unwrap(), parse_cycles(4, "(1 2 3 4)").unwrap()],
            500,
        )
        .unwrap()
    }

    fn el(g: &FiniteGroup, cycles: &str) -> Elem {
        g.find_perm(&parse_cycles(4, cycles).unwrap()).unwrap()
    }

    fn brute_subgroup(g: &FiniteGroup, cycles: &[&str]) -> Subgroup {
        g.generate(cycles.iter().map(|c| el(g, c)))
    }

    #[test]
    fn s4_basics() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert_eq!(g.elem_order(el(&g, "(1 2 3 4)")), 4);
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(g.inv(x), x), 0);
        }
    }

    #[test]
    fn table_validation() {
        let bad = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        assert!(matches!(FiniteGroup::from_table("x", &bad), Err(Error::NotAGroup(_))));
        let c3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        assert_eq!(FiniteGroup::from_table("C3", &c3).unwrap().order(), 3);
        // a Latin square with identity that is not associative (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table("L5", &loop5), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn sylow_examples() {
        let g = s4();
        assert_eq!(g.sylow_subgroup(2).order(), 8);
        assert_eq!(g.sylow_subgroup(3).order(), 3);
        assert_eq!(g.sylow_subgroup(5).order(), 1);
        let a4 = brute_subgroup(&g, &["(1 2 3)", "(1 2)(3 4)"]);
        let (a4g, emb) = g.subgroup_group(&a4);
        let v: Vec<Elem> = a4g.sylow_subgroup(2).members().iter().map(|&i| emb[i]).collect();
        let expected = brute_subgroup(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(Subgroup::from_unsorted(v), expected);
        let c6 = FiniteGroup::from_permutations("C6", 5, &[parse_cycles(5, "(1 2)(3 4 5)").unwrap()], 500).unwrap();
        assert_eq!(c6.sylow_subgroup(3).order(), 3);
    }

    #[test]
    fn normalizer_centralizer_center() {
        let g = s4();
        let v4 = brute_subgroup(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        // brute force over all 24 elements
        let brute: Vec<Elem> = g
            .elements()
            .filter(|&x| v4.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
            .collect();
        assert_eq!(g.centralizer(&v4), Subgroup::from_sorted(brute));
        assert_eq!(g.centralizer(&v4), v4);
        assert_eq!(g.normalizer(&g.whole()), g.whole());
        let d8 = brute_subgroup(&g, &["(1 2 3 4)", "(1 3)"]);
        let (d8g, _) = g.subgroup_group(&d8);
        assert_eq!(d8g.center().order(), 2);
    }

    #[test]
    fn core_operators_s4() {
        let g = s4();
        let v4 = brute_subgroup(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let a4 = brute_subgroup(&g, &["(1 2 3)", "(1 2)(3 4)"]);
        assert_eq!(g.op_core(2), v4);
        assert_eq!(g.op_residual(2), a4);
        assert!(g.op_prime_core(2).is_trivial());
        assert!(g.op_core(3).is_trivial());
        assert_eq!(g.op_residual(3), g.whole());
    }

    #[test]
    fn commutator_span_examples() {
        let g = s4();
        let v4 = brute_subgroup(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert!(g.commutator_span(v4.members().iter().map(|&x| (x, x))).is_trivial());
        let c = el(&g, "(1 2 3)");
        let span = g.commutator_span(v4.members().iter().map(|&x| (x, g.conj(x, c))));
        assert_eq!(span, v4);
    }

    #[test]
    fn quotient_examples() {
        let g = s4();
        let v4 = brute_subgroup(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let q = QuotientGroup::new(&g, &v4).unwrap();
        assert_eq!(q.quotient().order(), 6);
        assert!(q.quotient().center().is_trivial());
        let a4 = brute_subgroup(&g, &["(1 2 3)", "(1 2)(3 4)"]);
        assert_eq!(QuotientGroup::new(&g, &a4).unwrap().quotient().order(), 2);
        let t = QuotientGroup::new(&g, &Subgroup::trivial()).unwrap();
        assert_eq!(t.quotient().order(), 24);
        assert!((0..24).all(|x| t.project(x) == x));
        let d8 = brute_subgroup(&g, &["(1 2 3 4)", "(1 3)"]);
        assert!(matches!(QuotientGroup::new(&g, &d8), Err(Error::NotNormal)));
    }

    #[test]
    fn lattice_counts() {
        let c2 = FiniteGroup::from_permutations("C2", 2, &[vec![1, 0]], 500).unwrap();
        let l = c2.subgroup_lattice(100).unwrap();
        assert_eq!(l.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![2, 1]);
        let g = s4();
        let v4 = brute_subgroup(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let (v4g, _) = g.subgroup_group(&v4);
        assert_eq!(v4g.subgroup_lattice(100).unwrap().len(), 5);
        let d8 = brute_subgroup(&g, &["(1 2 3 4)", "(1 3)"]);
        let (d8g, _) = g.subgroup_group(&d8);
        assert_eq!(d8g.subgroup_lattice(100).unwrap().len(), 10);
        assert_eq!(g.subgroup_lattice(100).unwrap().len(), 30);
        assert!(matches!(g.subgroup_lattice(10), Err(Error::CapExceeded { .. })));
        assert_eq!(g.normal_subgroups().len(), 4);
    }
}
