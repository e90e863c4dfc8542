use super::{Elem, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// `G/N` with cosets labelled in order of their smallest element.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    quotient: FiniteGroup,
    projection: Vec<Elem>,
    kernel: Subgroup,
    representatives: Vec<Elem>,
}

impl QuotientGroup {
    pub fn new(g: &FiniteGroup, n: &Subgroup) -> Result<Self> {
        if !g.is_normal(n) {
            return Err(Error::NotNormal);
        }
        const UNSET: usize = usize::MAX;
        let mut projection = vec![UNSET; g.order()];
        let mut representatives = Vec::new();
        for x in g.elements() {
            if projection[x] != UNSET {
                continue;
            }
            let label = representatives.len();
            representatives.push(x);
            for &k in n.members() {
                projection[g.mul(x, k)] = label;
            }
        }
        let rows: Vec<Vec<usize>> = representatives
            .iter()
            .map(|&a| {
                representatives
                    .iter()
                    .map(|&b| projection[g.mul(a, b)])
                    .collect()
            })
            .collect();
        let quotient = FiniteGroup::from_table(format!("{}/{}", g.name(), n.order()), &rows)?;
        debug_assert_eq!(quotient.order() * n.order(), g.order());
        Ok(QuotientGroup {
            quotient,
            projection,
            kernel: n.clone(),
            representatives,
        })
    }

    pub fn quotient(&self) -> &FiniteGroup {
        &self.quotient
    }

    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x]
    }

    pub fn projection(&self) -> &[Elem] {
        &self.projection
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn representative(&self, coset: Elem) -> Elem {
        self.representatives[coset]
    }
}
