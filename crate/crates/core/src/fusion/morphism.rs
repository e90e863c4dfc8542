use serde::Serialize;

use super::{Ambient, Pos, SubId, NONE};
use crate::error::{Error, Result};

/// An injective homomorphism between subgroups of the ambient `p`-group.
/// `map[x]` is the image of position `x`, or `NONE` off the domain.
/// `img` is the image subgroup; the nominal codomain is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Morphism {
    dom: SubId,
    img: SubId,
    map: Box<[Pos]>,
}

impl Morphism {
    fn from_map(amb: &Ambient, dom: SubId, map: Box<[Pos]>) -> Self {
        let mask = amb
            .members(dom)
            .iter()
            .fold(0u128, |m, &x| m | 1u128 << map[x as usize]);
        let img = amb.id_of_mask(mask).expect("image of a homomorphism is a subgroup");
        Morphism { dom, img, map }
    }

    /// Builds a morphism from images of the members of `dom`, checking
    /// that it is an injective homomorphism.
    pub fn from_images(amb: &Ambient, dom: SubId, images: impl Fn(Pos) -> Pos) -> Result<Self> {
        let mut map = vec![NONE; amb.size()].into_boxed_slice();
        let mut mask = 0u128;
        for &x in amb.members(dom) {
            let y = images(x);
            if y as usize >= amb.size() || mask >> y & 1 == 1 {
                return Err(Error::DomainMismatch("map is not injective"));
            }
            mask |= 1u128 << y;
            map[x as usize] = y;
        }
        for &x in amb.members(dom) {
            for &y in amb.members(dom) {
                if map[amb.mul(x, y) as usize] != amb.mul(map[x as usize], map[y as usize]) {
                    return Err(Error::DomainMismatch("map is not a homomorphism"));
                }
            }
        }
        Ok(Self::from_map(amb, dom, map))
    }

    pub fn identity(amb: &Ambient, p: SubId) -> Self {
        let mut map = vec![NONE; amb.size()].into_boxed_slice();
        for &x in amb.members(p) {
            map[x as usize] = x;
        }
        Morphism { dom: p, img: p, map }
    }

    /// `c_g` restricted to `p`: `x ↦ g⁻¹ x g`.
    pub fn conjugation(amb: &Ambient, p: SubId, g: Pos) -> Self {
        let mut map = vec![NONE; amb.size()].into_boxed_slice();
        for &x in amb.members(p) {
            map[x as usize] = amb.conj(x, g);
        }
        Self::from_map(amb, p, map)
    }

    pub fn dom(&self) -> SubId {
        self.dom
    }

    pub fn img(&self) -> SubId {
        self.img
    }

    pub fn map(&self) -> &[Pos] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Pos) -> Pos {
        self.map[x as usize]
    }

    pub fn is_automorphism(&self) -> bool {
        self.dom == self.img
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &y)| y == NONE || y as usize == i)
    }

    /// Image of a subgroup of the domain.
    pub fn image_of(&self, amb: &Ambient, q: SubId) -> SubId {
        debug_assert!(amb.le(q, self.dom));
        let mask = amb.members(q).iter().fold(0u128, |m, &x| m | 1u128 << self.apply(x));
        amb.id_of_mask(mask).expect("image of a subgroup")
    }

    /// First `self`, then `next`. Requires `img(self) ≤ dom(next)`.
    pub fn then(&self, amb: &Ambient, next: &Morphism) -> Morphism {
        debug_assert!(amb.le(self.img, next.dom));
        let mut map = vec![NONE; amb.size()].into_boxed_slice();
        for &x in amb.members(self.dom) {
            map[x as usize] = next.apply(self.apply(x));
        }
        Self::from_map(amb, self.dom, map)
    }

    pub fn restrict(&self, amb: &Ambient, q: SubId) -> Morphism {
        debug_assert!(amb.le(q, self.dom));
        let mut map = vec![NONE; amb.size()].into_boxed_slice();
        for &x in amb.members(q) {
            map[x as usize] = self.apply(x);
        }
        Self::from_map(amb, q, map)
    }

    pub fn inverse(&self, amb: &Ambient) -> Morphism {
        let mut map = vec![NONE; amb.size()].into_boxed_slice();
        for &x in amb.members(self.dom) {
            map[self.apply(x) as usize] = x;
        }
        Morphism {
            dom: self.img,
            img: self.dom,
            map,
        }
    }

    /// Does the restriction of `self` to `q` agree with `other` (whose
    /// domain is `q`)?
    pub fn extends(&self, amb: &Ambient, other: &Morphism) -> bool {
        amb.le(other.dom, self.dom) && amb.members(other.dom).iter().all(|&x| self.apply(x) == other.apply(x))
    }

    /// Is `self` the identity on `x`?
    pub fn fixes(&self, amb: &Ambient, x: SubId) -> bool {
        amb.le(x, self.dom) && amb.members(x).iter().all(|&y| self.apply(y) == y)
    }

    /// `φ^α = (α|_P)⁻¹ ∘ φ ∘ α`, a map `P^α → (P^φ)^α`. `α` must be
    /// defined on both the domain and the image of `self`.
    pub fn conjugate_by(&self, amb: &Ambient, alpha: &Morphism) -> Result<Morphism> {
        if !amb.le(self.dom, alpha.dom) || !amb.le(self.img, alpha.dom) {
            return Err(Error::DomainMismatch("conjugating map must be defined on the domain and image"));
        }
        let mut map = vec![NONE; amb.size()].into_boxed_slice();
        for &x in amb.members(self.dom) {
            map[alpha.apply(x) as usize] = alpha.apply(self.apply(x));
        }
        let dom = alpha.image_of(amb, self.dom);
        Ok(Self::from_map(amb, dom, map))
    }

    pub fn describe(&self, amb: &Ambient) -> String {
        let pairs: Vec<String> = amb
            .members(self.dom)
            .iter()
            .filter(|&&x| x != 0)
            .map(|&x| format!("{} -> {}", amb.label(x), amb.label(self.apply(x))))
            .collect();
        format!("[{}]", pairs.join(", "))
    }
}
