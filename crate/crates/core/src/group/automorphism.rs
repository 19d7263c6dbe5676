//! Automorphisms of finite groups and brute-force enumeration of `Aut(G)`.

use std::collections::VecDeque;

use serde::Serialize;

use super::{center, gcd, FiniteGroup, Repr};
use crate::error::{Error, Result};

/// An automorphism, stored as the image of every element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GroupAut {
    image: Vec<u32>,
}

impl GroupAut {
    pub fn identity(g: &FiniteGroup) -> Self {
        GroupAut { image: (0..g.order() as u32).collect() }
    }

    /// `x ↦ k·x` on a cyclic group `C(n)`; `k` must be a unit mod `n`.
    pub fn cyclic_unit(g: &FiniteGroup, k: usize) -> Result<Self> {
        let n = g.order();
        if !matches!(g.repr, Repr::Cyclic) {
            return Err(Error::UnsupportedGroup(format!("{} is not a C(n) group", g.family())));
        }
        if gcd(k % n, n) != 1 && n > 1 {
            return Err(Error::InvalidAutomorphism(format!("{k} is not a unit mod {n}")));
        }
        Ok(GroupAut { image: (0..n).map(|x| ((x * k) % n) as u32).collect() })
    }

    /// Conjugation `x ↦ h x h⁻¹`.
    pub fn inner(g: &FiniteGroup, h: usize) -> Self {
        GroupAut { image: g.elements().map(|x| g.conjugate(h, x) as u32).collect() }
    }

    /// Validates an explicit image array.
    pub fn from_images(g: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        let aut = GroupAut { image: image.into_iter().map(|x| x as u32).collect() };
        aut.validate(g)?;
        Ok(aut)
    }

    pub fn validate(&self, g: &FiniteGroup) -> Result<()> {
        let n = g.order();
        if self.image.len() != n {
            return Err(Error::InvalidAutomorphism(format!("{} images for a group of order {n}", self.image.len())));
        }
        let mut hit = vec![false; n];
        for &y in &self.image {
            let y = y as usize;
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return Err(Error::InvalidAutomorphism("not a bijection".into()));
            }
        }
        if self.image[0] != 0 {
            return Err(Error::InvalidAutomorphism("identity not fixed".into()));
        }
        // multiplicativity against generators suffices
        for x in g.elements() {
            for &s in g.generators() {
                if self.apply(g.mul(x, s)) != g.mul(self.apply(x), self.apply(s)) {
                    return Err(Error::InvalidAutomorphism(format!("not multiplicative at ({x}, {s})")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().map(|&x| x as usize)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupAut) -> GroupAut {
        GroupAut { image: other.image.iter().map(|&x| self.image[x as usize]).collect() }
    }

    pub fn inverse(&self) -> GroupAut {
        let mut image = vec![0u32; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y as usize] = x as u32;
        }
        GroupAut { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y as usize)
    }
}

/// All automorphisms of `G`, in a deterministic order.
///
/// `C(n)` is special-cased to the unit multiplications `x ↦ kx`, `k`
/// ascending, at any order. Other groups are enumerated by backtracking over
/// images of a small generating set with partial-homomorphism pruning, and
/// only up to `cap` elements.
pub fn automorphism_group(g: &FiniteGroup, cap: usize) -> Result<Vec<GroupAut>> {
    let mut out = Vec::new();
    visit_automorphisms(g, cap, |a| {
        out.push(a);
        true
    })?;
    Ok(out)
}

/// Streams the automorphisms in the order of [`automorphism_group`] until
/// `visit` returns `false`.
pub fn visit_automorphisms(g: &FiniteGroup, cap: usize, mut visit: impl FnMut(GroupAut) -> bool) -> Result<()> {
    let n = g.order();
    if matches!(g.repr, Repr::Cyclic) {
        for k in (1..n.max(2)).filter(|&k| n == 1 || gcd(k, n) == 1) {
            if !visit(GroupAut::cyclic_unit(g, k)?) {
                break;
            }
        }
        return Ok(());
    }
    if n > cap {
        return Err(Error::Capacity {
            what: format!("automorphism enumeration for {} (order {n})", g.family()),
            cap,
            flag: "--aut-cap",
        });
    }
    let gens = small_generating_set(g);
    let orders = g.element_orders();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&y| orders[y] == orders[s]).collect())
        .collect();
    let mut chosen = Vec::with_capacity(gens.len());
    search(g, &gens, &candidates, &mut chosen, &mut visit);
    Ok(())
}

/// Returns `false` once the visitor asks to stop.
fn search(
    g: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(GroupAut) -> bool,
) -> bool {
    let depth = chosen.len();
    if depth == gens.len() {
        if let Some(map) = extend(g, gens, chosen) {
            if map.iter().all(|&y| y != u32::MAX) {
                return visit(GroupAut { image: map });
            }
        }
        return true;
    }
    for &y in &candidates[depth] {
        chosen.push(y);
        let go_on = extend(g, &gens[..=depth], chosen).is_none() || search(g, gens, candidates, chosen, visit);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Extends `gens[i] ↦ images[i]` to the subgroup the generators span.
/// Returns `None` when the assignment is not an injective homomorphism.
fn extend(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; g.order()];
    let mut used = vec![false; g.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x] as usize;
        for (&s, &fs) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, fs) as u32;
            if map[y] == u32::MAX {
                if std::mem::replace(&mut used[fy as usize], true) {
                    return None;
                }
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// A generating set of minimum size when one of size at most two exists,
/// otherwise the greedy set.
fn small_generating_set(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return vec![];
    }
    if let Some(x) = (1..n).find(|&x| g.element_order(x) == n) {
        return vec![x];
    }
    for a in 1..n {
        for b in a + 1..n {
            if g.closure(&[a, b]).len() == n {
                return vec![a, b];
            }
        }
    }
    g.greedy_generators()
}

/// `Out(G) = 1`, i.e. `|Aut(G)| = |G / Z(G)|`.
pub fn outer_automorphisms_trivial(g: &FiniteGroup, cap: usize) -> Result<bool> {
    let auts = automorphism_group(g, cap)?;
    Ok(auts.len() == g.order() / center(g).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, DEFAULT_AUT_CAP};

    fn brute_force_count(g: &FiniteGroup) -> usize {
        // every bijection fixing the identity, for tiny groups only
        fn rec(g: &FiniteGroup, map: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut usize) {
            let x = map.len();
            if x == g.order() {
                let ok = (0..x).all(|a| (0..x).all(|b| map[g.mul(a, b)] == g.mul(map[a], map[b])));
                *count += ok as usize;
                return;
            }
            for y in 1..g.order() {
                if !used[y] {
                    used[y] = true;
                    map.push(y);
                    rec(g, map, used, count);
                    map.pop();
                    used[y] = false;
                }
            }
        }
        let mut used = vec![false; g.order()];
        used[0] = true;
        let mut count = 0;
        rec(g, &mut vec![0], &mut used, &mut count);
        count
    }

    #[test]
    fn cyclic_units() {
        let g = build_group("C5").unwrap();
        let auts = automorphism_group(&g, DEFAULT_AUT_CAP).unwrap();
        let ks: Vec<usize> = auts.iter().map(|a| a.apply(1)).collect();
        assert_eq!(ks, vec![1, 2, 3, 4]);
        assert_eq!(automorphism_group(&build_group("C1").unwrap(), 1).unwrap().len(), 1);
        assert_eq!(automorphism_group(&build_group("C1000").unwrap(), 1).unwrap().len(), 400);
    }

    #[test]
    fn small_groups_match_brute_force() {
        for spec in ["C2xC2", "S3", "C2xC4", "Q8", "D8", "C2xC2xC2"] {
            let g = build_group(spec).unwrap();
            let auts = automorphism_group(&g, DEFAULT_AUT_CAP).unwrap();
            assert_eq!(auts.len(), brute_force_count(&g), "{spec}");
            for a in &auts {
                a.validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn known_orders() {
        let count = |s: &str| automorphism_group(&build_group(s).unwrap(), DEFAULT_AUT_CAP).unwrap().len();
        assert_eq!(count("C2xC2"), 6);
        assert_eq!(count("S3"), 6);
        assert_eq!(count("Q8"), 24);
        assert_eq!(count("D8"), 8);
        assert_eq!(count("S4"), 24);
        assert_eq!(count("A4"), 24);
        assert_eq!(count("D12"), 12);
        assert_eq!(count("D24"), 48);
    }

    #[test]
    fn closed_under_composition_and_inverse() {
        for spec in ["C2xC2", "S3", "Q8", "D8", "C2xC4", "D12", "C3xC3"] {
            let g = build_group(spec).unwrap();
            let auts = automorphism_group(&g, DEFAULT_AUT_CAP).unwrap();
            let set: std::collections::HashSet<&GroupAut> = auts.iter().collect();
            for a in &auts {
                assert!(set.contains(&a.inverse()), "{spec}");
                for b in &auts {
                    assert!(set.contains(&a.compose(b)), "{spec}");
                }
            }
        }
    }

    #[test]
    fn capacity_error_names_cap() {
        let err = automorphism_group(&build_group("A5").unwrap(), 24).unwrap_err();
        assert!(err.to_string().contains("24") && err.to_string().contains("--aut-cap"));
    }

    #[test]
    fn outer_triviality() {
        assert!(outer_automorphisms_trivial(&build_group("C2").unwrap(), 24).unwrap());
        assert!(outer_automorphisms_trivial(&build_group("S3").unwrap(), 24).unwrap());
        assert!(!outer_automorphisms_trivial(&build_group("C2xC2").unwrap(), 24).unwrap());
        assert!(outer_automorphisms_trivial(&build_group("S4").unwrap(), 24).unwrap());
        assert!(!outer_automorphisms_trivial(&build_group("Q8").unwrap(), 24).unwrap());
    }

    #[test]
    fn s3_automorphisms_are_inner() {
        let g = build_group("S3").unwrap();
        let auts = automorphism_group(&g, 24).unwrap();
        let inner: std::collections::HashSet<GroupAut> = g.elements().map(|h| GroupAut::inner(&g, h)).collect();
        assert!(auts.iter().all(|a| inner.contains(a)));
    }

    #[test]
    fn validation_rejects_non_homomorphisms() {
        let g = build_group("C4").unwrap();
        assert!(GroupAut::from_images(&g, vec![0, 3, 2, 1]).is_ok());
        assert!(GroupAut::from_images(&g, vec![0, 2, 1, 3]).is_err());
        assert!(GroupAut::from_images(&g, vec![0, 1, 1, 3]).is_err());
        assert!(GroupAut::cyclic_unit(&g, 2).is_err());
    }
}
