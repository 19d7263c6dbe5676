//! Subgroup computations: center, commutator subgroup, abelianization,
//! Sylow subgroups, conjugacy classes and simplicity.

use serde::Serialize;

use super::{factorize, is_prime, AbelianDecomposition, FiniteGroup};
use crate::error::{Error, Result};

/// Sorted elements of `Z(G)`.
pub fn center(g: &FiniteGroup) -> Vec<usize> {
    g.elements()
        .filter(|&z| g.generators().iter().all(|&s| g.mul(z, s) == g.mul(s, z)))
        .collect()
}

/// Sorted elements of `[G, G]`: the normal closure of the commutators of
/// generator pairs.
pub fn commutator_subgroup(g: &FiniteGroup) -> Vec<usize> {
    let gens = g.generators();
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    g.normal_closure(&seeds)
}

/// Primary decomposition of `G / [G, G]`.
pub fn abelianization(g: &FiniteGroup) -> AbelianDecomposition {
    if g.is_abelian() {
        return AbelianDecomposition::of_group(g).expect("abelian");
    }
    let normal = commutator_subgroup(g);
    let mut member = vec![false; g.order()];
    for &x in &normal {
        member[x] = true;
    }
    // order of each coset xN = least k with x^k ∈ N
    let mut assigned = vec![false; g.order()];
    let mut coset_orders = Vec::new();
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        for &n in &normal {
            assigned[g.mul(x, n)] = true;
        }
        let mut k = 1;
        let mut y = x;
        while !member[y] {
            y = g.mul(y, x);
            k += 1;
        }
        coset_orders.push(k);
    }
    AbelianDecomposition::from_element_orders(coset_orders.len(), coset_orders)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowSubgroup {
    pub prime: usize,
    pub elements: Vec<usize>,
    /// True iff the subgroup is normal, i.e. the only Sylow subgroup.
    pub unique: bool,
}

/// One Sylow `p`-subgroup, grown from the trivial group by adjoining
/// `p`-elements that normalize the current subgroup.
pub fn sylow(g: &FiniteGroup, p: usize) -> Result<SylowSubgroup> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let target = factorize(g.order())
        .into_iter()
        .find(|&(q, _)| q == p)
        .map_or(1, |(_, v)| p.pow(v));
    if target == 1 {
        return Ok(SylowSubgroup { prime: p, elements: vec![0], unique: true });
    }
    let orders = g.element_orders();
    let is_p_element = |x: usize| target % orders[x] as usize == 0;

    let mut gens: Vec<usize> = Vec::new();
    let mut elements = vec![0];
    let mut member = vec![false; g.order()];
    member[0] = true;
    while elements.len() < target {
        let next = g.elements().find(|&x| {
            !member[x] && is_p_element(x) && gens.iter().all(|&h| member[g.conjugate(x, h)])
        });
        let Some(x) = next else {
            // cannot happen in a group: a non-maximal p-subgroup has a
            // p-element in its normalizer outside it
            return Err(Error::Domain("Sylow search stalled".into()));
        };
        gens.push(x);
        elements = g.closure(&gens);
        member.iter_mut().for_each(|m| *m = false);
        for &y in &elements {
            member[y] = true;
        }
    }
    let p_elements = g.elements().filter(|&x| is_p_element(x)).count();
    Ok(SylowSubgroup { prime: p, elements, unique: p_elements == target })
}

/// Conjugacy classes, each sorted, ordered by least element.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut class_of = vec![usize::MAX; g.order()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in g.elements() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = vec![x];
        class_of[x] = id;
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &s in g.generators() {
                let z = g.conjugate(s, y);
                if class_of[z] == usize::MAX {
                    class_of[z] = id;
                    class.push(z);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// True iff `G` is nontrivial and has no normal subgroups besides `1` and `G`.
pub fn is_simple(g: &FiniteGroup) -> bool {
    if g.order() == 1 {
        return false;
    }
    if g.is_abelian() {
        return is_prime(g.order());
    }
    conjugacy_classes(g)
        .iter()
        .skip(1)
        .all(|class| g.normal_closure(&class[..1]).len() == g.order())
}
