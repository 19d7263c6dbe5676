//! Word lengths: the closed formula for `L_n` over `{a, t}` and a BFS
//! oracle over either generating set.

use std::collections::HashMap;

use serde::Serialize;

use super::{normal_form, GeneratingSet, Side, WreathElement, WreathGroup};
use crate::error::Result;

/// `Σ|e_i| + Σ|f_j| + min{2j_l + i_k + |m - i_k|, 2i_k + j_l + |m + j_l|}`.
pub fn word_length_ct(w: &WreathGroup, g: &WreathElement) -> Result<u64> {
    let nf = normal_form(w, g, Side::Rf)?;
    let (i, j, m) = (nf.i_k(), nf.j_l(), nf.shift);
    let right_first = 2 * j + i + (m - i).abs();
    let left_first = 2 * i + j + (m + j).abs();
    Ok(nf.lamp_letters() + right_first.min(left_first) as u64)
}

/// The ball of a given radius in a Cayley graph of `G ≀ Z`, by spheres.
#[derive(Clone, Debug, Serialize)]
pub struct Ball {
    pub set: GeneratingSet,
    pub radius: usize,
    /// Sorted elements at each distance `0..=radius`.
    pub spheres: Vec<Vec<WreathElement>>,
    #[serde(skip)]
    pub distance: HashMap<WreathElement, usize>,
}

impl Ball {
    pub fn sphere_sizes(&self) -> Vec<usize> {
        self.spheres.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.distance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distance.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &WreathElement> {
        self.spheres.iter().flatten()
    }
}

pub fn ball(w: &WreathGroup, set: GeneratingSet, radius: usize) -> Ball {
    bfs(w, set, radius, None)
}

/// Distance from the identity, or `None` when it exceeds `cap`.
pub fn word_length_bfs(w: &WreathGroup, g: &WreathElement, set: GeneratingSet, cap: usize) -> Option<usize> {
    bfs(w, set, cap, Some(g)).distance.get(g).copied()
}

fn bfs(w: &WreathGroup, set: GeneratingSet, radius: usize, target: Option<&WreathElement>) -> Ball {
    let gens = w.generators(set);
    let mut distance = HashMap::from([(w.identity(), 0)]);
    let mut spheres = vec![vec![w.identity()]];
    for r in 1..=radius {
        if target.is_some_and(|t| distance.contains_key(t)) {
            break;
        }
        let mut next = Vec::new();
        for x in &spheres[r - 1] {
            for s in &gens {
                let y = w.mul(x, s);
                if !distance.contains_key(&y) {
                    distance.insert(y.clone(), r);
                    next.push(y);
                }
            }
        }
        next.sort_unstable();
        spheres.push(next);
    }
    let radius = spheres.len() - 1;
    Ball { set, radius, spheres, distance }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> WreathElement {
        s.parse().unwrap()
    }

    #[test]
    fn formula_examples() {
        let w = WreathGroup::lamplighter(2).unwrap();
        assert_eq!(word_length_ct(&w, &w.identity()).unwrap(), 0);
        assert_eq!(word_length_ct(&w, &el("[0=1]@1")).unwrap(), 2);
        assert_eq!(word_length_ct(&w, &el("[-1=1, 1=1]@0")).unwrap(), 6);
    }

    #[test]
    fn bfs_examples() {
        let w = WreathGroup::lamplighter(2).unwrap();
        assert_eq!(word_length_bfs(&w, &w.identity(), GeneratingSet::TA, 0), Some(0));
        assert_eq!(word_length_bfs(&w, &el("[0=1]@0"), GeneratingSet::AT, 10), Some(1));
        assert_eq!(word_length_bfs(&w, &el("[0=1]@0"), GeneratingSet::TA, 10), Some(2));
        assert_eq!(word_length_bfs(&w, &el("[-1=1, 1=1]@0"), GeneratingSet::AT, 10), Some(6));
        assert_eq!(word_length_bfs(&w, &el("[-1=1, 1=1]@0"), GeneratingSet::AT, 5), None);
    }

    #[test]
    fn formula_matches_bfs_on_small_balls() {
        for (n, r) in [(2, 5), (3, 4), (4, 4)] {
            let w = WreathGroup::lamplighter(n).unwrap();
            let b = ball(&w, GeneratingSet::AT, r);
            for (g, &d) in &b.distance {
                assert_eq!(word_length_ct(&w, g).unwrap(), d as u64, "{g} in L_{n}");
            }
        }
    }

    #[test]
    fn sphere_sizes_are_deterministic() {
        let w = WreathGroup::lamplighter(2).unwrap();
        let a = ball(&w, GeneratingSet::AT, 4);
        let b = ball(&w, GeneratingSet::AT, 4);
        assert_eq!(a.spheres, b.spheres);
        assert_eq!(a.sphere_sizes()[..3], [1, 3, 6]);
    }
}
