//! Diestel-Leader graphs `DL(m, n)` and the identification of `DL(m, m)`
//! with the Cayley graph of `G ≀ Z`, `|G| = m`, over `{t·g : g ∈ G}`.
//!
//! A tree vertex is a height plus finitely many nonzero digits. In `T1` the
//! digits sit at positions `<= h1`; in `T2` at positions `>= 1 - h2`. A
//! vertex of `DL(m, n)` is a pair with `h1 + h2 = 0`, so the two digit
//! domains split `Z` at the cursor `k = h1`: `T1` holds positions `<= k`,
//! `T2` holds positions `>= k + 1`.
//!
//! Moving up in `T1` chooses one of `m` digits at `h1 + 1` and forces `T2`
//! to drop its digit there; moving down in `T1` forgets the digit at `h1`
//! and chooses one of `n` digits at position `h1` in `T2`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::wreath::{ball, GeneratingSet, LampConfig, WreathElement, WreathGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Tree {
    T1,
    T2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TreeVertex {
    pub tree: Tree,
    pub height: i64,
    /// Nonzero digits by position, sorted.
    pub digits: Vec<(i64, u32)>,
}

impl TreeVertex {
    fn allows(&self, pos: i64) -> bool {
        match self.tree {
            Tree::T1 => pos <= self.height,
            Tree::T2 => pos >= 1 - self.height,
        }
    }

    fn with_digit(&self, height: i64, pos: i64, d: u32) -> TreeVertex {
        let mut digits: Vec<(i64, u32)> = self.digits.iter().copied().filter(|e| e.0 != pos).collect();
        if d != 0 {
            digits.push((pos, d));
            digits.sort_unstable();
        }
        TreeVertex { tree: self.tree, height, digits }
    }

    fn without(&self, height: i64, pos: i64) -> TreeVertex {
        self.with_digit(height, pos, 0)
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.height)?;
        for (i, (p, d)) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}={d}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DLVertex {
    pub v1: TreeVertex,
    pub v2: TreeVertex,
}

impl DLVertex {
    /// `(x₀, y₀)`, the vertex of the identity.
    pub fn origin() -> Self {
        DLVertex {
            v1: TreeVertex { tree: Tree::T1, height: 0, digits: vec![] },
            v2: TreeVertex { tree: Tree::T2, height: 0, digits: vec![] },
        }
    }

    /// Checks the height condition, digit domains and digit range.
    pub fn validate(&self, m: usize, n: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidVertex(format!("{self}: {msg}")));
        if self.v1.tree != Tree::T1 || self.v2.tree != Tree::T2 {
            return bad("tree tags out of order".into());
        }
        if self.v1.height + self.v2.height != 0 {
            return bad("heights do not sum to zero".into());
        }
        for (v, base) in [(&self.v1, m), (&self.v2, n)] {
            if v.digits.windows(2).any(|w| w[0].0 >= w[1].0) {
                return bad("digit positions not strictly increasing".into());
            }
            for &(p, d) in &v.digits {
                if !v.allows(p) {
                    return bad(format!("digit at {p} outside the domain of {:?}", v.tree));
                }
                if d == 0 || d as usize >= base {
                    return bad(format!("digit {d} at {p} not in 1..{base}"));
                }
            }
        }
        Ok(())
    }
}

/// Canonical string `h1:[p=d,...] | h2:[p=d,...]`.
impl fmt::Display for DLVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.v1, self.v2)
    }
}

impl Serialize for DLVertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for DLVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidVertex(format!("cannot parse `{s}`"));
        let parse_tree = |text: &str, tree: Tree| -> Result<TreeVertex> {
            let (h, rest) = text.trim().split_once(':').ok_or_else(bad)?;
            let height = h.trim().parse().map_err(|_| bad())?;
            let inner = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
            let mut digits = Vec::new();
            for e in inner.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                let (p, d) = e.split_once('=').ok_or_else(bad)?;
                digits.push((p.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?));
            }
            Ok(TreeVertex { tree, height, digits })
        };
        let (a, b) = s.split_once('|').ok_or_else(bad)?;
        Ok(DLVertex { v1: parse_tree(a, Tree::T1)?, v2: parse_tree(b, Tree::T2)? })
    }
}

pub fn vertex_of_element(g: &WreathElement) -> DLVertex {
    let k = g.shift;
    let split = |keep: &dyn Fn(i64) -> bool| -> Vec<(i64, u32)> {
        g.lamps.iter().filter(|&(p, _)| keep(p)).map(|(p, v)| (p, v as u32)).collect()
    };
    DLVertex {
        v1: TreeVertex { tree: Tree::T1, height: k, digits: split(&|p| p <= k) },
        v2: TreeVertex { tree: Tree::T2, height: -k, digits: split(&|p| p > k) },
    }
}

pub fn element_of_vertex(v: &DLVertex, m: usize) -> Result<WreathElement> {
    v.validate(m, m)?;
    let pairs = v.v1.digits.iter().chain(&v.v2.digits).map(|&(p, d)| (p, d as usize));
    Ok(WreathElement::new(LampConfig::from_pairs(pairs)?, v.v1.height))
}

/// The `m + n` neighbours of `v` in `DL(m, n)`, sorted.
pub fn graph_neighbors(v: &DLVertex, m: usize, n: usize) -> Vec<DLVertex> {
    let h = v.v1.height;
    let mut out = Vec::with_capacity(m + n);
    for d in 0..m as u32 {
        out.push(DLVertex { v1: v.v1.with_digit(h + 1, h + 1, d), v2: v.v2.without(-h - 1, h + 1) });
    }
    for e in 0..n as u32 {
        out.push(DLVertex { v1: v.v1.without(h - 1, h), v2: v.v2.with_digit(-h + 1, h, e) });
    }
    out.sort_unstable();
    out
}

/// `{g·s : s ∈ {t·h}^±1}`, sorted and deduplicated.
pub fn action_neighbors(w: &WreathGroup, g: &WreathElement) -> Vec<WreathElement> {
    let set: BTreeSet<WreathElement> = w.generators(GeneratingSet::TA).iter().map(|s| w.mul(g, s)).collect();
    set.into_iter().collect()
}

/// Spheres of the ball around the origin of `DL(m, n)`, each sorted.
pub fn dl_ball(m: usize, n: usize, radius: usize) -> Vec<Vec<DLVertex>> {
    let mut seen: HashSet<DLVertex> = HashSet::from([DLVertex::origin()]);
    let mut spheres = vec![vec![DLVertex::origin()]];
    for r in 1..=radius {
        let mut next = Vec::new();
        for v in &spheres[r - 1] {
            for u in graph_neighbors(v, m, n) {
                if seen.insert(u.clone()) {
                    next.push(u);
                }
            }
        }
        next.sort_unstable();
        spheres.push(next);
    }
    spheres
}

#[derive(Clone, Debug, Serialize)]
pub struct CayleyReport {
    pub m: usize,
    pub radius: usize,
    /// Sphere sizes in the Cayley graph over `{t·g}`.
    pub cayley_spheres: Vec<usize>,
    /// Sphere sizes around `(x₀, y₀)` in `DL(m, m)`.
    pub dl_spheres: Vec<usize>,
    pub vertices_checked: usize,
    pub passed: bool,
    pub mismatch: Option<String>,
}

/// Checks on the ball of radius `radius` that `vertex_of_element` is a
/// bijection onto the `DL(m, m)` ball that preserves spheres, inverts
/// `element_of_vertex`, and carries right multiplication by `{t·g}^±1`
/// onto graph adjacency, with every vertex of degree `2m`.
pub fn check_cayley_isomorphism(m: usize, radius: usize) -> Result<CayleyReport> {
    let w = WreathGroup::lamplighter(m)?;
    let cayley = ball(&w, GeneratingSet::TA, radius);
    let dl = dl_ball(m, m, radius);
    let mut report = CayleyReport {
        m,
        radius,
        cayley_spheres: cayley.sphere_sizes(),
        dl_spheres: dl.iter().map(Vec::len).collect(),
        vertices_checked: 0,
        passed: true,
        mismatch: None,
    };
    let fail = |report: &mut CayleyReport, msg: String| {
        if report.passed {
            report.passed = false;
            report.mismatch = Some(msg);
        }
    };
    for (r, (sphere, dl_sphere)) in cayley.spheres.iter().zip(&dl).enumerate() {
        let mut image: Vec<DLVertex> = sphere.iter().map(vertex_of_element).collect();
        image.sort_unstable();
        if image.windows(2).any(|p| p[0] == p[1]) {
            fail(&mut report, format!("vertex_of_element is not injective on sphere {r}"));
        }
        if &image != dl_sphere {
            let extra = image.iter().find(|v| dl_sphere.binary_search(v).is_err());
            fail(
                &mut report,
                format!("sphere {r} differs; first vertex not in the DL sphere: {}", extra.map_or("-".into(), |v| v.to_string())),
            );
        }
        for g in sphere {
            let v = vertex_of_element(g);
            report.vertices_checked += 1;
            match element_of_vertex(&v, m) {
                Ok(back) if &back == g => {}
                _ => fail(&mut report, format!("round trip fails at {g}")),
            }
            let mut via_action: Vec<DLVertex> = action_neighbors(&w, g).iter().map(vertex_of_element).collect();
            via_action.sort_unstable();
            let via_graph = graph_neighbors(&v, m, m);
            if via_action.len() != 2 * m {
                fail(&mut report, format!("{g} has {} distinct neighbours, expected {}", via_action.len(), 2 * m));
            }
            if via_action != via_graph {
                fail(&mut report, format!("adjacency differs at {g} (vertex {v})"));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> WreathElement {
        s.parse().unwrap()
    }

    fn vx(s: &str) -> DLVertex {
        s.parse().unwrap()
    }

    #[test]
    fn locating_elements() {
        assert_eq!(vertex_of_element(&WreathElement::default()), DLVertex::origin());
        assert_eq!(vertex_of_element(&el("[0=1]@0")), vx("0:[0=1] | 0:[]"));
        assert_eq!(vertex_of_element(&el("[1=1]@0")), vx("0:[] | 0:[1=1]"));
        assert_eq!(element_of_vertex(&vx("1:[] | -1:[]"), 2).unwrap(), el("[]@1"));
        assert_eq!(element_of_vertex(&vx("0:[0=2] | 0:[]"), 3).unwrap(), el("[0=2]@0"));
    }

    #[test]
    fn malformed_vertices() {
        for bad in ["0:[1=1] | 0:[]", "0:[] | 0:[0=1]", "1:[] | 0:[]", "0:[0=3] | 0:[]", "0:[0=0] | 0:[]"] {
            assert!(element_of_vertex(&vx(bad), 3).is_err(), "{bad}");
        }
        assert!("0:[] 0:[]".parse::<DLVertex>().is_err());
    }

    #[test]
    fn canonical_string_round_trip() {
        let v = vertex_of_element(&el("[-2=1, 0=2, 3=1]@1"));
        assert_eq!(v.to_string(), "1:[-2=1,0=2] | -1:[3=1]");
        assert_eq!(vx(&v.to_string()), v);
    }

    #[test]
    fn degrees() {
        let v = vertex_of_element(&el("[-1=1, 2=2]@1"));
        assert_eq!(graph_neighbors(&v, 3, 3).len(), 6);
        assert_eq!(graph_neighbors(&DLVertex::origin(), 2, 2).len(), 4);
        assert_eq!(graph_neighbors(&DLVertex::origin(), 2, 5).len(), 7);
        let up: Vec<String> = graph_neighbors(&DLVertex::origin(), 2, 2)
            .iter()
            .filter(|u| u.v1.height == 1)
            .map(ToString::to_string)
            .collect();
        assert_eq!(up, vec!["1:[] | -1:[]", "1:[1=1] | -1:[]"]);
    }

    #[test]
    fn action_examples() {
        let w = WreathGroup::lamplighter(2).unwrap();
        let ns = action_neighbors(&w, &w.identity());
        let expected: BTreeSet<WreathElement> =
            [el("[]@1"), el("[1=1]@1"), el("[]@-1"), el("[0=1]@-1")].into_iter().collect();
        assert_eq!(ns, expected.into_iter().collect::<Vec<_>>());
        let w3 = WreathGroup::lamplighter(3).unwrap();
        assert!(action_neighbors(&w3, &el("[]@-1")).contains(&el("[0=1]@0")));
    }

    #[test]
    fn cayley_isomorphism_small() {
        let r = check_cayley_isomorphism(2, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.cayley_spheres, vec![1]);
        for (m, radius) in [(2, 4), (3, 3), (4, 2)] {
            let r = check_cayley_isomorphism(m, radius).unwrap();
            assert!(r.passed, "{:?}", r.mismatch);
            assert_eq!(r.cayley_spheres, r.dl_spheres);
        }
    }
}
