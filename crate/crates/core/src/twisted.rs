//! Twisted conjugacy classes and Reidemeister numbers.
//!
//! For `φ ∈ Aut(G)`, `G` acts on itself by `σ·α = σ α φ(σ)⁻¹`; the orbits
//! are the `φ`-twisted classes and their number is `R(φ)`. Three methods are
//! provided: orbit enumeration, the cokernel of `Id - φ` (abelian `G`), and
//! counting ordinary classes fixed by `φ`.
//!
//! For an automorphism of `G ≀ Z` with `ε = -1`, the lamp base splits into
//! blocks, and `R` is assembled from per-block counts.

use serde::Serialize;

use crate::automorphisms::{block_map, blocks_of, BlockKind, BlockMap, LampAutSpec};
use crate::error::{Error, Result};
use crate::group::{cokernel_order_mod, conjugacy_classes, gcd, FiniteGroup, GroupAut};
use crate::wreath::WreathGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassMethod {
    Orbit,
    Cokernel,
    Fh,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedClassReport {
    pub count: usize,
    /// Least element index of each class, ascending.
    pub representatives: Vec<usize>,
    pub method: ClassMethod,
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            let up = self.0[self.0[x] as usize];
            self.0[x] = up;
            x = up as usize;
        }
        x
    }

    /// The smaller root wins, so every root is its class minimum.
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.0[hi] = lo as u32;
        }
    }
}

/// Orbits of `σ·α = σ α φ(σ)⁻¹`. Stepping with a generating set of `G`
/// reaches the same orbits as stepping with every `σ`.
pub fn twisted_classes(g: &FiniteGroup, phi: &GroupAut) -> TwistedClassReport {
    let mut uf = UnionFind::new(g.order());
    let steps: Vec<(usize, usize)> = g.generators().iter().map(|&s| (s, g.inv(phi.apply(s)))).collect();
    for a in g.elements() {
        for &(s, t) in &steps {
            uf.union(a, g.mul(g.mul(s, a), t));
        }
    }
    let representatives: Vec<usize> = g.elements().filter(|&x| uf.find(x) == x).collect();
    TwistedClassReport { count: representatives.len(), representatives, method: ClassMethod::Orbit }
}

/// `|G| / |{x φ(x)⁻¹}|` for abelian `G`.
pub fn reidemeister_abelian(g: &FiniteGroup, phi: &GroupAut) -> Result<usize> {
    if !g.is_abelian() {
        return Err(Error::Domain(format!("the cokernel method needs an abelian group, not {}", g.family())));
    }
    let mut hit = vec![false; g.order()];
    let mut image = 0;
    for x in g.elements() {
        let y = g.mul(x, g.inv(phi.apply(x)));
        if !std::mem::replace(&mut hit[y], true) {
            image += 1;
        }
    }
    Ok(g.order() / image)
}

/// Number of conjugacy classes `C` with `φ(C) = C`.
pub fn reidemeister_fh(g: &FiniteGroup, phi: &GroupAut) -> usize {
    let classes = conjugacy_classes(g);
    let mut class_of = vec![0; g.order()];
    for (k, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = k;
        }
    }
    classes.iter().enumerate().filter(|(k, c)| class_of[phi.apply(c[0])] == *k).count()
}

/// How a block count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockMethod {
    /// Union-find on the carrier.
    Orbit,
    /// For abelian `G`, `|coker(Id - ψ)| = |ker(Id - ψ)|` is the number of
    /// fixed points of the block map `ψ`, counted from `ξ` alone.
    FixedPoints,
    /// Smith normal form over `Z_n` for `x ↦ kx` on `C(n)`.
    ClosedForm,
}

/// Twisted classes of one block of `φ'`, by orbit enumeration when the
/// carrier has at most `carrier_cap` elements and by the closed form for
/// `C(n)` otherwise. Abelian blocks are cross-checked against the cokernel.
pub fn block_class_count(w: &WreathGroup, s: &LampAutSpec, i: i64, carrier_cap: usize) -> Result<usize> {
    Ok(block_count(w, s, i, carrier_cap, false)?.0)
}

/// Fixed points of the block map at `i`, counted without building the
/// carrier: `x` with `ξ²(x) = x` for a pair, `ξ(x) = x` for the middle.
fn fixed_point_count(g: &FiniteGroup, s: &LampAutSpec, middle: bool) -> usize {
    g.elements()
        .filter(|&x| {
            let y = s.xi.apply(x);
            if middle { y == x } else { s.xi.apply(y) == x }
        })
        .count()
}

fn block_count(
    w: &WreathGroup,
    s: &LampAutSpec,
    i: i64,
    carrier_cap: usize,
    fast: bool,
) -> Result<(usize, BlockMethod)> {
    if s.epsilon != -1 {
        return Err(Error::NoBlocks);
    }
    let g = w.base();
    let middle = 2 * i == s.offset;
    if fast && g.is_abelian() {
        return Ok((fixed_point_count(g, s, middle), BlockMethod::FixedPoints));
    }
    let size = if middle { Some(g.order()) } else { g.order().checked_mul(g.order()) };
    if size.is_some_and(|n| n <= carrier_cap) {
        let b = block_map(w, s, i)?;
        let count = twisted_classes(&b.carrier, &b.map).count;
        if b.carrier.is_abelian() {
            let coker = reidemeister_abelian(&b.carrier, &b.map)?;
            if coker != count {
                return Err(Error::MethodDisagreement(format!(
                    "block {i}: {count} orbits but cokernel of order {coker}"
                )));
            }
        }
        return Ok((count, BlockMethod::Orbit));
    }
    match (w.lamp_order(), s.unit(g)) {
        (Some(n), Some(k)) => {
            let k = k as i64;
            let count = if middle {
                gcd((1 - k).rem_euclid(n as i64) as usize, n)
            } else {
                cokernel_order_mod(&[vec![1, -k], vec![-k, 1]], n)
            };
            Ok((count, BlockMethod::ClosedForm))
        }
        _ => Err(Error::Capacity { what: "block carrier".into(), cap: carrier_cap, flag: "--carrier-cap" }),
    }
}

/// Points of the block fixed by `φ'`, as `[x, y]` for a pair block (`x` at
/// position `i`) and `[x]` for the middle. Includes the identity.
pub fn block_fixed_points(w: &WreathGroup, s: &LampAutSpec, i: i64) -> Result<Vec<Vec<usize>>> {
    let b = block_map(w, s, i)?;
    Ok(fixed_points(&b))
}

fn fixed_points(b: &BlockMap) -> Vec<Vec<usize>> {
    b.carrier
        .elements()
        .filter(|&z| b.map.apply(z) == z)
        .map(|z| match b.kind {
            BlockKind::Middle => vec![z],
            BlockKind::Pair => {
                let n = b.carrier.order().isqrt();
                vec![z / n, z % n]
            }
        })
        .collect()
}

/// Twisted classes of `φ'` restricted to the blocks meeting `window`: the
/// product of the per-block counts.
pub fn window_class_count(w: &WreathGroup, s: &LampAutSpec, window: &[i64], carrier_cap: usize) -> Result<usize> {
    let mut total = 1usize;
    for (lo, _) in blocks_of(s, window)? {
        total = total.saturating_mul(block_class_count(w, s, lo, carrier_cap)?);
    }
    Ok(total)
}

/// The same count by orbit enumeration on `⊕ G_p` over every position `p`
/// of the blocks meeting `window`.
pub fn window_class_count_direct(
    w: &WreathGroup,
    s: &LampAutSpec,
    window: &[i64],
    carrier_cap: usize,
) -> Result<usize> {
    let mut positions: Vec<i64> = blocks_of(s, window)?.into_iter().flat_map(|(a, b)| [a, b]).collect();
    positions.sort_unstable();
    positions.dedup();
    let g = w.base();
    let too_big = || Error::Capacity { what: "window carrier".into(), cap: carrier_cap, flag: "--carrier-cap" };
    let size = (0..positions.len()).try_fold(1usize, |acc, _| acc.checked_mul(g.order()));
    if size.is_none_or(|n| n > carrier_cap) {
        return Err(too_big());
    }
    if positions.is_empty() {
        return Ok(1);
    }
    let carrier = FiniteGroup::power(g, positions.len())?;
    let target: Vec<usize> = positions
        .iter()
        .map(|&p| positions.binary_search(&(s.offset - p)).expect("blocks are closed under i -> c - i"))
        .collect();
    let image = carrier
        .elements()
        .map(|z| {
            let parts = carrier.components(z);
            let mut out = vec![0; parts.len()];
            for (k, &v) in parts.iter().enumerate() {
                out[target[k]] = s.xi.apply(v);
            }
            carrier.from_components(&out)
        })
        .collect();
    let map = GroupAut::from_images(&carrier, image)?;
    Ok(twisted_classes(&carrier, &map).count)
}

/// One row of the per-block table of [`reidemeister_wreath`].
#[derive(Clone, Debug, Serialize)]
pub struct BlockRow {
    /// `false` for `φ'`, `true` for `t·φ'`.
    pub twisted_by_t: bool,
    pub offset: i64,
    pub index: i64,
    pub partner: i64,
    pub kind: BlockKind,
    pub class_count: usize,
    pub method: BlockMethod,
    /// Listed when the block was enumerated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_points: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum ReidemeisterResult {
    Finite { value: usize },
    InfiniteCertified { reason: String },
    Unknown,
}

impl ReidemeisterResult {
    pub fn finite(&self) -> Option<usize> {
        match self {
            ReidemeisterResult::Finite { value } => Some(*value),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WreathReidemeister {
    pub spec: LampAutSpec,
    pub epsilon: i8,
    pub blocks: Vec<BlockRow>,
    pub result: ReidemeisterResult,
}

/// `R` of the automorphism of `G ≀ Z` given by `s`.
///
/// `ε = +1` induces the identity on `Z`, so `R = ∞`. For `ε = -1`,
/// `R = R(φ') + R(t·φ')` where `t·φ'` has offset `c + 1`. All pair blocks
/// carry the same map on `G ⊕ G`; if it has two or more classes, there are
/// infinitely many classes of `φ'`. Otherwise `R(φ')` is the middle count
/// (1 when the offset is odd). Conjugation does not change `R`.
///
/// Abelian blocks are counted by [`BlockMethod::FixedPoints`]; others are
/// enumerated, or use the closed form past `carrier_cap`.
pub fn reidemeister_wreath(w: &WreathGroup, s: &LampAutSpec, carrier_cap: usize) -> Result<WreathReidemeister> {
    let mut out = WreathReidemeister { spec: s.clone(), epsilon: s.epsilon, blocks: Vec::new(), result: ReidemeisterResult::Unknown };
    if s.epsilon == 1 {
        out.result = ReidemeisterResult::InfiniteCertified { reason: "eps=+1: the induced map on Z is the identity".into() };
        return Ok(out);
    }
    let mut total = 0;
    for (twisted_by_t, offset) in [(false, s.offset), (true, s.offset + 1)] {
        let part = LampAutSpec { offset, ..s.pure() };
        let mut indices = vec![offset.div_euclid(2) + 1];
        if offset.rem_euclid(2) == 0 {
            indices.push(offset / 2);
        }
        let mut r = 1;
        for i in indices {
            let (count, method) = block_count(w, &part, i, carrier_cap, true)?;
            let b = (method == BlockMethod::Orbit).then(|| block_map(w, &part, i)).transpose()?;
            let kind = if 2 * i == offset { BlockKind::Middle } else { BlockKind::Pair };
            out.blocks.push(BlockRow {
                twisted_by_t,
                offset,
                index: i,
                partner: offset - i,
                kind,
                class_count: count,
                method,
                fixed_points: b.as_ref().map(fixed_points),
            });
            if kind == BlockKind::Pair && count >= 2 {
                let who = if twisted_by_t { "t·φ'" } else { "φ'" };
                out.result = ReidemeisterResult::InfiniteCertified {
                    reason: format!("every pair block {{i, {offset}-i}} of {who} has {count} twisted classes"),
                };
                return Ok(out);
            }
            if kind == BlockKind::Middle {
                r = count;
            }
        }
        total += r;
    }
    out.result = ReidemeisterResult::Finite { value: total };
    Ok(out)
}
