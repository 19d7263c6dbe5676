//! Automorphisms of `G ≀ Z` from compatible pairs, their blocks, and
//! characteristic subgroups.
//!
//! A spec `(ξ, c, ε)` sends the lamp `g` at position `i` to `ξ(g)` at
//! position `c + ε·i` and `t` to `t^ε`; it may be followed by conjugation
//! by a fixed element. For `ε = -1` the lamp positions fall into blocks
//! `{i, c - i}`: pairs, plus one middle position `c/2` when `c` is even.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{automorphism_group, center, commutator_subgroup, sylow, FiniteGroup, GroupAut};
use crate::wreath::{ball, theta_shift, GeneratingSet, LampConfig, WreathElement, WreathGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LampAutSpec {
    pub xi: GroupAut,
    pub offset: i64,
    pub epsilon: i8,
    /// When set, the automorphism is followed by conjugation by this element.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<WreathElement>,
}

/// Validates `(ξ, c, ε)` and spot-checks the compatibility identity
/// `φ'(θ_b(a)) = θ_{εb}(φ'(a))` on a fixed sample.
pub fn make_autospec(w: &WreathGroup, xi: GroupAut, offset: i64, epsilon: i8) -> Result<LampAutSpec> {
    xi.validate(w.base())?;
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::InvalidAutomorphism(format!("eps must be +1 or -1, got {epsilon}")));
    }
    let spec = LampAutSpec { xi, offset, epsilon, conjugator: None };
    let n = w.base().order();
    let samples: Vec<LampConfig> = (0..4i64)
        .map(|s| {
            let pairs = (0..3i64).map(|k| (k * (s + 1) - 2, ((s as usize + 1) * (k as usize + 1)) % n));
            LampConfig::from_pairs(pairs).expect("distinct positions")
        })
        .collect();
    for a in &samples {
        for b in -2..=2 {
            let lhs = spec.apply_lamps(&theta_shift(b, a));
            let rhs = theta_shift(epsilon as i64 * b, &spec.apply_lamps(a));
            if lhs != rhs {
                return Err(Error::Compatibility(format!("b = {b}, a = {a}")));
            }
        }
    }
    Ok(spec)
}

impl LampAutSpec {
    /// `φ'` on the lamp base.
    pub fn apply_lamps(&self, lamps: &LampConfig) -> LampConfig {
        let e = self.epsilon as i64;
        let pairs = lamps.iter().map(|(p, v)| (self.offset + e * p, self.xi.apply(v)));
        LampConfig::from_pairs(pairs).expect("positions stay distinct")
    }

    pub fn with_conjugator(mut self, w: WreathElement) -> Self {
        self.conjugator = Some(w);
        self
    }

    /// The same automorphism without its inner part.
    pub fn pure(&self) -> LampAutSpec {
        LampAutSpec { conjugator: None, ..self.clone() }
    }

    /// `ξ = x ↦ kx` on `C(n)`, reported as `k`.
    pub fn unit(&self, g: &FiniteGroup) -> Option<usize> {
        matches!(g.family(), crate::group::Family::Cyclic(_)).then(|| self.xi.apply(1 % g.order()))
    }

    /// Human-readable form in the CLI spec syntax where possible.
    pub fn describe(&self, g: &FiniteGroup) -> String {
        let xi = match self.unit(g) {
            Some(k) => format!("*{k}"),
            None => {
                let imgs: Vec<String> = self.xi.images().map(|x| x.to_string()).collect();
                format!("[{}]", imgs.join(","))
            }
        };
        let eps = if self.epsilon > 0 { "+1" } else { "-1" };
        let mut s = format!("xi={xi} c={} eps={eps}", self.offset);
        if let Some(w) = &self.conjugator {
            s.push_str(&format!(" conj={w}"));
        }
        s
    }
}

impl WreathGroup {
    pub fn apply_aut(&self, s: &LampAutSpec, g: &WreathElement) -> WreathElement {
        let image = WreathElement::new(s.apply_lamps(&g.lamps), s.epsilon as i64 * g.shift);
        match &s.conjugator {
            Some(w) => self.conjugate(w, &image),
            None => image,
        }
    }

    /// `s2 ∘ s1`.
    pub fn compose_aut(&self, s2: &LampAutSpec, s1: &LampAutSpec) -> LampAutSpec {
        let conjugator = match (&s2.conjugator, &s1.conjugator) {
            (None, None) => None,
            (w2, w1) => {
                let w2 = w2.clone().unwrap_or_default();
                let w1 = w1.as_ref().map_or_else(WreathElement::default, |w| self.apply_aut(&s2.pure(), w));
                Some(self.mul(&w2, &w1))
            }
        };
        LampAutSpec {
            xi: s2.xi.compose(&s1.xi),
            offset: s2.offset + s2.epsilon as i64 * s1.offset,
            epsilon: s2.epsilon * s1.epsilon,
            conjugator,
        }
    }
}

/// Every `(ξ, c, ε)` with `ξ ∈ Aut(G)`, `c ∈ offsets`, `ε = ±1`.
pub fn all_compatible_specs(w: &WreathGroup, aut_cap: usize, offsets: &[i64]) -> Result<Vec<LampAutSpec>> {
    let mut out = Vec::new();
    for xi in automorphism_group(w.base(), aut_cap)? {
        for &c in offsets {
            for eps in [1, -1] {
                out.push(LampAutSpec { xi: xi.clone(), offset: c, epsilon: eps, conjugator: None });
            }
        }
    }
    Ok(out)
}

/// The `ξ` part of a textual spec.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiRef {
    /// Position in the list returned by `automorphism_group`.
    Index(usize),
    /// `x ↦ kx` on `C(n)`.
    Unit(usize),
}

/// `aut xi=<index|*k> c=<int> eps=<+1|-1>`; the leading `aut` is optional.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutSpecText {
    pub xi: XiRef,
    pub offset: i64,
    pub epsilon: i8,
}

impl FromStr for AutSpecText {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidAutomorphism(format!("`{s}`: {m}"));
        let (mut xi, mut offset, mut epsilon) = (None, None, None);
        for (i, part) in s.split_whitespace().enumerate() {
            if i == 0 && part == "aut" {
                continue;
            }
            let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            match key {
                "xi" => {
                    xi = Some(match value.strip_prefix('*') {
                        Some(k) => XiRef::Unit(k.parse().map_err(|_| bad("bad unit"))?),
                        None => XiRef::Index(value.parse().map_err(|_| bad("bad automorphism index"))?),
                    })
                }
                "c" => offset = Some(value.parse().map_err(|_| bad("bad offset"))?),
                "eps" => {
                    epsilon = Some(match value {
                        "+1" | "1" => 1,
                        "-1" => -1,
                        _ => return Err(bad("eps must be +1 or -1")),
                    })
                }
                _ => return Err(bad(&format!("unknown key `{key}`"))),
            }
        }
        Ok(AutSpecText {
            xi: xi.ok_or_else(|| bad("missing xi"))?,
            offset: offset.ok_or_else(|| bad("missing c"))?,
            epsilon: epsilon.ok_or_else(|| bad("missing eps"))?,
        })
    }
}

impl AutSpecText {
    pub fn resolve(&self, w: &WreathGroup, aut_cap: usize) -> Result<LampAutSpec> {
        let xi = match self.xi {
            XiRef::Unit(k) => GroupAut::cyclic_unit(w.base(), k)?,
            XiRef::Index(i) => {
                let auts = automorphism_group(w.base(), aut_cap)?;
                let count = auts.len();
                auts.into_iter().nth(i).ok_or_else(|| {
                    Error::InvalidAutomorphism(format!("index {i} out of range; Aut(G) has {count} elements"))
                })?
            }
        };
        make_autospec(w, xi, self.offset, self.epsilon)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Pair,
    Middle,
}

/// The restriction of `φ'` to the block `G_i ⊕ G_{c-i}` (pair) or `G_{c/2}`
/// (middle). Pair carriers number `(x at i, y at c-i)` as `x·|G| + y`.
#[derive(Clone, Debug, Serialize)]
pub struct BlockMap {
    pub index: i64,
    pub partner: i64,
    pub kind: BlockKind,
    #[serde(skip)]
    pub carrier: FiniteGroup,
    pub map: GroupAut,
}

/// `(x, y) ↦ (ξ(y), ξ(x))` on a pair block, `x ↦ ξ(x)` on the middle.
pub fn block_map(w: &WreathGroup, s: &LampAutSpec, i: i64) -> Result<BlockMap> {
    if s.epsilon != -1 {
        return Err(Error::NoBlocks);
    }
    let g = w.base();
    let partner = s.offset - i;
    if partner == i {
        return Ok(BlockMap { index: i, partner, kind: BlockKind::Middle, carrier: g.clone(), map: s.xi.clone() });
    }
    let n = g.order();
    let carrier = FiniteGroup::power(g, 2)?;
    let image = (0..n * n)
        .map(|z| {
            let (x, y) = (z / n, z % n);
            s.xi.apply(y) * n + s.xi.apply(x)
        })
        .collect();
    let map = GroupAut::from_images(&carrier, image)?;
    Ok(BlockMap { index: i, partner, kind: BlockKind::Pair, carrier, map })
}

/// The distinct blocks meeting `window`, as `(low, high)` position pairs.
pub fn blocks_of(s: &LampAutSpec, window: &[i64]) -> Result<Vec<(i64, i64)>> {
    if s.epsilon != -1 {
        return Err(Error::NoBlocks);
    }
    let set: BTreeSet<(i64, i64)> = window
        .iter()
        .map(|&i| {
            let j = s.offset - i;
            (i.min(j), i.max(j))
        })
        .collect();
    Ok(set.into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CharSubgroupTag {
    /// `⊕ G_i`.
    LampBase,
    /// `⊕ [G, G]_i`.
    CommutatorLamps,
    /// `Z(G) ≀ Z`.
    CenterWreath,
    /// `H_d = ⟨τ^(n/d)⟩ ≀ Z` in `L_n`, `d | n`.
    OrderSubgroup { d: usize },
    /// `S_p ≀ Z` for the unique Sylow `p`-subgroup.
    SylowWreath { p: usize },
}

impl fmt::Display for CharSubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharSubgroupTag::LampBase => write!(f, "lamp-base"),
            CharSubgroupTag::CommutatorLamps => write!(f, "commutator-lamps"),
            CharSubgroupTag::CenterWreath => write!(f, "center-wreath"),
            CharSubgroupTag::OrderSubgroup { d } => write!(f, "h{d}"),
            CharSubgroupTag::SylowWreath { p } => write!(f, "sylow{p}"),
        }
    }
}

impl FromStr for CharSubgroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |rest: &str| rest.parse::<usize>().map_err(|_| Error::InvalidTag(s.to_string()));
        match s {
            "lamp-base" => Ok(CharSubgroupTag::LampBase),
            "commutator-lamps" => Ok(CharSubgroupTag::CommutatorLamps),
            "center-wreath" => Ok(CharSubgroupTag::CenterWreath),
            _ if s.starts_with('h') || s.starts_with('H') => Ok(CharSubgroupTag::OrderSubgroup { d: num(&s[1..])? }),
            _ if s.starts_with("sylow") => Ok(CharSubgroupTag::SylowWreath { p: num(&s[5..])? }),
            _ => Err(Error::InvalidTag(s.to_string())),
        }
    }
}

/// A tag resolved against a base group: which lamp values are allowed and
/// whether the shift must vanish.
#[derive(Clone, Debug)]
pub struct CharSubgroup {
    pub tag: CharSubgroupTag,
    allowed: Vec<bool>,
    shift_zero: bool,
}

impl CharSubgroup {
    pub fn resolve(w: &WreathGroup, tag: CharSubgroupTag) -> Result<Self> {
        let g = w.base();
        let mut allowed = vec![false; g.order()];
        let mark = |allowed: &mut Vec<bool>, xs: &[usize]| xs.iter().for_each(|&x| allowed[x] = true);
        let shift_zero = matches!(tag, CharSubgroupTag::LampBase | CharSubgroupTag::CommutatorLamps);
        match tag {
            CharSubgroupTag::LampBase => allowed.iter_mut().for_each(|a| *a = true),
            CharSubgroupTag::CommutatorLamps => mark(&mut allowed, &commutator_subgroup(g)),
            CharSubgroupTag::CenterWreath => mark(&mut allowed, &center(g)),
            CharSubgroupTag::OrderSubgroup { d } => {
                let n = w.lamp_order().ok_or_else(|| {
                    Error::InvalidTag(format!("{tag} needs a cyclic base group, not {}", g.family()))
                })?;
                if d == 0 || n % d != 0 {
                    return Err(Error::InvalidTag(format!("{tag}: {d} does not divide {n}")));
                }
                (0..n).step_by(n / d).for_each(|x| allowed[x] = true);
            }
            CharSubgroupTag::SylowWreath { p } => {
                let s = sylow(g, p).map_err(|e| Error::InvalidTag(e.to_string()))?;
                if !s.unique {
                    return Err(Error::InvalidTag(format!("the Sylow {p}-subgroup of {} is not unique", g.family())));
                }
                mark(&mut allowed, &s.elements);
            }
        }
        Ok(CharSubgroup { tag, allowed, shift_zero })
    }

    pub fn contains(&self, g: &WreathElement) -> bool {
        (!self.shift_zero || g.shift == 0) && g.lamps.iter().all(|(_, v)| self.allowed.get(v).copied().unwrap_or(false))
    }

    /// Allowed lamp values.
    pub fn lamp_values(&self) -> Vec<usize> {
        (0..self.allowed.len()).filter(|&x| self.allowed[x]).collect()
    }
}

pub fn is_member(w: &WreathGroup, g: &WreathElement, tag: CharSubgroupTag) -> Result<bool> {
    Ok(CharSubgroup::resolve(w, tag)?.contains(g))
}

#[derive(Clone, Debug, Serialize)]
pub struct CharReport {
    pub tag: CharSubgroupTag,
    pub window: usize,
    pub specs: usize,
    pub members: usize,
    pub checks: usize,
    pub violation_count: usize,
    /// The first few violations.
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Members of the subgroup near the identity: those in the `{a, t}` ball of
/// radius `window`, the single lamps and `t`-powers at positions within
/// `window`, and all products of two such single lamps.
pub fn window_members(w: &WreathGroup, sub: &CharSubgroup, window: usize) -> Vec<WreathElement> {
    let r = window as i64;
    let mut singles = Vec::new();
    for pos in -r..=r {
        for v in sub.lamp_values().into_iter().filter(|&v| v != 0) {
            singles.push(w.lamp(pos, v));
        }
    }
    let mut set: BTreeSet<WreathElement> = ball(w, GeneratingSet::AT, window)
        .elements()
        .filter(|g| sub.contains(g))
        .cloned()
        .collect();
    for x in &singles {
        for y in &singles {
            set.insert(w.mul(x, y));
        }
    }
    set.extend(singles);
    if !sub.shift_zero {
        set.extend((-r..=r).map(|k| w.t_pow(k)));
    }
    set.into_iter().filter(|g| sub.contains(g)).collect()
}

/// Checks `s(g) ∈ H` for every spec `s` and every member `g` of `H` from
/// [`window_members`].
pub fn verify_characteristic(
    w: &WreathGroup,
    tag: CharSubgroupTag,
    specs: &[LampAutSpec],
    window: usize,
) -> Result<CharReport> {
    let sub = CharSubgroup::resolve(w, tag)?;
    let members = window_members(w, &sub, window);
    let mut report = CharReport {
        tag,
        window,
        specs: specs.len(),
        members: members.len(),
        checks: 0,
        violation_count: 0,
        violations: Vec::new(),
        passed: true,
    };
    for s in specs {
        for g in &members {
            report.checks += 1;
            let image = w.apply_aut(s, g);
            if !sub.contains(&image) {
                report.passed = false;
                report.violation_count += 1;
                if report.violations.len() < 5 {
                    report.violations.push(format!("{} maps {g} to {image}", s.describe(w.base())));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn el(s: &str) -> WreathElement {
        s.parse().unwrap()
    }

    fn unit_spec(n: usize, k: usize, c: i64, eps: i8) -> (WreathGroup, LampAutSpec) {
        let w = WreathGroup::lamplighter(n).unwrap();
        let xi = GroupAut::cyclic_unit(w.base(), k).unwrap();
        let s = make_autospec(&w, xi, c, eps).unwrap();
        (w, s)
    }

    #[test]
    fn apply_examples() {
        let (w, s) = unit_spec(5, 1, 0, 1);
        assert_eq!(w.apply_aut(&s, &el("[1=2, 4=1]@3")), el("[1=2, 4=1]@3"));
        let (w, s) = unit_spec(5, 2, 0, -1);
        assert!(w.apply_aut(&s, &w.identity()).is_identity());
        assert_eq!(w.apply_aut(&s, &w.lamp(1, 1)), w.lamp(-1, 2));
        assert_eq!(w.apply_aut(&s, &w.lamp(0, 1)), w.lamp(0, 2));
        let (w, s) = unit_spec(2, 1, 0, -1);
        assert_eq!(w.apply_aut(&s, &w.t()), w.t_pow(-1));
        let (w, s) = unit_spec(7, 3, 4, -1);
        assert_eq!(w.apply_aut(&s, &w.lamp(0, 1)), w.lamp(4, 3));
    }

    #[test]
    fn spec_text() {
        let t: AutSpecText = "aut xi=*2 c=0 eps=-1".parse().unwrap();
        assert_eq!(t, AutSpecText { xi: XiRef::Unit(2), offset: 0, epsilon: -1 });
        let t: AutSpecText = "xi=3 c=-2 eps=+1".parse().unwrap();
        assert_eq!(t.xi, XiRef::Index(3));
        for bad in ["xi=*2 c=0", "xi=*2 c=0 eps=2", "xi=q c=0 eps=1", "xi=1 c=0 eps=1 z=1"] {
            assert!(bad.parse::<AutSpecText>().is_err(), "{bad}");
        }
        let w = WreathGroup::lamplighter(5).unwrap();
        let s = "xi=*2 c=0 eps=-1".parse::<AutSpecText>().unwrap().resolve(&w, 24).unwrap();
        assert_eq!(s.describe(w.base()), "xi=*2 c=0 eps=-1");
        assert!("xi=*5 c=0 eps=-1".parse::<AutSpecText>().unwrap().resolve(&w, 24).is_err());
        let q = WreathGroup::new(FiniteGroup::quaternion8());
        assert!("xi=23 c=0 eps=1".parse::<AutSpecText>().unwrap().resolve(&q, 24).is_ok());
        assert!("xi=24 c=0 eps=1".parse::<AutSpecText>().unwrap().resolve(&q, 24).is_err());
    }

    #[test]
    fn blocks() {
        let (w, s) = unit_spec(2, 1, 0, -1);
        let b = block_map(&w, &s, 1).unwrap();
        assert_eq!((b.kind, b.partner), (BlockKind::Pair, -1));
        // (x, y) -> (y, x) on Z_2 + Z_2
        assert_eq!(b.map.images().collect::<Vec<_>>(), vec![0, 2, 1, 3]);
        let (w, s) = unit_spec(5, 2, 0, -1);
        let b = block_map(&w, &s, 0).unwrap();
        assert_eq!(b.kind, BlockKind::Middle);
        assert_eq!(b.map.images().collect::<Vec<_>>(), vec![0, 2, 4, 1, 3]);
        let b = block_map(&w, &s, 3).unwrap();
        // (1, 0) -> (0, 2)
        assert_eq!(b.map.apply(5), 2);
        let (w, s) = unit_spec(5, 2, 0, 1);
        assert_eq!(block_map(&w, &s, 0).unwrap_err(), Error::NoBlocks);
    }

    #[test]
    fn block_partition() {
        let (_, s) = unit_spec(3, 1, 1, -1);
        assert_eq!(blocks_of(&s, &[0, 1, 2, -1]).unwrap(), vec![(-1, 2), (0, 1)]);
        let (_, s) = unit_spec(3, 1, 0, -1);
        assert_eq!(blocks_of(&s, &[0, 1, -1]).unwrap(), vec![(-1, 1), (0, 0)]);
    }

    #[test]
    fn membership() {
        let w = WreathGroup::lamplighter(4).unwrap();
        let h2 = CharSubgroupTag::OrderSubgroup { d: 2 };
        assert!(is_member(&w, &w.identity(), h2).unwrap());
        assert!(is_member(&w, &w.lamp(0, 2), h2).unwrap());
        assert!(!is_member(&w, &w.lamp(0, 1), h2).unwrap());
        assert!(is_member(&w, &el("[0=2]@5"), h2).unwrap());
        assert!(!is_member(&w, &el("[]@1"), CharSubgroupTag::LampBase).unwrap());
        assert!(is_member(&w, &w.identity(), CharSubgroupTag::OrderSubgroup { d: 3 }).is_err());
        let s4 = WreathGroup::new(build_group("S4").unwrap());
        assert!(is_member(&s4, &s4.identity(), CharSubgroupTag::SylowWreath { p: 2 }).is_err());
        assert_eq!("h3".parse::<CharSubgroupTag>().unwrap(), CharSubgroupTag::OrderSubgroup { d: 3 });
        assert_eq!("sylow2".parse::<CharSubgroupTag>().unwrap().to_string(), "sylow2");
    }

    #[test]
    fn characteristic_checks() {
        let w = WreathGroup::lamplighter(4).unwrap();
        let specs = all_compatible_specs(&w, 24, &[0, 1]).unwrap();
        assert_eq!(specs.len(), 8);
        let r = verify_characteristic(&w, CharSubgroupTag::OrderSubgroup { d: 2 }, &specs, 4).unwrap();
        assert!(r.passed && r.members > 10);
        let r = verify_characteristic(&w, CharSubgroupTag::LampBase, &specs, 4).unwrap();
        assert!(r.passed);
        let q = WreathGroup::new(FiniteGroup::quaternion8());
        let specs: Vec<LampAutSpec> = all_compatible_specs(&q, 24, &[0]).unwrap()
            .into_iter()
            .filter(|s| s.epsilon == -1)
            .collect();
        assert_eq!(specs.len(), 24);
        assert!(verify_characteristic(&q, CharSubgroupTag::CenterWreath, &specs, 3).unwrap().passed);
    }

    #[test]
    fn non_characteristic_subgroup_is_caught() {
        // the subgroup generated by a reflection is not invariant under Aut(D6)
        let w = WreathGroup::new(build_group("D6").unwrap());
        let specs = all_compatible_specs(&w, 24, &[0]).unwrap();
        let sub = CharSubgroup { tag: CharSubgroupTag::LampBase, allowed: vec![true, false, false, true, false, false], shift_zero: true };
        let members = window_members(&w, &sub, 2);
        let moved = specs.iter().any(|s| members.iter().any(|g| !sub.contains(&w.apply_aut(s, g))));
        assert!(moved);
    }

    #[test]
    fn composition_law() {
        let w = WreathGroup::new(build_group("S3").unwrap());
        let auts = automorphism_group(w.base(), 24).unwrap();
        let sample = [el("[0=1, 2=3]@1"), el("[-1=4]@-2"), el("[1=5, 3=2]@0")];
        for (a, b) in [(1, 2), (3, 4), (5, 0)] {
            for (c1, e1, c2, e2) in [(0, 1, 1, -1), (2, -1, -1, -1), (1, -1, 3, 1)] {
                let s1 = make_autospec(&w, auts[a].clone(), c1, e1).unwrap().with_conjugator(el("[0=1]@1"));
                let s2 = make_autospec(&w, auts[b].clone(), c2, e2).unwrap();
                let s2 = if c2 == 1 { s2.with_conjugator(el("[2=2]@-1")) } else { s2 };
                let s = w.compose_aut(&s2, &s1);
                for g in &sample {
                    assert_eq!(w.apply_aut(&s, g), w.apply_aut(&s2, &w.apply_aut(&s1, g)));
                }
            }
        }
    }
}
