//! Elements of `G ≀ Z` and their arithmetic.
//!
//! An element is a finitely supported lamp configuration `Z → G` together
//! with a cursor shift `m`, standing for `lamps · t^m`. The product is
//! `(L, k)·(M, l) = (L · θ_k(M), k + l)` where `θ_k` moves every lamp `k`
//! places to the right.

mod metric;
mod normal_form;
mod word;

pub use metric::{ball, word_length_bfs, word_length_ct, Ball};
pub use normal_form::{normal_form, NormalForm, Side};
pub use word::{parse_word, GeneratingSet, Letter, Token, Word};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Finitely supported map from positions to non-identity element indices,
/// kept sorted by position.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampConfig(Vec<(i64, u32)>);

impl LampConfig {
    pub fn new() -> Self {
        LampConfig(Vec::new())
    }

    /// Builds a configuration from `(position, value)` pairs. Identity values
    /// are dropped; a repeated position is an error.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, usize)>) -> Result<Self> {
        let mut v: Vec<(i64, u32)> = pairs
            .into_iter()
            .filter(|&(_, x)| x != 0)
            .map(|(p, x)| (p, x as u32))
            .collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::ElementSyntax("repeated lamp position".into()));
        }
        Ok(LampConfig(v))
    }

    /// Value at `pos` (0, the identity, when unlit).
    pub fn get(&self, pos: i64) -> usize {
        match self.0.binary_search_by_key(&pos, |&(p, _)| p) {
            Ok(i) => self.0[i].1 as usize,
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, usize)> + ExactSizeIterator + '_ {
        self.0.iter().map(|&(p, x)| (p, x as usize))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Lamps at the positions `keep` accepts.
    pub fn restrict(&self, keep: impl Fn(i64) -> bool) -> LampConfig {
        LampConfig(self.0.iter().copied().filter(|&(p, _)| keep(p)).collect())
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<(i64, u32)>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0) && v.iter().all(|&(_, x)| x != 0));
        LampConfig(v)
    }
}

/// `θ_m`: moves every lamp from position `i` to `i + m`.
pub fn theta_shift(m: i64, c: &LampConfig) -> LampConfig {
    LampConfig(c.0.iter().map(|&(p, x)| (p + m, x)).collect())
}

impl fmt::Display for LampConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (p, x)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}={x}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for LampConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// `lamps · t^shift`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WreathElement {
    pub lamps: LampConfig,
    pub shift: i64,
}

impl WreathElement {
    pub fn new(lamps: LampConfig, shift: i64) -> Self {
        WreathElement { lamps, shift }
    }

    pub fn is_identity(&self) -> bool {
        self.lamps.is_empty() && self.shift == 0
    }
}

/// Text form `[p=v, ...]@m`, e.g. `[0=1, 2=2]@-1`; the identity is `[]@0`.
/// Values are element indices of `G`.
impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.lamps, self.shift)
    }
}

impl FromStr for WreathElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ElementSyntax(s.to_string());
        let (lamps, shift) = s.trim().rsplit_once('@').ok_or_else(bad)?;
        let shift: i64 = shift.trim().parse().map_err(|_| bad())?;
        let inner = lamps
            .trim()
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut pairs = Vec::new();
        for entry in inner.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (p, v) = entry.split_once('=').ok_or_else(bad)?;
            pairs.push((p.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?));
        }
        Ok(WreathElement { lamps: LampConfig::from_pairs(pairs)?, shift })
    }
}

/// `G ≀ Z` for a fixed finite group `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathGroup {
    base: FiniteGroup,
}

impl WreathGroup {
    pub fn new(base: FiniteGroup) -> Self {
        WreathGroup { base }
    }

    /// The lamplighter group `L_n = Z_n ≀ Z`.
    pub fn lamplighter(n: usize) -> Result<Self> {
        Ok(WreathGroup::new(FiniteGroup::cyclic(n)?))
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    /// `n` when the base group is `C(n)`.
    pub fn lamp_order(&self) -> Option<usize> {
        matches!(self.base.family(), crate::group::Family::Cyclic(_)).then(|| self.base.order())
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement::default()
    }

    pub fn t(&self) -> WreathElement {
        WreathElement::new(LampConfig::new(), 1)
    }

    /// `t^k`.
    pub fn t_pow(&self, k: i64) -> WreathElement {
        WreathElement::new(LampConfig::new(), k)
    }

    /// The element with the single lamp `g` at `pos` and cursor at 0 (for
    /// `L_n`, `lamp(j, k) = a_j^k`).
    pub fn lamp(&self, pos: i64, g: usize) -> WreathElement {
        let lamps = if g == 0 { LampConfig::new() } else { LampConfig(vec![(pos, g as u32)]) };
        WreathElement::new(lamps, 0)
    }

    /// Checks that every lamp value is an element of `G`.
    pub fn check(&self, x: &WreathElement) -> Result<()> {
        match x.lamps.iter().find(|&(_, v)| !self.base.contains(v)) {
            Some((p, v)) => Err(Error::ForeignElement(format!(
                "lamp {v} at position {p} is not an element of {} (order {})",
                self.base.family(),
                self.base.order()
            ))),
            None => Ok(()),
        }
    }

    pub fn mul(&self, x: &WreathElement, y: &WreathElement) -> WreathElement {
        let a = &x.lamps.0;
        let b = &y.lamps.0;
        let k = x.shift;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let pa = a.get(i).map_or(i64::MAX, |e| e.0);
            let pb = b.get(j).map_or(i64::MAX, |e| e.0 + k);
            if pa < pb {
                out.push(a[i]);
                i += 1;
            } else if pb < pa {
                out.push((pb, b[j].1));
                j += 1;
            } else {
                let v = self.base.mul(a[i].1 as usize, b[j].1 as usize);
                if v != 0 {
                    out.push((pa, v as u32));
                }
                i += 1;
                j += 1;
            }
        }
        WreathElement::new(LampConfig(out), x.shift + y.shift)
    }

    /// Multiplication with a membership check on both operands.
    pub fn try_mul(&self, x: &WreathElement, y: &WreathElement) -> Result<WreathElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    /// `(L, k)^-1 = (θ_{-k}(L^-1), -k)`.
    pub fn inv(&self, x: &WreathElement) -> WreathElement {
        let lamps = x
            .lamps
            .0
            .iter()
            .map(|&(p, v)| (p - x.shift, self.base.inv(v as usize) as u32))
            .collect();
        WreathElement::new(LampConfig(lamps), -x.shift)
    }

    pub fn pow(&self, x: &WreathElement, k: i64) -> WreathElement {
        let base = if k < 0 { self.inv(x) } else { x.clone() };
        (0..k.unsigned_abs()).fold(self.identity(), |acc, _| self.mul(&acc, &base))
    }

    pub fn conjugate(&self, w: &WreathElement, x: &WreathElement) -> WreathElement {
        self.mul(&self.mul(w, x), &self.inv(w))
    }

    /// The generators of `set` together with their inverses, duplicates
    /// removed, in a fixed order.
    ///
    /// `AT` is `{t} ∪ {generators of G at position 0}` (for `L_n` this is
    /// `{a, t}`); `TA` is `{t·g : g ∈ G}`.
    pub fn generators(&self, set: GeneratingSet) -> Vec<WreathElement> {
        let mut gens = Vec::new();
        match set {
            GeneratingSet::AT => {
                for &g in self.base.generators() {
                    gens.push(self.lamp(0, g));
                }
                gens.push(self.t());
            }
            GeneratingSet::TA => {
                for g in self.base.elements() {
                    gens.push(self.mul(&self.t(), &self.lamp(0, g)));
                }
            }
        }
        let inverses: Vec<WreathElement> = gens.iter().map(|g| self.inv(g)).collect();
        for g in inverses {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        gens
    }
}
