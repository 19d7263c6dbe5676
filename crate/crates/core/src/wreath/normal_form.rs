//! The right-first and left-first normal forms of `L_n`.
//!
//! `rf(g) = a_{i_1}^{e_1} ... a_{i_k}^{e_k} a_{-j_1}^{f_1} ... a_{-j_l}^{f_l} t^m`
//! with `0 <= i_1 < ... < i_k`, `0 < j_1 < ... < j_l` and exponents in
//! `{-h, ..., h}`, `h = floor(n/2)`; for even `n` the representative `+h`
//! is used and `-h` never appears. `lf(g)` lists the negative block first.

use std::fmt;

use serde::Serialize;

use super::{GeneratingSet, Letter, LampConfig, Token, Word, WreathElement, WreathGroup};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Rf,
    Lf,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rf" => Ok(Side::Rf),
            "lf" => Ok(Side::Lf),
            _ => Err(Error::Domain(format!("unknown normal form side `{s}` (expected rf or lf)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    pub side: Side,
    pub n: usize,
    /// `(i, e)` with `i >= 0`, increasing `i`.
    pub nonneg: Vec<(i64, i64)>,
    /// `(-j, f)` with `j > 0`, increasing `j`.
    pub neg: Vec<(i64, i64)>,
    pub shift: i64,
}

/// Signed representative of `v mod n` in `{-h, ..., h}`, `+h` when `n` is even.
pub(crate) fn balanced(v: usize, n: usize) -> i64 {
    let h = n / 2;
    if v <= h {
        v as i64
    } else {
        v as i64 - n as i64
    }
}

pub fn normal_form(w: &WreathGroup, g: &WreathElement, side: Side) -> Result<NormalForm> {
    let n = w.lamp_order().ok_or_else(|| {
        Error::UnsupportedGroup(format!("normal forms need a cyclic base group, not {}", w.base().family()))
    })?;
    let nonneg = g.lamps.iter().filter(|&(p, _)| p >= 0).map(|(p, v)| (p, balanced(v, n))).collect();
    let neg = g.lamps.iter().rev().filter(|&(p, _)| p < 0).map(|(p, v)| (p, balanced(v, n))).collect();
    Ok(NormalForm { side, n, nonneg, neg, shift: g.shift })
}

impl NormalForm {
    /// The factors `(position, exponent)` in the order the form writes them.
    pub fn factors(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let (first, second) = match self.side {
            Side::Rf => (&self.nonneg, &self.neg),
            Side::Lf => (&self.neg, &self.nonneg),
        };
        first.iter().chain(second.iter()).copied()
    }

    /// Largest nonnegative lamp index `i_k`, 0 when there is none.
    pub fn i_k(&self) -> i64 {
        self.nonneg.last().map_or(0, |&(i, _)| i)
    }

    /// Largest `j_l` over the negative lamps `-j_l`, 0 when there is none.
    pub fn j_l(&self) -> i64 {
        self.neg.last().map_or(0, |&(p, _)| -p)
    }

    /// Number of `a^±1` letters, `Σ|e_i| + Σ|f_j|`.
    pub fn lamp_letters(&self) -> u64 {
        self.nonneg.iter().chain(&self.neg).map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn to_element(&self) -> WreathElement {
        let n = self.n as i64;
        let mut lamps: Vec<(i64, u32)> = self
            .nonneg
            .iter()
            .chain(&self.neg)
            .map(|&(p, e)| (p, e.rem_euclid(n) as u32))
            .collect();
        lamps.sort_unstable();
        WreathElement::new(LampConfig::from_sorted_unchecked(lamps), self.shift)
    }

    /// The form spelled as a word over `{a, t}`, expanding each
    /// `a_i^e = t^i a^e t^-i`.
    pub fn to_word(&self) -> Word {
        let t = |e: i8| Token { letter: Letter::T, exponent: e };
        let a = |e: i8| Token { letter: Letter::A, exponent: e };
        let mut tokens = Vec::new();
        for (p, e) in self.factors() {
            let dir = if p >= 0 { 1 } else { -1 };
            tokens.extend(std::iter::repeat_n(t(dir), p.unsigned_abs() as usize));
            tokens.extend(std::iter::repeat_n(a(e.signum() as i8), e.unsigned_abs() as usize));
            tokens.extend(std::iter::repeat_n(t(-dir), p.unsigned_abs() as usize));
        }
        let dir = if self.shift >= 0 { 1 } else { -1 };
        tokens.extend(std::iter::repeat_n(t(dir), self.shift.unsigned_abs() as usize));
        Word { set: GeneratingSet::AT, n: self.n, tokens }
    }
}

/// `a_0^1 a_2^-1 a_-1^1 t^1`; the identity prints as `t^0`.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, e) in self.factors() {
            write!(f, "a_{p}^{e} ")?;
        }
        write!(f, "t^{}", self.shift)
    }
}
