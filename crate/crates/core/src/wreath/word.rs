//! Words over the generating sets `{a, t}` and `{t, ta, ..., ta^(n-1)}` of
//! the lamplighter group `L_n`.
//!
//! Grammar: whitespace-separated tokens `t`, `a`, `(ta)`, `(ta^K)` with
//! `1 <= K < n`, each optionally followed by `^-1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{WreathElement, WreathGroup};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GeneratingSet {
    /// `{a, t}`, or `{t} ∪ gens(G)` for a general base group.
    AT,
    /// `{t·g : g ∈ G}`; for `L_n`, `{t, ta, ..., ta^(n-1)}`.
    TA,
}

impl fmt::Display for GeneratingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratingSet::AT => "at",
            GeneratingSet::TA => "ta",
        })
    }
}

impl FromStr for GeneratingSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "at" => Ok(GeneratingSet::AT),
            "ta" => Ok(GeneratingSet::TA),
            _ => Err(Error::Domain(format!("unknown generating set `{s}` (expected at or ta)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    T,
    A,
    /// `t·a^k`, `1 <= k < n`.
    TA(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Token {
    pub letter: Letter,
    /// `+1` or `-1`.
    pub exponent: i8,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter {
            Letter::T => write!(f, "t")?,
            Letter::A => write!(f, "a")?,
            Letter::TA(1) => write!(f, "(ta)")?,
            Letter::TA(k) => write!(f, "(ta^{k})")?,
        }
        if self.exponent < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Word {
    pub set: GeneratingSet,
    pub n: usize,
    pub tokens: Vec<Token>,
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Word {
    pub fn empty(set: GeneratingSet, n: usize) -> Self {
        Word { set, n, tokens: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Every token of the generating set, positive letters first.
    pub fn alphabet(set: GeneratingSet, n: usize) -> Vec<Token> {
        let letters: Vec<Letter> = match set {
            GeneratingSet::AT => vec![Letter::A, Letter::T],
            GeneratingSet::TA => std::iter::once(Letter::T).chain((1..n as u32).map(Letter::TA)).collect(),
        };
        [1i8, -1]
            .iter()
            .flat_map(|&e| letters.iter().map(move |&letter| Token { letter, exponent: e }))
            .collect()
    }

    /// Left-to-right product in `L_n`.
    pub fn eval(&self) -> Result<WreathElement> {
        WreathGroup::lamplighter(self.n)?.eval_word(self)
    }
}

impl WreathGroup {
    /// The element a single letter stands for.
    pub fn letter(&self, letter: Letter) -> WreathElement {
        match letter {
            Letter::T => self.t(),
            Letter::A => self.lamp(0, 1),
            Letter::TA(k) => self.mul(&self.t(), &self.lamp(0, k as usize)),
        }
    }

    /// Evaluates a word; the base group must be `C(n)` for the word's `n`.
    pub fn eval_word(&self, w: &Word) -> Result<WreathElement> {
        if self.lamp_order() != Some(w.n) {
            return Err(Error::UnsupportedGroup(format!(
                "words over L_{} cannot be evaluated in {} wr Z",
                w.n,
                self.base().family()
            )));
        }
        let mut acc = self.identity();
        for tok in &w.tokens {
            let g = self.letter(tok.letter);
            let g = if tok.exponent < 0 { self.inv(&g) } else { g };
            acc = self.mul(&acc, &g);
        }
        Ok(acc)
    }
}

pub fn parse_word(text: &str, set: GeneratingSet, n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::Domain(format!("lamp order must be at least 2, got {n}")));
    }
    let tokens = text
        .split_whitespace()
        .enumerate()
        .map(|(index, raw)| parse_token(raw, index, set, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(Word { set, n, tokens })
}

fn parse_token(raw: &str, index: usize, set: GeneratingSet, n: usize) -> Result<Token> {
    let err = |message: String| Error::Word { index, token: raw.to_string(), message };
    let split = if raw.starts_with('(') {
        raw.find(')').map(|i| i + 1).ok_or_else(|| err("missing `)`".into()))?
    } else {
        raw.find('^').unwrap_or(raw.len())
    };
    let (body, suffix) = raw.split_at(split);
    let exponent = match suffix {
        "" => 1,
        "^-1" => -1,
        other => return Err(err(format!("only the exponent ^-1 is allowed, found `{other}`"))),
    };
    let letter = match body {
        "t" => Letter::T,
        "a" => Letter::A,
        paren if paren.starts_with('(') => {
            let inner = &paren[1..paren.len() - 1];
            let k = match inner {
                "ta" => 1,
                _ => {
                    let k = inner
                        .strip_prefix("ta^")
                        .ok_or_else(|| err("unknown token".into()))?;
                    if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(err(format!("exponent `{k}` is not a decimal integer")));
                    }
                    k.parse::<usize>().map_err(|_| err("exponent out of range".into()))?
                }
            };
            if k == 0 || k >= n {
                return Err(err(format!("(ta^K) needs 1 <= K < {n}")));
            }
            Letter::TA(k as u32)
        }
        _ => return Err(err("unknown token".into())),
    };
    let allowed = match set {
        GeneratingSet::AT => matches!(letter, Letter::T | Letter::A),
        GeneratingSet::TA => matches!(letter, Letter::T | Letter::TA(_)),
    };
    if !allowed {
        return Err(err(format!("not in the {set} generating set")));
    }
    Ok(Token { letter, exponent })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let w = parse_word("t^-1 (ta) ", GeneratingSet::TA, 3).unwrap();
        assert_eq!(
            w.tokens,
            vec![
                Token { letter: Letter::T, exponent: -1 },
                Token { letter: Letter::TA(1), exponent: 1 }
            ]
        );
        assert!(parse_word("", GeneratingSet::AT, 2).unwrap().is_empty());
        let w = parse_word("(ta^2)^-1 t", GeneratingSet::TA, 3).unwrap();
        assert_eq!(w.to_string(), "(ta^2)^-1 t");
        assert_eq!(parse_word("(ta^1)", GeneratingSet::TA, 3).unwrap().to_string(), "(ta)");
    }

    #[test]
    fn rejects_bad_tokens() {
        let cases = [
            ("b", GeneratingSet::AT),
            ("t^2", GeneratingSet::AT),
            ("t^1", GeneratingSet::AT),
            ("a^-2", GeneratingSet::AT),
            ("(ta)", GeneratingSet::AT),
            ("a", GeneratingSet::TA),
            ("(ta^3)", GeneratingSet::TA),
            ("(ta^0)", GeneratingSet::TA),
            ("(ta^x)", GeneratingSet::TA),
            ("(ta^+1)", GeneratingSet::TA),
            ("(ta)^2", GeneratingSet::TA),
            ("(ta", GeneratingSet::TA),
            ("(tb)", GeneratingSet::TA),
        ];
        for (text, set) in cases {
            assert!(parse_word(text, set, 3).is_err(), "{text}");
        }
        match parse_word("t b", GeneratingSet::AT, 2) {
            Err(Error::Word { index, token, .. }) => assert_eq!((index, token.as_str()), (1, "b")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn evaluates() {
        let w = WreathGroup::lamplighter(3).unwrap();
        let word = |s: &str| parse_word(s, GeneratingSet::TA, 3).unwrap().eval().unwrap();
        assert_eq!(word("t^-1 (ta)"), w.lamp(0, 1));
        assert_eq!(word("t^-1 (ta^2)"), w.lamp(0, 2));
        assert!(parse_word("t t^-1", GeneratingSet::AT, 3).unwrap().eval().unwrap().is_identity());
        let q = WreathGroup::new(crate::group::FiniteGroup::quaternion8());
        assert!(q.eval_word(&parse_word("t", GeneratingSet::AT, 8).unwrap()).is_err());
    }
}
