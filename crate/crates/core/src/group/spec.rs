//! The group spec mini-grammar: `C5`, `C2xC4`, `D12`, `Q8`, `S5`, `A6`, and
//! explicit tables as a text document.

use std::fmt;
use std::str::FromStr;

use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    DirectSum(Vec<GroupSpec>),
    Table(Vec<Vec<usize>>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Quaternion8 => Ok(FiniteGroup::quaternion8()),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::Alternating(n) => FiniteGroup::alternating(*n),
            GroupSpec::DirectSum(parts) => {
                let factors = parts.iter().map(GroupSpec::build).collect::<Result<Vec<_>>>()?;
                FiniteGroup::direct_sum(factors)
            }
            GroupSpec::Table(rows) => FiniteGroup::from_table(rows),
        }
    }

    /// Parses a table document: the order on the first non-comment line, then
    /// one row of whitespace-separated indices per line. `#` starts a comment.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let bad = |m: &str| Error::InvalidTable(m.to_string());
        let order: usize = lines
            .next()
            .ok_or_else(|| bad("missing order line"))?
            .parse()
            .map_err(|_| bad("first line must be the group order"))?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| bad(&format!("bad entry `{t}`"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != order {
            return Err(bad(&format!("expected {order} rows, found {}", rows.len())));
        }
        Ok(GroupSpec::Table(rows))
    }
}

/// Convenience: parse and build in one step.
pub fn build_group(spec: &str) -> Result<FiniteGroup> {
    spec.parse::<GroupSpec>()?.build()
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('\n') {
            return GroupSpec::parse_table(s);
        }
        let parts: Vec<&str> = s.split('x').collect();
        if parts.len() > 1 {
            let factors = parts.iter().map(|p| parse_atom(p, s)).collect::<Result<Vec<_>>>()?;
            return Ok(GroupSpec::DirectSum(factors));
        }
        parse_atom(s, s)
    }
}

fn parse_atom(atom: &str, whole: &str) -> Result<GroupSpec> {
    let err = || Error::GroupSpec(whole.to_string());
    let atom = atom.trim();
    if atom == "Q8" {
        return Ok(GroupSpec::Quaternion8);
    }
    let mut chars = atom.chars();
    let head = chars.next().ok_or_else(err)?;
    let rest = chars.as_str();
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let n: usize = rest.parse().map_err(|_| err())?;
    match head {
        'C' => Ok(GroupSpec::Cyclic(n)),
        'D' => Ok(GroupSpec::Dihedral(n)),
        'S' => Ok(GroupSpec::Symmetric(n)),
        'A' => Ok(GroupSpec::Alternating(n)),
        _ => Err(err()),
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::DirectSum(parts) => {
                let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", names.join("x"))
            }
            GroupSpec::Table(rows) => write!(f, "table[{}]", rows.len()),
        }
    }
}
