//! Finite groups with an explicit, deterministic element numbering.
//!
//! Every group numbers its elements `0..order` with the identity at index 0.
//! The named families use closed-form multiplication (or permutation arrays
//! for `S(n)`/`A(n)`), so no group ever needs a materialized Cayley table to
//! be usable; explicit tables are accepted for custom groups.
//!
//! Element order per family:
//!
//! * `C(n)`: residues `0..n`.
//! * `D(2n)`: rotations `r^0..r^(n-1)`, then reflections `r^i s` at `n + i`.
//! * `Q8`: `1, -1, i, -i, j, -j, k, -k`.
//! * `S(n)`: permutations of `0..n` in lexicographic order.
//! * `A(n)`: the even permutations, in lexicographic order.
//! * `G1 x G2 x ...`: mixed radix, first factor most significant.

mod abelian;
mod automorphism;
mod spec;
mod structure;

pub use abelian::{cokernel_order_mod, smith_diagonal, AbelianDecomposition, PrimaryFactor};
pub use automorphism::{automorphism_group, outer_automorphisms_trivial, visit_automorphisms, GroupAut};
pub use spec::{build_group, GroupSpec};
pub use structure::{
    abelianization, center, commutator_subgroup, conjugacy_classes, is_simple, sylow,
    SylowSubgroup,
};

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest group order accepted by any constructor.
pub const MAX_ORDER: usize = 1 << 20;
/// Largest degree for the permutation-backed families.
pub const MAX_PERM_DEGREE: usize = 8;
/// Largest explicit table; associativity is checked exhaustively up to here.
pub const MAX_TABLE_ORDER: usize = 256;
/// Default cap on the order of groups whose automorphisms are enumerated.
pub const DEFAULT_AUT_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cyclic(usize),
    DirectSum(Vec<Family>),
    /// Parameter is the group order `2n`.
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C{n}"),
            Family::Dihedral(n) => write!(f, "D{n}"),
            Family::Quaternion8 => write!(f, "Q8"),
            Family::Symmetric(n) => write!(f, "S{n}"),
            Family::Alternating(n) => write!(f, "A{n}"),
            Family::Custom => write!(f, "custom"),
            Family::DirectSum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug)]
struct PermData {
    degree: usize,
    perms: Vec<[u8; MAX_PERM_DEGREE]>,
    /// Maps a lexicographic rank in `S(degree)` to an element index
    /// (`u32::MAX` for ranks outside the group). `None` means identity map.
    rank_to_index: Option<Vec<u32>>,
}

#[derive(Clone, Debug)]
enum Repr {
    Cyclic,
    Dihedral { rotations: usize },
    Quaternion,
    Perm(PermData),
    Product { factors: Vec<FiniteGroup>, strides: Vec<usize> },
    Table(Vec<u32>),
}

/// A finite group. Immutable after construction.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    family: Family,
    repr: Repr,
    inverse: Vec<u32>,
    generators: Vec<usize>,
    orders: OnceLock<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("family", &self.family.to_string())
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    /// Two groups are equal when they number the same elements with the same
    /// multiplication; for the named families this is equality of family.
    fn eq(&self, other: &Self) -> bool {
        if self.order != other.order {
            return false;
        }
        match (&self.family, &other.family) {
            (Family::Custom, _) | (_, Family::Custom) => {
                (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == other.mul(a, b)))
            }
            (x, y) => x == y,
        }
    }
}

impl Eq for FiniteGroup {}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::Capacity {
            what: format!("group order {order}"),
            cap: MAX_ORDER,
            flag: "a smaller group spec",
        });
    }
    Ok(())
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::GroupSpec("C0".into()));
        }
        check_order(n)?;
        let inverse = (0..n).map(|a| ((n - a) % n) as u32).collect();
        let generators = if n > 1 { vec![1] } else { vec![] };
        Ok(Self::assemble(n, Family::Cyclic(n), Repr::Cyclic, inverse, generators))
    }

    /// Dihedral group of the given order `2n`, `n >= 2`.
    pub fn dihedral(order: usize) -> Result<Self> {
        if order < 4 || !order.is_multiple_of(2) {
            return Err(Error::GroupSpec(format!("D{order}")));
        }
        check_order(order)?;
        let n = order / 2;
        let inverse = (0..order)
            .map(|x| if x < n { ((n - x) % n) as u32 } else { x as u32 })
            .collect();
        Ok(Self::assemble(
            order,
            Family::Dihedral(order),
            Repr::Dihedral { rotations: n },
            inverse,
            vec![1, n],
        ))
    }

    pub fn quaternion8() -> Self {
        let inverse = (0..8u32).map(|x| if x < 2 { x } else { x ^ 1 }).collect();
        Self::assemble(8, Family::Quaternion8, Repr::Quaternion, inverse, vec![2, 4])
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::permutation_family(n, false)
    }

    pub fn alternating(n: usize) -> Result<Self> {
        Self::permutation_family(n, true)
    }

    fn permutation_family(n: usize, even_only: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::GroupSpec(if even_only { "A0" } else { "S0" }.into()));
        }
        if n > MAX_PERM_DEGREE {
            return Err(Error::Capacity {
                what: format!("permutation degree {n}"),
                cap: MAX_PERM_DEGREE,
                flag: "a smaller degree",
            });
        }
        let all = lexicographic_permutations(n);
        let (perms, rank_to_index) = if even_only {
            let mut map = vec![u32::MAX; all.len()];
            let mut kept = Vec::with_capacity(all.len() / 2 + 1);
            for (rank, p) in all.into_iter().enumerate() {
                if is_even(&p[..n]) {
                    map[rank] = kept.len() as u32;
                    kept.push(p);
                }
            }
            (kept, Some(map))
        } else {
            (all, None)
        };
        let data = PermData { degree: n, perms, rank_to_index };
        let order = data.perms.len();
        let inverse = (0..order)
            .map(|x| {
                let p = &data.perms[x];
                let mut q = identity_perm();
                for i in 0..n {
                    q[p[i] as usize] = i as u8;
                }
                data.index_of(&q) as u32
            })
            .collect();
        let generators = perm_generators(&data, even_only);
        let family = if even_only { Family::Alternating(n) } else { Family::Symmetric(n) };
        Ok(Self::assemble(order, family, Repr::Perm(data), inverse, generators))
    }

    pub fn direct_sum(factors: Vec<FiniteGroup>) -> Result<Self> {
        if factors.is_empty() {
            return Self::cyclic(1);
        }
        if factors.len() == 1 {
            return Ok(factors.into_iter().next().unwrap());
        }
        let mut order: usize = 1;
        for f in &factors {
            order = order.checked_mul(f.order).filter(|&o| o <= MAX_ORDER).ok_or_else(|| {
                Error::Capacity {
                    what: "direct sum order".into(),
                    cap: MAX_ORDER,
                    flag: "a smaller group spec",
                }
            })?;
        }
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len() - 1).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].order;
        }
        let mut inverse = Vec::with_capacity(order);
        for x in 0..order {
            let mut acc = 0;
            for (f, &s) in factors.iter().zip(&strides) {
                let d = (x / s) % f.order;
                acc += f.inv(d) * s;
            }
            inverse.push(acc as u32);
        }
        let mut generators = Vec::new();
        for (f, &s) in factors.iter().zip(&strides) {
            generators.extend(f.generators.iter().map(|&g| g * s));
        }
        let family = Family::DirectSum(
            factors
                .iter()
                .flat_map(|f| match &f.family {
                    Family::DirectSum(parts) => parts.clone(),
                    other => vec![other.clone()],
                })
                .collect(),
        );
        Ok(Self::assemble(order, family, Repr::Product { factors, strides }, inverse, generators))
    }

    /// `k` copies of `base`, as used for block carriers.
    pub fn power(base: &FiniteGroup, k: usize) -> Result<Self> {
        if k == 0 {
            return Self::cyclic(1);
        }
        Self::direct_sum(vec![base.clone(); k])
    }

    /// Builds a group from an explicit Cayley table. Row/column 0 must be
    /// the identity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::Capacity {
                what: format!("explicit table of order {n}"),
                cap: MAX_TABLE_ORDER,
                flag: "a named family",
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n {
                    return Err(Error::InvalidTable(format!("entry {v} out of range in row {i}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTable(format!("row {i} repeats {v}")));
                }
                table.push(v as u32);
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                if std::mem::replace(&mut seen[table[i * n + j] as usize], true) {
                    return Err(Error::InvalidTable(format!("column {j} repeats an entry")));
                }
            }
        }
        for x in 0..n {
            if table[x] as usize != x || table[x * n] as usize != x {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::InvalidTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).unwrap() as u32)
            .collect();
        let mut g = Self::assemble(n, Family::Custom, Repr::Table(table), inverse, vec![]);
        g.generators = g.greedy_generators();
        Ok(g)
    }

    fn assemble(order: usize, family: Family, repr: Repr, inverse: Vec<u32>, generators: Vec<usize>) -> Self {
        FiniteGroup { order, family, repr, inverse, generators, orders: OnceLock::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// A generating set; empty for the trivial group.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Cyclic => {
                let s = a + b;
                if s >= self.order {
                    s - self.order
                } else {
                    s
                }
            }
            Repr::Dihedral { rotations: n } => {
                let n = *n;
                let (ra, sa) = (a % n, a / n);
                let (rb, sb) = (b % n, b / n);
                let r = if sa == 0 { (ra + rb) % n } else { (ra + n - rb) % n };
                r + n * (sa ^ sb)
            }
            Repr::Quaternion => quaternion_mul(a, b),
            Repr::Perm(data) => {
                let (p, q) = (&data.perms[a], &data.perms[b]);
                let mut r = identity_perm();
                for i in 0..data.degree {
                    r[i] = p[q[i] as usize];
                }
                data.index_of(&r)
            }
            Repr::Product { factors, strides } => {
                let mut acc = 0;
                for (f, &s) in factors.iter().zip(strides) {
                    let da = (a / s) % f.order;
                    let db = (b / s) % f.order;
                    acc += f.mul(da, db) * s;
                }
                acc
            }
            Repr::Table(t) => t[a * self.order + b] as usize,
        }
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ai_bi = self.mul(self.inv(a), self.inv(b));
        self.mul(ab, ai_bi)
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Order of every element, computed once.
    pub fn element_orders(&self) -> &[u32] {
        self.orders.get_or_init(|| match &self.repr {
            Repr::Cyclic => (0..self.order).map(|a| (self.order / gcd(a, self.order)) as u32).collect(),
            _ => (0..self.order)
                .map(|a| {
                    let mut k = 1u32;
                    let mut x = a;
                    while x != 0 {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect(),
        })
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders()[a] as usize
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True when this group is cyclic (as an abstract group).
    pub fn is_cyclic(&self) -> bool {
        matches!(self.repr, Repr::Cyclic) || self.element_orders().iter().any(|&o| o as usize == self.order)
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Sorted elements of the smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[usize]) -> Vec<usize> {
        let mut gens: Vec<usize> = set.iter().copied().filter(|&x| x != 0).collect();
        loop {
            let h = self.closure(&gens);
            let mut member = vec![false; self.order];
            for &x in &h {
                member[x] = true;
            }
            let mut added = false;
            let snapshot = gens.clone();
            for &x in &snapshot {
                for &g in &self.generators {
                    let c = self.conjugate(g, x);
                    if !member[c] {
                        member[c] = true;
                        gens.push(c);
                        added = true;
                    }
                }
            }
            if !added {
                return h;
            }
        }
    }

    /// Materialized Cayley table, if the group is small enough.
    pub fn table(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        if self.order > cap {
            return Err(Error::Capacity {
                what: format!("Cayley table of order {}", self.order),
                cap,
                flag: "--table-cap",
            });
        }
        Ok((0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect())
    }

    /// Exhaustive check of the group axioms; O(order^3).
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidTable(format!("identity law fails at {a}")));
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(Error::InvalidTable(format!("inverse law fails at {a}")));
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable name of an element.
    pub fn label(&self, x: usize) -> String {
        match &self.repr {
            Repr::Cyclic | Repr::Table(_) => x.to_string(),
            Repr::Dihedral { rotations: n } => {
                let (r, s) = (x % n, x / n);
                let rot = match r {
                    0 if s == 0 => "e".to_string(),
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{r}"),
                };
                if s == 1 {
                    format!("{rot}s")
                } else {
                    rot
                }
            }
            Repr::Quaternion => ["1", "-1", "i", "-i", "j", "-j", "k", "-k"][x].to_string(),
            Repr::Perm(data) => cycle_notation(&data.perms[x][..data.degree]),
            Repr::Product { factors, strides } => {
                let parts: Vec<String> = factors
                    .iter()
                    .zip(strides)
                    .map(|(f, &s)| f.label((x / s) % f.order))
                    .collect();
                format!("({})", parts.join(","))
            }
        }
    }

    /// Components of `x` in a direct sum (a single component otherwise).
    pub fn components(&self, x: usize) -> Vec<usize> {
        match &self.repr {
            Repr::Product { factors, strides } => {
                factors.iter().zip(strides).map(|(f, &s)| (x / s) % f.order).collect()
            }
            _ => vec![x],
        }
    }

    /// Inverse of [`FiniteGroup::components`] for direct sums.
    pub fn from_components(&self, parts: &[usize]) -> usize {
        match &self.repr {
            Repr::Product { strides, .. } => parts.iter().zip(strides).map(|(&d, &s)| d * s).sum(),
            _ => parts[0],
        }
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut candidates: Vec<usize> = (1..self.order).collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
        let mut gens = Vec::new();
        let mut member = vec![false; self.order];
        member[0] = true;
        for x in candidates {
            if member[x] {
                continue;
            }
            gens.push(x);
            for y in self.closure(&gens) {
                member[y] = true;
            }
        }
        gens
    }
}

impl PermData {
    fn index_of(&self, p: &[u8; MAX_PERM_DEGREE]) -> usize {
        let rank = lehmer_rank(&p[..self.degree]);
        match &self.rank_to_index {
            None => rank,
            Some(map) => map[rank] as usize,
        }
    }
}

fn identity_perm() -> [u8; MAX_PERM_DEGREE] {
    let mut p = [0u8; MAX_PERM_DEGREE];
    for (i, v) in p.iter_mut().enumerate() {
        *v = i as u8;
    }
    p
}

fn lexicographic_permutations(n: usize) -> Vec<[u8; MAX_PERM_DEGREE]> {
    let mut out = Vec::new();
    let mut p = identity_perm();
    loop {
        out.push(p);
        // next permutation on the first n entries
        let s = &mut p[..n];
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| s[i] < s[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| s[j] > s[i]).unwrap();
        s.swap(i, j);
        s[i + 1..].reverse();
    }
    out
}

fn lehmer_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&v| v < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn perm_generators(data: &PermData, even_only: bool) -> Vec<usize> {
    let n = data.degree;
    let from_cycle = |cycle: &[usize]| {
        let mut p = identity_perm();
        for w in 0..cycle.len() {
            p[cycle[w]] = cycle[(w + 1) % cycle.len()] as u8;
        }
        data.index_of(&p)
    };
    if even_only {
        (2..n).map(|k| from_cycle(&[0, 1, k])).collect()
    } else if n >= 3 {
        vec![from_cycle(&[0, 1]), from_cycle(&(0..n).collect::<Vec<_>>())]
    } else if n == 2 {
        vec![from_cycle(&[0, 1])]
    } else {
        vec![]
    }
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x] as usize;
        }
        let body: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

fn quaternion_mul(a: usize, b: usize) -> usize {
    // unit products in the basis 1, i, j, k as (negated, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (ua, sa) = (a / 2, a % 2);
    let (ub, sb) = (b / 2, b % 2);
    let (neg, u) = UNIT[ua][ub];
    2 * u + (sa ^ sb ^ neg)
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Prime factorization as (prime, exponent), primes ascending.
pub(crate) fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
        g.check_axioms().unwrap();
    }

    #[test]
    fn catalog_satisfies_axioms() {
        let groups = [
            FiniteGroup::cyclic(7).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(12).unwrap(),
            FiniteGroup::quaternion8(),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::alternating(5).unwrap(),
            FiniteGroup::direct_sum(vec![FiniteGroup::cyclic(2).unwrap(), FiniteGroup::dihedral(6).unwrap()])
                .unwrap(),
        ];
        for g in &groups {
            g.check_axioms().unwrap();
            assert_eq!(g.closure(g.generators()).len(), g.order(), "{g:?} generators");
        }
    }

    #[test]
    fn family_orders() {
        assert_eq!(FiniteGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(FiniteGroup::alternating(6).unwrap().order(), 360);
        assert_eq!(FiniteGroup::symmetric(8).unwrap().order(), 40320);
        assert!(matches!(FiniteGroup::symmetric(9), Err(Error::Capacity { .. })));
        assert!(FiniteGroup::dihedral(2).is_err());
        assert!(FiniteGroup::dihedral(7).is_err());
    }

    #[test]
    fn symmetric_is_lexicographic() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let labels: Vec<String> = s3.elements().map(|x| s3.label(x)).collect();
        assert_eq!(labels, ["()", "(1 2)", "(0 1)", "(0 1 2)", "(0 2 1)", "(0 2)"]);
    }

    #[test]
    fn dihedral_relations() {
        let d = FiniteGroup::dihedral(10).unwrap();
        let (r, s) = (1, 5);
        assert_eq!(d.element_order(r), 5);
        assert_eq!(d.element_order(s), 2);
        // s r s^-1 = r^-1
        assert_eq!(d.conjugate(s, r), d.inv(r));
        assert_eq!(d.label(7), "r^2s");
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion8();
        let (i, j, k, minus_one) = (2, 4, 6, 1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), q.inv(k));
        assert_eq!(q.mul(i, i), minus_one);
        assert_eq!(q.mul(q.mul(i, j), k), minus_one);
    }

    #[test]
    fn table_validation() {
        let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let g = FiniteGroup::from_table(&z3).unwrap();
        assert_eq!(g, FiniteGroup::from_table(&z3).unwrap());
        assert!(g.is_cyclic());
        let not_latin = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroup::from_table(&not_latin), Err(Error::InvalidTable(_))));
        let bad_identity = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_table(&bad_identity).is_err());
        // a Latin square with identity that is not associative (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&loop5), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn direct_sum_components_round_trip() {
        let g = FiniteGroup::direct_sum(vec![FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(4).unwrap()])
            .unwrap();
        assert_eq!(g.family().to_string(), "C2xC4");
        for x in g.elements() {
            assert_eq!(g.from_components(&g.components(x)), x);
        }
        assert_eq!(g.components(5), vec![1, 1]);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert!(is_prime(11) && !is_prime(1) && !is_prime(9));
    }
}
