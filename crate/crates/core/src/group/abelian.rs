//! Primary decompositions of finite abelian groups and cokernels of integer
//! matrices over `Z_m`.

use std::fmt;

use serde::Serialize;

use super::{factorize, gcd, FiniteGroup};
use crate::error::{Error, Result};

/// `(Z_{p^k})^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimaryFactor {
    pub prime: usize,
    pub exponent: u32,
    pub multiplicity: u32,
}

impl PrimaryFactor {
    pub fn cyclic_order(&self) -> usize {
        self.prime.pow(self.exponent)
    }
}

/// A finite abelian group as `⊕ (Z_{p^k})^r`, sorted by `(p, k)`, one entry
/// per `(p, k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianDecomposition {
    pub factors: Vec<PrimaryFactor>,
}

impl AbelianDecomposition {
    /// Decomposes an abelian group from the multiset of its element orders.
    ///
    /// For each prime `p`, the number of elements of order dividing `p^k`
    /// is `p^(Σ min(k, k_i))`; successive differences of the exponents give
    /// the number of cyclic factors of exponent at least `k`.
    pub fn from_element_orders(total: usize, orders: impl IntoIterator<Item = usize>) -> Self {
        let orders: Vec<usize> = orders.into_iter().collect();
        debug_assert_eq!(orders.len(), total);
        let mut factors = Vec::new();
        for (p, v) in factorize(total) {
            // at_least[k] = number of cyclic p-factors of exponent >= k
            let mut log_counts = Vec::with_capacity(v as usize + 2);
            for k in 0..=v {
                let pk = p.pow(k);
                let count = orders.iter().filter(|&&o| pk % o == 0).count();
                log_counts.push(exact_log(count, p));
            }
            let mut at_least: Vec<u32> = (1..=v as usize).map(|k| log_counts[k] - log_counts[k - 1]).collect();
            at_least.push(0);
            for k in 1..=v {
                let r = at_least[k as usize - 1] - at_least[k as usize];
                if r > 0 {
                    factors.push(PrimaryFactor { prime: p, exponent: k, multiplicity: r });
                }
            }
        }
        AbelianDecomposition { factors }
    }

    /// Decomposition of an abelian group.
    pub fn of_group(g: &FiniteGroup) -> Result<Self> {
        if !g.is_abelian() {
            return Err(Error::Domain(format!("{} is not abelian", g.family())));
        }
        Ok(Self::from_element_orders(g.order(), g.element_orders().iter().map(|&o| o as usize)))
    }

    /// Decomposition of an abelian subgroup given by its elements.
    pub fn of_subgroup(g: &FiniteGroup, elements: &[usize]) -> Self {
        Self::from_element_orders(elements.len(), elements.iter().map(|&x| g.element_order(x)))
    }

    /// Decomposition of `⊕ Z_{n_i}`.
    pub fn of_cyclic_sum(orders: &[usize]) -> Self {
        let mut factors: Vec<PrimaryFactor> = Vec::new();
        for &n in orders {
            for (p, k) in factorize(n) {
                match factors.iter_mut().find(|f| f.prime == p && f.exponent == k) {
                    Some(f) => f.multiplicity += 1,
                    None => factors.push(PrimaryFactor { prime: p, exponent: k, multiplicity: 1 }),
                }
            }
        }
        factors.sort();
        AbelianDecomposition { factors }
    }

    pub fn order(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.cyclic_order().pow(f.multiplicity))
            .product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        let mut primes: Vec<usize> = self.factors.iter().map(|f| f.prime).collect();
        primes.dedup();
        primes.len() == self.factors.len() && self.factors.iter().all(|f| f.multiplicity == 1)
    }

    /// The first factor `(Z_{p^k})^r` with `p ∈ {2, 3}` and `r = 1`, if any.
    /// Its presence is exactly the condition for `A ≀ Z` to have every
    /// automorphism with infinitely many twisted classes.
    pub fn rinf_factor(&self) -> Option<PrimaryFactor> {
        self.factors
            .iter()
            .copied()
            .find(|f| (f.prime == 2 || f.prime == 3) && f.multiplicity == 1)
    }
}

impl fmt::Display for AbelianDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| {
                if x.multiplicity == 1 {
                    format!("Z_{}", x.cyclic_order())
                } else {
                    format!("(Z_{})^{}", x.cyclic_order(), x.multiplicity)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn exact_log(mut n: usize, p: usize) -> u32 {
    let mut e = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0, "element counts of an abelian group are prime powers");
        n /= p;
        e += 1;
    }
    e
}

/// Invariant factors `d_1 | d_2 | ...` of an integer matrix (length
/// `min(rows, cols)`, trailing zeros for rank deficiency).
pub fn smith_diagonal(matrix: &[Vec<i64>]) -> Vec<i64> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let dim = rows.min(cols);
    for t in 0..dim {
        // pivot: smallest nonzero magnitude in the trailing block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    let pivot = a[t].clone();
                    for (x, y) in a[i][t..].iter_mut().zip(&pivot[t..]) {
                        *x -= q * y;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                // bring a smaller remainder into the pivot
                if let Some(i) = (t + 1..rows).filter(|&i| a[i][t] != 0).min_by_key(|&i| a[i][t].abs()) {
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(t, i);
                    }
                }
                if let Some(j) = (t + 1..cols).filter(|&j| a[t][j] != 0).min_by_key(|&j| a[t][j].abs()) {
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
                continue;
            }
            // divisibility condition on the trailing block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % a[t][t] != 0));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, v) in a[t][t..].iter_mut().zip(&row[t..]) {
                        *x += v;
                    }
                }
                None => break,
            }
        }
    }
    (0..dim).map(|t| a[t][t].unsigned_abs() as i64).collect()
}

/// `|Z_m^r / A·Z_m^c|` for an `r × c` integer matrix `A`.
pub fn cokernel_order_mod(matrix: &[Vec<i64>], modulus: usize) -> usize {
    let rows = matrix.len();
    let diag = smith_diagonal(matrix);
    let mut total = 1usize;
    for i in 0..rows {
        let d = diag.get(i).copied().unwrap_or(0);
        total *= gcd(d.unsigned_abs() as usize, modulus);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_cokernel(matrix: &[Vec<i64>], m: usize) -> usize {
        // enumerate the image of A on Z_m^c
        let rows = matrix.len();
        let cols = matrix[0].len();
        let mut image = std::collections::HashSet::new();
        let total = m.pow(cols as u32);
        for code in 0..total {
            let x: Vec<i64> = (0..cols).map(|j| ((code / m.pow(j as u32)) % m) as i64).collect();
            let y: Vec<i64> = (0..rows)
                .map(|i| (0..cols).map(|j| matrix[i][j] * x[j]).sum::<i64>().rem_euclid(m as i64))
                .collect();
            image.insert(y);
        }
        m.pow(rows as u32) / image.len()
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_diagonal(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(smith_diagonal(&[vec![1, -2], vec![-2, 1]]), vec![1, 3]);
        assert_eq!(smith_diagonal(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(smith_diagonal(&[vec![6, 4]]), vec![2]);
    }

    #[test]
    fn cokernel_matches_enumeration() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![1, -2], vec![-2, 1]],
            vec![vec![1, -1], vec![-1, 1]],
            vec![vec![0]],
            vec![vec![-1]],
            vec![vec![2, 3], vec![4, 6]],
            vec![vec![1, 0, -1], vec![0, 2, 0], vec![3, 0, 3]],
        ];
        for m in 2..=9 {
            for a in &cases {
                assert_eq!(cokernel_order_mod(a, m), brute_cokernel(a, m), "{a:?} mod {m}");
            }
        }
    }

    #[test]
    fn decomposition_of_cyclic_sums() {
        let d = AbelianDecomposition::of_cyclic_sum(&[12]);
        assert_eq!(d.to_string(), "Z_4 + Z_3");
        assert!(d.is_cyclic());
        let d = AbelianDecomposition::of_cyclic_sum(&[2, 2, 4]);
        assert_eq!(d.order(), 16);
        assert!(!d.is_cyclic());
        assert_eq!(d.rinf_factor(), Some(PrimaryFactor { prime: 2, exponent: 2, multiplicity: 1 }));
    }

    #[test]
    fn rinf_factor_rule() {
        let cases = [
            (vec![4], true),
            (vec![2, 2], false),
            (vec![5], false),
            (vec![6], true),
            (vec![3, 3], false),
            (vec![9], true),
            (vec![2, 2, 3], true),
            (vec![5, 5, 7], false),
        ];
        for (orders, expect) in cases {
            let d = AbelianDecomposition::of_cyclic_sum(&orders);
            assert_eq!(d.rinf_factor().is_some(), expect, "{orders:?}");
        }
    }

    #[test]
    fn decomposition_from_group_tables() {
        let g = FiniteGroup::direct_sum(vec![
            FiniteGroup::cyclic(2).unwrap(),
            FiniteGroup::cyclic(4).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
        ])
        .unwrap();
        let d = AbelianDecomposition::of_group(&g).unwrap();
        assert_eq!(d, AbelianDecomposition::of_cyclic_sum(&[2, 4, 6]));
        assert_eq!(d.to_string(), "(Z_2)^2 + Z_4 + Z_3");
        assert!(AbelianDecomposition::of_group(&FiniteGroup::quaternion8()).is_err());
    }
}
