//! Deciding whether `G ≀ Z` has property R∞ (every automorphism has
//! infinitely many twisted classes).
//!
//! Every rule is evaluated in a fixed order; the first one that fires is the
//! certificate and the rest are reported as corroborating. When nothing
//! fires, automorphisms `(ξ, c, -1)` with `c ∈ {0, 1}` are searched for one
//! with finite `R`.

use serde::Serialize;

use crate::automorphisms::LampAutSpec;
use crate::error::{Error, Result};
use crate::group::{
    abelianization, center, is_prime, is_simple, outer_automorphisms_trivial, sylow, visit_automorphisms,
    AbelianDecomposition, Family, FiniteGroup,
};
use crate::twisted::{reidemeister_wreath, ReidemeisterResult};
use crate::wreath::WreathGroup;
use crate::Caps;

pub const RULE_CYCLIC: &str = "cyclic-4.1";
pub const RULE_ABELIAN: &str = "abelian-3.7";
pub const RULE_AB_QUOTIENT: &str = "ab-quotient-5.5";
pub const RULE_CENTER: &str = "center-5.5";
pub const RULE_SYLOW: &str = "sylow-5.8";
pub const RULE_SIMPLE_OUTER: &str = "simple-outer-5.12";
pub const RULE_ALTERNATING: &str = "alternating-5.13";
pub const RULE_SYMMETRIC: &str = "symmetric-5.14";
pub const RULE_ORDER_2P: &str = "order-2p-5.6";

/// True iff some primary factor `(Z_{p^k})^r` has `p ∈ {2, 3}` and `r = 1`.
pub fn in_frak_a(g: &FiniteGroup) -> Result<bool> {
    Ok(AbelianDecomposition::of_group(g)?.rinf_factor().is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    RInf,
    NotRInf,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub rule: &'static str,
    pub facts: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleStatus {
    Fired,
    NotApplicable,
    Capacity,
}

#[derive(Clone, Debug, Serialize)]
pub struct RuleTrial {
    pub rule: &'static str,
    pub status: RuleStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub description: String,
    pub spec: LampAutSpec,
    pub value: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub group: String,
    pub order: usize,
    pub outcome: Outcome,
    pub certificate: Option<Certificate>,
    pub corroborating: Vec<Certificate>,
    pub witness: Option<Witness>,
    pub rules_tried: Vec<RuleTrial>,
    pub notes: Vec<String>,
}

impl Verdict {
    /// All certificates, primary first.
    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.certificate.iter().chain(&self.corroborating)
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.certificates().any(|c| c.rule == rule)
    }
}

type RuleResult = Result<std::result::Result<Vec<String>, String>>;

fn decomposition_rule(what: &str, d: &AbelianDecomposition) -> std::result::Result<Vec<String>, String> {
    match d.rinf_factor() {
        Some(f) => Ok(vec![
            format!("{what} = {d}"),
            format!("factor Z_{} has multiplicity 1", f.cyclic_order()),
        ]),
        None => Err(format!("{what} = {d} has no factor Z_(2^k) or Z_(3^k) of multiplicity 1")),
    }
}

fn abelian_rule(g: &FiniteGroup) -> RuleResult {
    if !g.is_abelian() {
        return Ok(Err("G is not abelian".into()));
    }
    decomposition_rule("G", &AbelianDecomposition::of_group(g)?).map(Ok).or_else(|e| {
        Ok(Err(format!("{e}; a finite witness should exist")))
    })
}

fn ab_quotient_rule(g: &FiniteGroup) -> RuleResult {
    Ok(decomposition_rule("G^Ab", &abelianization(g)))
}

fn center_rule(g: &FiniteGroup) -> RuleResult {
    Ok(decomposition_rule("Z(G)", &AbelianDecomposition::of_subgroup(g, &center(g))))
}

fn sylow_rule(g: &FiniteGroup) -> RuleResult {
    let mut why = Vec::new();
    for p in [2, 3] {
        let s = sylow(g, p)?;
        if !s.unique {
            why.push(format!("the Sylow {p}-subgroup is not unique"));
            continue;
        }
        let z: Vec<usize> =
            s.elements.iter().copied().filter(|&x| s.elements.iter().all(|&y| g.mul(x, y) == g.mul(y, x))).collect();
        match decomposition_rule(&format!("Z(S_{p})"), &AbelianDecomposition::of_subgroup(g, &z)) {
            Ok(mut facts) => {
                facts.insert(0, format!("unique Sylow {p}-subgroup of order {}", s.elements.len()));
                return Ok(Ok(facts));
            }
            Err(e) => why.push(e),
        }
    }
    Ok(Err(why.join("; ")))
}

fn simple_outer_rule(g: &FiniteGroup, caps: &Caps) -> RuleResult {
    if !is_simple(g) {
        return Ok(Err("G is not simple".into()));
    }
    if outer_automorphisms_trivial(g, caps.aut)? {
        Ok(Ok(vec!["G is simple".into(), "Out(G) is trivial".into()]))
    } else {
        Ok(Err("G is simple but Out(G) is nontrivial".into()))
    }
}

fn alternating_rule(g: &FiniteGroup) -> RuleResult {
    Ok(match g.family() {
        Family::Alternating(n) if *n >= 5 && *n != 6 => Ok(vec![format!("G = A{n}, n >= 5, n != 6")]),
        Family::Alternating(n) => Err(format!("A{n} is outside n >= 5, n != 6")),
        _ => Err("G is not built as an alternating group".into()),
    })
}

fn symmetric_rule(g: &FiniteGroup) -> RuleResult {
    Ok(match g.family() {
        Family::Symmetric(n) if *n >= 5 => Ok(vec![format!("G = S{n}, n >= 5")]),
        Family::Symmetric(n) => Err(format!("S{n} is outside n >= 5")),
        _ => Err("G is not built as a symmetric group".into()),
    })
}

fn order_2p_rule(g: &FiniteGroup) -> RuleResult {
    let n = g.order();
    if !n.is_multiple_of(2) || n < 6 || !is_prime(n / 2) {
        return Ok(Err(format!("|G| = {n} is not 2p for an odd prime p")));
    }
    let p = n / 2;
    if g.is_cyclic() {
        return Ok(Ok(vec![format!("|G| = 2·{p}"), "G is cyclic".into()]));
    }
    let orders = g.element_orders();
    let r = g.elements().find(|&x| orders[x] as usize == p);
    let dihedral = r.is_some_and(|r| {
        g.elements().any(|s| orders[s] == 2 && g.conjugate(s, r) == g.inv(r))
    });
    if dihedral {
        Ok(Ok(vec![format!("|G| = 2·{p}"), "G is dihedral".into()]))
    } else {
        Err(Error::Domain(format!("a group of order 2·{p} that is neither cyclic nor dihedral")))
    }
}

/// Searches `(ξ, c, -1)` for `ξ ∈ Aut(G)` in enumeration order and
/// `c ∈ {0, 1}`; the first automorphism with finite `R` wins. `Ok(None)`
/// means the search was exhaustive and found nothing.
pub fn witness_search(g: &FiniteGroup, caps: &Caps, notes: &mut Vec<String>) -> Result<Option<Witness>> {
    let w = WreathGroup::new(g.clone());
    let mut found = None;
    let mut failure = None;
    visit_automorphisms(g, caps.aut, |xi| {
        for c in [0, 1] {
            let s = LampAutSpec { xi: xi.clone(), offset: c, epsilon: -1, conjugator: None };
            match reidemeister_wreath(&w, &s, caps.carrier) {
                Ok(r) => {
                    if let ReidemeisterResult::Finite { value } = r.result {
                        found = Some(Witness { description: s.describe(g), spec: s, value });
                        return false;
                    }
                }
                Err(e) => {
                    failure.get_or_insert(e);
                }
            }
        }
        true
    })?;
    if found.is_none() {
        if let Some(e) = failure {
            notes.push(format!("witness search skipped some automorphisms: {e}"));
            return Err(e);
        }
    }
    Ok(found)
}

/// Recomputes `R` for a witness.
pub fn verify_witness(g: &FiniteGroup, witness: &Witness, caps: &Caps) -> Result<bool> {
    let w = WreathGroup::new(g.clone());
    let r = reidemeister_wreath(&w, &witness.spec, caps.carrier)?;
    Ok(r.result == ReidemeisterResult::Finite { value: witness.value })
}

type LazyRule<'a> = Box<dyn Fn() -> RuleResult + 'a>;

pub fn classify(g: &FiniteGroup, caps: &Caps) -> Verdict {
    let mut v = Verdict {
        group: g.family().to_string(),
        order: g.order(),
        outcome: Outcome::Unknown,
        certificate: None,
        corroborating: Vec::new(),
        witness: None,
        rules_tried: Vec::new(),
        notes: Vec::new(),
    };
    let abelian_id = if g.is_cyclic() { RULE_CYCLIC } else { RULE_ABELIAN };
    let rules: [(&'static str, LazyRule<'_>); 8] = [
        (abelian_id, Box::new(|| abelian_rule(g))),
        (RULE_AB_QUOTIENT, Box::new(|| ab_quotient_rule(g))),
        (RULE_CENTER, Box::new(|| center_rule(g))),
        (RULE_SYLOW, Box::new(|| sylow_rule(g))),
        (RULE_SIMPLE_OUTER, Box::new(|| simple_outer_rule(g, caps))),
        (RULE_ALTERNATING, Box::new(|| alternating_rule(g))),
        (RULE_SYMMETRIC, Box::new(|| symmetric_rule(g))),
        (RULE_ORDER_2P, Box::new(|| order_2p_rule(g))),
    ];
    for (rule, eval) in rules {
        let (status, detail) = match eval() {
            Ok(Ok(facts)) => {
                let detail = facts.join("; ");
                let cert = Certificate { rule, facts };
                if v.certificate.is_none() {
                    v.certificate = Some(cert);
                } else {
                    v.corroborating.push(cert);
                }
                (RuleStatus::Fired, detail)
            }
            Ok(Err(why)) => (RuleStatus::NotApplicable, why),
            Err(e @ Error::Capacity { .. }) => {
                v.notes.push(format!("{rule}: {e}"));
                (RuleStatus::Capacity, e.to_string())
            }
            Err(e) => {
                v.notes.push(format!("{rule}: {e}"));
                (RuleStatus::NotApplicable, e.to_string())
            }
        };
        v.rules_tried.push(RuleTrial { rule, status, detail });
    }
    if v.certificate.is_some() {
        v.outcome = Outcome::RInf;
        return v;
    }
    match witness_search(g, caps, &mut v.notes) {
        Ok(Some(witness)) => {
            match verify_witness(g, &witness, caps) {
                Ok(true) => {}
                other => v.notes.push(format!("witness failed re-verification: {other:?}")),
            }
            v.outcome = Outcome::NotRInf;
            v.witness = Some(witness);
        }
        Ok(None) => {
            v.notes.push("no automorphism (xi, c, -1) with c in {0, 1} has finite R".into());
            if g.is_abelian() {
                v.notes.push(format!(
                    "finding: {} is abelian and outside the R-infinity family, yet the search found no finite witness",
                    v.group
                ));
            }
        }
        Err(e) => v.notes.push(format!("witness search: {e}")),
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicRow {
    pub m: usize,
    pub expected_rinf: bool,
    pub outcome: Outcome,
    pub rule: Option<&'static str>,
    pub witness_value: Option<usize>,
    pub witness_verified: Option<bool>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicReport {
    pub limit: usize,
    pub rows: Vec<CyclicRow>,
    pub passed: bool,
}

/// `classify(C(m))` against `2 | m or 3 | m` for `2 <= m <= limit`, with
/// every witness recomputed.
pub fn cross_validate_cyclic(limit: usize, caps: &Caps) -> Result<CyclicReport> {
    if limit < 2 {
        return Err(Error::Domain(format!("limit must be at least 2, got {limit}")));
    }
    let mut rows = Vec::new();
    for m in 2..=limit {
        let g = FiniteGroup::cyclic(m)?;
        let v = classify(&g, caps);
        let expected_rinf = m % 2 == 0 || m % 3 == 0;
        let witness_verified = v.witness.as_ref().map(|w| verify_witness(&g, w, caps).unwrap_or(false));
        let pass = match v.outcome {
            Outcome::RInf => expected_rinf,
            Outcome::NotRInf => !expected_rinf && witness_verified == Some(true),
            Outcome::Unknown => false,
        };
        rows.push(CyclicRow {
            m,
            expected_rinf,
            outcome: v.outcome,
            rule: v.certificate.as_ref().map(|c| c.rule),
            witness_value: v.witness.as_ref().map(|w| w.value),
            witness_verified,
            pass,
        });
    }
    let passed = rows.iter().all(|r| r.pass);
    Ok(CyclicReport { limit, rows, passed })
}

/// Every abelian group of order `n` up to isomorphism, as the orders of its
/// primary cyclic factors.
pub fn abelian_groups_of_order(n: usize) -> Vec<Vec<usize>> {
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=k.min(max)).rev() {
            for mut rest in partitions(k - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut groups = vec![vec![]];
    for (p, e) in crate::group::factorize(n) {
        let mut next = Vec::new();
        for g in &groups {
            for part in partitions(e, e) {
                let mut h: Vec<usize> = g.clone();
                h.extend(part.iter().map(|&k| p.pow(k)));
                next.push(h);
            }
        }
        groups = next;
    }
    groups
}

#[derive(Clone, Debug, Serialize)]
pub struct BiconditionalRow {
    pub group: String,
    pub order: usize,
    pub in_frak_a: bool,
    /// `None` when the search hit a cap.
    pub witness_found: Option<bool>,
    pub witness: Option<String>,
    pub consistent: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BiconditionalReport {
    pub max_order: usize,
    pub rows: Vec<BiconditionalRow>,
    pub findings: Vec<String>,
}

/// For each abelian `G` with `|G| <= max_order`: `G` lies in the R∞ family
/// iff the witness search finds nothing. Searches run to exhaustion for
/// groups in the family, so this can be slow for large `max_order`.
pub fn biconditional_experiment(max_order: usize, caps: &Caps) -> Result<BiconditionalReport> {
    let mut rows = Vec::new();
    let mut findings = Vec::new();
    for n in 1..=max_order {
        for orders in abelian_groups_of_order(n) {
            let parts = orders.iter().map(|&k| FiniteGroup::cyclic(k)).collect::<Result<Vec<_>>>()?;
            let g = if parts.len() == 1 { parts.into_iter().next().unwrap() } else { FiniteGroup::direct_sum(parts)? };
            let in_a = in_frak_a(&g)?;
            let mut notes = Vec::new();
            let search = witness_search(&g, caps, &mut notes);
            let (found, witness) = match &search {
                Ok(w) => (Some(w.is_some()), w.as_ref().map(|w| format!("{} (R = {})", w.description, w.value))),
                Err(_) => (None, None),
            };
            let consistent = found.map(|f| f != in_a);
            let name = orders.iter().map(|k| format!("C{k}")).collect::<Vec<_>>().join("x");
            let name = if name.is_empty() { "C1".to_string() } else { name };
            match (consistent, &search) {
                (Some(false), _) => findings.push(format!(
                    "{name}: in family = {in_a}, witness found = {}",
                    found.unwrap_or(false)
                )),
                (None, Err(e)) => findings.push(format!("{name}: search incomplete: {e}")),
                _ => {}
            }
            rows.push(BiconditionalRow { group: name, order: n, in_frak_a: in_a, witness_found: found, witness, consistent });
        }
    }
    Ok(BiconditionalReport { max_order, rows, findings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn verdict(spec: &str) -> Verdict {
        classify(&build_group(spec).unwrap(), &Caps::default())
    }

    #[test]
    fn frak_a_examples() {
        assert!(in_frak_a(&build_group("C4").unwrap()).unwrap());
        assert!(!in_frak_a(&build_group("C2xC2").unwrap()).unwrap());
        assert!(!in_frak_a(&build_group("C5").unwrap()).unwrap());
        assert!(in_frak_a(&build_group("C2xC2xC4").unwrap()).unwrap());
        assert!(in_frak_a(&build_group("S3").unwrap()).is_err());
    }

    #[test]
    fn catalog_examples() {
        let v = verdict("C6");
        assert_eq!((v.outcome, v.certificate.unwrap().rule), (Outcome::RInf, RULE_CYCLIC));
        let v = verdict("C5");
        assert_eq!(v.outcome, Outcome::NotRInf);
        let w = v.witness.unwrap();
        assert_eq!((w.description.as_str(), w.value), ("xi=*2 c=0 eps=-1", 2));
        assert_eq!(verdict("Q8").certificate.unwrap().rule, RULE_CENTER);
        assert_eq!(verdict("D6").certificate.unwrap().rule, RULE_AB_QUOTIENT);
        let v = verdict("S5");
        assert_eq!(v.outcome, Outcome::RInf);
        assert!(v.has_rule(RULE_SYMMETRIC));
        let v = verdict("A6");
        assert_eq!(v.outcome, Outcome::Unknown);
        assert!(v.notes.iter().any(|n| n.contains("--aut-cap")));
    }

    #[test]
    fn alternating_five_passes_the_cap_note() {
        let v = verdict("A5");
        assert_eq!(v.certificate.unwrap().rule, RULE_ALTERNATING);
        let trial = v.rules_tried.iter().find(|t| t.rule == RULE_SIMPLE_OUTER).unwrap();
        assert_eq!(trial.status, RuleStatus::Capacity);
    }

    #[test]
    fn alternating_four() {
        let v = verdict("A4");
        assert_eq!(v.outcome, Outcome::RInf);
        assert_eq!(v.certificate.unwrap().rule, RULE_AB_QUOTIENT);
    }

    #[test]
    fn abelian_group_counts() {
        let counts: Vec<usize> = (1..=16).map(|n| abelian_groups_of_order(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        assert_eq!(abelian_groups_of_order(36).len(), 4);
    }

    #[test]
    fn cyclic_cross_validation() {
        let r = cross_validate_cyclic(12, &Caps::default()).unwrap();
        assert!(r.passed);
        assert_eq!(r.rows.iter().filter(|r| r.outcome == Outcome::NotRInf).map(|r| r.m).collect::<Vec<_>>(), [5, 7, 11]);
        assert!(cross_validate_cyclic(1, &Caps::default()).is_err());
    }

    #[test]
    fn biconditional_small() {
        let caps = Caps { aut: 36, ..Caps::default() };
        let r = biconditional_experiment(12, &caps).unwrap();
        assert!(r.rows.iter().all(|row| row.consistent == Some(true)), "{:?}", r.findings);
    }
}
