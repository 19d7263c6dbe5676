//! For abelian `G` of order at most 36: `G ≀ Z` has property R∞ exactly when
//! no automorphism `(ξ, c, -1)` with finite `R` turns up.

use wreathlab::classifier::biconditional_experiment;
use wreathlab::Caps;

fn main() -> wreathlab::Result<()> {
    let max_order = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(36);
    let caps = Caps { aut: 36, ..Caps::default() };
    let report = biconditional_experiment(max_order, &caps)?;
    for row in &report.rows {
        let found = match row.witness_found {
            Some(true) => row.witness.clone().unwrap_or_default(),
            Some(false) => "none".to_string(),
            None => "search incomplete".to_string(),
        };
        println!("{:<14} |G|={:<3} in family: {:<5} witness: {found}", row.group, row.order, row.in_frak_a);
    }
    if report.findings.is_empty() {
        println!("all {} groups consistent", report.rows.len());
    }
    for f in &report.findings {
        println!("finding: {f}");
    }
    Ok(())
}
