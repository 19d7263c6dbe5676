//! L_m has property R∞ exactly when 2 | m or 3 | m; otherwise x ↦ 2x with
//! c = 0, ε = -1 has R = 2.

use wreathlab::classifier::{cross_validate_cyclic, Outcome};
use wreathlab::Caps;

fn main() -> wreathlab::Result<()> {
    let limit = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(60);
    let r = cross_validate_cyclic(limit, &Caps::default())?;
    let finite: Vec<String> = r
        .rows
        .iter()
        .filter(|row| row.outcome == Outcome::NotRInf)
        .map(|row| format!("{} (R = {})", row.m, row.witness_value.unwrap_or(0)))
        .collect();
    println!("m <= {limit} without R∞: {}", finite.join(", "));
    println!("agreement with the divisibility rule: {}", r.passed);
    Ok(())
}
