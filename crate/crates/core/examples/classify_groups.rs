//! Property R∞ for G ≀ Z across a catalog of small groups.

use wreathlab::classifier::classify;
use wreathlab::group::build_group;
use wreathlab::Caps;

fn main() -> wreathlab::Result<()> {
    let caps = Caps::default();
    for spec in ["C5", "C6", "C2xC2", "C3xC3", "D6", "D8", "Q8", "A4", "A5", "S5", "A6", "D22"] {
        let v = classify(&build_group(spec)?, &caps);
        let how = match (&v.certificate, &v.witness) {
            (Some(c), _) => format!("{} ({})", c.rule, c.facts.join("; ")),
            (None, Some(w)) => format!("witness {} with R = {}", w.description, w.value),
            _ => v.notes.join("; "),
        };
        println!("{spec:<6} {:<8} {how}", format!("{:?}", v.outcome));
        let others: Vec<&str> = v.corroborating.iter().map(|c| c.rule).collect();
        if !others.is_empty() {
            println!("       also: {}", others.join(", "));
        }
    }
    Ok(())
}
