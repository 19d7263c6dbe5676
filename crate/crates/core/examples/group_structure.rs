//! Centers, commutator subgroups, abelianizations and Sylow subgroups of a
//! few small groups.

use wreathlab::group::{abelianization, automorphism_group, build_group, center, commutator_subgroup, sylow};

fn main() -> wreathlab::Result<()> {
    for spec in ["C12", "D6", "D12", "Q8", "A4", "S4"] {
        let g = build_group(spec)?;
        let z: Vec<String> = center(&g).iter().map(|&x| g.label(x)).collect();
        println!("{spec}: order {}", g.order());
        println!("  Z(G) = {{{}}}", z.join(", "));
        println!("  [G,G] has order {}", commutator_subgroup(&g).len());
        println!("  G^Ab = {}", abelianization(&g));
        for p in [2, 3] {
            let s = sylow(&g, p)?;
            println!("  Sylow {p}: order {}, unique: {}", s.elements.len(), s.unique);
        }
        println!("  |Aut(G)| = {}", automorphism_group(&g, 24)?.len());
    }
    Ok(())
}
