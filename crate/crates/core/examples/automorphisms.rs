//! Automorphisms of G ≀ Z from pairs (ξ, c, ε), their blocks, and
//! characteristic subgroups.

use wreathlab::automorphisms::{
    all_compatible_specs, block_map, make_autospec, verify_characteristic, CharSubgroupTag,
};
use wreathlab::group::{FiniteGroup, GroupAut};
use wreathlab::wreath::WreathGroup;

fn main() -> wreathlab::Result<()> {
    let w = WreathGroup::lamplighter(5)?;
    let s = make_autospec(&w, GroupAut::cyclic_unit(w.base(), 2)?, 3, -1)?;
    let a0 = w.lamp(0, 1);
    println!("{}: a_0 -> {}, t -> {}", s.describe(w.base()), w.apply_aut(&s, &a0), w.apply_aut(&s, &w.t()));
    let b = block_map(&w, &s, 1)?;
    println!("block {{{}, {}}} is a {:?} block on a carrier of order {}", b.index, b.partner, b.kind, b.carrier.order());

    let inner = s.clone().with_conjugator("[0=1]@1".parse()?);
    let composed = w.compose_aut(&inner, &s);
    println!("composite: {}", composed.describe(w.base()));

    let cases = [
        (WreathGroup::lamplighter(4)?, CharSubgroupTag::OrderSubgroup { d: 2 }),
        (WreathGroup::new(FiniteGroup::quaternion8()), CharSubgroupTag::CenterWreath),
        (WreathGroup::new(FiniteGroup::dihedral(6)?), CharSubgroupTag::CommutatorLamps),
    ];
    for (w, tag) in cases {
        let specs = all_compatible_specs(&w, 24, &[-1, 0, 1])?;
        let r = verify_characteristic(&w, tag, &specs, 4)?;
        println!("{tag} in {} ≀ Z: passed {} ({} checks)", w.base().family(), r.passed, r.checks);
    }
    Ok(())
}
