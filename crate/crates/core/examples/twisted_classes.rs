//! Twisted conjugacy classes by three methods, and Reidemeister numbers of
//! automorphisms of L_n assembled from blocks.

use wreathlab::automorphisms::make_autospec;
use wreathlab::group::{automorphism_group, build_group, GroupAut};
use wreathlab::twisted::{
    block_fixed_points, reidemeister_abelian, reidemeister_fh, reidemeister_wreath, twisted_classes,
    window_class_count, window_class_count_direct,
};
use wreathlab::wreath::WreathGroup;

fn main() -> wreathlab::Result<()> {
    let g = build_group("C2xC4")?;
    for (i, phi) in automorphism_group(&g, 24)?.iter().enumerate() {
        let r = twisted_classes(&g, phi);
        println!(
            "C2xC4 aut {i}: orbit {}, cokernel {}, fh {}",
            r.count,
            reidemeister_abelian(&g, phi)?,
            reidemeister_fh(&g, phi)
        );
    }

    for (n, k) in [(2, 1), (3, 2), (5, 2), (7, 3)] {
        let w = WreathGroup::lamplighter(n)?;
        let s = make_autospec(&w, GroupAut::cyclic_unit(w.base(), k)?, 0, -1)?;
        let r = reidemeister_wreath(&w, &s, 10_000)?;
        println!("L_{n}, {}: {:?}", s.describe(w.base()), r.result);
        println!("  fixed points on block {{1, -1}}: {:?}", block_fixed_points(&w, &s, 1)?);
        let window = [1, 2];
        println!(
            "  classes over blocks meeting {window:?}: {} (direct: {})",
            window_class_count(&w, &s, &window, 10_000)?,
            window_class_count_direct(&w, &s, &window, 10_000)?
        );
    }
    Ok(())
}
