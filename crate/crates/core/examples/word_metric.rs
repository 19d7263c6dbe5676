//! Word length in L_n over {a, t}: the closed formula against breadth-first
//! search, and sphere sizes over both generating sets.

use wreathlab::wreath::{ball, word_length_bfs, word_length_ct, GeneratingSet, WreathGroup};

fn main() -> wreathlab::Result<()> {
    for (n, radius) in [(2, 7), (3, 6)] {
        let w = WreathGroup::lamplighter(n)?;
        let b = ball(&w, GeneratingSet::AT, radius);
        let mut agree = 0;
        for (g, &d) in &b.distance {
            if word_length_ct(&w, g)? == d as u64 {
                agree += 1;
            }
        }
        println!("L_{n}, radius {radius}: formula matches BFS on {agree} of {} elements", b.len());
        println!("  spheres over {{a, t}}: {:?}", b.sphere_sizes());
        println!("  spheres over {{t a^k}}: {:?}", ball(&w, GeneratingSet::TA, radius).sphere_sizes());
    }
    let w = WreathGroup::lamplighter(2)?;
    let g = "[-2=1, 3=1]@1".parse()?;
    println!("|{g}| = {} by formula, {:?} by BFS", word_length_ct(&w, &g)?, word_length_bfs(&w, &g, GeneratingSet::AT, 12));
    Ok(())
}
