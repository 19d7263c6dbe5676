//! The Cayley graph of L_m over {t a^k} as the Diestel-Leader graph DL(m, m).

use wreathlab::dl::{check_cayley_isomorphism, dl_ball, graph_neighbors, vertex_of_element};
use wreathlab::wreath::{parse_word, GeneratingSet, WreathGroup};

fn main() -> wreathlab::Result<()> {
    let w = WreathGroup::lamplighter(2)?;
    let g = w.eval_word(&parse_word("(ta) t (ta)^-1", GeneratingSet::TA, 2)?)?;
    let v = vertex_of_element(&g);
    println!("{g} sits at {v}");
    for u in graph_neighbors(&v, 2, 2) {
        println!("  neighbor {u}");
    }
    println!("DL(2, 3) spheres: {:?}", dl_ball(2, 3, 4).iter().map(Vec::len).collect::<Vec<_>>());
    for m in [2, 3] {
        let r = check_cayley_isomorphism(m, 4)?;
        println!("m = {m}: passed {} on {} vertices, spheres {:?}", r.passed, r.vertices_checked, r.dl_spheres);
    }
    Ok(())
}
