//! Rank tests for 2-level and morally 2-level supports.

use slackcert::linalg::{is_2level, is_morally_2level, support_rank};
use slackcert::order_polytope::order_polytope;
use slackcert::polytope::{dual, hypercube, vertex_split, vertex_sum, CombPolytope};
use slackcert::poset::all_posets;

fn report(name: &str, p: &CombPolytope) {
    println!(
        "{name:<22} dim {} rank {} | 2-level {:<5} | morally 2-level {}",
        p.dim(),
        support_rank(p.support()),
        is_2level(p),
        is_morally_2level(p)
    );
}

fn main() -> slackcert::Result<()> {
    let sq = hypercube(2);
    let v = sq.vertices()[0].clone();
    report("cube", &hypercube(3));
    report("octahedron", &dual(&hypercube(3)));
    report("vertex sum of squares", &vertex_sum(&sq, &v, &sq, &v)?);
    report("split square", &vertex_split(&sq, &v)?);

    let all = all_posets(5);
    let two = all.iter().filter(|p| is_2level(&order_polytope(p))).count();
    println!("{two} of {} order polytopes of 5-element posets are 2-level", all.len());
    Ok(())
}
