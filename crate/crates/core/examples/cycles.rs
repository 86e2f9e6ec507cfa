//! Chordless cycles of a non-incidence graph and their binomials.

use slackcert::graph::{vertex_split_condition, NonIncidenceGraph};
use slackcert::polytope::{hypercube, vertex_split, vertex_sum};

fn main() -> slackcert::Result<()> {
    let sq = hypercube(2);
    let g = NonIncidenceGraph::new(&sq);
    println!("square: {} nodes, {} edges", g.num_nodes(), g.num_edges());
    for c in g.chordless_cycles(None)? {
        let names: Vec<&str> = c.iter().map(|&u| g.node_label(u)).collect();
        println!("  cycle {names:?}");
        println!("  binomial {}", g.cycle_binomial(&c)?);
    }

    let v = sq.vertices()[0].clone();
    let prism = vertex_split(&sq, &v)?;
    let gp = NonIncidenceGraph::new(&prism);
    println!("split square: {} chordless cycles", gp.chordless_cycles(None)?.len());

    let sum = vertex_sum(&sq, &v, &sq, &v)?;
    let point = format!("[{v}]⊕[{v}]");
    println!("split condition at the sum point: {:?}", vertex_split_condition(&sum, &point)?);
    println!("split condition at {}: {:?}", sum.vertices()[0], vertex_split_condition(&sum, &sum.vertices()[0])?);
    Ok(())
}
