//! Join, vertex sum, vertex split and their duals on small polytopes.

use slackcert::polytope::{
    combinatorially_equivalent, facet_product, facet_wedge, hypercube, join, point, simplex, vertex_split, vertex_sum,
    CombPolytope,
};

fn show(name: &str, p: &CombPolytope) {
    println!("{name:<28} dim {} | {:>2} vertices | {:>2} facets", p.dim(), p.num_vertices(), p.num_facets());
}

fn main() -> slackcert::Result<()> {
    let sq = hypercube(2);
    let v = sq.vertices()[0].clone();
    let f = sq.facets()[0].clone();

    show("square", &sq);
    show("pyramid = join(point, sq)", &join(&point(), &sq)?);
    show("vertex_sum(sq, sq)", &vertex_sum(&sq, &v, &sq, &v)?);
    show("vertex_split(sq)", &vertex_split(&sq, &v)?);
    show("facet_wedge(sq)", &facet_wedge(&sq, &f)?);
    show("facet_product(sq, sq)", &facet_product(&sq, &f, &sq, &f)?);

    let two_segments = join(&simplex(1), &simplex(1))?;
    println!("join of two segments is a tetrahedron: {}", combinatorially_equivalent(&two_segments, &simplex(3)));

    let split = vertex_split(&sq, &v)?;
    println!("labels after splitting {v}: {:?}", split.vertices());
    Ok(())
}
