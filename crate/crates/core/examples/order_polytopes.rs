//! Filters, facets and face lattices of a few order polytopes.

use slackcert::order_polytope::order_polytope;
use slackcert::polytope::face_lattice;
use slackcert::poset::build_poset;

fn main() -> slackcert::Result<()> {
    // the "V" poset A, B < C
    let v = build_poset(&["A", "B", "C"], &[("A", "C"), ("B", "C")])?;
    let o = order_polytope(&v);
    println!("poset covers {:?}", v.cover_labels());
    println!("vertices (filters): {:?}", o.vertices());
    println!("facets: {:?}", o.facets());
    for (f, row) in o.facets().iter().zip(o.support()) {
        println!("  {f:>8} {row:?}");
    }
    println!("f-vector {:?}", face_lattice(&o)?.f_vector());

    let fence = build_poset(&["1", "2", "3", "4"], &[("1", "3"), ("2", "3"), ("2", "4")])?;
    let of = order_polytope(&fence);
    println!(
        "fence: dim {}, {} vertices, {} facets, f-vector {:?}",
        of.dim(),
        of.num_vertices(),
        of.num_facets(),
        face_lattice(&of)?.f_vector()
    );
    Ok(())
}
