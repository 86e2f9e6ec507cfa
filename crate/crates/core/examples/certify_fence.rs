//! Certificate for the fence poset: build, print as JSON, verify, tamper.

use slackcert::cas::Budget;
use slackcert::certify::{certify_poset, verify_certificate, Base, CertNode, Outcome};
use slackcert::order_polytope::order_polytope;
use slackcert::poset::{build_poset, Poset};

fn main() -> slackcert::Result<()> {
    let b = Budget::default();
    let fence = build_poset(&["1", "2", "3", "4"], &[("1", "3"), ("2", "3"), ("2", "4")])?;
    let Outcome::Certified(mut cert) = certify_poset(&fence, b)? else {
        unreachable!("the fence is ranked with width 2");
    };
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());

    let target = order_polytope(&fence);
    let report = verify_certificate(&cert, &target, b);
    for c in &report.checks {
        println!("{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
    }
    println!("verified: {}", report.passed());

    if let CertNode::FacetProduct { right, .. } = &mut cert.tree {
        **right = CertNode::Base { base: Base::Simplex { d: 2 } };
    }
    println!("after swapping a leaf: {}", verify_certificate(&cert, &target, b).passed());

    match certify_poset(&Poset::antichain(3), b)? {
        Outcome::Refused(r) => println!("3-antichain: {}", serde_json::to_string(&r).unwrap()),
        Outcome::Certified(_) => unreachable!(),
    }
    Ok(())
}
