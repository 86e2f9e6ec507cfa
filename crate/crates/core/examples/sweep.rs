//! Certify every poset up to a size and tally outcomes.
//! Usage: cargo run --release --example sweep -- 7

use slackcert::cas::Budget;
use slackcert::certify::{certify_poset, verify_certificate, Outcome, Refusal};
use slackcert::order_polytope::order_polytope;
use slackcert::poset::all_posets;

fn main() -> slackcert::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let b = Budget::default();
    println!("{:>2} {:>6} {:>10} {:>10} {:>9}", "n", "posets", "certified", "antichain", "unranked");
    for n in 0..=max {
        let (mut c, mut a, mut u) = (0, 0, 0);
        let ps = all_posets(n);
        for p in &ps {
            match certify_poset(p, b)? {
                Outcome::Certified(cert) => {
                    assert!(verify_certificate(&cert, &order_polytope(p), b).passed());
                    c += 1;
                }
                Outcome::Refused(Refusal::ThreeAntichain { .. }) => a += 1,
                Outcome::Refused(Refusal::Unranked { .. }) => u += 1,
            }
        }
        println!("{n:>2} {:>6} {c:>10} {a:>10} {u:>9}", ps.len());
    }
    Ok(())
}
