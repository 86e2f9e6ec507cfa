//! Slack ideal versus toric ideal for the square and the pyramid over it.

use slackcert::cas::slack::{slack_ideal, toric_ideal};
use slackcert::cas::text::dump;
use slackcert::cas::{ideal_equals, Budget};
use slackcert::polytope::{hypercube, join, point};

fn main() -> slackcert::Result<()> {
    let b = Budget::default();
    for (name, p) in [("square", hypercube(2)), ("pyramid", join(&point(), &hypercube(2))?)] {
        let s = slack_ideal(&p, b)?;
        let t = toric_ideal(&p)?;
        println!("{name}: {} slack variables", s.nvars());
        print!("{}", dump(s.groebner_basis(b)?, s.nvars(), &["slack ideal basis".into()]));
        print!("{}", dump(t.generators(), t.nvars(), &["toric generators".into()]));
        println!("equal: {}\n", ideal_equals(&s, &t, b)?);
    }
    Ok(())
}
