//! The four twists of B and which amalgams they give are faithful.

use amalgams::lab::{build_twists, faithfulness, inner_equivalent, Lab};
use amalgams::mataction::Twist;
use amalgams::report::Suite;

fn main() -> amalgams::Result<()> {
    let lab = Lab::new()?;
    let mut checks = Suite::new("twists");
    let tw = build_twists(&lab, &mut checks)?;
    println!("twist checks passed: {}", checks.passed());

    for (i, s) in Twist::ALL.iter().enumerate() {
        for t in &Twist::ALL[i + 1..] {
            let c = inner_equivalent(&lab, tw.get(*s), tw.get(*t))?;
            println!("{} ~ {}: {}", s.name(), t.name(), if c.is_some() { "inner" } else { "distinct" });
        }
    }

    for t in Twist::ALL {
        let r = faithfulness(&lab, t, tw.get(t))?;
        match r.witness {
            Some(w) => println!("{}: unfaithful, {w} is normal in both members", t.name()),
            None => println!("{}: faithful", t.name()),
        }
    }
    Ok(())
}
