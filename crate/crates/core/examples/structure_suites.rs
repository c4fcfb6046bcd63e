//! Structure suites for G1, G2 and B, and the complement classification in G1/<a7>.

use amalgams::lab::{self, Lab};
use amalgams::report::Status;

fn main() -> amalgams::Result<()> {
    let lab = Lab::new()?;
    for suite in [
        lab::structure_suite_g1(&lab),
        lab::structure_suite_g2(&lab),
        lab::structure_suite_b(&lab),
    ] {
        let failed: Vec<_> = suite.checks().iter().filter(|c| c.status == Status::Fail).collect();
        println!("{}: {} checks, {} failed", suite.name(), suite.checks().len(), failed.len());
        for c in failed {
            println!("  {} expected {} got {}", c.check, c.expected, c.actual);
        }
    }

    let report = lab::g1_complements(&lab)?;
    println!(
        "complements: {} pairs swept, {} complements, {} classes",
        report.pairs_checked,
        report.complements,
        report.classes.len()
    );
    for c in &report.classes {
        println!(
            "  size {:3}  order {}  involutions {:2}  semisimple {:?}",
            c.class_size, c.fingerprint.order, c.fingerprint.involution_count, c.semisimple
        );
    }
    Ok(())
}
