//! Finite completions: M24 over the first member, and A16 over L.
//!
//! Pass `--he` to also enumerate the He completion (index 187425).

use amalgams::completion::{complete, Target};
use amalgams::fp::EnumOptions;

fn main() -> amalgams::Result<()> {
    let mut targets = vec![Target::M24, Target::A16];
    if std::env::args().any(|a| a == "--he") {
        targets.push(Target::He);
    }
    for t in targets {
        let inst = t.instance()?;
        let start = std::time::Instant::now();
        let c = complete(&inst, EnumOptions::default(), None)?;
        println!(
            "{}: index {} (expected {}), image order {} (expected {}), {:.2?}",
            inst.name,
            c.table.index(),
            inst.expected_index,
            c.image_order,
            inst.expected_order,
            start.elapsed()
        );
        if t == Target::A16 {
            let even = c.image.gens().iter().all(|g| g.is_even());
            println!("  all generator images even: {even}");
        }
    }
    Ok(())
}
