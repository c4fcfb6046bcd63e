//! The bipartite coset graph of M24 and the local axioms at a base vertex.

use amalgams::completion::{complete, Side, Target, G1_ORDER, G2_ORDER};
use amalgams::cosetgraph::{check_axioms, AxiomInputs, CosetGraph};
use amalgams::fp::EnumOptions;
use amalgams::report::Suite;

fn main() -> amalgams::Result<()> {
    let first = complete(&Target::M24.instance_on(Side::First)?, EnumOptions::default(), None)?;
    let second = complete(&Target::M24.instance_on(Side::Second)?, EnumOptions::default(), None)?;
    let d = CosetGraph::build(&first.table, &second.table)?;
    println!("parts {:?}, valencies {:?}, edges {}", d.parts(), d.valencies(), d.edge_count());

    let first_gens: Vec<usize> = (0..12).collect();
    let second_gens: Vec<usize> = (0..11).chain([12]).collect();
    let mut s = Suite::new("m24");
    check_axioms(
        &AxiomInputs {
            graph: &d,
            first_gens: &first_gens,
            second_gens: &second_gens,
            first_bound: G1_ORDER,
            second_bound: G2_ORDER,
            group_order: Target::M24.group_order(),
            spot_checks: 0,
        },
        &mut s,
    )?;
    for c in s.checks() {
        println!("{:?} {:32} {}", c.status, c.check, c.actual);
    }
    Ok(())
}
