//! The member groups acting on the 31 nonzero vectors of GF(2)^5.

use amalgams::lab::Lab;
use amalgams::perm::fingerprint;

fn main() -> amalgams::Result<()> {
    let lab = Lab::new()?;
    println!("|G1| = {}  |G2| = {}  |B| = {}", lab.g1.order(), lab.g2.order(), lab.b.order());
    println!("|G1 : B| = {}  |G2 : B| = {}", lab.g1.order() / lab.b.order(), lab.g2.order() / lab.b.order());

    let q = lab.q();
    println!("|Q| = {}, normal in G1: {}", q.order(), q.is_normal_in(&lab.g1));
    println!("Z(G1) = <a7>: {}", lab.g1.center()?.same_group(&lab.z()));

    // G1 / Q acts on the cosets of B faithfully as L3(2).
    let act = lab.g1.coset_action(&lab.b)?;
    let image = &act.image;
    let f = fingerprint(image)?;
    println!(
        "G1 on the 7 cosets of B: order {}, 2-transitive {}, involutions {}",
        image.order(),
        image.is_two_transitive()?,
        f.involution_count
    );

    let orbits: Vec<usize> = lab.g1.orbits().iter().map(Vec::len).collect();
    println!("G1 orbits on nonzero vectors: {orbits:?}");
    Ok(())
}
