//! GF(2) modules: Q/<a7>, the 6-dimensional W module and the isotropic counts.

use amalgams::lab::Lab;
use amalgams::repmod::{count_invariant_isotropic, v_plus_vstar, Section, WModule};

fn main() -> amalgams::Result<()> {
    let lab = Lab::new()?;
    let section = Section::new(&lab.q(), &lab.z())?;
    let actors: Vec<_> = lab.g1.gens().to_vec();
    let m = section.module(&actors)?;
    let subs = m.invariant_subspaces()?;
    println!("Q/<a7>: dim {}, invariant subspaces {:?}", section.dim(), subs.iter().map(|s| s.dim()).collect::<Vec<_>>());
    let q = section.squaring_form(lab.a(7))?;
    println!("squaring form type {:?}, polar = commutator: {}", q.form_type(), section.polar_is_commutator_form(&q, lab.a(7)));

    let w = WModule::build()?;
    let wsubs = w.module().invariant_subspaces()?;
    println!("W: invariant subspaces {:?}", wsubs.iter().map(|s| s.dim()).collect::<Vec<_>>());
    let (u2, u3) = WModule::witnesses();
    let nonzero = |xs: &[u8]| xs.iter().any(|&x| w.form().value(w.coords(x)));
    println!("q_W nonzero on U2: {}, on U3: {}", nonzero(&u2), nonzero(&u3));

    let vv = v_plus_vstar()?;
    println!("V + V*: {} submodules", vv.invariant_subspaces()?.len());

    for n in 4..=6 {
        let c = count_invariant_isotropic(n)?;
        println!(
            "n = {n}: {} invariant, {} totally singular, {} totally isotropic",
            c.invariant_subspaces, c.totally_singular, c.totally_isotropic
        );
    }
    Ok(())
}
