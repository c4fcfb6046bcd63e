//! Parse a presentation file and enumerate cosets with both strategies.

use amalgams::fp::{format_word, parse_presentation_file, todd_coxeter, EnumOptions, Strategy};

const L32: &str = "
# L3(2) on the 7 points of the Fano plane
gens: x y
rel: x^2
rel: y^3
rel: (x*y)^7
rel: [x,y]^4
sub: y
";

fn main() -> amalgams::Result<()> {
    let file = parse_presentation_file(L32)?;
    let p = &file.presentation;
    for r in p.relators() {
        println!("relator {}", format_word(r, p.names()));
    }
    for strategy in [Strategy::Hlt, Strategy::Felsch] {
        let t = todd_coxeter(p, &file.subgroup, EnumOptions { strategy, max_cosets: 10_000 })?;
        t.validate(p, &file.subgroup)?;
        println!("{strategy:?}: index {}, {} cosets defined", t.index(), t.stats().defined);
    }
    let whole = todd_coxeter(p, &[], EnumOptions::default())?;
    let image = whole.permutation_image()?;
    println!("regular representation: {} cosets, image order {}", whole.index(), image.order());
    Ok(())
}
