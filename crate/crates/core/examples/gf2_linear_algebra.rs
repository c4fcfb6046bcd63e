//! Row reduction, subspaces and quadratic forms over GF(2).

use amalgams::gf2::{all_subspaces, gaussian_binomial, rref, FormType, Gf2Matrix, QuadraticForm, Subspace};

fn main() -> amalgams::Result<()> {
    let m = Gf2Matrix::parse_rows(&["1101", "0111", "1010"])?;
    let (r, rank) = rref(&m);
    println!("rank {rank}");
    for i in 0..r.nrows() {
        println!("  {:0w$b}", r.rows()[i], w = r.ncols());
    }

    // Subspaces of GF(2)^4: 1 + 15 + 35 + 15 + 1.
    let counts: Vec<u128> = (0..=4).map(|k| gaussian_binomial(4, k)).collect();
    println!("gaussian binomials {counts:?}, enumerated {}", all_subspaces(4)?.len());

    let u = Subspace::span([0b0011, 0b0101], 4);
    let w = Subspace::span([0b0110, 0b1000], 4);
    println!("dim U+W = {}, dim U^W = {}", u.sum(&w)?.dim(), u.intersection(&w)?.dim());

    // x1 x2 + x3 x4 has 10 zeros; x1 x2 + x3^2 + x3 x4 + x4^2 has 6.
    let plus = QuadraticForm::from_values(4, |v| ((v & 1) & (v >> 1 & 1)) ^ ((v >> 2 & 1) & (v >> 3 & 1)) == 1)?;
    let minus = QuadraticForm::from_values(4, |v| {
        let x = |i: u32| v >> i & 1;
        (x(0) & x(1)) ^ x(2) ^ (x(2) & x(3)) ^ x(3) == 1
    })?;
    for (name, q) in [("plus", &plus), ("minus", &minus)] {
        println!("{name}: zeros {} type {:?}", q.zero_count(), q.form_type());
    }
    assert_eq!(plus.form_type(), Some(FormType::Plus));
    assert_eq!(minus.form_type(), Some(FormType::Minus));
    Ok(())
}
