use amalgams::mataction::{agl_order, GeneratorTable, VectorAction, WordTable};
use amalgams::perm::closure_order;

fn groups(n: usize) -> (u128, u128, u128) {
    let t = GeneratorTable::new(n).unwrap();
    let act = VectorAction::new(t.dim()).unwrap();
    let pick = |ix: Vec<usize>| act.group(&ix.iter().map(|&k| t.gens()[k].matrix.clone()).collect::<Vec<_>>()).unwrap();
    (pick(t.b_indices()).order(), pick(t.c_indices()).order(), pick(t.shared_indices()).order())
}

#[test]
fn n4_orders() {
    assert_eq!(groups(4), (21504, 9216, 3072));
    assert_eq!(agl_order(4) / 15, 21504);
}

#[test]
fn n5_orders_match_orbit_stabilizer() {
    let (b, c, _) = groups(5);
    assert_eq!(b, agl_order(5) / 31);
    assert_eq!(c, agl_order(5) / 155);
}

#[test]
fn breadth_first_closure_agrees() {
    let t = GeneratorTable::new(4).unwrap();
    let act = VectorAction::new(5).unwrap();
    let g1 = act.group(&t.b_indices().iter().map(|&k| t.gens()[k].matrix.clone()).collect::<Vec<_>>()).unwrap();
    assert_eq!(closure_order(g1.gens(), 31, 100_000), Some(21504));
}

#[test]
fn word_table_covers_the_intersection() {
    let t = GeneratorTable::new(4).unwrap();
    let w = WordTable::new(&t, &t.shared_indices()).unwrap();
    assert_eq!(w.len(), 3072);
}
