use amalgams::fp::{
    parse_presentation_file, read_cache, todd_coxeter, write_cache, EnumOptions, PresentationFile, Strategy as Enum, Word,
};
use amalgams::gf2::{rref, Gf2Matrix, Subspace};
use amalgams::lab::Lab;
use amalgams::mataction::{GeneratorTable, VectorAction};
use amalgams::perm::{PermGroup, Permutation};
use amalgams::report::{Report, Suite};
use proptest::prelude::*;
use std::sync::OnceLock;

fn lab() -> &'static Lab {
    static LAB: OnceLock<Lab> = OnceLock::new();
    LAB.get_or_init(|| Lab::new().unwrap())
}

fn matrix(dim: usize) -> impl Strategy<Value = Gf2Matrix> {
    prop::collection::vec(0u64..(1 << dim), dim).prop_map(move |rows| Gf2Matrix::from_rows(rows, dim).unwrap())
}

fn subspace(dim: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(0u64..(1 << dim), 0..=dim).prop_map(move |vs| Subspace::span(vs, dim))
}

/// Words of length up to `len` in generators `0..gens` and their inverses.
fn word(gens: usize, len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens as i32, any::<bool>()), 0..=len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, inv)| if inv { -(g + 1) } else { g + 1 }).collect()))
}

/// `<x, y | x^2, y^3, (xy)^k, extra>` over `<sub>`: always a quotient of a finite triangle group.
fn triangle_instance(k: u32, extra: &Word, sub: &Word) -> PresentationFile {
    let names = ["x", "y"].map(String::from).to_vec();
    let show = |w: &Word| {
        let w = w.free_reduce();
        if w.is_empty() { "x^2".to_string() } else { w.display(&names).to_string() }
    };
    let text = format!("gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^{k}\nrel: {}\nsub: {}\n", show(extra), show(sub));
    parse_presentation_file(&text).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_keeps_row_space(m in matrix(7)) {
        let (r, rank) = rref(&m);
        prop_assert_eq!(rank, m.rank());
        let (r2, rank2) = rref(&r);
        prop_assert_eq!(&r2, &r);
        prop_assert_eq!(rank2, rank);
        prop_assert_eq!(Subspace::from_matrix(&r), Subspace::from_matrix(&m));
    }

    #[test]
    fn subspace_lattice_is_modular(a in subspace(6), b in subspace(6), c0 in subspace(6)) {
        let c = a.sum(&c0).unwrap();
        let left = a.sum(&b.intersection(&c).unwrap()).unwrap();
        let right = a.sum(&b).unwrap().intersection(&c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dimension_formula(a in subspace(6), b in subspace(6)) {
        let s = a.sum(&b).unwrap().dim();
        let i = a.intersection(&b).unwrap().dim();
        prop_assert_eq!(s + i, a.dim() + b.dim());
    }

    #[test]
    fn vector_action_is_a_homomorphism(w1 in prop::collection::vec(1usize..14, 1..8), w2 in prop::collection::vec(1usize..14, 1..8)) {
        let t = GeneratorTable::new(4).unwrap();
        let act = VectorAction::new(5).unwrap();
        let (x, y) = (t.product(&w1), t.product(&w2));
        let xy = act.to_permutation(&x.mul(&y)).unwrap();
        prop_assert_eq!(xy, act.to_permutation(&x).unwrap().then(&act.to_permutation(&y).unwrap()));
        prop_assert_eq!(act.to_matrix(&act.to_permutation(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn order_does_not_depend_on_base(prefix in prop::collection::vec(0u32..31, 0..5), which in 0usize..3) {
        let g = [&lab().g1, &lab().g2, &lab().b][which];
        let chain = g.chain_with_base(&prefix).unwrap();
        prop_assert_eq!(chain.order(), g.order());
    }

    #[test]
    fn orbit_stabiliser(p in 0u32..31, which in 0usize..3) {
        let g = [&lab().g1, &lab().g2, &lab().b][which];
        let stab = g.stabilizer(&[p]).unwrap();
        prop_assert_eq!(g.orbit(p).len() as u128 * stab.order(), g.order());
        prop_assert!(stab.gens().iter().all(|s| s.fixes(p)));
    }

    #[test]
    fn members_meet_in_b(w in prop::collection::vec(0usize..12, 0..10)) {
        let x = lab().product(&w.iter().map(|k| k + 1).collect::<Vec<_>>());
        prop_assert!(lab().g1.contains(&x));
        prop_assert_eq!(lab().g2.contains(&x), lab().b.contains(&x));
    }

    #[test]
    fn strategies_agree_and_match_the_regular_image(k in 2u32..6, extra in word(2, 6), sub in word(2, 4)) {
        let f = triangle_instance(k, &extra, &sub);
        let opts = |strategy| EnumOptions { strategy, max_cosets: 100_000 };
        let hlt = todd_coxeter(&f.presentation, &f.subgroup, opts(Enum::Hlt)).unwrap();
        let felsch = todd_coxeter(&f.presentation, &f.subgroup, opts(Enum::Felsch)).unwrap();
        prop_assert_eq!(hlt.data(), felsch.data());
        prop_assert!(hlt.validate(&f.presentation, &f.subgroup).is_ok());
        // Oracle: index = |G| / |H| with both orders read off the regular representation.
        let whole = todd_coxeter(&f.presentation, &[], opts(Enum::Hlt)).unwrap();
        let regular = whole.permutation_image().unwrap();
        prop_assert_eq!(regular.order(), whole.index() as u128);
        let h: Vec<Permutation> = f.subgroup.iter().map(|w| {
            w.eval(regular.gens(), regular.identity(), |a, b| a.then(b), Permutation::inverse)
        }).collect();
        let h = PermGroup::new(whole.index(), h).unwrap();
        prop_assert_eq!(hlt.index() as u128 * h.order(), regular.order());
    }

    #[test]
    fn cache_revalidates(k in 2u32..6, extra in word(2, 6), flip in any::<prop::sample::Index>(), bit in 0u8..8) {
        let f = triangle_instance(k, &extra, &Word::empty());
        let t = todd_coxeter(&f.presentation, &f.subgroup, EnumOptions::default()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.ctb");
        write_cache(&path, &t, &f.presentation, &f.subgroup).unwrap();
        let back = read_cache(&path, &f.presentation, &f.subgroup).unwrap().unwrap();
        prop_assert_eq!(back.data(), t.data());

        let other = triangle_instance(k, &Word::empty(), &Word::empty());
        if other.presentation.relators() != f.presentation.relators() {
            prop_assert!(read_cache(&path, &other.presentation, &other.subgroup).unwrap().is_none());
        }

        let mut bytes = std::fs::read(&path).unwrap();
        let i = flip.index(bytes.len());
        bytes[i] ^= 1 << bit;
        std::fs::write(&path, &bytes).unwrap();
        if let Some(t2) = read_cache(&path, &f.presentation, &f.subgroup).unwrap() {
            prop_assert!(t2.validate(&f.presentation, &f.subgroup).is_ok());
        }
    }

    #[test]
    fn report_is_independent_of_suite_order(vals in prop::collection::vec((0usize..4, 0u8..3, 0u8..3), 1..20), seed in any::<u64>()) {
        let build = |order: &[usize]| {
            let mut suites: Vec<Suite> = (0..4).map(|i| Suite::new(&format!("s{i}"))).collect();
            for &j in order {
                let (s, a, b) = vals[j];
                suites[s].eq(&format!("c{j:02}"), a, b);
            }
            let mut r = Report::default();
            for s in suites.into_iter().rev() {
                r.add(s);
            }
            r.add_input("x", b"input");
            r.to_jsonl(false)
        };
        let forward: Vec<usize> = (0..vals.len()).collect();
        let mut shuffled = forward.clone();
        shuffled.sort_by_key(|&j| (j as u64).wrapping_mul(seed | 1).rotate_left(17));
        prop_assert_eq!(build(&forward), build(&shuffled));
    }
}
