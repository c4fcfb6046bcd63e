//! The rank-3 amalgams as permutation groups on the 31 nonzero vectors of `F_2^5`:
//! structure suites for `G1`, `G2`, `B`, the twists, and faithfulness.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::Word;
use crate::gf2::{is_totally_singular, FormType, Subspace};
use crate::mataction::{GeneratorTable, Twist, VectorAction};
use crate::perm::{
    extend_homomorphism, fingerprint, subgroup_key, GenMap, Homomorphism, PermGroup, Permutation,
    StructureFingerprint,
};
use crate::repmod::{
    classify_complements, count_invariant_isotropic, find_generating_pair, l32_generators, v_plus_vstar, w_act,
    w_quadratic, ComplementReport, Section, WModule,
};
use crate::report::Suite;

const SPLIT_SEED: u64 = 0x5eed_0576;

/// The thirteen root elements as permutations, with the named subgroups.
pub struct Lab {
    table: GeneratorTable,
    gens: Vec<Permutation>,
    pub g1: PermGroup,
    pub g2: PermGroup,
    pub b: PermGroup,
}

impl Lab {
    pub fn new() -> Result<Lab> {
        let table = GeneratorTable::new(4)?;
        let action = VectorAction::new(table.dim())?;
        let gens = table.matrices().iter().map(|m| action.to_permutation(m)).collect::<Result<Vec<_>>>()?;
        let pick = |ks: &[usize]| -> Result<PermGroup> {
            PermGroup::new(action.degree(), ks.iter().map(|&k| gens[k].clone()).collect())
        };
        let g1 = pick(&table.b_indices())?;
        let g2 = pick(&table.c_indices())?;
        let b = pick(&table.shared_indices())?;
        Ok(Lab { table, gens, g1, g2, b })
    }

    pub fn table(&self) -> &GeneratorTable {
        &self.table
    }

    pub fn degree(&self) -> usize {
        self.gens[0].degree()
    }

    /// `a_k`, 1-based.
    pub fn a(&self, k: usize) -> &Permutation {
        &self.gens[k - 1]
    }

    /// `a_{k1} a_{k2} ...`, 1-based.
    pub fn product(&self, ks: &[usize]) -> Permutation {
        ks.iter().fold(Permutation::identity(self.degree()), |acc, &k| acc.then(self.a(k)))
    }

    /// Subgroup generated by the listed products.
    pub fn subgroup(&self, words: &[&[usize]]) -> PermGroup {
        PermGroup::new(self.degree(), words.iter().map(|w| self.product(w)).collect()).expect("same degree")
    }

    pub fn q(&self) -> PermGroup {
        self.subgroup(&[&[1], &[2], &[4], &[7], &[8], &[9], &[10]])
    }

    pub fn z(&self) -> PermGroup {
        self.subgroup(&[&[7]])
    }

    /// `E_x = <a1, a2, a4, a7>`.
    pub fn e_lower(&self) -> PermGroup {
        self.subgroup(&[&[1], &[2], &[4], &[7]])
    }

    /// `E^x = <a7, a8, a9, a10>`.
    pub fn e_upper(&self) -> PermGroup {
        self.subgroup(&[&[7], &[8], &[9], &[10]])
    }

    pub fn w1(&self) -> PermGroup {
        self.subgroup(&[&[7], &[4], &[8], &[9]])
    }

    /// `W_2 = N = <a7, a4, a1 a9, a2 a8>`.
    pub fn w2(&self) -> PermGroup {
        self.subgroup(&[&[7], &[4], &[1, 9], &[2, 8]])
    }

    pub fn e_t(&self) -> PermGroup {
        self.subgroup(&[&[7], &[4]])
    }

    /// The complement `<a3, a5, a6, a11, a12>` to `Q` in `G1`.
    pub fn l(&self) -> PermGroup {
        self.subgroup(&[&[3], &[5], &[6], &[11], &[12]])
    }

    /// The twist as a map on the generators `a1..a11` of `B`.
    pub fn twist_map(&self, t: Twist) -> GenMap {
        GenMap::new(t.image_words().iter().map(|w| self.product(w)).collect())
    }

    /// The twist extended to all of `B`; `None` if the generator map is inconsistent.
    pub fn twist(&self, t: Twist) -> Result<Option<Homomorphism>> {
        extend_homomorphism(&self.twist_map(t), &self.b)
    }
}

fn elementary_abelian(g: &PermGroup) -> bool {
    let gens = g.gens();
    gens.iter().all(|a| a.then(a).is_identity())
        && gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
}

/// Reference groups for fingerprint comparison.
pub fn reference_l32() -> Result<PermGroup> {
    VectorAction::new(3)?.group(&l32_generators())
}

pub fn reference_s4() -> Result<PermGroup> {
    PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1]])?, Permutation::from_cycles(4, &[&[0, 1, 2, 3]])?])
}

pub fn reference_s3_s3() -> Result<PermGroup> {
    let c = |cs: &[&[u32]]| Permutation::from_cycles(6, cs);
    PermGroup::new(6, vec![c(&[&[0, 1]])?, c(&[&[0, 1, 2]])?, c(&[&[3, 4]])?, c(&[&[3, 4, 5]])?])
}

fn quotient_fingerprint(g: &PermGroup, n: &PermGroup) -> Result<StructureFingerprint> {
    fingerprint(&g.coset_action(n)?.image)
}

fn run(suite: &mut Suite, id: &str, f: impl FnOnce(&mut Suite) -> Result<()>) {
    if let Err(e) = f(suite) {
        suite.error(id, e);
    }
}

pub fn structure_suite_g1(lab: &Lab) -> Suite {
    let mut s = Suite::new("structure.g1");
    run(&mut s, "g1", |s| {
        let g1 = &lab.g1;
        s.eq("order", 21504, g1.order());
        s.holds("perfect", g1.derived_subgroup().order() == g1.order());
        let q = g1.o_p(2)?;
        s.eq("o2.order", 128, q.order());
        s.holds("o2.equals_q", q.same_group(&lab.q()));
        let zq = q.center()?;
        s.eq("q.center_order", 2, zq.order());
        s.holds("q.center_is_a7", zq.same_group(&lab.z()));
        s.holds("q.frattini_is_center", q.frattini()?.same_group(&zq));
        s.holds("q.derived_is_center", q.derived_subgroup().same_group(&zq));
        let sec = Section::new(&q, &lab.z())?;
        s.eq("q_mod_z.dim", 6, sec.dim());
        let form = sec.squaring_form(lab.a(7))?;
        s.holds("q.polar_is_commutator_form", sec.polar_is_commutator_form(&form, lab.a(7)));
        s.record("q.form_type", form.form_type() == Some(FormType::Plus), "Some(Plus)", format!("{:?}", form.form_type()));
        for (name, e) in [("e_lower", lab.e_lower()), ("e_upper", lab.e_upper())] {
            s.holds(&format!("{name}.elementary_abelian"), elementary_abelian(&e));
            s.eq(&format!("{name}.order"), 16, e.order());
            s.holds(&format!("{name}.normal"), e.is_normal_in(g1));
            s.holds(&format!("{name}.totally_singular"), is_totally_singular(&sec.subspace_of(&e)?, &form));
        }
        let fp = quotient_fingerprint(g1, &q)?;
        s.eq("quotient.order", 168, fp.order);
        s.holds("quotient.fingerprint_is_l32", fp == fingerprint(&reference_l32()?)?);
        let image = g1.coset_action(&q)?.image;
        let simple = image
            .conjugacy_classes()?
            .iter()
            .filter(|c| !c[0].is_identity())
            .all(|c| image.normal_closure(&c[..1]).order() == image.order());
        s.holds("quotient.simple", simple);
        Ok(())
    });
    s
}

/// Searches for a complement to the normal subgroup `n` of `g`.
///
/// Finds `k` elements whose images generate `g/n`, then tries every
/// modification by elements of `n`: any complement meets each coset of `n` in
/// exactly one element, so if one exists it is generated by some modification.
/// Returns `None` only after that exhaustive step.
pub fn find_complement(g: &PermGroup, n: &PermGroup, max_gens: usize) -> Result<Option<PermGroup>> {
    let target = g.order() / n.order();
    let n_elems = n.elements()?;
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let random_element = |rng: &mut ChaCha8Rng| {
        (0..40).fold(g.identity(), |acc, _| acc.then(&g.gens()[rng.gen_range(0..g.gens().len())]))
    };
    for k in 1..=max_gens {
        for _ in 0..200 {
            let xs: Vec<Permutation> = (0..k).map(|_| random_element(&mut rng)).collect();
            let with_n: Vec<Permutation> = xs.iter().chain(n.gens()).cloned().collect();
            if PermGroup::new(g.degree(), with_n)?.order() != g.order() {
                continue;
            }
            let total = n_elems.len().pow(k as u32);
            for mut code in 0..total {
                let mut mods = Vec::with_capacity(k);
                for x in &xs {
                    mods.push(x.then(&n_elems[code % n_elems.len()]));
                    code /= n_elems.len();
                }
                let cand = PermGroup::new(g.degree(), mods)?;
                if cand.order() == target && n_elems.iter().all(|e| e.is_identity() || !cand.contains(e)) {
                    return Ok(Some(cand));
                }
            }
            return Ok(None);
        }
    }
    Err(Error::NoSolution(format!("no {max_gens}-element generating set of the quotient found")))
}

pub fn structure_suite_g2(lab: &Lab) -> Suite {
    let mut s = Suite::new("structure.g2");
    run(&mut s, "g2", |s| {
        let g2 = &lab.g2;
        s.eq("order", 9216, g2.order());
        let f = g2.o_p(2)?;
        s.eq("f.order", 256, f.order());
        let zf = f.center()?;
        s.eq("f.center_order", 4, zf.order());
        s.holds("f.center_is_e_t", zf.same_group(&lab.e_t()));
        s.holds("f.frattini_is_center", f.frattini()?.same_group(&zf));
        s.holds("f.derived_is_center", f.derived_subgroup().same_group(&zf));
        s.holds("f.centralizer_is_center", g2.centralizer_of(f.gens())?.same_group(&zf));
        let fp = quotient_fingerprint(g2, &f)?;
        s.eq("quotient.order", 36, fp.order);
        s.holds("quotient.fingerprint_is_s3xs3", fp == fingerprint(&reference_s3_s3()?)?);
        let n = lab.w2();
        s.holds("n.elementary_abelian", elementary_abelian(&n));
        s.eq("n.order", 16, n.order());
        s.holds("n.self_centralizing", g2.centralizer_of(n.gens())?.same_group(&n));
        // B sits in G2 through beta in the faithful amalgams; there N is normal
        let beta = lab.twist(Twist::Beta)?.ok_or_else(|| Error::Verification("beta".into()))?;
        let n = beta.map_group(&n, lab.degree())?;
        s.holds("n_beta.normal", n.is_normal_in(g2));
        s.holds("n_beta.self_centralizing", g2.centralizer_of(n.gens())?.same_group(&n));
        match find_complement(g2, &n, 3)? {
            Some(k) => {
                s.eq("split.complement_order", 576, k.order());
                s.holds("split.meets_n_trivially", n.elements()?.iter().all(|e| e.is_identity() || !k.contains(e)));
            }
            None => {
                s.record("split.complement_order", false, 576, "no complement");
            }
        }
        Ok(())
    });
    s
}

/// All elementary abelian normal subgroups of order `2^rank`, as unions of conjugacy classes.
pub fn elementary_abelian_normal(g: &PermGroup, rank: u32) -> Result<Vec<PermGroup>> {
    let size = 1usize << rank;
    let classes: Vec<Vec<Permutation>> = g
        .conjugacy_classes()?
        .into_iter()
        .filter(|c| c[0].order() == 2 && c.len() < size)
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn search(
        classes: &[Vec<Permutation>],
        start: usize,
        room: usize,
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if room == 0 {
            found.push(chosen.clone());
            return;
        }
        for i in start..classes.len() {
            if classes[i].len() <= room {
                chosen.push(i);
                search(classes, i + 1, room - classes[i].len(), chosen, found);
                chosen.pop();
            }
        }
    }
    let mut found = Vec::new();
    search(&classes, 0, size - 1, &mut chosen, &mut found);
    for pick in found {
        let mut set: HashSet<Permutation> = pick.iter().flat_map(|&i| classes[i].iter().cloned()).collect();
        set.insert(g.identity());
        let closed = set.iter().all(|a| set.iter().all(|b| set.contains(&a.then(b))));
        if closed && set.iter().all(|a| set.iter().all(|b| a.then(b) == b.then(a))) {
            out.push(g.subgroup_from_elements(set.into_iter().collect()));
        }
    }
    Ok(out)
}

pub fn structure_suite_b(lab: &Lab) -> Suite {
    let mut s = Suite::new("structure.b");
    run(&mut s, "b", |s| {
        let b = &lab.b;
        s.eq("order", 3072, b.order());
        let q = lab.q();
        s.holds("q.normal", q.is_normal_in(b));
        let fp = quotient_fingerprint(b, &q)?;
        s.eq("quotient.order", 24, fp.order);
        s.holds("quotient.fingerprint_is_s4", fp == fingerprint(&reference_s4()?)?);
        let found = elementary_abelian_normal(b, 4)?;
        s.eq("elementary_abelian_normal_2^4.count", 4, found.len());
        let named = [lab.e_lower(), lab.e_upper(), lab.w1(), lab.w2()];
        let mut want = named.iter().map(subgroup_key).collect::<Result<Vec<_>>>()?;
        let mut got = found.iter().map(subgroup_key).collect::<Result<Vec<_>>>()?;
        want.sort();
        got.sort();
        s.holds("elementary_abelian_normal_2^4.named", want == got);
        s.holds("w2.self_centralizing", b.centralizer_of(lab.w2().gens())?.same_group(&lab.w2()));
        s.holds("w1.not_self_centralizing", !b.centralizer_of(lab.w1().gens())?.same_group(&lab.w1()));
        s.holds("center_is_a7", b.center()?.same_group(&lab.z()));
        // index-2 subgroups over Q correspond to nonzero maps from the 2-part of (B/Q)^ab onto C2
        let rank = fp.abelianization_invariants.iter().filter(|&&d| d % 2 == 0).count();
        s.eq("index2_over_q.count", 1, (1usize << rank) - 1);
        Ok(())
    });
    s
}

/// Outcome of the twist construction.
pub struct Twists {
    pub maps: Vec<(Twist, Homomorphism)>,
}

impl Twists {
    pub fn get(&self, t: Twist) -> &Homomorphism {
        &self.maps.iter().find(|(u, _)| *u == t).expect("all four twists are built").1
    }
}

pub fn build_twists(lab: &Lab, s: &mut Suite) -> Result<Twists> {
    let mut maps = Vec::new();
    for t in Twist::ALL {
        let h = lab.twist(t)?.ok_or_else(|| Error::Verification(format!("{} is not a homomorphism", t.name())))?;
        s.holds(&format!("{}.automorphism", t.name()), h.is_bijective() && h.domain_size() == 3072);
        maps.push((t, h));
    }
    let tw = Twists { maps };
    let (id, a, b, ab) = (tw.get(Twist::Identity), tw.get(Twist::Alpha), tw.get(Twist::Beta), tw.get(Twist::AlphaBeta));
    let compose = |x: &Homomorphism, y: &Homomorphism| x.then(y).ok_or_else(|| Error::Verification("composition".into()));
    s.holds("alpha.squared_is_identity", compose(a, a)?.same_map(id));
    s.holds("beta.squared_is_identity", compose(b, b)?.same_map(id));
    s.holds("alpha_beta.commute", compose(a, b)?.same_map(&compose(b, a)?));
    s.holds("alphabeta.is_composite", compose(a, b)?.same_map(ab));
    let q = lab.q();
    s.holds("alpha.fixes_q_pointwise", q.elements()?.iter().all(|x| a.apply(x) == Some(x)));
    let ex_beta = b.map_group(&lab.e_lower(), lab.degree())?;
    s.holds("beta.maps_e_lower_to_w2", ex_beta.same_group(&lab.w2()));
    Ok(tw)
}

/// Whether `sigma = c_g ∘ tau` for some `g` in `B`, by exhaustive sweep.
pub fn inner_equivalent(lab: &Lab, sigma: &Homomorphism, tau: &Homomorphism) -> Result<Option<Permutation>> {
    let gens = lab.b.gens();
    let want: Vec<&Permutation> = gens.iter().map(|x| sigma.apply(x).expect("generator")).collect();
    let base: Vec<&Permutation> = gens.iter().map(|x| tau.apply(x).expect("generator")).collect();
    for g in lab.b.elements()? {
        if base.iter().zip(&want).all(|(t, w)| t.conjugate(&g) == **w) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

pub fn distinct_coset_check(lab: &Lab, tw: &Twists, s: &mut Suite) -> Result<()> {
    for (i, (t, ht)) in tw.maps.iter().enumerate() {
        for (u, hu) in &tw.maps[i..] {
            let found = inner_equivalent(lab, ht, hu)?;
            let id = format!("inner.{}_vs_{}", t.name(), u.name());
            if t == u {
                s.record(&id, found.as_ref().is_some_and(|g| g.is_identity()), "identity conjugator", describe(&found));
            } else {
                s.record(&id, found.is_none(), "no conjugator", describe(&found));
            }
        }
    }
    Ok(())
}

fn describe(g: &Option<Permutation>) -> String {
    match g {
        None => "no conjugator".into(),
        Some(g) if g.is_identity() => "identity conjugator".into(),
        Some(g) => format!("conjugator {g:?}"),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub name: String,
    pub order: u128,
    pub normal_in_g1: bool,
    pub normal_in_twisted_g2: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaithfulnessReport {
    pub twist: Twist,
    pub candidates: Vec<Candidate>,
    pub faithful: bool,
    pub witness: Option<String>,
}

/// Nontrivial normal subgroups of `G1` inside `B`: preimages of the `G1`-invariant
/// subspaces of `Q/<a7>`. Every such subgroup lies in `Q` (its image in `G1/Q` is a
/// proper normal subgroup of a simple group) and meets `Z(Q) = <a7>`.
pub fn g1_normal_in_b(lab: &Lab) -> Result<Vec<(String, PermGroup)>> {
    let q = lab.q();
    let sec = Section::new(&q, &lab.z())?;
    let module = sec.module(lab.g1.gens())?;
    let named = [("e1", lab.z()), ("e2", lab.e_lower()), ("e3", lab.e_upper()), ("q", q.clone())];
    let mut out = Vec::new();
    for sub in module.invariant_subspaces()? {
        let gens: Vec<Permutation> =
            sub.basis().iter().map(|&v| sec.lift(v)).chain(std::iter::once(lab.a(7).clone())).collect();
        let h = PermGroup::new(lab.degree(), gens)?;
        let name = named
            .iter()
            .find(|(_, n)| n.same_group(&h))
            .map(|(s, _)| s.to_string())
            .unwrap_or_else(|| format!("unnamed_{}", h.order()));
        out.push((name, h));
    }
    Ok(out)
}

pub fn faithfulness(lab: &Lab, t: Twist, h: &Homomorphism) -> Result<FaithfulnessReport> {
    let a13 = lab.a(13);
    let mut candidates = Vec::new();
    for (name, sub) in g1_normal_in_b(lab)? {
        let image = h.map_group(&sub, lab.degree())?;
        candidates.push(Candidate {
            name,
            order: sub.order(),
            normal_in_g1: sub.is_normal_in(&lab.g1),
            normal_in_twisted_g2: image.is_normal_in(&lab.b) && image.is_normalized_by(a13),
        });
    }
    let witness = candidates.iter().find(|c| c.normal_in_g1 && c.normal_in_twisted_g2).map(|c| c.name.clone());
    Ok(FaithfulnessReport { twist: t, faithful: witness.is_none(), witness, candidates })
}

pub fn amalgam_suite(lab: &Lab) -> Suite {
    let mut s = Suite::new("amalgams");
    run(&mut s, "amalgams", |s| {
        let tw = build_twists(lab, s)?;
        distinct_coset_check(lab, &tw, s)?;
        let cands = g1_normal_in_b(lab)?;
        let mut names: Vec<&str> = cands.iter().map(|(n, _)| n.as_str()).collect();
        names.sort();
        s.eq("normal_candidates", "e1,e2,e3,q".to_string(), names.join(","));
        for t in Twist::ALL {
            let r = faithfulness(lab, t, tw.get(t))?;
            let (want_faithful, want_witness) = match t {
                Twist::Identity | Twist::Alpha => (false, Some("e2".to_string())),
                Twist::Beta | Twist::AlphaBeta => (true, None),
            };
            s.eq(&format!("faithful.{}", t.name()), want_faithful, r.faithful);
            s.eq(
                &format!("witness.{}", t.name()),
                want_witness.clone().unwrap_or_else(|| "none".into()),
                r.witness.clone().unwrap_or_else(|| "none".into()),
            );
            let q_both = r.candidates.iter().any(|c| c.name == "q" && c.normal_in_twisted_g2);
            s.holds(&format!("q_not_normal_in_twisted_g2.{}", t.name()), !q_both);
        }
        let beta_e2 = tw.get(Twist::Beta).map_group(&lab.e_lower(), lab.degree())?;
        s.holds("beta.e2_not_normalized_by_a13", !beta_e2.is_normalized_by(lab.a(13)));
        Ok(())
    });
    s
}

/// The fixed presentation `<x, y | x^2, y^3, (xy)^7, [x,y]^4>` of `L_3(2)`.
pub fn l32_relators() -> Vec<Word> {
    let (x, y) = (Word::gen(0), Word::gen(1));
    let xy = x.concat(&y);
    vec![x.pow(2), y.pow(3), xy.pow(7), Word::commutator(&x, &y).pow(4)]
}

/// Complements to `Q/<a7>` in `G1/<a7>`.
pub fn g1_complements(lab: &Lab) -> Result<ComplementReport> {
    let rels = l32_relators();
    let (x, y) = find_generating_pair(&lab.l(), &rels)?;
    classify_complements(&lab.g1, &lab.q(), lab.a(7), (&x, &y), &rels, &[&lab.e_lower(), &lab.e_upper()])
}

pub fn module_suite(lab: &Lab) -> Suite {
    let mut s = Suite::new("modules");
    run(&mut s, "modules", |s| {
        let q = lab.q();
        let sec = Section::new(&q, &lab.z())?;
        let m = sec.module(lab.g1.gens())?;
        let subs = m.invariant_subspaces()?;
        s.eq("q_mod_z.invariant_subspaces", 4, subs.len());
        let want: HashSet<Subspace> = [
            Subspace::zero(6),
            sec.subspace_of(&lab.e_lower())?,
            sec.subspace_of(&lab.e_upper())?,
            Subspace::full(6),
        ]
        .into_iter()
        .collect();
        s.holds("q_mod_z.invariant_subspaces_named", subs.into_iter().collect::<HashSet<_>>() == want);

        let w = WModule::build()?;
        s.holds("w.abelian_group_axioms", true);
        let wsubs = w.module().invariant_subspaces()?;
        s.eq("w.submodules", 3, wsubs.len());
        s.holds("w.v0_is_submodule", wsubs.contains(&w.v0()));
        s.holds("w.form_invariant", w.module().actors().iter().all(|m| w.form().is_invariant(m)));
        s.eq("w.invariant_forms_dimension", 1, w.invariant_form_dimension());
        s.holds("w.form_vanishes_on_v0", (0..8u8).all(|v| !w_quadratic(v)));
        let (u2, u3) = WModule::witnesses();
        let stab = WModule::witness_stabiliser();
        for (name, u) in [("u2", &u2), ("u3", &u3)] {
            s.holds(&format!("w.{name}.subgroup"), WModule::is_subgroup(u));
            s.holds(&format!("w.{name}.stabiliser_invariant"), stab.iter().all(|g| u.iter().all(|&x| u.contains(&w_act(g, x)))));
            s.holds(&format!("w.{name}.form_nonzero"), u.iter().any(|&x| w_quadratic(x)));
        }
        s.eq("v_plus_vstar.submodules", 4, v_plus_vstar()?.invariant_subspaces()?.len());
        for (n, want) in [(4, 4), (5, 3), (6, 3)] {
            let c = count_invariant_isotropic(n)?;
            s.eq(&format!("isotropic.n{n}"), want, c.totally_singular);
        }
        Ok(())
    });
    s
}

pub fn complement_suite(lab: &Lab) -> Suite {
    let mut s = Suite::new("complements");
    run(&mut s, "complements", |s| {
        let r = g1_complements(lab)?;
        s.eq("pairs_checked", 16384, r.pairs_checked);
        s.eq("complements", 256, r.complements);
        s.eq("classes", 4, r.classes.len());
        let big = r.classes.iter().filter(|c| c.fingerprint.order == 336 && c.fingerprint.involution_count >= 2).count();
        let sl27 = r.classes.iter().filter(|c| c.fingerprint.order == 336 && c.fingerprint.involution_count == 1).count();
        s.eq("classes.c2_x_l32", 3, big);
        s.eq("classes.sl27", 1, sl27);
        let both = r.classes.iter().filter(|c| c.semisimple.iter().all(|&f| f)).count();
        s.eq("classes.both_semisimple", 1, both);
        Ok(())
    });
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_subgroups() {
        let lab = Lab::new().unwrap();
        assert_eq!(lab.q().order(), 128);
        assert_eq!(lab.l().order(), 168);
        assert!(lab.e_lower().is_normal_in(&lab.g2));
        assert!(!lab.w1().is_normal_in(&lab.g2));
    }

    #[test]
    fn reference_orders() {
        assert_eq!(reference_l32().unwrap().order(), 168);
        assert_eq!(reference_s4().unwrap().order(), 24);
        assert_eq!(reference_s3_s3().unwrap().order(), 36);
    }
}
