//! Acceptance criteria 1-10. Every criterion prints one PASS/FAIL line; all
//! tolerances are exact integer or string equality, and each criterion also has
//! a wall-clock budget.

use std::io::Write;
use std::time::{Duration, Instant};

use amalgams::cli::{main_with, EXIT_OK};
use amalgams::completion::{self, complete, presentation_suite, Side, Target};
use amalgams::cosetgraph::{check_axioms, AxiomInputs, CosetGraph};
use amalgams::fp::{todd_coxeter, EnumOptions, Strategy};
use amalgams::lab::{self, Lab};
use amalgams::mataction::{GeneratorTable, VectorAction};
use amalgams::perm::closure_order;
use amalgams::report::{Status, Suite};

type Outcome = Vec<(String, bool, String)>;

struct Run {
    failed: Vec<String>,
}

impl Run {
    fn criterion(&mut self, n: u32, title: &str, budget_s: u64, f: impl FnOnce(&mut Outcome) -> amalgams::Result<()>) {
        let start = Instant::now();
        let mut out = Outcome::new();
        if let Err(e) = f(&mut out) {
            out.push(("error".into(), false, e.to_string()));
        }
        let elapsed = start.elapsed();
        let in_budget = elapsed <= Duration::from_secs(budget_s);
        out.push(("budget".into(), in_budget, format!("{:.1}s of {budget_s}s", elapsed.as_secs_f64())));
        let bad: Vec<&(String, bool, String)> = out.iter().filter(|c| !c.1).collect();
        let verdict = if bad.is_empty() && out.len() > 1 { "PASS" } else { "FAIL" };
        // Written to the raw handle so the lines survive libtest's output capture.
        let mut err = std::io::stderr().lock();
        let _ = writeln!(
            err,
            "criterion {n:2} {verdict} {title}: {}/{} checks, tolerance exact, {:.1}s (budget {budget_s}s)",
            out.len() - bad.len(),
            out.len(),
            elapsed.as_secs_f64()
        );
        for (id, _, actual) in &bad {
            let _ = writeln!(err, "    failed {id}: {actual}");
        }
        if verdict == "FAIL" {
            self.failed.push(format!("criterion {n}"));
        }
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(out: &mut Outcome, id: &str, expected: T, actual: T) {
    let pass = expected == actual;
    out.push((id.into(), pass, format!("expected {expected:?}, got {actual:?}")));
}

/// Requires the named checks to be present, passing and reporting `actual`.
fn require(out: &mut Outcome, suite: &Suite, pinned: &[(&str, &str)]) {
    for (id, actual) in pinned {
        match suite.checks().iter().find(|c| c.check == *id) {
            Some(c) => out.push((
                format!("{}.{id}", suite.name()),
                c.status == Status::Pass && c.actual == *actual,
                format!("{:?}, expected {:?}, got {:?}", c.status, actual, c.actual),
            )),
            None => out.push((format!("{}.{id}", suite.name()), false, "missing".into())),
        }
    }
    let failing: Vec<&str> = suite.checks().iter().filter(|c| c.status == Status::Fail).map(|c| c.check.as_str()).collect();
    out.push((format!("{}.all", suite.name()), failing.is_empty(), format!("failing {failing:?}")));
}

fn opts(strategy: Strategy) -> EnumOptions {
    EnumOptions { strategy, max_cosets: 5_000_000 }
}

#[test]
fn acceptance() {
    let mut run = Run { failed: Vec::new() };
    let lab = Lab::new().expect("lab");

    run.criterion(1, "orders and indices", 1, |out| {
        eq(out, "g1", 21504, lab.g1.order());
        eq(out, "g2", 9216, lab.g2.order());
        eq(out, "b", 3072, lab.b.order());
        eq(out, "index.g1_b", 7, lab.g1.order() / lab.b.order());
        eq(out, "index.g2_b", 3, lab.g2.order() / lab.b.order());
        // Oracle: breadth-first closure on the matrices' point action, no stabiliser chain.
        let t = GeneratorTable::new(4)?;
        let act = VectorAction::new(5)?;
        for (id, ix, n) in [("closure.g1", t.b_indices(), 21504), ("closure.g2", t.c_indices(), 9216), ("closure.b", t.shared_indices(), 3072)] {
            let gens = ix.iter().map(|&k| act.to_permutation(&t.gens()[k].matrix)).collect::<amalgams::Result<Vec<_>>>()?;
            eq(out, id, Some(n), closure_order(&gens, 31, 100_000));
        }
        Ok(())
    });

    run.criterion(2, "structure suites", 5, |out| {
        require(
            out,
            &lab::structure_suite_g1(&lab),
            &[
                ("o2.order", "128"),
                ("q.form_type", "Some(Plus)"),
                ("q.center_order", "2"),
                ("q.derived_is_center", "true"),
                ("q.frattini_is_center", "true"),
                ("e_lower.elementary_abelian", "true"),
                ("e_lower.order", "16"),
            ],
        );
        require(
            out,
            &lab::structure_suite_g2(&lab),
            &[
                ("f.order", "256"),
                ("f.center_order", "4"),
                ("f.frattini_is_center", "true"),
                ("f.derived_is_center", "true"),
                ("n.self_centralizing", "true"),
            ],
        );
        require(
            out,
            &lab::structure_suite_b(&lab),
            &[
                ("elementary_abelian_normal_2^4.count", "4"),
                ("w2.self_centralizing", "true"),
                ("w1.not_self_centralizing", "true"),
            ],
        );
        Ok(())
    });

    run.criterion(3, "module checks", 30, |out| {
        require(
            out,
            &lab::module_suite(&lab),
            &[
                ("q_mod_z.invariant_subspaces", "4"),
                ("w.submodules", "3"),
                ("w.abelian_group_axioms", "true"),
                ("w.form_invariant", "true"),
                ("w.u2.form_nonzero", "true"),
                ("w.u3.form_nonzero", "true"),
                ("isotropic.n4", "4"),
                ("isotropic.n5", "3"),
                ("isotropic.n6", "3"),
            ],
        );
        Ok(())
    });

    run.criterion(4, "complement classification", 60, |out| {
        require(
            out,
            &lab::complement_suite(&lab),
            &[
                ("pairs_checked", "16384"),
                ("classes", "4"),
                ("classes.c2_x_l32", "3"),
                ("classes.sl27", "1"),
                ("classes.both_semisimple", "1"),
            ],
        );
        // Oracle: preimage orders and involution counts read directly off the classes.
        let report = lab::g1_complements(&lab)?;
        let mut inv: Vec<u64> = report.classes.iter().map(|c| c.fingerprint.involution_count).collect();
        inv.sort_unstable();
        eq(out, "preimage_orders", vec![336u128; 4], report.classes.iter().map(|c| c.fingerprint.order).collect());
        eq(out, "involutions.one_class_with_one", 1, inv.iter().filter(|&&i| i == 1).count());
        eq(out, "involutions.three_with_at_least_two", 3, inv.iter().filter(|&&i| i >= 2).count());
        Ok(())
    });

    let mut amalgams = Suite::new("amalgams");

    run.criterion(5, "twists", 30, |out| {
        amalgams = lab::amalgam_suite(&lab);
        let mut pinned = vec![
            ("alpha.automorphism", "true"),
            ("beta.automorphism", "true"),
            ("alphabeta.automorphism", "true"),
            ("id.automorphism", "true"),
        ];
        for id in [
            "inner.id_vs_alpha",
            "inner.id_vs_beta",
            "inner.id_vs_alphabeta",
            "inner.alpha_vs_beta",
            "inner.alpha_vs_alphabeta",
            "inner.beta_vs_alphabeta",
        ] {
            pinned.push((id, "no conjugator"));
        }
        require(out, &amalgams, &pinned);
        Ok(())
    });

    run.criterion(6, "faithfulness", 5, |out| {
        require(
            out,
            &amalgams,
            &[
                ("faithful.id", "false"),
                ("faithful.alpha", "false"),
                ("faithful.beta", "true"),
                ("faithful.alphabeta", "true"),
                ("witness.id", "e2"),
                ("witness.alpha", "e2"),
            ],
        );
        // E2 = <a1, a2, a4, a7>, checked independently of the suite.
        let e2 = lab.subgroup(&[&[1], &[2], &[4], &[7]]);
        eq(out, "e2.normal_in_g1", true, e2.is_normal_in(&lab.g1));
        eq(out, "e2.normal_in_g2", true, e2.is_normal_in(&lab.g2));
        Ok(())
    });

    run.criterion(7, "presentations", 60, |out| {
        for (t, n) in [(Target::G1, 21504), (Target::G2, 9216)] {
            let c = complete(&t.instance()?, opts(Strategy::Hlt), None)?;
            eq(out, &format!("{}.cosets", t.name()), n, c.table.index());
        }
        require(
            out,
            &presentation_suite(),
            &[
                ("printed.beta.1_13", "[a1,a13]*a4*a6"),
                ("printed.beta.2_13", "[a2,a13]*a4*a5"),
                ("printed.alphabeta.3_13", "[a3,a13]*a4"),
                ("printed.alphabeta.11_13", "[a11,a13]*a4"),
            ],
        );
        Ok(())
    });

    run.criterion(8, "completions", 20 * 60, |out| {
        let expect = [
            (Target::M24, 11385usize, 244_823_040u128, 120u64),
            (Target::He, 187_425, 4_030_387_200, 20 * 60),
            (Target::A16, 16, 10_461_394_944_000, 10),
        ];
        for (t, index, order, budget) in expect {
            let start = Instant::now();
            let c = complete(&t.instance()?, opts(Strategy::Hlt), None)?;
            eq(out, &format!("{}.index", t.name()), index, c.table.index());
            eq(out, &format!("{}.image_order", t.name()), order, c.image_order);
            let s = start.elapsed().as_secs();
            out.push((format!("{}.budget", t.name()), s <= budget, format!("{s}s of {budget}s")));
            if t == Target::A16 {
                eq(out, "a16.generators_even", true, c.image.gens().iter().all(|g| g.is_even()));
                // Oracle: 16!/2 computed here, not read from the library.
                eq(out, "a16.half_factorial", (1..=16u128).product::<u128>() / 2, c.image_order);
            }
        }
        Ok(())
    });

    run.criterion(9, "M24 coset graph", 5 * 60, |out| {
        let first = complete(&Target::M24.instance_on(Side::First)?, opts(Strategy::Hlt), None)?;
        let second = complete(&Target::M24.instance_on(Side::Second)?, opts(Strategy::Hlt), None)?;
        let d = CosetGraph::build(&first.table, &second.table)?;
        let first_gens: Vec<usize> = (0..12).collect();
        let second_gens: Vec<usize> = (0..11).chain([12]).collect();
        let mut s = Suite::new("graph.m24");
        check_axioms(
            &AxiomInputs {
                graph: &d,
                first_gens: &first_gens,
                second_gens: &second_gens,
                first_bound: completion::G1_ORDER,
                second_bound: completion::G2_ORDER,
                group_order: completion::M24_ORDER,
                spot_checks: 5,
            },
            &mut s,
        )?;
        require(
            out,
            &s,
            &[
                ("delta.first_part", "11385"),
                ("delta.second_part", "26565"),
                ("delta.valency_first", "Some(7)"),
                ("delta.valency_second", "Some(3)"),
                ("a1.gamma_connected", "true"),
                ("a1.gamma_valency", "14"),
                ("a2.unique_triangle", "true"),
                ("a4.triangle_action_order", "168"),
                ("a4.two_transitive", "true"),
                ("tower.delta", "[168, 8, 8, 1, 2, 1]"),
                ("a7.tower.gamma", "[16, 2, 1]"),
            ],
        );
        Ok(())
    });

    run.criterion(10, "engine self-consistency", 10 * 60, |out| {
        let instances = [
            Target::G1.instance()?,
            Target::G2.instance()?,
            Target::B.instance()?,
            Target::M24.instance_on(Side::First)?,
            Target::M24.instance_on(Side::Second)?,
            Target::He.instance_on(Side::First)?,
            Target::He.instance_on(Side::Second)?,
            Target::A16.instance()?,
        ];
        for inst in &instances {
            let hlt = todd_coxeter(&inst.presentation, &inst.subgroup, opts(Strategy::Hlt))?;
            let felsch = todd_coxeter(&inst.presentation, &inst.subgroup, opts(Strategy::Felsch))?;
            eq(out, &format!("agree.{}", inst.name), true, hlt.data() == felsch.data());
        }

        let dir = tempfile::tempdir()?;
        let inst = Target::M24.instance()?;
        let cold = complete(&inst, opts(Strategy::Hlt), Some(dir.path()))?;
        let warm = complete(&inst, opts(Strategy::Hlt), Some(dir.path()))?;
        eq(out, "cache.cold_then_warm", (false, true), (cold.from_cache, warm.from_cache));
        let path = completion::cache_path(dir.path(), &inst);
        let mut bytes = std::fs::read(&path)?;
        let mid = bytes.len() / 3;
        bytes[mid] ^= 0x01;
        std::fs::write(&path, &bytes)?;
        let again = complete(&inst, opts(Strategy::Hlt), Some(dir.path()))?;
        eq(out, "cache.corruption_recomputed", false, again.from_cache);
        eq(out, "cache.same_table", true, again.table.data() == cold.table.data());

        let cache = dir.path().join("cli");
        let report = |name: &str| -> amalgams::Result<Vec<u8>> {
            let path = dir.path().join(name);
            let args = ["amalgam", "complete", "--target", "m24", "--no-timing", "--cache", cache.to_str().unwrap(), "--out", path.to_str().unwrap()];
            let code = main_with(args);
            if code != EXIT_OK {
                return Err(amalgams::Error::Verification(format!("exit {code}")));
            }
            Ok(std::fs::read(path)?)
        };
        eq(out, "report.byte_stable", true, report("a.jsonl")? == report("b.jsonl")?);
        Ok(())
    });

    assert!(run.failed.is_empty(), "failed: {:?}", run.failed);
}
