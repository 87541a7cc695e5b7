use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::dynamics::BruteForce;
use crate::formula::Formula;
use crate::reductions::Construction;
use crate::sample::{equivalent_variant, random_system, SampleConfig, SystemClass};

fn sys(entities: &[&str], reactions: &[(&[&str], &[&str], &[&str])]) -> ReactionSystem {
    let mut b = ReactionSystem::builder("t").entities(entities.iter().copied()).unwrap();
    for (r, i, p) in reactions {
        b = b.reaction(r, i, p).unwrap();
    }
    b.build().unwrap()
}

#[test]
fn constant_system_fixpoint() {
    let c = sys(&["p"], &[(&[], &[], &["p"])]);
    let v = decide(Mode::ExistsFixpoint, &c, None, None).unwrap();
    assert!(v.answer);
    assert_eq!(v.witness, Some(c.state(&["p"]).unwrap()));
}

#[test]
fn identity_has_fixge() {
    let id = sys(&["a"], &[(&["a"], &[], &["a"])]);
    let v = decide(Mode::ExistsFixge, &id, None, None).unwrap();
    assert!(v.answer);
    assert!(v.witness.is_some());
}

#[test]
fn res_eq_gadget_counterexample() {
    let psi = Formula::dnf(2, &[&[1, 2]]).unwrap();
    let out = Construction::ValidityToResEq.apply(&psi).unwrap();
    let (a, b) = (&out.system_a, out.system_b.as_ref().unwrap());
    let v = decide(Mode::ResEqCounterexample, a, Some(b), None).unwrap();
    assert!(!v.answer);
    let t = v.witness.unwrap();
    assert_ne!(a.result(&t).unwrap(), b.result(&t).unwrap());
    let brute = BruteForce::new().res_eq_counterexample(a, b).unwrap();
    assert_eq!(brute, Some(a.empty_state()));
}

#[test]
fn mode_arity_and_state_are_checked() {
    let a = sys(&["a"], &[(&["a"], &[], &["a"])]);
    let b = sys(&["b"], &[(&["b"], &[], &["b"])]);
    assert!(matches!(
        encode_problem(Mode::CommonFixpoint, &a, None, None),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        encode_problem(Mode::ExistsFixpoint, &a, Some(&a), None),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        encode_problem(Mode::GivenStateAttractor, &a, None, None),
        Err(Error::Precondition(_))
    ));
    assert_eq!(
        encode_problem(Mode::CommonFixpoint, &a, Some(&b), None).unwrap_err(),
        Error::BackgroundMismatch
    );
}

#[test]
fn layout_puts_state_groups_first() {
    let a = sys(&["a", "b"], &[(&["a"], &["b"], &["b"])]);
    let p = encode_problem(Mode::CommonAttractor, &a, Some(&a), None).unwrap();
    let names: Vec<&str> = p.state_groups().map(|g| g.name.as_str()).collect();
    assert_eq!(names, ["t", "ua", "ub"]);
    assert_eq!(p.group("t").unwrap().vars, vec![1, 2]);
    assert_eq!(p.group("ub").unwrap().vars, vec![5, 6]);
    assert_eq!(p.group("e[A,t]").unwrap().vars, vec![7]);
    assert_eq!(p.group("r[A,t]").unwrap().vars, vec![8, 9]);
    for c in p.clauses() {
        assert!(c.iter().all(|&l| l != 0 && l.unsigned_abs() as usize <= p.num_vars));
    }
}

#[test]
fn plain_formulas() {
    let empty = Formula::new(crate::formula::FormulaKind::Cnf, 0, vec![]).unwrap();
    let s = solve_formula(&empty, SolveOptions::default()).unwrap();
    assert!(s.truth);
    assert_eq!(s.model, Some(vec![]));
    let taut = Formula::cnf(1, &[&[1, -1]]).unwrap();
    assert!(solve_formula(&taut, SolveOptions::default()).unwrap().truth);
    let q = Formula::cnf(2, &[&[1, 2], &[-1, -2]]).unwrap().with_universal([1]).unwrap();
    assert!(solve_formula(&q, SolveOptions::default()).unwrap().truth);
    let q = Formula::cnf(2, &[&[1, 2], &[-2]]).unwrap().with_universal([1]).unwrap();
    let s = solve_formula(&q, SolveOptions::default()).unwrap();
    assert!(!s.truth);
    assert_eq!(s.model, Some(vec![false, false]));
}

#[test]
fn caps_are_enforced() {
    let big = Formula::cnf(41, &[&[41]]).unwrap();
    assert!(matches!(
        solve_formula(&big, SolveOptions::default()),
        Err(Error::Capability { size: 41, cap: 40, .. })
    ));
    let cfg = SampleConfig::new(SystemClass::General, 9);
    let a = random_system(&mut ChaCha8Rng::seed_from_u64(1), &cfg);
    let p = encode_problem(Mode::SharedAttractors, &a, Some(&a), None).unwrap();
    assert!(matches!(solve_brute(&p), Err(Error::Capability { size: 27, cap: 24, .. })));
}

#[test]
fn external_unsat_maps_to_yes_for_counterexample_modes() {
    let a = sys(&["a"], &[(&["a"], &[], &["a"])]);
    let p = encode_problem(Mode::ResEqCounterexample, &a, Some(&a), None).unwrap();
    let sol = solve_external(&p, "echo 's UNSATISFIABLE' #").unwrap();
    assert!(p.verdict(&sol, &a, Some(&a)).unwrap().answer);
}

#[test]
fn external_model_must_cover_state_vars() {
    let a = sys(&["a"], &[(&[], &[], &["a"])]);
    let p = encode_problem(Mode::ExistsFixpoint, &a, None, None).unwrap();
    assert!(matches!(
        solve_external(&p, "echo 's SATISFIABLE' #"),
        Err(Error::Solver { .. })
    ));
    let sol = solve_external(&p, "printf 's SATISFIABLE\\nv 1 2 3 0\\n' #").unwrap();
    let v = p.verdict(&sol, &a, None).unwrap();
    assert_eq!(v.witness, Some(a.full_state()));
}

#[test]
fn bad_witness_fails_recheck() {
    let a = sys(&["a"], &[(&[], &["a"], &["a"])]);
    let p = encode_problem(Mode::ExistsFixpoint, &a, None, None).unwrap();
    let sol = Solution {
        truth: true,
        model: Some(vec![true; p.num_vars]),
    };
    assert!(matches!(p.verdict(&sol, &a, None), Err(Error::Recheck(_))));
}

fn random_pair(rng: &mut ChaCha8Rng, w: usize) -> (ReactionSystem, ReactionSystem) {
    let class = [SystemClass::General, SystemClass::Reactantless, SystemClass::Inhibitorless][rng.gen_range(0..3)];
    let cfg = SampleConfig::new(class, w).with_max_reactions(rng.gen_range(1..=2 * w));
    let a = random_system(rng, &cfg);
    let b = match rng.gen_range(0..3) {
        0 => equivalent_variant(rng, &a),
        1 => {
            let keep: Vec<bool> = (0..a.reactions().len()).map(|_| rng.gen_bool(0.8)).collect();
            let mut k = keep.into_iter();
            let kept: Vec<_> = a.reactions().iter().filter(|_| k.next().unwrap()).cloned().collect();
            ReactionSystem::new("b", a.entities().clone(), kept).unwrap()
        }
        _ => random_system(rng, &cfg),
    };
    (a, b)
}

#[test]
fn modes_agree_with_brute_force_on_small_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let brute = BruteForce::new();
    for mode in Mode::ALL {
        for _ in 0..40 {
            let w = rng.gen_range(1..=5);
            let (a, b) = random_pair(&mut rng, w);
            let b = mode.is_pair().then_some(&b);
            let given = (mode == Mode::GivenStateAttractor).then(|| State::from_bits(w, rng.gen_range(0..1 << w)));
            let want = brute.decide(mode.problem(), &a, b, given.as_ref()).unwrap();
            for att in [AttractorEncoding::Direct, AttractorEncoding::Reach] {
                let got = decide_with(mode, &a, b, given.as_ref(), att, SolveOptions::default()).unwrap();
                assert_eq!(got.answer, want.answer, "{mode} {att:?}\n{a:?}\n{b:?}");
            }
        }
    }
}
