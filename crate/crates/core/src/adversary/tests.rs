use super::fixtures::{composite_fixtures, m1, m2, core_fixtures};
use super::*;
use crate::polymat::PolyMat;
use crate::protocols::{run, Params};
use crate::transcript::{Mode, Reason};

fn p() -> Modulus {
    Modulus::default()
}

#[test]
fn fixtures_are_false() {
    for f in core_fixtures(p()).into_iter().chain(composite_fixtures(p())) {
        f.statement.validate(p()).unwrap();
        assert!(!holds(&f.statement), "{} ({}) is true", f.name, f.statement.id());
    }
}

#[test]
fn cheater_refuses_true_instances() {
    let st = Statement::Rsm { a: m1(p()), v: vec![Poly::zero(p()), Poly::from_i64s(p(), &[0, 1])] };
    assert!(holds(&st));
    let s = SampleSet::new(64, p()).unwrap();
    assert!(matches!(Cheater::against(&st, p(), s, 0), Err(CheatError::InstanceActuallyTrue(_))));
    assert!(matches!(
        run_soundness_experiment(&st, "true", p(), 64, 100, 0),
        Err(CheatError::InstanceActuallyTrue(_))
    ));
}

#[test]
fn cheater_on_true_instance_behaves_honestly() {
    let st = Statement::SatBasis { a: m1(p()), b: PolyMat::identity(p(), 2) };
    let prm = Params::new(p(), 1 << 20, Mode::FiatShamir, false).unwrap();
    let out = run(&st, prm, &mut Cheater::new(p(), prm.sample, 3)).unwrap();
    assert!(out.verdict.accepted);
}

#[test]
fn cheater_messages_always_reach_a_verdict() {
    for f in core_fixtures(p()).into_iter().chain(composite_fixtures(p())) {
        let prm = Params::new(p(), 64, Mode::Interactive { seed: 1 }, false).unwrap();
        let out = run(&f.statement, prm, &mut Cheater::new(p(), prm.sample, 1));
        assert!(out.is_ok(), "{}: {:?}", f.name, out.err());
    }
}

#[test]
fn short_experiments_stay_within_bounds() {
    for f in core_fixtures(p()) {
        let r = run_soundness_experiment(&f.statement, f.name, p(), 64, 300, 17).unwrap();
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn singularity_cheater_wins_on_roots_of_the_determinant() {
    let f = &core_fixtures(p())[0];
    let r = run_soundness_experiment(&f.statement, f.name, p(), 32, 2000, 5).unwrap();
    // Four roots among 32 points: the rate sits near 1/8.
    assert!(r.rate > 0.08 && r.rate < 0.17, "{r:?}");
}

#[test]
fn coprime_cheater_is_near_tight() {
    let f = core_fixtures(p()).into_iter().find(|f| f.statement.id() == "coprime").unwrap();
    let r = run_soundness_experiment(&f.statement, f.name, p(), 32, 2000, 9).unwrap();
    // Bound 3/32; the interpolation wins on 2 of 32 points.
    assert!(r.pass && r.rate > 0.03, "{r:?}");
}

#[test]
fn nested_rejection_from_a_persistent_prover() {
    let st = Statement::Saturated { a: m2(p()) };
    let prm = Params::new(p(), p().value(), Mode::FiatShamir, true).unwrap();
    let out = run(&st, prm, &mut Cheater::new(p(), prm.sample, 2)).unwrap();
    let mut ids = Vec::new();
    let mut r = &out.verdict.reason;
    while let Reason::SubprotocolRejected { id, cause } = r {
        ids.push(id.as_str());
        r = cause;
    }
    assert_eq!(&ids[..2], &["rs_subset", "rsm"], "{}", out.verdict);
    assert_ne!(r, &Reason::Ok);
}

#[test]
fn report_threshold_formula() {
    let b = crate::transcript::Bound { numerator: 1, denominator: 4 };
    let r = SoundnessReport::new("x", "y", 300, 90, b);
    let t = 0.25 + 3.0 * (0.25f64 * 0.75 / 300.0).sqrt();
    assert!((r.threshold - t).abs() < 1e-12);
    assert_eq!(r.pass, 0.3 <= t);
}
