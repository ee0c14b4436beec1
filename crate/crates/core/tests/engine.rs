use anthyph_core::form::excess_states;
use anthyph_core::{
    convergents, defect_step, euclid_cf, excess_step, period_to_form, remainder,
    run_anthyphairesis, state_space_size, surd_cf, ContinuedFraction, DefectCase, FormKind, Int,
    QuadSurd, QuadraticForm, DEFAULT_MAX_STEPS,
};
use num_traits::Signed;
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&k| Int::from(k)).collect()
}

fn sqrt_cf(n: i64) -> ContinuedFraction {
    let f = QuadraticForm::excess(1, 0, n).unwrap();
    run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap().0
}

#[test]
fn theodorus_goldens() {
    assert_eq!(
        sqrt_cf(2),
        ContinuedFraction::periodic(ints(&[1]), ints(&[2]))
    );
    assert_eq!(
        sqrt_cf(3),
        ContinuedFraction::periodic(ints(&[1]), ints(&[1, 2]))
    );
    assert_eq!(
        sqrt_cf(5),
        ContinuedFraction::periodic(ints(&[2]), ints(&[4]))
    );
    assert_eq!(
        sqrt_cf(17),
        ContinuedFraction::periodic(ints(&[4]), ints(&[8]))
    );
    assert_eq!(sqrt_cf(16), ContinuedFraction::finite(ints(&[4])));
}

#[test]
fn theodorus_range_matches_oracle() {
    for n in 2..=17i64 {
        let engine = sqrt_cf(n);
        let root = QuadSurd::new(0.into(), 1.into(), 1.into(), n.into()).unwrap();
        let oracle = surd_cf(&root, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(engine.take(50), oracle.take(50), "√{n}");
        assert_eq!(engine, oracle, "√{n}");
    }
}

#[test]
fn sqrt2_state_trace() {
    let f = QuadraticForm::excess(1, 0, 2).unwrap();
    let (_, trace) = run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap();
    let states: Vec<(Int, Int, Int)> = trace
        .states
        .iter()
        .map(|s| (s.a.clone(), s.b.clone(), s.c.clone()))
        .collect();
    let t = |a: i64, b: i64, c: i64| (Int::from(a), Int::from(b), Int::from(c));
    assert_eq!(states, vec![t(1, 0, 2), t(1, 2, 1), t(1, 2, 1)]);
    assert_eq!(trace.repeat_at, Some((1, 2)));
}

#[test]
fn golden_ratio_square_through_defect() {
    let f = QuadraticForm::defect(1, 3, 1).unwrap();
    let s = defect_step(&f).unwrap();
    assert_eq!(s.quotient, Int::from(2));
    assert_eq!(s.case, DefectCase::One);
    assert_eq!(s.next, QuadraticForm::excess(1, 1, 1).unwrap());
    let (cf, _) = run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap();
    assert_eq!(cf, ContinuedFraction::periodic(ints(&[2]), ints(&[1])));
}

#[test]
fn every_short_period_round_trips() {
    let mut periods: Vec<Vec<i64>> = Vec::new();
    for len in 1..=3u32 {
        for code in 0..4i64.pow(len) {
            periods.push((0..len).map(|i| code / 4i64.pow(i) % 4 + 1).collect());
        }
    }
    assert_eq!(periods.len(), 84);
    for p in periods {
        let period = ints(&p);
        let f = period_to_form(&period).unwrap();
        let (cf, _) = run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap();
        assert!(cf.is_purely_periodic(), "{p:?} via {f}: {cf}");
        assert_eq!(cf, ContinuedFraction::periodic(vec![], period), "{p:?}");
    }
}

#[test]
fn state_space_matches_enumeration() {
    for disc in [5u64, 8, 12, 13, 20, 21, 28, 44, 61, 97, 244, 1000, 4093] {
        let brute = excess_states(disc)
            .into_iter()
            .filter(|&(_, b, _)| b >= 1)
            .count() as u64;
        assert_eq!(
            state_space_size(&Int::from(disc)).unwrap(),
            brute,
            "disc {disc}"
        );
    }
}

#[test]
fn pell_for_sqrt2() {
    let cf = sqrt_cf(2);
    let sd = convergents(&cf.take(20), 20).unwrap();
    for n in 1..=20 {
        let lhs = &sd.q[n] * &sd.q[n] - Int::from(2) * &sd.p[n] * &sd.p[n];
        assert_eq!(
            lhs,
            if n % 2 == 0 {
                Int::from(1)
            } else {
                Int::from(-1)
            }
        );
    }
    assert_eq!(
        (sd.p[3].clone(), sd.q[3].clone()),
        (Int::from(5), Int::from(7))
    );
}

fn excess_strategy(max_disc: i64) -> impl Strategy<Value = QuadraticForm> {
    let side = (max_disc as f64).sqrt() as i64;
    (1..=side / 2, 0..side, 1..=side / 2).prop_filter_map(
        "root > 1, non-square disc <= bound",
        move |(a, b, c)| {
            let f = QuadraticForm::excess(a, b, c).ok()?;
            (a < b + c && b * b + 4 * a * c <= max_disc && !f.has_square_disc()).then_some(f)
        },
    )
}

fn defect_strategy() -> impl Strategy<Value = QuadraticForm> {
    (1..=60i64, 1..=240i64, 1..=60i64).prop_filter_map("valid defect form", |(a, b, c)| {
        let f = QuadraticForm::defect(a, b, c).ok()?;
        (!f.has_square_disc() && f.root_exceeds_one()).then_some(f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn excess_steps_keep_disc_and_positivity(f in excess_strategy(1_000_000)) {
        let disc = f.disc();
        let mut g = f;
        for _ in 0..100 {
            let s = excess_step(&g).unwrap();
            prop_assert!(s.quotient.is_positive());
            prop_assert_eq!(s.next.disc(), disc.clone());
            prop_assert!(s.next.a.is_positive() && s.next.b.is_positive() && s.next.c.is_positive());
            g = s.next;
        }
    }

    #[test]
    fn recurrence_within_state_space(f in excess_strategy(1_000_000)) {
        let (_, trace) = run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap();
        let (_, second) = trace.repeat_at.unwrap();
        prop_assert!(second as u64 <= state_space_size(&f.disc()).unwrap() + 1);
    }

    #[test]
    fn engine_agrees_with_generic_loop(f in prop_oneof![excess_strategy(100_000), defect_strategy()]) {
        let (engine, trace) = run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap();
        let oracle = surd_cf(&f.designated_root(), DEFAULT_MAX_STEPS).unwrap();
        prop_assert_eq!(engine.take(50), oracle.take(50));
        prop_assert_eq!(&engine, &oracle);
        prop_assert!(trace.quotients.iter().all(Signed::is_positive));
    }

    #[test]
    fn defect_forms_reach_excess(f in defect_strategy()) {
        let disc = f.disc();
        let (_, trace) = run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap();
        prop_assert!(trace.states.iter().any(|s| s.kind == FormKind::Excess));
        prop_assert!(trace.states.iter().all(|s| s.disc() == disc));
    }

    #[test]
    fn convergent_determinant(ks in prop::collection::vec(1..=50i64, 1..40)) {
        let ks = ints(&ks);
        let sd = convergents(&ks, ks.len()).unwrap();
        for n in 1..=ks.len() {
            let expected = if n % 2 == 0 { Int::from(1) } else { Int::from(-1) };
            prop_assert_eq!(sd.determinant(n), expected);
        }
    }

    #[test]
    fn remainders_follow_subtraction(f in excess_strategy(10_000)) {
        let (cf, _) = run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap();
        let ks = cf.take(12);
        let sd = convergents(&ks, 12).unwrap();
        let (a, b) = (f.designated_root(), QuadSurd::from_int(1));
        let mut prev2 = a.clone();
        let mut prev = remainder(0, &a, &b, &sd).unwrap();
        prop_assert_eq!(&prev, &b);
        for n in 1..=12 {
            let e = remainder(n, &a, &b, &sd).unwrap();
            let k = QuadSurd::from_int(ks[n - 1].clone());
            prop_assert_eq!(&e, &prev2.sub(&k.mul(&prev).unwrap()).unwrap());
            prop_assert!(e.is_positive() && e.cmp_exact(&prev).unwrap().is_lt());
            prev2 = prev;
            prev = e;
        }
    }

    #[test]
    fn square_disc_falls_back_to_euclid(q in 1..=40i64, extra in 1..=80i64, s in 1..=40i64, t in 1..=40i64) {
        // (q·x − p)(s·x + t) with root p/q > 1
        let p = q + extra;
        prop_assume!(p * s >= q * t);
        let f = QuadraticForm::excess(q * s, p * s - q * t, p * t).unwrap();
        prop_assert!(f.has_square_disc());
        let (cf, _) = run_anthyphairesis(&f, DEFAULT_MAX_STEPS).unwrap();
        prop_assert!(cf.period.is_none());
        prop_assert_eq!(cf, euclid_cf(&p.into(), &q.into()).unwrap());
    }
}
