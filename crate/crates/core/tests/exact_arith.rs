//! Exact arithmetic against independent numeric oracles.

use anthyph_core::{isqrt, Int, QuadSurd};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRECISION: u32 = 200;

#[test]
fn isqrt_on_a_million_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..1_000_000u32 {
        let n = match i % 4 {
            0 => Int::from(rng.gen_range(0..1u64 << 20)),
            1 => Int::from(rng.gen::<u64>()),
            2 => Int::from(rng.gen::<u128>()),
            _ => (Int::from(rng.gen::<u128>()) << 100u32) + Int::from(rng.gen::<u64>()),
        };
        let s = isqrt(&n).unwrap();
        assert!(
            &s * &s <= n && n < (&s + 1u32) * (&s + 1u32),
            "isqrt({n}) = {s}"
        );
        if i % 16 == 0 {
            assert_eq!(s, n.sqrt());
        }
    }
}

/// Closed interval `[lo, hi] / 2^PRECISION`.
#[derive(Clone, Debug)]
struct Interval {
    lo: Int,
    hi: Int,
}

fn scale() -> Int {
    Int::from(1u32) << PRECISION
}

fn ceil_div(a: &Int, b: &Int) -> Int {
    a.div_ceil(b)
}

impl Interval {
    fn enclose(x: &QuadSurd) -> Self {
        // |v|·√D·2^P lies in [s, s + 1]
        let v2d = x.v() * x.v() * x.radicand();
        let s = (v2d << (2 * PRECISION)).sqrt();
        let base = x.u() << PRECISION;
        let (lo, hi) = if x.v().is_negative() {
            (&base - &s - 1u32, &base - &s)
        } else if x.v().is_zero() {
            (base.clone(), base)
        } else {
            (&base + &s, &base + &s + 1u32)
        };
        assert!(x.w().is_positive());
        Interval {
            lo: lo.div_floor(x.w()),
            hi: ceil_div(&hi, x.w()),
        }
    }

    fn add(&self, o: &Self) -> Self {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        Interval {
            lo: min.div_floor(&scale()),
            hi: ceil_div(max, &scale()),
        }
    }

    fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    fn recip(&self) -> Self {
        let s2 = scale() * scale();
        if self.lo.is_positive() {
            Interval {
                lo: s2.div_floor(&self.hi),
                hi: ceil_div(&s2, &self.lo),
            }
        } else {
            let neg = Interval {
                lo: -&self.hi,
                hi: -&self.lo,
            }
            .recip();
            Interval {
                lo: -neg.hi,
                hi: -neg.lo,
            }
        }
    }

    fn overlaps(&self, o: &Self) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }
}

fn random_surd(rng: &mut ChaCha8Rng, d: i64) -> QuadSurd {
    let u = rng.gen_range(-1_000_000..=1_000_000i64);
    let v = rng.gen_range(-1_000_000..=1_000_000i64);
    let w = rng.gen_range(1..=1_000_000i64);
    QuadSurd::new(u.into(), v.into(), w.into(), d.into()).unwrap()
}

/// Applies one random operation exactly and on intervals.
fn random_op(
    rng: &mut ChaCha8Rng,
    (x, ix): (QuadSurd, Interval),
    (y, iy): (QuadSurd, Interval),
) -> Option<(QuadSurd, Interval)> {
    Some(match rng.gen_range(0..4) {
        0 => (x.add(&y).unwrap(), ix.add(&iy)),
        1 => (x.sub(&y).unwrap(), ix.sub(&iy)),
        2 => (x.mul(&y).unwrap(), ix.mul(&iy)),
        _ => {
            if y.is_zero() || iy.contains_zero() {
                return None;
            }
            (x.div(&y).unwrap(), ix.mul(&iy.recip()))
        }
    })
}

#[test]
fn surd_arithmetic_within_interval_enclosures() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut checked = 0;
    while checked < 10_000 {
        let d = rng.gen_range(1..=1000);
        let leaves: Vec<(QuadSurd, Interval)> = (0..3)
            .map(|_| {
                let x = random_surd(&mut rng, d);
                let ix = Interval::enclose(&x);
                (x, ix)
            })
            .collect();
        let Some(inner) = random_op(&mut rng, leaves[0].clone(), leaves[1].clone()) else {
            continue;
        };
        let Some((exact, numeric)) = random_op(&mut rng, inner, leaves[2].clone()) else {
            continue;
        };
        let direct = Interval::enclose(&exact);
        assert!(
            direct.overlaps(&numeric),
            "{exact} outside enclosure from {:?}",
            leaves.iter().map(|l| l.0.to_string()).collect::<Vec<_>>()
        );
        checked += 1;
    }
}

#[test]
fn floor_matches_numeric_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    for _ in 0..10_000 {
        let d = rng.gen_range(1..=1000);
        let x = random_surd(&mut rng, d);
        let iv = Interval::enclose(&x);
        let lo = iv.lo.div_floor(&scale());
        let hi = iv.hi.div_floor(&scale());
        // |u + v√D − k·w| is far above 2^-200 unless zero
        assert_eq!(lo, hi, "enclosure of {x} straddles an integer");
        assert_eq!(x.floor(), lo, "floor of {x}");
    }
}

#[test]
fn normalization_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..10_000 {
        let u = rng.gen_range(-1000..=1000i64);
        let v = rng.gen_range(-1000..=1000i64);
        let w = rng.gen_range(-1000..=1000i64);
        let d = rng.gen_range(0..=5000i64);
        if w == 0 {
            continue;
        }
        let x = QuadSurd::new(u.into(), v.into(), w.into(), d.into()).unwrap();
        let again = QuadSurd::new(
            x.u().clone(),
            x.v().clone(),
            x.w().clone(),
            x.radicand().clone(),
        )
        .unwrap();
        assert_eq!(again, x);
        assert!(x.w().is_positive());
        if x.v().is_zero() {
            assert_eq!(*x.radicand(), Int::from(1));
        }
    }
}

#[test]
fn rational_floor_on_exact_integers() {
    for k in -50i64..=50 {
        let x = QuadSurd::new((3 * k).into(), 0.into(), 3.into(), 7.into()).unwrap();
        assert_eq!(x.floor(), Int::from(k));
        let iv = Interval::enclose(&x);
        assert_eq!(
            (iv.lo, iv.hi),
            (Int::from(k) << PRECISION, Int::from(k) << PRECISION)
        );
    }
}
