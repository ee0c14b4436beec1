//! Integer quadratic relations between two magnitudes and the anthyphairetic
//! substitution `a = k·b + c` acting on them.
//!
//! A relation is stored as positive coefficients `A, B, C` plus a [`FormKind`]
//! fixing the shape of the equation and which of its roots is tracked:
//!
//! | kind           | relation                 | tracked root          |
//! |----------------|--------------------------|-----------------------|
//! | `Excess`       | `A·a² = B·a·b + C·b²`    | `(B + √disc) / 2A`    |
//! | `Defect`       | `A·a² + C·b² = B·a·b`    | `(B + √disc) / 2A`    |
//! | `DefectLesser` | `A·a² + C·b² = B·a·b`    | `(B − √disc) / 2A`    |
//! | `Mixed`        | `A·a² + B·a·b = C·b²`    | `(−B + √disc) / 2A`   |

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{floor_div, is_perfect_square, isqrt, Int, Rational};
use crate::error::{Error, Result};
use crate::surd::QuadSurd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Excess,
    Defect,
    /// Defect relation tracking its smaller root; produced mid-reduction.
    DefectLesser,
    /// `A·a² + B·a·b = C·b²`; produced mid-reduction.
    Mixed,
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::Excess => "excess",
            FormKind::Defect => "defect",
            FormKind::DefectLesser => "defect_lesser",
            FormKind::Mixed => "mixed",
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    pub kind: FormKind,
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {}, {})", self.kind, self.a, self.b, self.c)
    }
}

impl QuadraticForm {
    pub fn new(kind: FormKind, a: Int, b: Int, c: Int) -> Result<Self> {
        if !a.is_positive() || !c.is_positive() {
            return Err(Error::domain(
                "A > 0 and C > 0",
                format!("coefficients ({a}, {b}, {c})"),
            ));
        }
        let b_ok = match kind {
            FormKind::Excess => !b.is_negative(),
            _ => b.is_positive(),
        };
        if !b_ok {
            let pre = if kind == FormKind::Excess {
                "B >= 0"
            } else {
                "B > 0"
            };
            return Err(Error::domain(pre, format!("{kind} form with B = {b}")));
        }
        let form = QuadraticForm { kind, a, b, c };
        if matches!(kind, FormKind::Defect | FormKind::DefectLesser) && !form.disc().is_positive() {
            return Err(Error::domain(
                "B² − 4AC > 0",
                format!("defect form has discriminant {}", form.disc()),
            ));
        }
        Ok(form)
    }

    pub fn excess(a: impl Into<Int>, b: impl Into<Int>, c: impl Into<Int>) -> Result<Self> {
        Self::new(FormKind::Excess, a.into(), b.into(), c.into())
    }

    pub fn defect(a: impl Into<Int>, b: impl Into<Int>, c: impl Into<Int>) -> Result<Self> {
        Self::new(FormKind::Defect, a.into(), b.into(), c.into())
    }

    pub fn coefficients(&self) -> (&Int, &Int, &Int) {
        (&self.a, &self.b, &self.c)
    }

    pub fn disc(&self) -> Int {
        let b2 = &self.b * &self.b;
        let ac4 = Int::from(4u32) * &self.a * &self.c;
        match self.kind {
            FormKind::Excess | FormKind::Mixed => b2 + ac4,
            FormKind::Defect | FormKind::DefectLesser => b2 - ac4,
        }
    }

    pub fn has_square_disc(&self) -> bool {
        is_perfect_square(&self.disc())
    }

    /// The tracked root as an exact value (rational when the discriminant is a square).
    pub fn designated_root(&self) -> QuadSurd {
        let two_a = Int::from(2u32) * &self.a;
        let disc = self.disc();
        let (num_u, sqrt_sign) = match self.kind {
            FormKind::Excess | FormKind::Defect => (self.b.clone(), Int::one()),
            FormKind::DefectLesser => (self.b.clone(), -Int::one()),
            FormKind::Mixed => (-&self.b, Int::one()),
        };
        QuadSurd::new(num_u, sqrt_sign, two_a, disc).expect("2A > 0 and disc > 0")
    }

    /// Whether the tracked root exceeds 1, decided on integer coefficients.
    pub fn root_exceeds_one(&self) -> bool {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        match self.kind {
            FormKind::Excess => a < &(b + c),
            FormKind::Mixed => &(a + b) < c,
            FormKind::Defect | FormKind::DefectLesser => {
                // value of the relation polynomial at 1, and its vertex B/2A
                let at_one = a - b + c;
                let vertex_above = b > &(Int::from(2u32) * a);
                match self.kind {
                    FormKind::Defect => {
                        at_one.is_negative() || (at_one.is_positive() && vertex_above)
                    }
                    _ => at_one.is_positive() && vertex_above,
                }
            }
        }
    }

    fn require_expandable(&self) -> Result<()> {
        if self.root_exceeds_one() {
            Ok(())
        } else {
            let pre = if self.kind == FormKind::Excess {
                "A < B + C (root > 1)"
            } else {
                "designated root > 1"
            };
            Err(Error::domain(pre, format!("{self}")))
        }
    }

    fn require_irrational(&self) -> Result<Int> {
        let disc = self.disc();
        if is_perfect_square(&disc) {
            return Err(Error::SquareDiscriminant(disc));
        }
        Ok(disc)
    }

    /// `⌊root⌋` from integer data only, for an irrational root.
    fn root_floor(&self, j: &Int) -> Int {
        let two_a = Int::from(2u32) * &self.a;
        match self.kind {
            FormKind::Excess | FormKind::Defect => floor_div(&(&self.b + j), &two_a),
            FormKind::DefectLesser => floor_div(&(&self.b - j - 1), &two_a),
            FormKind::Mixed => floor_div(&(j - &self.b), &two_a),
        }
    }
}

/// One anthyphairetic step `a = k·b + c` and the relation between `b` and `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub quotient: Int,
    pub next: QuadraticForm,
}

/// Step of an excess relation via the application of areas in excess:
/// `k = ⌊(B + J) / 2A⌋` with `J = ⌊√disc⌋`, then
/// `A₁ = B·k + C − A·k²`, `B₁ = 2·A·k − B`, `C₁ = A`.
pub fn excess_step(form: &QuadraticForm) -> Result<Step> {
    if form.kind != FormKind::Excess {
        return Err(Error::domain("kind = excess", format!("{form}")));
    }
    form.require_expandable()?;
    let disc = form.require_irrational()?;
    let j = isqrt(&disc)?;
    let (a, b, c) = form.coefficients();
    let k = form.root_floor(&j);
    let two_ak = Int::from(2u32) * a * &k;
    // B < 2Ak <= J + B and A·k² < B·k + C
    if !(b < &two_ak && two_ak <= &j + b) {
        return Err(Error::Invariant(format!(
            "excess step on {form}: B < 2Ak <= J + B fails for k = {k}"
        )));
    }
    let a1 = b * &k + c - a * &k * &k;
    let b1 = &two_ak - b;
    if !a1.is_positive() || !b1.is_positive() {
        return Err(Error::Invariant(format!(
            "excess step on {form}: successor ({a1}, {b1}, {a}) not positive"
        )));
    }
    Ok(Step {
        quotient: k,
        next: QuadraticForm {
            kind: FormKind::Excess,
            a: a1,
            b: b1,
            c: a.clone(),
        },
    })
}

/// Sign pattern of the substituted defect relation
/// `(B·k − A·k² − C)·b² = (2·A·k − B)·b·c + A·c²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefectCase {
    /// `B·k > A·k² + C`, `2·A·k > B`: excess.
    One,
    /// `B·k > A·k² + C`, `2·A·k < B`: `A₁·b² + B₁·b·c = C₁·c²`.
    Two,
    /// `B·k > A·k² + C`, `2·A·k = B`: `A₁·b² = C₁·c²`, an excess with `B₁ = 0`.
    Three,
    /// `B·k < A·k² + C`, `2·A·k < B`: defect again, with smaller `B`.
    Four,
    /// `B·k < A·k² + C`, `2·A·k >= B`: cannot occur.
    Five,
}

impl DefectCase {
    pub fn number(self) -> u8 {
        match self {
            DefectCase::One => 1,
            DefectCase::Two => 2,
            DefectCase::Three => 3,
            DefectCase::Four => 4,
            DefectCase::Five => 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectStep {
    pub quotient: Int,
    pub case: DefectCase,
    pub next: QuadraticForm,
}

/// Step of a defect relation via the application of areas in defect, with the
/// successor chosen by the five-case sign analysis.
pub fn defect_step(form: &QuadraticForm) -> Result<DefectStep> {
    if !matches!(form.kind, FormKind::Defect | FormKind::DefectLesser) {
        return Err(Error::domain("kind = defect", format!("{form}")));
    }
    form.require_expandable()?;
    let disc = form.require_irrational()?;
    let j = isqrt(&disc)?;
    let (a, b, c) = form.coefficients();
    let k = form.root_floor(&j);
    let p = b * &k - a * &k * &k - c;
    let q = Int::from(2u32) * a * &k - b;
    if p.is_zero() {
        // equality forces b, c commensurable
        return Err(Error::Invariant(format!(
            "defect step on {form}: B·k = A·k² + C with irrational root"
        )));
    }
    let case = match (p.is_positive(), q.sign()) {
        (true, num_bigint::Sign::Plus) => DefectCase::One,
        (true, num_bigint::Sign::Minus) => DefectCase::Two,
        (true, num_bigint::Sign::NoSign) => DefectCase::Three,
        (false, num_bigint::Sign::Minus) => DefectCase::Four,
        (false, _) => DefectCase::Five,
    };
    let next = match case {
        DefectCase::One | DefectCase::Three => QuadraticForm {
            kind: FormKind::Excess,
            a: p,
            b: q,
            c: a.clone(),
        },
        DefectCase::Two => QuadraticForm {
            kind: FormKind::Mixed,
            a: p,
            b: -q,
            c: a.clone(),
        },
        DefectCase::Four => QuadraticForm {
            // c/b and its conjugate are both positive; the tracked one swaps rank
            kind: if form.kind == FormKind::Defect {
                FormKind::DefectLesser
            } else {
                FormKind::Defect
            },
            a: -p,
            b: -q,
            c: a.clone(),
        },
        DefectCase::Five => {
            return Err(Error::Invariant(format!(
                "defect step on {form}: impossible case 5 reached (k = {k})"
            )))
        }
    };
    if form.kind == FormKind::DefectLesser && case != DefectCase::Four {
        return Err(Error::Invariant(format!(
            "defect step on lesser root {form}: case {} reached",
            case.number()
        )));
    }
    Ok(DefectStep {
        quotient: k,
        case,
        next,
    })
}

/// Step of `A·a² + B·a·b = C·b²`, which always lands in excess:
/// `A₂ = C − A·m² − B·m`, `B₂ = B + 2·A·m`, `C₂ = A`.
pub fn mixed_step(form: &QuadraticForm) -> Result<Step> {
    if form.kind != FormKind::Mixed {
        return Err(Error::domain("kind = mixed", format!("{form}")));
    }
    form.require_expandable()?;
    let disc = form.require_irrational()?;
    let j = isqrt(&disc)?;
    let (a, b, c) = form.coefficients();
    let m = form.root_floor(&j);
    let a2 = c - a * &m * &m - b * &m;
    let b2 = b + Int::from(2u32) * a * &m;
    if !a2.is_positive() {
        return Err(Error::Invariant(format!(
            "mixed step on {form}: A₂ = {a2} not positive"
        )));
    }
    Ok(Step {
        quotient: m,
        next: QuadraticForm {
            kind: FormKind::Excess,
            a: a2,
            b: b2,
            c: a.clone(),
        },
    })
}

/// One step of any kind.
pub fn step(form: &QuadraticForm) -> Result<Step> {
    match form.kind {
        FormKind::Excess => excess_step(form),
        FormKind::Mixed => mixed_step(form),
        FormKind::Defect | FormKind::DefectLesser => defect_step(form).map(|s| Step {
            quotient: s.quotient,
            next: s.next,
        }),
    }
}

/// Either the rational value itself or the primitive relation tracking it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalForm {
    Rational(Rational),
    Form(QuadraticForm),
}

/// The primitive integer relation whose tracked root is exactly `x > 1`.
pub fn minimal_form(x: &QuadSurd) -> Result<MinimalForm> {
    if x.sub(&QuadSurd::from_int(1))?.sign() <= 0 {
        return Err(Error::domain("x > 1", format!("minimal_form of {x}")));
    }
    if let Some(r) = x.to_rational() {
        return Ok(MinimalForm::Rational(r));
    }
    // (w·x − u)² = v²·D
    let (u, v, w, d) = (x.u(), x.v(), x.w(), x.radicand());
    let mut alpha = w * w;
    let mut beta = -(Int::from(2u32) * u * w);
    let mut gamma = u * u - v * v * d;
    let g = alpha.gcd(&beta).gcd(&gamma);
    alpha /= &g;
    beta /= &g;
    gamma /= &g;
    let (kind, b, c) = if gamma.is_negative() {
        if beta.is_positive() {
            (FormKind::Mixed, beta, -gamma)
        } else {
            (FormKind::Excess, -beta, -gamma)
        }
    } else if gamma.is_positive() && beta.is_negative() {
        let kind = if v.is_positive() {
            FormKind::Defect
        } else {
            FormKind::DefectLesser
        };
        (kind, -beta, gamma)
    } else {
        return Err(Error::Invariant(format!(
            "no positive-root relation for {x}: ({alpha}, {beta}, {gamma})"
        )));
    };
    let form = QuadraticForm {
        kind,
        a: alpha,
        b,
        c,
    };
    if form.designated_root() != *x {
        return Err(Error::Invariant(format!(
            "relation {form} does not track {x}"
        )));
    }
    Ok(MinimalForm::Form(form))
}

/// Number of excess triples `(A, B, C)`, all at least 1, with `B² + 4AC = disc`.
///
/// Every excess state after the first step lies in this set, which bounds the
/// number of steps before a state repeats.
pub fn state_space_size(disc: &Int) -> Result<u64> {
    if !disc.is_positive() || is_perfect_square(disc) {
        return Err(Error::domain(
            "disc > 0 and non-square",
            format!("state_space_size({disc})"),
        ));
    }
    let disc = disc.to_u64().ok_or_else(|| {
        Error::domain(
            "disc < 2^64",
            format!("discriminant {disc} too large to enumerate"),
        )
    })?;
    let mut count = 0u64;
    let mut b = if disc % 2 == 0 { 2u64 } else { 1u64 };
    while b * b < disc {
        if (disc - b * b) % 4 == 0 {
            count += divisor_count((disc - b * b) / 4);
        }
        b += 2;
    }
    Ok(count)
}

fn divisor_count(mut n: u64) -> u64 {
    let mut count = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        count *= e + 1;
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        count *= 2;
    }
    count
}

/// Brute enumeration of the excess triples counted by [`state_space_size`].
pub fn excess_states(disc: u64) -> HashSet<(u64, u64, u64)> {
    let mut out = HashSet::new();
    let mut b = 1u64;
    while b * b < disc {
        if (disc - b * b).is_multiple_of(4) {
            let ac = (disc - b * b) / 4;
            for a in 1..=ac {
                if ac.is_multiple_of(a) {
                    out.insert((a, b, ac / a));
                }
            }
        }
        b += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(a: i64, b: i64, c: i64) -> QuadraticForm {
        QuadraticForm::excess(a, b, c).unwrap()
    }

    fn de(a: i64, b: i64, c: i64) -> QuadraticForm {
        QuadraticForm::defect(a, b, c).unwrap()
    }

    #[test]
    fn excess_step_examples() {
        let s = excess_step(&ex(1, 0, 2)).unwrap();
        assert_eq!((s.quotient, s.next), (1.into(), ex(1, 2, 1)));
        let s = excess_step(&ex(1, 2, 1)).unwrap();
        assert_eq!((s.quotient, s.next), (2.into(), ex(1, 2, 1)));
        let s = excess_step(&ex(1, 0, 3)).unwrap();
        assert_eq!((s.quotient, s.next), (1.into(), ex(2, 2, 1)));
    }

    #[test]
    fn excess_step_errors() {
        assert_eq!(
            excess_step(&ex(1, 0, 4)),
            Err(Error::SquareDiscriminant(16.into()))
        );
        let err = excess_step(&ex(3, 1, 1)).unwrap_err();
        assert_eq!(err.precondition(), Some("A < B + C (root > 1)"));
        assert!(excess_step(&de(1, 3, 1)).is_err());
    }

    #[test]
    fn defect_step_examples() {
        let s = defect_step(&de(1, 3, 1)).unwrap();
        assert_eq!(s.quotient, 2.into());
        assert_eq!(s.case, DefectCase::One);
        assert_eq!(s.next, ex(1, 1, 1));
        let s = defect_step(&de(1, 4, 1)).unwrap();
        assert_eq!(s.quotient, 3.into());
        assert_eq!(s.next, ex(2, 2, 1));
    }

    #[test]
    fn defect_case_four_tracks_lesser_root() {
        // roots (35 ± √5)/10 ≈ 3.276, 3.724
        let s = defect_step(&de(5, 35, 61)).unwrap();
        assert_eq!(s.quotient, 3.into());
        assert_eq!(s.case, DefectCase::Four);
        assert_eq!(s.next.kind, FormKind::DefectLesser);
        assert_eq!(
            (s.next.a.clone(), s.next.b.clone(), s.next.c.clone()),
            (1.into(), 5.into(), 5.into())
        );
        // 1/(x − 3) for the larger root x
        let x = de(5, 35, 61).designated_root();
        let y = x.sub(&QuadSurd::from_int(3)).unwrap().recip().unwrap();
        assert_eq!(s.next.designated_root(), y);
    }

    #[test]
    fn defect_case_two_and_mixed_step() {
        // first small relation hitting 2Ak < B with B·k > A·k² + C
        let mut found = false;
        'outer: for a in 1..20i64 {
            for b in 1..60i64 {
                for c in 1..60i64 {
                    let Ok(f) = QuadraticForm::defect(a, b, c) else {
                        continue;
                    };
                    if f.has_square_disc() || !f.root_exceeds_one() {
                        continue;
                    }
                    let s = defect_step(&f).unwrap();
                    if s.case == DefectCase::Two {
                        assert_eq!(s.next.kind, FormKind::Mixed);
                        let x = f.designated_root();
                        let y = x
                            .sub(&QuadSurd::from_int(s.quotient.clone()))
                            .unwrap()
                            .recip()
                            .unwrap();
                        assert_eq!(s.next.designated_root(), y);
                        let m = mixed_step(&s.next).unwrap();
                        assert_eq!(m.next.kind, FormKind::Excess);
                        assert_eq!(m.next.disc(), f.disc());
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn minimal_form_examples() {
        let s = |u: i64, v: i64, w: i64, d: i64| {
            QuadSurd::new(u.into(), v.into(), w.into(), d.into()).unwrap()
        };
        assert_eq!(
            minimal_form(&s(0, 1, 1, 2)).unwrap(),
            MinimalForm::Form(ex(1, 0, 2))
        );
        assert_eq!(
            minimal_form(&s(1, 1, 2, 5)).unwrap(),
            MinimalForm::Form(ex(1, 1, 1))
        );
        assert_eq!(
            minimal_form(&s(3, 1, 2, 5)).unwrap(),
            MinimalForm::Form(de(1, 3, 1))
        );
        assert_eq!(
            minimal_form(&s(7, 0, 2, 1)).unwrap(),
            MinimalForm::Rational(Rational::new(7.into(), 2.into()))
        );
        assert!(minimal_form(&s(1, 0, 1, 1)).is_err());
        assert!(minimal_form(&s(-1, 1, 1, 2)).is_err());
        // smaller root of a defect relation, and a mixed relation
        let MinimalForm::Form(f) = minimal_form(&s(35, -1, 10, 5)).unwrap() else {
            panic!()
        };
        assert_eq!(
            f,
            QuadraticForm::new(FormKind::DefectLesser, 5.into(), 35.into(), 61.into()).unwrap()
        );
        let MinimalForm::Form(f) = minimal_form(&s(-1, 1, 1, 7)).unwrap() else {
            panic!()
        };
        assert_eq!(f.kind, FormKind::Mixed);
    }

    #[test]
    fn state_space_examples() {
        assert_eq!(state_space_size(&8.into()).unwrap(), 1);
        assert_eq!(state_space_size(&5.into()).unwrap(), 1);
        assert_eq!(state_space_size(&12.into()).unwrap(), 2);
        assert!(state_space_size(&16.into()).is_err());
        for disc in 2..400u64 {
            if is_perfect_square(&Int::from(disc)) {
                continue;
            }
            assert_eq!(
                state_space_size(&disc.into()).unwrap(),
                excess_states(disc).len() as u64,
                "disc {disc}"
            );
        }
    }

    #[test]
    fn root_exceeds_one_matches_exact_comparison() {
        for kind in [
            FormKind::Excess,
            FormKind::Defect,
            FormKind::DefectLesser,
            FormKind::Mixed,
        ] {
            for a in 1..8i64 {
                for b in 0..12i64 {
                    for c in 1..8i64 {
                        let Ok(f) = QuadraticForm::new(kind, a.into(), b.into(), c.into()) else {
                            continue;
                        };
                        if f.has_square_disc() {
                            continue;
                        }
                        let root = f.designated_root();
                        let exact = root.sub(&QuadSurd::from_int(1)).unwrap().sign() > 0;
                        assert_eq!(f.root_exceeds_one(), exact, "{f}");
                    }
                }
            }
        }
    }
}
