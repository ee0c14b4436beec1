//! Book-II area identities and the applications of areas that produce the
//! integer step formulas. Constructions return exact field values.

use num_traits::Signed;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::surd::QuadSurd;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaIdentityReport {
    pub identity: &'static str,
    pub lhs: QuadSurd,
    pub rhs: QuadSurd,
    pub holds: bool,
}

impl AreaIdentityReport {
    fn new(identity: &'static str, lhs: Rational, rhs: Rational) -> Self {
        AreaIdentityReport {
            identity,
            holds: lhs == rhs,
            lhs: QuadSurd::from_rational(&lhs),
            rhs: QuadSurd::from_rational(&rhs),
        }
    }
}

fn half(a: &Rational) -> Rational {
    a / Rational::from_integer(2.into())
}

fn require_positive(name: &'static str, xs: &[&Rational]) -> Result<()> {
    if xs.iter().all(|x| x.is_positive()) {
        Ok(())
    } else {
        let shown: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
        Err(Error::domain(name, shown.join(", ")))
    }
}

/// `(a + b)² = a² + b·(b + 2a)`
pub fn check_ii4(a: &Rational, b: &Rational) -> Result<AreaIdentityReport> {
    require_positive("a > 0 and b > 0", &[a, b])?;
    let two = Rational::from_integer(2.into());
    let lhs = (a + b) * (a + b);
    let rhs = a * a + b * (b + &two * a);
    Ok(AreaIdentityReport::new("II.4", lhs, rhs))
}

/// `(a/2)² − (a/2 − x)² = x·(a − x)` for `0 < x < a/2`
pub fn check_ii5(a: &Rational, x: &Rational) -> Result<AreaIdentityReport> {
    let h = half(a);
    if !(x.is_positive() && x < &h) {
        return Err(Error::domain("0 < x < a/2", format!("a = {a}, x = {x}")));
    }
    let lhs = &h * &h - (&h - x) * (&h - x);
    let rhs = x * (a - x);
    Ok(AreaIdentityReport::new("II.5", lhs, rhs))
}

/// `(a/2 + x)² = (a/2)² + x·(a + x)`
pub fn check_ii6(a: &Rational, x: &Rational) -> Result<AreaIdentityReport> {
    require_positive("a > 0 and x > 0", &[a, x])?;
    let h = half(a);
    let lhs = (&h + x) * (&h + x);
    let rhs = &h * &h + x * (a + x);
    Ok(AreaIdentityReport::new("II.6", lhs, rhs))
}

fn check_product(x: &QuadSurd, other: &QuadSurd, target: &Rational) -> Result<()> {
    let product = x.mul(other)?;
    if product != QuadSurd::from_rational(target) {
        return Err(Error::Invariant(format!(
            "construction {x} gives product {product}, expected {target}"
        )));
    }
    Ok(())
}

/// The line `x = a/2 − √((a/2)² − m²)` with `x·(a − x) = m²`.
pub fn apply_in_defect(a: &Rational, m: &Rational) -> Result<QuadSurd> {
    if !(m.is_positive() && m < &half(a)) {
        return Err(Error::domain("a/2 > m > 0", format!("a = {a}, m = {m}")));
    }
    apply_in_defect_to_square(a, &(m * m))
}

/// [`apply_in_defect`] for a given square `0 < m² <= (a/2)²`; picks the smaller solution.
pub fn apply_in_defect_to_square(a: &Rational, m_sq: &Rational) -> Result<QuadSurd> {
    let h = half(a);
    let radicand = &h * &h - m_sq;
    if !m_sq.is_positive() || radicand.is_negative() {
        return Err(Error::domain(
            "0 < m² <= (a/2)²",
            format!("a = {a}, m² = {m_sq}"),
        ));
    }
    let x = QuadSurd::from_rational(&h).sub(&QuadSurd::sqrt_of(&radicand)?)?;
    let rest = QuadSurd::from_rational(a).sub(&x)?;
    check_product(&x, &rest, m_sq)?;
    Ok(x)
}

/// The line `x = √(m² + (a/2)²) − a/2` with `x·(a + x) = m²`.
pub fn apply_in_excess(a: &Rational, m: &Rational) -> Result<QuadSurd> {
    require_positive("a > 0 and m > 0", &[a, m])?;
    let h = half(a);
    let hypotenuse = QuadSurd::sqrt_of(&(m * m + &h * &h))?;
    let x = hypotenuse.sub(&QuadSurd::from_rational(&h))?;
    let sum = QuadSurd::from_rational(a).add(&x)?;
    check_product(&x, &sum, &(m * m))?;
    Ok(x)
}

/// The mean proportional `m = √(x·(a − x))` for `0 < x < a`.
pub fn mean_proportional(x: &Rational, a: &Rational) -> Result<QuadSurd> {
    if !(x.is_positive() && x < a) {
        return Err(Error::domain("0 < x < a", format!("x = {x}, a = {a}")));
    }
    let sq = x * (a - x);
    let m = QuadSurd::sqrt_of(&sq)?;
    check_product(&m, &m, &sq)?;
    Ok(m)
}

/// `√(a² + b²)`, the hypotenuse on legs `a` and `b`.
pub fn hypotenuse(a: &Rational, b: &Rational) -> Result<QuadSurd> {
    require_positive("a > 0 and b > 0", &[a, b])?;
    QuadSurd::sqrt_of(&(a * a + b * b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn int(n: i64) -> Rational {
        r(n, 1)
    }

    fn s(u: i64, v: i64, w: i64, d: i64) -> QuadSurd {
        QuadSurd::new(u.into(), v.into(), w.into(), d.into()).unwrap()
    }

    #[test]
    fn ii4_examples() {
        let rep = check_ii4(&int(3), &int(4)).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lhs, QuadSurd::from_int(49));
        assert_eq!(
            check_ii4(&int(1), &int(1)).unwrap().rhs,
            QuadSurd::from_int(4)
        );
        let rep = check_ii4(&r(1, 2), &r(1, 3)).unwrap();
        assert_eq!(rep.lhs, QuadSurd::from_rational(&r(25, 36)));
        assert!(rep.holds);
    }

    #[test]
    fn ii5_examples() {
        assert_eq!(
            check_ii5(&int(10), &int(2)).unwrap().lhs,
            QuadSurd::from_int(16)
        );
        assert_eq!(
            check_ii5(&int(1), &r(1, 4)).unwrap().rhs,
            QuadSurd::from_rational(&r(3, 16))
        );
        assert_eq!(
            check_ii5(&int(4), &int(1)).unwrap().lhs,
            QuadSurd::from_int(3)
        );
        assert!(check_ii5(&int(4), &int(2)).is_err());
    }

    #[test]
    fn ii6_examples() {
        assert_eq!(
            check_ii6(&int(2), &int(1)).unwrap().lhs,
            QuadSurd::from_int(4)
        );
        assert_eq!(
            check_ii6(&int(4), &int(3)).unwrap().rhs,
            QuadSurd::from_int(25)
        );
        let rep = check_ii6(&r(1, 2), &r(1, 2)).unwrap();
        assert_eq!(rep.lhs, QuadSurd::from_rational(&r(9, 16)));
        assert!(rep.holds);
    }

    #[test]
    fn defect_application_examples() {
        assert_eq!(
            apply_in_defect(&int(5), &int(2)).unwrap(),
            QuadSurd::from_int(1)
        );
        let err = apply_in_defect(&int(2), &int(2)).unwrap_err();
        assert_eq!(err.precondition(), Some("a/2 > m > 0"));
        assert_eq!(apply_in_defect(&int(4), &int(1)).unwrap(), s(2, -1, 1, 3));
    }

    #[test]
    fn defect_application_at_boundary() {
        assert_eq!(
            apply_in_defect_to_square(&int(4), &int(4)).unwrap(),
            QuadSurd::from_int(2)
        );
    }

    #[test]
    fn excess_application_examples() {
        assert_eq!(
            apply_in_excess(&int(3), &int(2)).unwrap(),
            QuadSurd::from_int(1)
        );
        assert_eq!(apply_in_excess(&int(1), &int(1)).unwrap(), s(-1, 1, 2, 5));
        assert_eq!(apply_in_excess(&int(2), &int(2)).unwrap(), s(-1, 1, 1, 5));
    }

    #[test]
    fn mean_proportional_examples() {
        assert_eq!(
            mean_proportional(&int(1), &int(5)).unwrap(),
            QuadSurd::from_int(2)
        );
        assert_eq!(mean_proportional(&int(1), &int(3)).unwrap(), s(0, 1, 1, 2));
        assert_eq!(
            mean_proportional(&int(2), &int(4)).unwrap(),
            QuadSurd::from_int(2)
        );
        assert!(mean_proportional(&int(4), &int(4)).is_err());
    }
}
