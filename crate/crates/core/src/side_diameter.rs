//! Generalized side and diameter numbers of an anthyphairesis.

use num_traits::{One, Signed, Zero};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::form::{FormKind, QuadraticForm};
use crate::surd::QuadSurd;

/// `p[n]`, `q[n]` with `p₀ = 0, p₁ = 1`, `q₀ = 1, q₁ = k₀` and
/// `x_n = k_{n−1}·x_{n−1} + x_{n−2}`.
///
/// `q[n] / p[n]` is the n-th convergent of the ratio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideDiameter {
    pub p: Vec<Int>,
    pub q: Vec<Int>,
}

impl SideDiameter {
    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// `q_n·p_{n−1} − p_n·q_{n−1}`, which is `(−1)ⁿ`.
    pub fn determinant(&self, n: usize) -> Int {
        &self.q[n] * &self.p[n - 1] - &self.p[n] * &self.q[n - 1]
    }
}

/// Side and diameter numbers up to index `n` for the given quotients.
pub fn convergents(quotients: &[Int], n: usize) -> Result<SideDiameter> {
    if n > quotients.len() {
        return Err(Error::domain(
            "n <= number of quotients",
            format!("n = {n} with {} quotients", quotients.len()),
        ));
    }
    let mut p = vec![Int::zero()];
    let mut q = vec![Int::one()];
    for i in 1..=n {
        let k = &quotients[i - 1];
        let (p_prev2, q_prev2) = if i >= 2 {
            (p[i - 2].clone(), q[i - 2].clone())
        } else {
            // seeds p_{-1} = 1, q_{-1} = 0 give p₁ = 1, q₁ = k₀
            (Int::one(), Int::zero())
        };
        p.push(k * &p[i - 1] + p_prev2);
        q.push(k * &q[i - 1] + q_prev2);
    }
    Ok(SideDiameter { p, q })
}

/// The n-th anthyphairetic remainder `e_n = (−1)ⁿ·(q_n·b − p_n·a)`.
pub fn remainder(n: usize, a: &QuadSurd, b: &QuadSurd, sd: &SideDiameter) -> Result<QuadSurd> {
    if n >= sd.len() {
        return Err(Error::domain(
            "n <= computed index",
            format!("remainder {n} from {} side-diameter terms", sd.len()),
        ));
    }
    a.common_field(b)?;
    let qb = b.mul(&QuadSurd::from_int(sd.q[n].clone()))?;
    let pa = a.mul(&QuadSurd::from_int(sd.p[n].clone()))?;
    let e = qb.sub(&pa)?;
    Ok(if n.is_multiple_of(2) { e } else { e.neg() })
}

/// The excess relation `p_{n+1}·a² = (q_{n+1} − p_n)·a·b + q_n·b²` whose root
/// has the purely periodic expansion `period`.
pub fn period_to_form(period: &[Int]) -> Result<QuadraticForm> {
    if period.is_empty() {
        return Err(Error::domain("period nonempty", "empty period"));
    }
    if period.iter().any(|k| !k.is_positive()) {
        return Err(Error::domain("period entries >= 1", format!("{period:?}")));
    }
    let len = period.len();
    let sd = convergents(period, len)?;
    let b = &sd.q[len] - &sd.p[len - 1];
    if b.is_negative() {
        return Err(Error::Invariant(format!(
            "period {period:?} gives negative middle coefficient {b}"
        )));
    }
    QuadraticForm::new(
        FormKind::Excess,
        sd.p[len].clone(),
        b,
        sd.q[len - 1].clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&k| Int::from(k)).collect()
    }

    #[test]
    fn convergent_examples() {
        let sd = convergents(&ints(&[1, 2, 2]), 2).unwrap();
        assert_eq!(sd.p, ints(&[0, 1, 2]));
        assert_eq!(sd.q, ints(&[1, 1, 3]));
        let sd = convergents(&ints(&[5, 3]), 1).unwrap();
        assert_eq!((sd.p[1].clone(), sd.q[1].clone()), (1.into(), 5.into()));
        let sd = convergents(&ints(&[1, 2, 2, 2]), 3).unwrap();
        assert_eq!((sd.p[3].clone(), sd.q[3].clone()), (5.into(), 7.into()));
        assert!(convergents(&ints(&[1]), 2).is_err());
    }

    #[test]
    fn remainder_examples() {
        let a = QuadSurd::new(0.into(), 1.into(), 1.into(), 2.into()).unwrap();
        let b = QuadSurd::from_int(1);
        let sd = convergents(&ints(&[1, 2, 2, 2]), 3).unwrap();
        let s = |u: i64, v: i64| QuadSurd::new(u.into(), v.into(), 1.into(), 2.into()).unwrap();
        assert_eq!(remainder(1, &a, &b, &sd).unwrap(), s(-1, 1));
        assert_eq!(remainder(2, &a, &b, &sd).unwrap(), s(3, -2));
        assert_eq!(remainder(3, &a, &b, &sd).unwrap(), s(-7, 5));
        let c = QuadSurd::new(0.into(), 1.into(), 1.into(), 3.into()).unwrap();
        assert!(remainder(1, &a, &c, &sd).is_err());
    }

    #[test]
    fn period_to_form_examples() {
        let f = |p: &[i64]| period_to_form(&ints(p)).unwrap();
        assert_eq!(f(&[2]), QuadraticForm::excess(1, 2, 1).unwrap());
        assert_eq!(f(&[1]), QuadraticForm::excess(1, 1, 1).unwrap());
        assert_eq!(f(&[1, 2]), QuadraticForm::excess(2, 2, 1).unwrap());
        assert!(period_to_form(&[]).is_err());
        assert!(period_to_form(&ints(&[1, 0])).is_err());
    }
}
