//! Ratios of magnitudes compared by their anthyphairesis.
//!
//! Two ratios are equal exactly when their canonical expansions coincide.
//! Nothing here compares magnitudes through multiples of one another.

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::arith::{is_perfect_square, isqrt, Int, Rational};
use crate::cf::{euclid_cf, ContinuedFraction};
use crate::error::{Error, Result};
use crate::expand::{expand_value, Expander};
use crate::surd::QuadSurd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Line,
    Area,
}

/// A strictly positive line or rectilinear area with an exact value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Magnitude {
    value: QuadSurd,
    role: Role,
}

impl Magnitude {
    pub fn line(value: QuadSurd) -> Result<Self> {
        if !value.is_positive() {
            return Err(Error::domain("magnitude > 0", format!("line {value}")));
        }
        Ok(Magnitude {
            value,
            role: Role::Line,
        })
    }

    pub fn line_int(n: i64) -> Result<Self> {
        Self::line(QuadSurd::from_int(n))
    }

    /// The rectangle on two lines of one field.
    pub fn rectangle(a: &Magnitude, b: &Magnitude) -> Result<Self> {
        if a.role != Role::Line || b.role != Role::Line {
            return Err(Error::domain(
                "rectangle sides are lines",
                format!("{a} × {b}"),
            ));
        }
        Ok(Magnitude {
            value: a.value.mul(&b.value)?,
            role: Role::Area,
        })
    }

    pub fn value(&self) -> &QuadSurd {
        &self.value
    }

    pub fn role(&self) -> Role {
        self.role
    }

    fn same_role(&self, other: &Self, op: &str) -> Result<()> {
        if self.role == other.role {
            Ok(())
        } else {
            Err(Error::domain(
                "operands of equal role",
                format!("{self} {op} {other}"),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_role(other, "+")?;
        Ok(Magnitude {
            value: self.value.add(&other.value)?,
            role: self.role,
        })
    }

    /// `self − other`, which must stay positive.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_role(other, "−")?;
        let value = self.value.sub(&other.value)?;
        if !value.is_positive() {
            return Err(Error::domain(
                "minuend > subtrahend",
                format!("{self} − {other}"),
            ));
        }
        Ok(Magnitude {
            value,
            role: self.role,
        })
    }

    /// Exact comparison within one field.
    pub fn gt(&self, other: &Self) -> Result<bool> {
        Ok(self.value.sub(&other.value)?.sign() > 0)
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

fn quotient(a: &Magnitude, b: &Magnitude) -> Result<QuadSurd> {
    a.value.div(&b.value)
}

/// Canonical anthyphairesis of `a` to `b` (same field). A truncated result is
/// returned flagged, never as a finite expansion.
pub fn anth_of_ratio(a: &Magnitude, b: &Magnitude, max_steps: usize) -> Result<ContinuedFraction> {
    Ok(expand_value(&quotient(a, b)?, max_steps)?.0)
}

/// Quotient stream that keeps answering past a closed period.
struct Lazy {
    expander: Expander,
    done: Option<ContinuedFraction>,
}

impl Lazy {
    fn new(x: &QuadSurd) -> Result<Self> {
        Ok(Lazy {
            expander: Expander::for_value(x)?,
            done: None,
        })
    }

    fn quotient(&mut self, i: usize, max_steps: usize) -> Result<Option<Int>> {
        if self.done.is_none() {
            if i >= max_steps {
                return Err(Error::Indeterminate { steps: max_steps });
            }
            if let Some(q) = self.expander.next_quotient()? {
                return Ok(Some(q));
            }
            self.done = Some(self.expander.result());
        }
        Ok(self.done.as_ref().and_then(|cf| cf.quotient_at(i).cloned()))
    }
}

/// `a/b = c/d` by equal anthyphairesis. The pairs may lie in different fields.
///
/// Both quotient streams are walked in step; the first disagreement settles
/// inequality, otherwise the two completed canonical expansions are compared.
pub fn ratio_eq(
    a: &Magnitude,
    b: &Magnitude,
    c: &Magnitude,
    d: &Magnitude,
    max_steps: usize,
) -> Result<bool> {
    let mut left = Lazy::new(&quotient(a, b)?)?;
    let mut right = Lazy::new(&quotient(c, d)?)?;
    for i in 0.. {
        let ql = left.quotient(i, max_steps)?;
        let qr = right.quotient(i, max_steps)?;
        if ql != qr {
            return Ok(false);
        }
        if let (Some(l), Some(r)) = (&left.done, &right.done) {
            return l.same_as(r);
        }
    }
    unreachable!()
}

/// `a·d = b·c`, exactly; all four magnitudes must share one field.
pub fn cross_product_eq(
    a: &Magnitude,
    b: &Magnitude,
    c: &Magnitude,
    d: &Magnitude,
) -> Result<bool> {
    let (ad, bc) = cross_products(a, b, c, d)?;
    Ok(ad == bc)
}

/// The two products `a·d` and `b·c`.
pub fn cross_products(
    a: &Magnitude,
    b: &Magnitude,
    c: &Magnitude,
    d: &Magnitude,
) -> Result<(QuadSurd, QuadSurd)> {
    let mut field = QuadSurd::from_int(1);
    for m in [a, b, c, d] {
        // carry a representative of the widest field seen so far
        field.common_field(&m.value)?;
        if field.is_rational() {
            field = m.value.clone();
        }
    }
    Ok((a.value.mul(&d.value)?, b.value.mul(&c.value)?))
}

/// `a/b = m/n` for a pair of magnitudes against a pair of numbers.
pub fn mixed_ratio_eq(
    a: &Magnitude,
    b: &Magnitude,
    m: &Int,
    n: &Int,
    max_steps: usize,
) -> Result<bool> {
    let numbers = euclid_cf(m, n)?;
    anth_of_ratio(a, b, max_steps)?.same_as(&numbers)
}

/// Whether lines with `A·a² = C·b²` are commensurable: `C/A` in lowest terms
/// must be a ratio of square numbers.
pub fn commensurable_pure(a: &Int, c: &Int) -> Result<bool> {
    let verdict = square_ratio_witness(c, a)?.is_some();
    debug_assert_eq!(verdict, is_perfect_square(&(a * c)));
    Ok(verdict)
}

/// `(m, n)` with `C/A = m²/n²` in lowest terms, if it exists.
pub fn square_ratio_witness(c: &Int, a: &Int) -> Result<Option<(Int, Int)>> {
    if !a.is_positive() || !c.is_positive() {
        return Err(Error::domain("A > 0 and C > 0", format!("({c}, {a})")));
    }
    let g = c.gcd(a);
    let (c, a) = (c / &g, a / &g);
    let (m, n) = (isqrt(&c)?, isqrt(&a)?);
    Ok((&m * &m == c && &n * &n == a).then_some((m, n)))
}

/// `a/b` as an exact rational, when the two lines are commensurable.
pub fn rational_ratio(a: &Magnitude, b: &Magnitude) -> Result<Option<Rational>> {
    Ok(quotient(a, b)?.to_rational())
}
