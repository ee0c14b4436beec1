//! Exact elements `(u + v·√D) / w` of a real quadratic field.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{floor_div, isqrt, sign_of, squarefree_split, Int, Rational};
use crate::error::{Error, Result};

/// An exact real `(u + v·√d) / w`.
///
/// Normalized values satisfy `w > 0`, `gcd(u, v, w) = 1` and `d` squarefree
/// with `d > 1`. Rational values carry `v = 0` and the sentinel `d = 1`, which
/// unifies with every field, so two normalized values are equal as reals iff
/// their components are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    u: Int,
    v: Int,
    w: Int,
    d: Int,
}

impl QuadSurd {
    /// Builds and normalizes `(u + v·√d) / w`. Square factors of `d` move into `v`.
    pub fn new(u: Int, v: Int, w: Int, d: Int) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.is_negative() {
            return Err(Error::domain("D > 0", format!("radicand {d} is negative")));
        }
        if d.is_zero() || v.is_zero() {
            return Ok(Self::normalized(u, Int::zero(), w, Int::one()));
        }
        let (square, free) = squarefree_split(&d);
        Ok(Self::normalized(u, v * square, w, free))
    }

    pub fn from_int(n: impl Into<Int>) -> Self {
        QuadSurd {
            u: n.into(),
            v: Int::zero(),
            w: Int::one(),
            d: Int::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::normalized(
            r.numer().clone(),
            Int::zero(),
            r.denom().clone(),
            Int::one(),
        )
    }

    /// `√r` for a rational `r >= 0`, placed in the field `Q(√(numer·denom))`.
    pub fn sqrt_of(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::domain(
                "radicand >= 0",
                format!("sqrt of negative {r}"),
            ));
        }
        if r.is_zero() {
            return Ok(Self::from_int(0));
        }
        // p, q coprime: √(p/q) = sp·√(fp·fq) / (sq·fq) with fp·fq squarefree
        let (sp, fp) = squarefree_split(r.numer());
        let (sq, fq) = squarefree_split(r.denom());
        let w = sq * &fq;
        Ok(Self::normalized(Int::zero(), sp, w, fp * fq))
    }

    /// `d` must already be squarefree (or 1 with `v = 0`).
    fn normalized(mut u: Int, mut v: Int, mut w: Int, mut d: Int) -> Self {
        if d.is_one() && !v.is_zero() {
            u += &v;
            v = Int::zero();
        }
        if v.is_zero() {
            d = Int::one();
        }
        if w.is_negative() {
            u = -u;
            v = -v;
            w = -w;
        }
        let g = u.gcd(&v).gcd(&w);
        if !g.is_one() {
            u /= &g;
            v /= &g;
            w /= &g;
        }
        QuadSurd { u, v, w, d }
    }

    pub fn u(&self) -> &Int {
        &self.u
    }

    pub fn v(&self) -> &Int {
        &self.v
    }

    pub fn w(&self) -> &Int {
        &self.w
    }

    /// The squarefree radicand, or 1 for a rational value.
    pub fn radicand(&self) -> &Int {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.u.clone(), self.w.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// The Galois conjugate `(u − v·√d) / w`.
    pub fn conjugate(&self) -> Self {
        QuadSurd {
            u: self.u.clone(),
            v: -&self.v,
            w: self.w.clone(),
            d: self.d.clone(),
        }
    }

    /// The shared radicand of two values, if they lie in one field.
    pub fn common_field(&self, other: &Self) -> Result<Int> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.d.clone()),
            (_, true) => Ok(self.d.clone()),
            _ if self.d == other.d => Ok(self.d.clone()),
            _ => Err(Error::MixedFields(self.d.clone(), other.d.clone())),
        }
    }

    /// Exact sign of the real value, by comparing `u²` against `v²·d`.
    pub fn sign(&self) -> i8 {
        let su = sign_of(&self.u);
        let sv = sign_of(&self.v);
        if sv == 0 || su == sv {
            return if su == 0 { sv } else { su };
        }
        if su == 0 {
            return sv;
        }
        let u2 = &self.u * &self.u;
        let v2d = &self.v * &self.v * &self.d;
        // opposite signs: the larger magnitude wins
        match u2.cmp(&v2d) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    /// The unique integer `f` with `f <= x < f + 1`.
    pub fn floor(&self) -> Int {
        // |v|·√d lies in [isqrt(v²d), isqrt(v²d) + 1), a starting candidate
        // that is then confirmed by exact sign tests.
        let root = isqrt(&(&self.v * &self.v * &self.d)).expect("non-negative");
        let approx = if self.v.is_negative() { -root } else { root };
        let mut f = floor_div(&(&self.u + approx), &self.w);
        while self.sub_int(&f).sign() < 0 {
            f -= 1;
        }
        while self.sub_int(&(&f + 1)).sign() >= 0 {
            f += 1;
        }
        f
    }

    fn sub_int(&self, n: &Int) -> Self {
        QuadSurd {
            u: &self.u - n * &self.w,
            v: self.v.clone(),
            w: self.w.clone(),
            d: self.d.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        Ok(Self::normalized(
            &self.u * &other.w + &other.u * &self.w,
            &self.v * &other.w + &other.v * &self.w,
            &self.w * &other.w,
            d,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        Ok(Self::normalized(
            &self.u * &other.u + &self.v * &other.v * &d,
            &self.u * &other.v + &self.v * &other.u,
            &self.w * &other.w,
            d,
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.common_field(other)?;
        self.mul(&other.recip()?)
    }

    /// `1 / x`, rationalizing the denominator.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = &self.u * &self.u - &self.v * &self.v * &self.d;
        Ok(Self::normalized(
            &self.w * &self.u,
            -(&self.w * &self.v),
            norm,
            self.d.clone(),
        ))
    }

    pub fn neg(&self) -> Self {
        QuadSurd {
            u: -&self.u,
            v: -&self.v,
            w: self.w.clone(),
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::normalized(
            &self.u * k.numer(),
            &self.v * k.numer(),
            &self.w * k.denom(),
            self.d.clone(),
        )
    }

    /// Exact ordering of two values in one field.
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering> {
        Ok(self.sub(other)?.sign().cmp(&0))
    }

    /// Rough `f64` value, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let u = self.u.to_f64().unwrap_or(f64::NAN);
        let v = self.v.to_f64().unwrap_or(f64::NAN);
        let w = self.w.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        (u + v * d.sqrt()) / w
    }
}

impl From<Int> for QuadSurd {
    fn from(n: Int) -> Self {
        QuadSurd::from_int(n)
    }
}

impl From<&Rational> for QuadSurd {
    fn from(r: &Rational) -> Self {
        QuadSurd::from_rational(r)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.v.is_zero() {
            self.u.to_string()
        } else {
            let mag = self.v.abs();
            let rad = if mag.is_one() {
                format!("√{}", self.d)
            } else {
                format!("{mag}√{}", self.d)
            };
            match (self.u.is_zero(), self.v.is_negative()) {
                (true, false) => rad,
                (true, true) => format!("-{rad}"),
                (false, false) => format!("{} + {rad}", self.u),
                (false, true) => format!("{} - {rad}", self.u),
            }
        };
        if self.w.is_one() {
            f.write_str(&body)
        } else if self.v.is_zero() || self.u.is_zero() {
            write!(f, "{body}/{}", self.w)
        } else {
            write!(f, "({body})/{}", self.w)
        }
    }
}
