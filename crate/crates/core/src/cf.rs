//! Quotient sequences of ratios: finite or eventually periodic.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::surd::QuadSurd;

/// The anthyphairesis `[k0, k1, …, (period)]` of a ratio.
///
/// Compare through [`ContinuedFraction::same_as`] or `==`; a truncated
/// expansion never equals anything, itself included.
#[derive(Clone, Debug)]
pub struct ContinuedFraction {
    pub preperiod: Vec<Int>,
    pub period: Option<Vec<Int>>,
    pub truncated: bool,
}

impl PartialEq for ContinuedFraction {
    fn eq(&self, other: &Self) -> bool {
        !self.truncated
            && !other.truncated
            && self.preperiod == other.preperiod
            && self.period == other.period
    }
}

impl ContinuedFraction {
    pub fn finite(quotients: Vec<Int>) -> Self {
        ContinuedFraction {
            preperiod: quotients,
            period: None,
            truncated: false,
        }
        .canonicalize()
    }

    pub fn periodic(preperiod: Vec<Int>, period: Vec<Int>) -> Self {
        ContinuedFraction {
            preperiod,
            period: Some(period),
            truncated: false,
        }
        .canonicalize()
    }

    pub(crate) fn truncated(quotients: Vec<Int>) -> Self {
        ContinuedFraction {
            preperiod: quotients,
            period: None,
            truncated: true,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_none() && !self.truncated
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.period.is_some() && self.preperiod.is_empty()
    }

    /// Equality of canonical expansions; truncation makes the answer unknown.
    pub fn same_as(&self, other: &Self) -> Result<bool> {
        if self.truncated {
            return Err(Error::Indeterminate {
                steps: self.preperiod.len(),
            });
        }
        if other.truncated {
            return Err(Error::Indeterminate {
                steps: other.preperiod.len(),
            });
        }
        let (a, b) = (self.canonicalize(), other.canonicalize());
        Ok(a.preperiod == b.preperiod && a.period == b.period)
    }

    /// The `i`-th quotient, unrolling the period. `None` past a finite end.
    pub fn quotient_at(&self, i: usize) -> Option<&Int> {
        if let Some(q) = self.preperiod.get(i) {
            return Some(q);
        }
        let period = self.period.as_ref()?;
        period.get((i - self.preperiod.len()) % period.len())
    }

    /// The first `n` quotients (fewer if the expansion is finite and shorter).
    pub fn take(&self, n: usize) -> Vec<Int> {
        (0..n).map_while(|i| self.quotient_at(i).cloned()).collect()
    }

    /// Canonical description: finite tail `[…, k, 1] → […, k + 1]`, primitive
    /// period, shortest preperiod. Truncated expansions are returned as is.
    pub fn canonicalize(&self) -> Self {
        if self.truncated {
            return self.clone();
        }
        let mut pre = self.preperiod.clone();
        match &self.period {
            None => {
                if pre.len() > 1 && pre.last().is_some_and(|k| k.is_one()) {
                    pre.pop();
                    *pre.last_mut().expect("len > 1") += 1;
                }
                ContinuedFraction {
                    preperiod: pre,
                    period: None,
                    truncated: false,
                }
            }
            Some(period) if period.is_empty() => ContinuedFraction {
                preperiod: pre,
                period: None,
                truncated: false,
            }
            .canonicalize(),
            Some(period) => {
                let mut period = primitive_root(period).to_vec();
                while pre.last().is_some() && pre.last() == period.last() {
                    pre.pop();
                    period.rotate_right(1);
                }
                ContinuedFraction {
                    preperiod: pre,
                    period: Some(period),
                    truncated: false,
                }
            }
        }
    }
}

/// Shortest word `r` with `period = r^m`.
fn primitive_root(period: &[Int]) -> &[Int] {
    let n = period.len();
    (1..=n)
        .filter(|len| n.is_multiple_of(*len))
        .find(|&len| (len..n).all(|i| period[i] == period[i - len]))
        .map(|len| &period[..len])
        .unwrap_or(period)
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Int]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "[{}", join(&self.preperiod))?;
        if let Some(p) = &self.period {
            if !self.preperiod.is_empty() {
                f.write_str("; ")?;
            }
            write!(f, "period({})", join(p))?;
        }
        if self.truncated {
            f.write_str(", …truncated")?;
        }
        f.write_str("]")
    }
}

/// Reciprocal subtraction of two positive integers, i.e. Euclid's algorithm.
pub fn euclid_cf(m: &Int, n: &Int) -> Result<ContinuedFraction> {
    if !m.is_positive() || !n.is_positive() {
        return Err(Error::domain(
            "m > 0 and n > 0",
            format!("euclid_cf({m}, {n})"),
        ));
    }
    Ok(ContinuedFraction::finite(euclid_quotients(
        m.clone(),
        n.clone(),
    )))
}

pub(crate) fn euclid_quotients(mut m: Int, mut n: Int) -> Vec<Int> {
    let mut out = Vec::new();
    while !n.is_zero() {
        let (q, r) = num_integer::Integer::div_rem(&m, &n);
        out.push(q);
        m = n;
        n = r;
    }
    out
}

/// Generic expansion of a positive real quadratic value: `k = ⌊x⌋`,
/// `x ← 1/(x − k)`, until the complete quotient repeats.
///
/// Shares no code with the quadratic-form engine and serves as its oracle.
pub fn surd_cf(x: &QuadSurd, max_steps: usize) -> Result<ContinuedFraction> {
    if !x.is_positive() {
        return Err(Error::domain("x > 0", format!("surd_cf of {x}")));
    }
    let mut seen: HashMap<QuadSurd, usize> = HashMap::new();
    let mut quotients = Vec::new();
    let mut x = x.clone();
    while quotients.len() < max_steps {
        if let Some(&first) = seen.get(&x) {
            let period = quotients.split_off(first);
            return Ok(ContinuedFraction::periodic(quotients, period));
        }
        seen.insert(x.clone(), quotients.len());
        let k = x.floor();
        let rest = x.sub(&QuadSurd::from_int(k.clone()))?;
        quotients.push(k);
        if rest.is_zero() {
            return Ok(ContinuedFraction::finite(quotients));
        }
        x = rest.recip()?;
    }
    Ok(ContinuedFraction::truncated(quotients))
}
