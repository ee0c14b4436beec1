//! Checkers for the proportion theorems, each evaluated exactly on concrete
//! magnitudes: hypotheses first, then (only if they hold) the conclusion.

use std::fmt;
use std::str::FromStr;

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::ratio::{anth_of_ratio, cross_product_eq, ratio_eq, Magnitude, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Proposition {
    Transitivity,
    Fundamental,
    V9Cancel,
    Alternando,
    ExAequali,
    Perturbed,
    ComponendoPairs,
    SeparandoPairs,
    PlusUnit,
    MinusUnit,
    TopicsScaling,
    AreaV9,
    AreaAlternando,
    AreaExAequali,
    AreaMixedExAequali,
    AreaPerturbed,
    AreaMixedPerturbed,
}

impl Proposition {
    pub const ALL: [Proposition; 17] = [
        Proposition::Transitivity,
        Proposition::Fundamental,
        Proposition::V9Cancel,
        Proposition::Alternando,
        Proposition::ExAequali,
        Proposition::Perturbed,
        Proposition::ComponendoPairs,
        Proposition::SeparandoPairs,
        Proposition::PlusUnit,
        Proposition::MinusUnit,
        Proposition::TopicsScaling,
        Proposition::AreaV9,
        Proposition::AreaAlternando,
        Proposition::AreaExAequali,
        Proposition::AreaMixedExAequali,
        Proposition::AreaPerturbed,
        Proposition::AreaMixedPerturbed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Proposition::Transitivity => "transitivity",
            Proposition::Fundamental => "fundamental",
            Proposition::V9Cancel => "v9_cancel",
            Proposition::Alternando => "alternando",
            Proposition::ExAequali => "ex_aequali",
            Proposition::Perturbed => "perturbed",
            Proposition::ComponendoPairs => "componendo_pairs",
            Proposition::SeparandoPairs => "separando_pairs",
            Proposition::PlusUnit => "plus_unit",
            Proposition::MinusUnit => "minus_unit",
            Proposition::TopicsScaling => "topics_scaling",
            Proposition::AreaV9 => "area_v9",
            Proposition::AreaAlternando => "area_alternando",
            Proposition::AreaExAequali => "area_ex_aequali",
            Proposition::AreaMixedExAequali => "area_mixed_ex_aequali",
            Proposition::AreaPerturbed => "area_perturbed",
            Proposition::AreaMixedPerturbed => "area_mixed_perturbed",
        }
    }

    /// Expected role of each input, in order.
    pub fn signature(self) -> Vec<Role> {
        use Role::{Area, Line};
        match self {
            Proposition::Transitivity | Proposition::ExAequali | Proposition::Perturbed => {
                vec![Line; 6]
            }
            Proposition::Fundamental
            | Proposition::Alternando
            | Proposition::ComponendoPairs
            | Proposition::SeparandoPairs
            | Proposition::PlusUnit
            | Proposition::MinusUnit => vec![Line; 4],
            Proposition::V9Cancel | Proposition::TopicsScaling => vec![Line; 3],
            Proposition::AreaV9 => vec![Area; 3],
            Proposition::AreaAlternando => vec![Area; 4],
            Proposition::AreaExAequali | Proposition::AreaPerturbed => vec![Area; 6],
            Proposition::AreaMixedExAequali | Proposition::AreaMixedPerturbed => {
                vec![Area, Area, Area, Line, Line, Line]
            }
        }
    }

    pub fn arity(self) -> usize {
        self.signature().len()
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Proposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Proposition::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::domain("known proposition", format!("unknown proposition `{s}`")))
    }
}

/// Outcome of one proposition check. The expansions are present only when
/// the hypotheses held and the conclusion was evaluated.
#[derive(Clone, Debug)]
pub struct PropReport {
    pub proposition: Proposition,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub lhs_cf: Option<ContinuedFraction>,
    pub rhs_cf: Option<ContinuedFraction>,
}

impl PropReport {
    /// A checked instance contradicting its theorem.
    pub fn is_counterexample(&self) -> bool {
        self.hypotheses_hold && !self.conclusion_holds
    }
}

struct Checker {
    max_steps: usize,
}

impl Checker {
    fn eq(&self, a: &Magnitude, b: &Magnitude, c: &Magnitude, d: &Magnitude) -> Result<bool> {
        ratio_eq(a, b, c, d, self.max_steps)
    }

    fn anth(&self, a: &Magnitude, b: &Magnitude) -> Result<ContinuedFraction> {
        anth_of_ratio(a, b, self.max_steps)
    }

    /// Conclusion `a/b = c/d`, recorded with both expansions.
    fn conclude(
        &self,
        prop: Proposition,
        (a, b): (&Magnitude, &Magnitude),
        (c, d): (&Magnitude, &Magnitude),
    ) -> Result<PropReport> {
        let lhs = self.anth(a, b)?;
        let rhs = self.anth(c, d)?;
        Ok(PropReport {
            proposition: prop,
            hypotheses_hold: true,
            conclusion_holds: lhs.same_as(&rhs)?,
            lhs_cf: Some(lhs),
            rhs_cf: Some(rhs),
        })
    }
}

fn vacuous(prop: Proposition) -> PropReport {
    PropReport {
        proposition: prop,
        hypotheses_hold: false,
        conclusion_holds: false,
        lhs_cf: None,
        rhs_cf: None,
    }
}

/// Evaluates `prop` on `inputs`, whose count and roles must match
/// [`Proposition::signature`]. A failed hypothesis yields a vacuous report.
pub fn check_proposition(
    prop: Proposition,
    inputs: &[Magnitude],
    max_steps: usize,
) -> Result<PropReport> {
    let signature = prop.signature();
    if inputs.len() != signature.len() {
        return Err(Error::domain(
            "input arity",
            format!(
                "{prop} takes {} magnitudes, got {}",
                signature.len(),
                inputs.len()
            ),
        ));
    }
    if let Some((i, _)) = inputs
        .iter()
        .zip(&signature)
        .enumerate()
        .find(|(_, (m, role))| m.role() != **role)
    {
        return Err(Error::domain(
            "input roles",
            format!("{prop} expects {:?} at position {i}", signature[i]),
        ));
    }
    let ck = Checker { max_steps };
    let m = inputs;
    use Proposition as P;
    match prop {
        P::Transitivity => {
            if !(ck.eq(&m[0], &m[1], &m[2], &m[3])? && ck.eq(&m[2], &m[3], &m[4], &m[5])?) {
                return Ok(vacuous(prop));
            }
            ck.conclude(prop, (&m[0], &m[1]), (&m[4], &m[5]))
        }
        P::Fundamental => {
            let lhs = ck.anth(&m[0], &m[1])?;
            let rhs = ck.anth(&m[2], &m[3])?;
            let by_ratio = lhs.same_as(&rhs)?;
            let by_cross = cross_product_eq(&m[0], &m[1], &m[2], &m[3])?;
            Ok(PropReport {
                proposition: prop,
                hypotheses_hold: true,
                conclusion_holds: by_ratio == by_cross,
                lhs_cf: Some(lhs),
                rhs_cf: Some(rhs),
            })
        }
        P::V9Cancel | P::AreaV9 => {
            if !ck.eq(&m[0], &m[1], &m[0], &m[2])? {
                return Ok(vacuous(prop));
            }
            let lhs = ck.anth(&m[0], &m[1])?;
            let rhs = ck.anth(&m[0], &m[2])?;
            Ok(PropReport {
                proposition: prop,
                hypotheses_hold: true,
                conclusion_holds: m[1].value() == m[2].value(),
                lhs_cf: Some(lhs),
                rhs_cf: Some(rhs),
            })
        }
        P::Alternando | P::AreaAlternando => {
            if !ck.eq(&m[0], &m[1], &m[2], &m[3])? {
                return Ok(vacuous(prop));
            }
            ck.conclude(prop, (&m[0], &m[2]), (&m[1], &m[3]))
        }
        P::ExAequali | P::AreaExAequali | P::AreaMixedExAequali => {
            // a/b = d/e and b/c = e/f
            if !(ck.eq(&m[0], &m[1], &m[3], &m[4])? && ck.eq(&m[1], &m[2], &m[4], &m[5])?) {
                return Ok(vacuous(prop));
            }
            ck.conclude(prop, (&m[0], &m[2]), (&m[3], &m[5]))
        }
        P::Perturbed | P::AreaPerturbed | P::AreaMixedPerturbed => {
            // a/b = e/f and b/c = d/e
            if !(ck.eq(&m[0], &m[1], &m[4], &m[5])? && ck.eq(&m[1], &m[2], &m[3], &m[4])?) {
                return Ok(vacuous(prop));
            }
            ck.conclude(prop, (&m[0], &m[2]), (&m[3], &m[5]))
        }
        P::ComponendoPairs => {
            if !ck.eq(&m[0], &m[1], &m[2], &m[3])? {
                return Ok(vacuous(prop));
            }
            let num = m[0].add(&m[2])?;
            let den = m[1].add(&m[3])?;
            ck.conclude(prop, (&num, &den), (&m[0], &m[1]))
        }
        P::SeparandoPairs => {
            if !(ck.eq(&m[0], &m[1], &m[2], &m[3])? && m[0].gt(&m[2])? && m[1].gt(&m[3])?) {
                return Ok(vacuous(prop));
            }
            let num = m[0].sub(&m[2])?;
            let den = m[1].sub(&m[3])?;
            ck.conclude(prop, (&num, &den), (&m[0], &m[1]))
        }
        P::PlusUnit => {
            if !ck.eq(&m[0], &m[1], &m[2], &m[3])? {
                return Ok(vacuous(prop));
            }
            let left = m[0].add(&m[1])?;
            let right = m[2].add(&m[3])?;
            ck.conclude(prop, (&left, &m[1]), (&right, &m[3]))
        }
        P::MinusUnit => {
            // a − b > b and c − d > d
            let twice = |x: &Magnitude| x.add(x);
            if !(ck.eq(&m[0], &m[1], &m[2], &m[3])?
                && m[0].gt(&twice(&m[1])?)?
                && m[2].gt(&twice(&m[3])?)?)
            {
                return Ok(vacuous(prop));
            }
            let left = m[0].sub(&m[1])?;
            let right = m[2].sub(&m[3])?;
            ck.conclude(prop, (&left, &m[1]), (&right, &m[3]))
        }
        P::TopicsScaling => {
            let ac = Magnitude::rectangle(&m[0], &m[2])?;
            let bc = Magnitude::rectangle(&m[1], &m[2])?;
            ck.conclude(prop, (&ac, &bc), (&m[0], &m[1]))
        }
    }
}
