//! Running the anthyphairesis of a relation to completion.
//!
//! Excess states are remembered as they appear; since the discriminant never
//! changes and only finitely many excess triples share it, some state must
//! come back, and the quotients between its two visits form the period.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arith::{isqrt, Int};
use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::form::{self, minimal_form, FormKind, MinimalForm, QuadraticForm};
use crate::surd::QuadSurd;

pub const DEFAULT_MAX_STEPS: usize = 10_000;

/// Record of an expansion: `states[i]` is the relation from which
/// `quotients[offset + i]` was taken.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpansionTrace {
    pub quotients: Vec<Int>,
    pub states: Vec<QuadraticForm>,
    /// Indices into `states` of the first and second visit of the repeated state.
    pub repeat_at: Option<(usize, usize)>,
    /// Leading quotients produced without a relation (the `0` of a ratio below 1).
    pub offset: usize,
}

enum Source {
    Form(QuadraticForm),
    Euclid(Int, Int),
    Done,
}

/// Incremental anthyphairesis, one quotient per call to [`Expander::next_quotient`].
pub struct Expander {
    source: Source,
    pending_zero: bool,
    trace: ExpansionTrace,
    seen: HashMap<QuadraticForm, usize>,
    finished: bool,
}

impl Expander {
    /// Expansion of the tracked root of `form`, which must exceed 1.
    pub fn for_form(form: &QuadraticForm) -> Result<Self> {
        if !form.root_exceeds_one() {
            return Err(Error::domain(
                "designated root > 1",
                format!("cannot expand {form}"),
            ));
        }
        let source = if form.has_square_disc() {
            let disc = form.disc();
            let root = isqrt(&disc)?;
            let num = match form.kind {
                FormKind::Excess | FormKind::Defect => &form.b + root,
                FormKind::DefectLesser => &form.b - root,
                FormKind::Mixed => root - &form.b,
            };
            Source::Euclid(num, Int::from(2u32) * &form.a)
        } else {
            Source::Form(form.clone())
        };
        Ok(Self::with_source(source, false))
    }

    /// Expansion of a positive value; values below 1 lead with quotient 0.
    pub fn for_value(x: &QuadSurd) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::domain("x > 0", format!("cannot expand {x}")));
        }
        if let Some(r) = x.to_rational() {
            let source = Source::Euclid(r.numer().clone(), r.denom().clone());
            return Ok(Self::with_source(source, false));
        }
        let one = QuadSurd::from_int(Int::one());
        let (target, pending_zero) = if x.sub(&one)?.sign() > 0 {
            (x.clone(), false)
        } else {
            (x.recip()?, true)
        };
        match minimal_form(&target)? {
            MinimalForm::Form(f) => Ok(Self::with_source(Source::Form(f), pending_zero)),
            MinimalForm::Rational(_) => unreachable!("irrational input"),
        }
    }

    fn with_source(source: Source, pending_zero: bool) -> Self {
        Expander {
            source,
            pending_zero,
            trace: ExpansionTrace {
                offset: usize::from(pending_zero),
                ..ExpansionTrace::default()
            },
            seen: HashMap::new(),
            finished: false,
        }
    }

    pub fn is_finished(&self) -> bool {
        self.finished
    }

    pub fn trace(&self) -> &ExpansionTrace {
        &self.trace
    }

    /// Next quotient, or `None` once the expansion is complete (finite end
    /// reached or period closed).
    pub fn next_quotient(&mut self) -> Result<Option<Int>> {
        if self.pending_zero {
            self.pending_zero = false;
            self.trace.quotients.push(Int::zero());
            return Ok(Some(Int::zero()));
        }
        match std::mem::replace(&mut self.source, Source::Done) {
            Source::Done => {
                self.finished = true;
                Ok(None)
            }
            Source::Euclid(m, n) => {
                if n.is_zero() {
                    self.finished = true;
                    return Ok(None);
                }
                let (q, r) = num_integer::Integer::div_rem(&m, &n);
                self.source = Source::Euclid(n, r);
                self.trace.quotients.push(q.clone());
                Ok(Some(q))
            }
            Source::Form(f) => {
                let index = self.trace.states.len();
                if f.kind == FormKind::Excess {
                    if let Some(&first) = self.seen.get(&f) {
                        self.trace.states.push(f);
                        self.trace.repeat_at = Some((first, index));
                        self.finished = true;
                        return Ok(None);
                    }
                    self.seen.insert(f.clone(), index);
                }
                let step = form::step(&f)?;
                if f.kind == FormKind::Excess && step.next.disc() != f.disc() {
                    return Err(Error::Invariant(format!(
                        "discriminant changed from {} to {}",
                        f.disc(),
                        step.next.disc()
                    )));
                }
                self.trace.states.push(f);
                self.trace.quotients.push(step.quotient.clone());
                self.source = Source::Form(step.next);
                Ok(Some(step.quotient))
            }
        }
    }

    /// Drives the expansion for at most `max_steps` quotients.
    pub fn run(mut self, max_steps: usize) -> Result<(ContinuedFraction, ExpansionTrace)> {
        while !self.finished {
            if self.trace.quotients.len() >= max_steps {
                let cf = ContinuedFraction::truncated(self.trace.quotients.clone());
                return Ok((cf, self.trace));
            }
            self.next_quotient()?;
        }
        let cf = self.result();
        Ok((cf, self.trace))
    }

    /// Canonical expansion of a finished run.
    pub fn result(&self) -> ContinuedFraction {
        debug_assert!(self.finished);
        let t = &self.trace;
        match t.repeat_at {
            Some((first, second)) => {
                let start = t.offset + first;
                let end = t.offset + second;
                ContinuedFraction::periodic(
                    t.quotients[..start].to_vec(),
                    t.quotients[start..end].to_vec(),
                )
            }
            None => ContinuedFraction::finite(t.quotients.clone()),
        }
    }
}

/// Expansion of the tracked root of `form` (> 1). Square discriminants fall
/// back to Euclid on the exact rational root.
pub fn run_anthyphairesis(
    form: &QuadraticForm,
    max_steps: usize,
) -> Result<(ContinuedFraction, ExpansionTrace)> {
    Expander::for_form(form)?.run(max_steps)
}

/// Expansion of any positive value through the relation engine.
pub fn expand_value(x: &QuadSurd, max_steps: usize) -> Result<(ContinuedFraction, ExpansionTrace)> {
    Expander::for_value(x)?.run(max_steps)
}
