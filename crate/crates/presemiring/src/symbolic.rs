//! Symbolic carriers: infinite or parameterized structures checked by
//! seeded sampling.
//!
//! Everything here is exact except the root-sum family `Sh(h)`, which is
//! float-backed and compares with a relative tolerance of 1e-9. That
//! single instance is quarantined: nothing float-backed participates in
//! an exact verdict elsewhere in the crate.

use crate::intervals::{FiniteCofiniteSet, IntervalUnionSet, RatInterval};
use crate::rational::{gcd_u64, lcm_u64, Rat};
use crate::structure::{
    Axiom, AxiomReport, AxiomViolation, CheckMode, ClassKind, FlagReport, FlagResult, Witness,
};
use crate::{Error, Result};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

const REAL_TOLERANCE: f64 = 1e-9;

/// A value of some symbolic carrier.
#[derive(Clone, Debug, PartialEq)]
pub enum SymValue {
    Nat(u64),
    Int(i64),
    NegInf,
    PosInf,
    Rat(Rat),
    /// A pair of rationals, used by the componentwise max-plus plane.
    Pair(Rat, Rat),
    /// Float-backed value of the quarantined root-sum family.
    Real(f64),
    /// An integer interval [lo, hi] with lo <= 0 <= hi.
    Interval(i64, i64),
    CoSet(FiniteCofiniteSet),
    Unions(IntervalUnionSet),
}

impl fmt::Display for SymValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymValue::Nat(n) => write!(f, "{}", n),
            SymValue::Int(n) => write!(f, "{}", n),
            SymValue::NegInf => write!(f, "ninf"),
            SymValue::PosInf => write!(f, "pinf"),
            SymValue::Rat(r) => write!(f, "{}", r),
            SymValue::Pair(a, b) => write!(f, "({},{})", a, b),
            SymValue::Real(x) => write!(f, "{}", x),
            SymValue::Interval(a, b) => write!(f, "[{},{}]", a, b),
            SymValue::CoSet(s) => write!(f, "{}", s),
            SymValue::Unions(u) => write!(f, "{}", u),
        }
    }
}

/// The catalog of symbolic carriers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SymbolicKind {
    /// Naturals with plus infinity under min and plus.
    Tropical,
    /// Naturals with minus infinity under max and plus.
    Arctic,
    /// All integers under min and plus; no additive neutral exists.
    GMinPlus,
    /// Positive naturals under lcm and gcd.
    LcmGcd,
    /// Naturals under gcd and product: the ideal semiring of the
    /// integers in generator form.
    GcdMul,
    /// Pairs of rationals plus minus infinity, componentwise max and sum.
    Litvinov,
    /// Rationals with minus infinity under max and plus.
    MaxPlusQ,
    /// Non-negative rationals under plus and times.
    QNonNeg,
    /// Non-negative reals with a ⊕ b = (a^(1/h) + b^(1/h))^h and times.
    /// Float-backed; tolerance comparisons only.
    Sh { h: u32 },
    /// Integer intervals [a, b] with a <= 0 <= b; join is endpoint
    /// min and max, product is endpoint sum on both ends.
    IntervalE,
    /// The uncorrected interval product [a1+a2, a2+b2] as printed in
    /// its source. Escapes the carrier and fails commutativity; kept
    /// for demonstration only.
    IntervalELiteral,
    /// Finite or cofinite subsets of the naturals under union and
    /// intersection.
    FiniteCofinite,
    /// Finite unions of rational subintervals of [lo, hi] under union
    /// and intersection.
    IntervalUnions { lo: Rat, hi: Rat },
}

/// A symbolic carrier: operations are computed, verdicts are sampled.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicStructure {
    kind: SymbolicKind,
}

/// Sampling effort for a single sampled verdict.
#[derive(Clone, Copy, Debug)]
pub struct SampleBudget {
    pub trials: u64,
    pub seed: u64,
}

impl SampleBudget {
    pub fn new(trials: u64, seed: u64) -> SampleBudget {
        SampleBudget { trials, seed }
    }
}

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw below `n` from explicit 64-bit output, so streams stay
/// identical across library versions.
pub(crate) fn draw_below(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    debug_assert!(n > 0);
    rng.next_u64() % n
}

fn draw_rat(rng: &mut ChaCha8Rng, span: i64) -> Rat {
    let den = 1 + draw_below(rng, 8) as i128;
    let num = draw_below(rng, (2 * span + 1) as u64) as i128 - span as i128;
    Rat::new(num, den)
}

impl SymbolicStructure {
    pub fn new(kind: SymbolicKind) -> SymbolicStructure {
        SymbolicStructure { kind }
    }

    pub fn kind(&self) -> &SymbolicKind {
        &self.kind
    }

    pub fn name(&self) -> String {
        match &self.kind {
            SymbolicKind::Tropical => "tropical".to_string(),
            SymbolicKind::Arctic => "arctic".to_string(),
            SymbolicKind::GMinPlus => "gminplus".to_string(),
            SymbolicKind::LcmGcd => "lcmgcd".to_string(),
            SymbolicKind::GcdMul => "gcdmul".to_string(),
            SymbolicKind::Litvinov => "litvinov".to_string(),
            SymbolicKind::MaxPlusQ => "maxplusq".to_string(),
            SymbolicKind::QNonNeg => "qnonneg".to_string(),
            SymbolicKind::Sh { h } => format!("sh({})", h),
            SymbolicKind::IntervalE => "intervale".to_string(),
            SymbolicKind::IntervalELiteral => "intervale-literal".to_string(),
            SymbolicKind::FiniteCofinite => "finitecofinite".to_string(),
            SymbolicKind::IntervalUnions { lo, hi } => format!("intervalunions({},{})", lo, hi),
        }
    }

    /// Additive neutral, when one exists in the carrier.
    pub fn zero(&self) -> Option<SymValue> {
        match &self.kind {
            SymbolicKind::Tropical => Some(SymValue::PosInf),
            SymbolicKind::Arctic | SymbolicKind::Litvinov | SymbolicKind::MaxPlusQ => {
                Some(SymValue::NegInf)
            }
            SymbolicKind::GMinPlus => None,
            SymbolicKind::LcmGcd => Some(SymValue::Nat(1)),
            SymbolicKind::GcdMul => Some(SymValue::Nat(0)),
            SymbolicKind::QNonNeg => Some(SymValue::Rat(Rat::ZERO)),
            SymbolicKind::Sh { .. } => Some(SymValue::Real(0.0)),
            SymbolicKind::IntervalE | SymbolicKind::IntervalELiteral => {
                Some(SymValue::Interval(0, 0))
            }
            SymbolicKind::FiniteCofinite => Some(SymValue::CoSet(FiniteCofiniteSet::empty())),
            SymbolicKind::IntervalUnions { .. } => Some(SymValue::Unions(IntervalUnionSet::empty())),
        }
    }

    /// Multiplicative neutral, when one exists in the carrier.
    pub fn one(&self) -> Option<SymValue> {
        match &self.kind {
            SymbolicKind::Tropical | SymbolicKind::Arctic => Some(SymValue::Nat(0)),
            SymbolicKind::GMinPlus => Some(SymValue::Int(0)),
            SymbolicKind::LcmGcd => None,
            SymbolicKind::GcdMul => Some(SymValue::Nat(1)),
            SymbolicKind::Litvinov => Some(SymValue::Pair(Rat::ZERO, Rat::ZERO)),
            SymbolicKind::MaxPlusQ => Some(SymValue::Rat(Rat::ZERO)),
            SymbolicKind::QNonNeg => Some(SymValue::Rat(Rat::ONE)),
            SymbolicKind::Sh { .. } => Some(SymValue::Real(1.0)),
            SymbolicKind::IntervalE | SymbolicKind::IntervalELiteral => {
                Some(SymValue::Interval(0, 0))
            }
            SymbolicKind::FiniteCofinite => Some(SymValue::CoSet(FiniteCofiniteSet::everything())),
            SymbolicKind::IntervalUnions { lo, hi } => Some(SymValue::Unions(
                IntervalUnionSet::from_parts(vec![RatInterval::closed(*lo, *hi)]),
            )),
        }
    }

    /// Membership test.
    pub fn contains(&self, v: &SymValue) -> bool {
        match (&self.kind, v) {
            (SymbolicKind::Tropical, SymValue::Nat(_) | SymValue::PosInf) => true,
            (SymbolicKind::Arctic, SymValue::Nat(_) | SymValue::NegInf) => true,
            (SymbolicKind::GMinPlus, SymValue::Int(_)) => true,
            (SymbolicKind::LcmGcd, SymValue::Nat(n)) => *n >= 1,
            (SymbolicKind::GcdMul, SymValue::Nat(_)) => true,
            (SymbolicKind::Litvinov, SymValue::Pair(_, _) | SymValue::NegInf) => true,
            (SymbolicKind::MaxPlusQ, SymValue::Rat(_) | SymValue::NegInf) => true,
            (SymbolicKind::QNonNeg, SymValue::Rat(r)) => !r.is_negative(),
            (SymbolicKind::Sh { .. }, SymValue::Real(x)) => *x >= 0.0 && x.is_finite(),
            (
                SymbolicKind::IntervalE | SymbolicKind::IntervalELiteral,
                SymValue::Interval(a, b),
            ) => *a <= 0 && *b >= 0,
            (SymbolicKind::FiniteCofinite, SymValue::CoSet(_)) => true,
            (SymbolicKind::IntervalUnions { lo, hi }, SymValue::Unions(u)) => u.within(*lo, *hi),
            _ => false,
        }
    }

    fn membership(&self, v: &SymValue) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::Structure(format!(
                "value {} does not belong to carrier {}",
                v,
                self.name()
            )))
        }
    }

    /// Equality in the carrier: structural, except the float-backed
    /// family which compares within relative tolerance.
    pub fn eq(&self, a: &SymValue, b: &SymValue) -> bool {
        match (a, b) {
            (SymValue::Real(x), SymValue::Real(y)) => {
                (x - y).abs() <= REAL_TOLERANCE * x.abs().max(y.abs()).max(1.0)
            }
            _ => a == b,
        }
    }

    /// The carrier's addition.
    pub fn add(&self, a: &SymValue, b: &SymValue) -> Result<SymValue> {
        self.membership(a)?;
        self.membership(b)?;
        let v = match (&self.kind, a, b) {
            (SymbolicKind::Tropical, _, _) => match (a, b) {
                (SymValue::PosInf, x) | (x, SymValue::PosInf) => x.clone(),
                (SymValue::Nat(x), SymValue::Nat(y)) => SymValue::Nat(*x.min(y)),
                _ => unreachable!(),
            },
            (SymbolicKind::Arctic, _, _) => match (a, b) {
                (SymValue::NegInf, x) | (x, SymValue::NegInf) => x.clone(),
                (SymValue::Nat(x), SymValue::Nat(y)) => SymValue::Nat(*x.max(y)),
                _ => unreachable!(),
            },
            (SymbolicKind::GMinPlus, SymValue::Int(x), SymValue::Int(y)) => {
                SymValue::Int(*x.min(y))
            }
            (SymbolicKind::LcmGcd, SymValue::Nat(x), SymValue::Nat(y)) => SymValue::Nat(
                lcm_u64(*x, *y).ok_or_else(|| Error::Bound("lcm exceeds u64".to_string()))?,
            ),
            (SymbolicKind::GcdMul, SymValue::Nat(x), SymValue::Nat(y)) => {
                SymValue::Nat(gcd_u64(*x, *y))
            }
            (SymbolicKind::Litvinov, _, _) => match (a, b) {
                (SymValue::NegInf, x) | (x, SymValue::NegInf) => x.clone(),
                (SymValue::Pair(x1, y1), SymValue::Pair(x2, y2)) => {
                    SymValue::Pair(*x1.max(x2), *y1.max(y2))
                }
                _ => unreachable!(),
            },
            (SymbolicKind::MaxPlusQ, _, _) => match (a, b) {
                (SymValue::NegInf, x) | (x, SymValue::NegInf) => x.clone(),
                (SymValue::Rat(x), SymValue::Rat(y)) => SymValue::Rat(*x.max(y)),
                _ => unreachable!(),
            },
            (SymbolicKind::QNonNeg, SymValue::Rat(x), SymValue::Rat(y)) => SymValue::Rat(x.add(y)),
            (SymbolicKind::Sh { h }, SymValue::Real(x), SymValue::Real(y)) => {
                let h = *h as f64;
                SymValue::Real((x.powf(1.0 / h) + y.powf(1.0 / h)).powf(h))
            }
            (
                SymbolicKind::IntervalE | SymbolicKind::IntervalELiteral,
                SymValue::Interval(a1, b1),
                SymValue::Interval(a2, b2),
            ) => SymValue::Interval(*a1.min(a2), *b1.max(b2)),
            (SymbolicKind::FiniteCofinite, SymValue::CoSet(x), SymValue::CoSet(y)) => {
                SymValue::CoSet(x.union(y))
            }
            (SymbolicKind::IntervalUnions { .. }, SymValue::Unions(x), SymValue::Unions(y)) => {
                SymValue::Unions(x.union(y))
            }
            _ => unreachable!("membership already checked"),
        };
        Ok(v)
    }

    /// The carrier's multiplication.
    pub fn mul(&self, a: &SymValue, b: &SymValue) -> Result<SymValue> {
        self.membership(a)?;
        self.membership(b)?;
        let bound = || Error::Bound("product exceeds the carrier bound".to_string());
        let v = match (&self.kind, a, b) {
            (SymbolicKind::Tropical, _, _) => match (a, b) {
                (SymValue::PosInf, _) | (_, SymValue::PosInf) => SymValue::PosInf,
                (SymValue::Nat(x), SymValue::Nat(y)) => {
                    SymValue::Nat(x.checked_add(*y).ok_or_else(bound)?)
                }
                _ => unreachable!(),
            },
            (SymbolicKind::Arctic, _, _) => match (a, b) {
                (SymValue::NegInf, _) | (_, SymValue::NegInf) => SymValue::NegInf,
                (SymValue::Nat(x), SymValue::Nat(y)) => {
                    SymValue::Nat(x.checked_add(*y).ok_or_else(bound)?)
                }
                _ => unreachable!(),
            },
            (SymbolicKind::GMinPlus, SymValue::Int(x), SymValue::Int(y)) => {
                SymValue::Int(x.checked_add(*y).ok_or_else(bound)?)
            }
            (SymbolicKind::LcmGcd, SymValue::Nat(x), SymValue::Nat(y)) => {
                SymValue::Nat(gcd_u64(*x, *y))
            }
            (SymbolicKind::GcdMul, SymValue::Nat(x), SymValue::Nat(y)) => {
                SymValue::Nat(x.checked_mul(*y).ok_or_else(bound)?)
            }
            (SymbolicKind::Litvinov, _, _) => match (a, b) {
                (SymValue::NegInf, _) | (_, SymValue::NegInf) => SymValue::NegInf,
                (SymValue::Pair(x1, y1), SymValue::Pair(x2, y2)) => {
                    SymValue::Pair(x1.add(x2), y1.add(y2))
                }
                _ => unreachable!(),
            },
            (SymbolicKind::MaxPlusQ, _, _) => match (a, b) {
                (SymValue::NegInf, _) | (_, SymValue::NegInf) => SymValue::NegInf,
                (SymValue::Rat(x), SymValue::Rat(y)) => SymValue::Rat(x.add(y)),
                _ => unreachable!(),
            },
            (SymbolicKind::QNonNeg, SymValue::Rat(x), SymValue::Rat(y)) => SymValue::Rat(x.mul(y)),
            (SymbolicKind::Sh { .. }, SymValue::Real(x), SymValue::Real(y)) => {
                SymValue::Real(x * y)
            }
            (
                SymbolicKind::IntervalE,
                SymValue::Interval(a1, b1),
                SymValue::Interval(a2, b2),
            ) => SymValue::Interval(a1.checked_add(*a2).ok_or_else(bound)?, b1.checked_add(*b2).ok_or_else(bound)?),
            (
                SymbolicKind::IntervalELiteral,
                SymValue::Interval(a1, b1),
                SymValue::Interval(a2, b2),
            ) => {
                // The rule exactly as printed in its source; escapes the
                // carrier whenever a2 + b2 < 0. Kept for demonstration.
                let _ = b1;
                SymValue::Interval(
                    a1.checked_add(*a2).ok_or_else(bound)?,
                    a2.checked_add(*b2).ok_or_else(bound)?,
                )
            }
            (SymbolicKind::FiniteCofinite, SymValue::CoSet(x), SymValue::CoSet(y)) => {
                SymValue::CoSet(x.intersect(y))
            }
            (SymbolicKind::IntervalUnions { .. }, SymValue::Unions(x), SymValue::Unions(y)) => {
                SymValue::Unions(x.intersect(y))
            }
            _ => unreachable!("membership already checked"),
        };
        Ok(v)
    }

    /// Complement of an element, for the carriers where it is
    /// computable in closed form.
    pub fn complement_of(&self, v: &SymValue) -> Result<Option<SymValue>> {
        self.membership(v)?;
        match (&self.kind, v) {
            (SymbolicKind::FiniteCofinite, SymValue::CoSet(s)) => {
                Ok(Some(SymValue::CoSet(s.complement())))
            }
            (SymbolicKind::IntervalUnions { lo, hi }, SymValue::Unions(u)) => {
                Ok(Some(SymValue::Unions(u.complement_within(*lo, *hi))))
            }
            _ => Err(Error::Inapplicable(format!(
                "no closed-form complement on {}; supply candidates instead",
                self.name()
            ))),
        }
    }

    /// Complement search over a caller-supplied candidate set: returns
    /// the first candidate c with v * c = 0 and v + c = 1.
    pub fn complement_from_candidates(
        &self,
        v: &SymValue,
        candidates: &[SymValue],
    ) -> Result<Option<SymValue>> {
        let zero = self.zero().ok_or_else(|| {
            Error::Inapplicable(format!("carrier {} has no zero", self.name()))
        })?;
        let one = self.one().ok_or_else(|| {
            Error::Inapplicable(format!("carrier {} has no one", self.name()))
        })?;
        for c in candidates {
            if self.eq(&self.mul(v, c)?, &zero) && self.eq(&self.add(v, c)?, &one) {
                return Ok(Some(c.clone()));
            }
        }
        Ok(None)
    }

    /// Draws a carrier element. Deterministic for a fixed rng state.
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> SymValue {
        match &self.kind {
            SymbolicKind::Tropical => {
                if draw_below(rng, 16) == 0 {
                    SymValue::PosInf
                } else {
                    SymValue::Nat(draw_below(rng, 101))
                }
            }
            SymbolicKind::Arctic => {
                if draw_below(rng, 16) == 0 {
                    SymValue::NegInf
                } else {
                    SymValue::Nat(draw_below(rng, 101))
                }
            }
            SymbolicKind::GMinPlus => SymValue::Int(draw_below(rng, 201) as i64 - 100),
            SymbolicKind::LcmGcd => SymValue::Nat(1 + draw_below(rng, 1000)),
            SymbolicKind::GcdMul => {
                if draw_below(rng, 16) == 0 {
                    SymValue::Nat(0)
                } else {
                    SymValue::Nat(1 + draw_below(rng, 1000))
                }
            }
            SymbolicKind::Litvinov => {
                if draw_below(rng, 16) == 0 {
                    SymValue::NegInf
                } else {
                    let a = draw_rat(rng, 20);
                    let b = draw_rat(rng, 20);
                    SymValue::Pair(a, b)
                }
            }
            SymbolicKind::MaxPlusQ => {
                if draw_below(rng, 16) == 0 {
                    SymValue::NegInf
                } else {
                    SymValue::Rat(draw_rat(rng, 20))
                }
            }
            SymbolicKind::QNonNeg => {
                if draw_below(rng, 16) == 0 {
                    SymValue::Rat(Rat::ZERO)
                } else {
                    let den = 1 + draw_below(rng, 8) as i128;
                    let num = draw_below(rng, 41) as i128;
                    SymValue::Rat(Rat::new(num, den))
                }
            }
            SymbolicKind::Sh { .. } => {
                if draw_below(rng, 16) == 0 {
                    SymValue::Real(0.0)
                } else {
                    SymValue::Real(draw_below(rng, 1000) as f64 / 100.0)
                }
            }
            SymbolicKind::IntervalE | SymbolicKind::IntervalELiteral => {
                let a = -(draw_below(rng, 21) as i64);
                let b = draw_below(rng, 21) as i64;
                SymValue::Interval(a, b)
            }
            SymbolicKind::FiniteCofinite => {
                let mask = draw_below(rng, 1 << 16);
                let elems: Vec<u64> = (0..16).filter(|i| mask >> i & 1 == 1).collect();
                if draw_below(rng, 2) == 0 {
                    SymValue::CoSet(FiniteCofiniteSet::finite(elems))
                } else {
                    SymValue::CoSet(FiniteCofiniteSet::cofinite(elems))
                }
            }
            SymbolicKind::IntervalUnions { lo, hi } => {
                let span = hi.sub(lo);
                let k = draw_below(rng, 4);
                let mut parts = Vec::new();
                for _ in 0..k {
                    let mut ends = [Rat::ZERO; 2];
                    for e in &mut ends {
                        let den = 1 + draw_below(rng, 8) as i128;
                        let num = draw_below(rng, den as u64 + 1) as i128;
                        *e = lo.add(&span.mul(&Rat::new(num, den)));
                    }
                    let (a, b) = if ends[0] <= ends[1] {
                        (ends[0], ends[1])
                    } else {
                        (ends[1], ends[0])
                    };
                    parts.push(RatInterval::new(
                        a,
                        b,
                        draw_below(rng, 2) == 0,
                        draw_below(rng, 2) == 0,
                    ));
                }
                SymValue::Unions(IntervalUnionSet::from_parts(parts))
            }
        }
    }

    /// Sampled classification: every axiom layer checked on seeded
    /// samples, reported as holds-on-sample rather than proven.
    pub fn classify_sampled(&self, budget: SampleBudget) -> AxiomReport {
        let mut rng = rng_for(budget.seed);
        let mut violations: Vec<AxiomViolation> = Vec::new();
        let mut checked = 0u64;
        let mut structure_failed = false;

        let note = |violations: &mut Vec<AxiomViolation>,
                        axiom: Axiom,
                        vs: Vec<SymValue>,
                        spot: bool| {
            if violations.iter().all(|v| v.axiom != axiom) {
                violations.push(AxiomViolation {
                    axiom,
                    witness: Witness::Values(vs),
                    spot_check: spot,
                });
            }
        };

        for _ in 0..budget.trials {
            let a = self.sample(&mut rng);
            let b = self.sample(&mut rng);
            let c = self.sample(&mut rng);
            checked += 1;

            // Closure, both operations.
            let sum = self.add(&a, &b);
            let prod = self.mul(&a, &b);
            let closure_broken = match (&sum, &prod) {
                (Ok(s), Ok(p)) => !self.contains(s) || !self.contains(p),
                _ => true,
            };
            if closure_broken {
                note(
                    &mut violations,
                    Axiom::Closure,
                    vec![a.clone(), b.clone()],
                    structure_failed,
                );
                structure_failed = true;
                continue;
            }
            let (sum, prod) = (sum.unwrap(), prod.unwrap());

            let spot = structure_failed;
            if !self.eq(&sum, &self.add(&b, &a).unwrap_or(SymValue::NegInf)) {
                note(
                    &mut violations,
                    Axiom::AddCommutative,
                    vec![a.clone(), b.clone()],
                    spot,
                );
                structure_failed = true;
            }
            match self.mul(&b, &a) {
                Ok(rev) if self.eq(&prod, &rev) => {}
                _ => {
                    note(
                        &mut violations,
                        Axiom::MulCommutative,
                        vec![a.clone(), b.clone()],
                        spot,
                    );
                    structure_failed = true;
                }
            }

            let assoc = |op: &dyn Fn(&SymValue, &SymValue) -> Result<SymValue>| -> Option<bool> {
                let l = op(&op(&a, &b).ok()?, &c).ok()?;
                let r = op(&a, &op(&b, &c).ok()?).ok()?;
                Some(self.eq(&l, &r))
            };
            if assoc(&|x, y| self.add(x, y)) != Some(true) {
                note(
                    &mut violations,
                    Axiom::AddAssociative,
                    vec![a.clone(), b.clone(), c.clone()],
                    spot,
                );
                structure_failed = true;
            }
            if assoc(&|x, y| self.mul(x, y)) != Some(true) {
                note(
                    &mut violations,
                    Axiom::MulAssociative,
                    vec![a.clone(), b.clone(), c.clone()],
                    spot,
                );
                structure_failed = true;
            }

            let distrib = (|| -> Option<bool> {
                let l = self.mul(&a, &self.add(&b, &c).ok()?).ok()?;
                let r = self
                    .add(&self.mul(&a, &b).ok()?, &self.mul(&a, &c).ok()?)
                    .ok()?;
                Some(self.eq(&l, &r))
            })();
            if distrib != Some(true) {
                note(
                    &mut violations,
                    Axiom::Distributive,
                    vec![a.clone(), b.clone(), c.clone()],
                    spot,
                );
                structure_failed = true;
            }

            if let Some(z) = self.zero() {
                if !self.eq(&self.add(&z, &a).unwrap_or(SymValue::PosInf), &a) {
                    note(&mut violations, Axiom::ZeroNeutral, vec![a.clone()], spot);
                }
                match self.mul(&z, &a) {
                    Ok(p) if self.eq(&p, &z) => {}
                    _ => note(&mut violations, Axiom::ZeroAbsorbing, vec![a.clone()], spot),
                }
            }
            if let Some(o) = self.one() {
                if !self.eq(&self.mul(&o, &a).unwrap_or(SymValue::PosInf), &a) {
                    note(&mut violations, Axiom::OneNeutral, vec![a.clone()], spot);
                }
            }
        }

        let broken = |axiom: Axiom| violations.iter().any(|v| v.axiom == axiom);
        let class = if structure_failed {
            ClassKind::NotAStructure
        } else if self.zero().is_some() && !broken(Axiom::ZeroNeutral) && !broken(Axiom::ZeroAbsorbing)
        {
            let one_ok = self.one().is_some()
                && !broken(Axiom::OneNeutral)
                && self.one() != self.zero();
            if one_ok {
                ClassKind::Semiring
            } else {
                ClassKind::Hemiring
            }
        } else {
            ClassKind::PreSemiring
        };

        AxiomReport {
            class,
            violations,
            mode: CheckMode::Sampled {
                trials: budget.trials,
                seed: budget.seed,
            },
            flags: self.flags_sampled(budget),
            checked_tuples: checked,
        }
    }

    /// Sampled structural flags.
    pub fn flags_sampled(&self, budget: SampleBudget) -> FlagReport {
        let mut rng = rng_for(budget.seed.wrapping_add(1));
        let zero = self.zero();
        let one = self.one();
        let mut zerosumfree = zero
            .as_ref()
            .map(|_| FlagResult::HoldsOnSample)
            .unwrap_or(FlagResult::Inapplicable("no zero declared"));
        let mut entire = zero
            .as_ref()
            .map(|_| FlagResult::HoldsOnSample)
            .unwrap_or(FlagResult::Inapplicable("no zero declared"));
        let mut simple = one
            .as_ref()
            .map(|_| FlagResult::HoldsOnSample)
            .unwrap_or(FlagResult::Inapplicable("no one declared"));
        let mut idempotent = FlagResult::HoldsOnSample;

        for _ in 0..budget.trials {
            let a = self.sample(&mut rng);
            let b = self.sample(&mut rng);
            if let Some(z) = &zero {
                if matches!(zerosumfree, FlagResult::HoldsOnSample) {
                    if let Ok(s) = self.add(&a, &b) {
                        if self.eq(&s, z) && !(self.eq(&a, z) && self.eq(&b, z)) {
                            zerosumfree =
                                FlagResult::Fails(Witness::Values(vec![a.clone(), b.clone()]));
                        }
                    }
                }
                if matches!(entire, FlagResult::HoldsOnSample) {
                    if let Ok(p) = self.mul(&a, &b) {
                        if self.eq(&p, z) && !self.eq(&a, z) && !self.eq(&b, z) {
                            entire = FlagResult::Fails(Witness::Values(vec![a.clone(), b.clone()]));
                        }
                    }
                }
            }
            if let Some(o) = &one {
                if matches!(simple, FlagResult::HoldsOnSample) {
                    match self.add(&a, o) {
                        Ok(s) if self.eq(&s, o) => {}
                        _ => simple = FlagResult::Fails(Witness::Values(vec![a.clone()])),
                    }
                }
            }
            if matches!(idempotent, FlagResult::HoldsOnSample) {
                match self.mul(&a, &a) {
                    Ok(p) if self.eq(&p, &a) => {}
                    _ => idempotent = FlagResult::Fails(Witness::Values(vec![a.clone()])),
                }
            }
        }

        FlagReport {
            zerosumfree,
            entire,
            simple,
            multiplicatively_idempotent: idempotent,
        }
    }
}
