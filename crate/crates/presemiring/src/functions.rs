//! Functions from a carrier into a codomain, with the additivity,
//! modularity, and probability checks that classify them.
//!
//! A function over a finite carrier stores its full value table and is
//! checked exhaustively. A function over a symbolic carrier stores a
//! closed-form rule and is checked on seeded samples.

use std::sync::Arc;

use crate::codomain::{CoValue, Codomain};
use crate::dedekind::ModularSpec;
use crate::rational::Rat;
use crate::structure::{FiniteStructure, Witness};
use crate::symbolic::{rng_for, SampleBudget, SymValue, SymbolicKind, SymbolicStructure};
use crate::{Error, Result};

/// A checkable property of a mapped function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    /// f(s + t) = f(s) + f(t) whenever st = 0.
    FinitelyAdditive,
    /// f(s + t) + f(st) = f(s) + f(t) for all pairs.
    Modular,
    /// f(1) = 1.
    Normalized,
    /// Non-negative, normalized, and finitely additive, into an
    /// ordered ring.
    Probability,
}

impl Property {
    pub fn name(&self) -> &'static str {
        match self {
            Property::FinitelyAdditive => "finitely_additive",
            Property::Modular => "modular",
            Property::Normalized => "normalized",
            Property::Probability => "probability",
        }
    }

    pub fn parse(s: &str) -> Result<Property> {
        match s.trim() {
            "finitely_additive" | "finitely-additive" | "additive" => {
                Ok(Property::FinitelyAdditive)
            }
            "modular" => Ok(Property::Modular),
            "normalized" => Ok(Property::Normalized),
            "probability" => Ok(Property::Probability),
            other => Err(Error::Usage(format!("unknown property {:?}", other))),
        }
    }
}

/// Outcome of a property or theorem check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Established for every tuple in range.
    Holds,
    /// Established on every sampled tuple; not a proof.
    HoldsOnSample,
    /// Refuted; a witness accompanies this verdict.
    Fails,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::HoldsOnSample => "holds-on-sample",
            Verdict::Fails => "fails",
        }
    }

    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Fails)
    }
}

/// Result of one check: what was checked, how it went, and on failure
/// a witness tuple that re-evaluates to the violation.
#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub checked: u64,
}

impl PropertyReport {
    pub fn holds(property: impl Into<String>, checked: u64) -> PropertyReport {
        PropertyReport {
            property: property.into(),
            verdict: Verdict::Holds,
            witness: None,
            checked,
        }
    }

    pub fn sampled(property: impl Into<String>, checked: u64) -> PropertyReport {
        PropertyReport {
            property: property.into(),
            verdict: Verdict::HoldsOnSample,
            witness: None,
            checked,
        }
    }

    pub fn fails(property: impl Into<String>, witness: Witness, checked: u64) -> PropertyReport {
        PropertyReport {
            property: property.into(),
            verdict: Verdict::Fails,
            witness: Some(witness),
            checked,
        }
    }
}

/// The carrier a function is defined on.
#[derive(Clone, Debug)]
pub enum FunctionDomain {
    Finite(Arc<FiniteStructure>),
    Symbolic(SymbolicStructure),
}

/// Closed-form rules available over the symbolic carriers. Each rule
/// is tied to the carrier kinds it is defined on.
#[derive(Clone, Debug)]
pub enum SymbolicFn {
    /// The same value everywhere.
    Constant(CoValue),
    /// One value at the bottom element ninf, another everywhere else.
    /// Defined on carriers whose carrier set contains ninf.
    SplitAtNegInf { at_ninf: CoValue, elsewhere: CoValue },
    /// Three independent values on the min-plus naturals: at the
    /// multiplicative neutral 0, on the positive naturals, at the
    /// absorbing pinf.
    TropicalSplit {
        at_zero: CoValue,
        on_pos: CoValue,
        at_pinf: CoValue,
    },
    /// Sends each carrier value to itself. Defined where the carrier
    /// embeds into the codomain: the min-plus integers into the
    /// integers, the lcm-gcd naturals into the multiplicative
    /// rationals, the non-negative rationals into the rationals.
    Identity,
    /// Parity of the numerator of a non-negative rational, into the
    /// integers mod 2. A deliberately non-constant candidate.
    NumeratorParity,
    /// Evaluates an ideal-arithmetic value spec, reading a natural
    /// number as the ideal it generates.
    IdealSpec(ModularSpec),
    /// 0 on finite sets, 1 on cofinite ones.
    IndicatorCofinite,
    /// Length of a union of subintervals, normalized by the window
    /// length.
    IntervalLength,
}

#[derive(Clone, Debug)]
enum Repr {
    Table(Vec<CoValue>),
    Rule(SymbolicFn),
}

/// A total function from a carrier into a codomain.
#[derive(Clone, Debug)]
pub struct MappedFunction {
    domain: FunctionDomain,
    codomain: Codomain,
    repr: Repr,
}

impl MappedFunction {
    /// A finite-carrier function given by its full value table.
    pub fn from_values(
        structure: Arc<FiniteStructure>,
        codomain: Codomain,
        values: Vec<CoValue>,
    ) -> Result<MappedFunction> {
        if values.len() != structure.size() {
            return Err(Error::Structure(format!(
                "carrier has {} elements but {} values were given",
                structure.size(),
                values.len()
            )));
        }
        for v in &values {
            codomain.validate(v)?;
        }
        Ok(MappedFunction {
            domain: FunctionDomain::Finite(structure),
            codomain,
            repr: Repr::Table(values),
        })
    }

    /// The counting measure |A| on a subset carrier, embedded into the
    /// codomain as a repeated sum of 1.
    pub fn counting(structure: Arc<FiniteStructure>, codomain: Codomain) -> Result<MappedFunction> {
        if structure.atoms().is_none() {
            return Err(Error::Inapplicable(
                "the counting measure needs a subset carrier".to_string(),
            ));
        }
        let one = codomain.one();
        let values = (0..structure.size())
            .map(|mask| codomain.op_scale(&one, mask.count_ones() as u64))
            .collect();
        MappedFunction::from_values(structure, codomain, values)
    }

    /// The uniform probability p(A) = |A| / m on a subset carrier with
    /// m points.
    pub fn uniform(structure: Arc<FiniteStructure>) -> Result<MappedFunction> {
        let m = structure.atoms().ok_or_else(|| {
            Error::Inapplicable("the uniform probability needs a subset carrier".to_string())
        })?;
        let weights = vec![Rat::new(1, m as i128); m as usize];
        MappedFunction::stochastic(structure, &weights)
    }

    /// p(A) = sum of the weights of the points of A, for non-negative
    /// rational weights summing to 1.
    pub fn stochastic(structure: Arc<FiniteStructure>, weights: &[Rat]) -> Result<MappedFunction> {
        let m = structure.atoms().ok_or_else(|| {
            Error::Inapplicable("a point-weight probability needs a subset carrier".to_string())
        })?;
        if weights.len() != m as usize {
            return Err(Error::Usage(format!(
                "carrier has {} points but {} weights were given",
                m,
                weights.len()
            )));
        }
        let mut total = Rat::ZERO;
        for w in weights {
            if w.is_negative() {
                return Err(Error::Usage(format!("negative weight {}", w)));
            }
            total = total.add(w);
        }
        if total != Rat::ONE {
            return Err(Error::Usage(format!("weights sum to {}, not 1", total)));
        }
        let values = (0..structure.size())
            .map(|mask| {
                let mut acc = Rat::ZERO;
                for (k, w) in weights.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        acc = acc.add(w);
                    }
                }
                CoValue::Rat(acc)
            })
            .collect();
        MappedFunction::from_values(structure, Codomain::Rationals, values)
    }

    /// A symbolic-carrier function given by a closed-form rule. The
    /// rule must be defined on the carrier kind and land in the
    /// codomain.
    pub fn rule(
        structure: SymbolicStructure,
        codomain: Codomain,
        rule: SymbolicFn,
    ) -> Result<MappedFunction> {
        validate_rule(structure.kind(), &rule, &codomain)?;
        Ok(MappedFunction {
            domain: FunctionDomain::Symbolic(structure),
            codomain,
            repr: Repr::Rule(rule),
        })
    }

    pub fn domain(&self) -> &FunctionDomain {
        &self.domain
    }

    pub fn codomain(&self) -> Codomain {
        self.codomain
    }

    pub fn finite(&self) -> Option<&Arc<FiniteStructure>> {
        match &self.domain {
            FunctionDomain::Finite(s) => Some(s),
            FunctionDomain::Symbolic(_) => None,
        }
    }

    pub fn symbolic(&self) -> Option<&SymbolicStructure> {
        match &self.domain {
            FunctionDomain::Symbolic(s) => Some(s),
            FunctionDomain::Finite(_) => None,
        }
    }

    /// The full value table of a finite-carrier function.
    pub fn values(&self) -> Option<&[CoValue]> {
        match &self.repr {
            Repr::Table(t) => Some(t),
            Repr::Rule(_) => None,
        }
    }

    pub fn rule_kind(&self) -> Option<&SymbolicFn> {
        match &self.repr {
            Repr::Rule(r) => Some(r),
            Repr::Table(_) => None,
        }
    }

    /// Value at a finite-carrier element index.
    pub fn at(&self, index: usize) -> CoValue {
        match &self.repr {
            Repr::Table(t) => t[index],
            Repr::Rule(_) => unreachable!("symbolic functions are evaluated at values"),
        }
    }

    /// Value at a symbolic carrier value.
    pub fn at_value(&self, v: &SymValue) -> Result<CoValue> {
        let (sym, rule) = match (&self.domain, &self.repr) {
            (FunctionDomain::Symbolic(s), Repr::Rule(r)) => (s, r),
            _ => {
                return Err(Error::Usage(
                    "finite-carrier functions are evaluated at indices".to_string(),
                ))
            }
        };
        if !sym.contains(v) {
            return Err(Error::Structure(format!(
                "value {} is not in carrier {}",
                v,
                sym.name()
            )));
        }
        Ok(match rule {
            SymbolicFn::Constant(c) => *c,
            SymbolicFn::SplitAtNegInf { at_ninf, elsewhere } => {
                if matches!(v, SymValue::NegInf) {
                    *at_ninf
                } else {
                    *elsewhere
                }
            }
            SymbolicFn::TropicalSplit {
                at_zero,
                on_pos,
                at_pinf,
            } => match v {
                SymValue::Nat(0) => *at_zero,
                SymValue::Nat(_) => *on_pos,
                SymValue::PosInf => *at_pinf,
                _ => unreachable!("carrier membership already checked"),
            },
            SymbolicFn::Identity => match (sym.kind(), v) {
                (SymbolicKind::GMinPlus, SymValue::Int(n)) => CoValue::Int(*n as i128),
                (SymbolicKind::QNonNeg, SymValue::Rat(q)) => CoValue::Rat(*q),
                (SymbolicKind::LcmGcd, SymValue::Nat(n)) => {
                    CoValue::Rat(Rat::from_int(*n as i128))
                }
                _ => unreachable!("rule was validated against the kind"),
            },
            SymbolicFn::NumeratorParity => match v {
                SymValue::Rat(q) => CoValue::Mod(q.numer().rem_euclid(2) as u64),
                _ => unreachable!("rule was validated against the kind"),
            },
            SymbolicFn::IdealSpec(spec) => match v {
                SymValue::Nat(n) => spec.eval_generator(*n)?,
                _ => unreachable!("rule was validated against the kind"),
            },
            SymbolicFn::IndicatorCofinite => match v {
                SymValue::CoSet(c) => {
                    if c.is_cofinite() {
                        self.codomain.one()
                    } else {
                        self.codomain.zero()
                    }
                }
                _ => unreachable!("rule was validated against the kind"),
            },
            SymbolicFn::IntervalLength => match (sym.kind(), v) {
                (SymbolicKind::IntervalUnions { lo, hi }, SymValue::Unions(u)) => {
                    let span = hi.sub(lo);
                    CoValue::Rat(u.length().mul(&span.recip().expect("window has length")))
                }
                _ => unreachable!("rule was validated against the kind"),
            },
        })
    }

    /// Exhaustive property check; finite carriers only.
    pub fn check_property(&self, property: Property) -> Result<PropertyReport> {
        let s = match &self.domain {
            FunctionDomain::Finite(s) => s,
            FunctionDomain::Symbolic(_) => {
                return Err(Error::Usage(
                    "symbolic carriers are checked with an explicit sample budget".to_string(),
                ))
            }
        };
        let table = match &self.repr {
            Repr::Table(t) => t.as_slice(),
            Repr::Rule(_) => unreachable!("finite carriers use tables"),
        };
        let co = self.codomain;
        match property {
            Property::FinitelyAdditive => {
                let (checked, bad) = s
                    .scan_disjoint_pairs(|a, b| {
                        co.op(&table[a], &table[b]) == table[s.add(a, b)]
                    })
                    .map_err(|why| {
                        Error::Inapplicable(format!("additivity needs a zero: {}", why))
                    })?;
                Ok(match bad {
                    None => PropertyReport::holds(property.name(), checked),
                    Some((a, b)) => {
                        PropertyReport::fails(property.name(), Witness::pair(a, b), checked)
                    }
                })
            }
            Property::Modular => {
                let (checked, bad) = s.scan_all_pairs(|a, b| {
                    co.op(&table[s.add(a, b)], &table[s.mul(a, b)])
                        == co.op(&table[a], &table[b])
                });
                Ok(match bad {
                    None => PropertyReport::holds(property.name(), checked),
                    Some((a, b)) => {
                        PropertyReport::fails(property.name(), Witness::pair(a, b), checked)
                    }
                })
            }
            Property::Normalized => {
                let one = s.one().ok_or_else(|| {
                    Error::Inapplicable("normalization needs a declared one".to_string())
                })?;
                Ok(if table[one] == co.one() {
                    PropertyReport::holds(property.name(), 1)
                } else {
                    PropertyReport::fails(property.name(), Witness::Elements(vec![one]), 1)
                })
            }
            Property::Probability => {
                if !(co.is_ring() && co.is_ordered()) {
                    return Err(Error::Inapplicable(
                        "a probability function needs an ordered ring codomain".to_string(),
                    ));
                }
                let one = s.one().ok_or_else(|| {
                    Error::Inapplicable("a probability function needs a declared one".to_string())
                })?;
                let mut checked = 1u64;
                if table[one] != co.one() {
                    return Ok(PropertyReport::fails(
                        property.name(),
                        Witness::Elements(vec![one]),
                        checked,
                    ));
                }
                let zero_v = co.zero();
                for (i, v) in table.iter().enumerate() {
                    checked += 1;
                    if !co.le(&zero_v, v)? {
                        return Ok(PropertyReport::fails(
                            property.name(),
                            Witness::Elements(vec![i]),
                            checked,
                        ));
                    }
                }
                let (pairs, bad) = s
                    .scan_disjoint_pairs(|a, b| {
                        co.op(&table[a], &table[b]) == table[s.add(a, b)]
                    })
                    .map_err(|why| {
                        Error::Inapplicable(format!("additivity needs a zero: {}", why))
                    })?;
                checked += pairs;
                Ok(match bad {
                    None => PropertyReport::holds(property.name(), checked),
                    Some((a, b)) => {
                        PropertyReport::fails(property.name(), Witness::pair(a, b), checked)
                    }
                })
            }
        }
    }

    /// Sampled property check; symbolic carriers only. Draws are
    /// deterministic in the budget's seed.
    pub fn check_property_sampled(
        &self,
        property: Property,
        budget: SampleBudget,
    ) -> Result<PropertyReport> {
        let sym = match &self.domain {
            FunctionDomain::Symbolic(s) => s.clone(),
            FunctionDomain::Finite(_) => {
                return Err(Error::Usage(
                    "finite carriers are checked exhaustively".to_string(),
                ))
            }
        };
        let co = self.codomain;
        match property {
            Property::FinitelyAdditive => self.sampled_additivity(&sym, budget),
            Property::Modular => {
                let mut rng = rng_for(budget.seed);
                let mut checked = 0u64;
                for _ in 0..budget.trials {
                    let a = sym.sample(&mut rng);
                    let b = sym.sample(&mut rng);
                    let prod = match sym.mul(&a, &b) {
                        Ok(p) => p,
                        Err(_) => continue,
                    };
                    let sum = sym.add(&a, &b)?;
                    checked += 1;
                    let lhs = co.op(&self.at_value(&sum)?, &self.at_value(&prod)?);
                    let rhs = co.op(&self.at_value(&a)?, &self.at_value(&b)?);
                    if lhs != rhs {
                        return Ok(PropertyReport::fails(
                            property.name(),
                            Witness::Values(vec![a, b]),
                            checked,
                        ));
                    }
                }
                Ok(PropertyReport::sampled(property.name(), checked))
            }
            Property::Normalized => {
                let one = sym.one().ok_or_else(|| {
                    Error::Inapplicable("normalization needs a declared one".to_string())
                })?;
                Ok(if self.at_value(&one)? == co.one() {
                    PropertyReport::holds(property.name(), 1)
                } else {
                    PropertyReport::fails(property.name(), Witness::Values(vec![one]), 1)
                })
            }
            Property::Probability => {
                if !(co.is_ring() && co.is_ordered()) {
                    return Err(Error::Inapplicable(
                        "a probability function needs an ordered ring codomain".to_string(),
                    ));
                }
                let one = sym.one().ok_or_else(|| {
                    Error::Inapplicable("a probability function needs a declared one".to_string())
                })?;
                let mut checked = 1u64;
                if self.at_value(&one)? != co.one() {
                    return Ok(PropertyReport::fails(
                        property.name(),
                        Witness::Values(vec![one]),
                        checked,
                    ));
                }
                let zero_v = co.zero();
                let mut rng = rng_for(budget.seed);
                for _ in 0..budget.trials {
                    let v = sym.sample(&mut rng);
                    checked += 1;
                    if !co.le(&zero_v, &self.at_value(&v)?)? {
                        return Ok(PropertyReport::fails(
                            property.name(),
                            Witness::Values(vec![v]),
                            checked,
                        ));
                    }
                }
                let additive = self.sampled_additivity(&sym, SampleBudget {
                    seed: budget.seed.wrapping_add(1),
                    ..budget
                })?;
                checked += additive.checked;
                Ok(match additive.verdict {
                    Verdict::Fails => PropertyReport {
                        property: property.name().to_string(),
                        verdict: Verdict::Fails,
                        witness: additive.witness,
                        checked,
                    },
                    _ => PropertyReport::sampled(property.name(), checked),
                })
            }
        }
    }

    fn sampled_additivity(
        &self,
        sym: &SymbolicStructure,
        budget: SampleBudget,
    ) -> Result<PropertyReport> {
        let co = self.codomain;
        let zero = sym.zero().ok_or_else(|| {
            Error::Inapplicable("additivity needs a zero: no zero declared".to_string())
        })?;
        let mut rng = rng_for(budget.seed);
        let mut checked = 0u64;
        for t in 0..budget.trials {
            // Disjoint pairs can be rare under plain sampling, so a
            // slice of the trials pins one or both operands at zero.
            let mut a = sym.sample(&mut rng);
            let mut b = sym.sample(&mut rng);
            if t % 8 == 0 {
                a = zero.clone();
            }
            if t % 16 == 0 {
                b = zero.clone();
            }
            let prod = match sym.mul(&a, &b) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if !sym.eq(&prod, &zero) {
                continue;
            }
            let sum = sym.add(&a, &b)?;
            checked += 1;
            let lhs = self.at_value(&sum)?;
            let rhs = co.op(&self.at_value(&a)?, &self.at_value(&b)?);
            if lhs != rhs {
                return Ok(PropertyReport::fails(
                    Property::FinitelyAdditive.name(),
                    Witness::Values(vec![a, b]),
                    checked,
                ));
            }
        }
        Ok(PropertyReport::sampled(
            Property::FinitelyAdditive.name(),
            checked,
        ))
    }
}

fn validate_rule(kind: &SymbolicKind, rule: &SymbolicFn, co: &Codomain) -> Result<()> {
    use SymbolicKind as K;
    let reject = |what: &str| {
        Err(Error::Inapplicable(format!(
            "rule {} is not defined on this carrier and codomain",
            what
        )))
    };
    match rule {
        SymbolicFn::Constant(v) => co.validate(v),
        SymbolicFn::SplitAtNegInf { at_ninf, elsewhere } => {
            if !matches!(kind, K::Arctic | K::MaxPlusQ | K::Litvinov) {
                return reject("split-at-ninf");
            }
            co.validate(at_ninf)?;
            co.validate(elsewhere)
        }
        SymbolicFn::TropicalSplit {
            at_zero,
            on_pos,
            at_pinf,
        } => {
            if !matches!(kind, K::Tropical) {
                return reject("tropical-split");
            }
            co.validate(at_zero)?;
            co.validate(on_pos)?;
            co.validate(at_pinf)
        }
        SymbolicFn::Identity => match (kind, co) {
            (K::GMinPlus, Codomain::Integers) => Ok(()),
            (K::QNonNeg, Codomain::Rationals) => Ok(()),
            (K::LcmGcd, Codomain::PositiveRationalsUnderMultiplication) => Ok(()),
            _ => reject("identity"),
        },
        SymbolicFn::NumeratorParity => match (kind, co) {
            (K::QNonNeg, Codomain::IntegersMod(2)) => Ok(()),
            _ => reject("numerator-parity"),
        },
        SymbolicFn::IdealSpec(spec) => {
            if !matches!(kind, K::GcdMul) {
                return reject("ideal-spec");
            }
            if spec.codomain != *co {
                return Err(Error::Usage(format!(
                    "spec codomain {} does not match function codomain {}",
                    spec.codomain.name(),
                    co.name()
                )));
            }
            Ok(())
        }
        SymbolicFn::IndicatorCofinite => {
            if !matches!(kind, K::FiniteCofinite) {
                return reject("indicator-cofinite");
            }
            if co.zero() == co.one() {
                return reject("indicator-cofinite");
            }
            Ok(())
        }
        SymbolicFn::IntervalLength => match (kind, co) {
            (K::IntervalUnions { .. }, Codomain::Rationals) => Ok(()),
            _ => reject("interval-length"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::{IntervalUnionSet, RatInterval};

    fn subsets(atoms: u32) -> Arc<FiniteStructure> {
        Arc::new(FiniteStructure::powerset(atoms).unwrap())
    }

    #[test]
    fn counting_measure_is_additive_and_modular() {
        let f = MappedFunction::counting(subsets(3), Codomain::Integers).unwrap();
        let additive = f.check_property(Property::FinitelyAdditive).unwrap();
        assert_eq!(additive.verdict, Verdict::Holds);
        assert_eq!(additive.checked, 27); // disjoint pairs of a 3-point lattice
        let modular = f.check_property(Property::Modular).unwrap();
        assert_eq!(modular.verdict, Verdict::Holds);
        assert_eq!(modular.checked, 64);
        // |Omega| = 3 at the top, so the counting measure is not normalized.
        let normalized = f.check_property(Property::Normalized).unwrap();
        assert_eq!(normalized.verdict, Verdict::Fails);
    }

    #[test]
    fn stochastic_weights_give_a_probability() {
        let s = subsets(3);
        let w = [Rat::new(1, 2), Rat::new(1, 3), Rat::new(1, 6)];
        let p = MappedFunction::stochastic(s, &w).unwrap();
        assert_eq!(p.at(0b001), CoValue::Rat(Rat::new(1, 2)));
        assert_eq!(p.at(0b101), CoValue::Rat(Rat::new(2, 3)));
        assert_eq!(p.at(0b111), CoValue::Rat(Rat::ONE));
        let report = p.check_property(Property::Probability).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);

        let u = MappedFunction::uniform(subsets(2)).unwrap();
        assert_eq!(u.at(0b01), CoValue::Rat(Rat::new(1, 2)));
        assert_eq!(
            u.check_property(Property::Probability).unwrap().verdict,
            Verdict::Holds
        );
    }

    #[test]
    fn constant_function_is_modular_but_not_additive() {
        let s = subsets(2);
        let f = MappedFunction::from_values(
            s.clone(),
            Codomain::Integers,
            vec![CoValue::Int(5); 4],
        )
        .unwrap();
        assert_eq!(
            f.check_property(Property::Modular).unwrap().verdict,
            Verdict::Holds
        );
        let additive = f.check_property(Property::FinitelyAdditive).unwrap();
        assert_eq!(additive.verdict, Verdict::Fails);
        // The witness must re-evaluate to a violation.
        let Some(Witness::Elements(pair)) = additive.witness else {
            panic!("expected an element pair witness");
        };
        let (a, b) = (pair[0], pair[1]);
        assert_eq!(s.mul(a, b), s.zero().unwrap());
        assert_ne!(
            f.at(s.add(a, b)),
            Codomain::Integers.op(&f.at(a), &f.at(b))
        );
    }

    #[test]
    fn probability_needs_an_ordered_ring() {
        let f = MappedFunction::counting(subsets(2), Codomain::IntegersMod(4)).unwrap();
        assert!(matches!(
            f.check_property(Property::Probability),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn lcm_gcd_identity_is_additive_and_modular_on_sample() {
        let f = MappedFunction::rule(
            SymbolicStructure::new(SymbolicKind::LcmGcd),
            Codomain::PositiveRationalsUnderMultiplication,
            SymbolicFn::Identity,
        )
        .unwrap();
        let budget = SampleBudget::new(2000, 11);
        // lcm(a,b) * gcd(a,b) = a * b, stated multiplicatively.
        let modular = f.check_property_sampled(Property::Modular, budget).unwrap();
        assert_eq!(modular.verdict, Verdict::HoldsOnSample);
        // Disjoint here means coprime, where lcm(a,b) = a*b.
        let additive = f
            .check_property_sampled(Property::FinitelyAdditive, budget)
            .unwrap();
        assert_eq!(additive.verdict, Verdict::HoldsOnSample);
        assert!(additive.checked > 0);
    }

    #[test]
    fn max_plus_split_is_modular_and_additive_only_with_zero_at_ninf() {
        let arctic = SymbolicStructure::new(SymbolicKind::Arctic);
        let budget = SampleBudget::new(2000, 23);

        let free = MappedFunction::rule(
            arctic.clone(),
            Codomain::Integers,
            SymbolicFn::SplitAtNegInf {
                at_ninf: CoValue::Int(7),
                elsewhere: CoValue::Int(3),
            },
        )
        .unwrap();
        assert_eq!(
            free.check_property_sampled(Property::Modular, budget)
                .unwrap()
                .verdict,
            Verdict::HoldsOnSample
        );
        let additive = free
            .check_property_sampled(Property::FinitelyAdditive, budget)
            .unwrap();
        assert_eq!(additive.verdict, Verdict::Fails);
        let Some(Witness::Values(pair)) = additive.witness else {
            panic!("expected a value pair witness");
        };
        assert!(pair.contains(&SymValue::NegInf));

        let grounded = MappedFunction::rule(
            arctic,
            Codomain::Integers,
            SymbolicFn::SplitAtNegInf {
                at_ninf: CoValue::Int(0),
                elsewhere: CoValue::Int(3),
            },
        )
        .unwrap();
        assert_eq!(
            grounded
                .check_property_sampled(Property::FinitelyAdditive, budget)
                .unwrap()
                .verdict,
            Verdict::HoldsOnSample
        );
    }

    #[test]
    fn min_plus_three_way_split_is_modular() {
        let trop = SymbolicStructure::new(SymbolicKind::Tropical);
        let budget = SampleBudget::new(2000, 31);
        let f = MappedFunction::rule(
            trop.clone(),
            Codomain::Integers,
            SymbolicFn::TropicalSplit {
                at_zero: CoValue::Int(5),
                on_pos: CoValue::Int(2),
                at_pinf: CoValue::Int(9),
            },
        )
        .unwrap();
        assert_eq!(
            f.check_property_sampled(Property::Modular, budget)
                .unwrap()
                .verdict,
            Verdict::HoldsOnSample
        );
        assert_eq!(
            f.check_property_sampled(Property::FinitelyAdditive, budget)
                .unwrap()
                .verdict,
            Verdict::Fails
        );

        let grounded = MappedFunction::rule(
            trop,
            Codomain::Integers,
            SymbolicFn::TropicalSplit {
                at_zero: CoValue::Int(5),
                on_pos: CoValue::Int(2),
                at_pinf: CoValue::Int(0),
            },
        )
        .unwrap();
        assert_eq!(
            grounded
                .check_property_sampled(Property::FinitelyAdditive, budget)
                .unwrap()
                .verdict,
            Verdict::HoldsOnSample
        );
    }

    #[test]
    fn numerator_parity_is_not_modular() {
        let f = MappedFunction::rule(
            SymbolicStructure::new(SymbolicKind::QNonNeg),
            Codomain::IntegersMod(2),
            SymbolicFn::NumeratorParity,
        )
        .unwrap();
        let report = f
            .check_property_sampled(Property::Modular, SampleBudget::new(5000, 41))
            .unwrap();
        assert_eq!(report.verdict, Verdict::Fails);
        let Some(Witness::Values(pair)) = report.witness else {
            panic!("expected a value pair witness");
        };
        // Re-evaluate the witness by hand.
        let q = SymbolicStructure::new(SymbolicKind::QNonNeg);
        let co = Codomain::IntegersMod(2);
        let sum = q.add(&pair[0], &pair[1]).unwrap();
        let prod = q.mul(&pair[0], &pair[1]).unwrap();
        let lhs = co.op(&f.at_value(&sum).unwrap(), &f.at_value(&prod).unwrap());
        let rhs = co.op(
            &f.at_value(&pair[0]).unwrap(),
            &f.at_value(&pair[1]).unwrap(),
        );
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn interval_length_is_an_exact_probability() {
        let window = SymbolicKind::IntervalUnions {
            lo: Rat::ZERO,
            hi: Rat::ONE,
        };
        let f = MappedFunction::rule(
            SymbolicStructure::new(window),
            Codomain::Rationals,
            SymbolicFn::IntervalLength,
        )
        .unwrap();
        let whole = SymValue::Unions(IntervalUnionSet::from_parts(vec![RatInterval::closed(
            Rat::ZERO,
            Rat::ONE,
        )]));
        assert_eq!(f.at_value(&whole).unwrap(), CoValue::Rat(Rat::ONE));
        let quarter = SymValue::Unions(IntervalUnionSet::from_parts(vec![RatInterval::closed(
            Rat::new(1, 4),
            Rat::new(1, 2),
        )]));
        assert_eq!(f.at_value(&quarter).unwrap(), CoValue::Rat(Rat::new(1, 4)));
        let split = SymValue::Unions(IntervalUnionSet::from_parts(vec![
            RatInterval::new(Rat::ZERO, Rat::new(1, 4), true, false),
            RatInterval::new(Rat::new(1, 2), Rat::ONE, false, true),
        ]));
        assert_eq!(f.at_value(&split).unwrap(), CoValue::Rat(Rat::new(3, 4)));
        assert_eq!(
            f.check_property_sampled(Property::Probability, SampleBudget::new(800, 51))
                .unwrap()
                .verdict,
            Verdict::HoldsOnSample
        );
    }

    #[test]
    fn cofinite_indicator_is_additive_modular_and_normalized() {
        let f = MappedFunction::rule(
            SymbolicStructure::new(SymbolicKind::FiniteCofinite),
            Codomain::Integers,
            SymbolicFn::IndicatorCofinite,
        )
        .unwrap();
        let budget = SampleBudget::new(2000, 61);
        assert_eq!(
            f.check_property_sampled(Property::Modular, budget)
                .unwrap()
                .verdict,
            Verdict::HoldsOnSample
        );
        assert_eq!(
            f.check_property_sampled(Property::FinitelyAdditive, budget)
                .unwrap()
                .verdict,
            Verdict::HoldsOnSample
        );
        assert_eq!(
            f.check_property_sampled(Property::Normalized, budget)
                .unwrap()
                .verdict,
            Verdict::Holds
        );
        assert_eq!(
            f.check_property_sampled(Property::Probability, budget)
                .unwrap()
                .verdict,
            Verdict::HoldsOnSample
        );
    }

    #[test]
    fn rules_are_tied_to_their_carriers() {
        let trop = SymbolicStructure::new(SymbolicKind::Tropical);
        assert!(MappedFunction::rule(
            trop.clone(),
            Codomain::Integers,
            SymbolicFn::SplitAtNegInf {
                at_ninf: CoValue::Int(0),
                elsewhere: CoValue::Int(1),
            },
        )
        .is_err());
        assert!(MappedFunction::rule(
            SymbolicStructure::new(SymbolicKind::GMinPlus),
            Codomain::Rationals,
            SymbolicFn::Identity,
        )
        .is_err());
        assert!(MappedFunction::rule(
            SymbolicStructure::new(SymbolicKind::QNonNeg),
            Codomain::IntegersMod(3),
            SymbolicFn::NumeratorParity,
        )
        .is_err());
        // Indicator values 0 and 1 coincide in the multiplicative
        // rationals, so the rule is rejected there.
        assert!(MappedFunction::rule(
            SymbolicStructure::new(SymbolicKind::FiniteCofinite),
            Codomain::PositiveRationalsUnderMultiplication,
            SymbolicFn::IndicatorCofinite,
        )
        .is_err());
        // Constants still validate their value against the codomain.
        assert!(MappedFunction::rule(
            trop,
            Codomain::IntegersMod(5),
            SymbolicFn::Constant(CoValue::Mod(7)),
        )
        .is_err());
    }

    #[test]
    fn value_tables_are_validated() {
        let s = subsets(2);
        assert!(MappedFunction::from_values(
            s.clone(),
            Codomain::Integers,
            vec![CoValue::Int(0); 3],
        )
        .is_err());
        assert!(MappedFunction::from_values(
            s,
            Codomain::IntegersMod(3),
            vec![CoValue::Mod(0), CoValue::Mod(1), CoValue::Mod(2), CoValue::Mod(3)],
        )
        .is_err());
    }
}
