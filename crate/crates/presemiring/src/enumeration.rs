//! Brute-force verification of the constancy classifications: on a
//! finite carrier every function into Z_m is enumerated and the
//! modular ones are compared against a predicted shape, in both
//! directions. Symbolic carriers get seeded forcing checks instead of
//! enumeration.

use std::sync::Arc;

use crate::codomain::{CoValue, Codomain};
use crate::functions::{MappedFunction, Property, PropertyReport};
use crate::instances::FiniteKind;
use crate::structure::{FiniteStructure, Witness};
use crate::symbolic::{rng_for, SampleBudget, SymValue, SymbolicKind};
use crate::{Error, Result};

/// Enumerations larger than this are refused up front.
pub const ENUMERATION_BUDGET: u64 = 100_000_000;

/// All value tables S -> Z_m in lexicographic order: the table is
/// read as a big-endian base-m numeral, so the all-zero table comes
/// first and the last element varies fastest.
pub struct FunctionEnumeration {
    structure: Arc<FiniteStructure>,
    modulus: u64,
    total: u64,
    next: u64,
}

impl FunctionEnumeration {
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The value table at one lexicographic index.
    pub fn table_at(&self, index: u64) -> Vec<CoValue> {
        let n = self.structure.size();
        let mut digits = vec![0u64; n];
        let mut rem = index;
        for slot in (0..n).rev() {
            digits[slot] = rem % self.modulus;
            rem /= self.modulus;
        }
        digits.into_iter().map(CoValue::Mod).collect()
    }
}

impl Iterator for FunctionEnumeration {
    type Item = MappedFunction;

    fn next(&mut self) -> Option<MappedFunction> {
        if self.next >= self.total {
            return None;
        }
        let table = self.table_at(self.next);
        self.next += 1;
        Some(
            MappedFunction::from_values(
                self.structure.clone(),
                Codomain::IntegersMod(self.modulus),
                table,
            )
            .expect("enumerated tables are valid by construction"),
        )
    }
}

pub fn enumerate_functions(
    structure: Arc<FiniteStructure>,
    codomain: Codomain,
) -> Result<FunctionEnumeration> {
    let modulus = match codomain {
        Codomain::IntegersMod(m) => m,
        other => {
            return Err(Error::Usage(format!(
                "enumeration needs a zmod codomain, got {}",
                other.name()
            )))
        }
    };
    let n = structure.size();
    let total = (0..n)
        .try_fold(1u64, |acc, _| {
            acc.checked_mul(modulus).filter(|&t| t <= ENUMERATION_BUDGET)
        })
        .ok_or_else(|| {
            Error::Budget(format!(
                "{}^{} functions exceed the enumeration budget of {}",
                modulus, n, ENUMERATION_BUDGET
            ))
        })?;
    Ok(FunctionEnumeration {
        structure,
        modulus,
        total,
        next: 0,
    })
}

/// What the modular functions on a carrier are predicted to look
/// like.
#[derive(Clone, Debug, PartialEq)]
pub enum ClaimShape {
    /// Modular exactly when constant away from the listed indices,
    /// whose values are unconstrained.
    ConstantOutside(Vec<usize>),
    /// Every function is modular.
    AllModular,
    /// Additive exactly when modular with value zero at the carrier
    /// zero.
    BooleanCorollary,
}

#[derive(Clone, Debug)]
pub struct ClassificationClaim {
    pub kind: FiniteKind,
    pub shape: ClaimShape,
    pub label: &'static str,
}

impl ClassificationClaim {
    /// The predicted shape for each builtin kind, shipped as data.
    pub fn for_kind(kind: FiniteKind) -> ClassificationClaim {
        let (shape, label) = match kind {
            FiniteKind::BnI { .. } => {
                (ClaimShape::ConstantOutside(vec![0]), "constant-off-zero")
            }
            FiniteKind::Truncation { .. } | FiniteKind::ArcticWindow { .. } => {
                (ClaimShape::ConstantOutside(vec![0]), "constant-off-ninf")
            }
            FiniteKind::Bottleneck { .. } => (ClaimShape::AllModular, "all-modular"),
            FiniteKind::Powerset { .. } => {
                (ClaimShape::BooleanCorollary, "additive-iff-modular-zero")
            }
        };
        ClassificationClaim { kind, shape, label }
    }
}

/// Outcome of one classification run. The two directions are kept
/// separate: a failed forward direction means a modular function
/// escaped the predicted shape, a failed converse means the shape
/// overpromises.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub total: u64,
    pub modular: u64,
    /// FNV-1a over the modular tables in enumeration order.
    pub digest: u64,
    pub forward: PropertyReport,
    pub converse: PropertyReport,
    pub report: PropertyReport,
    /// Value table of the first function violating a direction.
    pub counterexample: Option<Vec<CoValue>>,
}

fn feed(digest: &mut u64, value: u64) {
    for byte in value.to_le_bytes() {
        *digest ^= byte as u64;
        *digest = digest.wrapping_mul(0x100000001b3);
    }
}

fn constancy_violation(table: &[CoValue], exceptions: &[usize]) -> Option<(usize, usize)> {
    let mut base: Option<usize> = None;
    for (i, _) in table.iter().enumerate() {
        if exceptions.contains(&i) {
            continue;
        }
        match base {
            None => base = Some(i),
            Some(b) => {
                if table[i] != table[b] {
                    return Some((b, i));
                }
            }
        }
    }
    None
}

pub fn classify_modular(
    structure: Arc<FiniteStructure>,
    codomain: Codomain,
    claim: &ClassificationClaim,
) -> Result<EnumerationResult> {
    if let ClaimShape::ConstantOutside(exceptions) = &claim.shape {
        for &e in exceptions {
            if e >= structure.size() {
                return Err(Error::Usage(format!(
                    "exception index {} out of range for {} elements",
                    e,
                    structure.size()
                )));
            }
        }
    }
    let stream = enumerate_functions(structure.clone(), codomain)?;
    let total = stream.total();
    let modulus = stream.modulus();
    let mut modular = 0u64;
    let mut digest: u64 = 0xcbf29ce484222325;
    let mut forward_checked = 0u64;
    let mut forward_fail: Option<(Witness, Vec<CoValue>)> = None;
    let mut converse_checked = 0u64;
    let mut converse_fail: Option<(Witness, Vec<CoValue>)> = None;

    match &claim.shape {
        ClaimShape::ConstantOutside(exceptions) => {
            for f in stream {
                let is_modular = f.check_property(Property::Modular)?.verdict.holds();
                let table = f.values().expect("finite function has a table");
                if is_modular {
                    modular += 1;
                    for v in table {
                        match v {
                            CoValue::Mod(d) => feed(&mut digest, *d),
                            _ => unreachable!("enumeration stays in zmod"),
                        }
                    }
                    forward_checked += 1;
                    if forward_fail.is_none() {
                        if let Some((b, i)) = constancy_violation(table, exceptions) {
                            forward_fail =
                                Some((Witness::Elements(vec![b, i]), table.to_vec()));
                        }
                    }
                }
            }
            // Converse: every table of the predicted shape must be
            // modular. Exception slots run through all values.
            let free = exceptions.len();
            let mut combos = 1u64;
            for _ in 0..=free {
                combos *= modulus;
            }
            for idx in 0..combos {
                let constant = idx / modulus.pow(free as u32);
                let mut table = vec![CoValue::Mod(constant); structure.size()];
                let mut rem = idx % modulus.pow(free as u32);
                for slot in (0..free).rev() {
                    table[exceptions[slot]] = CoValue::Mod(rem % modulus);
                    rem /= modulus;
                }
                let f = MappedFunction::from_values(
                    structure.clone(),
                    codomain,
                    table.clone(),
                )?;
                let report = f.check_property(Property::Modular)?;
                converse_checked += 1;
                if !report.verdict.holds() && converse_fail.is_none() {
                    let w = report.witness.expect("failed check carries a witness");
                    converse_fail = Some((w, table));
                }
            }
        }
        ClaimShape::AllModular => {
            for f in stream {
                let report = f.check_property(Property::Modular)?;
                forward_checked += 1;
                if report.verdict.holds() {
                    modular += 1;
                    for v in f.values().expect("finite function has a table") {
                        match v {
                            CoValue::Mod(d) => feed(&mut digest, *d),
                            _ => unreachable!("enumeration stays in zmod"),
                        }
                    }
                } else if forward_fail.is_none() {
                    let w = report.witness.expect("failed check carries a witness");
                    forward_fail =
                        Some((w, f.values().expect("finite function has a table").to_vec()));
                }
            }
            converse_checked = forward_checked;
            converse_fail = forward_fail.clone();
        }
        ClaimShape::BooleanCorollary => {
            let zero = structure.zero().ok_or_else(|| {
                Error::Usage("the corollary claim needs a carrier zero".to_string())
            })?;
            let zero_value = codomain.zero();
            for f in stream {
                let additive = f
                    .check_property(Property::FinitelyAdditive)?
                    .verdict
                    .holds();
                let modular_report = f.check_property(Property::Modular)?;
                let is_modular = modular_report.verdict.holds();
                let table = f.values().expect("finite function has a table");
                if is_modular {
                    modular += 1;
                    for v in table {
                        match v {
                            CoValue::Mod(d) => feed(&mut digest, *d),
                            _ => unreachable!("enumeration stays in zmod"),
                        }
                    }
                }
                let zero_ok = table[zero] == zero_value;
                forward_checked += 1;
                converse_checked += 1;
                if additive && !(is_modular && zero_ok) && forward_fail.is_none() {
                    let w = match modular_report.witness {
                        Some(w) => w,
                        None => Witness::Elements(vec![zero]),
                    };
                    forward_fail = Some((w, table.to_vec()));
                }
                if is_modular && zero_ok && !additive && converse_fail.is_none() {
                    let w = f
                        .check_property(Property::FinitelyAdditive)?
                        .witness
                        .expect("failed check carries a witness");
                    converse_fail = Some((w, table.to_vec()));
                }
            }
        }
    }

    let counterexample = forward_fail
        .as_ref()
        .or(converse_fail.as_ref())
        .map(|(_, t)| t.clone());
    let forward = match forward_fail {
        None => PropertyReport::holds("classification", forward_checked),
        Some((w, _)) => PropertyReport::fails("classification", w, forward_checked),
    };
    let converse = match converse_fail {
        None => PropertyReport::holds("template-modularity", converse_checked),
        Some((w, _)) => PropertyReport::fails("template-modularity", w, converse_checked),
    };
    let report = if forward.verdict.holds() && converse.verdict.holds() {
        PropertyReport::holds(claim.label, total)
    } else {
        let w = forward
            .witness
            .clone()
            .or_else(|| converse.witness.clone())
            .expect("a failed direction carries a witness");
        PropertyReport::fails(claim.label, w, total)
    };
    Ok(EnumerationResult {
        total,
        modular,
        digest,
        forward,
        converse,
        report,
        counterexample,
    })
}

/// The constancy statements checkable on symbolic carriers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstancyTheorem {
    /// Constant on the naturals; the value at ninf is free.
    Arctic,
    /// Constant on the positive naturals; 0 and pinf are free.
    Tropical,
    /// Constant everywhere.
    GMinPlus,
    /// Constant on the pairs; the value at ninf is free.
    Litvinov,
    /// Constant on the multiplicatively invertible elements.
    Semifield,
}

impl ConstancyTheorem {
    pub fn name(&self) -> &'static str {
        match self {
            ConstancyTheorem::Arctic => "arctic",
            ConstancyTheorem::Tropical => "tropical",
            ConstancyTheorem::GMinPlus => "gminplus",
            ConstancyTheorem::Litvinov => "litvinov",
            ConstancyTheorem::Semifield => "semifield",
        }
    }

    pub fn parse(s: &str) -> Result<ConstancyTheorem> {
        match s.trim().to_ascii_lowercase().as_str() {
            "arctic" => Ok(ConstancyTheorem::Arctic),
            "tropical" => Ok(ConstancyTheorem::Tropical),
            "gminplus" => Ok(ConstancyTheorem::GMinPlus),
            "litvinov" => Ok(ConstancyTheorem::Litvinov),
            "semifield" => Ok(ConstancyTheorem::Semifield),
            other => Err(Error::Usage(format!("unknown theorem {:?}", other))),
        }
    }
}

/// Seeded consistency check against a forced-constancy statement. A
/// sampled point either satisfies the forced equation f(x) = f(anchor)
/// or, at the theorem's forcing pair, the modular law itself; the
/// first violation is the witness. This samples consequences, it does
/// not prove the quantified statement.
pub fn sampled_constancy_check(
    f: &MappedFunction,
    theorem: ConstancyTheorem,
    budget: &SampleBudget,
) -> Result<PropertyReport> {
    let sym = f
        .symbolic()
        .ok_or_else(|| Error::Usage("forcing checks need a symbolic carrier".to_string()))?;
    let kind = sym.kind().clone();
    let applicable = matches!(
        (theorem, &kind),
        (ConstancyTheorem::Arctic, SymbolicKind::Arctic)
            | (ConstancyTheorem::Tropical, SymbolicKind::Tropical)
            | (ConstancyTheorem::GMinPlus, SymbolicKind::GMinPlus)
            | (ConstancyTheorem::Litvinov, SymbolicKind::Litvinov)
            | (ConstancyTheorem::Semifield, SymbolicKind::QNonNeg)
            | (ConstancyTheorem::Semifield, SymbolicKind::MaxPlusQ)
    );
    if !applicable {
        return Err(Error::Inapplicable(format!(
            "theorem {} does not cover the {} carrier",
            theorem.name(),
            sym.name()
        )));
    }
    let co = f.codomain();
    let anchor = match (theorem, &kind) {
        (ConstancyTheorem::Tropical, _) => SymValue::Nat(1),
        _ => sym.one().expect("covered carriers have a one"),
    };
    let anchor_value = f.at_value(&anchor)?;
    let free_note = match (theorem, &kind) {
        (ConstancyTheorem::Arctic, _) => "value at ninf free",
        (ConstancyTheorem::Tropical, _) => "values at 0 and pinf free",
        (ConstancyTheorem::GMinPlus, _) => "",
        (ConstancyTheorem::Litvinov, _) => "value at ninf free",
        (ConstancyTheorem::Semifield, SymbolicKind::QNonNeg) => "value at 0 free",
        (ConstancyTheorem::Semifield, _) => "value at ninf free",
    };
    let property = if free_note.is_empty() {
        "forced-constant".to_string()
    } else {
        format!("forced-constant ({})", free_note)
    };

    let in_region = |x: &SymValue| match theorem {
        ConstancyTheorem::Arctic => matches!(x, SymValue::Nat(_)),
        ConstancyTheorem::Tropical => matches!(x, SymValue::Nat(n) if *n >= 1),
        ConstancyTheorem::GMinPlus => true,
        ConstancyTheorem::Litvinov => matches!(x, SymValue::Pair(_, _)),
        ConstancyTheorem::Semifield => match x {
            SymValue::Rat(q) => match kind {
                SymbolicKind::QNonNeg => q.is_positive(),
                _ => true,
            },
            _ => false,
        },
    };
    let partner_for = |x: &SymValue| -> SymValue {
        match (theorem, x) {
            (ConstancyTheorem::GMinPlus, SymValue::Int(v)) => SymValue::Int(-v),
            (ConstancyTheorem::Litvinov, SymValue::Pair(a, b)) => {
                SymValue::Pair(a.neg(), b.neg())
            }
            (ConstancyTheorem::Semifield, SymValue::Rat(q)) => match kind {
                SymbolicKind::QNonNeg => match q.recip() {
                    Some(r) => SymValue::Rat(r),
                    None => SymValue::Rat(crate::rational::Rat::ONE),
                },
                _ => SymValue::Rat(q.neg()),
            },
            _ => anchor.clone(),
        }
    };

    let mut rng = rng_for(budget.seed);
    let mut checked = 0u64;
    for _ in 0..budget.trials {
        let x = sym.sample(&mut rng);
        let partner = partner_for(&x);
        if let (Ok(sum), Ok(prod)) = (sym.add(&x, &partner), sym.mul(&x, &partner)) {
            checked += 1;
            let lhs = co.op(&f.at_value(&sum)?, &f.at_value(&prod)?);
            let rhs = co.op(&f.at_value(&x)?, &f.at_value(&partner)?);
            if lhs != rhs {
                return Ok(PropertyReport::fails(
                    property,
                    Witness::Values(vec![x, partner]),
                    checked,
                ));
            }
        }
        if in_region(&x) {
            checked += 1;
            if f.at_value(&x)? != anchor_value {
                return Ok(PropertyReport::fails(
                    property,
                    Witness::Values(vec![x]),
                    checked,
                ));
            }
        }
    }
    Ok(PropertyReport::sampled(property, checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{SymbolicFn, Verdict};
    use crate::instances::make_finite;
    use crate::symbolic::SymbolicStructure;

    fn finite(kind: FiniteKind) -> Arc<FiniteStructure> {
        Arc::new(make_finite(kind).unwrap())
    }

    #[test]
    fn enumeration_is_lexicographic_and_counted() {
        let s = finite(FiniteKind::Powerset { atoms: 2 });
        let e = enumerate_functions(s.clone(), Codomain::IntegersMod(3)).unwrap();
        assert_eq!(e.total(), 81);
        assert_eq!(
            e.table_at(0),
            vec![CoValue::Mod(0); 4],
            "all-zero table first"
        );
        assert_eq!(
            e.table_at(1),
            vec![
                CoValue::Mod(0),
                CoValue::Mod(0),
                CoValue::Mod(0),
                CoValue::Mod(1)
            ],
            "last element varies fastest"
        );
        assert_eq!(e.table_at(80), vec![CoValue::Mod(2); 4]);
        let tables: Vec<_> = e.collect();
        assert_eq!(tables.len(), 81);

        let t = finite(FiniteKind::Truncation { k: 3 });
        let e = enumerate_functions(t, Codomain::IntegersMod(2)).unwrap();
        assert_eq!(e.total(), 32);
    }

    #[test]
    fn enumeration_budget_and_codomain_are_enforced() {
        let s = finite(FiniteKind::Powerset { atoms: 4 });
        assert!(matches!(
            enumerate_functions(s.clone(), Codomain::IntegersMod(5)),
            Err(Error::Budget(_))
        ));
        assert!(matches!(
            enumerate_functions(s, Codomain::Integers),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn bni_modular_functions_are_constant_off_zero() {
        let kind = FiniteKind::BnI { n: 5, i: 2 };
        let s = finite(kind);
        let claim = ClassificationClaim::for_kind(kind);
        let r = classify_modular(s.clone(), Codomain::IntegersMod(3), &claim).unwrap();
        assert_eq!(r.total, 243);
        assert_eq!(r.modular, 9);
        assert_eq!(r.report.verdict, Verdict::Holds);
        assert_eq!(r.forward.verdict, Verdict::Holds);
        assert_eq!(r.converse.verdict, Verdict::Holds);
        assert!(r.counterexample.is_none());
        let again = classify_modular(s, Codomain::IntegersMod(3), &claim).unwrap();
        assert_eq!(r.digest, again.digest, "digest is deterministic");
    }

    #[test]
    fn truncation_modular_functions_are_constant_off_ninf() {
        let kind = FiniteKind::Truncation { k: 3 };
        let claim = ClassificationClaim::for_kind(kind);
        let r = classify_modular(finite(kind), Codomain::IntegersMod(2), &claim).unwrap();
        assert_eq!(r.total, 32);
        assert_eq!(r.modular, 4);
        assert_eq!(r.report.verdict, Verdict::Holds);
    }

    #[test]
    fn every_bottleneck_function_is_modular() {
        let kind = FiniteKind::Bottleneck { n: 4 };
        let claim = ClassificationClaim::for_kind(kind);
        let r = classify_modular(finite(kind), Codomain::IntegersMod(5), &claim).unwrap();
        assert_eq!(r.total, 625);
        assert_eq!(r.modular, 625);
        assert_eq!(r.report.verdict, Verdict::Holds);
    }

    #[test]
    fn boolean_carrier_ties_additivity_to_modularity() {
        let kind = FiniteKind::Powerset { atoms: 2 };
        let claim = ClassificationClaim::for_kind(kind);
        let r = classify_modular(finite(kind), Codomain::IntegersMod(4), &claim).unwrap();
        assert_eq!(r.total, 256);
        // Modular functions are additive functions plus a constant.
        assert_eq!(r.modular, 64);
        assert_eq!(r.forward.verdict, Verdict::Holds);
        assert_eq!(r.converse.verdict, Verdict::Holds);
        assert_eq!(r.report.verdict, Verdict::Holds);
    }

    #[test]
    fn a_wrong_claim_is_refuted_with_a_counterexample() {
        // Pretend every bottleneck function is constant: the forward
        // direction must fail and name a non-constant modular table.
        let kind = FiniteKind::Bottleneck { n: 3 };
        let claim = ClassificationClaim {
            kind,
            shape: ClaimShape::ConstantOutside(vec![]),
            label: "all-constant",
        };
        let r = classify_modular(finite(kind), Codomain::IntegersMod(2), &claim).unwrap();
        assert_eq!(r.forward.verdict, Verdict::Fails);
        assert_eq!(r.report.verdict, Verdict::Fails);
        let table = r.counterexample.expect("refutation carries a table");
        assert!(matches!(
            &r.forward.witness,
            Some(Witness::Elements(w)) if table[w[0]] != table[w[1]]
        ));
    }

    fn sym_fn(kind: SymbolicKind, co: Codomain, rule: SymbolicFn) -> MappedFunction {
        MappedFunction::rule(SymbolicStructure::new(kind), co, rule).unwrap()
    }

    #[test]
    fn arctic_split_is_consistent_with_forcing() {
        let f = sym_fn(
            SymbolicKind::Arctic,
            Codomain::Integers,
            SymbolicFn::SplitAtNegInf {
                at_ninf: CoValue::Int(7),
                elsewhere: CoValue::Int(3),
            },
        );
        let r =
            sampled_constancy_check(&f, ConstancyTheorem::Arctic, &SampleBudget::new(2000, 11))
                .unwrap();
        assert_eq!(r.verdict, Verdict::HoldsOnSample);
        assert!(r.property.contains("ninf free"));
    }

    #[test]
    fn tropical_split_is_consistent_with_forcing() {
        let f = sym_fn(
            SymbolicKind::Tropical,
            Codomain::Integers,
            SymbolicFn::TropicalSplit {
                at_zero: CoValue::Int(5),
                on_pos: CoValue::Int(2),
                at_pinf: CoValue::Int(9),
            },
        );
        let r = sampled_constancy_check(
            &f,
            ConstancyTheorem::Tropical,
            &SampleBudget::new(2000, 12),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::HoldsOnSample);
    }

    #[test]
    fn gminplus_identity_is_refuted_at_a_mirror_pair() {
        let f = sym_fn(
            SymbolicKind::GMinPlus,
            Codomain::Integers,
            SymbolicFn::Identity,
        );
        let r = sampled_constancy_check(
            &f,
            ConstancyTheorem::GMinPlus,
            &SampleBudget::new(2000, 13),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        // The witness re-evaluates to a violation of the law.
        match r.witness {
            Some(Witness::Values(vals)) => {
                let sym = SymbolicStructure::new(SymbolicKind::GMinPlus);
                match vals.as_slice() {
                    [x, p] => {
                        let lhs_sum = f.at_value(&sym.add(x, p).unwrap()).unwrap();
                        let lhs_prod = f.at_value(&sym.mul(x, p).unwrap()).unwrap();
                        let lhs = Codomain::Integers.op(&lhs_sum, &lhs_prod);
                        let rhs = Codomain::Integers
                            .op(&f.at_value(x).unwrap(), &f.at_value(p).unwrap());
                        assert_ne!(lhs, rhs);
                    }
                    [x] => {
                        assert_ne!(
                            f.at_value(x).unwrap(),
                            f.at_value(&SymValue::Int(0)).unwrap()
                        );
                    }
                    other => panic!("unexpected witness arity {}", other.len()),
                }
            }
            other => panic!("unexpected witness {:?}", other),
        }
    }

    #[test]
    fn litvinov_constants_pass_and_parity_fails_on_the_semifield() {
        let c = sym_fn(
            SymbolicKind::Litvinov,
            Codomain::Integers,
            SymbolicFn::Constant(CoValue::Int(5)),
        );
        let r = sampled_constancy_check(
            &c,
            ConstancyTheorem::Litvinov,
            &SampleBudget::new(2000, 14),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::HoldsOnSample);

        let parity = sym_fn(
            SymbolicKind::QNonNeg,
            Codomain::IntegersMod(2),
            SymbolicFn::NumeratorParity,
        );
        let r = sampled_constancy_check(
            &parity,
            ConstancyTheorem::Semifield,
            &SampleBudget::new(2000, 15),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        assert!(r.witness.is_some());
    }

    #[test]
    fn maxplus_split_is_consistent_with_forcing() {
        let f = sym_fn(
            SymbolicKind::MaxPlusQ,
            Codomain::Rationals,
            SymbolicFn::SplitAtNegInf {
                at_ninf: CoValue::Rat(crate::rational::Rat::new(3, 2)),
                elsewhere: CoValue::Rat(crate::rational::Rat::new(-1, 3)),
            },
        );
        let r = sampled_constancy_check(
            &f,
            ConstancyTheorem::Semifield,
            &SampleBudget::new(2000, 16),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::HoldsOnSample);
    }

    #[test]
    fn theorems_reject_foreign_carriers() {
        let f = sym_fn(
            SymbolicKind::Tropical,
            Codomain::Integers,
            SymbolicFn::Constant(CoValue::Int(1)),
        );
        assert!(matches!(
            sampled_constancy_check(&f, ConstancyTheorem::Arctic, &SampleBudget::new(10, 1)),
            Err(Error::Inapplicable(_))
        ));
    }
}
