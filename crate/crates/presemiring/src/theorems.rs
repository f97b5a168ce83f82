//! The identity catalog and the theorem checks built on it. Every
//! check verifies its own hypotheses first and reports a hypothesis
//! failure as a distinct outcome from a refuted conclusion.

use std::sync::Arc;

use crate::codomain::CoValue;
use crate::complements::{
    comp_boolean_algebra, complemented_elements, disjointify, symdiff, CompOutcome, ComplementMap,
};
use crate::functions::{MappedFunction, Property, PropertyReport};
use crate::structure::{FiniteStructure, Witness};
use crate::{Error, Result};

/// The catalog of single-shot identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityId {
    /// f(t) = f(ts) + f(ts'); args (t, s), s complemented.
    C1,
    /// f(s dt) + 2 f(st) = f(s) + f(t) where dt is the symmetric
    /// difference; args (s, t), both complemented.
    C2,
    /// f(s) + f(s') = 1; args (s), s complemented.
    N1,
    /// f(s't') = 1 - f(s) - f(t) + f(st); args (s, t), both
    /// complemented, ring codomain.
    N2,
    /// 0 <= p(s) <= 1; args (s), ordered codomain.
    P1,
    /// p(ts) <= p(t); args (t, s), ordered codomain.
    P2,
    /// p(st) >= p(s) + p(t) - 1; args (s, t), ordered ring codomain.
    P3,
    /// f(x^m y^n) = f(xy) on simple carriers; args (x, y, m, n) with
    /// m, n >= 1.
    L1,
}

impl IdentityId {
    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::C1 => "c1",
            IdentityId::C2 => "c2",
            IdentityId::N1 => "n1",
            IdentityId::N2 => "n2",
            IdentityId::P1 => "p1",
            IdentityId::P2 => "p2",
            IdentityId::P3 => "p3",
            IdentityId::L1 => "l1",
        }
    }

    pub fn parse(s: &str) -> Result<IdentityId> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c1" => Ok(IdentityId::C1),
            "c2" => Ok(IdentityId::C2),
            "n1" => Ok(IdentityId::N1),
            "n2" => Ok(IdentityId::N2),
            "p1" => Ok(IdentityId::P1),
            "p2" => Ok(IdentityId::P2),
            "p3" => Ok(IdentityId::P3),
            "l1" => Ok(IdentityId::L1),
            other => Err(Error::Usage(format!("unknown identity {:?}", other))),
        }
    }

    /// Number of arguments. The last two arguments of l1 are
    /// exponents, not elements.
    pub fn arity(&self) -> usize {
        match self {
            IdentityId::N1 | IdentityId::P1 => 1,
            IdentityId::L1 => 4,
            _ => 2,
        }
    }
}

/// An identity evaluated at one argument tuple: both sides and the
/// verdict.
#[derive(Clone, Debug)]
pub struct IdentityOutcome {
    pub identity: IdentityId,
    pub lhs: CoValue,
    pub rhs: CoValue,
    pub report: PropertyReport,
}

/// Two evaluated sides of a theorem equation or bound.
#[derive(Clone, Debug)]
pub struct ValuesOutcome {
    pub lhs: CoValue,
    pub rhs: CoValue,
    pub report: PropertyReport,
}

/// Thm-level equivalence outcome: the named conditions, whether they
/// agree, and the condition breaking the agreement if not.
#[derive(Clone, Debug)]
pub struct EquivalenceOutcome {
    pub conditions: Vec<(String, bool)>,
    pub disagreeing: Option<String>,
    pub report: PropertyReport,
}

/// Distance table over a slice of complemented elements.
#[derive(Clone, Debug)]
pub struct SemiMetricOutcome {
    pub elements: Vec<usize>,
    pub table: Vec<Vec<CoValue>>,
    /// True when distinct elements are at nonzero distance.
    pub metric: bool,
    pub report: PropertyReport,
}

/// Total probability decomposition of p(s) over a partition.
#[derive(Clone, Debug)]
pub struct TotalProbabilityOutcome {
    pub direct: CoValue,
    pub decomposed: CoValue,
    pub report: PropertyReport,
}

/// A posterior together with the full posterior row it came from.
#[derive(Clone, Debug)]
pub struct BayesOutcome {
    pub posterior: CoValue,
    pub posteriors: Vec<CoValue>,
    pub report: PropertyReport,
}

/// Restriction of a function to the complemented elements.
#[derive(Clone, Debug)]
pub struct RestrictionOutcome {
    pub restriction: MappedFunction,
    /// Comp members in the original carrier's indexing, aligned with
    /// the restriction's carrier.
    pub carrier_elements: Vec<usize>,
    pub additive: PropertyReport,
    pub modular: PropertyReport,
    /// Present when the whole carrier is Boolean: both directions of
    /// the additive-iff-modular-with-zero equivalence for this f.
    pub corollary: Option<CorollaryAgreement>,
}

#[derive(Clone, Copy, Debug)]
pub struct CorollaryAgreement {
    pub additive: bool,
    pub modular_and_zero: bool,
    pub agree: bool,
}

fn finite_domain<'a>(f: &'a MappedFunction, what: &str) -> Result<&'a Arc<FiniteStructure>> {
    f.finite()
        .ok_or_else(|| Error::Usage(format!("{} needs a finite carrier", what)))
}

fn hyp(name: &str, detail: impl Into<String>) -> Error {
    Error::hypothesis(name, detail)
}

fn require_property(f: &MappedFunction, p: Property, theorem: &str) -> Result<PropertyReport> {
    let report = f
        .check_property(p)
        .map_err(|e| hyp(theorem, e.to_string()))?;
    if report.verdict.holds() {
        return Ok(report);
    }
    let detail = match (&report.witness, f.finite()) {
        (Some(w), s) => format!(
            "f is not {} (witness {})",
            p.name(),
            w.describe(s.map(|a| a.as_ref())).join(", ")
        ),
        (None, _) => format!("f is not {}", p.name()),
    };
    Err(hyp(theorem, detail))
}

fn require_zerosumfree(s: &FiniteStructure, theorem: &str) -> Result<()> {
    match s.zerosumfree_witness() {
        Ok(None) => Ok(()),
        Ok(Some(w)) => Err(hyp(
            theorem,
            format!(
                "carrier is not zerosumfree (witness {})",
                w.describe(Some(s)).join(", ")
            ),
        )),
        Err(why) => Err(hyp(theorem, format!("carrier is not zerosumfree: {}", why))),
    }
}

fn require_complemented(
    s: &FiniteStructure,
    m: &ComplementMap,
    x: usize,
    theorem: &str,
) -> Result<usize> {
    if x >= s.size() {
        return Err(Error::Usage(format!("element index {} out of range", x)));
    }
    m.of(x).ok_or_else(|| {
        hyp(
            theorem,
            format!("element {} is not complemented", s.element_name(x)),
        )
    })
}

fn require_one_plus_one(s: &FiniteStructure, m: &ComplementMap, theorem: &str) -> Result<()> {
    let one = s
        .one()
        .ok_or_else(|| hyp(theorem, "carrier has no one"))?;
    if m.is_complemented(s.add(one, one)) {
        Ok(())
    } else {
        Err(hyp(theorem, "1 + 1 is not complemented"))
    }
}

fn require_idempotent(s: &FiniteStructure, theorem: &str) -> Result<()> {
    if let Some(w) = s.idempotent_witness() {
        return Err(hyp(
            theorem,
            format!(
                "carrier is not multiplicatively idempotent (witness {})",
                w.describe(Some(s)).join(", ")
            ),
        ));
    }
    Ok(())
}

fn complements_for(s: &FiniteStructure, theorem: &str) -> Result<ComplementMap> {
    complemented_elements(s).map_err(|e| hyp(theorem, e.to_string()))
}

fn ordered(f: &MappedFunction, theorem: &str) -> Result<()> {
    if f.codomain().is_ordered() {
        Ok(())
    } else {
        Err(hyp(theorem, "codomain carries no order"))
    }
}

fn ring(f: &MappedFunction, theorem: &str) -> Result<()> {
    if f.codomain().is_ring() {
        Ok(())
    } else {
        Err(hyp(theorem, "codomain carries no ring multiplication"))
    }
}

/// Nonempty subsets of 0..n as bitmasks, ordered by size then
/// lexicographically by element list, so witnesses are deterministic.
fn subset_masks(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

fn check_elems(s: &FiniteStructure, elems: &[usize]) -> Result<()> {
    if elems.is_empty() {
        return Err(Error::Usage("need at least one element".to_string()));
    }
    if elems.len() > 20 {
        return Err(Error::Budget(format!(
            "subset enumeration over {} elements exceeds the 2^20 budget",
            elems.len()
        )));
    }
    for &e in elems {
        if e >= s.size() {
            return Err(Error::Usage(format!("element index {} out of range", e)));
        }
    }
    Ok(())
}

/// Evaluates one catalog identity at one argument tuple. Hypotheses
/// local to the identity (complemented arguments, order, simplicity)
/// are verified; global properties of f are not assumed, so a
/// violating tuple of a non-additive f shows up as a plain failure.
pub fn verify_identity(
    f: &MappedFunction,
    id: IdentityId,
    args: &[usize],
) -> Result<IdentityOutcome> {
    let s = finite_domain(f, "verify_identity")?;
    if args.len() != id.arity() {
        return Err(Error::Usage(format!(
            "identity {} takes {} arguments, got {}",
            id.name(),
            id.arity(),
            args.len()
        )));
    }
    let co = f.codomain();
    let t_name = id.name();
    let outcome = |lhs: CoValue, rhs: CoValue, ok: bool, witness: Vec<usize>| {
        let report = if ok {
            PropertyReport::holds(format!("identity-{}", t_name), 1)
        } else {
            PropertyReport::fails(
                format!("identity-{}", t_name),
                Witness::Elements(witness),
                1,
            )
        };
        IdentityOutcome {
            identity: id,
            lhs,
            rhs,
            report,
        }
    };
    match id {
        IdentityId::C1 => {
            let (t, e) = (args[0], args[1]);
            let m = complements_for(s, t_name)?;
            check_elems(s, args)?;
            let ec = require_complemented(s, &m, e, t_name)?;
            let lhs = f.at(t);
            let rhs = co.op(&f.at(s.mul(t, e)), &f.at(s.mul(t, ec)));
            Ok(outcome(lhs, rhs, lhs == rhs, args.to_vec()))
        }
        IdentityId::C2 => {
            let (a, b) = (args[0], args[1]);
            let m = complements_for(s, t_name)?;
            check_elems(s, args)?;
            require_complemented(s, &m, a, t_name)?;
            require_complemented(s, &m, b, t_name)?;
            let sd = symdiff(s, &m, a, b)?;
            let lhs = co.op(&f.at(sd), &co.op_scale(&f.at(s.mul(a, b)), 2));
            let rhs = co.op(&f.at(a), &f.at(b));
            Ok(outcome(lhs, rhs, lhs == rhs, args.to_vec()))
        }
        IdentityId::N1 => {
            let a = args[0];
            let m = complements_for(s, t_name)?;
            check_elems(s, args)?;
            let ac = require_complemented(s, &m, a, t_name)?;
            let lhs = co.op(&f.at(a), &f.at(ac));
            let rhs = co.one();
            Ok(outcome(lhs, rhs, lhs == rhs, args.to_vec()))
        }
        IdentityId::N2 => {
            let (a, b) = (args[0], args[1]);
            ring(f, t_name)?;
            let m = complements_for(s, t_name)?;
            check_elems(s, args)?;
            let ac = require_complemented(s, &m, a, t_name)?;
            let bc = require_complemented(s, &m, b, t_name)?;
            let lhs = f.at(s.mul(ac, bc));
            let rhs = co.op(
                &co.op_sub(&co.op_sub(&co.one(), &f.at(a)), &f.at(b)),
                &f.at(s.mul(a, b)),
            );
            Ok(outcome(lhs, rhs, lhs == rhs, args.to_vec()))
        }
        IdentityId::P1 => {
            ordered(f, t_name)?;
            check_elems(s, args)?;
            let v = f.at(args[0]);
            let ok = co.le(&co.zero(), &v)? && co.le(&v, &co.one())?;
            Ok(outcome(v, co.one(), ok, args.to_vec()))
        }
        IdentityId::P2 => {
            let (t, e) = (args[0], args[1]);
            ordered(f, t_name)?;
            check_elems(s, args)?;
            let lhs = f.at(s.mul(t, e));
            let rhs = f.at(t);
            let ok = co.le(&lhs, &rhs)?;
            Ok(outcome(lhs, rhs, ok, args.to_vec()))
        }
        IdentityId::P3 => {
            let (a, b) = (args[0], args[1]);
            ordered(f, t_name)?;
            ring(f, t_name)?;
            check_elems(s, args)?;
            let lhs = f.at(s.mul(a, b));
            let rhs = co.op_sub(&co.op(&f.at(a), &f.at(b)), &co.one());
            let ok = co.le(&rhs, &lhs)?;
            Ok(outcome(lhs, rhs, ok, args.to_vec()))
        }
        IdentityId::L1 => {
            let (x, y) = (args[0], args[1]);
            let (m_exp, n_exp) = (args[2], args[3]);
            check_elems(s, &args[..2])?;
            if m_exp < 1 || n_exp < 1 || m_exp > u32::MAX as usize || n_exp > u32::MAX as usize {
                return Err(Error::Usage(
                    "exponents must be at least 1 and fit in 32 bits".to_string(),
                ));
            }
            match s.simple_witness() {
                Ok(None) => {}
                Ok(Some(w)) => {
                    return Err(hyp(
                        t_name,
                        format!(
                            "carrier is not simple (witness {})",
                            w.describe(Some(s)).join(", ")
                        ),
                    ))
                }
                Err(why) => return Err(hyp(t_name, format!("carrier is not simple: {}", why))),
            }
            let lhs = f.at(s.mul(s.pow(x, m_exp as u32), s.pow(y, n_exp as u32)));
            let rhs = f.at(s.mul(x, y));
            Ok(outcome(lhs, rhs, lhs == rhs, vec![x, y]))
        }
    }
}

/// Checks f(prod X) = prod f(x) over every nonempty subset X of the
/// given elements, in size-then-lexicographic order.
pub fn are_independent(f: &MappedFunction, elems: &[usize]) -> Result<PropertyReport> {
    let s = finite_domain(f, "are_independent")?;
    check_elems(s, elems)?;
    let co = f.codomain();
    let n = elems.len();
    let mut checked = 0u64;
    for mask in subset_masks(n) {
        let subset: Vec<usize> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| elems[i])
            .collect();
        let prod_el = s.product(&subset).expect("nonempty subset");
        let lhs = f.at(prod_el);
        let mut rhs = f.at(subset[0]);
        for &e in &subset[1..] {
            rhs = co.ring_mul(&rhs, &f.at(e))?;
        }
        checked += 1;
        if lhs != rhs {
            return Ok(PropertyReport::fails(
                "independent",
                Witness::Elements(subset),
                checked,
            ));
        }
    }
    Ok(PropertyReport::holds("independent", checked))
}

/// The three equivalent forms of independence for complemented
/// families: the family itself, all sign-pattern variants, and the
/// full-product equalities. Verifies that the three agree.
pub fn independence_complement_equiv(
    f: &MappedFunction,
    elems: &[usize],
) -> Result<EquivalenceOutcome> {
    const T: &str = "independence-complement-equiv";
    let s = finite_domain(f, T)?;
    check_elems(s, elems)?;
    ring(f, T)?;
    require_property(f, Property::FinitelyAdditive, T)?;
    require_property(f, Property::Normalized, T)?;
    let m = complements_for(s, T)?;
    let comps: Vec<usize> = elems
        .iter()
        .map(|&x| require_complemented(s, &m, x, T))
        .collect::<Result<_>>()?;
    let n = elems.len();
    let co = f.codomain();

    let base = are_independent(f, elems)?;
    let mut checked = base.checked;
    let c1 = base.verdict.holds();
    let mut c1_witness = base.witness;

    let mut c2 = true;
    let mut c2_witness = None;
    let mut c3 = true;
    let mut c3_witness = None;
    for pattern in 0..(1u32 << n) {
        let family: Vec<usize> = (0..n)
            .map(|i| {
                if pattern >> i & 1 == 1 {
                    comps[i]
                } else {
                    elems[i]
                }
            })
            .collect();
        if c2 {
            let r = are_independent(f, &family)?;
            checked += r.checked;
            if !r.verdict.holds() {
                c2 = false;
                c2_witness = r.witness;
            }
        }
        if c3 {
            let prod_el = s.product(&family).expect("nonempty family");
            let lhs = f.at(prod_el);
            let mut rhs = f.at(family[0]);
            for &e in &family[1..] {
                rhs = co.ring_mul(&rhs, &f.at(e))?;
            }
            checked += 1;
            if lhs != rhs {
                c3 = false;
                c3_witness = Some(Witness::Elements(family));
            }
        }
    }

    let conditions = vec![
        ("independent".to_string(), c1),
        ("sign-patterns-independent".to_string(), c2),
        ("product-equalities".to_string(), c3),
    ];
    let agree = c1 == c2 && c2 == c3;
    let (disagreeing, report) = if agree {
        (None, PropertyReport::holds(T, checked))
    } else {
        // Two of the three share a value; name the odd one out and
        // attach a concrete failing tuple from a false condition.
        let minority = if (c1 == c2) || (c1 == c3) {
            if c2 == c1 { 2 } else { 1 }
        } else {
            0
        };
        let name = conditions[minority].0.clone();
        let witness = c1_witness
            .take()
            .or(c2_witness)
            .or(c3_witness)
            .expect("a false condition has a witness");
        (
            Some(name),
            PropertyReport::fails(T, witness, checked),
        )
    };
    Ok(EquivalenceOutcome {
        conditions,
        disagreeing,
        report,
    })
}

/// Builds d(s, t) = f(s dt t) over complemented elements and verifies
/// the semi-metric laws on all pairs and triples, plus the exact
/// two-term triangle identity. With no elements given, runs over all
/// complemented elements.
pub fn semi_metric(f: &MappedFunction, elements: &[usize]) -> Result<SemiMetricOutcome> {
    const T: &str = "semi-metric";
    let s = finite_domain(f, T)?;
    let co = f.codomain();
    ordered(f, T)?;
    require_zerosumfree(s, T)?;
    require_property(f, Property::FinitelyAdditive, T)?;
    let zero_v = co.zero();
    for i in 0..s.size() {
        if !co.le(&zero_v, &f.at(i))? {
            return Err(hyp(
                T,
                format!("f is negative at {}", s.element_name(i)),
            ));
        }
    }
    let m = complements_for(s, T)?;
    let elems: Vec<usize> = if elements.is_empty() {
        m.members().to_vec()
    } else {
        elements.to_vec()
    };
    for &x in &elems {
        require_complemented(s, &m, x, T)?;
    }
    let k = elems.len();
    let mut table = vec![vec![zero_v; k]; k];
    for i in 0..k {
        for j in 0..k {
            table[i][j] = f.at(symdiff(s, &m, elems[i], elems[j])?);
        }
    }
    let mut checked = (k * k) as u64;
    let fails = |witness: Vec<usize>, checked: u64| PropertyReport::fails(T, Witness::Elements(witness), checked);

    for i in 0..k {
        if table[i][i] != zero_v {
            return Ok(SemiMetricOutcome {
                elements: elems.clone(),
                table: table.clone(),
                metric: false,
                report: fails(vec![elems[i]], checked),
            });
        }
        for j in 0..k {
            checked += 1;
            if table[i][j] != table[j][i] || !co.le(&zero_v, &table[i][j])? {
                return Ok(SemiMetricOutcome {
                    elements: elems.clone(),
                    table: table.clone(),
                    metric: false,
                    report: fails(vec![elems[i], elems[j]], checked),
                });
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                checked += 1;
                let two_legs = co.op(&table[i][j], &table[j][l]);
                if !co.le(&table[i][l], &two_legs)? {
                    return Ok(SemiMetricOutcome {
                        elements: elems.clone(),
                        table: table.clone(),
                        metric: false,
                        report: fails(vec![elems[i], elems[j], elems[l]], checked),
                    });
                }
                // Exact excess: d(s,t) + d(t,u) = d(s,u) + 2[f(s t' u) + f(s' t u')].
                let (a, b, c) = (elems[i], elems[j], elems[l]);
                let (ac, bc, cc) = (
                    m.of(a).expect("complemented"),
                    m.of(b).expect("complemented"),
                    m.of(c).expect("complemented"),
                );
                let term1 = f.at(s.mul(s.mul(a, bc), c));
                let term2 = f.at(s.mul(s.mul(ac, b), cc));
                let rhs = co.op(&table[i][l], &co.op_scale(&co.op(&term1, &term2), 2));
                if two_legs != rhs {
                    return Ok(SemiMetricOutcome {
                        elements: elems.clone(),
                        table: table.clone(),
                        metric: false,
                        report: fails(vec![a, b, c], checked),
                    });
                }
            }
        }
    }

    // Positivity of f forces separation; report separation either way.
    let carrier_zero = s.zero().expect("zerosumfree carrier has a zero");
    let f_positive = (0..s.size())
        .filter(|&i| i != carrier_zero)
        .all(|i| f.at(i) != zero_v);
    let mut separation = true;
    let mut sep_witness = None;
    'outer: for i in 0..k {
        for j in 0..k {
            if elems[i] != elems[j] && table[i][j] == zero_v {
                separation = false;
                sep_witness = Some(vec![elems[i], elems[j]]);
                break 'outer;
            }
        }
    }
    if f_positive && !separation {
        let w = sep_witness.expect("separation failed");
        return Ok(SemiMetricOutcome {
            elements: elems.clone(),
            table,
            metric: false,
            report: fails(w, checked),
        });
    }
    Ok(SemiMetricOutcome {
        elements: elems,
        table,
        metric: separation,
        report: PropertyReport::holds(T, checked),
    })
}

/// p(s | t) = p(st) / p(t).
pub fn conditional(p: &MappedFunction, s_el: usize, t_el: usize) -> Result<CoValue> {
    let s = finite_domain(p, "conditional")?;
    if s_el >= s.size() || t_el >= s.size() {
        return Err(Error::Usage("element index out of range".to_string()));
    }
    let co = p.codomain();
    let pt = p.at(t_el);
    let inv = co.invert(&pt).ok_or_else(|| {
        Error::Conditioning(format!(
            "p({}) = {} is not invertible in {}",
            s.element_name(t_el),
            pt,
            co.name()
        ))
    })?;
    co.ring_mul(&p.at(s.mul(t_el, s_el)), &inv)
}

/// The function s -> p(s | t), verified to be a probability function
/// in its own right.
pub fn conditional_function(
    p: &MappedFunction,
    t_el: usize,
) -> Result<(MappedFunction, PropertyReport)> {
    const T: &str = "conditional-function";
    let s = finite_domain(p, T)?.clone();
    require_property(p, Property::Probability, T)?;
    let values: Vec<CoValue> = (0..s.size())
        .map(|x| conditional(p, x, t_el))
        .collect::<Result<_>>()?;
    let restricted = MappedFunction::from_values(s, p.codomain(), values)?;
    let report = restricted.check_property(Property::Probability)?;
    Ok((restricted, report))
}

fn verify_partition(
    p: &MappedFunction,
    s: &FiniteStructure,
    parts: &[usize],
    theorem: &str,
) -> Result<()> {
    check_elems(s, parts)?;
    let zero = s
        .zero()
        .ok_or_else(|| hyp(theorem, "carrier has no zero"))?;
    let one = s.one().ok_or_else(|| hyp(theorem, "carrier has no one"))?;
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            if s.mul(parts[i], parts[j]) != zero {
                return Err(hyp(
                    theorem,
                    format!(
                        "parts {} and {} are not disjoint",
                        s.element_name(parts[i]),
                        s.element_name(parts[j])
                    ),
                ));
            }
        }
    }
    let total = s.sum(parts).expect("nonempty");
    if total != one {
        return Err(hyp(
            theorem,
            format!("parts sum to {}, not 1", s.element_name(total)),
        ));
    }
    let co = p.codomain();
    for &t in parts {
        if co.invert(&p.at(t)).is_none() {
            return Err(Error::Conditioning(format!(
                "p({}) = {} is not invertible in {}",
                s.element_name(t),
                p.at(t),
                co.name()
            )));
        }
    }
    Ok(())
}

/// p(s) recomposed through a partition: direct value vs
/// sum of p(s | t_i) p(t_i).
pub fn total_probability(
    p: &MappedFunction,
    s_el: usize,
    parts: &[usize],
) -> Result<TotalProbabilityOutcome> {
    const T: &str = "total-probability";
    let s = finite_domain(p, T)?;
    if s_el >= s.size() {
        return Err(Error::Usage("element index out of range".to_string()));
    }
    let co = p.codomain();
    require_property(p, Property::Probability, T)?;
    verify_partition(p, s, parts, T)?;
    let direct = p.at(s_el);
    let mut decomposed = co.zero();
    for &t in parts {
        let cond = conditional(p, s_el, t)?;
        decomposed = co.op(&decomposed, &co.ring_mul(&cond, &p.at(t))?);
    }
    let checked = parts.len() as u64 + 1;
    let report = if direct == decomposed {
        PropertyReport::holds(T, checked)
    } else {
        let mut w = vec![s_el];
        w.extend_from_slice(parts);
        PropertyReport::fails(T, Witness::Elements(w), checked)
    };
    Ok(TotalProbabilityOutcome {
        direct,
        decomposed,
        report,
    })
}

/// Posterior p(t_k | s) through the partition form, verified against
/// the direct conditional. The full posterior row must sum to 1.
pub fn bayes(
    p: &MappedFunction,
    s_el: usize,
    parts: &[usize],
    k: usize,
) -> Result<BayesOutcome> {
    const T: &str = "bayes";
    let s = finite_domain(p, T)?;
    if s_el >= s.size() {
        return Err(Error::Usage("element index out of range".to_string()));
    }
    if k >= parts.len() {
        return Err(Error::Usage(format!(
            "part index {} out of range for {} parts",
            k,
            parts.len()
        )));
    }
    let co = p.codomain();
    ordered(p, T)?;
    ring(p, T)?;
    require_property(p, Property::Probability, T)?;
    verify_partition(p, s, parts, T)?;
    let ps = p.at(s_el);
    if ps == co.zero() || !co.le(&co.zero(), &ps)? {
        return Err(Error::Conditioning(format!(
            "p({}) = {} is not positive",
            s.element_name(s_el),
            ps
        )));
    }
    let numerators: Vec<CoValue> = parts
        .iter()
        .map(|&t| Ok(co.ring_mul(&conditional(p, s_el, t)?, &p.at(t))?))
        .collect::<Result<_>>()?;
    let mut denom = co.zero();
    for v in &numerators {
        denom = co.op(&denom, v);
    }
    let denom_inv = co.invert(&denom).ok_or_else(|| {
        Error::Conditioning(format!("total probability {} is not invertible", denom))
    })?;
    let posteriors: Vec<CoValue> = numerators
        .iter()
        .map(|v| co.ring_mul(v, &denom_inv))
        .collect::<Result<_>>()?;
    let posterior = posteriors[k];

    let mut checked = parts.len() as u64;
    let direct = conditional(p, parts[k], s_el)?;
    let mut total = co.zero();
    for v in &posteriors {
        total = co.op(&total, v);
    }
    checked += 2;
    let report = if posterior == direct && total == co.one() {
        PropertyReport::holds(T, checked)
    } else {
        PropertyReport::fails(T, Witness::Elements(vec![parts[k], s_el]), checked)
    };
    Ok(BayesOutcome {
        posterior,
        posteriors,
        report,
    })
}

/// p(sum s_i) <= sum p(s_i), derived the same way it is proved: the
/// family is disjointified, additivity glues the parts, and
/// monotonicity bounds each part.
pub fn boole_bound(p: &MappedFunction, elems: &[usize]) -> Result<ValuesOutcome> {
    const T: &str = "boole";
    let s = finite_domain(p, T)?;
    check_elems(s, elems)?;
    let co = p.codomain();
    ordered(p, T)?;
    require_property(p, Property::Probability, T)?;
    require_zerosumfree(s, T)?;
    let m = complements_for(s, T)?;
    require_one_plus_one(s, &m, T)?;
    for &e in elems {
        require_complemented(s, &m, e, T)?;
    }
    let parts = disjointify(s, &m, elems)?;
    let total = s.sum(elems).expect("nonempty");
    let lhs = p.at(total);
    let mut rhs = p.at(elems[0]);
    for &e in &elems[1..] {
        rhs = co.op(&rhs, &p.at(e));
    }
    let mut checked = 1u64;
    // Additivity glues the disjoint parts back to the total.
    let mut glued = p.at(parts[0]);
    for &b in &parts[1..] {
        glued = co.op(&glued, &p.at(b));
    }
    checked += 1;
    if glued != lhs {
        return Ok(ValuesOutcome {
            lhs,
            rhs,
            report: PropertyReport::fails(T, Witness::Elements(parts), checked),
        });
    }
    // Each part sits under its source element.
    for (idx, &b) in parts.iter().enumerate() {
        checked += 1;
        if !co.le(&p.at(b), &p.at(elems[idx]))? {
            return Ok(ValuesOutcome {
                lhs,
                rhs,
                report: PropertyReport::fails(
                    T,
                    Witness::Elements(vec![b, elems[idx]]),
                    checked,
                ),
            });
        }
    }
    checked += 1;
    let report = if co.le(&lhs, &rhs)? {
        PropertyReport::holds(T, checked)
    } else {
        PropertyReport::fails(T, Witness::Elements(elems.to_vec()), checked)
    };
    Ok(ValuesOutcome { lhs, rhs, report })
}

/// f(sum s_i) = 1 - prod (1 - f(s_i)) for complemented independent
/// elements under a normalized additive f.
pub fn parallel_systems(f: &MappedFunction, elems: &[usize]) -> Result<ValuesOutcome> {
    const T: &str = "parallel-systems";
    let s = finite_domain(f, T)?;
    check_elems(s, elems)?;
    let co = f.codomain();
    ring(f, T)?;
    require_zerosumfree(s, T)?;
    let m = complements_for(s, T)?;
    require_one_plus_one(s, &m, T)?;
    for &e in elems {
        require_complemented(s, &m, e, T)?;
    }
    require_property(f, Property::FinitelyAdditive, T)?;
    require_property(f, Property::Normalized, T)?;
    let indep = are_independent(f, elems)?;
    let mut checked = indep.checked;
    if !indep.verdict.holds() {
        let w = indep.witness.expect("failed independence has a witness");
        return Err(hyp(
            T,
            format!(
                "elements are not independent under f (witness {})",
                w.describe(Some(s.as_ref())).join(", ")
            ),
        ));
    }
    let total = s.sum(elems).expect("nonempty");
    let lhs = f.at(total);
    let mut prod = co.one();
    for &e in elems {
        prod = co.ring_mul(&prod, &co.op_sub(&co.one(), &f.at(e)))?;
    }
    let rhs = co.op_sub(&co.one(), &prod);
    checked += 1;
    let report = if lhs == rhs {
        PropertyReport::holds(T, checked)
    } else {
        PropertyReport::fails(T, Witness::Elements(elems.to_vec()), checked)
    };
    Ok(ValuesOutcome { lhs, rhs, report })
}

/// Inclusion and exclusion without subtraction: the even-size subset
/// terms join the left side. Needs a multiplicatively idempotent
/// carrier and a modular m.
pub fn poincare(m_fn: &MappedFunction, elems: &[usize]) -> Result<ValuesOutcome> {
    const T: &str = "poincare";
    let s = finite_domain(m_fn, T)?;
    check_elems(s, elems)?;
    require_idempotent(s, T)?;
    require_property(m_fn, Property::Modular, T)?;
    let co = m_fn.codomain();
    let n = elems.len();
    let total = s.sum(elems).expect("nonempty");
    let mut lhs = m_fn.at(total);
    let mut rhs: Option<CoValue> = None;
    let mut checked = 1u64;
    for mask in subset_masks(n) {
        let subset: Vec<usize> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| elems[i])
            .collect();
        let v = m_fn.at(s.product(&subset).expect("nonempty subset"));
        checked += 1;
        if subset.len() % 2 == 0 {
            lhs = co.op(&lhs, &v);
        } else {
            rhs = Some(match rhs {
                None => v,
                Some(acc) => co.op(&acc, &v),
            });
        }
    }
    let rhs = rhs.expect("n >= 1 gives odd terms");
    let report = if lhs == rhs {
        PropertyReport::holds(T, checked)
    } else {
        PropertyReport::fails(T, Witness::Elements(elems.to_vec()), checked)
    };
    Ok(ValuesOutcome { lhs, rhs, report })
}

/// An independent family stays independent after summing a prefix:
/// checks f((s_1 + ... + s_{n-1}) s_n) = f(s_1 + ... + s_{n-1}) f(s_n).
pub fn independence_propagation(f: &MappedFunction, elems: &[usize]) -> Result<PropertyReport> {
    const T: &str = "independence-propagation";
    let s = finite_domain(f, T)?;
    check_elems(s, elems)?;
    if elems.len() < 2 {
        return Err(Error::Usage("need at least two elements".to_string()));
    }
    let co = f.codomain();
    ring(f, T)?;
    require_idempotent(s, T)?;
    require_property(f, Property::Modular, T)?;
    let indep = are_independent(f, elems)?;
    let mut checked = indep.checked;
    if !indep.verdict.holds() {
        let w = indep.witness.expect("failed independence has a witness");
        return Err(hyp(
            T,
            format!(
                "elements are not independent under f (witness {})",
                w.describe(Some(s.as_ref())).join(", ")
            ),
        ));
    }
    let head = s.sum(&elems[..elems.len() - 1]).expect("nonempty");
    let last = elems[elems.len() - 1];
    let lhs = f.at(s.mul(head, last));
    let rhs = co.ring_mul(&f.at(head), &f.at(last))?;
    checked += 1;
    Ok(if lhs == rhs {
        PropertyReport::holds(T, checked)
    } else {
        PropertyReport::fails(T, Witness::Elements(elems.to_vec()), checked)
    })
}

/// Restricts f to the complemented elements, checks modularity of the
/// restriction, and on Boolean carriers reports both directions of
/// the additive-iff-modular-with-zero equivalence.
pub fn restrict_to_comp(f: &MappedFunction) -> Result<RestrictionOutcome> {
    const T: &str = "restrict-to-comp";
    let s = finite_domain(f, T)?;
    require_zerosumfree(s, T)?;
    let alg = match comp_boolean_algebra(s)? {
        CompOutcome::Boolean(a) => a,
        CompOutcome::NotBoolean { condition, witness } => {
            return Err(hyp(
                T,
                format!(
                    "comp(S) is not Boolean: {} fails at {}",
                    condition,
                    witness.describe(Some(s)).join(", ")
                ),
            ))
        }
    };
    let additive = f.check_property(Property::FinitelyAdditive)?;
    let values: Vec<CoValue> = alg.elements.iter().map(|&x| f.at(x)).collect();
    let restriction =
        MappedFunction::from_values(Arc::new(alg.structure), f.codomain(), values)?;
    let modular = restriction.check_property(Property::Modular)?;
    if additive.verdict.holds() && !modular.verdict.holds() {
        return Err(Error::Corruption(
            "restriction of a finitely additive function failed modularity".to_string(),
        ));
    }
    let corollary = if alg.elements.len() == s.size() {
        let zero = s.zero().expect("carrier has a zero");
        let additive_holds = additive.verdict.holds();
        let modular_holds = f.check_property(Property::Modular)?.verdict.holds();
        let zero_ok = f.at(zero) == f.codomain().zero();
        Some(CorollaryAgreement {
            additive: additive_holds,
            modular_and_zero: modular_holds && zero_ok,
            agree: additive_holds == (modular_holds && zero_ok),
        })
    } else {
        None
    };
    Ok(RestrictionOutcome {
        restriction,
        carrier_elements: alg.elements,
        additive,
        modular,
        corollary,
    })
}
