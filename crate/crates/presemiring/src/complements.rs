//! Complemented elements and the derived carrier comp(S).
//!
//! An element s is complemented when some t satisfies s * t = 0 and
//! s + t = 1. On semirings that complement is unique; the scan checks
//! this instead of assuming it.

use crate::structure::{ClassKind, FiniteStructure, NameScheme, Witness};
use crate::{Error, Result};

/// Complement table for one finite structure.
#[derive(Clone, Debug)]
pub struct ComplementMap {
    comp: Vec<Option<usize>>,
    members: Vec<usize>,
    ambiguous: Vec<(usize, usize, usize)>,
}

impl ComplementMap {
    /// Scans the whole carrier. Needs declared zero and one.
    pub fn build(s: &FiniteStructure) -> Result<ComplementMap> {
        let (zero, one) = require_neutrals(s)?;
        let n = s.size();
        let mut comp = vec![None; n];
        let mut ambiguous = Vec::new();
        if let Some(atoms) = s.atoms() {
            // On a subset lattice the complement is the bit complement,
            // and every element has exactly one.
            let full = (1usize << atoms) - 1;
            for (x, slot) in comp.iter_mut().enumerate() {
                *slot = Some(full ^ x);
            }
        } else {
            for x in 0..n {
                for t in 0..n {
                    if s.mul(x, t) == zero && s.add(x, t) == one {
                        match comp[x] {
                            None => comp[x] = Some(t),
                            Some(first) => ambiguous.push((x, first, t)),
                        }
                    }
                }
            }
        }
        let members = (0..n).filter(|&x| comp[x].is_some()).collect();
        Ok(ComplementMap {
            comp,
            members,
            ambiguous,
        })
    }

    /// The complement of `x`, when it has one.
    pub fn of(&self, x: usize) -> Option<usize> {
        self.comp.get(x).copied().flatten()
    }

    pub fn is_complemented(&self, x: usize) -> bool {
        self.of(x).is_some()
    }

    /// Complemented elements in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Elements that matched more than one candidate. Nonempty only on
    /// carriers violating the semiring laws.
    pub fn ambiguous(&self) -> &[(usize, usize, usize)] {
        &self.ambiguous
    }
}

fn require_neutrals(s: &FiniteStructure) -> Result<(usize, usize)> {
    match (s.zero(), s.one()) {
        (Some(z), Some(o)) => Ok((z, o)),
        _ => Err(Error::Inapplicable(
            "complements need a declared zero and one".to_string(),
        )),
    }
}

/// The unique complement of one element, or `None`.
pub fn complement(s: &FiniteStructure, x: usize) -> Result<Option<usize>> {
    let (zero, one) = require_neutrals(s)?;
    if x >= s.size() {
        return Err(Error::Usage(format!(
            "element {} out of range for {} elements",
            x,
            s.size()
        )));
    }
    let mut found = None;
    for t in 0..s.size() {
        if s.mul(x, t) == zero && s.add(x, t) == one {
            if let Some(first) = found {
                return Err(Error::Structure(format!(
                    "element {} has two complements, {} and {}; the carrier breaks the semiring laws",
                    s.element_name(x),
                    s.element_name(first),
                    s.element_name(t)
                )));
            }
            found = Some(t);
        }
    }
    Ok(found)
}

/// All complemented elements with their complements.
pub fn complemented_elements(s: &FiniteStructure) -> Result<ComplementMap> {
    ComplementMap::build(s)
}

fn need_complement(
    s: &FiniteStructure,
    m: &ComplementMap,
    x: usize,
    op: &'static str,
) -> Result<usize> {
    m.of(x).ok_or_else(|| {
        Error::hypothesis(
            op,
            format!("element {} is not complemented", s.element_name(x)),
        )
    })
}

/// Symmetric difference a(b-complement) + (a-complement)b. Both
/// arguments must be complemented.
pub fn symdiff(s: &FiniteStructure, m: &ComplementMap, a: usize, b: usize) -> Result<usize> {
    let ac = need_complement(s, m, a, "symdiff")?;
    let bc = need_complement(s, m, b, "symdiff")?;
    Ok(s.add(s.mul(ac, b), s.mul(a, bc)))
}

/// Join a + (a-complement)b. The left argument must be complemented.
pub fn sqcup(s: &FiniteStructure, m: &ComplementMap, a: usize, b: usize) -> Result<usize> {
    let ac = need_complement(s, m, a, "sqcup")?;
    Ok(s.add(a, s.mul(ac, b)))
}

/// comp(S) packaged as a carrier of its own.
#[derive(Debug)]
pub struct CompAlgebra {
    /// The restricted carrier, reindexed 0..k with the original names.
    pub structure: FiniteStructure,
    /// Original indices of the members, ascending; position i here is
    /// element i of `structure`.
    pub elements: Vec<usize>,
}

/// Outcome of the comp(S) construction.
#[derive(Debug)]
pub enum CompOutcome {
    /// The equivalent closure conditions hold and every law of a
    /// Boolean algebra was verified on the restricted carrier.
    Boolean(CompAlgebra),
    /// The closure conditions fail; comp(S) is not closed under
    /// addition and no Boolean carrier exists.
    NotBoolean {
        condition: &'static str,
        witness: Witness,
    },
}

/// Builds comp(S) and decides whether it is a Boolean algebra.
///
/// Requires a zerosumfree semiring. The three closure conditions
/// (comp closed under addition, 1 + 1 complemented, sums matching
/// joins on comp) are each evaluated and must agree; any disagreement
/// or any failed Boolean law on a passing carrier is a refutation and
/// reported as corruption rather than a verdict.
pub fn comp_boolean_algebra(s: &FiniteStructure) -> Result<CompOutcome> {
    let report = s.classify()?;
    if report.class != ClassKind::Semiring {
        return Err(Error::hypothesis(
            "comp-boolean-algebra",
            format!("carrier classifies as {}, not semiring", report.class.name()),
        ));
    }
    if !report.flags.zerosumfree.holds() {
        return Err(Error::hypothesis(
            "comp-boolean-algebra",
            "carrier is not zerosumfree".to_string(),
        ));
    }
    let m = ComplementMap::build(s)?;
    if let Some(&(x, c1, c2)) = m.ambiguous().first() {
        return Err(Error::Corruption(format!(
            "complement uniqueness refuted on a semiring: {} has complements {} and {}",
            s.element_name(x),
            s.element_name(c1),
            s.element_name(c2)
        )));
    }
    let members = m.members();
    let one = s.one().expect("semiring has a one");

    let mut closed_witness = None;
    let mut join_witness = None;
    for &a in members {
        for &b in members {
            if closed_witness.is_none() && !m.is_complemented(s.add(a, b)) {
                closed_witness = Some((a, b));
            }
            if join_witness.is_none() && s.add(a, b) != sqcup(s, &m, a, b)? {
                join_witness = Some((a, b));
            }
        }
    }
    let two = s.add(one, one);
    let two_ok = m.is_complemented(two);
    let closed_ok = closed_witness.is_none();
    let join_ok = join_witness.is_none();
    if closed_ok != two_ok || closed_ok != join_ok {
        return Err(Error::Corruption(format!(
            "equivalent conditions disagree on a zerosumfree semiring: closed={} two={} join={}",
            closed_ok, two_ok, join_ok
        )));
    }
    if !two_ok {
        return Ok(CompOutcome::NotBoolean {
            condition: "one-plus-one-complemented",
            witness: Witness::Elements(vec![two]),
        });
    }

    // Conditions hold: restrict the carrier and verify it is Boolean.
    let k = members.len();
    let pos = |orig: usize| members.binary_search(&orig).ok();
    let mut add = vec![0u32; k * k];
    let mut mul = vec![0u32; k * k];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            let sum = pos(s.add(a, b)).ok_or_else(|| {
                Error::Corruption("closure verdict contradicted during restriction".to_string())
            })?;
            let prod = pos(s.mul(a, b)).ok_or_else(|| {
                Error::Corruption(format!(
                    "comp(S) not closed under product: {} * {}",
                    s.element_name(a),
                    s.element_name(b)
                ))
            })?;
            add[i * k + j] = sum as u32;
            mul[i * k + j] = prod as u32;
        }
    }
    let names = members.iter().map(|&e| s.element_name(e)).collect();
    let zero_pos = s.zero().and_then(pos);
    let one_pos = pos(one);
    if zero_pos.is_none() || one_pos.is_none() {
        return Err(Error::Corruption(
            "zero or one missing from comp(S)".to_string(),
        ));
    }
    let sub = FiniteStructure::from_tables(add, mul, zero_pos, one_pos, NameScheme::List(names))?;

    let sub_report = sub.classify()?;
    if sub_report.class != ClassKind::Semiring || !sub_report.clean() {
        return Err(Error::Corruption(
            "comp(S) fails the semiring laws despite the closure conditions".to_string(),
        ));
    }
    verify_boolean_laws(s, &m, members)?;
    Ok(CompOutcome::Boolean(CompAlgebra {
        structure: sub,
        elements: members.to_vec(),
    }))
}

/// Lattice and complement laws on comp(S), in original coordinates.
/// Distributivity of product over sum is already covered by the
/// restricted carrier's classification; a distributive lattice is
/// distributive in both orders, so these quadratic checks complete
/// the Boolean verification.
fn verify_boolean_laws(s: &FiniteStructure, m: &ComplementMap, members: &[usize]) -> Result<()> {
    let refuted = |law: &str, elems: &[usize]| {
        let names: Vec<String> = elems.iter().map(|&e| s.element_name(e)).collect();
        Err(Error::Corruption(format!(
            "Boolean law {} refuted on comp(S) at ({})",
            law,
            names.join(",")
        )))
    };
    let zero = s.zero().expect("checked");
    let one = s.one().expect("checked");
    for &a in members {
        let ac = m.of(a).expect("member");
        if !m.is_complemented(ac) || m.of(ac) != Some(a) {
            return refuted("complement-involution", &[a]);
        }
        if s.add(a, a) != a {
            return refuted("sum-idempotent", &[a]);
        }
        if s.mul(a, a) != a {
            return refuted("product-idempotent", &[a]);
        }
        if s.mul(a, ac) != zero || s.add(a, ac) != one {
            return refuted("complement-bounds", &[a]);
        }
        for &b in members {
            if s.add(a, s.mul(a, b)) != a || s.mul(a, s.add(a, b)) != a {
                return refuted("absorption", &[a, b]);
            }
            let bc = m.of(b).expect("member");
            if m.of(s.add(a, b)) != Some(s.mul(ac, bc)) {
                return refuted("sum-complement-exchange", &[a, b]);
            }
        }
    }
    Ok(())
}

/// Replaces a list of complemented elements by pairwise disjoint ones
/// with the same sum: each output is the matching input times the
/// complements of all earlier inputs. Both postconditions are
/// re-verified before returning.
pub fn disjointify(
    s: &FiniteStructure,
    m: &ComplementMap,
    elems: &[usize],
) -> Result<Vec<usize>> {
    let (zero, one) = require_neutrals(s)?;
    for &a in elems {
        need_complement(s, m, a, "disjointify")?;
    }
    if !m.is_complemented(s.add(one, one)) {
        return Err(Error::hypothesis(
            "disjointify",
            "1 + 1 is not complemented, so comp(S) is not closed under addition".to_string(),
        ));
    }
    if let Ok(Some(w)) = s.zerosumfree_witness() {
        return Err(Error::hypothesis(
            "disjointify",
            format!(
                "carrier is not zerosumfree: witness {}",
                w.describe(Some(s)).join(", ")
            ),
        ));
    }

    let mut parts = Vec::with_capacity(elems.len());
    let mut prefix_comp = one;
    for &a in elems {
        parts.push(s.mul(a, prefix_comp));
        prefix_comp = s.mul(prefix_comp, m.of(a).expect("checked"));
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if s.mul(parts[i], parts[j]) != zero {
                return Err(Error::Corruption(format!(
                    "disjointification produced overlapping parts {} and {}",
                    s.element_name(parts[i]),
                    s.element_name(parts[j])
                )));
            }
        }
    }
    let sum_parts = s.sum(&parts).expect("zero exists");
    let sum_inputs = s.sum(elems).expect("zero exists");
    if sum_parts != sum_inputs {
        return Err(Error::Corruption(format!(
            "disjointification changed the sum: {} vs {}",
            s.element_name(sum_parts),
            s.element_name(sum_inputs)
        )));
    }
    Ok(parts)
}
