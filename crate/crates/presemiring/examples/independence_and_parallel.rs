//! Independence on a product space: two fair coins, outcomes as the
//! four atoms of a subset lattice. Coordinate events are independent;
//! disjoint events never are. Independence survives complementation,
//! and parallel composition multiplies failure probabilities.

use std::sync::Arc;

use presemiring::functions::MappedFunction;
use presemiring::instances::{make_finite, FiniteKind};
use presemiring::theorems;

fn main() -> presemiring::Result<()> {
    // Atom k+1 encodes one outcome pair: bit 0 of k is the first
    // coin, bit 1 the second.
    let s = Arc::new(make_finite(FiniteKind::Powerset { atoms: 4 })?);
    let p = MappedFunction::uniform(s.clone())?;
    let first = s.element_index("{2,4}")?; // first coin heads
    let second = s.element_index("{3,4}")?; // second coin heads

    let events = [first, second];
    let indep = theorems::are_independent(&p, &events)?;
    println!(
        "coordinate events {} and {}: independent -> {}",
        s.element_name(first),
        s.element_name(second),
        indep.verdict.name()
    );
    assert!(indep.verdict.holds());

    // All sign patterns at once: the family, its complements, and the
    // full-product form agree.
    let equiv = theorems::independence_complement_equiv(&p, &events)?;
    for (condition, ok) in &equiv.conditions {
        println!("  {} -> {}", condition, ok);
    }
    assert!(equiv.report.verdict.holds());

    // Disjoint events are never independent: p(st) = 0 but both
    // factors are positive.
    let a = s.element_index("{1}")?;
    let b = s.element_index("{2}")?;
    let disjoint = theorems::are_independent(&p, &[a, b])?;
    println!(
        "disjoint singletons {} and {}: independent -> {}",
        s.element_name(a),
        s.element_name(b),
        disjoint.verdict.name()
    );
    assert!(!disjoint.verdict.holds());

    // Two components in parallel: the system works when either does.
    let out = theorems::parallel_systems(&p, &events)?;
    println!(
        "parallel: p(union) = {}, 1 - (1-p)(1-q) = {}",
        out.lhs, out.rhs
    );
    assert!(out.report.verdict.holds());
    Ok(())
}
