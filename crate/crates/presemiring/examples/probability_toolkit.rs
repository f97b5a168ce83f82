//! Conditioning, total probability, and posteriors on a six-sided
//! die, exact in the rationals. The die is the subset lattice over
//! six points with the uniform point weights, then a biased variant.

use std::sync::Arc;

use presemiring::functions::{MappedFunction, Property};
use presemiring::instances::{make_finite, FiniteKind};
use presemiring::rational::Rat;
use presemiring::theorems;

fn main() -> presemiring::Result<()> {
    let s = Arc::new(make_finite(FiniteKind::Powerset { atoms: 6 })?);
    let p = MappedFunction::uniform(s.clone())?;
    assert!(p.check_property(Property::Probability)?.verdict.holds());

    let low = s.element_index("{1,2,3}")?;
    let high = s.element_index("{4,5,6}")?;
    let seen = s.element_index("{3,4}")?;

    println!("p({}) = {}", s.element_name(seen), p.at(seen));
    println!(
        "p({} | {}) = {}",
        s.element_name(low),
        s.element_name(seen),
        theorems::conditional(&p, low, seen)?
    );

    let total = theorems::total_probability(&p, seen, &[low, high])?;
    println!(
        "p({}) decomposed over the partition: {} = {}",
        s.element_name(seen),
        total.direct,
        total.decomposed
    );
    assert!(total.report.verdict.holds());

    let out = theorems::bayes(&p, seen, &[low, high], 0)?;
    println!(
        "posterior p({} | {}) = {}  (full row: {})",
        s.element_name(low),
        s.element_name(seen),
        out.posterior,
        out.posteriors
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    assert!(out.report.verdict.holds());

    // A loaded die: faces 5 and 6 carry triple weight.
    let w = |n: i128, d: i128| Rat::new(n, d);
    let loaded = MappedFunction::stochastic(
        s.clone(),
        &[w(1, 12), w(1, 12), w(1, 6), w(1, 6), w(1, 4), w(1, 4)],
    )?;
    assert!(loaded.check_property(Property::Probability)?.verdict.holds());
    let out = theorems::bayes(&loaded, seen, &[low, high], 1)?;
    println!(
        "loaded die: p({}) = {}, posterior p({} | {}) = {}",
        s.element_name(seen),
        loaded.at(seen),
        s.element_name(high),
        s.element_name(seen),
        out.posterior
    );
    Ok(())
}
