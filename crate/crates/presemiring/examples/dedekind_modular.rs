//! Nontrivial modular functions on the ideals of the integers. An
//! ideal is its generator; sum is gcd, product multiplies. A spec
//! fixes values at the zero ideal, the whole ring, and the primes,
//! and evaluates as f(p1^a1 ... pk^ak) = sum f(pi) - (k-1) f(D).

use std::collections::BTreeMap;

use presemiring::codomain::{CoValue, Codomain};
use presemiring::dedekind::{self, CorollaryVariant, IdealZ, ModularSpec};
use presemiring::rational::Rat;

fn main() -> presemiring::Result<()> {
    let a = IdealZ::new(12)?;
    let b = IdealZ::new(18)?;
    println!(
        "(12) + (18) = ({}), (12)(18) = ({}), radical (12) = ({})",
        a.sum(&b).generator(),
        a.product(&b)?.generator(),
        a.radical().generator()
    );

    // Distinct prime factors of the generator.
    let counting = ModularSpec::counting();
    for n in [1u64, 12, 360, 1_000_003] {
        println!("omega({}) = {}", n, counting.eval_generator(n)?);
    }
    let report = dedekind::verify_modular(&counting, &a, &b)?;
    assert!(report.verdict.holds());
    let report = dedekind::verify_sampled(&counting, 10_000, 7, 1_000_000)?;
    println!(
        "counting spec sampled: {} on {} pairs",
        report.verdict.name(),
        report.checked
    );

    // Rational prime weights; unlisted primes fall back to 1/2.
    let mut weights = BTreeMap::new();
    weights.insert(2, CoValue::Rat(Rat::new(3, 2)));
    weights.insert(3, CoValue::Rat(Rat::new(5, 2)));
    let weighted = ModularSpec::new(
        Codomain::Rationals,
        CoValue::Rat(Rat::from_int(0)),
        CoValue::Rat(Rat::from_int(0)),
        CoValue::Rat(Rat::new(1, 2)),
        weights,
    )?;
    println!("weighted f(12) = {}", weighted.eval_generator(12)?);
    let report = dedekind::verify_sampled(&weighted, 10_000, 11, 1_000_000)?;
    assert!(report.verdict.holds());

    // Replacing the product with gcd keeps the law; lcm breaks it.
    let good = dedekind::corollary_check(&counting, 4, 6, CorollaryVariant::Gcd)?;
    println!(
        "gcd form at (4, 6): {} = {} -> {}",
        good.lhs,
        good.rhs,
        good.report.verdict.name()
    );
    let bad = dedekind::corollary_check(&counting, 2, 3, CorollaryVariant::Lcm)?;
    println!(
        "lcm form at (2, 3): {} vs {} -> {}",
        bad.lhs,
        bad.rhs,
        bad.report.verdict.name()
    );
    assert!(!bad.report.verdict.holds());
    Ok(())
}
