//! The uniform distribution on a rational window: events are finite
//! unions of subintervals, probability is total length over window
//! length, exact in Q. Endpoint openness never changes a value. Two
//! interval-product carriers are classified alongside; both fail an
//! axiom and the sampler names it.

use presemiring::codomain::Codomain;
use presemiring::functions::{MappedFunction, Property, SymbolicFn};
use presemiring::instances::interval_length_prob;
use presemiring::intervals::{IntervalUnionSet, RatInterval};
use presemiring::rational::Rat;
use presemiring::symbolic::{SampleBudget, SymbolicKind, SymbolicStructure};

fn main() -> presemiring::Result<()> {
    let lo = Rat::from_int(0);
    let hi = Rat::from_int(1);

    // [0, 1/4] with (1/2, 3/4): length 1/2 of the unit window.
    let set = IntervalUnionSet::from_parts(vec![
        RatInterval::closed(Rat::from_int(0), Rat::new(1, 4)),
        RatInterval::new(Rat::new(1, 2), Rat::new(3, 4), false, false),
    ]);
    println!("p(set) = {}", interval_length_prob(&set, lo, hi)?);

    let carrier = SymbolicStructure::new(SymbolicKind::IntervalUnions { lo, hi });
    let p = MappedFunction::rule(carrier, Codomain::Rationals, SymbolicFn::IntervalLength)?;
    let report = p.check_property_sampled(Property::Probability, SampleBudget::new(5_000, 13))?;
    println!(
        "length rule as a probability: {} on {} sampled checks",
        report.verdict.name(),
        report.checked
    );
    assert!(report.verdict.holds());

    // Both interval products carry caveats, found by sampling: the
    // corrected endpoint-sum product keeps the carrier but its zero
    // fails to absorb, and the literal transcription with the
    // mismatched endpoint does not even keep products inside the
    // carrier.
    for kind in [SymbolicKind::IntervalE, SymbolicKind::IntervalELiteral] {
        let s = SymbolicStructure::new(kind);
        let report = s.classify_sampled(SampleBudget::new(5_000, 17));
        match report.violations.first() {
            None => println!("{}: {} on sample", s.name(), report.class.name()),
            Some(v) => println!(
                "{}: {} on sample, {} fails at {}",
                s.name(),
                report.class.name(),
                v.axiom.name(),
                v.witness.describe(None).join(", ")
            ),
        }
    }
    Ok(())
}
