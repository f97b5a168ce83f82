//! Classifies the finite catalog exhaustively, then two symbolic
//! carriers on seeded samples.

use presemiring::instances::{make_finite, FiniteKind};
use presemiring::structure::FlagResult;
use presemiring::symbolic::{SampleBudget, SymbolicKind, SymbolicStructure};

fn flag(r: &FlagResult) -> &'static str {
    match r {
        FlagResult::Holds => "holds",
        FlagResult::HoldsOnSample => "holds-on-sample",
        FlagResult::Fails(_) => "fails",
        FlagResult::Inapplicable(_) => "n/a",
    }
}

fn main() -> presemiring::Result<()> {
    let catalog = [
        ("bni(5,2)", FiniteKind::BnI { n: 5, i: 2 }),
        ("bni(6,3)", FiniteKind::BnI { n: 6, i: 3 }),
        ("truncation(3)", FiniteKind::Truncation { k: 3 }),
        ("powerset(3)", FiniteKind::Powerset { atoms: 3 }),
        ("bottleneck(4)", FiniteKind::Bottleneck { n: 4 }),
    ];
    println!("{:>14}  {:<13} zsf     entire  simple  mul-idem", "instance", "class");
    for (label, kind) in catalog {
        let s = make_finite(kind)?;
        let report = s.classify()?;
        assert!(report.violations.is_empty());
        println!(
            "{:>14}  {:<13} {:<7} {:<7} {:<7} {}",
            label,
            report.class.name(),
            flag(&report.flags.zerosumfree),
            flag(&report.flags.entire),
            flag(&report.flags.simple),
            flag(&report.flags.multiplicatively_idempotent),
        );
    }

    // Infinite carriers get sampled verdicts instead.
    for kind in [SymbolicKind::Arctic, SymbolicKind::Tropical] {
        let s = SymbolicStructure::new(kind);
        let report = s.classify_sampled(SampleBudget::new(5_000, 1));
        println!(
            "{:>14}  {:<13} (sampled, {} tuples)",
            s.name(),
            report.class.name(),
            report.checked_tuples
        );
    }
    Ok(())
}
