//! Enumerates every function from a five-element carrier into Z/3
//! and counts the modular ones. The claim that they are exactly the
//! functions constant away from zero is checked in both directions,
//! and the nine surviving tables are printed.

use std::sync::Arc;

use presemiring::codomain::Codomain;
use presemiring::enumeration::{classify_modular, enumerate_functions, ClassificationClaim};
use presemiring::functions::Property;
use presemiring::instances::{make_finite, FiniteKind};

fn main() -> presemiring::Result<()> {
    let kind = FiniteKind::BnI { n: 5, i: 2 };
    let s = Arc::new(make_finite(kind)?);
    let co = Codomain::IntegersMod(3);

    let claim = ClassificationClaim::for_kind(kind);
    let result = classify_modular(s.clone(), co, &claim)?;
    println!(
        "{} of {} functions are modular; claim `{}`: forward {}, converse {}",
        result.modular,
        result.total,
        claim.label,
        result.forward.verdict.name(),
        result.converse.verdict.name()
    );
    assert!(result.report.verdict.holds());

    println!("modular tables (f(0) f(1) f(2) f(3) f(4)):");
    for f in enumerate_functions(s.clone(), co)? {
        if f.check_property(Property::Modular)?.verdict.holds() {
            let row: Vec<String> = (0..s.size()).map(|i| f.at(i).to_string()).collect();
            println!("  {}", row.join(" "));
        }
    }
    Ok(())
}
