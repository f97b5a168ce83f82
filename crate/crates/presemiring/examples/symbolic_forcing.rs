//! On several infinite carriers, every modular function is forced to
//! be constant (up to a free value at an absorbing point). Shipped
//! templates pass the sampled check; natural non-examples are
//! refuted with concrete witnesses.

use presemiring::codomain::{CoValue, Codomain};
use presemiring::enumeration::{sampled_constancy_check, ConstancyTheorem};
use presemiring::functions::{MappedFunction, Property, SymbolicFn};
use presemiring::symbolic::{SampleBudget, SymbolicKind, SymbolicStructure};

fn main() -> presemiring::Result<()> {
    let budget = SampleBudget::new(10_000, 9);

    // Max-plus over the naturals: constant away from ninf, free there.
    let arctic = MappedFunction::rule(
        SymbolicStructure::new(SymbolicKind::Arctic),
        Codomain::Integers,
        SymbolicFn::SplitAtNegInf {
            at_ninf: CoValue::Int(7),
            elsewhere: CoValue::Int(3),
        },
    )?;
    let modular = arctic.check_property_sampled(Property::Modular, budget)?;
    let forced = sampled_constancy_check(&arctic, ConstancyTheorem::Arctic, &budget)?;
    println!(
        "arctic split: modular {}, forcing {}",
        modular.verdict.name(),
        forced.verdict.name()
    );

    // Min-plus over all integers leaves no freedom at all, so the
    // identity function cannot be modular.
    let ident = MappedFunction::rule(
        SymbolicStructure::new(SymbolicKind::GMinPlus),
        Codomain::Integers,
        SymbolicFn::Identity,
    )?;
    let refuted = sampled_constancy_check(&ident, ConstancyTheorem::GMinPlus, &budget)?;
    println!(
        "identity on min-plus: {} (witness {})",
        refuted.verdict.name(),
        refuted
            .witness
            .as_ref()
            .map(|w| w.describe(None).join(", "))
            .unwrap_or_default()
    );
    assert!(!refuted.verdict.holds());

    // Componentwise max-plus pairs: only constants survive.
    let litvinov = MappedFunction::rule(
        SymbolicStructure::new(SymbolicKind::Litvinov),
        Codomain::Integers,
        SymbolicFn::Constant(CoValue::Int(4)),
    )?;
    let forced = sampled_constancy_check(&litvinov, ConstancyTheorem::Litvinov, &budget)?;
    println!("constant on the max-plus plane: {}", forced.verdict.name());

    // Positive rationals under plus and times: numerator parity is
    // multiplicatively natural but breaks the modular law.
    let parity = MappedFunction::rule(
        SymbolicStructure::new(SymbolicKind::QNonNeg),
        Codomain::IntegersMod(2),
        SymbolicFn::NumeratorParity,
    )?;
    let broken = sampled_constancy_check(&parity, ConstancyTheorem::Semifield, &budget)?;
    println!(
        "numerator parity on Q >= 0: {} (witness {})",
        broken.verdict.name(),
        broken
            .witness
            .as_ref()
            .map(|w| w.describe(None).join(", "))
            .unwrap_or_default()
    );
    assert!(!broken.verdict.holds());
    Ok(())
}
