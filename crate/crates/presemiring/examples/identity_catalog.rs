//! The identity catalog evaluated pointwise: complement splittings,
//! normalization, probability bounds, and exponent collapse, each
//! with both sides printed. Ends with a violation and its witness.

use std::sync::Arc;

use presemiring::functions::MappedFunction;
use presemiring::instances::{make_finite, FiniteKind};
use presemiring::theorems::{verify_identity, IdentityId};

fn main() -> presemiring::Result<()> {
    let s = Arc::new(make_finite(FiniteKind::Powerset { atoms: 3 })?);
    let p = MappedFunction::uniform(s.clone())?;
    let t = s.element_index("{1,2}")?;
    let u = s.element_index("{2,3}")?;

    for (id, args) in [
        (IdentityId::C1, vec![t, u]),
        (IdentityId::C2, vec![t, u]),
        (IdentityId::N1, vec![t]),
        (IdentityId::N2, vec![t, u]),
        (IdentityId::P1, vec![t]),
        (IdentityId::P2, vec![t, u]),
        (IdentityId::P3, vec![t, u]),
        (IdentityId::L1, vec![t, u, 3, 2]),
    ] {
        let out = verify_identity(&p, id, &args)?;
        println!(
            "{:>3}  lhs = {:>4}  rhs = {:>4}  {}",
            id.name(),
            out.lhs.to_string(),
            out.rhs.to_string(),
            out.report.verdict.name()
        );
        assert!(out.report.verdict.holds());
    }

    // A function that is modular but not normalized breaks N1, and
    // the witness is the element it breaks at.
    let two = MappedFunction::from_values(
        s.clone(),
        presemiring::codomain::Codomain::Integers,
        (0..s.size()).map(|_| presemiring::codomain::CoValue::Int(2)).collect(),
    )?;
    let out = verify_identity(&two, IdentityId::N1, &[t])?;
    println!(
        "constant two, n1: lhs = {} rhs = {} -> {}",
        out.lhs,
        out.rhs,
        out.report.verdict.name()
    );
    assert!(!out.report.verdict.holds());
    Ok(())
}
