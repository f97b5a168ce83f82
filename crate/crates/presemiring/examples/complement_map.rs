//! The complemented elements of a semiring form a Boolean algebra
//! when the closure conditions hold. Shown on the subset lattice,
//! with symmetric difference and disjointification on top.

use presemiring::complements::{
    comp_boolean_algebra, disjointify, symdiff, ComplementMap, CompOutcome,
};
use presemiring::instances::{make_finite, FiniteKind};

fn main() -> presemiring::Result<()> {
    let s = make_finite(FiniteKind::Powerset { atoms: 3 })?;
    let m = ComplementMap::build(&s)?;

    match comp_boolean_algebra(&s)? {
        CompOutcome::Boolean(alg) => {
            let names: Vec<String> = alg
                .elements
                .iter()
                .map(|&e| s.element_name(e))
                .collect();
            println!("comp(S) has {} members: {}", names.len(), names.join(" "));
        }
        CompOutcome::NotBoolean { condition, witness } => {
            println!("not Boolean: {} ({:?})", condition, witness);
            return Ok(());
        }
    }

    let a = s.element_index("{1,2}")?;
    let b = s.element_index("{2,3}")?;
    println!(
        "complement of {} is {}",
        s.element_name(a),
        s.element_name(m.of(a).expect("complemented"))
    );
    println!(
        "symdiff({}, {}) = {}",
        s.element_name(a),
        s.element_name(b),
        s.element_name(symdiff(&s, &m, a, b)?)
    );

    // Same sum, pairwise disjoint parts.
    let parts = disjointify(&s, &m, &[a, b])?;
    let shown: Vec<String> = parts.iter().map(|&p| s.element_name(p)).collect();
    println!("disjointify [{}, {}] -> [{}]", s.element_name(a), s.element_name(b), shown.join(", "));
    assert_eq!(s.sum(&parts), s.sum(&[a, b]));
    Ok(())
}
