//! Inclusion and exclusion without subtraction: the even-size meet
//! terms join the union on the left, the odd-size terms stand on the
//! right, and the two sides agree. Shown term by term for a counting
//! measure over subsets.

use std::sync::Arc;

use presemiring::codomain::Codomain;
use presemiring::functions::MappedFunction;
use presemiring::instances::{make_finite, FiniteKind};
use presemiring::theorems;

fn main() -> presemiring::Result<()> {
    let s = Arc::new(make_finite(FiniteKind::Powerset { atoms: 4 })?);
    let m = MappedFunction::counting(s.clone(), Codomain::Integers)?;
    let elems = [
        s.element_index("{1,2}")?,
        s.element_index("{2,3}")?,
        s.element_index("{3,4}")?,
    ];

    let union = s.sum(&elems).expect("nonempty");
    println!("m({}) joined with the even-size meets:", s.element_name(union));
    for mask in 1u32..1 << elems.len() {
        let subset: Vec<usize> = (0..elems.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| elems[i])
            .collect();
        let meet = s.product(&subset).expect("nonempty");
        let side = if subset.len() % 2 == 0 { "left " } else { "right" };
        println!(
            "  {}  m({}) = {}",
            side,
            s.element_name(meet),
            m.at(meet)
        );
    }

    let out = theorems::poincare(&m, &elems)?;
    println!("left = {}, right = {}", out.lhs, out.rhs);
    assert!(out.report.verdict.holds());

    // The same identity for the uniform probability, exact in Q.
    let p = MappedFunction::uniform(s.clone())?;
    let out = theorems::poincare(&p, &elems)?;
    println!("uniform measure: left = {}, right = {}", out.lhs, out.rhs);
    assert!(out.report.verdict.holds());
    Ok(())
}
