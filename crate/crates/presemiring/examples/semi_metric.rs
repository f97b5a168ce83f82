//! d(s, t) = m(s symdiff t) is a semi-metric on the complemented
//! elements, and a metric when m is positive off zero. The full
//! distance table for the counting measure on three points.

use std::sync::Arc;

use presemiring::codomain::Codomain;
use presemiring::functions::MappedFunction;
use presemiring::instances::{make_finite, FiniteKind};
use presemiring::theorems;

fn main() -> presemiring::Result<()> {
    let s = Arc::new(make_finite(FiniteKind::Powerset { atoms: 3 })?);
    let m = MappedFunction::counting(s.clone(), Codomain::Integers)?;

    // Empty slice means all of comp(S), here every subset.
    let out = theorems::semi_metric(&m, &[])?;
    assert!(out.report.verdict.holds());

    let width = 7;
    print!("{:>width$}", "");
    for &e in &out.elements {
        print!("{:>width$}", s.element_name(e));
    }
    println!();
    for (i, &e) in out.elements.iter().enumerate() {
        print!("{:>width$}", s.element_name(e));
        for v in &out.table[i] {
            print!("{:>width$}", v.to_string());
        }
        println!();
    }
    println!(
        "triangle inequality checked on {} triples; metric = {}",
        out.report.checked, out.metric
    );
    Ok(())
}
