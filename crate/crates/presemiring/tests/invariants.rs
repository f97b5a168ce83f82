//! Property-based invariants over the arithmetic kernels and the
//! file formats. These are randomized but bounded; the exhaustive
//! and pinned checks live in the unit tests and the acceptance gate.

use std::sync::Arc;

use presemiring::cli::formats::{emit_structure, parse_structure_text};
use presemiring::codomain::{CoValue, Codomain};
use presemiring::dedekind::{self, factor, is_prime, IdealZ, ModularSpec};
use presemiring::functions::MappedFunction;
use presemiring::instances::{make_finite, FiniteKind};
use presemiring::rational::{gcd_u64, Rat};
use presemiring::theorems;

use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-200i128..=200, 1i128..=60).prop_map(|(n, d)| Rat::new(n, d))
}

proptest! {
    #[test]
    fn rat_is_canonical(r in small_rat()) {
        prop_assert!(r.denom() > 0);
        let g = gcd_u64(r.numer().unsigned_abs() as u64, r.denom() as u64);
        prop_assert!(g <= 1 || r.numer() == 0);
    }

    #[test]
    fn rat_field_laws(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&a.neg()), Rat::from_int(0));
        prop_assert_eq!(a.sub(&b).add(&b), a);
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.recip().unwrap()), Rat::from_int(1));
        }
    }

    #[test]
    fn rat_parse_display_round_trip(r in small_rat()) {
        prop_assert_eq!(Rat::parse(&r.to_string()), Some(r));
    }

    #[test]
    fn factor_reconstructs_and_is_prime(n in 2u64..=1_000_000_000_000) {
        let factors = factor(n).unwrap();
        let mut back = 1u64;
        for (&p, &e) in factors.iter() {
            prop_assert!(is_prime(p), "{} listed as prime", p);
            back *= p.pow(e);
        }
        prop_assert_eq!(back, n);
    }

    #[test]
    fn ideal_sum_is_gcd_and_product_multiplies(a in 1u64..=100_000, b in 1u64..=100_000) {
        let ia = IdealZ::new(a).unwrap();
        let ib = IdealZ::new(b).unwrap();
        prop_assert_eq!(ia.sum(&ib).generator(), gcd_u64(a, b));
        prop_assert_eq!(ia.product(&ib).unwrap().generator(), a * b);
        // The radical keeps exactly the distinct prime divisors.
        let rad = ia.radical();
        for (_, &e) in rad.factors().iter() {
            prop_assert_eq!(e, 1);
        }
        prop_assert_eq!(rad.factors().len(), ia.factors().len());
    }

    #[test]
    fn counting_spec_is_modular_on_random_pairs(a in 0u64..=50_000, b in 0u64..=50_000) {
        let spec = ModularSpec::counting();
        let ia = IdealZ::new(a).unwrap();
        let ib = IdealZ::new(b).unwrap();
        let report = dedekind::verify_modular(&spec, &ia, &ib).unwrap();
        prop_assert!(report.verdict.holds());
    }

    #[test]
    fn structure_files_round_trip_across_the_catalog(pick in 0usize..4, a in 1u64..=6, b in 1u64..=6) {
        let kind = match pick {
            0 => FiniteKind::BnI { n: a.max(2) + 1, i: b.min(a.max(2)) },
            1 => FiniteKind::Truncation { k: a },
            2 => FiniteKind::Powerset { atoms: a.min(5) as u32 },
            _ => FiniteKind::Bottleneck { n: a },
        };
        let s = make_finite(kind).unwrap();
        let text = emit_structure(&s);
        let back = parse_structure_text(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(emit_structure(&back), text);
    }

    #[test]
    fn junk_input_never_panics(text in "\\PC{0,160}") {
        let _ = parse_structure_text(&text);
    }

    #[test]
    fn counting_on_subsets_is_modular_and_additive(atoms in 1u32..=5, seed in 0u64..=1000) {
        let s = Arc::new(make_finite(FiniteKind::Powerset { atoms }).unwrap());
        let f = MappedFunction::counting(s.clone(), Codomain::Integers).unwrap();
        let size = s.size();
        let a = (seed as usize * 2654435761) % size;
        let b = (seed as usize).wrapping_mul(40503) % size;
        let lhs = CoValue::Int(match (f.at(s.add(a, b)), f.at(s.mul(a, b))) {
            (CoValue::Int(x), CoValue::Int(y)) => x + y,
            _ => unreachable!("counting takes integer values"),
        });
        let rhs = CoValue::Int(match (f.at(a), f.at(b)) {
            (CoValue::Int(x), CoValue::Int(y)) => x + y,
            _ => unreachable!("counting takes integer values"),
        });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conditioning_chains_multiply(seed in 0u64..=500) {
        // p(s t) = p(s | t) p(t) whenever p(t) is invertible.
        let s = Arc::new(make_finite(FiniteKind::Powerset { atoms: 4 }).unwrap());
        let p = MappedFunction::uniform(s.clone()).unwrap();
        let t = 1 + (seed as usize * 7919) % (s.size() - 1);
        let ev = (seed as usize * 104729) % s.size();
        let cond = theorems::conditional(&p, ev, t).unwrap();
        let joint = p.at(s.mul(ev, t));
        let pt = p.at(t);
        if let (CoValue::Rat(c), CoValue::Rat(j), CoValue::Rat(w)) = (cond, joint, pt) {
            prop_assert_eq!(c.mul(&w), j);
        } else {
            prop_assert!(false, "uniform measure takes rational values");
        }
    }
}
