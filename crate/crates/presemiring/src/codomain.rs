//! Codomains for mapped functions.
//!
//! Four exact codomains are supported: the integers, the integers mod m,
//! the rationals, and the positive rationals under multiplication. The
//! first three are rings; the last is only a commutative group, so its
//! group operation plays the role of "addition" in additivity and
//! modularity checks, and ring multiplication is unavailable on it.

use crate::rational::{gcd_u64, Rat};
use crate::{Error, Result};
use std::fmt;

/// The codomain of a mapped function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Codomain {
    /// (Z, +, *), ordered ring.
    Integers,
    /// Z/mZ with m >= 2. A ring, not ordered.
    IntegersMod(u64),
    /// (Q, +, *), ordered field.
    Rationals,
    /// (Q > 0, *), ordered commutative group. Its group operation is
    /// multiplication; there is no second operation.
    PositiveRationalsUnderMultiplication,
}

/// A value in one of the supported codomains.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoValue {
    Int(i128),
    Mod(u64),
    Rat(Rat),
}

impl Codomain {
    pub fn name(&self) -> String {
        match self {
            Codomain::Integers => "int".to_string(),
            Codomain::IntegersMod(m) => format!("zmod {}", m),
            Codomain::Rationals => "rational".to_string(),
            Codomain::PositiveRationalsUnderMultiplication => "mulrational".to_string(),
        }
    }

    /// True when the codomain carries a ring multiplication.
    pub fn is_ring(&self) -> bool {
        !matches!(self, Codomain::PositiveRationalsUnderMultiplication)
    }

    /// True when the codomain carries a total order compatible with its
    /// operations.
    pub fn is_ordered(&self) -> bool {
        !matches!(self, Codomain::IntegersMod(_))
    }

    /// Neutral element of the group operation.
    pub fn zero(&self) -> CoValue {
        match self {
            Codomain::Integers => CoValue::Int(0),
            Codomain::IntegersMod(_) => CoValue::Mod(0),
            Codomain::Rationals => CoValue::Rat(Rat::ZERO),
            Codomain::PositiveRationalsUnderMultiplication => CoValue::Rat(Rat::ONE),
        }
    }

    /// Multiplicative unit for rings; the group neutral for the
    /// multiplicative rationals.
    pub fn one(&self) -> CoValue {
        match self {
            Codomain::Integers => CoValue::Int(1),
            Codomain::IntegersMod(_) => CoValue::Mod(1),
            Codomain::Rationals | Codomain::PositiveRationalsUnderMultiplication => {
                CoValue::Rat(Rat::ONE)
            }
        }
    }

    /// Checks that a value belongs to this codomain.
    pub fn validate(&self, v: &CoValue) -> Result<()> {
        let ok = match (self, v) {
            (Codomain::Integers, CoValue::Int(_)) => true,
            (Codomain::IntegersMod(m), CoValue::Mod(r)) => r < m,
            (Codomain::Rationals, CoValue::Rat(_)) => true,
            (Codomain::PositiveRationalsUnderMultiplication, CoValue::Rat(r)) => r.is_positive(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Structure(format!(
                "value {} does not belong to codomain {}",
                v,
                self.name()
            )))
        }
    }

    /// The group operation: ordinary addition for the rings, ordinary
    /// multiplication for the multiplicative rationals.
    pub fn op(&self, a: &CoValue, b: &CoValue) -> CoValue {
        match (self, a, b) {
            (Codomain::Integers, CoValue::Int(x), CoValue::Int(y)) => {
                CoValue::Int(x.checked_add(*y).expect("integer overflow in codomain"))
            }
            (Codomain::IntegersMod(m), CoValue::Mod(x), CoValue::Mod(y)) => {
                CoValue::Mod((x + y) % m)
            }
            (Codomain::Rationals, CoValue::Rat(x), CoValue::Rat(y)) => CoValue::Rat(x.add(y)),
            (Codomain::PositiveRationalsUnderMultiplication, CoValue::Rat(x), CoValue::Rat(y)) => {
                CoValue::Rat(x.mul(y))
            }
            _ => unreachable!("codomain value mismatch"),
        }
    }

    /// Group inverse.
    pub fn op_inverse(&self, a: &CoValue) -> CoValue {
        match (self, a) {
            (Codomain::Integers, CoValue::Int(x)) => CoValue::Int(-x),
            (Codomain::IntegersMod(m), CoValue::Mod(x)) => CoValue::Mod((m - x) % m),
            (Codomain::Rationals, CoValue::Rat(x)) => CoValue::Rat(x.neg()),
            (Codomain::PositiveRationalsUnderMultiplication, CoValue::Rat(x)) => {
                CoValue::Rat(x.recip().expect("positive rational with no inverse"))
            }
            _ => unreachable!("codomain value mismatch"),
        }
    }

    /// a combined with the inverse of b.
    pub fn op_sub(&self, a: &CoValue, b: &CoValue) -> CoValue {
        self.op(a, &self.op_inverse(b))
    }

    /// k-fold group combination of a, k >= 0.
    pub fn op_scale(&self, a: &CoValue, k: u64) -> CoValue {
        match (self, a) {
            (Codomain::Integers, CoValue::Int(x)) => {
                CoValue::Int(x.checked_mul(k as i128).expect("integer overflow in scale"))
            }
            (Codomain::IntegersMod(m), CoValue::Mod(x)) => {
                CoValue::Mod((((*x as u128) * (k as u128)) % (*m as u128)) as u64)
            }
            (Codomain::Rationals, CoValue::Rat(x)) => CoValue::Rat(x.scale(k as i128)),
            (Codomain::PositiveRationalsUnderMultiplication, CoValue::Rat(x)) => {
                let mut acc = Rat::ONE;
                for _ in 0..k {
                    acc = acc.mul(x);
                }
                CoValue::Rat(acc)
            }
            _ => unreachable!("codomain value mismatch"),
        }
    }

    /// Ring multiplication; inapplicable on the multiplicative rationals.
    pub fn ring_mul(&self, a: &CoValue, b: &CoValue) -> Result<CoValue> {
        match (self, a, b) {
            (Codomain::Integers, CoValue::Int(x), CoValue::Int(y)) => Ok(CoValue::Int(
                x.checked_mul(*y).expect("integer overflow in codomain"),
            )),
            (Codomain::IntegersMod(m), CoValue::Mod(x), CoValue::Mod(y)) => Ok(CoValue::Mod(
                (((*x as u128) * (*y as u128)) % (*m as u128)) as u64,
            )),
            (Codomain::Rationals, CoValue::Rat(x), CoValue::Rat(y)) => Ok(CoValue::Rat(x.mul(y))),
            (Codomain::PositiveRationalsUnderMultiplication, _, _) => Err(Error::Inapplicable(
                "the multiplicative rationals carry no ring multiplication".to_string(),
            )),
            _ => unreachable!("codomain value mismatch"),
        }
    }

    /// Order comparison a <= b; inapplicable mod m.
    pub fn le(&self, a: &CoValue, b: &CoValue) -> Result<bool> {
        match (self, a, b) {
            (Codomain::Integers, CoValue::Int(x), CoValue::Int(y)) => Ok(x <= y),
            (Codomain::Rationals, CoValue::Rat(x), CoValue::Rat(y))
            | (Codomain::PositiveRationalsUnderMultiplication, CoValue::Rat(x), CoValue::Rat(y)) => {
                Ok(x <= y)
            }
            (Codomain::IntegersMod(_), _, _) => Err(Error::Inapplicable(
                "the integers mod m carry no order".to_string(),
            )),
            _ => unreachable!("codomain value mismatch"),
        }
    }

    /// Multiplicative inverse with respect to ring multiplication, or the
    /// group inverse on the multiplicative rationals. `None` when the
    /// value is not invertible.
    pub fn invert(&self, a: &CoValue) -> Option<CoValue> {
        match (self, a) {
            (Codomain::Integers, CoValue::Int(x)) => match x {
                1 => Some(CoValue::Int(1)),
                -1 => Some(CoValue::Int(-1)),
                _ => None,
            },
            (Codomain::IntegersMod(m), CoValue::Mod(x)) => {
                if gcd_u64(*x, *m) == 1 {
                    Some(CoValue::Mod(mod_inverse(*x, *m)))
                } else {
                    None
                }
            }
            (Codomain::Rationals, CoValue::Rat(x)) => x.recip().map(CoValue::Rat),
            (Codomain::PositiveRationalsUnderMultiplication, CoValue::Rat(x)) => {
                x.recip().map(CoValue::Rat)
            }
            _ => unreachable!("codomain value mismatch"),
        }
    }

    /// Parses a value in this codomain's textual form.
    pub fn parse_value(&self, s: &str) -> Result<CoValue> {
        let err = || {
            Error::Structure(format!(
                "cannot parse {:?} as a value of codomain {}",
                s,
                self.name()
            ))
        };
        let v = match self {
            Codomain::Integers => {
                let n: i128 = s.trim().parse().map_err(|_| err())?;
                CoValue::Int(n)
            }
            Codomain::IntegersMod(_) => {
                let n: u64 = s.trim().parse().map_err(|_| err())?;
                CoValue::Mod(n)
            }
            Codomain::Rationals | Codomain::PositiveRationalsUnderMultiplication => {
                CoValue::Rat(Rat::parse(s).ok_or_else(err)?)
            }
        };
        self.validate(&v)?;
        Ok(v)
    }

    /// Parses a codomain name: `int`, `zmod <m>`, `rational`,
    /// `mulrational`. Also accepts `zmod:<m>`.
    pub fn parse_name(s: &str) -> Result<Codomain> {
        let s = s.trim();
        let norm = s.replace(':', " ");
        let mut parts = norm.split_whitespace();
        let head = parts.next().unwrap_or("");
        let tail = parts.next();
        match (head, tail) {
            ("int", None) => Ok(Codomain::Integers),
            ("rational", None) => Ok(Codomain::Rationals),
            ("mulrational", None) => Ok(Codomain::PositiveRationalsUnderMultiplication),
            ("zmod", Some(m)) => {
                let m: u64 = m
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad modulus in {:?}", s)))?;
                if m < 2 {
                    return Err(Error::Usage("zmod modulus must be at least 2".to_string()));
                }
                Ok(Codomain::IntegersMod(m))
            }
            _ => Err(Error::Usage(format!("unknown codomain {:?}", s))),
        }
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // Extended Euclid; caller guarantees gcd(a, m) = 1.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

impl fmt::Display for CoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoValue::Int(n) => write!(f, "{}", n),
            CoValue::Mod(r) => write!(f, "{}", r),
            CoValue::Rat(r) => write!(f, "{}", r),
        }
    }
}

impl fmt::Debug for CoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_ops() {
        let z4 = Codomain::IntegersMod(4);
        assert_eq!(z4.op(&CoValue::Mod(3), &CoValue::Mod(2)), CoValue::Mod(1));
        assert_eq!(
            z4.ring_mul(&CoValue::Mod(3), &CoValue::Mod(2)).unwrap(),
            CoValue::Mod(2)
        );
        assert_eq!(z4.op_inverse(&CoValue::Mod(1)), CoValue::Mod(3));
        assert_eq!(z4.op_inverse(&CoValue::Mod(0)), CoValue::Mod(0));
    }

    #[test]
    fn multiplicative_rationals_are_a_group_not_a_ring() {
        let g = Codomain::PositiveRationalsUnderMultiplication;
        let two = CoValue::Rat(Rat::from_int(2));
        let three = CoValue::Rat(Rat::from_int(3));
        assert_eq!(g.op(&two, &three), CoValue::Rat(Rat::from_int(6)));
        assert_eq!(g.zero(), CoValue::Rat(Rat::ONE));
        assert!(g.ring_mul(&two, &three).is_err());
        assert!(g.validate(&CoValue::Rat(Rat::from_int(-2))).is_err());
    }

    #[test]
    fn modular_inverse() {
        let z9 = Codomain::IntegersMod(9);
        assert_eq!(z9.invert(&CoValue::Mod(2)), Some(CoValue::Mod(5)));
        assert_eq!(z9.invert(&CoValue::Mod(3)), None);
        assert_eq!(Codomain::Integers.invert(&CoValue::Int(-1)), Some(CoValue::Int(-1)));
        assert_eq!(Codomain::Integers.invert(&CoValue::Int(2)), None);
    }

    #[test]
    fn names_round_trip() {
        for c in [
            Codomain::Integers,
            Codomain::IntegersMod(7),
            Codomain::Rationals,
            Codomain::PositiveRationalsUnderMultiplication,
        ] {
            assert_eq!(Codomain::parse_name(&c.name()).unwrap(), c);
        }
        assert!(Codomain::parse_name("zmod 1").is_err());
    }

    #[test]
    fn scale_matches_repeated_op() {
        let q = Codomain::Rationals;
        let v = CoValue::Rat(Rat::new(2, 3));
        let mut acc = q.zero();
        for _ in 0..5 {
            acc = q.op(&acc, &v);
        }
        assert_eq!(q.op_scale(&v, 5), acc);

        let g = Codomain::PositiveRationalsUnderMultiplication;
        let w = CoValue::Rat(Rat::new(3, 2));
        let mut acc = g.zero();
        for _ in 0..4 {
            acc = g.op(&acc, &w);
        }
        assert_eq!(g.op_scale(&w, 4), acc);
    }
}
