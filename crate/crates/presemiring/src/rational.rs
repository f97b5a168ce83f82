//! Exact rational arithmetic on `i128` with checked operations.
//!
//! Every value is kept in lowest terms with a positive denominator, so
//! structural equality is value equality. Overflow aborts instead of
//! wrapping; a wrapped intermediate would silently corrupt a verdict.

use std::cmp::Ordering;
use std::fmt;

/// Greatest common divisor of two non-negative integers.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple; errors on overflow.
pub fn lcm_u64(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd_u64(a, b)).checked_mul(b)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

/// Rational number in lowest terms, denominator always positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128,
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    /// Builds `num/den`, reducing to canonical form. Panics on a zero denominator.
    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "rational with zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd_i128(num, den);
        if g == 0 {
            return Rat::ZERO;
        }
        Rat {
            num: sign * (num / g),
            den: (den / g).abs(),
        }
    }

    pub fn from_int(n: i128) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    fn checked(num: Option<i128>, den: Option<i128>) -> Rat {
        let num = num.expect("rational overflow: numerator exceeds i128");
        let den = den.expect("rational overflow: denominator exceeds i128");
        Rat::new(num, den)
    }

    pub fn add(&self, other: &Rat) -> Rat {
        // a/b + c/d with the usual gcd trick to keep intermediates small.
        let g = gcd_i128(self.den, other.den);
        let lhs = self.num.checked_mul(other.den / g);
        let rhs = other.num.checked_mul(self.den / g);
        let num = lhs.and_then(|l| rhs.and_then(|r| l.checked_add(r)));
        let den = self.den.checked_mul(other.den / g);
        Rat::checked(num, den)
    }

    pub fn neg(&self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        // Cross-reduce before multiplying.
        let g1 = gcd_i128(self.num, other.den);
        let g2 = gcd_i128(other.num, self.den);
        let (a, b) = (self.num / g1.max(1), self.den / g2.max(1));
        let (c, d) = (other.num / g2.max(1), other.den / g1.max(1));
        Rat::checked(a.checked_mul(c), b.checked_mul(d))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Rat> {
        if self.num == 0 {
            None
        } else {
            Some(Rat::new(self.den, self.num))
        }
    }

    pub fn div(&self, other: &Rat) -> Option<Rat> {
        other.recip().map(|r| self.mul(&r))
    }

    /// Integer scalar multiple.
    pub fn scale(&self, k: i128) -> Rat {
        self.mul(&Rat::from_int(k))
    }

    /// Parses "p", "-p", or "p/q". Rejects q = 0 and out-of-range digits.
    pub fn parse(s: &str) -> Option<Rat> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i128 = p.trim().parse().ok()?;
                let q: i128 = q.trim().parse().ok()?;
                if q == 0 {
                    None
                } else {
                    Some(Rat::new(p, q))
                }
            }
            None => s.parse::<i128>().ok().map(Rat::from_int),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        // Compare a/b with c/d via ad vs cb; denominators are positive.
        let lhs = self
            .num
            .checked_mul(other.den)
            .expect("rational overflow in comparison");
        let rhs = other
            .num
            .checked_mul(self.den)
            .expect("rational overflow in comparison");
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, 7), Rat::ZERO);
    }

    #[test]
    fn arithmetic() {
        let half = Rat::new(1, 2);
        let third = Rat::new(1, 3);
        assert_eq!(half.add(&third), Rat::new(5, 6));
        assert_eq!(half.sub(&third), Rat::new(1, 6));
        assert_eq!(half.mul(&third), Rat::new(1, 6));
        assert_eq!(half.div(&third), Some(Rat::new(3, 2)));
        assert_eq!(Rat::ZERO.recip(), None);
    }

    #[test]
    fn ordering_and_display() {
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert!(Rat::new(-1, 2) < Rat::ZERO);
        assert_eq!(Rat::new(3, 1).to_string(), "3");
        assert_eq!(Rat::new(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn parsing() {
        assert_eq!(Rat::parse("3/6"), Some(Rat::new(1, 2)));
        assert_eq!(Rat::parse("-4"), Some(Rat::from_int(-4)));
        assert_eq!(Rat::parse("1/0"), None);
        assert_eq!(Rat::parse("x"), None);
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!(gcd_u64(12, 18), 6);
        assert_eq!(gcd_u64(0, 5), 5);
        assert_eq!(lcm_u64(4, 6), Some(12));
        assert_eq!(lcm_u64(0, 3), Some(0));
    }
}
