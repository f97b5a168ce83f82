//! The ideal semiring of the integers. Ideal sum is gcd of
//! generators, ideal product is the product, and a modular function
//! is pinned down by its values at the zero ideal, the whole ring,
//! and the primes.

use std::collections::BTreeMap;

use crate::codomain::{CoValue, Codomain};
use crate::functions::PropertyReport;
use crate::rational::{gcd_u64, lcm_u64};
use crate::structure::Witness;
use crate::symbolic::{rng_for, SymValue};
use crate::theorems::ValuesOutcome;
use crate::{Error, Result};

/// Prime to positive exponent, sorted by prime.
pub type Factorization = BTreeMap<u64, u32>;

/// Generators above this are rejected rather than factored.
pub const FACTOR_BOUND: u64 = (1 << 63) - 1;

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin. The fixed base set decides primality
/// for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'base: for a in SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// One nontrivial divisor of an odd composite n. The polynomial
/// offset steps through a fixed schedule, so the result is
/// deterministic.
fn split(n: u64) -> u64 {
    for c in 1..64u64 {
        let step = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let d = loop {
            x = step(x);
            y = step(step(y));
            let d = gcd_u64(x.abs_diff(y), n);
            if d != 1 {
                break d;
            }
        };
        if d != n {
            return d;
        }
    }
    let mut p = 3u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            return p;
        }
        p += 2;
    }
    n
}

/// Exact prime factorization of g >= 1.
pub fn factor(g: u64) -> Result<Factorization> {
    if g == 0 {
        return Err(Error::Usage("cannot factor 0".to_string()));
    }
    if g > FACTOR_BOUND {
        return Err(Error::Bound(format!(
            "generator {} exceeds the factorization bound {}",
            g, FACTOR_BOUND
        )));
    }
    let mut out = Factorization::new();
    let mut m = g;
    for p in SMALL_PRIMES {
        while m % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            m /= p;
        }
    }
    let mut stack = vec![m];
    while let Some(v) = stack.pop() {
        if v == 1 {
            continue;
        }
        if is_prime(v) {
            *out.entry(v).or_insert(0) += 1;
            continue;
        }
        let d = split(v);
        stack.push(d);
        stack.push(v / d);
    }
    Ok(out)
}

/// An ideal of the integers, kept with its factorization. Generator
/// 0 is the zero ideal and 1 is the whole ring; both factor as the
/// empty product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealZ {
    generator: u64,
    factorization: Factorization,
}

impl IdealZ {
    pub fn new(generator: u64) -> Result<IdealZ> {
        let factorization = if generator < 2 {
            Factorization::new()
        } else {
            factor(generator)?
        };
        Ok(IdealZ {
            generator,
            factorization,
        })
    }

    pub fn zero_ideal() -> IdealZ {
        IdealZ {
            generator: 0,
            factorization: Factorization::new(),
        }
    }

    pub fn whole_ring() -> IdealZ {
        IdealZ {
            generator: 1,
            factorization: Factorization::new(),
        }
    }

    /// Builds an ideal from an already factored form. Labels must be
    /// distinct primes with positive exponents; this is also the door
    /// for callers that factored elsewhere.
    pub fn from_factors(factors: &[(u64, u32)]) -> Result<IdealZ> {
        let mut map = Factorization::new();
        let mut generator: u64 = 1;
        for &(p, e) in factors {
            if !is_prime(p) {
                return Err(Error::Usage(format!("{} is not prime", p)));
            }
            if e == 0 {
                return Err(Error::Usage(format!("exponent of {} must be positive", p)));
            }
            if map.insert(p, e).is_some() {
                return Err(Error::Usage(format!("prime {} listed twice", p)));
            }
            for _ in 0..e {
                generator = generator.checked_mul(p).ok_or_else(|| {
                    Error::Bound("factored generator exceeds 64 bits".to_string())
                })?;
            }
        }
        if generator > FACTOR_BOUND {
            return Err(Error::Bound(format!(
                "generator {} exceeds the factorization bound {}",
                generator, FACTOR_BOUND
            )));
        }
        Ok(IdealZ {
            generator,
            factorization: map,
        })
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn factors(&self) -> &Factorization {
        &self.factorization
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generator == 0
    }

    pub fn is_whole_ring(&self) -> bool {
        self.generator == 1
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> IdealZ {
        let factorization: Factorization =
            self.factorization.keys().map(|&p| (p, 1)).collect();
        let generator = if self.generator < 2 {
            self.generator
        } else {
            self.factorization.keys().product()
        };
        IdealZ {
            generator,
            factorization,
        }
    }

    /// Ideal sum: (a) + (b) = (gcd(a, b)), realized on factorizations
    /// as the prime-wise minimum.
    pub fn sum(&self, other: &IdealZ) -> IdealZ {
        if self.is_zero_ideal() {
            return other.clone();
        }
        if other.is_zero_ideal() {
            return self.clone();
        }
        let mut factorization = Factorization::new();
        let mut generator: u64 = 1;
        for (&p, &e) in &self.factorization {
            if let Some(&e2) = other.factorization.get(&p) {
                let m = e.min(e2);
                factorization.insert(p, m);
                for _ in 0..m {
                    generator *= p;
                }
            }
        }
        debug_assert_eq!(generator, gcd_u64(self.generator, other.generator));
        IdealZ {
            generator,
            factorization,
        }
    }

    /// Ideal product: generators multiply, exponents add.
    pub fn product(&self, other: &IdealZ) -> Result<IdealZ> {
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(IdealZ::zero_ideal());
        }
        let generator = self
            .generator
            .checked_mul(other.generator)
            .filter(|&g| g <= FACTOR_BOUND)
            .ok_or_else(|| {
                Error::Bound(format!(
                    "product of generators {} and {} exceeds the bound {}",
                    self.generator, other.generator, FACTOR_BOUND
                ))
            })?;
        let mut factorization = self.factorization.clone();
        for (&p, &e) in &other.factorization {
            *factorization.entry(p).or_insert(0) += e;
        }
        Ok(IdealZ {
            generator,
            factorization,
        })
    }

    pub fn pow(&self, e: u32) -> Result<IdealZ> {
        let mut acc = IdealZ::whole_ring();
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

/// A modular function on the ideal semiring, given by its values at
/// the zero ideal, the whole ring, and each prime. Unlisted primes
/// take the default value.
#[derive(Clone, Debug)]
pub struct ModularSpec {
    pub codomain: Codomain,
    at_zero_ideal: CoValue,
    at_whole_ring: CoValue,
    default_prime: CoValue,
    prime_values: BTreeMap<u64, CoValue>,
}

impl ModularSpec {
    pub fn new(
        codomain: Codomain,
        at_zero_ideal: CoValue,
        at_whole_ring: CoValue,
        default_prime: CoValue,
        prime_values: BTreeMap<u64, CoValue>,
    ) -> Result<ModularSpec> {
        codomain.validate(&at_zero_ideal)?;
        codomain.validate(&at_whole_ring)?;
        codomain.validate(&default_prime)?;
        for (&p, v) in &prime_values {
            if !is_prime(p) {
                return Err(Error::Usage(format!("{} is not prime", p)));
            }
            codomain.validate(v)?;
        }
        Ok(ModularSpec {
            codomain,
            at_zero_ideal,
            at_whole_ring,
            default_prime,
            prime_values,
        })
    }

    /// f(a) = number of distinct prime factors of the generator.
    pub fn counting() -> ModularSpec {
        ModularSpec {
            codomain: Codomain::Integers,
            at_zero_ideal: CoValue::Int(0),
            at_whole_ring: CoValue::Int(0),
            default_prime: CoValue::Int(1),
            prime_values: BTreeMap::new(),
        }
    }

    pub fn value_at_zero_ideal(&self) -> CoValue {
        self.at_zero_ideal
    }

    pub fn value_at_whole_ring(&self) -> CoValue {
        self.at_whole_ring
    }

    pub fn value_at_prime(&self, p: u64) -> CoValue {
        self.prime_values.get(&p).copied().unwrap_or(self.default_prime)
    }

    pub fn listed_primes(&self) -> impl Iterator<Item = (u64, CoValue)> + '_ {
        self.prime_values.iter().map(|(&p, &v)| (p, v))
    }

    pub fn default_prime_value(&self) -> CoValue {
        self.default_prime
    }

    /// f(p1^a1 ... pk^ak) = f(p1) + ... + f(pk) - (k - 1) f(D).
    /// Exponents do not enter.
    pub fn eval(&self, a: &IdealZ) -> CoValue {
        if a.is_zero_ideal() {
            return self.at_zero_ideal;
        }
        let k = a.factorization.len();
        if k == 0 {
            return self.at_whole_ring;
        }
        let co = self.codomain;
        let mut acc = co.zero();
        for &p in a.factorization.keys() {
            acc = co.op(&acc, &self.value_at_prime(p));
        }
        co.op_sub(&acc, &co.op_scale(&self.at_whole_ring, (k - 1) as u64))
    }

    pub fn eval_generator(&self, n: u64) -> Result<CoValue> {
        Ok(self.eval(&IdealZ::new(n)?))
    }
}

/// Checks f(a + b) + f(ab) = f(a) + f(b) for one ideal pair.
pub fn verify_modular(spec: &ModularSpec, a: &IdealZ, b: &IdealZ) -> Result<PropertyReport> {
    let co = spec.codomain;
    let sum = a.sum(b);
    let prod = a.product(b)?;
    let lhs = co.op(&spec.eval(&sum), &spec.eval(&prod));
    let rhs = co.op(&spec.eval(a), &spec.eval(b));
    Ok(if lhs == rhs {
        PropertyReport::holds("modular", 1)
    } else {
        PropertyReport::fails(
            "modular",
            Witness::Values(vec![
                SymValue::Nat(a.generator),
                SymValue::Nat(b.generator),
            ]),
            1,
        )
    })
}

/// Seeded random-pair verification: generators are drawn from
/// 0..=max_generator, with the zero ideal and whole ring kept in the
/// mix.
pub fn verify_sampled(
    spec: &ModularSpec,
    trials: u64,
    seed: u64,
    max_generator: u64,
) -> Result<PropertyReport> {
    if max_generator < 2 {
        return Err(Error::Usage("max generator must be at least 2".to_string()));
    }
    let mut rng = rng_for(seed);
    let mut checked = 0u64;
    for _ in 0..trials {
        let a = IdealZ::new(crate::symbolic::draw_below(&mut rng, max_generator + 1))?;
        let b = IdealZ::new(crate::symbolic::draw_below(&mut rng, max_generator + 1))?;
        let report = verify_modular(spec, &a, &b)?;
        checked += 1;
        if !report.verdict.holds() {
            return Ok(PropertyReport::fails(
                "modular",
                report.witness.expect("failed check carries its pair"),
                checked,
            ));
        }
    }
    Ok(PropertyReport::sampled("modular", checked))
}

/// A spec with pseudorandom values at the primes below 100, drawn
/// deterministically from the seed. Alternates between integer and
/// modular codomains.
pub fn random_spec(seed: u64) -> ModularSpec {
    let mut rng = rng_for(seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(seed));
    let modulus = 3 + crate::symbolic::draw_below(&mut rng, 60);
    let codomain = if seed % 2 == 0 {
        Codomain::Integers
    } else {
        Codomain::IntegersMod(modulus)
    };
    let draw_value = |rng: &mut _| -> CoValue {
        let raw = crate::symbolic::draw_below(rng, 41) as i128 - 20;
        match codomain {
            Codomain::Integers => CoValue::Int(raw),
            Codomain::IntegersMod(m) => CoValue::Mod(raw.rem_euclid(m as i128) as u64),
            _ => unreachable!("random specs stay in additive integer codomains"),
        }
    };
    let at_zero_ideal = draw_value(&mut rng);
    let at_whole_ring = draw_value(&mut rng);
    let default_prime = draw_value(&mut rng);
    let mut prime_values = BTreeMap::new();
    for p in SMALL_PRIMES.into_iter().chain([41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]) {
        prime_values.insert(p, draw_value(&mut rng));
    }
    ModularSpec {
        codomain,
        at_zero_ideal,
        at_whole_ring,
        default_prime,
        prime_values,
    }
}

/// f(x^m y^n) = f(xy) for the induced modular function. The ideal
/// semiring is simple, which this re-checks concretely on the inputs,
/// and modularity of f on the pair is verified first.
pub fn simple_power_reduction(
    spec: &ModularSpec,
    x: u64,
    y: u64,
    m: u32,
    n: u32,
) -> Result<PropertyReport> {
    if m == 0 || n == 0 {
        return Err(Error::Usage("exponents must be at least 1".to_string()));
    }
    let xi = IdealZ::new(x)?;
    let yi = IdealZ::new(y)?;
    for z in [&xi, &yi] {
        if z.sum(&IdealZ::whole_ring()) != IdealZ::whole_ring() {
            return Err(Error::hypothesis(
                "simple-power-reduction",
                format!("carrier is not simple at {}", z.generator),
            ));
        }
    }
    let base = verify_modular(spec, &xi, &yi)?;
    if !base.verdict.holds() {
        return Err(Error::hypothesis(
            "simple-power-reduction",
            format!("spec is not modular on the pair ({}, {})", x, y),
        ));
    }
    let lhs = spec.eval(&xi.pow(m)?.product(&yi.pow(n)?)?);
    let rhs = spec.eval(&xi.product(&yi)?);
    Ok(if lhs == rhs {
        PropertyReport::holds("power-reduction", 2)
    } else {
        PropertyReport::fails(
            "power-reduction",
            Witness::Values(vec![SymValue::Nat(x), SymValue::Nat(y)]),
            2,
        )
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorollaryVariant {
    Gcd,
    Lcm,
}

impl CorollaryVariant {
    pub fn name(&self) -> &'static str {
        match self {
            CorollaryVariant::Gcd => "gcd",
            CorollaryVariant::Lcm => "lcm",
        }
    }

    pub fn parse(s: &str) -> Result<CorollaryVariant> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gcd" => Ok(CorollaryVariant::Gcd),
            "lcm" => Ok(CorollaryVariant::Lcm),
            other => Err(Error::Usage(format!("unknown variant {:?}", other))),
        }
    }
}

/// f(variant(a, b)) + f(ab) versus f(a) + f(b) on plain positive
/// integers. The gcd variant is the modular law itself; the lcm
/// variant is kept checkable because it is refuted by computation
/// rather than assumed.
pub fn corollary_check(
    spec: &ModularSpec,
    a: u64,
    b: u64,
    variant: CorollaryVariant,
) -> Result<ValuesOutcome> {
    if a < 1 || b < 1 {
        return Err(Error::Usage("arguments must be at least 1".to_string()));
    }
    let combined = match variant {
        CorollaryVariant::Gcd => gcd_u64(a, b),
        CorollaryVariant::Lcm => lcm_u64(a, b)
            .ok_or_else(|| Error::Bound(format!("lcm of {} and {} overflows", a, b)))?,
    };
    let ab = a
        .checked_mul(b)
        .filter(|&g| g <= FACTOR_BOUND)
        .ok_or_else(|| Error::Bound(format!("product of {} and {} exceeds the bound", a, b)))?;
    let co = spec.codomain;
    let lhs = co.op(&spec.eval_generator(combined)?, &spec.eval_generator(ab)?);
    let rhs = co.op(&spec.eval_generator(a)?, &spec.eval_generator(b)?);
    let property = format!("corollary-{}", variant.name());
    let report = if lhs == rhs {
        PropertyReport::holds(property, 1)
    } else {
        PropertyReport::fails(
            property,
            Witness::Values(vec![SymValue::Nat(a), SymValue::Nat(b)]),
            1,
        )
    };
    Ok(ValuesOutcome { lhs, rhs, report })
}
