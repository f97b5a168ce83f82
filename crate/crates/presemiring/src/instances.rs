//! Builders for the finite instance catalog, and the `builtin:` name
//! syntax used by file formats and the command line.

use crate::intervals::IntervalUnionSet;
use crate::rational::Rat;
use crate::structure::{FiniteStructure, NameScheme};
use crate::symbolic::{SymbolicKind, SymbolicStructure};
use crate::{Error, Result};

/// A named finite instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FiniteKind {
    /// Carrier {0..n-1}. A sum or product staying below n is kept;
    /// anything larger wraps to the congruent value in [i, n-1].
    BnI { n: u64, i: u64 },
    /// Subsets of {1..m} under union and intersection.
    Powerset { atoms: u32 },
    /// Carrier {ninf, 0..k} under max and capped integer addition.
    Truncation { k: u64 },
    /// Chain {0..n-1} under max and min, with no declared neutrals.
    Bottleneck { n: u64 },
    /// Carrier {ninf, 0..cap} under max and capped addition. Same
    /// tables as a truncation; listed under its own name.
    ArcticWindow { cap: u64 },
}

/// Builds the requested finite instance.
pub fn make_finite(kind: FiniteKind) -> Result<FiniteStructure> {
    match kind {
        FiniteKind::BnI { n, i } => {
            if i == 0 || i >= n || n > 4096 {
                return Err(Error::Structure(format!(
                    "bni needs 0 < i < n <= 4096, got n={} i={}",
                    n, i
                )));
            }
            let wrap = |s: u64| if s <= n - 1 { s } else { i + (s - i) % (n - i) };
            let size = n as usize;
            let mut add = vec![0u32; size * size];
            let mut mul = vec![0u32; size * size];
            for a in 0..n {
                for b in 0..n {
                    add[(a * n + b) as usize] = wrap(a + b) as u32;
                    mul[(a * n + b) as usize] = wrap(a * b) as u32;
                }
            }
            FiniteStructure::from_tables(add, mul, Some(0), Some(1), NameScheme::Numeric)
        }
        FiniteKind::Powerset { atoms } => FiniteStructure::powerset(atoms),
        FiniteKind::Truncation { k } => truncation_like(k, "truncation"),
        FiniteKind::ArcticWindow { cap } => truncation_like(cap, "arcticwindow"),
        FiniteKind::Bottleneck { n } => {
            if n < 1 || n > 4096 {
                return Err(Error::Structure(format!(
                    "bottleneck needs 1 <= n <= 4096, got {}",
                    n
                )));
            }
            let size = n as usize;
            let mut add = vec![0u32; size * size];
            let mut mul = vec![0u32; size * size];
            for a in 0..size {
                for b in 0..size {
                    add[a * size + b] = a.max(b) as u32;
                    mul[a * size + b] = a.min(b) as u32;
                }
            }
            FiniteStructure::from_tables(add, mul, None, None, NameScheme::Numeric)
        }
    }
}

/// Shared table builder for the capped max-plus carriers
/// {ninf, 0, .., k}: index 0 is ninf, index j+1 is the integer j.
fn truncation_like(k: u64, label: &str) -> Result<FiniteStructure> {
    if k < 1 || k > 4094 {
        return Err(Error::Structure(format!(
            "{} needs 1 <= k <= 4094, got {}",
            label, k
        )));
    }
    let size = (k + 2) as usize;
    let mut add = vec![0u32; size * size];
    let mut mul = vec![0u32; size * size];
    for a in 0..size {
        for b in 0..size {
            add[a * size + b] = a.max(b) as u32;
            mul[a * size + b] = if a == 0 || b == 0 {
                0
            } else {
                let s = (a - 1) + (b - 1);
                (s.min(k as usize) + 1) as u32
            };
        }
    }
    FiniteStructure::from_tables(add, mul, Some(0), Some(1), NameScheme::NinfThen)
}

/// Either side of the instance catalog.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Finite(FiniteStructure),
    Symbolic(SymbolicStructure),
}

/// Parses a `builtin:` name such as `builtin:bni(5,2)` or
/// `builtin:tropical`, returning the built instance.
pub fn parse_builtin(name: &str) -> Result<Instance> {
    let spec = name
        .strip_prefix("builtin:")
        .ok_or_else(|| Error::Usage(format!("expected builtin:<kind>, got {}", name)))?;
    let (kind, args) = split_call(spec)?;
    if let Some(k) = finite_kind_from(kind, &args)? {
        return make_finite(k).map(Instance::Finite);
    }
    let symbolic = |k: SymbolicKind| Ok(Instance::Symbolic(SymbolicStructure::new(k)));
    match kind {
        "tropical" => symbolic(SymbolicKind::Tropical),
        "arctic" => symbolic(SymbolicKind::Arctic),
        "gminplus" => symbolic(SymbolicKind::GMinPlus),
        "lcmgcd" => symbolic(SymbolicKind::LcmGcd),
        "gcdmul" => symbolic(SymbolicKind::GcdMul),
        "litvinov" => symbolic(SymbolicKind::Litvinov),
        "maxplusq" => symbolic(SymbolicKind::MaxPlusQ),
        "qnonneg" => symbolic(SymbolicKind::QNonNeg),
        "sh" => {
            let [h] = take_u64s::<1>(&args, "sh")?;
            if h == 0 || h > 64 {
                return Err(Error::Usage("sh needs 1 <= h <= 64".to_string()));
            }
            symbolic(SymbolicKind::Sh { h: h as u32 })
        }
        "intervale" => symbolic(SymbolicKind::IntervalE),
        "intervale-literal" => symbolic(SymbolicKind::IntervalELiteral),
        "finitecofinite" => symbolic(SymbolicKind::FiniteCofinite),
        "intervalunions" => {
            if args.len() != 2 {
                return Err(Error::Usage(
                    "intervalunions needs two rational bounds".to_string(),
                ));
            }
            let lo = Rat::parse(&args[0])
                .ok_or_else(|| Error::Usage(format!("bad rational bound {:?}", args[0])))?;
            let hi = Rat::parse(&args[1])
                .ok_or_else(|| Error::Usage(format!("bad rational bound {:?}", args[1])))?;
            if lo >= hi {
                return Err(Error::Usage("intervalunions needs lo < hi".to_string()));
            }
            symbolic(SymbolicKind::IntervalUnions { lo, hi })
        }
        other => Err(Error::Usage(format!("unknown builtin kind {}", other))),
    }
}

/// Parses the finite builtin kinds only, as used by enumeration
/// claims. Accepts the name with or without the `builtin:` prefix.
pub fn parse_finite_kind(name: &str) -> Result<FiniteKind> {
    let spec = name.strip_prefix("builtin:").unwrap_or(name);
    let (kind, args) = split_call(spec)?;
    finite_kind_from(kind, &args)?
        .ok_or_else(|| Error::Usage(format!("{} is not a finite builtin kind", kind)))
}

fn finite_kind_from(kind: &str, args: &[String]) -> Result<Option<FiniteKind>> {
    let parsed = match kind {
        "bni" => {
            let [n, i] = take_u64s::<2>(args, "bni")?;
            FiniteKind::BnI { n, i }
        }
        "powerset" => {
            let [m] = take_u64s::<1>(args, "powerset")?;
            FiniteKind::Powerset { atoms: m as u32 }
        }
        "truncation" => {
            let [k] = take_u64s::<1>(args, "truncation")?;
            FiniteKind::Truncation { k }
        }
        "bottleneck" => {
            let [n] = take_u64s::<1>(args, "bottleneck")?;
            FiniteKind::Bottleneck { n }
        }
        "arcticwindow" => {
            let [cap] = take_u64s::<1>(args, "arcticwindow")?;
            FiniteKind::ArcticWindow { cap }
        }
        _ => return Ok(None),
    };
    Ok(Some(parsed))
}

fn split_call(spec: &str) -> Result<(&str, Vec<String>)> {
    match spec.find('(') {
        None => Ok((spec, Vec::new())),
        Some(open) => {
            let close = spec
                .rfind(')')
                .filter(|&c| c == spec.len() - 1 && c > open)
                .ok_or_else(|| Error::Usage(format!("malformed builtin call {}", spec)))?;
            let args = spec[open + 1..close]
                .split(',')
                .map(|a| a.trim().to_string())
                .filter(|a| !a.is_empty())
                .collect();
            Ok((&spec[..open], args))
        }
    }
}

fn take_u64s<const N: usize>(args: &[String], kind: &str) -> Result<[u64; N]> {
    if args.len() != N {
        return Err(Error::Usage(format!(
            "{} takes {} argument(s), got {}",
            kind,
            N,
            args.len()
        )));
    }
    let mut out = [0u64; N];
    for (slot, raw) in out.iter_mut().zip(args) {
        *slot = raw
            .parse()
            .map_err(|_| Error::Usage(format!("{}: bad integer {}", kind, raw)))?;
    }
    Ok(out)
}

/// Length of the union divided by the window length: the exact
/// probability of a canonical set under the uniform distribution on
/// [lo, hi]. Endpoint openness never enters.
pub fn interval_length_prob(set: &IntervalUnionSet, lo: Rat, hi: Rat) -> Result<Rat> {
    if lo >= hi {
        return Err(Error::Usage("window needs lo < hi".to_string()));
    }
    if !set.within(lo, hi) {
        return Err(Error::Usage(format!(
            "set is not contained in [{}, {}]",
            lo, hi
        )));
    }
    let span = hi.sub(&lo);
    Ok(set
        .length()
        .mul(&span.recip().expect("positive window length")))
}
