//! The on-disk formats: `semiring v1` structure files, `function v1`
//! value tables, and `dedekind v1` value specs.
//!
//! All numbers are ASCII decimal. `#` starts a comment, blank lines
//! are skipped, and every parse error names the 1-based line it came
//! from. One format version string each; anything else is rejected.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use crate::codomain::{CoValue, Codomain};
use crate::dedekind::{is_prime, ModularSpec};
use crate::functions::{MappedFunction, SymbolicFn};
use crate::instances::{parse_builtin, Instance};
use crate::structure::{FiniteStructure, NameScheme};
use crate::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Comment-stripped nonblank lines with their 1-based numbers.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {}", path.display(), e)))
}

fn expect_header<'a, I>(lines: &mut I, want: &str) -> Result<()>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (lno, first) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    if first != want {
        return Err(perr(lno, format!("expected header `{}`, got `{}`", want, first)));
    }
    Ok(())
}

pub fn parse_structure(path: &Path) -> Result<FiniteStructure> {
    parse_structure_text(&read_file(path)?)
}

pub fn parse_structure_text(text: &str) -> Result<FiniteStructure> {
    let mut lines = meaningful_lines(text);
    expect_header(&mut lines, "semiring v1")?;
    let last_line = text.lines().count().max(1);

    let mut n: Option<(usize, usize)> = None;
    let mut names: Option<Vec<String>> = None;
    let mut zero: Option<usize> = None;
    let mut one: Option<usize> = None;
    let mut add: Option<Vec<u32>> = None;
    let mut mul: Option<Vec<u32>> = None;

    while let Some((lno, line)) = lines.next() {
        let mut words = line.split_whitespace();
        let key = words.next().expect("meaningful lines are nonempty");
        let rest: Vec<&str> = words.collect();
        match key {
            "n" => {
                if n.is_some() {
                    return Err(perr(lno, "duplicate `n` line"));
                }
                let size = single_usize(&rest, lno, "n")?;
                if size == 0 {
                    return Err(perr(lno, "n must be positive"));
                }
                n = Some((size, lno));
            }
            "names" => {
                if names.is_some() {
                    return Err(perr(lno, "duplicate `names` line"));
                }
                let (size, _) = n.ok_or_else(|| perr(lno, "`names` before `n`"))?;
                if rest.len() != size {
                    return Err(perr(
                        lno,
                        format!("{} names for {} elements", rest.len(), size),
                    ));
                }
                for (i, a) in rest.iter().enumerate() {
                    if rest[..i].contains(a) {
                        return Err(perr(lno, format!("duplicate name `{}`", a)));
                    }
                }
                names = Some(rest.iter().map(|s| s.to_string()).collect());
            }
            "zero" | "one" => {
                let slot = if key == "zero" { &mut zero } else { &mut one };
                if slot.is_some() {
                    return Err(perr(lno, format!("duplicate `{}` line", key)));
                }
                let (size, _) = n.ok_or_else(|| perr(lno, format!("`{}` before `n`", key)))?;
                let idx = single_usize(&rest, lno, key)?;
                if idx >= size {
                    return Err(perr(
                        lno,
                        format!("{} index {} out of range for {} elements", key, idx, size),
                    ));
                }
                *slot = Some(idx);
            }
            "add" | "mul" => {
                let slot = if key == "add" { &mut add } else { &mut mul };
                if slot.is_some() {
                    return Err(perr(lno, format!("duplicate `{}` section", key)));
                }
                if !rest.is_empty() {
                    return Err(perr(lno, format!("`{}` stands alone on its line", key)));
                }
                let (size, _) = n.ok_or_else(|| perr(lno, format!("`{}` before `n`", key)))?;
                *slot = Some(parse_table(&mut lines, size, lno, key)?);
            }
            other => return Err(perr(lno, format!("unknown key `{}`", other))),
        }
    }

    if n.is_none() {
        return Err(perr(last_line, "missing `n` line"));
    }
    let add = add.ok_or_else(|| perr(last_line, "missing `add` section"))?;
    let mul = mul.ok_or_else(|| perr(last_line, "missing `mul` section"))?;
    let scheme = match names {
        Some(list) => NameScheme::List(list),
        None => NameScheme::Numeric,
    };
    FiniteStructure::from_tables(add, mul, zero, one, scheme)
}

fn single_usize(rest: &[&str], lno: usize, key: &str) -> Result<usize> {
    if rest.len() != 1 {
        return Err(perr(lno, format!("`{}` takes one number", key)));
    }
    rest[0]
        .parse()
        .map_err(|_| perr(lno, format!("cannot parse `{}` as a number", rest[0])))
}

fn parse_table<'a, I>(lines: &mut I, size: usize, at: usize, key: &str) -> Result<Vec<u32>>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut table = Vec::with_capacity(size * size);
    for row in 0..size {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| perr(at, format!("`{}` needs {} rows, got {}", key, size, row)))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != size {
            return Err(perr(
                lno,
                format!(
                    "{} row {} has {} entries, expected {}",
                    key,
                    row,
                    entries.len(),
                    size
                ),
            ));
        }
        for (col, e) in entries.iter().enumerate() {
            let v: u32 = e.parse().map_err(|_| {
                perr(lno, format!("column {}: cannot parse `{}`", col + 1, e))
            })?;
            if v as usize >= size {
                return Err(perr(
                    lno,
                    format!("column {}: index {} out of range for {} elements", col + 1, v, size),
                ));
            }
            table.push(v);
        }
    }
    Ok(table)
}

/// Renders a structure so that parsing the output reproduces it
/// exactly, including names and distinguished elements.
pub fn emit_structure(s: &FiniteStructure) -> String {
    use std::fmt::Write;
    let n = s.size();
    let mut out = String::new();
    out.push_str("semiring v1\n");
    writeln!(out, "n {}", n).expect("string writes are infallible");
    let names: Vec<String> = (0..n).map(|i| s.element_name(i)).collect();
    writeln!(out, "names {}", names.join(" ")).expect("string writes are infallible");
    if let Some(z) = s.zero() {
        writeln!(out, "zero {}", z).expect("string writes are infallible");
    }
    if let Some(o) = s.one() {
        writeln!(out, "one {}", o).expect("string writes are infallible");
    }
    out.push_str("add\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| s.add(a, b).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).expect("string writes are infallible");
    }
    out.push_str("mul\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| s.mul(a, b).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).expect("string writes are infallible");
    }
    out
}

pub fn parse_function(path: &Path) -> Result<MappedFunction> {
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_function_text(&read_file(path)?, base)
}

/// Parses a function file. Relative `domain` and spec paths resolve
/// against `base`.
pub fn parse_function_text(text: &str, base: &Path) -> Result<MappedFunction> {
    let mut lines = meaningful_lines(text);
    expect_header(&mut lines, "function v1")?;
    let last_line = text.lines().count().max(1);

    let mut domain: Option<Instance> = None;
    let mut codomain: Option<Codomain> = None;
    let mut body: Option<(usize, Body)> = None;

    enum Body {
        Values(Vec<String>),
        Rule(Vec<String>),
    }

    while let Some((lno, line)) = lines.next() {
        let mut words = line.split_whitespace();
        let key = words.next().expect("meaningful lines are nonempty");
        let rest: Vec<&str> = words.collect();
        match key {
            "domain" => {
                if domain.is_some() {
                    return Err(perr(lno, "duplicate `domain` line"));
                }
                if rest.len() != 1 {
                    return Err(perr(lno, "`domain` takes one reference"));
                }
                let inst = if rest[0].starts_with("builtin:") {
                    parse_builtin(rest[0]).map_err(|e| perr(lno, e.to_string()))?
                } else {
                    parse_structure(&base.join(rest[0]))
                        .map(Instance::Finite)
                        .map_err(|e| perr(lno, e.to_string()))?
                };
                domain = Some(inst);
            }
            "codomain" => {
                if codomain.is_some() {
                    return Err(perr(lno, "duplicate `codomain` line"));
                }
                let co = Codomain::parse_name(&rest.join(" "))
                    .map_err(|e| perr(lno, e.to_string()))?;
                codomain = Some(co);
            }
            "values" => {
                if body.is_some() {
                    return Err(perr(lno, "duplicate `values` or `rule` line"));
                }
                body = Some((lno, Body::Values(rest.iter().map(|s| s.to_string()).collect())));
            }
            "rule" => {
                if body.is_some() {
                    return Err(perr(lno, "duplicate `values` or `rule` line"));
                }
                if rest.is_empty() {
                    return Err(perr(lno, "`rule` needs a rule name"));
                }
                body = Some((lno, Body::Rule(rest.iter().map(|s| s.to_string()).collect())));
            }
            other => return Err(perr(lno, format!("unknown key `{}`", other))),
        }
    }

    let domain = domain.ok_or_else(|| perr(last_line, "missing `domain` line"))?;
    let co = codomain.ok_or_else(|| perr(last_line, "missing `codomain` line"))?;
    let (lno, body) = body.ok_or_else(|| perr(last_line, "missing `values` or `rule` line"))?;

    match (domain, body) {
        (Instance::Finite(s), Body::Values(tokens)) => {
            if tokens.len() != s.size() {
                return Err(perr(
                    lno,
                    format!("{} values for {} elements", tokens.len(), s.size()),
                ));
            }
            let mut values = Vec::with_capacity(tokens.len());
            for (col, t) in tokens.iter().enumerate() {
                let v = co
                    .parse_value(t)
                    .map_err(|e| perr(lno, format!("value {}: {}", col + 1, e)))?;
                values.push(v);
            }
            MappedFunction::from_values(Arc::new(s), co, values)
        }
        (Instance::Symbolic(sym), Body::Rule(tokens)) => {
            let rule = parse_rule(&tokens, &co, base, lno)?;
            MappedFunction::rule(sym, co, rule)
        }
        (Instance::Finite(_), Body::Rule(_)) => Err(perr(
            lno,
            "finite carriers take a `values` line, not a `rule`",
        )),
        (Instance::Symbolic(_), Body::Values(_)) => Err(perr(
            lno,
            "symbolic carriers take a `rule` line, not `values`",
        )),
    }
}

fn parse_rule(tokens: &[String], co: &Codomain, base: &Path, lno: usize) -> Result<SymbolicFn> {
    let value = |t: &String| {
        co.parse_value(t)
            .map_err(|e| perr(lno, format!("rule value: {}", e)))
    };
    let want = |k: usize| -> Result<()> {
        if tokens.len() != k + 1 {
            return Err(perr(
                lno,
                format!("rule {} takes {} value(s), got {}", tokens[0], k, tokens.len() - 1),
            ));
        }
        Ok(())
    };
    match tokens[0].as_str() {
        "constant" => {
            want(1)?;
            Ok(SymbolicFn::Constant(value(&tokens[1])?))
        }
        "split-ninf" => {
            want(2)?;
            Ok(SymbolicFn::SplitAtNegInf {
                at_ninf: value(&tokens[1])?,
                elsewhere: value(&tokens[2])?,
            })
        }
        "tropical-split" => {
            want(3)?;
            Ok(SymbolicFn::TropicalSplit {
                at_zero: value(&tokens[1])?,
                on_pos: value(&tokens[2])?,
                at_pinf: value(&tokens[3])?,
            })
        }
        "identity" => {
            want(0)?;
            Ok(SymbolicFn::Identity)
        }
        "numerator-parity" => {
            want(0)?;
            Ok(SymbolicFn::NumeratorParity)
        }
        "indicator-cofinite" => {
            want(0)?;
            Ok(SymbolicFn::IndicatorCofinite)
        }
        "interval-length" => {
            want(0)?;
            Ok(SymbolicFn::IntervalLength)
        }
        "ideal-spec" => {
            want(1)?;
            let spec = parse_dedekind_spec(&base.join(&tokens[1]))
                .map_err(|e| perr(lno, e.to_string()))?;
            Ok(SymbolicFn::IdealSpec(spec))
        }
        other => Err(perr(lno, format!("unknown rule `{}`", other))),
    }
}

pub fn parse_dedekind_spec(path: &Path) -> Result<ModularSpec> {
    parse_dedekind_spec_text(&read_file(path)?)
}

/// Parses a `dedekind v1` spec: `codomain` (optional, default int),
/// `zero v` and `D v` (required), `default v` (optional, defaults to
/// the codomain zero), then bare `p v` prime value lines.
pub fn parse_dedekind_spec_text(text: &str) -> Result<ModularSpec> {
    let mut lines = meaningful_lines(text);
    expect_header(&mut lines, "dedekind v1")?;
    let last_line = text.lines().count().max(1);

    let mut stashed: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut codomain: Option<Codomain> = None;
    for (lno, line) in lines {
        let mut words = line.split_whitespace();
        let key = words.next().expect("meaningful lines are nonempty");
        let rest: Vec<String> = words.map(|s| s.to_string()).collect();
        if key == "codomain" {
            if codomain.is_some() {
                return Err(perr(lno, "duplicate `codomain` line"));
            }
            let co = Codomain::parse_name(&rest.join(" ")).map_err(|e| perr(lno, e.to_string()))?;
            codomain = Some(co);
        } else {
            stashed.push((lno, key.to_string(), rest));
        }
    }
    let co = codomain.unwrap_or(Codomain::Integers);
    let one_value = |lno: usize, key: &str, rest: &[String]| -> Result<CoValue> {
        if rest.len() != 1 {
            return Err(perr(lno, format!("`{}` takes one value", key)));
        }
        co.parse_value(&rest[0]).map_err(|e| perr(lno, e.to_string()))
    };

    let mut at_zero: Option<CoValue> = None;
    let mut at_whole: Option<CoValue> = None;
    let mut default_prime: Option<CoValue> = None;
    let mut primes: BTreeMap<u64, CoValue> = BTreeMap::new();
    for (lno, key, rest) in &stashed {
        match key.as_str() {
            "zero" => {
                if at_zero.is_some() {
                    return Err(perr(*lno, "duplicate `zero` line"));
                }
                at_zero = Some(one_value(*lno, key, rest)?);
            }
            "D" => {
                if at_whole.is_some() {
                    return Err(perr(*lno, "duplicate `D` line"));
                }
                at_whole = Some(one_value(*lno, key, rest)?);
            }
            "default" => {
                if default_prime.is_some() {
                    return Err(perr(*lno, "duplicate `default` line"));
                }
                default_prime = Some(one_value(*lno, key, rest)?);
            }
            other => {
                let p: u64 = other
                    .parse()
                    .map_err(|_| perr(*lno, format!("unknown key `{}`", other)))?;
                if !is_prime(p) {
                    return Err(perr(*lno, format!("{} is not prime", p)));
                }
                if primes.contains_key(&p) {
                    return Err(perr(*lno, format!("duplicate prime {}", p)));
                }
                primes.insert(p, one_value(*lno, key, rest)?);
            }
        }
    }
    let at_zero = at_zero.ok_or_else(|| perr(last_line, "missing `zero` line"))?;
    let at_whole = at_whole.ok_or_else(|| perr(last_line, "missing `D` line"))?;
    let default_prime = default_prime.unwrap_or_else(|| co.zero());
    ModularSpec::new(co, at_zero, at_whole, default_prime, primes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{make_finite, FiniteKind};

    const BOOLE2: &str = "\
# the two-element Boolean carrier
semiring v1
n 2
names 0 1
zero 0
one 1
add
0 1
1 1
mul
0 0
0 1
";

    #[test]
    fn structure_files_round_trip() {
        let s = parse_structure_text(BOOLE2).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.one(), Some(1));
        assert_eq!(s.add(1, 1), 1);
        let emitted = emit_structure(&s);
        assert_eq!(parse_structure_text(&emitted).unwrap(), s);
        assert_eq!(emit_structure(&parse_structure_text(&emitted).unwrap()), emitted);

        for kind in [
            FiniteKind::BnI { n: 4, i: 2 },
            FiniteKind::Truncation { k: 3 },
            FiniteKind::Powerset { atoms: 3 },
            FiniteKind::Bottleneck { n: 4 },
        ] {
            let built = make_finite(kind).unwrap();
            let reparsed = parse_structure_text(&emit_structure(&built)).unwrap();
            assert_eq!(reparsed, built);
        }
    }

    #[test]
    fn structure_errors_carry_line_numbers() {
        let short_row = "semiring v1\nn 4\nadd\n0 1 2\n";
        match parse_structure_text(short_row).unwrap_err() {
            Error::Parse { line, msg } => {
                assert_eq!(line, 4);
                assert!(msg.contains("3 entries"), "{}", msg);
            }
            other => panic!("unexpected error {:?}", other),
        }
        let bad_header = "semiring v2\nn 1\n";
        assert!(matches!(
            parse_structure_text(bad_header).unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        let out_of_range = "semiring v1\nn 2\nadd\n0 1\n1 2\n";
        match parse_structure_text(out_of_range).unwrap_err() {
            Error::Parse { line, msg } => {
                assert_eq!(line, 5);
                assert!(msg.contains("column 2"), "{}", msg);
            }
            other => panic!("unexpected error {:?}", other),
        }
    }

    #[test]
    fn function_files_parse_values_and_rules() {
        let counting = "\
function v1
domain builtin:powerset(3)
codomain int
values 0 1 1 2 1 2 2 3
";
        let f = parse_function_text(counting, Path::new(".")).unwrap();
        assert_eq!(f.at(7), CoValue::Int(3));

        let uniform = "\
function v1
domain builtin:powerset(2)
codomain rational
values 0 1/4 1/4 1/2
";
        let f = parse_function_text(uniform, Path::new(".")).unwrap();
        assert_eq!(f.at(3), CoValue::Rat(crate::rational::Rat::new(1, 2)));

        let split = "\
function v1
domain builtin:arctic
codomain int
rule split-ninf 7 3
";
        let f = parse_function_text(split, Path::new(".")).unwrap();
        assert_eq!(
            f.at_value(&crate::symbolic::SymValue::NegInf).unwrap(),
            CoValue::Int(7)
        );

        let wrong_count = "\
function v1
domain builtin:powerset(3)
codomain int
values 0 1 1 2 1 2 2
";
        match parse_function_text(wrong_count, Path::new(".")).unwrap_err() {
            Error::Parse { line, msg } => {
                assert_eq!(line, 4);
                assert!(msg.contains("7 values for 8 elements"), "{}", msg);
            }
            other => panic!("unexpected error {:?}", other),
        }

        let rule_on_finite = "\
function v1
domain builtin:powerset(2)
codomain int
rule constant 1
";
        assert!(parse_function_text(rule_on_finite, Path::new(".")).is_err());
    }

    #[test]
    fn dedekind_specs_parse_with_defaults() {
        let counting = "\
dedekind v1
zero 0
D 0
default 1
";
        let spec = parse_dedekind_spec_text(counting).unwrap();
        assert_eq!(spec.eval_generator(12).unwrap(), CoValue::Int(2));

        let weighted = "\
dedekind v1
codomain rational
zero 0
D 1/2
default 1/2
2 3/2
";
        let spec = parse_dedekind_spec_text(weighted).unwrap();
        assert_eq!(
            spec.eval_generator(2).unwrap(),
            CoValue::Rat(crate::rational::Rat::new(3, 2))
        );

        let not_prime = "dedekind v1\nzero 0\nD 0\n4 1\n";
        match parse_dedekind_spec_text(not_prime).unwrap_err() {
            Error::Parse { line, msg } => {
                assert_eq!(line, 4);
                assert!(msg.contains("not prime"), "{}", msg);
            }
            other => panic!("unexpected error {:?}", other),
        }
    }
}
