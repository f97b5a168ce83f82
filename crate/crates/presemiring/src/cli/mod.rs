//! The `presemiring` command line.
//!
//! Exit codes partition the outcomes: 0 means the checked property or
//! theorem holds, 1 means it was refuted and a witness was printed,
//! 2 means the run never reached a verdict (usage, parse, or
//! hypothesis failure). `--format lines` emits one `key=value` pair
//! per line in a fixed order; the default format packs the same pairs
//! onto one line. All sampling is driven by an explicit `--seed`.

pub mod formats;

use std::ffi::OsString;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::codomain::Codomain;
use crate::complements::{comp_boolean_algebra, complemented_elements, CompOutcome};
use crate::dedekind::{self, CorollaryVariant, IdealZ, ModularSpec};
use crate::enumeration::{
    classify_modular, sampled_constancy_check, ClassificationClaim, ConstancyTheorem,
};
use crate::functions::{MappedFunction, Property, PropertyReport};
use crate::instances::{make_finite, parse_builtin, parse_finite_kind, FiniteKind, Instance};
use crate::structure::{CheckMode, FiniteStructure, FlagReport, FlagResult};
use crate::symbolic::SampleBudget;
use crate::theorems::{self, IdentityId};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "presemiring",
    version,
    about = "Exact checks for additive, modular, and probability functions on semiring-like carriers"
)]
struct Cli {
    /// Output format: `text` packs the report onto one line, `lines`
    /// emits one key=value pair per line.
    #[arg(long, global = true, default_value = "text", value_parser = ["text", "lines"])]
    format: String,

    /// Seed driving all sampling. Required whenever a command samples.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Trial budget for sampled checks.
    #[arg(long, global = true, default_value_t = 10_000)]
    trials: u64,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a carrier and report its structural flags.
    Classify {
        /// Structure file path or builtin:<kind(args)>.
        instance: String,
        /// Print the carrier as a structure file instead of a report.
        #[arg(long)]
        emit: bool,
    },
    /// Complemented elements and the Boolean algebra they form.
    Comp { instance: String },
    /// Check one function property, exhaustively on finite carriers
    /// and by seeded sampling on symbolic ones.
    Check {
        /// finitely_additive, modular, normalized, or probability.
        #[arg(long)]
        prop: String,
        /// Function file path.
        function: String,
    },
    /// Evaluate one catalog identity at explicit arguments.
    Identity {
        /// c1, c2, n1, n2, p1, p2, p3, or l1.
        #[arg(long)]
        id: String,
        /// Comma-separated element names or indices; l1 takes two
        /// trailing integer exponents.
        #[arg(long)]
        args: String,
        function: String,
    },
    /// Check whether a family of elements is independent.
    Independent {
        #[arg(long)]
        elements: String,
        function: String,
    },
    /// The distance d(s,t) = f(s symdiff t) over complemented
    /// elements, with the triangle and separation checks.
    Metric {
        /// Comma-separated elements; omitted means all of comp(S).
        #[arg(long)]
        elements: Option<String>,
        function: String,
    },
    /// Posterior of one partition cell given an observed event.
    Bayes {
        #[arg(long)]
        event: String,
        /// Comma-separated partition cells.
        #[arg(long)]
        partition: String,
        /// Zero-based index of the cell whose posterior is wanted.
        #[arg(long)]
        k: usize,
        function: String,
    },
    /// Decompose an event's probability over a partition.
    Totalprob {
        #[arg(long)]
        event: String,
        #[arg(long)]
        partition: String,
        function: String,
    },
    /// Union bound for a family of complemented elements.
    Boole {
        #[arg(long)]
        elements: String,
        function: String,
    },
    /// Failure probability of independent components in parallel.
    Parallel {
        #[arg(long)]
        elements: String,
        function: String,
    },
    /// Alternating inclusion and exclusion sums, compared without
    /// subtraction.
    Poincare {
        #[arg(long)]
        elements: String,
        function: String,
    },
    /// Modular functions on the ideals of the integers.
    Dedekind {
        #[command(subcommand)]
        command: DedekindCmd,
    },
    /// Enumerate every function into a cyclic codomain and test a
    /// classification claim against the full list.
    Enumerate {
        /// Cyclic codomain, e.g. zmod:3.
        #[arg(long)]
        codomain: String,
        /// bni, truncation, arcticwindow, bottleneck, or powerset;
        /// must match the builtin instance.
        #[arg(long)]
        claim: String,
        /// Builtin finite instance the claim speaks about.
        instance: String,
    },
    /// Sample the forced consequences of a constancy statement on a
    /// symbolic carrier.
    #[command(name = "sample-theorem")]
    SampleTheorem {
        /// arctic, tropical, gminplus, litvinov, or semifield.
        #[arg(long)]
        theorem: String,
        function: String,
    },
}

#[derive(Subcommand)]
enum DedekindCmd {
    /// Verify modularity on one generator pair or on sampled pairs.
    Verify {
        /// Spec file path, or the builtin `counting`.
        #[arg(long)]
        spec: String,
        /// Explicit pair a,b of generators; omitted means sampling.
        #[arg(long)]
        pair: Option<String>,
        /// Largest generator drawn when sampling.
        #[arg(long, default_value_t = 1_000_000)]
        max_generator: u64,
    },
    /// Evaluate a spec at the ideal generated by n.
    Eval {
        #[arg(long)]
        spec: String,
        /// Generator; 0 denotes the zero ideal.
        #[arg(long)]
        ideal: u64,
    },
    /// Check the combined-generator identity for one variant.
    Corollary {
        #[arg(long)]
        spec: String,
        /// gcd or lcm.
        #[arg(long)]
        variant: String,
        /// Pair a,b of positive generators.
        #[arg(long)]
        pair: String,
    },
    /// Factor a generator into prime powers.
    Factor { n: u64 },
}

/// Accumulated report: ordered pairs shown in both formats, extra
/// detail pairs shown only by `--format lines`, and the witness.
struct Out {
    pairs: Vec<(String, String)>,
    detail: Vec<(String, String)>,
    witness: Option<String>,
    violated: bool,
    raw: Option<String>,
}

impl Out {
    fn new() -> Out {
        Out {
            pairs: Vec::new(),
            detail: Vec::new(),
            witness: None,
            violated: false,
            raw: None,
        }
    }

    fn raw_text(text: String) -> Out {
        let mut out = Out::new();
        out.raw = Some(text);
        out
    }

    fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.pairs.push((key.to_string(), value.to_string()));
    }

    fn push_detail(&mut self, key: &str, value: impl fmt::Display) {
        self.detail.push((key.to_string(), value.to_string()));
    }

    /// Folds a property report in: property, verdict, checked, plus
    /// the witness and the exit-relevant verdict bit.
    fn absorb(&mut self, report: &PropertyReport, domain: Option<&FiniteStructure>) {
        self.push("property", &report.property);
        self.push("verdict", report.verdict.name());
        self.push("checked", report.checked);
        if !report.verdict.holds() {
            self.violated = true;
            if let Some(w) = &report.witness {
                self.witness = Some(w.describe(domain).join(" "));
            }
        }
    }

    fn print(&self, format: &str) {
        if let Some(raw) = &self.raw {
            print!("{}", raw);
            return;
        }
        if format == "lines" {
            for (k, v) in self.pairs.iter().chain(&self.detail) {
                println!("{}={}", k, v);
            }
            if let Some(w) = &self.witness {
                println!("witness={}", w);
            }
        } else {
            let joined: Vec<String> = self
                .pairs
                .iter()
                .map(|(k, v)| format!("{}={}", k, v))
                .collect();
            println!("{}", joined.join(" "));
            if let Some(w) = &self.witness {
                println!("witness: {}", w);
            }
        }
    }
}

/// Parses and runs one invocation; the return value is the process
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            out.print(&cli.format);
            if out.violated {
                1
            } else {
                0
            }
        }
        Err(err) => {
            eprintln!("error: {}", err);
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Out> {
    match &cli.command {
        Cmd::Classify { instance, emit } => classify_cmd(cli, instance, *emit),
        Cmd::Comp { instance } => comp_cmd(instance),
        Cmd::Check { prop, function } => check_cmd(cli, prop, function),
        Cmd::Identity { id, args, function } => identity_cmd(id, args, function),
        Cmd::Independent { elements, function } => independent_cmd(elements, function),
        Cmd::Metric { elements, function } => metric_cmd(elements.as_deref(), function),
        Cmd::Bayes {
            event,
            partition,
            k,
            function,
        } => bayes_cmd(event, partition, *k, function),
        Cmd::Totalprob {
            event,
            partition,
            function,
        } => totalprob_cmd(event, partition, function),
        Cmd::Boole { elements, function } => values_cmd(function, elements, theorems::boole_bound),
        Cmd::Parallel { elements, function } => {
            values_cmd(function, elements, theorems::parallel_systems)
        }
        Cmd::Poincare { elements, function } => values_cmd(function, elements, theorems::poincare),
        Cmd::Dedekind { command } => dedekind_cmd(cli, command),
        Cmd::Enumerate {
            codomain,
            claim,
            instance,
        } => enumerate_cmd(codomain, claim, instance),
        Cmd::SampleTheorem { theorem, function } => sample_theorem_cmd(cli, theorem, function),
    }
}

fn need_budget(cli: &Cli) -> Result<SampleBudget> {
    let seed = cli
        .seed
        .ok_or_else(|| Error::Usage("sampled checks need --seed".to_string()))?;
    Ok(SampleBudget::new(cli.trials, seed))
}

fn load_instance(arg: &str) -> Result<Instance> {
    if arg.starts_with("builtin:") {
        parse_builtin(arg)
    } else {
        formats::parse_structure(Path::new(arg)).map(Instance::Finite)
    }
}

fn load_finite(arg: &str) -> Result<FiniteStructure> {
    match load_instance(arg)? {
        Instance::Finite(s) => Ok(s),
        Instance::Symbolic(sym) => Err(Error::Usage(format!(
            "this command needs a finite carrier, got the symbolic {}",
            sym.name()
        ))),
    }
}

fn load_function(path: &str) -> Result<MappedFunction> {
    formats::parse_function(Path::new(path))
}

fn finite_of(f: &MappedFunction) -> Result<Arc<FiniteStructure>> {
    f.finite()
        .cloned()
        .ok_or_else(|| Error::Usage("this command needs a finite-carrier function".to_string()))
}

/// Splits a comma-separated argument list, ignoring commas inside
/// braces so subset names like {1,2} stay whole.
fn split_args(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '{' => {
                depth += 1;
                cur.push(c);
            }
            '}' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    parts.push(cur.trim().to_string());
    parts.retain(|p| !p.is_empty());
    parts
}

/// Resolves one element token: a name first, a plain index second.
fn resolve_element(s: &FiniteStructure, token: &str) -> Result<usize> {
    if let Ok(i) = s.element_index(token) {
        return Ok(i);
    }
    token
        .parse::<usize>()
        .ok()
        .filter(|&i| i < s.size())
        .ok_or_else(|| Error::Usage(format!("no element named `{}`", token)))
}

fn resolve_elements(s: &FiniteStructure, arg: &str) -> Result<Vec<usize>> {
    split_args(arg)
        .iter()
        .map(|t| resolve_element(s, t))
        .collect()
}

fn names_of(s: &FiniteStructure, elems: &[usize]) -> String {
    let names: Vec<String> = elems.iter().map(|&i| s.element_name(i)).collect();
    names.join(" ")
}

fn mode_name(mode: &CheckMode) -> &'static str {
    match mode {
        CheckMode::Exhaustive => "exhaustive",
        CheckMode::Sampled { .. } => "sampled",
    }
}

fn flag_name(flag: &FlagResult) -> &'static str {
    match flag {
        FlagResult::Holds => "holds",
        FlagResult::HoldsOnSample => "holds-on-sample",
        FlagResult::Fails(_) => "fails",
        FlagResult::Inapplicable(_) => "inapplicable",
    }
}

fn push_flags(out: &mut Out, flags: &FlagReport) {
    out.push("zerosumfree", flag_name(&flags.zerosumfree));
    out.push("entire", flag_name(&flags.entire));
    out.push("simple", flag_name(&flags.simple));
    out.push(
        "idempotent",
        flag_name(&flags.multiplicatively_idempotent),
    );
}

fn classify_cmd(cli: &Cli, instance: &str, emit: bool) -> Result<Out> {
    let inst = load_instance(instance)?;
    if emit {
        let Instance::Finite(s) = &inst else {
            return Err(Error::Usage(
                "only finite carriers emit structure files".to_string(),
            ));
        };
        return Ok(Out::raw_text(formats::emit_structure(s)));
    }
    let mut out = Out::new();
    out.push("instance", instance);
    let (report, domain) = match &inst {
        Instance::Finite(s) => (s.classify()?, Some(s)),
        Instance::Symbolic(sym) => (sym.classify_sampled(need_budget(cli)?), None),
    };
    out.push("class", report.class.name());
    out.push("mode", mode_name(&report.mode));
    out.push("checked", report.checked_tuples);
    push_flags(&mut out, &report.flags);
    if let Some(v) = report.violations.iter().find(|v| !v.spot_check) {
        out.violated = true;
        out.push("axiom", v.axiom.name());
        out.witness = Some(v.witness.describe(domain).join(" "));
    }
    Ok(out)
}

fn comp_cmd(instance: &str) -> Result<Out> {
    let s = load_finite(instance)?;
    let map = complemented_elements(&s)?;
    let mut out = Out::new();
    out.push("members", names_of(&s, map.members()));
    out.push("count", map.members().len());
    match comp_boolean_algebra(&s)? {
        CompOutcome::Boolean(_) => out.push("boolean", "true"),
        CompOutcome::NotBoolean { condition, witness } => {
            out.push("boolean", "false");
            out.push("condition", condition);
            out.violated = true;
            out.witness = Some(witness.describe(Some(&s)).join(" "));
        }
    }
    Ok(out)
}

fn check_cmd(cli: &Cli, prop: &str, function: &str) -> Result<Out> {
    let f = load_function(function)?;
    let property = Property::parse(prop)?;
    let mut out = Out::new();
    match f.finite().cloned() {
        Some(s) => {
            let report = f.check_property(property)?;
            out.absorb(&report, Some(s.as_ref()));
        }
        None => {
            let report = f.check_property_sampled(property, need_budget(cli)?)?;
            out.absorb(&report, None);
        }
    }
    Ok(out)
}

fn identity_cmd(id: &str, args: &str, function: &str) -> Result<Out> {
    let f = load_function(function)?;
    let id = IdentityId::parse(id)?;
    let s = finite_of(&f)?;
    let tokens = split_args(args);
    if tokens.len() != id.arity() {
        return Err(Error::Usage(format!(
            "{} takes {} argument(s), got {}",
            id.name(),
            id.arity(),
            tokens.len()
        )));
    }
    let element_count = if id == IdentityId::L1 { 2 } else { id.arity() };
    let mut resolved = Vec::with_capacity(tokens.len());
    for (i, t) in tokens.iter().enumerate() {
        if i < element_count {
            resolved.push(resolve_element(&s, t)?);
        } else {
            let e: usize = t
                .parse()
                .map_err(|_| Error::Usage(format!("cannot parse exponent `{}`", t)))?;
            resolved.push(e);
        }
    }
    let outcome = theorems::verify_identity(&f, id, &resolved)?;
    let mut out = Out::new();
    out.push("identity", id.name());
    out.push("lhs", outcome.lhs);
    out.push("rhs", outcome.rhs);
    out.absorb(&outcome.report, Some(s.as_ref()));
    Ok(out)
}

fn independent_cmd(elements: &str, function: &str) -> Result<Out> {
    let f = load_function(function)?;
    let s = finite_of(&f)?;
    let elems = resolve_elements(&s, elements)?;
    let report = theorems::are_independent(&f, &elems)?;
    let mut out = Out::new();
    out.push("elements", names_of(&s, &elems));
    out.absorb(&report, Some(s.as_ref()));
    Ok(out)
}

fn metric_cmd(elements: Option<&str>, function: &str) -> Result<Out> {
    let f = load_function(function)?;
    let s = finite_of(&f)?;
    let elems = match elements {
        Some(e) => resolve_elements(&s, e)?,
        None => Vec::new(),
    };
    let outcome = theorems::semi_metric(&f, &elems)?;
    let mut out = Out::new();
    out.push("elements", names_of(&s, &outcome.elements));
    out.push("metric", outcome.metric);
    out.absorb(&outcome.report, Some(s.as_ref()));
    Ok(out)
}

fn bayes_cmd(event: &str, partition: &str, k: usize, function: &str) -> Result<Out> {
    let f = load_function(function)?;
    let s = finite_of(&f)?;
    let s_el = resolve_element(&s, event)?;
    let parts = resolve_elements(&s, partition)?;
    if k >= parts.len() {
        return Err(Error::Usage(format!(
            "cell index {} out of range for a {}-cell partition",
            k,
            parts.len()
        )));
    }
    let outcome = theorems::bayes(&f, s_el, &parts, k)?;
    let mut out = Out::new();
    out.push("event", s.element_name(s_el));
    out.push("cell", s.element_name(parts[k]));
    out.push("posterior", outcome.posterior);
    let row: Vec<String> = outcome.posteriors.iter().map(|v| v.to_string()).collect();
    out.push_detail("posteriors", row.join(" "));
    out.absorb(&outcome.report, Some(s.as_ref()));
    Ok(out)
}

fn totalprob_cmd(event: &str, partition: &str, function: &str) -> Result<Out> {
    let f = load_function(function)?;
    let s = finite_of(&f)?;
    let s_el = resolve_element(&s, event)?;
    let parts = resolve_elements(&s, partition)?;
    let outcome = theorems::total_probability(&f, s_el, &parts)?;
    let mut out = Out::new();
    out.push("event", s.element_name(s_el));
    out.push("direct", outcome.direct);
    out.push("decomposed", outcome.decomposed);
    out.absorb(&outcome.report, Some(s.as_ref()));
    Ok(out)
}

fn values_cmd(
    function: &str,
    elements: &str,
    op: impl Fn(&MappedFunction, &[usize]) -> Result<theorems::ValuesOutcome>,
) -> Result<Out> {
    let f = load_function(function)?;
    let s = finite_of(&f)?;
    let elems = resolve_elements(&s, elements)?;
    let outcome = op(&f, &elems)?;
    let mut out = Out::new();
    out.push("elements", names_of(&s, &elems));
    out.push("lhs", outcome.lhs);
    out.push("rhs", outcome.rhs);
    out.absorb(&outcome.report, Some(s.as_ref()));
    Ok(out)
}

fn load_spec(arg: &str) -> Result<ModularSpec> {
    let path = Path::new(arg);
    if path.is_file() {
        formats::parse_dedekind_spec(path)
    } else if arg == "counting" {
        Ok(ModularSpec::counting())
    } else {
        Err(Error::Usage(format!(
            "spec `{}` is neither a readable file nor the builtin `counting`",
            arg
        )))
    }
}

fn parse_pair(arg: &str) -> Result<(u64, u64)> {
    let parts = split_args(arg);
    if parts.len() != 2 {
        return Err(Error::Usage(format!("expected a pair a,b, got `{}`", arg)));
    }
    let a = parts[0]
        .parse()
        .map_err(|_| Error::Usage(format!("cannot parse generator `{}`", parts[0])))?;
    let b = parts[1]
        .parse()
        .map_err(|_| Error::Usage(format!("cannot parse generator `{}`", parts[1])))?;
    Ok((a, b))
}

fn dedekind_cmd(cli: &Cli, command: &DedekindCmd) -> Result<Out> {
    let mut out = Out::new();
    match command {
        DedekindCmd::Verify {
            spec,
            pair,
            max_generator,
        } => {
            let parsed = load_spec(spec)?;
            out.push("spec", spec);
            match pair {
                Some(p) => {
                    let (a, b) = parse_pair(p)?;
                    let report =
                        dedekind::verify_modular(&parsed, &IdealZ::new(a)?, &IdealZ::new(b)?)?;
                    out.absorb(&report, None);
                }
                None => {
                    let budget = need_budget(cli)?;
                    let report = dedekind::verify_sampled(
                        &parsed,
                        budget.trials,
                        budget.seed,
                        *max_generator,
                    )?;
                    out.push("max_generator", max_generator);
                    out.absorb(&report, None);
                }
            }
        }
        DedekindCmd::Eval { spec, ideal } => {
            let parsed = load_spec(spec)?;
            out.push("spec", spec);
            out.push("ideal", ideal);
            out.push("value", parsed.eval_generator(*ideal)?);
        }
        DedekindCmd::Corollary {
            spec,
            variant,
            pair,
        } => {
            let parsed = load_spec(spec)?;
            let variant = CorollaryVariant::parse(variant)?;
            let (a, b) = parse_pair(pair)?;
            let outcome = dedekind::corollary_check(&parsed, a, b, variant)?;
            out.push("spec", spec);
            out.push("variant", variant.name());
            out.push("pair", format!("{},{}", a, b));
            out.push("lhs", outcome.lhs);
            out.push("rhs", outcome.rhs);
            out.absorb(&outcome.report, None);
        }
        DedekindCmd::Factor { n } => {
            let factors = dedekind::factor(*n)?;
            out.push("n", n);
            let rendered: Vec<String> = factors
                .iter()
                .map(|(p, e)| {
                    if *e == 1 {
                        p.to_string()
                    } else {
                        format!("{}^{}", p, e)
                    }
                })
                .collect();
            let joined = if rendered.is_empty() {
                "1".to_string()
            } else {
                rendered.join(" ")
            };
            out.push("factors", joined);
        }
    }
    Ok(out)
}

fn enumerate_cmd(codomain: &str, claim: &str, instance: &str) -> Result<Out> {
    let co = Codomain::parse_name(codomain)?;
    let kind = parse_finite_kind(instance)?;
    let claimed = match claim {
        "bni" => matches!(kind, FiniteKind::BnI { .. }),
        "truncation" => matches!(kind, FiniteKind::Truncation { .. }),
        "arcticwindow" => matches!(kind, FiniteKind::ArcticWindow { .. }),
        "bottleneck" => matches!(kind, FiniteKind::Bottleneck { .. }),
        "powerset" => matches!(kind, FiniteKind::Powerset { .. }),
        other => {
            return Err(Error::Usage(format!(
                "unknown claim `{}`; claims are named after the builtin kinds",
                other
            )))
        }
    };
    if !claimed {
        return Err(Error::Usage(format!(
            "claim `{}` does not cover {}",
            claim, instance
        )));
    }
    let structure = Arc::new(make_finite(kind)?);
    let claim = ClassificationClaim::for_kind(kind);
    let result = classify_modular(structure.clone(), co, &claim)?;
    let mut out = Out::new();
    out.push("total", result.total);
    out.push("modular", result.modular);
    out.push("claim", result.report.verdict.name());
    out.push_detail("label", claim.label);
    out.push_detail("digest", format!("{:016x}", result.digest));
    out.push_detail("forward", result.forward.verdict.name());
    out.push_detail("converse", result.converse.verdict.name());
    if !result.report.verdict.holds() {
        out.violated = true;
        if let Some(w) = &result.report.witness {
            out.witness = Some(w.describe(Some(structure.as_ref())).join(" "));
        }
        if let Some(table) = &result.counterexample {
            let row: Vec<String> = table.iter().map(|v| v.to_string()).collect();
            out.push_detail("counterexample", row.join(" "));
        }
    }
    Ok(out)
}

fn sample_theorem_cmd(cli: &Cli, theorem: &str, function: &str) -> Result<Out> {
    let f = load_function(function)?;
    let theorem = ConstancyTheorem::parse(theorem)?;
    let budget = need_budget(cli)?;
    let report = sampled_constancy_check(&f, theorem, &budget)?;
    let mut out = Out::new();
    out.push("theorem", theorem.name());
    out.absorb(&report, None);
    Ok(out)
}
