//! Byte-level contract tests for the command-line surface. Each case
//! pins the full stdout of one invocation against a golden file under
//! testdata/golden, together with its exit code. Every number and
//! witness inside the goldens was derived independently before being
//! frozen; the files pin the byte layout around them.
//!
//! Run with UPDATE_GOLDEN=1 to rewrite the golden files after an
//! intentional format change, then inspect the diff.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use presemiring::cli::formats::{emit_structure, parse_structure_text};
use presemiring::instances::{make_finite, FiniteKind};

fn testdata() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_presemiring"))
        .args(args)
        .current_dir(testdata())
        .output()
        .expect("run binary")
}

struct Case {
    golden: &'static str,
    args: &'static [&'static str],
    exit: i32,
}

const CASES: &[Case] = &[
    Case {
        golden: "classify_bni52.txt",
        args: &["classify", "builtin:bni(5,2)", "--format", "lines"],
        exit: 0,
    },
    Case {
        golden: "classify_arctic.txt",
        args: &[
            "classify",
            "builtin:arctic",
            "--seed",
            "3",
            "--trials",
            "500",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "comp_truncation3.txt",
        args: &["comp", "builtin:truncation(3)", "--format", "lines"],
        exit: 0,
    },
    Case {
        golden: "check_probability_uniform_p3.txt",
        args: &["check", "--prop", "probability", "uniform_p3.fn", "--format", "lines"],
        exit: 0,
    },
    Case {
        golden: "check_normalized_const2.txt",
        args: &["check", "--prop", "normalized", "const2_p2.fn", "--format", "lines"],
        exit: 1,
    },
    Case {
        golden: "identity_n1_const2.txt",
        args: &[
            "identity",
            "--id",
            "n1",
            "--args",
            "{1,2}",
            "const2_p2.fn",
            "--format",
            "lines",
        ],
        exit: 1,
    },
    Case {
        golden: "enumerate_powerset2.txt",
        args: &[
            "enumerate",
            "--codomain",
            "zmod:4",
            "--claim",
            "powerset",
            "builtin:powerset(2)",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "enumerate_truncation3.txt",
        args: &[
            "enumerate",
            "--codomain",
            "zmod:2",
            "--claim",
            "truncation",
            "builtin:truncation(3)",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "metric_counting_p3.txt",
        args: &[
            "metric",
            "--elements",
            "{},{1},{1,2},{1,2,3}",
            "counting_p3.fn",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "bayes_uniform6.txt",
        args: &[
            "bayes",
            "--event",
            "{3,4}",
            "--partition",
            "{1,2,3},{4,5,6}",
            "--k",
            "0",
            "uniform6.fn",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "totalprob_uniform6.txt",
        args: &[
            "totalprob",
            "--event",
            "{3,4}",
            "--partition",
            "{1,2,3},{4,5,6}",
            "uniform6.fn",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "boole_uniform_p4.txt",
        args: &[
            "boole",
            "--elements",
            "{1,2},{1,3}",
            "uniform_p4.fn",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "parallel_uniform_p4.txt",
        args: &[
            "parallel",
            "--elements",
            "{1,2},{1,3}",
            "uniform_p4.fn",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "poincare_uniform_p3.txt",
        args: &[
            "poincare",
            "--elements",
            "{1},{2},{3}",
            "uniform_p3.fn",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "independent_uniform_p4.txt",
        args: &[
            "independent",
            "--elements",
            "{1,2},{1,3}",
            "uniform_p4.fn",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "dedekind_verify_counting.txt",
        args: &[
            "dedekind",
            "verify",
            "--spec",
            "counting",
            "--trials",
            "2000",
            "--seed",
            "7",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "dedekind_verify_weighted_pair.txt",
        args: &[
            "dedekind",
            "verify",
            "--spec",
            "weighted.spec",
            "--pair",
            "12,18",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "dedekind_eval_weighted.txt",
        args: &[
            "dedekind",
            "eval",
            "--spec",
            "weighted.spec",
            "--ideal",
            "12",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "dedekind_corollary_gcd.txt",
        args: &[
            "dedekind",
            "corollary",
            "--spec",
            "counting",
            "--variant",
            "gcd",
            "--pair",
            "4,6",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "dedekind_corollary_lcm.txt",
        args: &[
            "dedekind",
            "corollary",
            "--spec",
            "counting",
            "--variant",
            "lcm",
            "--pair",
            "2,3",
            "--format",
            "lines",
        ],
        exit: 1,
    },
    Case {
        golden: "dedekind_factor_360.txt",
        args: &["dedekind", "factor", "360", "--format", "lines"],
        exit: 0,
    },
    Case {
        golden: "sample_gminplus.txt",
        args: &[
            "sample-theorem",
            "--theorem",
            "gminplus",
            "gminplus_id.fn",
            "--seed",
            "5",
            "--trials",
            "500",
            "--format",
            "lines",
        ],
        exit: 1,
    },
    Case {
        golden: "sample_arctic.txt",
        args: &[
            "sample-theorem",
            "--theorem",
            "arctic",
            "arctic_split.fn",
            "--seed",
            "5",
            "--trials",
            "500",
            "--format",
            "lines",
        ],
        exit: 0,
    },
    Case {
        golden: "sample_semifield.txt",
        args: &[
            "sample-theorem",
            "--theorem",
            "semifield",
            "qnonneg_parity.fn",
            "--seed",
            "5",
            "--trials",
            "500",
            "--format",
            "lines",
        ],
        exit: 1,
    },
    Case {
        golden: "check_modular_parity.txt",
        args: &[
            "check",
            "--prop",
            "modular",
            "qnonneg_parity.fn",
            "--seed",
            "11",
            "--trials",
            "2000",
            "--format",
            "lines",
        ],
        exit: 1,
    },
    Case {
        golden: "emit_bni42.txt",
        args: &["classify", "builtin:bni(4,2)", "--emit"],
        exit: 0,
    },
    Case {
        golden: "text_enumerate_bni52.txt",
        args: &["enumerate", "--codomain", "zmod:3", "--claim", "bni", "builtin:bni(5,2)"],
        exit: 0,
    },
    Case {
        golden: "text_check_const2.txt",
        args: &["check", "--prop", "normalized", "const2_p2.fn"],
        exit: 1,
    },
    Case {
        golden: "text_classify_bottleneck4.txt",
        args: &["classify", "builtin:bottleneck(4)"],
        exit: 0,
    },
];

#[test]
fn golden_outputs_are_byte_stable() {
    let dir = testdata().join("golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    if update {
        fs::create_dir_all(&dir).expect("golden dir");
    }
    for case in CASES {
        let out = run(case.args);
        assert_eq!(
            out.status.code(),
            Some(case.exit),
            "{}: args {:?}, stderr: {}",
            case.golden,
            case.args,
            String::from_utf8_lossy(&out.stderr)
        );
        let path = dir.join(case.golden);
        if update {
            fs::write(&path, &out.stdout).expect("write golden");
            continue;
        }
        let want = fs::read(&path)
            .unwrap_or_else(|e| panic!("{}: missing golden ({})", case.golden, e));
        assert_eq!(
            out.stdout,
            want,
            "{}: output drifted\n--- got ---\n{}--- want ---\n{}",
            case.golden,
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&want)
        );
    }
}

/// Structure files emitted by the binary reparse to the same instance,
/// and re-emitting reproduces the bytes.
#[test]
fn emitted_structures_reparse() {
    let kinds = [
        (FiniteKind::BnI { n: 4, i: 2 }, "builtin:bni(4,2)"),
        (FiniteKind::Truncation { k: 2 }, "builtin:truncation(2)"),
        (FiniteKind::Powerset { atoms: 3 }, "builtin:powerset(3)"),
        (FiniteKind::Bottleneck { n: 3 }, "builtin:bottleneck(3)"),
    ];
    for (kind, name) in kinds {
        let out = run(&["classify", name, "--emit"]);
        assert_eq!(out.status.code(), Some(0), "{}", name);
        let text = String::from_utf8(out.stdout).expect("utf8");
        let parsed = parse_structure_text(&text).expect("reparse");
        let direct = make_finite(kind).expect("catalog instance");
        assert_eq!(parsed, direct, "{} round-trips", name);
        assert_eq!(emit_structure(&parsed), text, "{} emit is stable", name);
    }
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("presemiring-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join(name);
    fs::write(&path, content).expect("write temp file");
    path
}

/// Malformed input files are rejected with the 1-based line number of
/// the offending line, always with exit code 2.
#[test]
fn parse_errors_name_their_line() {
    let cases: [(&str, &str, &str); 5] = [
        (
            "bad_row.sr",
            "semiring v1\nn 2\nnames a b\nzero 0\none 1\nadd\n0 1 1\n1 0\nmul\n0 0\n0 1\n",
            "line 7: add row 0 has 3 entries",
        ),
        (
            "bad_count.fn",
            "function v1\ndomain builtin:powerset(2)\ncodomain int\nvalues 1 2 3\n",
            "line 4: 3 values for 4 elements",
        ),
        (
            "bad_prime.spec",
            "dedekind v1\nzero 0\nD 0\n4 7\n",
            "line 4: 4 is not prime",
        ),
        (
            "bad_header.sr",
            "semigroup v1\nn 1\n",
            "line 1",
        ),
        (
            "bad_rule.fn",
            "function v1\ndomain builtin:arctic\ncodomain int\nrule wobble\n",
            "line 4",
        ),
    ];
    for (name, content, needle) in cases {
        let path = temp_file(name, content);
        let arg = path.to_str().expect("utf8 path");
        let out = if name.ends_with(".spec") {
            run(&["dedekind", "verify", "--spec", arg, "--pair", "2,3"])
        } else if name.ends_with(".fn") {
            run(&["check", "--prop", "modular", arg, "--seed", "1"])
        } else {
            run(&["classify", arg])
        };
        assert_eq!(out.status.code(), Some(2), "{}", name);
        let stderr = String::from_utf8_lossy(&out.stderr).to_string();
        assert!(
            stderr.contains(needle),
            "{}: stderr {:?} lacks {:?}",
            name,
            stderr,
            needle
        );
    }
}

/// Unusable requests that are not parse failures: wrong arity, wrong
/// carrier kind, sampling without a seed, unknown names.
#[test]
fn usage_errors_are_exit_two() {
    let cases: [(&[&str], &str); 6] = [
        (
            &["identity", "--id", "l1", "--args", "{1},{2}", "const2_p2.fn"],
            "l1 takes 4 argument(s), got 2",
        ),
        (
            &["metric", "arctic_split.fn", "--seed", "4"],
            "needs a finite-carrier function",
        ),
        (
            &["sample-theorem", "--theorem", "arctic", "arctic_split.fn"],
            "sampled checks need --seed",
        ),
        (
            &["check", "--prop", "bogus", "counting_p3.fn"],
            "bogus",
        ),
        (
            &["enumerate", "--codomain", "zmod:3", "--claim", "powerset", "builtin:bni(5,2)"],
            "claim",
        ),
        (
            &["dedekind", "factor", "0"],
            "usage error",
        ),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{:?} should be unusable, stdout: {}",
            args,
            String::from_utf8_lossy(&out.stdout)
        );
        let stderr = String::from_utf8_lossy(&out.stderr).to_string();
        assert!(
            stderr.contains(needle),
            "{:?}: stderr {:?} lacks {:?}",
            args,
            stderr,
            needle
        );
    }
}
