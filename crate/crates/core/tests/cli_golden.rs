//! The binary against recorded outputs. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    (
        "np_p1_fixed",
        &[
            "np",
            "--field",
            "padic:3",
            "--poly",
            "(1/9)*z^12 - (1/9)*z^9 - z",
        ],
    ),
    (
        "degree_z2_q2",
        &[
            "degree", "--field", "padic:2", "--poly", "z^2", "--point", "(1; 1/2)",
        ],
    ),
    (
        "sd_p0_gauss",
        &[
            "sd",
            "--field",
            "padic:3",
            "--poly",
            "(z^3 - z^9)/3",
            "--point",
            "(0; 0)",
        ],
    ),
    (
        "wf_p0_gauss",
        &[
            "wf",
            "--field",
            "padic:3",
            "--poly",
            "(z^3 - z^9)/3",
            "--point",
            "(0; 0)",
        ],
    ),
    (
        "profile_p0",
        &[
            "profile",
            "--field",
            "padic:3",
            "--poly",
            "(z^3 - z^9)/3",
            "--center",
            "0",
            "--from",
            "0",
            "--to",
            "1",
        ],
    ),
    (
        "profile_z2_q2_table",
        &[
            "profile", "--format", "table", "--field", "padic:2", "--poly", "z^2", "--center", "1",
            "--from", "0", "--to", "2",
        ],
    ),
    (
        "green_laurent",
        &[
            "green",
            "--field",
            "laurent",
            "--poly",
            "z^2 + 1/t",
            "--at",
            "t",
        ],
    ),
    (
        "green_roots_p0",
        &[
            "green",
            "--field",
            "padic:3",
            "--poly",
            "(z^3 - z^9)/3",
            "--roots",
            "z^6 - 1/3",
        ],
    ),
    (
        "lyap_p0_p2",
        &["lyap", "--field", "padic:2", "--poly", "(z^2 - z^4)/2"],
    ),
    (
        "lyap_p1",
        &["lyap", "--field", "padic:3", "--poly", "(z^12 - z^9)/9"],
    ),
    (
        "lyap_radical",
        &[
            "lyap",
            "--field",
            "radical:3,1/3,6",
            "--poly",
            "(z^3 - z^9)/3",
        ],
    ),
    (
        "fixed_p1",
        &[
            "fixed",
            "--field",
            "padic:3",
            "--poly",
            "(z^12 - z^9)/9",
            "--n",
            "1",
        ],
    ),
    (
        "fixed_rational",
        &[
            "fixed", "--field", "padic:3", "--poly", "z^2", "--den", "z + 3", "--n", "2",
        ],
    ),
    (
        "family_bounded",
        &[
            "family", "--field", "laurent", "--poly", "z^2 + t", "--n-max", "2",
        ],
    ),
    ("family_benedetto", &["family", "--benedetto", "3"]),
    ("bernoulli_model", &["bernoulli", "--dilations", "2,3"]),
    (
        "bernoulli_entropy",
        &["bernoulli", "--dilations", "2,3", "--report", "entropy"],
    ),
    (
        "bernoulli_periodic",
        &[
            "bernoulli",
            "--dilations",
            "2,2",
            "--report",
            "periodic",
            "--n",
            "3",
        ],
    ),
    (
        "bernoulli_decode",
        &[
            "bernoulli",
            "--dilations",
            "2,3",
            "--report",
            "decode",
            "--word",
            "1(2)",
        ],
    ),
    (
        "bernoulli_hull_table",
        &[
            "bernoulli",
            "--format",
            "table",
            "--dilations",
            "3,2",
            "--orient=-,+",
            "--report",
            "hull",
        ],
    ),
    ("err_parse", &["lyap", "--poly", "z^^2"]),
    ("err_degree", &["lyap", "--poly", "3*z + 1"]),
    ("err_dilations", &["bernoulli", "--dilations", "2,1"]),
];

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nadyn"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.out"))
}

#[test]
fn outputs_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for (name, args) in CASES {
        let (code, out) = run(args);
        let got = format!("exit {code}\n{out}");
        let path = golden(name);
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_default();
        if want != got {
            eprintln!("--- {name}\nwant:\n{want}\ngot:\n{got}");
            stale.push(*name);
        }
    }
    assert!(stale.is_empty(), "mismatched golden outputs: {stale:?}");
}

#[test]
fn output_is_deterministic() {
    for (name, args) in CASES {
        assert_eq!(run(args), run(args), "{name}");
    }
}

#[test]
fn json_round_trips() {
    for (name, args) in CASES {
        if args.contains(&"table") {
            continue;
        }
        let (_, out) = run(args);
        let v: serde_json::Value =
            serde_json::from_str(&out).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            serde_json::to_string_pretty(&v).unwrap() + "\n",
            out,
            "{name}"
        );
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["lyap", "--poly", "z^^2"]).0, 2);
    assert_eq!(run(&["lyap", "--poly", "3*z + 1"]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["lyap", "--poly", "z^3", "--field", "padic:4"]).0, 3);
}
