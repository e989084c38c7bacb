#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use hopf_core::{Alphabet, NCPoly, Word, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary inside the golden directory so fixture paths are relative.
pub fn hopf(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("spawn hopf");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// `(name, argv)`; the transcript of each lives in `golden/<name>.out`.
pub const CASES: &[(&str, &[&str])] = &[
    ("coprod", &["coprod", "--alphabet", "a:L,b:L", "ab"]),
    (
        "coprod_mixed",
        &["coprod", "--alphabet", "a:L,g:G", "2ga - 1/3"],
    ),
    ("mul", &["mul", "--alphabet", "a:L,b:L", "a + b", "a - b"]),
    (
        "counit",
        &["counit", "--alphabet", "a:L,g:G", "3gg - a + 1/2"],
    ),
    (
        "antipode",
        &["antipode", "--alphabet", "a:L,b:L", "2ab - a + 1"],
    ),
    (
        "antipode_grouplike",
        &["antipode", "--alphabet", "a:L,g:G", "a"],
    ),
    ("pair", &["pair", "geo2.json", "ab"]),
    (
        "conv_shuffle",
        &["conv", "--alphabet", "a:L,b:L", "ab", "a"],
    ),
    ("conv_rep", &["conv", "geo2.json", "count.json"]),
    ("tensor", &["tensor", "nil.json", "diag.json"]),
    ("dsum", &["dsum", "nil.json", "diag.json"]),
    ("eval_matrix", &["eval", "nil.json", "2ag + g"]),
    ("eval_series", &["eval", "count.json", "aab + b"]),
    (
        "hankel",
        &["hankel", "--hankel", "1,2", "--series", "count.json"],
    ),
    (
        "hankel_json",
        &[
            "--format",
            "json",
            "hankel",
            "--hankel",
            "1,1",
            "--series",
            "count.json",
        ],
    ),
    (
        "rank",
        &["rank", "--hankel", "3,3", "--series", "geo2.json"],
    ),
    ("learn", &["learn", "--series", "count.json"]),
    (
        "learn_inconclusive",
        &[
            "learn",
            "--alphabet",
            "a:L",
            "--series",
            "aaa",
            "--explore",
            "2",
        ],
    ),
    ("split", &["split", "--series", "count.json"]),
    ("dual_s_rep", &["dualS", "--series", "count.json"]),
    (
        "dual_s_finite",
        &["dualS", "--alphabet", "a:L,b:L", "--series", "2ab - a + 1"],
    ),
    (
        "check_coassoc",
        &["check-coassoc", "--alphabet", "a:L,g:G", "--maxlen", "5"],
    ),
    (
        "check_antipode",
        &["check-antipode", "--alphabet", "a:L,b:L", "--maxlen", "5"],
    ),
    (
        "check_antipode_grouplike",
        &["check-antipode", "--alphabet", "g:G", "--maxlen", "2"],
    ),
    (
        "check_maxlen",
        &["check-coassoc", "--alphabet", "a:L", "--maxlen", "8"],
    ),
    ("parse_error", &["mul", "--alphabet", "a:L", "a", "a + x"]),
];

fn quote(a: &str) -> String {
    if a.contains(' ') || a.is_empty() {
        format!("\"{a}\"")
    } else {
        a.to_string()
    }
}

pub fn transcript(args: &[&str]) -> String {
    let r = hopf(args);
    format!(
        "$ hopf {}\n[exit {}]\n--- stdout\n{}--- stderr\n{}",
        args.iter().map(|a| quote(a)).collect::<Vec<_>>().join(" "),
        r.code,
        r.stdout,
        r.stderr
    )
}

/// Compares every case against its stored transcript. With `HOPF_BLESS` set
/// the transcripts are rewritten instead. Returns the names that differ.
pub fn golden_mismatches() -> Vec<String> {
    let bless = std::env::var_os("HOPF_BLESS").is_some();
    let mut bad = Vec::new();
    for (name, args) in CASES {
        let path = golden_dir().join(format!("{name}.out"));
        let got = transcript(args);
        if bless {
            std::fs::write(&path, &got).expect("write golden");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            _ => bad.push(name.to_string()),
        }
    }
    bad
}

/// Random polynomial in canonical form over `alphabet`.
pub fn random_poly(rng: &mut ChaCha8Rng, alphabet: &Alphabet) -> NCPoly {
    let syms: Vec<u8> = alphabet
        .letters()
        .iter()
        .map(|l| l.symbol() as u8)
        .collect();
    let n = rng.gen_range(0..=5);
    NCPoly::from_terms(
        alphabet,
        (0..n).map(|_| {
            let len = rng.gen_range(0..=4);
            let w: Vec<u8> = (0..len)
                .map(|_| syms[rng.gen_range(0..syms.len())])
                .collect();
            let num: i64 = rng.gen_range(-9..=9);
            let den: i64 = rng.gen_range(1..=4);
            (Word::from_bytes(w), Q::new(num.into(), den.into()))
        }),
    )
}

/// Prints 100 seeded polynomials, pushes each through `mul P 1` and checks
/// the output is the printed form and reparses to the same polynomial.
pub fn round_trip_failures(seed: u64) -> Vec<String> {
    let alphabet = Alphabet::parse("a:L,b:L,g:G").unwrap();
    let decl = alphabet.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..100 {
        let p = random_poly(&mut rng, &alphabet);
        let printed = p.to_string();
        let r = hopf(&["mul", "--alphabet", &decl, &printed, "1"]);
        let out = r.stdout.trim_end();
        let ok = r.code == 0 && out == printed && NCPoly::parse(out, &alphabet).as_ref() == Ok(&p);
        if !ok {
            bad.push(printed);
        }
    }
    bad
}
