//! Acceptance run: one line per criterion, driven through the `voawb` binary.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;
use voawb_core::envelope::analysis::char_check;

struct Outcome {
    ok: bool,
    note: String,
}

fn voawb(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_voawb")).arg("run").args(args).output().expect("run voawb");
    (out.status.code(), out.stdout)
}

/// Runs the suites and checks that every record passed and that `ids` are all present.
fn suites(args: &[&str], ids: &[&str]) -> Outcome {
    let (code, stdout) = voawb(args);
    let v: Value = match serde_json::from_slice(&stdout) {
        Ok(v) => v,
        Err(e) => return Outcome { ok: false, note: format!("bad report: {e}") },
    };
    let checks = v["checks"].as_array().cloned().unwrap_or_default();
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| c["status"] != "pass")
        .map(|c| format!("{}/{} {}", c["suite"].as_str().unwrap_or(""), c["id"].as_str().unwrap_or(""), c["witness"]))
        .collect();
    let missing: Vec<&str> = ids.iter().copied().filter(|id| !checks.iter().any(|c| c["id"] == *id)).collect();
    let ok = code == Some(0) && failed.is_empty() && missing.is_empty() && !checks.is_empty();
    let note = if ok {
        format!("{} checks", checks.len())
    } else {
        format!("exit {code:?}; failed {failed:?}; missing {missing:?}")
    };
    Outcome { ok, note }
}

fn criterion(n: usize, what: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    let el = t.elapsed();
    let ok = o.ok && el <= limit;
    let tag = if ok { "PASS" } else { "FAIL" };
    let late = if el > limit { " (over time limit)" } else { "" };
    println!("{tag} [{n:>2}] {what}: {} in {:.1}s / {}s{late}", o.note, el.as_secs_f64(), limit.as_secs());
    ok
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let mut all = true;
    all &= criterion(1, "Lie structure constants", s(1), || {
        suites(&["--suite", "lie"], &["antisymmetry", "jacobi", "killing-normalization"])
    });
    all &= criterion(2, "Sugawara Virasoro on V_0, V_1 (N=4, |m|,|n| <= 2)", s(60), || {
        suites(
            &["--suite", "weyl-virasoro", "--max-degree", "4"],
            &["central-charge", "delta-1", "virasoro-v0", "virasoro-v1", "l0-v0", "l0-v1"],
        )
    });
    all &= criterion(3, "regular functions, frames, transition matrix", s(30), || {
        suites(
            &["--suite", "regfun"],
            &[
                "product-oracle",
                "transition-identity",
                "transition-orthogonal",
                "transition-derivatives",
                "transition-frames",
            ],
        )
    });
    all &= criterion(4, "algebroid, 1-truncated and degree-4 conformal axioms", s(120), || {
        suites(
            &["--suite", "algebroid-axioms", "--max-degree", "4"],
            &["c-variant", "graded.d-product", "graded.skew-symmetry", "graded.quasi-jacobi", "from-envelope"],
        )
    });
    all &= criterion(5, "envelope identities (N=3, weights <= 4)", s(600), || {
        suites(
            &["--suite", "envelope-identities", "--max-degree", "3", "--max-weight", "4"],
            &["varpi-forms", "varpi-products", "virasoro-algebra", "virasoro-weights"],
        )
    });
    all &= criterion(6, "invariant bilinear form", s(600), || {
        suites(
            &["--suite", "form", "--max-degree", "3", "--max-weight", "4"],
            &["form-symmetric", "form-adjoint", "block-orthogonal", "gram-nondegenerate"],
        )
    });
    all &= criterion(7, "graded dimensions (n, weight <= 4) and generation from the top (<= 2)", s(600), || {
        let rows = char_check(2, 0);
        let r02 = rows.iter().find(|r| r.lambda == 0 && r.n == 2).map(|r| (r.enumerated, r.predicted));
        if r02 != Some((27, 27)) {
            return Outcome { ok: false, note: format!("λ=0, n=2 gives {r02:?}") };
        }
        suites(
            &["--suite", "char", "--suite", "generate", "--max-degree", "4", "--max-weight", "4"],
            &["dim-l4-n4", "gen-l2-n2", "gen-l0-n1"],
        )
    });
    all &= criterion(8, "singular vectors at k = 1, 2 and their dual-level partners", s(300), || {
        suites(
            &["--suite", "singular"],
            &["find-singular-k1", "find-singular-k2", "block-match-k1", "block-match-k2", "invariants-are-functions"],
        )
    });
    all &= criterion(9, "KZ series and pairing constancy (weights <= 2, order 6)", s(300), || {
        suites(
            &["--suite", "kz", "--max-weight", "2", "--order", "6"],
            &["pairing-constant", "pairing-derivatives", "kz-flatness", "kz-leading-pairing"],
        )
    });
    all &= criterion(10, "triple products through order 4", s(600), || {
        suites(&["--suite", "triple", "--order", "4"], &[])
    });
    all &= criterion(11, "Zhu algebra", s(120), || {
        suites(&["--suite", "zhu"], &["omega-class", "x-commutator", "associative", "well-defined", "sl2-letters"])
    });
    all &= criterion(12, "byte-identical JSON for identical configs", s(300), || {
        let args =
            ["--suite", "lie", "--suite", "regfun", "--suite", "zhu", "--suite", "char", "--jobs", "2", "--seed", "7"];
        let (c1, a) = voawb(&args);
        let (c2, b) = voawb(&args);
        let ok = c1 == Some(0) && c2 == Some(0) && a == b && !a.is_empty();
        Outcome { ok, note: format!("{} bytes, identical: {}", a.len(), a == b) }
    });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
