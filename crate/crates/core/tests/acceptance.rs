//! Acceptance suite: every identity the crate claims, checked exactly at
//! desk scale. One PASS/FAIL line is printed per criterion (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::process::Command;

use num_bigint::BigInt;

use patalan::exact::{binom_integer, from_int};
use patalan::matrixlab::{
    hadamard_inverse_matrix, matrix_inverse, verify_factorization,
    verify_hadamard_inverse_integral, verify_involution, ExactMatrix,
};
use patalan::powerseries::{
    patalan3_via_recurrence, patalan_gf_times_x, patalan_inner_poly, patalan_via_convolution,
    series_compose, verify_rubenstein_recurrence, verify_two_var_gf, TruncatedSeries,
};
use patalan::sequences::{
    patalan_seq, super_catalan, super_patalan_closed, super_patalan_table,
    twisted_transpose_check,
};
use patalan::{Params, Verification};

/// p in {2,3,5,7} with every 1 <= q < p.
fn standard_configs() -> Vec<Params> {
    let mut out = Vec::new();
    for p in [2u32, 3, 5, 7] {
        for q in 1..p {
            out.push(Params::new(p, q).unwrap());
        }
    }
    out
}

fn criterion(number: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("CRITERION {number} {name} PASS"),
        Err(msg) => {
            println!("CRITERION {number} {name} FAIL {msg}");
            panic!("criterion {number} ({name}) failed: {msg}");
        }
    }
}

fn expect_pass(v: Verification, context: &str) -> Result<(), String> {
    if v.passed {
        Ok(())
    } else {
        Err(format!("{context}: {v}"))
    }
}

#[test]
fn criterion_01_closed_form_equals_recurrence() {
    criterion(1, "closed-form-vs-recurrence", || {
        for params in standard_configs() {
            let table = super_patalan_table(params, 30, 30).map_err(|e| e.to_string())?;
            for m in 0..30 {
                for n in 0..30 {
                    let closed = super_patalan_closed(params, m as u64, n as u64)
                        .map_err(|e| e.to_string())?;
                    if &closed != table.get(m, n) {
                        return Err(format!(
                            "{params} Q({m},{n}): closed {closed} != recurrence {}",
                            table.get(m, n)
                        ));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_02_super_catalan_specialization() {
    criterion(2, "super-catalan-specialization", || {
        let params = Params::new(2, 1).unwrap();
        let table = super_patalan_table(params, 30, 30).map_err(|e| e.to_string())?;
        for m in 0..30 {
            for n in 0..30 {
                let s = super_catalan(m as u64, n as u64);
                if &s != table.get(m, n) {
                    return Err(format!("S({m},{n}) = {s} != Q_(2,1)({m},{n}) = {}", table.get(m, n)));
                }
            }
        }
        let catalan = patalan_seq(2, 30).map_err(|e| e.to_string())?;
        for n in 0..30 {
            let lhs = BigInt::from(2) * &catalan.values[n];
            let rhs = super_catalan(n as u64, 1);
            if lhs != rhs {
                return Err(format!("2 C_{n} = {lhs} != S({n},1) = {rhs}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_column_embedding() {
    criterion(3, "column-one-embedding", || {
        for p in 2u32..=7 {
            let a = patalan_seq(p, 50).map_err(|e| e.to_string())?;
            let table = super_patalan_table(Params::new(p, 1).unwrap(), 50, 2)
                .map_err(|e| e.to_string())?;
            for n in 0..50 {
                let lhs = BigInt::from(p) * &a.values[n];
                if &lhs != table.get(n, 1) {
                    return Err(format!("p={p} n={n}: p a(n) = {lhs} != P(n,1) = {}", table.get(n, 1)));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_rubenstein_recurrence() {
    criterion(4, "rubenstein-recurrence", || {
        for params in standard_configs() {
            let v = verify_rubenstein_recurrence(params, 30).map_err(|e| e.to_string())?;
            expect_pass(v, &params.to_string())?;
        }
        Ok(())
    });
}

#[test]
fn criterion_05_involution() {
    criterion(5, "involution", || {
        for p in [2u32, 3, 5, 7] {
            for q in [1, p - 1] {
                let params = Params::new(p, q).unwrap();
                let v = verify_involution(params, 32).map_err(|e| e.to_string())?;
                expect_pass(v, &params.to_string())?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_06_factorization() {
    criterion(6, "pascal-factorization", || {
        for params in standard_configs() {
            let v = verify_factorization(params, 12).map_err(|e| e.to_string())?;
            expect_pass(v, &params.to_string())?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_hadamard_inverse_integrality() {
    criterion(7, "hadamard-inverse-integrality", || {
        for params in standard_configs() {
            for n in [2usize, 5, 10] {
                let v = verify_hadamard_inverse_integral(params, n).map_err(|e| e.to_string())?;
                expect_pass(v, &format!("{params} n={n}"))?;
            }
        }
        // pinned hand instance
        let h = hadamard_inverse_matrix(Params::new(3, 1).unwrap(), 2).map_err(|e| e.to_string())?;
        let inv = matrix_inverse(&h).map_err(|e| e.to_string())?;
        let expect = ExactMatrix::from_fn(2, 2, |i, j| from_int([[2, -6], [-3, 18]][i][j]));
        if inv != expect {
            return Err("H^-1 for (3,1), n=2 is not [[2,-6],[-3,18]]".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_08_compositional_inverse() {
    criterion(8, "compositional-inverse", || {
        let order = 64;
        for p in 2u32..=5 {
            let xa = patalan_gf_times_x(p, order).map_err(|e| e.to_string())?;
            let poly = patalan_inner_poly(p, order);
            let x = TruncatedSeries::x(order);
            if series_compose(&poly, &xa).map_err(|e| e.to_string())? != x {
                return Err(format!("p={p}: s(xA(x)) != x at order {order}"));
            }
            if series_compose(&xa, &poly).map_err(|e| e.to_string())? != x {
                return Err(format!("p={p}: xA(s(x)) != x at order {order}"));
            }
        }
        // for p=3 the inner polynomial is literally x - 3x^2 + 3x^3
        let poly3 = patalan_inner_poly(3, 8);
        let expected = [0i64, 1, -3, 3, 0, 0, 0, 0];
        for (k, &c) in expected.iter().enumerate() {
            if poly3.coeff(k) != &from_int(c) {
                return Err(format!("inner polynomial for p=3: coefficient {k} is {}", poly3.coeff(k)));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_09_convolutional_recurrence() {
    criterion(9, "convolutional-recurrence", || {
        for p in 2u32..=5 {
            let conv = patalan_via_convolution(p, 30).map_err(|e| e.to_string())?;
            let seq = patalan_seq(p, 30).map_err(|e| e.to_string())?;
            if conv.values != seq.values {
                return Err(format!("p={p}: convolution route diverges from recurrence"));
            }
        }
        // p=2 path reproduces the Catalan numbers
        let catalan = patalan_via_convolution(2, 10).map_err(|e| e.to_string())?;
        let expect: Vec<BigInt> =
            [1i64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862].iter().map(|&v| v.into()).collect();
        if catalan.values != expect {
            return Err("p=2 convolution does not give the Catalan numbers".into());
        }
        // p=3 general form agrees with the explicit cubic recurrence
        let general = patalan_via_convolution(3, 30).map_err(|e| e.to_string())?;
        let special = patalan3_via_recurrence(30).map_err(|e| e.to_string())?;
        if general.values != special.values {
            return Err("p=3 general and explicit recurrences disagree".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_10_two_variable_gf() {
    criterion(10, "two-variable-gf", || {
        for p in [2u32, 3, 5] {
            let v = verify_two_var_gf(Params::new(p, 1).unwrap(), 16).map_err(|e| e.to_string())?;
            expect_pass(v, &format!("p={p}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_11_twisted_transpose() {
    criterion(11, "twisted-transpose", || {
        for params in standard_configs() {
            let v = twisted_transpose_check(params, 20).map_err(|e| e.to_string())?;
            expect_pass(v, &params.to_string())?;
        }
        Ok(())
    });
}

#[test]
fn criterion_12_a1_is_p_choose_2() {
    criterion(12, "a(1)-is-p-choose-2", || {
        for p in 2u32..=12 {
            let a = patalan_seq(p, 2).map_err(|e| e.to_string())?;
            let expect = binom_integer(p as i64, 2);
            if a.values[1] != expect {
                return Err(format!("p={p}: a(1) = {} != C(p,2) = {expect}", a.values[1]));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_13_bfile_exit_code_contract() {
    criterion(13, "bfile-exit-codes", || {
        let bin = env!("CARGO_BIN_EXE_patalan");
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let good = dir.path().join("b097188.txt");
        let emit = Command::new(bin)
            .args(["bfile", "emit", "--kind", "patalan", "--p", "3", "--count", "5"])
            .args(["--out", good.to_str().unwrap()])
            .status()
            .map_err(|e| e.to_string())?;
        if emit.code() != Some(0) {
            return Err(format!("emit exited {:?}", emit.code()));
        }
        let text = std::fs::read_to_string(&good).map_err(|e| e.to_string())?;
        if text != "0 1\n1 3\n2 15\n3 90\n4 594\n" {
            return Err(format!("emitted b-file content {text:?}"));
        }

        // round trip: check against the file just emitted
        let check = Command::new(bin)
            .args(["bfile", "check", "--family", "patalan", "--p", "3"])
            .args(["--file", good.to_str().unwrap()])
            .status()
            .map_err(|e| e.to_string())?;
        if check.code() != Some(0) {
            return Err(format!("matching check exited {:?}", check.code()));
        }

        // the 1,1,3,15 convention passes with --prefix-skip 1
        let alt = dir.path().join("b025748.txt");
        std::fs::write(&alt, "0 1\n1 1\n2 3\n3 15\n4 90\n").map_err(|e| e.to_string())?;
        let skip = Command::new(bin)
            .args(["bfile", "check", "--family", "patalan", "--p", "3", "--prefix-skip", "1"])
            .args(["--file", alt.to_str().unwrap()])
            .status()
            .map_err(|e| e.to_string())?;
        if skip.code() != Some(0) {
            return Err(format!("prefix-skip check exited {:?}", skip.code()));
        }

        // corrupted value: exit 1
        let bad = dir.path().join("corrupt.txt");
        std::fs::write(&bad, "0 1\n1 3\n2 16\n").map_err(|e| e.to_string())?;
        let corrupt = Command::new(bin)
            .args(["bfile", "check", "--family", "patalan", "--p", "3"])
            .args(["--file", bad.to_str().unwrap()])
            .status()
            .map_err(|e| e.to_string())?;
        if corrupt.code() != Some(1) {
            return Err(format!("corrupted check exited {:?}", corrupt.code()));
        }

        // usage error: exit 2
        let bad_family = Command::new(bin)
            .args(["bfile", "check", "--family", "nonsense", "--p", "3"])
            .args(["--file", good.to_str().unwrap()])
            .status()
            .map_err(|e| e.to_string())?;
        if bad_family.code() != Some(2) {
            return Err(format!("bad-family check exited {:?}", bad_family.code()));
        }

        // missing file: exit 3
        let missing = Command::new(bin)
            .args(["bfile", "check", "--family", "patalan", "--p", "3"])
            .args(["--file", dir.path().join("absent.txt").to_str().unwrap()])
            .status()
            .map_err(|e| e.to_string())?;
        if missing.code() != Some(3) {
            return Err(format!("missing-file check exited {:?}", missing.code()));
        }
        Ok(())
    });
}
