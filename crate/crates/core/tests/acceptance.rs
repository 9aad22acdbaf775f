//! Acceptance criteria 1 through 12, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hankel_core::closedform::{
    big_d_sign, conjecture_scan, d_shift_generic, d_shift_int, d_sign, generic_big_d, generic_d, shift_support,
    t_int, t_table, DMethod, TMethod,
};
use hankel_core::contfrac::{verify_identity, Identity};
use hankel_core::hankel::{
    build_matrix, catalan_shift_parity, det_bareiss, det_cofactor, ldlt_plain_factors, ldlt_verify_plain,
    ldlt_verify_shifted, moment_orthogonality, nimble_enumerate, nimble_solve, unit_orthopoly,
};
use hankel_core::seq::paperfolding_s;
use hankel_core::{RuleKind, SequenceRule, Sign};
use num_bigint::BigInt;

const C1_MAX_N: u64 = 512;
const C1_BUDGET: Duration = Duration::from_secs(30);
const C2_MAX_N: u64 = 512;
const C3_MAX_N: u64 = 32;
const C3_BUDGET: Duration = Duration::from_secs(120);
const C4_SHIFTS: std::ops::RangeInclusive<u64> = 2..=8;
const C4_MAX_N: u64 = 48;
const C5_MAX_N: u64 = 10_000;
const C6_ORDER: usize = 64;
const C7_MAX_N: usize = 64;
const C8_MAX_N: usize = 9;
const C8_MAX_M: u64 = 4;
const C9_MAX: usize = 20;
const C10_MAX_M: u64 = 16;
const C10_MAX_N: u64 = 256;
const C11_SHIFTS: std::ops::RangeInclusive<u64> = 3..=16;
const C11_MAX_N: u64 = 64;
const C12_N: u64 = 1_000_000;
const C12_BUDGET: Duration = Duration::from_millis(10);
const C12_BAREISS_N: u64 = 512;
const C12_MIN_SPEEDUP: f64 = 1_000.0;

const D_PREFIX: [i64; 12] = [1, 1, 1, -1, -1, -1, 1, -1, -1, -1, -1, 1];
const T_PREFIX: [i64; 16] = [1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1];

type Outcome = Result<String, String>;
type Probe = (&'static str, Box<dyn Fn() -> String>);
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unit_det(n: u64, m: u64) -> BigInt {
    det_bareiss(&build_matrix(&SequenceRule::unit(m), n as usize)).expect("unit rule is integral")
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 0..=C1_MAX_N {
        let want = Sign::of_binom2(n).to_i64();
        let got = unit_det(n, 0);
        ensure(got == BigInt::from(want), || format!("n={n} expected={want} got={got}"))?;
    }
    let spent = start.elapsed();
    ensure(spent < C1_BUDGET, || format!("took {spent:.2?}, budget {C1_BUDGET:?}"))?;
    Ok(format!("n<={C1_MAX_N} in {spent:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut product = Sign::Plus;
    for n in 0..=C2_MAX_N {
        let delta = big_d_sign(n, DMethod::Delta);
        for m in DMethod::ALL {
            ensure(big_d_sign(n, m) == delta, || format!("n={n} method={m} disagrees"))?;
        }
        ensure(delta == product, || format!("n={n} product of S differs"))?;
        let got = unit_det(n, 1);
        ensure(got == BigInt::from(delta.to_i64()), || format!("n={n} expected={delta} got={got}"))?;
        product *= paperfolding_s(n);
    }
    let prefix: Vec<i64> = (0..12).map(|n| big_d_sign(n, DMethod::Delta).to_i64()).collect();
    ensure(prefix == D_PREFIX, || format!("prefix {prefix:?}"))?;
    Ok(format!("n<={C2_MAX_N}, three methods, paperfolding product, printed prefix"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for n in 0..=C3_MAX_N {
        let plain = det_cofactor(&build_matrix(&SequenceRule::generic(0), n as usize)).map_err(|e| e.to_string())?;
        ensure(plain == generic_d(n), || format!("d n={n} oracle={plain} closed={}", generic_d(n)))?;
        let shifted = det_cofactor(&build_matrix(&SequenceRule::generic(1), n as usize)).map_err(|e| e.to_string())?;
        ensure(shifted == generic_big_d(n), || format!("D n={n} oracle={shifted} closed={}", generic_big_d(n)))?;
    }
    let spots = [
        (generic_d(5).to_string(), "x0*x3^2*x7^2"),
        (generic_d(11).to_string(), "-x0*x3^2*x7^2*x15^6"),
        (generic_big_d(11).to_string(), "x3^3*x7*x15^7"),
    ];
    for (got, want) in spots {
        ensure(got == want, || format!("expected {want} got {got}"))?;
    }
    let spent = start.elapsed();
    ensure(spent < C3_BUDGET, || format!("took {spent:.2?}, budget {C3_BUDGET:?}"))?;
    Ok(format!("n<={C3_MAX_N} in {spent:.2?}"))
}

fn criterion_4() -> Outcome {
    for m in C4_SHIFTS {
        for n in 0..=C4_MAX_N {
            let closed = d_shift_generic(n, m).map_err(|e| e.to_string())?;
            let oracle = det_cofactor(&build_matrix(&SequenceRule::generic(m), n as usize)).map_err(|e| e.to_string())?;
            ensure(closed == oracle, || format!("n={n} m={m} oracle={oracle} closed={closed}"))?;
            let int = d_shift_int(n, m);
            let unit = closed.substitute(|k| RuleKind::Unit.level_value(k)).map_err(|e| e.to_string())?;
            ensure(unit.to_string() == int.to_string(), || format!("n={n} m={m} unit specialization {unit} vs {int}"))?;
            ensure(unit_det(n, m) == BigInt::from(int), || format!("n={n} m={m} bareiss disagrees"))?;
            ensure((int != 0) == shift_support(n, m), || format!("n={n} m={m} support"))?;
        }
    }
    let two: Vec<i64> = (0..7).map(|n| d_shift_int(n, 2)).collect();
    ensure(two == [1, 0, -1, 0, 1, 0, -1], || format!("m=2 prefix {two:?}"))?;
    let three: Vec<i64> = (0..12).map(|n| d_shift_int(n, 3)).collect();
    ensure(three == [1, 1, 0, 0, -1, 1, 0, 0, -1, -1, 0, 0], || format!("m=3 prefix {three:?}"))?;
    let five: Vec<String> = (0..4).map(|n| d_shift_generic(n, 5).map(|p| p.to_string())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(five == ["1", "0", "0", "-x7^3"], || format!("m=5 prefix {five:?}"))?;
    Ok(format!("m in {C4_SHIFTS:?}, n<={C4_MAX_N}, printed prefixes for m=2,3,5"))
}

fn criterion_5() -> Outcome {
    let tables: Vec<Vec<Sign>> = TMethod::ALL.iter().map(|&m| t_table(C5_MAX_N + 1, m)).collect();
    for n in 0..=C5_MAX_N as usize {
        for (m, table) in TMethod::ALL.iter().zip(&tables) {
            ensure(table[n] == tables[0][n], || format!("n={n} table method={m} disagrees"))?;
        }
    }
    for n in 0..=C5_MAX_N {
        for m in [TMethod::Ratio, TMethod::Recurrence, TMethod::Structural] {
            ensure(t_int(n, m) == tables[0][n as usize], || format!("n={n} pointwise method={m} disagrees"))?;
        }
    }
    let prefix: Vec<i64> = tables[0][..16].iter().map(|s| s.to_i64()).collect();
    ensure(prefix == T_PREFIX, || format!("prefix {prefix:?}"))?;
    Ok(format!("four methods agree for n<={C5_MAX_N}, printed prefix"))
}

fn criterion_6() -> Outcome {
    for which in Identity::ALL {
        let ok = verify_identity(which, C6_ORDER).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{which} fails at order {C6_ORDER}"))?;
    }
    Ok(format!("t-fraction, favard-fraction, grs-fraction at order {C6_ORDER}"))
}

fn criterion_7() -> Outcome {
    for n in 1..=C7_MAX_N {
        ensure(ldlt_verify_plain(n), || format!("plain n={n}"))?;
        ensure(ldlt_verify_shifted(n), || format!("shifted n={n}"))?;
    }
    let (a, d) = ldlt_plain_factors(4);
    ensure(a == vec![vec![1, 0, 0, 0], vec![1, 1, 0, 0], vec![0, -1, 1, 0], vec![1, 1, -1, 1]], || format!("A4 {a:?}"))?;
    ensure(d == vec![1, -1, 1, -1], || format!("D4 {d:?}"))?;
    Ok(format!("1<=n<={C7_MAX_N}, displayed n=4 factorization"))
}

fn criterion_8() -> Outcome {
    for m in 0..=C8_MAX_M {
        for n in 0..=C8_MAX_N {
            let all = nimble_enumerate(n, m).map_err(|e| e.to_string())?;
            let nonzero = unit_det(n as u64, m) != BigInt::from(0);
            ensure(all.len() == usize::from(nonzero), || format!("n={n} m={m} found {}", all.len()))?;
            let solved = nimble_solve(n, m);
            ensure(all.first().map(|p| p.images().to_vec()) == solved.as_ref().map(|p| p.images().to_vec()), || {
                format!("n={n} m={m} solver disagrees")
            })?;
        }
    }
    Ok(format!("n<={C8_MAX_N}, m<={C8_MAX_M}"))
}

fn criterion_9() -> Outcome {
    for j in 0..=C9_MAX {
        for i in 0..j {
            let v = moment_orthogonality(i, j).map_err(|e| e.to_string())?;
            ensure(v == BigInt::from(0), || format!("i={i} j={j} got {v}"))?;
        }
    }
    for (n, shown) in [(2, "x^2 - 1"), (4, "x^4 + x^2 - 1"), (7, "x^7")] {
        let p = unit_orthopoly(n).to_string();
        ensure(p == shown, || format!("p{n} = {p}"))?;
    }
    Ok(format!("0<=i<j<={C9_MAX}, printed p2, p4, p7"))
}

fn criterion_10() -> Outcome {
    for m in 1..=C10_MAX_M {
        for n in 0..=C10_MAX_N {
            let p = catalan_shift_parity(n, m);
            ensure(p == u8::from(shift_support(n, m)), || format!("n={n} m={m} residue rule"))?;
            ensure(p == u8::from(d_shift_int(n, m) != 0), || format!("n={n} m={m} determinant"))?;
        }
    }
    Ok(format!("1<=m<={C10_MAX_M}, n<={C10_MAX_N}"))
}

fn criterion_11() -> Outcome {
    let mut fitted = Vec::new();
    for m in C11_SHIFTS {
        let r = conjecture_scan(m, C11_MAX_N);
        ensure(r.conforms(), || format!("m={m} violations={} stable={}", r.violations.len(), r.epsilon_stable))?;
        if m % 2 == 1 {
            let eps = r.epsilon.ok_or_else(|| format!("m={m} no fitted epsilon"))?;
            fitted.push(format!("{m}:{eps}"));
        }
    }
    Ok(format!("conforms for m in {C11_SHIFTS:?}, max_n={C11_MAX_N}, epsilon {}", fitted.join(" ")))
}

fn time_once<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn criterion_12() -> Outcome {
    let checks: [Probe; 5] = [
        ("d_sign", Box::new(|| d_sign(C12_N).to_string())),
        ("D_sign", Box::new(|| big_d_sign(C12_N, DMethod::Delta).to_string())),
        ("T_int ratio", Box::new(|| t_int(C12_N, TMethod::Ratio).to_string())),
        ("T_int structural", Box::new(|| t_int(C12_N, TMethod::Structural).to_string())),
        ("generic_D", Box::new(|| generic_big_d(C12_N).to_string())),
    ];
    let mut worst = Duration::ZERO;
    for (name, f) in &checks {
        let (_, t) = time_once(f);
        ensure(t < C12_BUDGET, || format!("{name} at n={C12_N} took {t:?}"))?;
        worst = worst.max(t);
    }
    let (oracle, bareiss) = time_once(|| unit_det(C12_BAREISS_N, 0));
    const REPS: u32 = 10_000;
    let (closed, total) = time_once(|| {
        let mut acc = 0i64;
        for _ in 0..REPS {
            acc += d_sign(std::hint::black_box(C12_BAREISS_N)).to_i64();
        }
        acc
    });
    ensure(BigInt::from(closed / i64::from(REPS)) == oracle, || "closed and bareiss disagree".into())?;
    let per_call = (total / REPS).max(Duration::from_nanos(1));
    let speedup = bareiss.as_secs_f64() / per_call.as_secs_f64();
    ensure(speedup >= C12_MIN_SPEEDUP, || format!("speedup {speedup:.0}x"))?;
    Ok(format!("slowest closed form {worst:?} at n={C12_N}; speedup {speedup:.0}x at n={C12_BAREISS_N}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("unshifted sign law", criterion_1),
        ("shifted-by-one law", criterion_2),
        ("symbolic monomials", criterion_3),
        ("shifted determinants", criterion_4),
        ("T quadruple agreement", criterion_5),
        ("continued fractions", criterion_6),
        ("decompositions", criterion_7),
        ("nimble uniqueness", criterion_8),
        ("orthogonality", criterion_9),
        ("parity product", criterion_10),
        ("conjecture scan", criterion_11),
        ("performance", criterion_12),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {title}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
