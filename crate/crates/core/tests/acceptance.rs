//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are expected to fail because a reference
//! value disagrees with exhaustive enumeration; they are still evaluated and
//! reported, but do not fail the run.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use common::*;
use convexenum::cfrac::{bot_series, f1_series, f2_formula_check, m1_series, tot_series};
use convexenum::exact::{smallest_positive_root, to_decimal, Rounding};
use convexenum::perms::{
    canonicalize_state, convex_perms, count_perms_bruteforce, count_perms_digraph, descendant_counts, gf_bound,
    is_convex_perm, is_slow_riser, lazy_walk_counts, restricted_walks, CanonicalState, Dir, EndpointState,
    Permutation, Side,
};
use convexenum::words::{
    count_words_bruteforce, decode_word, encode_word, g0p_stable, is_convex_word, word_gf, Word,
};
use convexenum::Rational;
use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

/// Criteria expected to fail, with the reason.
const KNOWN_RED: &[(u32, &str)] = &[(
    3,
    "reference value 7469 at p = 9 disagrees with the exhaustive count 7989",
)];

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let f1 = f1_series(12).to_integers().ok_or("non-integer coefficient")?;
    for k in 0..=2 {
        for n in 1..=12 {
            let want = reference_count(k, n);
            let brute = count_perms_bruteforce(n, k);
            check(brute == want, || format!("brute force f_{k}({n}) = {brute}, want {want}"))?;
            let walk = count_perms_digraph(n, k).map_err(|e| e.to_string())?;
            check(walk == want.into(), || format!("digraph f_{k}({n}) = {walk}, want {want}"))?;
            if k == 1 {
                check(f1[n] == want.into(), || format!("cfrac f_1({n}) = {}, want {want}", f1[n]))?;
            }
        }
    }
    Ok("f_0, f_1, f_2 for n = 1..12 from all pipelines; f_1(12) = 426, f_2(12) = 1088".into())
}

fn criterion_2() -> Outcome {
    let gf = word_gf(3, 0, 20, true).map_err(|e| e.to_string())?;
    let got = gf.series.to_integers().ok_or("non-integer coefficient")?;
    let want: Vec<BigInt> = [1, 3, 9, 16, 20].into_iter().chain([21; 16]).map(BigInt::from).collect();
    check(got == want, || format!("word_gf(3, 0) = {got:?}"))?;
    for p in 1..=4 {
        for k in 0..=3 {
            let s = word_gf(p, k, 10, false).map_err(|e| e.to_string())?.series.to_integers().unwrap();
            for n in 0..=10 {
                let brute = count_words_bruteforce(n, p, k);
                check(s[n] == brute.into(), || format!("p={p} k={k} n={n}: gf {} vs brute {brute}", s[n]))?;
            }
        }
    }
    Ok("word_gf(3, 0) = 1, 3, 9, 16, 20, 21, ... to order 20; brute force agrees for n <= 10, p <= 4, k <= 3".into())
}

fn criterion_3() -> Outcome {
    let reference = [1u32, 5, 21, 70, 214, 575, 1475, 3500, 7469];
    for p in 1..=5u32 {
        let brute = count_words_bruteforce(2 * p as usize - 1, p, 0);
        check(g0p_stable(p) == brute.into(), || format!("p={p}: formula {} vs brute {brute}", g0p_stable(p)))?;
    }
    let got: Vec<BigUint> = (1..=9).map(g0p_stable).collect();
    for (i, (g, r)) in got.iter().zip(reference).enumerate() {
        let p = i as u32 + 1;
        check(*g == r.into(), || {
            let brute = count_words_bruteforce(2 * p as usize - 1, p, 0);
            format!("p={p}: formula {g}, exhaustive count {brute}, reference {r}")
        })?;
    }
    Ok("g0p_stable(1..9) matches the reference list and brute force for p <= 5".into())
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for p in 1..=4u32 {
        let n = 2 * p as usize - 1;
        let mut letters = vec![1u32; n];
        loop {
            let w = Word::new(letters.clone(), p).map_err(|e| e.to_string())?;
            if is_convex_word(&w, 0) {
                let (m, w1, w2) = decode_word(&w).map_err(|e| format!("{w}: {e}"))?;
                let back = encode_word(p, m, &w1, &w2, n).map_err(|e| format!("{w}: {e}"))?;
                check(back == w, || format!("{w} came back as {back}"))?;
                count += 1;
            }
            let Some(i) = letters.iter().rposition(|&l| l < p) else { break };
            letters[i] += 1;
            letters[i + 1..].fill(1);
        }
    }
    for (p, text) in [(3, "23321"), (8, "146788888888862"), (5, "123455552")] {
        let w = Word::parse(text, p).map_err(|e| e.to_string())?;
        let (m, w1, w2) = decode_word(&w).map_err(|e| format!("{text}: {e}"))?;
        let back = encode_word(p, m, &w1, &w2, w.len()).map_err(|e| format!("{text}: {e}"))?;
        check(back == w, || format!("{text} came back as {back}"))?;
    }
    Ok(format!("{count} words of length 2p - 1 (p <= 4) and the three worked examples round-trip"))
}

fn criterion_5() -> Outcome {
    for p in REFERENCE_GFS {
        let side = if p.upper { Side::Upper } else { Side::Lower };
        let ours = gf_bound(p.k, side, None).map_err(|e| e.to_string())?;
        let a = ours.walk_gf.to_series(29).unwrap().to_integers().unwrap();
        let b = p.ratfun().to_series(29).unwrap().to_integers().unwrap();
        check(a == b, || format!("{}: series differ", p.name))?;
    }
    Ok("F1-, F1+, F2-, F2+ agree with the generated graphs to 30 coefficients".into())
}

fn criterion_6() -> Outcome {
    let one = Rational::from_integer(1.into());
    let tol = Rational::new(1.into(), BigInt::from(10).pow(18));
    let rate_tol = Rational::new(1.into(), BigInt::from(10).pow(9));
    let mut rates = Vec::new();
    for p in REFERENCE_GFS {
        let root = smallest_positive_root(&p.den_poly(), 22, &one).map_err(|e| e.to_string())?;
        let want = parse_decimal(p.root);
        check((&root.lo - &want).abs() < tol && (&root.hi - &want).abs() < tol, || {
            format!("{}: root {} not within 1e-18 of {}", p.name, to_decimal(&root.lo, 22, Rounding::Down), p.root)
        })?;
        let rate = to_decimal(&root.lo.recip(), 10, Rounding::Down);
        check((parse_decimal(&rate) - parse_decimal(p.rate)).abs() < rate_tol, || {
            format!("{}: rate {rate} vs {}", p.name, p.rate)
        })?;
        rates.push(rate);
    }
    Ok(format!("roots within 1e-18, rates {} within 1e-9", rates.join(", ")))
}

fn criterion_7() -> Outcome {
    let order = 30;
    let f1 = f1_series(order);
    let m1 = m1_series(order).map_err(|e| e.to_string())?;
    check(f1 == m1, || "f1_series and m1_series differ".into())?;
    let f1 = f1.to_integers().unwrap();
    let walks = lazy_walk_counts(1, order - 2).map_err(|e| e.to_string())?;
    for n in 2..=order {
        let want = BigInt::from(&walks[n - 2] * 2u32);
        check(f1[n] == want, || format!("f_1({n}) = {}, walks give {want}", f1[n]))?;
    }
    let root = CanonicalState::identity(3);
    let t = restricted_walks(1, root, &[(root, Dir::R)], &[root], 20).map_err(|e| e.to_string())?;
    let big = |v: &[BigUint]| v.iter().cloned().map(BigInt::from).collect::<Vec<_>>();
    check(bot_series(20).to_integers().unwrap() == big(&t.ending[0]), || "bot differs from walk oracle".into())?;
    check(tot_series(20).to_integers().unwrap() == big(&t.totals), || "tot differs from walk oracle".into())?;
    Ok("f1 = m1 = 2 * walks to order 30; bot and tot match the walk oracle to order 20".into())
}

fn criterion_8() -> Outcome {
    let report = f2_formula_check(20).map_err(|e| e.to_string())?;
    for n in 1..=12 {
        check(report.truth[n] == reference_count(2, n).into(), || format!("oracle f_2({n}) = {}", report.truth[n]))?;
    }
    let walks = restricted_walks(2, CanonicalState::seed(), &[], &[], 18).map_err(|e| e.to_string())?;
    for n in 2..=20 {
        let want = BigInt::from(&walks.totals[n - 2] * 2u32);
        check(report.truth[n] == want, || format!("oracle f_2({n}) = {}, walks give {want}", report.truth[n]))?;
    }
    let describe = |m: Option<usize>| match m {
        None => "agrees through n = 20".to_string(),
        Some(n) => format!("first differs at n = {n}"),
    };
    Ok(format!(
        "report produced, oracle exact through n = 20; formula as displayed {}, corrected formula {}",
        describe(report.first_printed_mismatch),
        describe(report.first_corrected_mismatch)
    ))
}

fn criterion_9() -> Outcome {
    for n in 1..=8 {
        for p in Permutation::all(n) {
            for k in 0..=3 {
                check(is_convex_perm(&p, k) == is_convex_perm(&p.reversed(), k), || format!("reversal: {p} k={k}"))?;
            }
        }
    }
    for k in 0..=2 {
        for n in 3..=8 {
            for p in convex_perms(n, k) {
                check(!has_factor(&p, [2, 1, 3]) && !has_factor(&p, [3, 1, 2]), || format!("213/312 in {p}"))?;
            }
        }
        for n in 5..=8 {
            for p in convex_perms(n, k) {
                check(endpoint_cases(&p) == 1, || format!("endpoint cases of {p}"))?;
            }
        }
    }
    for n in 1..=9 {
        let c = Permutation::all(n).iter().filter(|p| is_slow_riser(p)).count();
        check(c == 1 << (n - 1), || format!("{c} slow risers of length {n}"))?;
    }
    for k in 0..=2 {
        for n in 2..=10 {
            let f = count_perms_bruteforce(n, k);
            check(f % 2 == 0, || format!("f_{k}({n}) = {f} is odd"))?;
        }
    }
    for k in 0..=2 {
        for n in 4..=9 {
            let mut seen: HashMap<CanonicalState, Vec<u64>> = HashMap::new();
            for p in convex_perms(n, k) {
                let s = canonicalize_state(&EndpointState::of(&p).unwrap(), k);
                let d = descendant_counts(&p, k, 4);
                let first = seen.entry(s).or_insert_with(|| d.clone());
                check(*first == d, || format!("{p} descends differently from its class {s}"))?;
            }
        }
    }
    Ok("reversal, 213/312, endpoint dichotomy, slow risers, evenness, canonical soundness".into())
}

fn main() {
    let criteria: [(u32, fn() -> Outcome, u64); 9] = [
        (1, criterion_1, 10),
        (2, criterion_2, 10),
        (3, criterion_3, 20),
        (4, criterion_4, 5),
        (5, criterion_5, 10),
        (6, criterion_6, 10),
        (7, criterion_7, 10),
        (8, criterion_8, 10),
        (9, criterion_9, 60),
    ];
    let mut unexpected = Vec::new();
    for (id, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        match (&outcome, over) {
            (Ok(detail), false) => println!("PASS criterion {id}: {detail} ({elapsed:.2?})"),
            (Ok(detail), true) => println!("FAIL criterion {id}: {detail}, but took {elapsed:.2?} > {budget}s"),
            (Err(e), _) => println!("FAIL criterion {id}: {e} ({elapsed:.2?})"),
        }
        let failed = outcome.is_err() || over;
        match (failed, known) {
            (true, Some((_, why))) => println!("     known red: {why}"),
            (true, None) => unexpected.push(id),
            (false, Some(_)) => println!("     listed as known red but passed"),
            (false, None) => {}
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
