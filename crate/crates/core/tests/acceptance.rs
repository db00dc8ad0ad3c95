//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use ci_invariants::ci_topology::{
    chi22, chi22_closed_form, chi22_sum, euler_characteristic, hypersurface_middle_betti,
    middle_betti, poincare_polynomial, value_at_i, verify_expansion_identity, CIType,
    InvariantReport,
};
use ci_invariants::classification::{
    enumerate_types, homogeneous_parity_report, scan_lemma, scan_theorem_with, theorem_verdict,
    ScanOptions,
};
use ci_invariants::exact_arith::series_coefficient;
use ci_invariants::lines_fibers::fiber_type;
use ci_invariants::{GaussianInteger, IntPolynomial, Integer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ci(n: u32, d: &[u32]) -> CIType {
    CIType::new(n, d.to_vec()).unwrap()
}

fn int(v: i64) -> Integer {
    Integer::from(v)
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn within(elapsed: Duration, limit_secs: u64) -> Check {
    ensure!(
        elapsed <= Duration::from_secs(limit_secs),
        "took {:.2?}, limit {limit_secs}s",
        elapsed
    );
    Ok(String::new())
}

fn c1_hypersurface_closed_form() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for e in 1..=10u32 {
        for k in 0..=40u32 {
            let closed = hypersurface_middle_betti(e, k).map_err(|e| e.to_string())?;
            let chi = series_coefficient(&[e], k as usize + 1);
            let via_chi = if k % 2 == 1 {
                Integer::from(k + 1) - chi
            } else {
                chi - Integer::from(k)
            };
            ensure!(closed == via_chi, "e={e} k={k}: {closed} vs {via_chi}");
            checked += 1;
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!(
        "{checked} (e,k) pairs equal in {:.2?}",
        start.elapsed()
    ))
}

fn c2_classical_anchors() -> Check {
    // oracle values first, then the library
    let cubic_surface = ci(3, &[3]);
    ensure!(
        common::brute_force_euler(&[3], 3) == int(9),
        "oracle chi(cubic surface)"
    );
    ensure!(
        euler_characteristic(&cubic_surface) == int(9),
        "chi(cubic surface)"
    );
    ensure!(middle_betti(&cubic_surface) == int(7), "b2(cubic surface)");
    ensure!(
        common::brute_force_middle_betti(&[3], 3) == int(7),
        "oracle b2"
    );

    let quadric_surface = ci(3, &[2]);
    ensure!(
        common::brute_force_middle_betti(&[2], 3) == int(2),
        "oracle b2(quadric)"
    );
    ensure!(
        middle_betti(&quadric_surface) == int(2),
        "b2(quadric surface)"
    );
    ensure!(
        value_at_i(&quadric_surface).is_zero(),
        "p(i) quadric surface"
    );

    let quadric_fourfold = ci(5, &[2]);
    ensure!(
        value_at_i(&quadric_fourfold) == GaussianInteger::from_real(2),
        "p(i) quadric fourfold = {}",
        value_at_i(&quadric_fourfold)
    );

    let quintic = ci(4, &[5]);
    ensure!(
        common::brute_force_middle_betti(&[5], 4) == int(204),
        "oracle b3(quintic)"
    );
    ensure!(middle_betti(&quintic) == int(204), "b3(quintic)");
    ensure!(
        hypersurface_middle_betti(5, 3).unwrap() == int(204),
        "closed form at e=5,k=3"
    );

    let cubic_threefold = ci(4, &[3]);
    ensure!(
        common::brute_force_middle_betti(&[3], 4) == int(10),
        "oracle b3(cubic 3fold)"
    );
    ensure!(
        middle_betti(&cubic_threefold) == int(10),
        "b3(cubic threefold)"
    );
    let fiber = fiber_type(&cubic_threefold).map_err(|e| e.to_string())?;
    ensure!(
        fiber == ci(3, &[1, 2, 3]) && fiber.dimension() == 0,
        "fiber type {fiber}"
    );
    ensure!(
        common::brute_force_euler(&[1, 2, 3], 3) == int(6),
        "oracle fiber points"
    );
    ensure!(
        poincare_polynomial(&fiber) == IntPolynomial::constant(6),
        "fiber is 6 points"
    );
    Ok("cubic surface 9/7, quadric surface 2, quadric 4fold p(i)=2, quintic 204, cubic 3fold 10 with 6-point fiber".into())
}

fn c3_chi22() -> Check {
    let start = Instant::now();
    for k in 0..=200u32 {
        let sum = chi22_sum(k);
        ensure!(sum == chi22_closed_form(k), "k={k}: sum {sum}");
        chi22(k).map_err(|e| e.to_string())?;
    }
    ensure!(chi22(0).unwrap() == int(4), "chi22(0)");
    ensure!(chi22(1).unwrap() == int(0), "chi22(1)");
    ensure!(chi22(2).unwrap() == int(8), "chi22(2)");
    let elapsed = start.elapsed();
    // independent oracle on a prefix
    for k in 0..=20u32 {
        ensure!(
            chi22_sum(k) == common::brute_force_euler(&[2, 2], k + 2),
            "oracle mismatch at k={k}"
        );
    }
    within(elapsed, 1)?;
    Ok(format!("0 <= k <= 200 in {elapsed:.2?}"))
}

fn c4_expansion_identity() -> Check {
    let start = Instant::now();
    for k in 0..=100 {
        ensure!(verify_expansion_identity(k), "identity fails at k={k}");
    }
    within(start.elapsed(), 2)?;
    Ok(format!("0 <= k <= 100 in {:.2?}", start.elapsed()))
}

fn c5_lemma_scan() -> Check {
    let start = Instant::now();
    let report = scan_lemma(14, 6).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(
        report.is_clean(),
        "{} violations, first: {}",
        report.violations.len(),
        report.violations[0]
    );
    let mut vanishing = 0;
    for r in &report.records {
        let k = r.dimension;
        let shape =
            (r.ci.is_linear() && k % 2 == 1) || (r.ci.is_quadric() && (k % 2 == 1 || k % 4 == 2));
        ensure!(r.x_at_i.is_zero() == shape, "{}: p(i) = {}", r.ci, r.x_at_i);
        ensure!(
            (r.outcome != "NonVanishing") == shape,
            "{}: case {}",
            r.ci,
            r.outcome
        );
        vanishing += usize::from(shape);
    }
    for k in 0..=12u32 {
        let t = ci(k + 2, &[2, 2]);
        ensure!(!value_at_i(&t).is_zero(), "(2,2) vanishes at k={k}");
        let expected = if k % 2 == 1 { k + 1 } else { k + 4 };
        ensure!(
            middle_betti(&t) == Integer::from(expected),
            "(2,2) Betti at k={k}"
        );
    }
    within(elapsed, 60)?;
    Ok(format!(
        "{} types, {vanishing} vanish, all on case shapes, in {elapsed:.2?}",
        report.records.len()
    ))
}

fn c6_theorem_scan() -> Check {
    let start = Instant::now();
    let report = scan_theorem_with(14, 6, &ScanOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(
        report.is_clean(),
        "{} violations, first: {}",
        report.violations.len(),
        report.violations[0]
    );
    let mut rc = 0;
    let mut passing = 0;
    for r in &report.records {
        ensure!(r.outcome != "Error", "{}: pipeline error", r.ci);
        if r.total_degree <= r.ci.ambient_dim() as u64 {
            rc += 1;
            let passes = r.outcome.starts_with("Homogeneous");
            ensure!(
                passes == (r.ci.is_linear() || r.ci.is_quadric()),
                "{}: {}",
                r.ci,
                r.outcome
            );
            passing += usize::from(passes);
        }
    }
    within(elapsed, 60)?;
    Ok(format!(
        "{} types, {rc} rationally connected, {passing} pass (all homogeneous), in {elapsed:.2?}",
        report.records.len()
    ))
}

fn c7_parity() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=30u32 {
        for l in 0..n {
            let t = ci(n, &vec![1; l as usize]);
            let p = homogeneous_parity_report(&t).map_err(|e| e.to_string())?;
            ensure!(p.x_vanishes != p.f_vanishes, "{t}: {p:?}");
            checked += 1;
        }
        for l in 1..n.saturating_sub(1) {
            let mut d = vec![1; l as usize - 1];
            d.push(2);
            let t = ci(n, &d);
            let p = homogeneous_parity_report(&t).map_err(|e| e.to_string())?;
            let both = p.x_vanishes && p.f_vanishes;
            ensure!(both == ((n - l) % 2 == 1), "{t}: {p:?}");
            if !both {
                ensure!(p.x_vanishes != p.f_vanishes, "{t}: neither vanishes");
            }
            checked += 1;
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!(
        "{checked} homogeneous types in {:.2?}",
        start.elapsed()
    ))
}

fn c8_properties() -> Check {
    let q = IntPolynomial::one_plus_t_squared();
    let types = enumerate_types(14, 6);
    for t in &types {
        let p = poincare_polynomial(t);
        ensure!(
            p.is_divisible_by(&q).unwrap() == p.eval_at_i().is_zero(),
            "divisibility vs evaluation for {t}"
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1_2_3);
    for _ in 0..10_000 {
        let len = rng.gen_range(0..16);
        let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-20..=20)).collect();
        let mut p = IntPolynomial::from_i64s(&coeffs);
        if rng.gen_bool(0.3) {
            p = &p * &q;
        }
        ensure!(
            p.is_divisible_by(&q).unwrap() == p.eval_at_i().is_zero(),
            "divisibility vs evaluation for {p}"
        );
    }

    let mut reports = 0;
    for t in enumerate_types(10, 5) {
        let r = InvariantReport::compute(&t);
        ensure!(
            r.poincare.eval(&int(-1)) == r.euler_char,
            "p(-1) != chi for {t}"
        );
        let k = r.dimension_k;
        let lefschetz = if k.is_multiple_of(2) { k } else { k + 1 };
        ensure!(
            r.betti_sum() == Integer::from(lefschetz) + &r.middle_betti,
            "p(1) != Betti sum for {t}"
        );

        if let Some(pos) = t.degrees().iter().position(|&d| d == 1) {
            let mut rest = t.degrees().to_vec();
            rest.remove(pos);
            let smaller = InvariantReport::compute(&ci(t.ambient_dim() - 1, &rest));
            ensure!(
                smaller.euler_char == r.euler_char
                    && smaller.middle_betti == r.middle_betti
                    && smaller.poincare == r.poincare,
                "degree-1 reduction changes invariants of {t}"
            );
        }

        let mut reversed = t.degrees().to_vec();
        reversed.reverse();
        let rotated: Vec<u32> = if reversed.is_empty() {
            reversed.clone()
        } else {
            let mut v = reversed.clone();
            v.rotate_left(1);
            v
        };
        for perm in [reversed, rotated] {
            let u = ci(t.ambient_dim(), &perm);
            ensure!(
                InvariantReport::compute(&u) == r,
                "permutation changes report of {t}"
            );
            ensure!(
                theorem_verdict(&u) == theorem_verdict(&t),
                "permutation changes verdict of {t}"
            );
        }
        reports += 1;
    }
    Ok(format!(
        "{} scan polynomials + 10000 random; {reports} reports checked for reduction, permutation, p(-1), p(1)",
        types.len()
    ))
}

fn c9_monotonicity() -> Check {
    ensure!(
        common::brute_force_middle_betti(&[2], 3) == int(2),
        "oracle (2)"
    );
    ensure!(
        common::brute_force_middle_betti(&[3], 3) == int(7),
        "oracle (3)"
    );
    ensure!(
        common::brute_force_middle_betti(&[4], 3) == int(22),
        "oracle (4)"
    );
    ensure!(middle_betti(&ci(3, &[2])) == int(2), "(2) in P^3");
    ensure!(middle_betti(&ci(3, &[3])) == int(7), "(3) in P^3");
    ensure!(middle_betti(&ci(3, &[4])) == int(22), "(4) in P^3");
    let mut pairs = 0;
    for t in enumerate_types(10, 6) {
        let b = middle_betti(&t);
        for i in 0..t.codimension() {
            if t.degrees()[i] == 6 {
                continue;
            }
            let mut raised = t.degrees().to_vec();
            raised[i] += 1;
            let u = ci(t.ambient_dim(), &raised);
            ensure!(middle_betti(&u) >= b, "b_k drops from {t} to {u}");
            pairs += 1;
        }
    }
    Ok(format!("{pairs} raised-degree pairs, zero decreases"))
}

fn c10_determinism() -> Check {
    let max_threads = std::thread::available_parallelism()
        .map_or(8, |n| n.get())
        .max(2);
    let first = scan_theorem_with(
        14,
        6,
        &ScanOptions {
            threads: Some(max_threads),
        },
    )
    .map_err(|e| e.to_string())?
    .to_lines();
    let second = scan_theorem_with(
        14,
        6,
        &ScanOptions {
            threads: Some(max_threads),
        },
    )
    .map_err(|e| e.to_string())?
    .to_lines();
    let serial = scan_theorem_with(14, 6, &ScanOptions { threads: Some(1) })
        .map_err(|e| e.to_string())?
        .to_lines();
    ensure!(first == second, "two parallel runs differ");
    ensure!(first == serial, "parallel and serial runs differ");
    Ok(format!(
        "{} bytes identical across two {max_threads}-thread runs and a serial run",
        first.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "1 hypersurface closed form vs Euler-characteristic route",
            c1_hypersurface_closed_form,
        ),
        ("2 classical anchors", c2_classical_anchors),
        ("3 (2,2) Euler characteristic identity", c3_chi22),
        ("4 (t-1) expansion identity", c4_expansion_identity),
        ("5 lemma reproduction scan", c5_lemma_scan),
        ("6 theorem reproduction scan", c6_theorem_scan),
        ("7 homogeneous parity", c7_parity),
        ("8 property suites", c8_properties),
        ("9 monotonicity spot-check", c9_monotonicity),
        ("10 determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
