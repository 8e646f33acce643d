//! Acceptance criteria 1-12. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tm_designs::constructions::{
    binom_alternating_sum, binomial_weighted_design, chebyshev_gauss_check, perturbed_interval_design,
    polygon_weighted_design,
};
use tm_designs::interval::{
    certify_symmetry, certify_weighted_symmetry, is_symmetric, is_weighted_symmetric, verify_interval_design,
    verify_weighted_design,
};
use tm_designs::scalar::{int, rat};
use tm_designs::spherical::{
    certify_antipodal, embed, is_antipodal, pad_with_antipodal_pairs_spherical, polygon_on_circle, six_point_search,
    verify_spherical_tm, UnitVector,
};
use tm_designs::symfun::{elementary_symmetric, newton_e_from_p, newton_p_from_e, power_sums};
use tm_designs::{Configuration, Error, FloatSphericalConfig, Rational, WeightedConfiguration};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {{
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    }};
}

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

/// Uniform-ish rational in `[-1, 1]` with denominator at most `max_den`.
fn rand_rat(rng: &mut ChaCha8Rng, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    rat(rng.gen_range(-den..=den), den)
}

fn rand_unit(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.1 && norm <= 1.0 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

fn oracle_binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=50u64 {
        for s in 0..n {
            let got = binom_alternating_sum(n, s).map_err(|e| e.to_string())?;
            let want = if s == 0 {
                -oracle_binomial(2 * n - 1, n - 1)
            } else {
                BigInt::zero()
            };
            ensure!(got == want, "n={n}, s={s}: {got} != {want}");
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("{checked} (n, s) pairs match the closed form"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for n in 1..=40usize {
        let w = binomial_weighted_design(n).map_err(|e| e.to_string())?;
        ensure!(w.len() == n, "n={n}: support size {}", w.len());
        let r = verify_weighted_design(&w, n).map_err(|e| e.to_string())?;
        ensure!(
            r.residuals[..n - 1].iter().all(Zero::is_zero),
            "n={n}: T_{} fails: {:?}",
            n - 1,
            r.first_failure()
        );
        // sharpness at index 2n-1, summed directly
        let top: Rational = w
            .support()
            .iter()
            .zip(w.weights())
            .map(|(x, f)| num_traits::pow(x.clone(), 2 * n - 1) * f)
            .sum();
        ensure!(!top.is_zero(), "n={n}: index {} residual vanishes", 2 * n - 1);
        ensure!(
            r.residuals[n - 1] == top,
            "n={n}: residual {} != direct {top}",
            r.residuals[n - 1]
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok("n = 1..40 exact T_{n-1}, index 2n-1 nonzero".into())
}

fn criterion_3() -> Outcome {
    let precision = rat(1, 10).pow(30);
    let mut worst_float = 0.0f64;
    let mut at_ten = Duration::ZERO;
    for m in 1..=10usize {
        let start = Instant::now();
        let r = perturbed_interval_design(m, None, &precision).map_err(|e| e.to_string())?;
        if m == 10 {
            at_ten = start.elapsed();
        }
        let x = &r.approximate_points;
        ensure!(x.len() == 2 * m + 1, "m={m}: {} points", x.len());
        ensure!(r.exact_certificate.len() == m, "m={m}: certificate length");
        ensure!(
            r.exact_certificate.iter().all(Zero::is_zero),
            "m={m}: certificate {:?}",
            r.exact_certificate
        );
        ensure!(x.contains(&int(1)), "m={m}: 1 missing");
        ensure!(x.iter().all(|v| *v > int(-1)), "m={m}: -1 present");
        let floats: Vec<f64> = x.iter().map(|v| v.to_f64().unwrap()).collect();
        for k in 0..m {
            let r: f64 = floats.iter().map(|v| v.powi(2 * k as i32 + 1)).sum();
            worst_float = worst_float.max(r.abs());
        }
        for res in r.approximation_residuals() {
            ensure!(res.abs() <= &precision * int(10), "m={m}: refined residual {res}");
        }
    }
    ensure!(worst_float <= 1e-10, "float residual {worst_float:e}");
    ensure!(at_ten < Duration::from_secs(60), "m=10 took {at_ten:?}");
    Ok(format!(
        "m = 1..10 certificates exactly 0; worst float residual {worst_float:.1e}; m=10 in {:.2} s",
        at_ten.as_secs_f64()
    ))
}

fn criterion_4() -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=20usize {
        let w = polygon_weighted_design::<f64>(n).map_err(|e| e.to_string())?;
        ensure!(w.len() == n + 1, "n={n}: support size");
        // the construction is T_n; T_{n-1} is the weaker claim
        for k in 1..=n {
            let r: f64 = w
                .support()
                .iter()
                .zip(w.weights())
                .map(|(x, f)| x.powi(2 * k as i32 - 1) * f)
                .sum();
            worst = worst.max(r.abs());
        }
        if n >= 2 {
            ensure!(
                verify_weighted_design(&w, n - 1).unwrap().verdict,
                "n={n}: T_{} verdict",
                n - 1
            );
        }
    }
    ensure!(worst <= 1e-12, "worst residual {worst:e}");
    Ok(format!("n = 1..20, worst residual {worst:.1e}"))
}

fn criterion_5() -> Outcome {
    let mut rng = rng(5);
    for case in 0..500 {
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=2 * m);
        let mut pts = Vec::new();
        for _ in 0..n / 2 {
            let a = rand_rat(&mut rng, 12);
            pts.push(a.clone());
            pts.push(-a);
        }
        if n % 2 == 1 {
            pts.push(int(0));
        }
        pts.shuffle(&mut rng);
        let c = Configuration::new(pts).unwrap();
        let cert = certify_symmetry(&c, m).map_err(|e| format!("symmetric case {case}: {e}"))?;
        ensure!(cert.validates(&c), "case {case}: certificate invalid");
        ensure!(is_symmetric(&c).is_some(), "case {case}: oracle disagrees");
    }
    let mut non_symmetric = 0;
    while non_symmetric < 500 {
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=2 * m);
        let mut pts: Vec<Rational> = if rng.gen_bool(0.5) {
            (0..n).map(|_| rand_rat(&mut rng, 12)).collect()
        } else {
            // symmetric with one point moved
            let mut v = Vec::new();
            for _ in 0..n / 2 {
                let a = rand_rat(&mut rng, 12);
                v.push(a.clone());
                v.push(-a);
            }
            if n % 2 == 1 {
                v.push(int(0));
            }
            let i = rng.gen_range(0..v.len());
            v[i] = rand_rat(&mut rng, 12);
            v
        };
        pts.shuffle(&mut rng);
        let c = Configuration::new(pts).unwrap();
        if is_symmetric(&c).is_some() {
            continue;
        }
        non_symmetric += 1;
        ensure!(
            !verify_interval_design(&c, m).unwrap().verdict,
            "counterexample: {:?} is a T_{m}-design",
            c.points()
        );
        ensure!(
            matches!(certify_symmetry(&c, m), Err(Error::Hypothesis { .. })),
            "certifier accepted non-symmetric {:?}",
            c.points()
        );
    }
    Ok("500 symmetric certified and oracle-validated; 500 non-symmetric all fail T_m".into())
}

fn criterion_6() -> Outcome {
    let mut rng = rng(6);
    let mut certified = 0;
    while certified < 500 {
        let m = rng.gen_range(1..=6);
        let pairs = rng.gen_range(1..=m / 2 + m % 2);
        if 2 * pairs > m {
            continue;
        }
        let (mut support, mut weights) = (Vec::new(), Vec::new());
        for _ in 0..pairs {
            let a = rand_rat(&mut rng, 12).abs();
            if a.is_zero() || support.contains(&a) {
                continue;
            }
            let w = rand_rat(&mut rng, 9);
            if w.is_zero() {
                continue;
            }
            support.extend([a.clone(), -a]);
            weights.extend([w.clone(), w]);
        }
        if support.is_empty() {
            continue;
        }
        if rng.gen_bool(0.3) {
            support.push(int(0));
            weights.push(int(rng.gen_range(1..5)));
        }
        let w = WeightedConfiguration::new(support, weights).unwrap();
        let cert = certify_weighted_symmetry(&w, m).map_err(|e| e.to_string())?;
        ensure!(cert.validates_weighted(&w), "certificate invalid");
        ensure!(is_weighted_symmetric(&w).is_some(), "oracle disagrees");
        certified += 1;
    }
    let mut rejected = 0;
    while rejected < 500 {
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=m);
        let mut support: Vec<Rational> = Vec::new();
        while support.len() < n {
            let a = rand_rat(&mut rng, 12);
            if !a.is_zero() && !support.contains(&a) {
                support.push(a);
            }
        }
        let weights: Vec<Rational> = (0..n)
            .map(|_| loop {
                let w = rand_rat(&mut rng, 9);
                if !w.is_zero() {
                    break w;
                }
            })
            .collect();
        let w = WeightedConfiguration::new(support, weights).unwrap();
        if is_weighted_symmetric(&w).is_some() {
            continue;
        }
        rejected += 1;
        ensure!(
            !verify_weighted_design(&w, m).unwrap().verdict,
            "counterexample {:?}",
            w
        );
    }
    let sharp = WeightedConfiguration::new(vec![rat(2, 3), rat(-1, 3)], vec![int(2), int(4)]).unwrap();
    ensure!(
        verify_weighted_design(&sharp, 1).unwrap().verdict,
        "sharpness: T_1 fails"
    );
    let r = verify_weighted_design(&sharp, 2).unwrap();
    ensure!(
        !r.verdict && r.residuals[1] == rat(12, 27),
        "sharpness residual {}",
        r.residuals[1]
    );
    Ok("500 symmetric certified, 500 non-symmetric fail T_m, sharpness residual exactly 12/27".into())
}

fn criterion_7() -> Outcome {
    let mut rng = rng(7);
    for case in 0..100 {
        let d = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=m);
        let mut pts = Vec::new();
        for _ in 0..k {
            let v = rand_unit(&mut rng, d);
            pts.push(v.iter().map(|c| -c).collect::<Vec<f64>>());
            pts.push(v);
        }
        pts.shuffle(&mut rng);
        let x = FloatSphericalConfig::new(pts).unwrap();
        let cert = certify_antipodal(&x, m).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(cert.pairs.len() == k, "case {case}: {} pairs", cert.pairs.len());
        for &[i, j] in &cert.pairs {
            let (a, b) = (x.points()[i].coords(), x.points()[j].coords());
            ensure!(
                a.iter().zip(b).all(|(p, q)| (p + q).abs() <= 1e-12),
                "case {case}: {i}, {j} not negatives"
            );
        }
    }
    let pentagon = polygon_on_circle(2, 0.0).unwrap();
    ensure!(
        verify_spherical_tm(&pentagon, 2).unwrap().verdict,
        "pentagon is not T_2"
    );
    match certify_antipodal(&pentagon, 2) {
        Err(Error::Precondition(msg)) => ensure!(msg == "n=5 exceeds 2m=4", "message {msg:?}"),
        other => return Err(format!("pentagon not rejected on size: {other:?}")),
    }
    ensure!(is_antipodal(&pentagon).is_none(), "pentagon reported antipodal");
    Ok("100 random antipodal sets paired; pentagon is T_2, rejected at n=5 > 4, not antipodal".into())
}

fn criterion_8() -> Outcome {
    let mut rng = rng(8);
    let (mut designs, mut non_designs) = (0, 0);
    for case in 0..200 {
        let d = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=3);
        let pts: Vec<Vec<f64>> = match case % 4 {
            0 => (0..rng.gen_range(1..=8)).map(|_| rand_unit(&mut rng, d)).collect(),
            1 => {
                let mut v = Vec::new();
                for _ in 0..rng.gen_range(1..=4) {
                    let u = rand_unit(&mut rng, d);
                    v.push(u.iter().map(|c| -c).collect());
                    v.push(u);
                }
                v
            }
            2 => {
                // regular polygon in a random plane
                let q = rng.gen_range(1..=3) * 2 + 1;
                let poly = polygon_on_circle((q - 1) / 2, rng.gen_range(0.0..1.0)).unwrap();
                let (u, w) = orthonormal_pair(&mut rng, d);
                poly.points()
                    .iter()
                    .map(|p| (0..d).map(|i| p.coords()[0] * u[i] + p.coords()[1] * w[i]).collect())
                    .collect()
            }
            _ => {
                let mut v: Vec<Vec<f64>> = (0..rng.gen_range(1..=3)).map(|_| rand_unit(&mut rng, d)).collect();
                let extra: Vec<Vec<f64>> = v.iter().map(|u| u.iter().map(|c| -c).collect()).collect();
                v.extend(extra);
                v.push(rand_unit(&mut rng, d));
                v
            }
        };
        let x = FloatSphericalConfig::new(pts).unwrap();
        let r = verify_spherical_tm(&x, m).unwrap();
        ensure!(
            r.gegenbauer_verdict == r.moment_verdict,
            "case {case}: pair sums {} vs moments {}",
            r.gegenbauer_verdict,
            r.moment_verdict
        );
        if r.verdict {
            designs += 1;
        } else {
            non_designs += 1;
        }
    }
    Ok(format!(
        "200 configurations agree ({designs} designs, {non_designs} non-designs)"
    ))
}

fn orthonormal_pair(rng: &mut ChaCha8Rng, d: usize) -> (Vec<f64>, Vec<f64>) {
    let u = rand_unit(rng, d);
    loop {
        let v = rand_unit(rng, d);
        let dot: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
        let w: Vec<f64> = v.iter().zip(&u).map(|(b, a)| b - dot * a).collect();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.1 {
            return (u, w.into_iter().map(|x| x / norm).collect());
        }
    }
}

fn criterion_9() -> Outcome {
    let pentagon = polygon_on_circle(2, 0.0).unwrap();
    for d in 3..=5 {
        let e = embed(&pentagon, d).unwrap();
        ensure!(verify_spherical_tm(&e, 2).unwrap().verdict, "embedded d={d} fails T_2");
    }
    let v = UnitVector::new(vec![0.0, 1.0], 0.0).unwrap();
    let seven = pad_with_antipodal_pairs_spherical(&pentagon, &[v]).unwrap();
    ensure!(seven.len() == 7, "size {}", seven.len());
    ensure!(verify_spherical_tm(&seven, 2).unwrap().verdict, "7 points fail T_2");
    ensure!(is_antipodal(&seven).is_none(), "7 points antipodal");
    Ok("pentagon T_2 in d = 3, 4, 5; 7-point padding T_2 and non-antipodal".into())
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let r = six_point_search(200, 7, 0.1).map_err(|e| e.to_string())?;
    let again = six_point_search(200, 7, 0.1).map_err(|e| e.to_string())?;
    let zero = six_point_search(200, 7, 0.0).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let best = r.best_residual().ok_or("no feasible trial")?;
    ensure!(r.designs_found == 0, "{} constrained designs found", r.designs_found);
    ensure!(best >= r.tolerance, "constrained residual {best:e}");
    let a = serde_json::to_string(&r).unwrap();
    let b = serde_json::to_string(&again).unwrap();
    ensure!(a == b, "report not byte-deterministic");
    let best_zero = zero.best.as_ref().ok_or("no trial at margin 0")?;
    ensure!(
        best_zero.residual < zero.tolerance,
        "margin 0 residual {:e}",
        best_zero.residual
    );
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!(
        "margin 0.1: best residual {best:.4e} over {} feasible trials; margin 0: {:.1e} at antipodal distance {:.1e}; {:.2} s",
        r.feasible_trials,
        best_zero.residual,
        best_zero.antipodal_distance,
        elapsed.as_secs_f64()
    ))
}

fn expand_e(x: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for v in x {
        e.push(Rational::zero());
        for k in (1..e.len()).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * v;
        }
    }
    e
}

fn criterion_11() -> Outcome {
    let mut rng = rng(11);
    for case in 0..1000 {
        let n = rng.gen_range(1..=12);
        let x: Vec<Rational> = (0..n).map(|_| rand_rat(&mut rng, 20)).collect();
        let big_k = 2 * n + 2;
        let p = power_sums(&x, big_k).unwrap();
        let direct_p: Vec<Rational> = (1..=big_k)
            .map(|k| x.iter().map(|v| num_traits::pow(v.clone(), k)).sum())
            .collect();
        ensure!(p.entries() == direct_p.as_slice(), "case {case}: power sums");
        let e = newton_e_from_p(&p, n).unwrap();
        let oracle = expand_e(&x);
        ensure!(e.entries() == oracle.as_slice(), "case {case}: e from p");
        ensure!(
            elementary_symmetric(&x, n).unwrap().entries() == oracle.as_slice(),
            "case {case}: e direct"
        );
        let back = newton_p_from_e(&e, n, big_k).unwrap();
        ensure!(back.entries() == direct_p.as_slice(), "case {case}: p from e");
    }
    Ok("1000 exact p -> e -> p round trips, n <= 12".into())
}

fn criterion_12() -> Outcome {
    for n in 1..=10usize {
        let r = chebyshev_gauss_check(n, 2 * n - 1).map_err(|e| e.to_string())?;
        for c in &r.checks {
            if c.s % 2 == 1 {
                ensure!(c.mean == 0.0, "n={n}, s={}: mean {:e}", c.s, c.mean);
            } else {
                let j = c.s / 2;
                let moment = (0..j).fold(1.0, |acc, i| acc * (2 * i + 1) as f64 / (2 * i + 2) as f64);
                ensure!(
                    (c.mean - moment).abs() <= 1e-12,
                    "n={n}, s={}: {} vs {moment}",
                    c.s,
                    c.mean
                );
            }
        }
    }
    let r = chebyshev_gauss_check(2, 3).unwrap();
    ensure!(r.printed_formula.fails, "printed formula not flagged");
    ensure!(
        (r.printed_formula.mean + 0.5).abs() < 1e-15,
        "printed mean {}",
        r.printed_formula.mean
    );
    Ok(format!(
        "n = 1..10 exact odd, even within 1e-12; cos(2k pi/(2n-1)) at n=2, s=1 gives {}",
        r.printed_formula.mean
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("binomial alternating sum identity", criterion_1),
        ("binomial weighted designs", criterion_2),
        ("perturbed interval design", criterion_3),
        ("polygon cosine weighted designs", criterion_4),
        ("multiset symmetry suite", criterion_5),
        ("weighted symmetry suite", criterion_6),
        ("antipodality certification", criterion_7),
        ("pair-sum vs moment cross-check", criterion_8),
        ("embedding and padding", criterion_9),
        ("six-point search", criterion_10),
        ("Newton round trips", criterion_11),
        ("Chebyshev-Gauss moments", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2} s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2} s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
