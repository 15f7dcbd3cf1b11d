use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use quintic_core::critical::{self, CriticalKind, StrategyRegistry};
use quintic_core::invariants::{genus_binomial_sum, genus_closed_form, genus_count, hypersurface_pg};
use quintic_core::lattice::{centroid, enumerate_monomials, monomial_dominates, zero_set};
use quintic_core::luna::{boundary_dim, boundary_report, kirwan_fiber};
use quintic_core::poly::cover::{cover_discriminant, triple_cover_form, weighted_support, PLANE_VARS};
use quintic_core::poly::{exponents_of_degree, parse, random_form, SparsePolynomial};
use quintic_core::sl2::{decompose_weights, slice_report, tensor, SL2Rep};
use quintic_core::stability::{hull_membership, nonstable_certificate, torus_verdict, TorusVerdict};
use quintic_core::{MonomialConfiguration, OneParamSubgroup, Permutation, Rational, WeightMultiset};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const X: [&str; 4] = ["x0", "x1", "x2", "x3"];

fn lam(w: [i64; 4]) -> OneParamSubgroup {
    OneParamSubgroup(w)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn support(text: &str) -> MonomialConfiguration {
    parse(text, &X).expect("valid polynomial").support().expect("homogeneous")
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn critical_table() -> Check {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(["critical", "--degree", "5", "--json"])
        .env_remove("QUINTIC_FORMAT")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let got: Vec<[i64; 4]> = v["records"]
        .as_array()
        .ok_or("no records")?
        .iter()
        .map(|r| serde_json::from_value(r["lambda"].clone()).unwrap())
        .collect();
    let expected = [
        [1, 0, 0, -1],
        [2, 1, -1, -2],
        [4, 2, -1, -5],
        [2, 1, 0, -3],
        [3, 0, -1, -2],
        [5, 1, -2, -4],
        [2, 1, 1, -4],
        [2, 2, -1, -3],
        [7, 1, -4, -4],
        [8, -1, -2, -5],
    ];
    ensure(got == expected, || format!("got {got:?}"))?;
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:.2?}"))?;
    Ok(format!("10 subgroups, exact match, {elapsed:.2?}"))
}

fn completeness() -> Check {
    let records = critical::enumerate_critical(5).map_err(|e| e.to_string())?;
    let strategies = StrategyRegistry::default();
    let mut notes = Vec::new();
    for (name, budget, threads) in [("sequential", 600, Some(1)), ("parallel", 120, None)] {
        let strategy = strategies.get(name).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let run = || critical::verify_completeness(&records, 375, strategy, &|_| {});
        let rep = match threads {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| e.to_string())?
                .install(run),
            None => run(),
        }
        .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(rep.violations.is_empty(), || format!("{name}: violations {:?}", rep.violations))?;
        ensure(elapsed < Duration::from_secs(budget), || format!("{name} took {elapsed:.2?}"))?;
        notes.push(format!("{name} {elapsed:.2?} ({} scanned)", rep.scanned));
    }
    notes.push(format!("{} threads available", rayon::current_num_threads()));
    Ok(format!("bound 375, 0 violations; {}", notes.join(", ")))
}

fn boundary_classification() -> Check {
    let records = critical::enumerate_critical(5).map_err(|e| e.to_string())?;
    let kinds: Vec<CriticalKind> = records.iter().map(|r| r.kind).collect();
    let mut expected = vec![CriticalKind::MinimalOrbitBoundary; 6];
    expected.extend([CriticalKind::UnstableCone; 4]);
    ensure(kinds == expected, || format!("{kinds:?}"))?;
    Ok("λ1–λ6 MinimalOrbitBoundary, λ7–λ10 UnstableCone".into())
}

fn minimal_orbit_supports() -> Check {
    let cases: [([i64; 4], &str, usize); 3] = [
        ([2, 1, -1, -2], "x3^2*x0*x1^2 + x3*x0^2*x2^2 + x3*x2*x1^3 + x0*x1*x2^3", 4),
        ([4, 2, -1, -5], "x3^2*x0^2*x1 + x3*x1^3*x2 + x0*x2^4", 3),
        ([2, 1, 0, -3], "x0^3*x3^2 + x3*x2*x1^3 + x0*x1*x2^2*x3 + x2^5", 4),
    ];
    for (w, text, n) in cases {
        let z = zero_set(&lam(w), 5).map_err(|e| e.to_string())?;
        ensure(z == support(text) && z.len() == n, || format!("{w:?}: {:?}", z.to_vec()))?;
    }
    Ok("zero sets of λ2, λ3, λ4 have 4, 3, 4 monomials as published".into())
}

fn kirwan_fibers() -> Check {
    let ms = |pairs: &[(i64, usize)]| -> WeightMultiset { pairs.iter().copied().collect() };
    let w2 = ms(&[(10, 1), (9, 1), (8, 1), (7, 2), (6, 3), (5, 3), (4, 2), (3, 2), (2, 3), (1, 2)]);
    let w3a: WeightMultiset = vec![25, 21, 18, 17, 16, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1].into();
    let w3b = ms(&[
        (1, 2),
        (2, 1),
        (3, 1),
        (4, 1),
        (5, 1),
        (6, 2),
        (7, 1),
        (8, 1),
        (9, 1),
        (10, 2),
        (11, 2),
        (12, 1),
        (13, 1),
        (14, 1),
        (15, 1),
        (16, 1),
        (18, 1),
        (20, 1),
    ]);
    let w4a = ms(&[(15, 1), (12, 1), (11, 1), (10, 1), (9, 1), (8, 1), (7, 2), (6, 2), (5, 1), (4, 1), (3, 2), (2, 2), (1, 1)]);
    let w4b = ms(&[(1, 2), (2, 3), (3, 3), (4, 3), (5, 3), (6, 3), (7, 2), (8, 2), (9, 1), (10, 1)]);
    let cases = [([2, 1, -1, -2], w2.clone(), w2, 1), ([4, 2, -1, -5], w3a, w3b, 0), ([2, 1, 0, -3], w4a, w4b, 1)];
    let mut sizes = Vec::new();
    for (w, pos, neg, zero) in cases {
        let f = kirwan_fiber(&lam(w), 5).map_err(|e| e.to_string())?;
        ensure(f.pos == pos && f.neg == neg && f.zero_count == zero, || format!("{w:?}: {} | {} | {}", f.pos, f.neg, f.zero_count))?;
        let total = f.pos.len() + f.neg.len() + f.zero_count;
        ensure(total == 41, || format!("{w:?}: total {total}"))?;
        sizes.push(format!("{}+{}+{}", f.pos.len(), f.neg.len(), f.zero_count));
    }
    Ok(format!("exact multisets, sizes {}", sizes.join(", ")))
}

fn boundary_dimensions() -> Check {
    for (w, dim) in [([2, 1, -1, -2], 1), ([4, 2, -1, -5], 0), ([2, 1, 0, -3], 1)] {
        for seed in [1, 2, 3] {
            let d = boundary_dim(&lam(w), 5, seed).map_err(|e| e.to_string())?;
            ensure(d.dim_estimate == dim, || format!("{w:?} seed {seed}: {}", d.dim_estimate))?;
        }
    }
    let r = boundary_report(&lam([1, 0, 0, -1]), 5, 1).map_err(|e| e.to_string())?;
    ensure(r.reference_dim == Some(6) && r.dim_mismatch, || format!("λ1 report {:?} {}", r.reference_dim, r.dim_mismatch))?;
    Ok(format!("λ2, λ3, λ4 → 1, 0, 1 over seeds 1..3; λ1 estimate {} flagged against reference 6", r.dim_estimate))
}

fn sl2_slice() -> Check {
    let r = slice_report().map_err(|e| e.to_string())?;
    let quintic = SL2Rep::from_pairs([(10, 1), (8, 1), (6, 2), (4, 2), (2, 3), (0, 3)]);
    let adjoint = SL2Rep::from_pairs([(4, 1), (2, 3), (0, 1)]);
    let normal = tensor(&SL2Rep::irreducible(5), &SL2Rep::irreducible(5)).direct_sum(&SL2Rep::irreducible(6));
    ensure(r.quintic_forms == quintic && quintic.dimension() == 56, || r.quintic_forms.to_string())?;
    ensure(r.adjoint == adjoint && adjoint.dimension() == 15, || r.adjoint.to_string())?;
    ensure(r.normal == normal && normal.dimension() == 43, || r.normal.to_string())?;
    ensure(r.torus_check, || "torus character disagrees".into())?;
    Ok(format!("normal = {} (dim 43)", r.normal))
}

fn spot_checks() -> Check {
    let critical = critical::enumerate_critical(5).map_err(|e| e.to_string())?;
    let fermat = support("x0^5 + x1^5 + x2^5 + x3^5");
    ensure(torus_verdict(&fermat).map_err(|e| e.to_string())? == TorusVerdict::Stable, || "Fermat not stable".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let quartic: Vec<Vec<u32>> = exponents_of_degree(3, 4).into_iter().map(|e| vec![e[0], e[1], e[2], 1]).collect();
    let quintic: Vec<Vec<u32>> = exponents_of_degree(3, 5).into_iter().map(|e| vec![e[0], e[1], e[2], 0]).collect();
    let q4 = (&random_form(&X, &quartic, &mut rng) + &random_form(&X, &quintic, &mut rng)).support().unwrap();
    let cert = nonstable_certificate(&q4, &critical).map_err(|e| e.to_string())?.ok_or("no certificate")?;
    ensure(cert.lambda == lam([2, 1, 1, -4]), || format!("certificate uses {}", cert.lambda))?;

    let qh = support("x1*(x0*x3 - x2^2 - x1^2)^2");
    for perm in Permutation::all() {
        let v = torus_verdict(&qh.permuted(&perm)).map_err(|e| e.to_string())?;
        ensure(v == TorusVerdict::StrictlySemistable, || format!("{perm:?}: {v:?}"))?;
    }

    let binary = |d: u32, rng: &mut ChaCha8Rng| {
        let s: Vec<Vec<u32>> = exponents_of_degree(2, d).into_iter().map(|e| vec![0, e[0], e[1], 0]).collect();
        random_form(&X, &s, rng)
    };
    let (f2, f4) = (binary(2, &mut rng), binary(4, &mut rng));
    let x = |i| SparsePolynomial::var(&X, i);
    let inner = &(&parse("x3^2*x0^2", &X).unwrap() + &(&(&x(0) * &x(3)) * &f2)) + &f4;
    let surfaces = [
        (lam([1, 0, 0, -1]), &x(1) * &inner),
        (lam([2, 1, -1, -2]), parse("x0*(x3^2*x1^2 + x3*x0*x2^2 + x1*x2^3)", &X).unwrap()),
        (lam([2, 1, 0, -3]), parse("x3*(x0^3*x3 + x2*x1^3 + x0*x1*x2^2)", &X).unwrap()),
    ];
    for (l, f) in surfaces {
        let cfg = f.support().map_err(|e| e.to_string())?;
        ensure(cfg.iter().all(|m| l.pairing(m) == 0), || format!("{l}: nonzero weight in {f}"))?;
    }
    Ok("Fermat stable; quadruple point → λ7; 2Q+H semistable in all 24 frames; reducible surfaces fixed".into())
}

fn genus_values() -> Check {
    let start = Instant::now();
    let small: Vec<u64> = (4..=6).map(|d| genus_count(d).unwrap()).collect();
    ensure(small == [1, 3, 7], || format!("{small:?}"))?;
    for d in 4..=20 {
        let g = genus_count(d).map_err(|e| e.to_string())?;
        ensure(g == genus_closed_form(d).unwrap() && g == genus_binomial_sum(d).unwrap(), || format!("d = {d}"))?;
    }
    ensure(hypersurface_pg(5).unwrap() == 4, || "pg(5) ≠ 4".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:.2?}"))?;
    Ok(format!("1, 3, 7 for d = 4, 5, 6; agreement for d ≤ 20; pg(5) = 4; {elapsed:.2?}"))
}

fn cover_algebra() -> Check {
    let vars = ["x0", "x1", "x2", "psi"];
    let plane = |d: u32, rng: &mut ChaCha8Rng| random_form(&PLANE_VARS, &exponents_of_degree(3, d), rng);
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g2, f4, f5) = (plane(2, &mut rng), plane(4, &mut rng), plane(5, &mut rng));
        let (h4, h6) = triple_cover_form(&g2, &f4, &f5).map_err(|e| e.to_string())?;
        let e = |p: &SparsePolynomial| p.embed(&vars).unwrap();
        let psi = SparsePolynomial::var(&vars, 3);
        let phi = &psi - &e(&g2).scale(&q(1, 3));
        let lhs = &(&(&phi.pow(3) + &(&e(&g2) * &phi.pow(2))) + &(&e(&f4) * &phi))
            + &(&SparsePolynomial::var(&vars, 0) * &e(&f5));
        let rhs = &(&psi.pow(3) + &(&e(&h4) * &psi)) + &e(&h6);
        ensure(lhs == rhs, || format!("depression fails for seed {seed}"))?;
    }
    let s4: Vec<Vec<u32>> = weighted_support([5, 2, 1], 10, 4).into_iter().map(|e| e.to_vec()).collect();
    let s6: Vec<Vec<u32>> = weighted_support([5, 2, 1], 15, 6).into_iter().map(|e| e.to_vec()).collect();
    for seed in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let disc = cover_discriminant(&random_form(&PLANE_VARS, &s4, &mut rng), &random_form(&PLANE_VARS, &s6, &mut rng))
            .map_err(|e| e.to_string())?;
        let min_x0 = disc.terms().map(|(e, _)| e[0]).min().ok_or("zero discriminant")?;
        ensure(min_x0 == 2, || format!("seed {seed}: x0-order {min_x0}"))?;
    }
    Ok("depression identity for 100 seeds; x0² exactly divides the discriminant".into())
}

fn property_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0usize;

    let normalized: Vec<OneParamSubgroup> = {
        let mut v = Vec::new();
        for a in -12i64..=12 {
            for b in -12..=a {
                for c in -12..=b {
                    let d = -(a + b + c);
                    if d <= c && d >= -12 && (a, b, c) != (0, 0, 0) {
                        v.push(lam([a, b, c, d]));
                    }
                }
            }
        }
        v
    };
    for d in 1..=8 {
        let ms = enumerate_monomials(d).unwrap();
        for _ in 0..200 {
            let (m, m2) = (ms[rng.gen_range(0..ms.len())], ms[rng.gen_range(0..ms.len())]);
            let sampled = normalized.iter().all(|l| l.pairing(&m) >= l.pairing(&m2));
            ensure(monomial_dominates(&m, &m2).unwrap() == sampled, || format!("dominance {m} vs {m2}"))?;
            checked += 1;
        }
    }

    for _ in 0..300 {
        let d = rng.gen_range(2..=6);
        let ms = enumerate_monomials(d).unwrap();
        let k = rng.gen_range(1..=10);
        let cfg = MonomialConfiguration::new(d, (0..k).map(|_| ms[rng.gen_range(0..ms.len())]).collect::<std::collections::BTreeSet<_>>()).unwrap();
        let p = centroid(d).unwrap();
        let v = hull_membership(&p, &cfg).map_err(|e| e.to_string())?;
        ensure(v.verify(&p, &cfg), || format!("hull witness fails on {:?}", cfg.to_vec()))?;
        checked += 1;
    }

    for _ in 0..300 {
        let r = SL2Rep::from_pairs((0..rng.gen_range(0..5)).map(|_| (rng.gen_range(0..12u32), rng.gen_range(1..3usize))));
        ensure(decompose_weights(&r.character()).ok() == Some(r.clone()), || format!("round trip {r}"))?;
        checked += 1;
    }

    let vars = ["a", "b", "c", "d", "e", "f"];
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let mut make = || {
            let mut p = SparsePolynomial::zero(&vars[..n]);
            for _ in 0..rng.gen_range(0..5) {
                p.add_term((0..n).map(|_| rng.gen_range(0..3)).collect(), q(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
            }
            p
        };
        let (a, b, c) = (make(), make(), make());
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || "associativity".into())?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || "distributivity".into())?;
        ensure(&a + &b == &b + &a && &a * &b == &b * &a, || "commutativity".into())?;
        checked += 1;
    }
    Ok(format!("{checked} seeded cases: dominance vs sampling, hull witnesses, SL2 round trips, ring axioms"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("critical subgroups for quintics", critical_table),
        ("completeness scan at bound 375", completeness),
        ("boundary classification", boundary_classification),
        ("minimal-orbit supports", minimal_orbit_supports),
        ("Kirwan fiber weights", kirwan_fibers),
        ("boundary dimensions", boundary_dimensions),
        ("SL2 slice decomposition", sl2_slice),
        ("stability spot checks", spot_checks),
        ("genus values", genus_values),
        ("cover algebra", cover_algebra),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
