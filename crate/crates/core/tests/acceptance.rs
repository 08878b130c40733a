mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{irreducible_count, leibniz, rat, Classical};
use qhyper::algebra::{basis_enumerate, braided_casimir, Algebra, Gen, NCPoly, Tag, Word};
use qhyper::report::{Report, Status};
use qhyper::suite::{run_suite, Bounds};
use qhyper::tangent::{function_algebra, ExtensionContext, Normalization};
use qhyper::{Params, RatFunc};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn suite(name: &str, p: &Params) -> Report {
    run_suite(&[name.to_string()], p, &Bounds::default()).expect("suite runs")
}

/// Failing checks, ignoring the named ones.
fn failures(r: &Report, except: &[&str]) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| c.status == Status::Fail && !except.contains(&c.name.as_str()))
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect()
}

fn status_of(r: &Report, name: &str) -> Option<Status> {
    r.checks.iter().find(|c| c.name == name).map(|c| c.status)
}

fn all_pass(r: &Report, except: &[&str]) -> Verdict {
    let f = failures(r, except);
    if f.is_empty() {
        verdict(true, format!("{} checks", r.checks.len()))
    } else {
        verdict(false, f.join("; "))
    }
}

fn criterion_1() -> Verdict {
    for n in 0..=6 {
        let got = basis_enumerate(n, Tag::Function).len();
        if got != (n + 1) * (n + 1) || irreducible_count(n) != got {
            return verdict(
                false,
                format!(
                    "degree <= {n}: {got} basis words, {} irreducible",
                    irreducible_count(n)
                ),
            );
        }
    }
    let alg = Algebra::new(Params::default(), Tag::Function);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=6);
        let w: Vec<Gen> = (0..n).map(|_| Gen::ALGEBRA[rng.gen_range(0..3)]).collect();
        let x = NCPoly::letters(&w);
        let a = alg.reduce_with(&x, |k| rng.gen_range(0..k));
        let b = alg.reduce_with(&x, |k| k - 1);
        if a != b || a != alg.normal_form(&x) {
            return verdict(false, format!("reductions of {} disagree", Word(w)));
        }
    }
    verdict(
        true,
        "(n+1)^2 for n = 0..6; 1000 random reductions confluent",
    )
}

fn criterion_4() -> Verdict {
    let p = Params::default();
    let pe = p.with_hbar(p.enveloping_hbar());
    let env = Algebra::new(pe.clone(), Tag::Enveloping);
    let c = braided_casimir(&pe);
    for w in env.basis(4) {
        let x = NCPoly::word(w.clone());
        if !env.normal_form(&(&c.concat(&x) - &x.concat(&c))).is_zero() {
            return verdict(false, format!("C does not commute with {w}"));
        }
    }
    // hbar = kappa tau / 2 with tau = 4
    let expect = RatFunc::from_int(2)
        * (RatFunc::one() - (RatFunc::q_pow(2) + RatFunc::q_pow(-2)).inv().unwrap());
    verdict(
        pe.hbar == expect,
        "C central on the enveloping basis of degree <= 4",
    )
}

fn criterion_5() -> Verdict {
    let p = Params::default();
    let r = suite("tangent", &p);
    let mut problems = failures(&r, &[]);
    // independent oracle at q = 1, tau = 4: commutative polynomials, Leibniz rule
    let p1 = p.specialized(&rat(1, 1)).unwrap();
    let alg = function_algebra(&p1);
    let ctx = ExtensionContext::new(alg.clone(), 4).unwrap();
    let c1 = rat(1, 1);
    for w in alg.basis(4) {
        let e = (
            w.letters().iter().filter(|g| **g == Gen::U).count() as u32,
            w.letters().iter().filter(|g| **g == Gen::V).count() as u32,
            w.letters().iter().filter(|g| **g == Gen::W).count() as u32,
        );
        for (i, s) in Gen::SYMBOLS.iter().enumerate() {
            let got =
                Classical::from_ncpoly(&ctx.extend_apply(*s, &NCPoly::word(w.clone())).unwrap());
            if got != leibniz(i, e, &c1) {
                problems.push(format!("classical oracle differs for {} on {w}", s.name()));
            }
        }
    }
    // the printed constants: the relations fail exactly by the predicted factor
    let printed = ExtensionContext::new(function_algebra(&p), 4).unwrap();
    let rep = printed.representation_check(3);
    let mut factors = Vec::new();
    for k in 1..=4 {
        let ratio = printed.relation_ratio(k).unwrap();
        let forced = p.representation_alpha(k as i64).unwrap();
        if &p.alpha_coefficient(k as i64).unwrap() / &ratio != forced {
            problems.push(format!(
                "k = {k}: printed alpha / ratio is not the forced constant"
            ));
        }
        factors.push(ratio);
    }
    let k2: RatFunc = "(q^8-q^6+q^4-q^2+1)/(q^4-q^2+1)^2".parse().unwrap();
    if !factors[0].is_one() || factors[1] != k2 {
        problems.push(format!(
            "unexpected level factors {} and {}",
            factors[0], factors[1]
        ));
    }
    if status_of(&r, "representation (forced alpha)") != Some(Status::Pass) {
        problems.push("forced constants do not give a representation".into());
    }
    let forced = ExtensionContext::with_normalization(
        function_algebra(&p),
        3,
        Normalization::Representation,
    )
    .unwrap();
    if forced.representation_check(3).is_ok() && rep.is_err() && problems.is_empty() {
        verdict(
            false,
            format!(
                "representation relations fail to degree 3 with the printed alpha_k (k >= 2; level-2 factor {}); \
                 alpha_1 = 1, tangent relation to degree 5, purity k <= 4 and the classical oracle to degree 4 pass; \
                 the forced alpha_k = (1+q^4+...+q^(4k-2)+q^(4k+2))/(1+q^(4k+2)) passes all relations",
                factors[1]
            ),
        )
    } else if rep.is_ok() && problems.is_empty() {
        verdict(true, "all parts hold with the printed alpha_k")
    } else {
        verdict(false, format!("unexpected: {}", problems.join("; ")))
    }
}

fn criterion_6() -> Verdict {
    let r = suite("projectivity", &Params::default());
    let v = all_pass(&r, &[]);
    if !v.pass {
        return v;
    }
    let pv = r
        .checks
        .iter()
        .find(|c| c.name == "projection P(V)")
        .unwrap();
    let others = ["projection P(U)", "projection P(W)"]
        .iter()
        .all(|n| status_of(&r, n) == Some(Status::Pass));
    let restored = pv.status == Status::Pass || pv.detail.contains("agrees");
    verdict(
        others && restored,
        format!(
            "battery and rank identity to level 4 on both sides; P(U), P(W) agree; P(V) {}",
            pv.status.as_str()
        ),
    )
}

fn criterion_7() -> Verdict {
    let r = suite("metric", &Params::default());
    let v = all_pass(&r, &[]);
    let agree = r
        .checks
        .iter()
        .filter(|c| c.name.starts_with("metric entry") && c.status == Status::Pass)
        .count();
    let justified = r
        .checks
        .iter()
        .filter(|c| c.name.starts_with("metric entry") && c.status == Status::TypoSuspect)
        .all(|c| c.detail.contains("weight") || c.detail.contains("violates"));
    verdict(
        v.pass && agree >= 7 && justified,
        format!("{agree}/9 entries agree; {}", v.detail),
    )
}

fn criterion_10() -> Verdict {
    let cs = [RatFunc::one(), RatFunc::from_int(2), RatFunc::from_int(-1)];
    let qs = [None, Some(rat(2, 1)), Some(rat(3, 2))];
    let mut runs = Vec::new();
    std::thread::scope(|sc| {
        let mut handles = Vec::new();
        for c in &cs {
            for q in &qs {
                handles.push(sc.spawn(move || {
                    let base = Params::default().with_c(c.clone());
                    let p = match q {
                        Some(q0) => base.specialized(q0).unwrap(),
                        None => base,
                    };
                    let names: Vec<String> = ["bracket", "tangent", "metric", "connection"]
                        .iter()
                        .map(|s| s.to_string())
                        .collect();
                    let r = run_suite(&names, &p, &Bounds::default()).unwrap();
                    let sig: Vec<(String, Status)> = r
                        .checks
                        .iter()
                        .map(|c| (c.name.clone(), c.status))
                        .collect();
                    (
                        format!(
                            "c={c}, q={}",
                            q.as_ref()
                                .map(|x| x.to_string())
                                .unwrap_or("symbolic".into())
                        ),
                        sig,
                    )
                }));
            }
        }
        for h in handles {
            runs.push(h.join().unwrap());
        }
    });
    let (ref0, sig0) = &runs[0];
    for (label, sig) in &runs[1..] {
        if sig != sig0 {
            let diff: Vec<String> = sig0
                .iter()
                .zip(sig)
                .filter(|(a, b)| a != b)
                .map(|(a, b)| format!("{} {:?} vs {:?}", a.0, a.1, b.1))
                .collect();
            return verdict(
                false,
                format!("{label} differs from {ref0}: {}", diff.join(", ")),
            );
        }
    }
    verdict(
        true,
        format!(
            "{} runs, {} checks each, identical verdicts",
            runs.len(),
            sig0.len()
        ),
    )
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let secs = Duration::from_secs;
    let criteria: Vec<(usize, &str, Duration, Box<dyn Fn() -> Verdict>)> = vec![
        (
            1,
            "flat deformation dimensions and confluence",
            secs(5),
            Box::new(criterion_1),
        ),
        (
            2,
            "hopf suite",
            secs(10),
            Box::new(move || all_pass(&suite("hopf", &Params::default()), &[])),
        ),
        (
            3,
            "bracket suite",
            secs(5),
            Box::new(move || {
                all_pass(
                    &suite("bracket", &Params::default()),
                    &["casimir centrality"],
                )
            }),
        ),
        (4, "centrality", secs(5), Box::new(criterion_4)),
        (5, "tangent suite", secs(60), Box::new(criterion_5)),
        (6, "projectivity suite", secs(30), Box::new(criterion_6)),
        (7, "metric suite", secs(10), Box::new(criterion_7)),
        (
            8,
            "connection suite",
            secs(10),
            Box::new(move || all_pass(&suite("connection", &Params::default()), &[])),
        ),
        (
            9,
            "tangent basis and identification",
            secs(30),
            Box::new(move || all_pass(&suite("identify", &Params::default()), &[])),
        ),
        (
            10,
            "robustness across c and q",
            secs(180),
            Box::new(criterion_10),
        ),
    ];
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (n, name, budget, f) in &criteria {
        let t = Instant::now();
        let v = f();
        let el = t.elapsed();
        let pass = v.pass && el <= *budget;
        let timing = if el <= *budget {
            String::new()
        } else {
            format!(" over the {budget:?} budget;")
        };
        writeln!(
            out,
            "criterion {n:>2} {:<4} {name} [{:.2}s / {}s]{timing} {}",
            if pass { "PASS" } else { "FAIL" },
            el.as_secs_f64(),
            budget.as_secs(),
            v.detail
        )
        .unwrap();
        if !pass {
            failed.push((*n, v.detail));
        }
    }
    let total = start.elapsed();
    writeln!(out, "whole battery {:.2}s", total.as_secs_f64()).unwrap();
    assert!(total <= secs(180), "battery exceeded three minutes");
    // the printed extension constants are known not to satisfy the representation relations
    let unexpected: Vec<_> = failed
        .iter()
        .filter(|(n, d)| !(*n == 5 && d.starts_with("representation relations fail")))
        .collect();
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
}
