//! The verification suites: each one runs a family of identity checks over
//! the configured parameters and collects them into a [`Report`].

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    all_words, basis_enumerate, braided_casimir, Algebra, Gen, NCPoly, Tag, Word,
};
use crate::braided_lie as bl;
use crate::error::{Error, Result};
use crate::expr::{parse_poly, parse_ratfunc};
use crate::geometry::{self, Comparison, ConnectionTable, MetricTable};
use crate::qrat::{Params, Poly, RatFunc};
use crate::report::{Check, Outcome, ParamsEcho, Report, Status};
use crate::tangent::{self as tg, ExtensionContext, Normalization, Side, TangentModule};
use crate::uqsl2::{
    antipode_convolution, apply_op, casimir_apply, counit, covariant_product, free_act,
    spin_decompose, tensor_substructure, HopfGen, TensorSpace, UqModule,
};

pub const SUITES: [&str; 10] = [
    "field",
    "algebra",
    "hopf",
    "bracket",
    "tangent",
    "projectivity",
    "metric",
    "connection",
    "identify",
    "classical-limit",
];

const HOPF: [HopfGen; 3] = [HopfGen::X, HopfGen::Y, HopfGen::H];

/// Degree bounds. `None` keeps each check's own default bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub degree: Option<usize>,
}

impl Bounds {
    fn deg(&self, default: usize) -> usize {
        self.degree.unwrap_or(default)
    }
}

/// Check collector; panics inside a check become FAIL entries.
struct Run {
    checks: Vec<Check>,
}

fn panic_text(e: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = e.downcast_ref::<&str>() {
        s.to_string()
    } else if let Some(s) = e.downcast_ref::<String>() {
        s.clone()
    } else {
        "panic".into()
    }
}

impl Run {
    fn check(&mut self, name: &str, reference: &str, f: impl FnOnce() -> Outcome) {
        let o = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| Err(format!("internal error: {}", panic_text(e))));
        self.checks.push(Check::from_outcome(name, reference, o));
    }

    /// Build a shared object; a failure is recorded and yields `None`.
    fn build<T>(
        &mut self,
        name: &str,
        reference: &str,
        f: impl FnOnce() -> Result<T>,
    ) -> Option<T> {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(Ok(t)) => Some(t),
            Ok(Err(e)) => {
                self.checks
                    .push(Check::new(name, reference, Status::Fail, e.to_string()));
                None
            }
            Err(e) => {
                self.checks.push(Check::new(
                    name,
                    reference,
                    Status::Fail,
                    format!("internal error: {}", panic_text(e)),
                ));
                None
            }
        }
    }

    fn comparisons(
        &mut self,
        prefix: &str,
        reference: &str,
        f: impl FnOnce() -> Result<Vec<Comparison>>,
    ) -> Vec<Comparison> {
        match self.build(&format!("{prefix} comparison"), reference, f) {
            Some(cs) => {
                for c in &cs {
                    let detail = if c.status == Status::Pass {
                        c.detail.clone()
                    } else {
                        format!("{}; printed {}; derived {}", c.detail, c.printed, c.derived)
                    };
                    self.checks.push(Check::new(
                        format!("{prefix} {}", c.name),
                        reference,
                        c.status,
                        detail,
                    ));
                }
                cs
            }
            None => Vec::new(),
        }
    }
}

fn outcome(ok: bool, pass: impl Into<String>, fail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail())
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Run the named suites (`all` expands to every suite) in a fixed order.
pub fn run_suite(names: &[String], params: &Params, bounds: &Bounds) -> Result<Report> {
    let params = params.clone().validated()?;
    if names.is_empty() {
        return Err(Error::Usage(format!(
            "no suite named; choose from {} or all",
            SUITES.join(", ")
        )));
    }
    let mut selected = Vec::new();
    for n in names {
        if n == "all" {
            selected.extend(SUITES.iter().map(|s| s.to_string()));
        } else if SUITES.contains(&n.as_str()) {
            selected.push(n.clone());
        } else {
            return Err(Error::Usage(format!(
                "unknown suite {n:?}; choose from {} or all",
                SUITES.join(", ")
            )));
        }
    }
    let mut seen = Vec::new();
    selected.retain(|s| {
        let fresh = !seen.contains(s);
        seen.push(s.clone());
        fresh
    });
    let mut run = Run { checks: Vec::new() };
    for s in &selected {
        let p = &params;
        match s.as_str() {
            "field" => field(&mut run, p),
            "algebra" => algebra(&mut run, p, bounds),
            "hopf" => hopf(&mut run, p, bounds),
            "bracket" => bracket(&mut run, p, bounds),
            "tangent" => tangent(&mut run, p, bounds),
            "projectivity" => projectivity(&mut run, p, bounds),
            "metric" => metric(&mut run, p, bounds),
            "connection" => connection(&mut run, p, bounds),
            "identify" => identify(&mut run, p, bounds),
            "classical-limit" => classical(&mut run, p, bounds),
            _ => unreachable!(),
        }
    }
    let suite = if names.iter().any(|n| n == "all") {
        "all".to_string()
    } else {
        selected.join("+")
    };
    Ok(Report {
        suite,
        params: ParamsEcho::new(&params, bounds.deg(4)),
        checks: run.checks,
    })
}

fn samples(p: &Params) -> Vec<RatFunc> {
    let q = &p.q;
    let one = RatFunc::one();
    vec![
        q.clone(),
        q.pow(-1),
        RatFunc::from_ratio(3, 2),
        &(q.pow(2) + one.clone()) / &(q - &RatFunc::from_int(5)),
        &(q.pow(3) - q + RatFunc::from_int(7)) / &(RatFunc::from_int(2) * q.pow(2) + one.clone()),
        -(q.pow(4)) + RatFunc::from_ratio(1, 3),
        p.kappa(),
        p.m(),
    ]
}

fn field(run: &mut Run, p: &Params) {
    let xs = samples(p);
    run.check("field axioms", "coefficient field", || {
        let (zero, one) = (RatFunc::zero(), RatFunc::one());
        for a in &xs {
            for b in &xs {
                if a + b != b + a || a * b != b * a {
                    return Err(format!("commutativity fails for {a}, {b}"));
                }
                for c in &xs {
                    if &(a + b) + c != a + &(b + c)
                        || &(a * b) * c != a * &(b * c)
                        || a * &(b + c) != &(a * b) + &(a * c)
                    {
                        return Err(format!(
                            "associativity or distributivity fails for {a}, {b}, {c}"
                        ));
                    }
                }
            }
            if a + &zero != *a || a * &one != *a || &(a - a) != &zero {
                return Err(format!("identities fail for {a}"));
            }
            if !a.is_zero() && a * &a.inv().map_err(|e| e.to_string())? != one {
                return Err(format!("{a} times its inverse is not 1"));
            }
        }
        Ok(format!("{} samples, all triples", xs.len()))
    });
    run.check("canonical form", "coefficient field", || {
        let r = RatFunc::normalize(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1]))
            .map_err(|e| e.to_string())?;
        if r != RatFunc::from_poly(Poly::from_ints(&[1, 1])) {
            return Err(format!("(q^2-1)/(q-1) = {r}"));
        }
        for a in &xs {
            for b in &xs {
                let x = a * b;
                let g = Poly::gcd(x.numer(), x.denom());
                if g.degree() != Some(0)
                    || x.denom().leading() != Some(&BigRational::from_integer(1.into()))
                {
                    return Err(format!("{x} is not reduced with monic denominator"));
                }
            }
        }
        Ok("reduced, monic denominators on all sample products".into())
    });
    run.check("evaluation morphism", "specialization of q", || {
        if !p.is_symbolic() {
            return Ok("q already specialized".into());
        }
        let mut n = 0;
        for q0 in [rat(2, 1), rat(3, 2), rat(-3, 1)] {
            for a in &xs {
                for b in &xs {
                    let (Ok(ea), Ok(eb)) = (a.evaluate_at(&q0), b.evaluate_at(&q0)) else {
                        continue;
                    };
                    let sum = (a + b).evaluate_at(&q0).map_err(|e| e.to_string())?;
                    let prod = (a * b).evaluate_at(&q0).map_err(|e| e.to_string())?;
                    if sum != &ea + &eb || prod != &ea * &eb {
                        return Err(format!(
                            "evaluation at {q0} is not additive or multiplicative on {a}, {b}"
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(format!("{n} pairs at q = 2, 3/2, -3"))
    });
    run.check("pole detection", "specialization of q", || {
        let pole = (RatFunc::q() - RatFunc::one())
            .inv()
            .map_err(|e| e.to_string())?;
        match pole.evaluate_at(&rat(1, 1)) {
            Err(Error::Pole { .. }) => Ok("1/(q-1) at q = 1 reports a pole".into()),
            other => Err(format!("1/(q-1) at q = 1 gave {other:?}")),
        }
    });
    run.check("text round trip", "coefficient field", || {
        for a in &xs {
            if !p.is_symbolic() {
                break;
            }
            let back = parse_ratfunc(&a.to_string()).map_err(|e| e.to_string())?;
            if back != *a {
                return Err(format!("{a} reparses as {back}"));
            }
        }
        Ok("printed forms reparse to themselves".into())
    });
}

fn algebra(run: &mut Run, p: &Params, b: &Bounds) {
    let fun = Algebra::new(p.clone(), Tag::Function);
    let env = Algebra::new(p.with_hbar(p.enveloping_hbar()), Tag::Enveloping);
    run.check("flat basis counts", "flat deformation", || {
        for n in 0..=6 {
            let got = basis_enumerate(n, Tag::Function).len();
            if got != (n + 1) * (n + 1) {
                return Err(format!(
                    "degree <= {n}: {got} normal words, expected {}",
                    (n + 1) * (n + 1)
                ));
            }
            let env_got = basis_enumerate(n, Tag::Enveloping).len();
            if env_got != (n + 1) * (n + 2) * (n + 3) / 6 {
                return Err(format!("enveloping degree <= {n}: {env_got} normal words"));
            }
        }
        Ok(
            "(n+1)^2 function and (n+1)(n+2)(n+3)/6 enveloping words of degree <= n, n = 0..6"
                .into(),
        )
    });
    run.check("irreducible words", "rewriting system", || {
        for n in 0..=6 {
            for (alg, tag) in [(&fun, Tag::Function), (&env, Tag::Enveloping)] {
                let mut irr: Vec<Word> = all_words(n)
                    .into_iter()
                    .filter(|w| alg.is_normal(w))
                    .collect();
                irr.sort();
                let exact: Vec<Word> = basis_enumerate(n, tag)
                    .into_iter()
                    .filter(|w| w.len() == n)
                    .collect();
                if irr != exact {
                    return Err(format!(
                        "{tag:?} degree {n}: irreducible words differ from the basis"
                    ));
                }
            }
        }
        Ok("irreducible words of length <= 6 are exactly the basis monomials".into())
    });
    let deg = b.deg(6);
    run.check("confluence", "rewriting system", || {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for (alg, trials) in [(&fun, 1000), (&env, 300)] {
            for _ in 0..trials {
                let n = rng.gen_range(2..=deg.max(2));
                let w: Vec<Gen> = (0..n).map(|_| Gen::ALGEBRA[rng.gen_range(0..3)]).collect();
                let x = NCPoly::letters(&w);
                let r = alg.reduce_with(&x, |k| rng.gen_range(0..k));
                if r != alg.normal_form(&x) {
                    return Err(format!(
                        "{:?}: random reduction of {} differs",
                        alg.tag(),
                        Word(w)
                    ));
                }
            }
        }
        Ok(format!(
            "1300 random reduction orders on words of length <= {deg}"
        ))
    });
    run.check("casimir value", "braided Casimir", || {
        let c = fun.normal_form(&braided_casimir(p));
        let cu = fun.normal_form(&braided_casimir(p).concat(&NCPoly::gen(Gen::U)));
        outcome(
            c == NCPoly::scalar(p.c.clone()) && cu == NCPoly::gen(Gen::U).scale(&p.c),
            "C = c and C u = c u",
            || format!("C reduces to {c}"),
        )
    });
    let deg = b.deg(4);
    run.check("weight and filtration", "rewriting system", || {
        for n in 0..=deg {
            for w in all_words(n) {
                for alg in [&fun, &env] {
                    let r = alg.normal_form_word(&w);
                    if r.terms()
                        .any(|(x, _)| x.weight() != w.weight() || x.len() > n)
                    {
                        return Err(format!("{:?}: {w} -> {r}", alg.tag()));
                    }
                }
            }
        }
        Ok(format!(
            "normal forms keep the weight and do not raise the degree, length <= {deg}"
        ))
    });
    run.check("associativity", "rewriting system", || {
        let basis = fun.basis(2);
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let (x, y, z) = (
                        NCPoly::word(x.clone()),
                        NCPoly::word(y.clone()),
                        NCPoly::word(z.clone()),
                    );
                    if fun.mul(&fun.mul(&x, &y), &z) != fun.mul(&x, &fun.mul(&y, &z)) {
                        return Err(format!("(xy)z != x(yz) for {x}, {y}, {z}"));
                    }
                }
            }
        }
        Ok(format!("{} triples of degree <= 2", basis.len().pow(3)))
    });
}

fn hopf(run: &mut Run, p: &Params, b: &Bounds) {
    let fun = Algebra::new(p.clone(), Tag::Function);
    let env = Algebra::new(p.with_hbar(p.enveloping_hbar()), Tag::Enveloping);
    let deg = b.deg(4);
    run.check("quantum group relations", "U_q(sl2) relations", || {
        let mut n = 0;
        for alg in [&fun, &env] {
            for w in alg.basis(deg) {
                let x = NCPoly::word(w.clone());
                let act = |gs: &[HopfGen]| alg.act_seq(gs, &x);
                let hx = &act(&[HopfGen::H, HopfGen::X]) - &act(&[HopfGen::X, HopfGen::H]);
                let hy = &act(&[HopfGen::H, HopfGen::Y]) - &act(&[HopfGen::Y, HopfGen::H]);
                let xy = &act(&[HopfGen::X, HopfGen::Y]) - &act(&[HopfGen::Y, HopfGen::X]);
                if hx != act(&[HopfGen::X]).scale(&RatFunc::from_int(2)) {
                    return Err(format!("[H, X] on {w}"));
                }
                if hy != act(&[HopfGen::Y]).scale(&RatFunc::from_int(-2)) {
                    return Err(format!("[H, Y] on {w}"));
                }
                if xy != x.scale(&p.q_number(w.weight())) {
                    return Err(format!("[X, Y] on {w}: {xy}"));
                }
                n += 1;
            }
        }
        Ok(format!(
            "[H,X] = 2X, [H,Y] = -2Y, [X,Y] = [H]_q on {n} basis elements"
        ))
    });
    run.check(
        "module-algebra covariance",
        "covariance of the product",
        || {
            let basis = fun.basis(deg);
            let mut n = 0;
            for a in &basis {
                for c in &basis {
                    if a.len() + c.len() > deg {
                        continue;
                    }
                    let (x, y) = (NCPoly::word(a.clone()), NCPoly::word(c.clone()));
                    for z in HOPF {
                        let lhs = fun.act(z, &fun.mul(&x, &y));
                        if lhs != covariant_product(&fun, z, &x, &y) {
                            return Err(format!("{z:?} on {a} * {c}"));
                        }
                    }
                    n += 1;
                }
            }
            Ok(format!(
                "X, Y, H on {n} basis pairs of total degree <= {deg}"
            ))
        },
    );
    run.check(
        "action respects relations",
        "covariance of the product",
        || {
            for alg in [&fun, &env] {
                for n in 0..=deg {
                    for w in all_words(n) {
                        let x = NCPoly::word(w.clone());
                        for z in HOPF {
                            if alg.act(z, &alg.normal_form(&x))
                                != alg.normal_form(&free_act(p, z, &x))
                            {
                                return Err(format!("{:?}: {z:?} on {w}", alg.tag()));
                            }
                        }
                    }
                }
            }
            Ok(format!(
                "action commutes with reduction on all words of length <= {deg}"
            ))
        },
    );
    run.check("antipode axiom", "Hopf structure", || {
        for w in fun.basis(deg) {
            let x = NCPoly::word(w.clone());
            for z in HOPF {
                for left in [true, false] {
                    if apply_op(&fun, &antipode_convolution(z, left), &x) != x.scale(&counit(z)) {
                        return Err(format!("{z:?} on {w}"));
                    }
                }
            }
        }
        Ok("m(S (x) id)Delta = m(id (x) S)Delta = epsilon for X, Y, H".into())
    });
    run.check("casimir spectrum", "quantum Casimir", || {
        let t = TensorSpace::new(p.clone());
        for k in 0..=3 {
            for v in tensor_substructure(&t, k, Gen::U) {
                if casimir_apply(&t, &v) != v.scale(&p.spin_eigenvalue(k)) {
                    return Err(format!("spin-{k} string is not an eigenvector"));
                }
            }
        }
        let c = braided_casimir(p);
        for z in HOPF {
            let r = t.act(z, &c);
            if !r.is_zero() {
                return Err(format!("{z:?} C = {r}"));
            }
        }
        Ok("spin-k strings are eigenvectors for k <= 3; C is invariant".into())
    });
    run.check("spin decomposition", "isotypic decomposition", || {
        for w in fun.basis(3) {
            let x = NCPoly::word(w.clone());
            let parts = spin_decompose(&fun, &x);
            let mut sum = NCPoly::zero();
            for (k, v) in &parts {
                if casimir_apply(&fun, v) != v.scale(&p.spin_eigenvalue(*k)) {
                    return Err(format!("spin-{k} part of {w} is not an eigenvector"));
                }
                sum = &sum + v;
            }
            if sum != x {
                return Err(format!("parts of {w} do not sum back"));
            }
        }
        Ok("parts of every basis element of degree <= 3 are eigenvectors and sum back".into())
    });
}

fn bracket(run: &mut Run, p: &Params, b: &Bounds) {
    run.check("bracket kills I+", "braided bracket", || {
        bl::check_kills_i_plus(p)
    });
    run.check("bracket on I-", "braided bracket", || {
        bl::check_i_minus_images(p)
    });
    run.check("bracket subspaces", "braided bracket", || {
        bl::check_subspaces(p)
    });
    run.check("bracket equivariance", "braided bracket", || {
        bl::check_equivariance(p)
    });
    run.check("bracket uniqueness", "braided bracket", || {
        bl::check_uniqueness(p)
    });
    run.check("bracket table", "bracket table", || {
        let table = [
            ("u", "v", "-q^2*M*u"),
            ("u", "w", "(1/(q+1/q))*M*v"),
            ("v", "u", "M*u"),
            ("v", "v", "(1-q^2)*M*v"),
            ("v", "w", "-q^2*M*w"),
            ("w", "u", "-(1/(q+1/q))*M*v"),
            ("w", "v", "M*w"),
            ("u", "u", "0"),
            ("w", "w", "0"),
        ];
        let m = format!("({})", p.m());
        let mut n = 0;
        for (a, c, text) in table {
            let expect = parse_poly(&text.replace('M', &m), p)
                .map_err(|e| e.to_string())?
                .0;
            let g = |s: &str| Gen::ALGEBRA["uvw".find(s).unwrap()];
            let got = bl::bracket_gens(p, g(a), g(c));
            if got != expect {
                return Err(format!("[{a},{c}] = {got}, table says {expect}"));
            }
            n += 1;
        }
        Ok(format!("{n} entries"))
    });
    run.check("q-Jacobi", "q-Jacobi identity", || bl::check_jacobi(p));
    run.check("kappa value", "q-Jacobi identity", || {
        // relation 2 at z = v with kappa divided out fixes kappa
        let sides = bl::jacobi_sides(p, Gen::V);
        let (l, r) = &sides[1];
        let rk = r.scale(&p.kappa().inv().map_err(|e| e.to_string())?);
        let k = tg::ratio(l, &rk).ok_or("relation 2 at z = v is not proportional")?;
        let expect = RatFunc::one() - (p.qp(2) + p.qp(-2)).inv().map_err(|e| e.to_string())?;
        outcome(k == expect, format!("kappa = {k}"), || {
            format!("forced kappa {k}, expected {expect}")
        })
    });
    let deg = b.deg(4);
    run.check("casimir centrality", "centrality of the Casimir", || {
        let pe = p.with_hbar(p.enveloping_hbar());
        let env = Algebra::new(pe.clone(), Tag::Enveloping);
        let c = braided_casimir(&pe);
        let basis = env.basis(deg);
        for w in &basis {
            let x = NCPoly::word(w.clone());
            let r = env.normal_form(&(&c.concat(&x) - &x.concat(&c)));
            if !r.is_zero() {
                return Err(format!("[C, {w}] = {r}"));
            }
        }
        Ok(format!(
            "C commutes with {} enveloping basis elements at hbar = kappa tau / 2",
            basis.len()
        ))
    });
}

fn tangent_algebra(p: &Params) -> Arc<Algebra> {
    tg::function_algebra(p)
}

fn tangent(run: &mut Run, p: &Params, b: &Bounds) {
    let alg = tangent_algebra(p);
    let n = b.deg(5).max(4);
    let Some(ctx) = run.build("extension context", "vector field extension", || {
        ExtensionContext::new(alg.clone(), n)
    }) else {
        return;
    };
    run.check("alpha_1", "vector field extension", || {
        outcome(ctx.alpha(1).is_one(), "alpha_1 = 1", || {
            format!("alpha_1 = {}", ctx.alpha(1))
        })
    });
    run.check("degree-one operators", "adjoint action", || {
        for s in Gen::SYMBOLS {
            for x in Gen::ALGEBRA {
                let got = ctx
                    .extend_apply(s, &NCPoly::gen(x))
                    .map_err(|e| e.to_string())?;
                if got != tg::ad_degree_one(p, s, x) {
                    return Err(format!("{}({}) = {got}", s.name(), x.name()));
                }
            }
        }
        Ok("the extension restricts to the bracket on V".into())
    });
    let d = b.deg(5);
    run.check("tangent relation", "tangent relation", || {
        ctx.tangent_relation_check(d)
    });
    for s in Gen::SYMBOLS {
        run.check(
            &format!("purity {}", s.name()),
            "spin purity of the extension",
            || {
                let mut parts = Vec::new();
                for k in 1..=4.min(ctx.max_degree()) {
                    parts.push(ctx.purity_check(s, k)?);
                }
                Ok(format!("levels 1..={} pure", parts.len()))
            },
        );
    }
    let d = b.deg(3);
    run.check("equivariance", "covariance of the extension", || {
        ctx.equivariance_check(d)
    });
    // the printed constants against the ones the relations force
    {
        let name = "representation (printed alpha)";
        let reference = "extension constants";
        let outcome = catch_unwind(AssertUnwindSafe(
            || -> std::result::Result<(bool, String), String> {
                let r = ctx.representation_check(d);
                let mut bad = Vec::new();
                for k in 1..=ctx.max_degree().min(4) {
                    let ratio = ctx.relation_ratio(k).map_err(|e| e.to_string())?;
                    if !ratio.is_one() {
                        bad.push(format!("k = {k}: sides differ by the factor {ratio}"));
                    }
                }
                Ok(match r {
                Ok(d) => (true, d),
                Err(e) => (false, format!("{e}; {}; the constants (1+q^4+q^6+...+q^(4k-2)+q^(4k+2))/(1+q^(4k+2)) satisfy the relations", bad.join("; "))),
            })
            },
        ));
        let check = match outcome {
            Ok(Ok((true, d))) => Check::new(name, reference, Status::Pass, d),
            Ok(Ok((false, d))) => Check::new(name, reference, Status::TypoSuspect, d),
            Ok(Err(e)) => Check::new(name, reference, Status::Fail, e),
            Err(e) => Check::new(name, reference, Status::Fail, panic_text(e)),
        };
        run.checks.push(check);
    }
    let forced = run.build("forced extension context", "extension constants", || {
        ExtensionContext::with_normalization(alg.clone(), d, Normalization::Representation)
    });
    if let Some(f) = forced {
        run.check(
            "representation (forced alpha)",
            "representation of the enveloping algebra",
            || f.representation_check(d),
        );
        run.check(
            "tangent relation (forced alpha)",
            "tangent relation",
            || f.tangent_relation_check(d),
        );
        run.check("forced alpha limits", "extension constants", || {
            for k in 1..=d {
                let a = f.alpha(k);
                if k == 1 && !a.is_one() {
                    return Err(format!("forced alpha_1 = {a}"));
                }
                if p.is_symbolic() {
                    let at1 = a.evaluate_at(&rat(1, 1)).map_err(|e| e.to_string())?;
                    if at1 != rat(k as i64, 1) {
                        return Err(format!("forced alpha_{k} at q = 1 is {at1}"));
                    }
                }
            }
            Ok("forced alpha_1 = 1 and alpha_k -> k as q -> 1".into())
        });
    }
}

fn projectivity(run: &mut Run, p: &Params, b: &Bounds) {
    let alg = tangent_algebra(p);
    let n = b.deg(2);
    for side in [Side::Left, Side::Right] {
        let Some(m) = run.build("tangent module", "tangent module", || {
            TangentModule::new(alg.clone(), side)
        }) else {
            return;
        };
        for (name, o) in tg::projectivity_checks(&m, n, n + 1) {
            run.check(&name, "projectivity", || o);
        }
        let tag = if side == Side::Left { "left" } else { "right" };
        let top = b.deg(4);
        run.check(&format!("{tag} rank identity"), "projectivity", || {
            let mut dims = Vec::new();
            for l in 0..=top {
                let (r1, r2, r) = tg::rank_identity(&m, l).map_err(|e| e.to_string())?;
                if r1 + r2 != r || r2 != tg::flat_dimension(l) {
                    return Err(format!(
                        "level {l}: ranks {r1} + {r2} vs {r}, flat dimension {}",
                        tg::flat_dimension(l)
                    ));
                }
                dims.push(r2.to_string());
            }
            Ok(format!(
                "direct sum at levels 0..={top}; complement ranks {}",
                dims.join(", ")
            ))
        });
        if side == Side::Left {
            run.comparisons("projection", "projector images", || {
                geometry::compare_projections(&m)
            });
        }
    }
}

fn metric(run: &mut Run, p: &Params, b: &Bounds) {
    let Some(t) = run.build("metric derivation", "braided metric", || {
        geometry::metric_solve(tangent_algebra(p))
    }) else {
        return;
    };
    metric_checks(run, &t, b);
}

fn metric_checks(run: &mut Run, t: &MetricTable, b: &Bounds) {
    run.check("metric solution space", "braided metric", || {
        outcome(
            t.solution_dim == 1,
            "one-dimensional, normalized by k = 1",
            || format!("dimension {}", t.solution_dim),
        )
    });
    run.check("metric spin-0 value", "braided metric", || t.check_gamma());
    run.check("metric q-symmetry", "q-symmetry", || t.check_q_symmetry());
    run.check("metric left annihilation", "annihilation of K", || {
        t.check_annihilation(Side::Left)
    });
    run.check("metric right annihilation", "annihilation of K", || {
        t.check_annihilation(Side::Right)
    });
    let n = b.deg(1).min(2);
    run.check("metric covariance", "covariance of the metric", || {
        t.check_covariance(n)
    });
    run.check("metric well defined", "braided metric", || {
        t.check_well_defined(b.deg(2))
    });
    let cs = run.comparisons("metric entry", "metric table", || {
        geometry::compare_metric(t)
    });
    run.check("metric agreement count", "metric table", || {
        let agree = cs.iter().filter(|c| c.status == Status::Pass).count();
        outcome(
            cs.len() == 9 && agree >= 7,
            format!("{agree}/9 printed entries agree"),
            || format!("{agree}/{} printed entries agree", cs.len()),
        )
    });
}

fn connection(run: &mut Run, p: &Params, b: &Bounds) {
    let Some(t) = run.build("connection derivation", "braided connection", || {
        geometry::connection_derive(tangent_algebra(p))
    }) else {
        return;
    };
    connection_checks(run, &t, p, b);
}

fn connection_checks(run: &mut Run, t: &ConnectionTable, p: &Params, b: &Bounds) {
    run.check("connection alpha", "braided connection", || t.check_alpha());
    run.check("connection K-relation", "K-relation", || {
        t.check_k_relation()
    });
    run.check("connection spin-0", "spin-0 annihilation", || {
        t.check_spin0()
    });
    run.check("connection torsion", "torsion-freeness", || {
        let s = t.torsion_check()?;
        let st = &s * &p.tau;
        outcome(
            st == RatFunc::from_int(2),
            format!("common scalar s = {s}, s tau = 2"),
            || format!("s = {s}, s tau = {st}"),
        )
    });
    run.check("connection J chain", "J recursion", || t.check_j_chain());
    run.check(
        "connection covariance",
        "covariance of the connection",
        || t.check_covariance(),
    );
    run.check("connection linearity", "braided connection", || {
        t.check_linearity(b.deg(1))
    });
    run.comparisons("connection", "connection table", || {
        geometry::compare_connection(t)
    });
}

fn identify(run: &mut Run, p: &Params, b: &Bounds) {
    let alg = tangent_algebra(p);
    let n = b.deg(3);
    for side in [Side::Left, Side::Right] {
        let tag = if side == Side::Left { "left" } else { "right" };
        let Some((basis, lower)) =
            run.build(&format!("{tag} tangent basis"), "tangent basis", || {
                tg::tangent_basis(alg.clone(), n, side)
            })
        else {
            continue;
        };
        run.check(&format!("{tag} basis rank"), "tangent basis", || {
            let mut ranks = Vec::new();
            for l in 0..=n {
                let vs = basis.vectors(l);
                let r = tg::graded_rank(&vs);
                if r != vs.len() || r != tg::flat_dimension(l) {
                    return Err(format!(
                        "level {l}: {} vectors, rank {r}, expected {}",
                        vs.len(),
                        tg::flat_dimension(l)
                    ));
                }
                ranks.push(r.to_string());
            }
            Ok(format!("independent, ranks {}", ranks.join(", ")))
        });
        run.check(&format!("{tag} drop-out"), "tangent basis", || {
            tg::check_dropout(&basis, &lower)
        });
    }
    let Some(id) = run.build("identification", "left/right identification", || {
        tg::Identification::build(alg.clone(), n)
    }) else {
        return;
    };
    run.check(
        "identification equivariance",
        "left/right identification",
        || tg::check_identification_equivariance(&id),
    );
    run.check(
        "identification scalars",
        "left/right identification",
        || {
            let mut notes = Vec::new();
            for c in &id.components {
                if c.lambda.is_zero() {
                    return Err(format!("component ({}, {}) has lambda 0", c.k, c.s));
                }
                if let Some(a) = &c.anomaly {
                    notes.push(format!("({}, {}): lambda = {}, {a}", c.k, c.s, c.lambda));
                }
            }
            Ok(if notes.is_empty() {
                "all components flatten by products".into()
            } else {
                notes.join("; ")
            })
        },
    );
    run.check(
        "classical identification",
        "left/right identification",
        || {
            let p1 = p.specialized(&rat(1, 1)).map_err(|e| e.to_string())?;
            let id1 = tg::Identification::build(tg::function_algebra(&p1), n)
                .map_err(|e| e.to_string())?;
            tg::check_classical_identification(&id1)
        },
    );
}

/// The Leibniz extension of the degree-one operators, reduced in `alg`.
pub fn leibniz_apply(alg: &Algebra, s: Gen, w: &Word) -> NCPoly {
    let p = alg.params();
    let ls = w.letters();
    let mut out = NCPoly::zero();
    for i in 0..ls.len() {
        let t = NCPoly::letters(&ls[..i])
            .concat(&tg::ad_degree_one(p, s, ls[i]))
            .concat(&NCPoly::letters(&ls[i + 1..]));
        out = &out + &t;
    }
    alg.normal_form(&out)
}

fn classical(run: &mut Run, p: &Params, b: &Bounds) {
    let base = Params {
        q: RatFunc::q(),
        ..p.clone()
    };
    let c1 = match p.c.as_constant() {
        Some(c) => c,
        None => p.c.evaluate_at(&rat(1, 1)).unwrap_or_else(|_| rat(1, 1)),
    };
    let p1 = match base
        .with_c(RatFunc::from_rational(c1))
        .with_tau(RatFunc::from_int(4))
        .specialized(&rat(1, 1))
    {
        Ok(p1) => p1,
        Err(e) => {
            run.checks.push(Check::new(
                "classical parameters",
                "classical limit",
                Status::Fail,
                e.to_string(),
            ));
            return;
        }
    };
    let alg = tg::function_algebra(&p1);
    run.check("classical commutativity", "classical limit", || {
        for x in Gen::ALGEBRA {
            for y in Gen::ALGEBRA {
                let (a, c) = (NCPoly::gen(x), NCPoly::gen(y));
                if alg.mul(&a, &c) != alg.mul(&c, &a) {
                    return Err(format!(
                        "{}{} != {}{}",
                        x.name(),
                        y.name(),
                        y.name(),
                        x.name()
                    ));
                }
            }
        }
        Ok("A is commutative at q = 1".into())
    });
    run.check("classical bracket", "classical limit", || {
        let g = |x: Gen| NCPoly::gen(x);
        let two = RatFunc::from_int(2);
        let table = [
            (Gen::U, Gen::V, g(Gen::U).scale(&-&two)),
            (Gen::U, Gen::W, g(Gen::V)),
            (Gen::V, Gen::U, g(Gen::U).scale(&two)),
            (Gen::V, Gen::W, g(Gen::W).scale(&-&two)),
            (Gen::W, Gen::U, -&g(Gen::V)),
            (Gen::W, Gen::V, g(Gen::W).scale(&two)),
            (Gen::V, Gen::V, NCPoly::zero()),
        ];
        for (x, y, e) in table {
            let r = bl::bracket_gens(&p1, x, y);
            if r != e {
                return Err(format!(
                    "[{}, {}] = {r}, classical value {e}",
                    x.name(),
                    y.name()
                ));
            }
        }
        Ok("the bracket is the sl(2) bracket at q = 1, tau = 4".into())
    });
    let deg = b.deg(4);
    let Some(ctx) = run.build("classical extension", "classical limit", || {
        ExtensionContext::new(alg.clone(), deg)
    }) else {
        return;
    };
    run.check("classical Leibniz rule", "classical limit", || {
        let mut n = 0;
        for w in alg.basis(deg) {
            for s in Gen::SYMBOLS {
                let got = ctx
                    .extend_apply(s, &NCPoly::word(w.clone()))
                    .map_err(|e| e.to_string())?;
                let want = leibniz_apply(&alg, s, &w);
                if got != want {
                    return Err(format!("{} on {w}: {got} vs Leibniz {want}", s.name()));
                }
                n += 1;
            }
        }
        Ok(format!(
            "{n} (operator, basis element) pairs of degree <= {deg}"
        ))
    });
    run.check("classical constants", "classical limit", || {
        for k in 1..=deg as i64 {
            let a = p1.alpha_coefficient(k).map_err(|e| e.to_string())?;
            let f = p1.representation_alpha(k).map_err(|e| e.to_string())?;
            if a != RatFunc::from_int(k) || f != a {
                return Err(format!("k = {k}: printed {a}, forced {f}"));
            }
        }
        let cm = RatFunc::from_int(-2) / p1.c.clone();
        let t = geometry::connection_derive(alg.clone()).map_err(|e| e.to_string())?;
        outcome(
            t.alpha == cm,
            "alpha_k = k and the connection constant is -2/c",
            || format!("connection alpha {}", t.alpha),
        )
    });
    run.check("classical projector", "classical limit", || {
        let m = TangentModule::new(alg.clone(), Side::Left).map_err(|e| e.to_string())?;
        let rm = TangentModule::new(alg.clone(), Side::Right).map_err(|e| e.to_string())?;
        for s in Gen::SYMBOLS {
            let l = m.p_proj(&NCPoly::gen(s));
            let r = rm.p_proj(&NCPoly::gen(s));
            if tg::volte(&l, Side::Left) != r {
                return Err(format!("left and right projectors differ at {}", s.name()));
            }
        }
        Ok("left and right projectors agree up to symbol placement".into())
    });
}
