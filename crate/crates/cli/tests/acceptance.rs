//! Acceptance gate. Runs criteria 1–8 at zero tolerance and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.
//!
//! Every random choice comes from a fixed seed, so a run is reproducible.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use gdext::algebras::{
    center, check_compatibility, check_gd, check_lie, check_novikov, check_quasicentroid, inner_quasicentroid,
    is_perfect, AlgebraData,
};
use gdext::catalog::{squarefree_part, w1b, Family};
use gdext::conformal::{check_conformal_jacobi, check_conformal_skew, PolyVector, QuadraticLambdaBracket, Spectral};
use gdext::extending::{check_gd_extending, extract_datum, unified_product_data};
use gdext::flag::{
    build_flag_extension, build_flag_extension_data, check_flag_equivalence, check_gd_flag, induced_datum_is_valid,
    solve_flag_equivalence, GdFlagDatum,
};
use gdext::scalar::{q, qr};
use gdext::{BilinearMap, Error, Scalar, ValidationReport, Vector};
use gdext_cli::format::{
    print_algebra, print_extending, print_flag, read_algebra, read_datum, read_flag, DatumFile,
};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("axiom suite", criterion_1),
        ("flag-datum verification", criterion_2),
        ("unified product, both directions", criterion_3),
        ("extraction round-trip", criterion_4),
        ("equivalence reductions", criterion_5),
        ("conformal oracle", criterion_6),
        ("structural predicates", criterion_7),
        ("CLI contract", criterion_8),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.1}s] {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {why}", n + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A nonzero rational with numerator in ±1..=5 and denominator in 1..=4.
fn nonzero(r: &mut StdRng) -> Scalar {
    let n: i64 = r.random_range(1..=5);
    let sign = if r.random_bool(0.5) { 1 } else { -1 };
    qr(sign * n, r.random_range(1..=4))
}

const SHIPPED_B: [(i64, i64); 5] = [(0, 1), (1, 1), (2, 1), (-1, 1), (1, 2)];

fn shipped_b() -> Vec<Scalar> {
    SHIPPED_B.iter().map(|&(n, d)| qr(n, d)).collect()
}

// ---------------------------------------------------------------------------
// Independent oracle for the three axiom families, on raw structure constants.

struct Raw {
    n: usize,
    c: Vec<Scalar>,
}

impl Raw {
    fn of(m: &BilinearMap) -> Raw {
        let (n, _, _) = m.dims();
        let mut c = vec![q(0); n * n * n];
        for (i, j, k, v) in m.entries() {
            c[(i * n + j) * n + k] = v;
        }
        Raw { n, c }
    }

    fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = vec![q(0); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o = &*o + &(&uv * &self.c[(i * n + j) * n + k]);
                }
            }
        }
        out
    }
}

fn add(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn sub(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

fn nz(u: &[Scalar]) -> bool {
    u.iter().any(|x| !x.is_zero())
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect()
}

/// Which of `novikov`, `lie`, `compat` fail. The Jacobi identity is used in
/// its cyclic form here.
fn oracle_classes(data: &AlgebraData) -> BTreeSet<&'static str> {
    let (o, br) = (Raw::of(&data.product), Raw::of(&data.bracket));
    let n = o.n;
    let e = |i| unit(n, i);
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if nz(&add(&br.mul(&e(i), &e(j)), &br.mul(&e(j), &e(i)))) || nz(&br.mul(&e(i), &e(i))) {
                out.insert("lie");
            }
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                let assoc = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| sub(&o.mul(&o.mul(a, b), c), &o.mul(a, &o.mul(b, c)));
                if nz(&sub(&assoc(&x, &y, &z), &assoc(&y, &x, &z)))
                    || nz(&sub(&o.mul(&o.mul(&x, &y), &z), &o.mul(&o.mul(&x, &z), &y)))
                {
                    out.insert("novikov");
                }
                let cyc = add(
                    &add(&br.mul(&br.mul(&x, &y), &z), &br.mul(&br.mul(&y, &z), &x)),
                    &br.mul(&br.mul(&z, &x), &y),
                );
                if nz(&cyc) {
                    out.insert("lie");
                }
                if nz(&compat(&o, &br, &x, &y, &z)) {
                    out.insert("compat");
                }
            }
        }
    }
    out
}

fn compat(o: &Raw, br: &Raw, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
    let t = sub(&br.mul(a, &o.mul(b, c)), &br.mul(c, &o.mul(b, a)));
    let t = add(&t, &o.mul(&br.mul(b, a), c));
    let t = sub(&t, &o.mul(&br.mul(b, c), a));
    sub(&t, &o.mul(b, &br.mul(a, c)))
}

/// Recomputes the residual a violation reports, from its label and tuple.
fn oracle_residual(data: &AlgebraData, cond: &str, t: &[usize]) -> Option<Vec<Scalar>> {
    let (o, br) = (Raw::of(&data.product), Raw::of(&data.bracket));
    let e = |i| unit(o.n, i);
    let r = match (cond, t) {
        ("LIE-ALT", [i, j]) if i == j => br.mul(&e(*i), &e(*i)),
        ("LIE-ALT", [i, j]) => add(&br.mul(&e(*i), &e(*j)), &br.mul(&e(*j), &e(*i))),
        ("LIE-JACOBI", [i, j, k]) => {
            let (x, y, z) = (e(*i), e(*j), e(*k));
            let t = sub(&br.mul(&x, &br.mul(&y, &z)), &br.mul(&br.mul(&x, &y), &z));
            sub(&t, &br.mul(&y, &br.mul(&x, &z)))
        }
        ("NOV-LSYM", [i, j, k]) => {
            let (x, y, z) = (e(*i), e(*j), e(*k));
            let assoc = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| sub(&o.mul(&o.mul(a, b), c), &o.mul(a, &o.mul(b, c)));
            sub(&assoc(&x, &y, &z), &assoc(&y, &x, &z))
        }
        ("NOV-RCOMM", [i, j, k]) => {
            let (x, y, z) = (e(*i), e(*j), e(*k));
            sub(&o.mul(&o.mul(&x, &y), &z), &o.mul(&o.mul(&x, &z), &y))
        }
        ("GD-COMPAT", [i, j, k]) => compat(&o, &br, &e(*i), &e(*j), &e(*k)),
        _ => return None,
    };
    Some(r)
}

fn report_classes(r: &ValidationReport) -> BTreeSet<&'static str> {
    r.failed_conditions()
        .iter()
        .map(|c| match c.as_str() {
            c if c.starts_with("NOV-") => "novikov",
            c if c.starts_with("LIE-") => "lie",
            "GD-COMPAT" => "compat",
            _ => "unknown",
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Shared corpora.

/// Single-entry edits of the shipped `W(1,b)`.
fn criterion_1_edits() -> Vec<AlgebraData> {
    let mut r = rng(1);
    let bs = shipped_b();
    (0..400)
        .map(|_| {
            let b = &bs[r.random_range(0..bs.len())];
            let mut data = w1b(b).data().clone();
            let (i, j, k) = (r.random_range(0..2), r.random_range(0..2), r.random_range(0..2));
            let c = nonzero(&mut r);
            if r.random_bool(0.5) {
                data.product.add_to(i, j, k, &c);
            } else {
                data.bracket.add_to(i, j, k, &c);
            }
            data
        })
        .collect()
}

struct Instance {
    family: Family,
    b: Scalar,
    params: Vec<Scalar>,
    datum: GdFlagDatum,
}

/// Every family over each of its `b` values and every grid point.
fn catalog_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for b in family.b_values() {
            for params in family.grid() {
                if let Ok(datum) = family.datum(&b, &params) {
                    out.push(Instance { family, b: b.clone(), params, datum });
                }
            }
        }
    }
    out
}

/// Grid datums with one entry of one of the eight components shifted.
fn perturbed_instances() -> Vec<(Scalar, GdFlagDatum, &'static str)> {
    let base = catalog_instances();
    let mut r = rng(2);
    (0..300)
        .map(|_| {
            let inst = &base[r.random_range(0..base.len())];
            let mut d = inst.datum.clone();
            let c = nonzero(&mut r);
            let (i, j) = (r.random_range(0..2), r.random_range(0..2));
            let bump_v = |v: &mut Vector| v.set(i, &v[i] + &c);
            let slot = match r.random_range(0..8) {
                0 => {
                    bump_v(&mut d.novikov.p);
                    "p"
                }
                1 => {
                    bump_v(&mut d.novikov.q);
                    "q"
                }
                2 => {
                    d.novikov.s.set(i, j, d.novikov.s.get(i, j) + &c);
                    "S"
                }
                3 => {
                    d.novikov.t.set(i, j, d.novikov.t.get(i, j) + &c);
                    "T"
                }
                4 => {
                    bump_v(&mut d.novikov.a1);
                    "a1"
                }
                5 => {
                    d.novikov.k = &d.novikov.k + &c;
                    "k"
                }
                6 => {
                    bump_v(&mut d.eta);
                    "eta"
                }
                _ => {
                    d.d.set(i, j, d.d.get(i, j) + &c);
                    "D"
                }
            };
            (inst.b.clone(), d, slot)
        })
        .collect()
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    for b in shipped_b() {
        let r = check_gd(w1b(&b).data());
        ensure!(r.passed(), "shipped W(1,{b}) fails: {r}");
        ensure!(oracle_classes(w1b(&b).data()).is_empty(), "oracle rejects shipped W(1,{b})");
    }
    let (mut corrupted, mut harmless) = (0, 0);
    for data in criterion_1_edits() {
        let expected = oracle_classes(&data);
        let r = check_gd(&data);
        if expected.is_empty() {
            // the edit lands on another GD bialgebra, e.g. L∘W = cW
            ensure!(r.passed(), "edit accepted by the oracle but rejected: {r}");
            harmless += 1;
            continue;
        }
        ensure!(!r.passed(), "corruption not detected:\n{}", print_algebra(&data));
        ensure!(report_classes(&r) == expected, "classes {:?}, oracle {:?}", report_classes(&r), expected);
        for v in r.violations() {
            let res = oracle_residual(&data, &v.condition, &v.tuple)
                .ok_or_else(|| format!("unexpected label {}", v.condition))?;
            ensure!(nz(&res) && res == v.residual.coords(), "witness {v} does not reproduce");
        }
        corrupted += 1;
    }
    ensure!(corrupted >= 200, "only {corrupted} corruptions drawn");
    Ok(format!(
        "5 shipped algebras pass; {corrupted} corruptions rejected with reproduced witnesses; \
         {harmless} edits that stay GD are accepted"
    ))
}

fn criterion_2() -> Outcome {
    let instances = catalog_instances();
    let mut families = BTreeSet::new();
    for inst in &instances {
        let r = check_gd_flag(&w1b(&inst.b), &inst.datum).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{}{:?} over b = {}: {r}", inst.family, inst.params, inst.b);
        families.insert(inst.family);
    }
    ensure!(families.len() == 10, "only {} families instantiated", families.len());
    let known = |c: &str| {
        let num = |p: &str, hi: u32| c.strip_prefix(p).and_then(|s| s.parse::<u32>().ok()).is_some_and(|m| (1..=hi).contains(&m));
        num("FN", 10) || num("TD", 2) || num("GF", 6)
    };
    let mut failing = 0;
    for (b, d, slot) in perturbed_instances() {
        let a = w1b(&b);
        let r = check_gd_flag(&a, &d).map_err(|e| e.to_string())?;
        let built = build_flag_extension_data(&a, &d).map_err(|e| e.to_string())?;
        let nov = !check_novikov(&built.product).unwrap().passed();
        let lie = !check_lie(&built.bracket).unwrap().passed();
        let comp = !check_compatibility(&built.product, &built.bracket).unwrap().passed();
        let ids = r.failed_conditions();
        ensure!(ids.iter().all(|c| known(c)), "unknown labels {ids:?}");
        let has = |p: &str| ids.iter().any(|c| c.starts_with(p));
        let what = || format!("perturbed {slot} over b = {b}: reported {ids:?}, built algebra novikov={nov} lie={lie} compat={comp}");
        ensure!(has("FN") == nov, "{}", what());
        ensure!(has("TD") == lie, "{}", what());
        if !nov && !lie {
            ensure!(has("GF") == comp, "{}", what());
        }
        ensure!(r.passed() == !(nov || lie || comp), "{}", what());
        failing += usize::from(!r.passed());
    }
    ensure!(failing >= 50, "only {failing} perturbed instances fail");
    Ok(format!(
        "{} grid instances over 10 families pass; {failing} of 300 perturbations fail with FN/TD/GF labels \
         matching the failing axioms of the built algebra",
        instances.len()
    ))
}

/// Algebras built in criterion 3: every valid grid extension, then every
/// forced build of an invalid perturbation.
fn criterion_3_algebras() -> Result<&'static (Vec<AlgebraData>, Vec<AlgebraData>), String> {
    static BUILT: OnceLock<Result<(Vec<AlgebraData>, Vec<AlgebraData>), String>> = OnceLock::new();
    BUILT.get_or_init(build_criterion_3_algebras).as_ref().map_err(Clone::clone)
}

fn build_criterion_3_algebras() -> Result<(Vec<AlgebraData>, Vec<AlgebraData>), String> {
    let mut valid = Vec::new();
    for inst in catalog_instances() {
        let a = w1b(&inst.b);
        let e = build_flag_extension(&a, &inst.datum).map_err(|e| format!("{}{:?}: {e}", inst.family, inst.params))?;
        valid.push(e.into_data());
    }
    let mut forced = Vec::new();
    for (b, d, _) in perturbed_instances() {
        let a = w1b(&b);
        if check_gd_flag(&a, &d).unwrap().passed() {
            continue;
        }
        match build_flag_extension(&a, &d) {
            Err(Error::InvalidFlagDatum(_)) => {}
            other => return Err(format!("invalid datum built: {other:?}")),
        }
        forced.push(build_flag_extension_data(&a, &d).map_err(|e| e.to_string())?);
    }
    Ok((valid, forced))
}

fn criterion_3() -> Outcome {
    let instances = catalog_instances();
    for inst in &instances {
        let a = w1b(&inst.b);
        let e = build_flag_extension(&a, &inst.datum).map_err(|e| e.to_string())?;
        let tag = format!("{}{:?} over b = {}", inst.family, inst.params, inst.b);
        ensure!(check_gd(e.data()).passed(), "{tag}: built algebra fails check_gd");
        let ext = inst.datum.to_extending_datum().map_err(|e| e.to_string())?;
        let r = check_gd_extending(&a, &ext).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{tag}: induced datum fails: {r}");
        ensure!(induced_datum_is_valid(&a, &inst.datum).unwrap(), "{tag}");
    }
    let (_, forced) = criterion_3_algebras()?;
    for data in forced {
        ensure!(!check_gd(data).passed(), "forced build passes check_gd:\n{}", print_algebra(data));
    }
    Ok(format!(
        "{} valid builds pass check_gd with valid induced datums; {} forced invalid builds fail check_gd",
        instances.len(),
        forced.len()
    ))
}

fn criterion_4() -> Outcome {
    let instances = catalog_instances();
    for inst in &instances {
        let a = w1b(&inst.b);
        let e = build_flag_extension(&a, &inst.datum).map_err(|e| e.to_string())?;
        let tag = format!("{}{:?} over b = {}", inst.family, inst.params, inst.b);
        let (a2, ext) = extract_datum(&e, &[0, 1], &[2]).map_err(|e| format!("{tag}: {e}"))?;
        ensure!(a2.data() == a.data(), "{tag}: extracted base differs");
        ensure!(ext == inst.datum.to_extending_datum().unwrap(), "{tag}: extracted datum differs");
        ensure!(GdFlagDatum::from_extending_datum(&ext).unwrap() == inst.datum, "{tag}: flag datum differs");
        let rebuilt = unified_product_data(&a2, &ext).map_err(|e| e.to_string())?;
        ensure!(&rebuilt == e.data(), "{tag}: rebuilt structure constants differ");
    }
    Ok(format!("{} instances reproduce datum and structure constants exactly", instances.len()))
}

/// Outcome of reducing one instance to its expected target.
enum Reduced {
    Ok,
    Missing(String),
}

fn reduce(b: &Scalar, family: Family, params: &[Scalar], target: Family, tparams: &[Scalar]) -> Result<Reduced, String> {
    let a = w1b(b);
    let d = family.datum(b, params).map_err(|e| e.to_string())?;
    let d2 = target.datum(b, tparams).map_err(|e| e.to_string())?;
    let tag = format!("{family}{} -> {target}{} over b = {b}", show(params), show(tparams));
    match solve_flag_equivalence(&a, &d, &d2) {
        Ok(Some(w)) => {
            let r = check_flag_equivalence(&a, &d, &d2, &w).map_err(|e| e.to_string())?;
            ensure!(r.passed(), "{tag}: returned witness does not validate: {r}");
            Ok(Reduced::Ok)
        }
        Ok(None) => Ok(Reduced::Missing(format!("{tag}: None"))),
        Err(e) => Ok(Reduced::Missing(format!("{tag}: {e}"))),
    }
}

fn show(p: &[Scalar]) -> String {
    format!("({})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn is_rational_square(x: &Scalar) -> bool {
    x.sqrt().is_some()
}

fn criterion_5() -> Outcome {
    use Family::*;
    let (z, one) = (q(0), q(1));
    let mut missing: Vec<(&str, String)> = Vec::new();
    let mut checked = 0;
    let mut run = |label: &'static str, b: &Scalar, f: Family, p: &[Scalar], t: Family, tp: &[Scalar]| -> Result<(), String> {
        checked += 1;
        if let Reduced::Missing(m) = reduce(b, f, p, t, tp)? {
            missing.push((label, m));
        }
        Ok(())
    };
    for b in A1.b_values() {
        for p in A1.grid() {
            let t = if p[0].is_zero() { [z.clone(), z.clone()] } else { [one.clone(), z.clone()] };
            run("A1", &b, A1, &p, A1, &t)?;
        }
        for p in A2.grid() {
            // over ℚ the class of A2(0, b2) is that of the squarefree part of b2
            if p[1].is_zero() {
                run("A2", &b, A2, &p, A2, &[z.clone(), z.clone()])?;
            } else if is_rational_square(&p[1]) {
                run("A2", &b, A2, &p, A2, &[z.clone(), one.clone()])?;
            } else {
                let sf = Scalar::from_big(squarefree_part(&p[1]), 1.into()).unwrap();
                run("A2", &b, A2, &p, A2, &[z.clone(), sf])?;
                let a = w1b(&b);
                let d = A2.datum(&b, &p).unwrap();
                let d1 = A2.datum(&b, &[z.clone(), one.clone()]).unwrap();
                ensure!(
                    matches!(solve_flag_equivalence(&a, &d, &d1), Ok(None)),
                    "A2{} over b = {b} matched A2(0,1) although {} is not a square",
                    show(&p),
                    p[1]
                );
            }
        }
        for p in A4.grid() {
            run("A4", &b, A4, &p, A4, &[z.clone(), z.clone()])?;
        }
    }
    let b0 = q(0);
    for p in B1.grid() {
        run("B1", &b0, B1, &p, B1, &[z.clone(), z.clone(), p[2].clone(), p[3].clone()])?;
    }
    for p in B2.grid() {
        let t = if p[2].is_zero() { [z.clone(), z.clone(), z.clone()] } else { [z.clone(), z.clone(), one.clone()] };
        run("B2", &b0, B2, &p, B2, &t)?;
    }
    for p in B5.grid() {
        let c = &p[2] - &(&p[0] * &p[1]);
        if B5.datum(&b0, &[z.clone(), z.clone(), c.clone()]).is_ok() {
            run("B5", &b0, B5, &p, B5, &[z.clone(), z.clone(), c])?;
        }
    }
    for b in A1.b_values() {
        let a = w1b(&b);
        let d = A1.datum(&b, &[z.clone(), z.clone()]).unwrap();
        let d2 = A1.datum(&b, &[one.clone(), z.clone()]).unwrap();
        ensure!(matches!(solve_flag_equivalence(&a, &d, &d2), Ok(None)), "A1(0,0) ~ A1(1,0) over b = {b}");
    }
    let a = w1b(&b0);
    let d = B2.datum(&b0, &[z.clone(), z.clone(), z.clone()]).unwrap();
    let d2 = B2.datum(&b0, &[z.clone(), z.clone(), one.clone()]).unwrap();
    ensure!(matches!(solve_flag_equivalence(&a, &d, &d2), Ok(None)), "B2(0,0,0) ~ B2(0,0,1)");
    if missing.is_empty() {
        return Ok(format!("{checked} reductions solved with validating witnesses; both non-equivalences return None"));
    }
    let by_family: BTreeSet<&str> = missing.iter().map(|(f, _)| *f).collect();
    Err(format!(
        "{} of {checked} reductions have no witness (families {:?}), e.g. {}",
        missing.len(),
        by_family,
        missing.iter().take(3).map(|(_, m)| m.as_str()).collect::<Vec<_>>().join("; ")
    ))
}

fn conformal_agrees(data: &AlgebraData) -> Result<bool, String> {
    let br = QuadraticLambdaBracket::new(data);
    let skew = check_conformal_skew(&br).map_err(|e| e.to_string())?.passed();
    let jacobi = check_conformal_jacobi(&br).map_err(|e| e.to_string())?.passed();
    Ok(check_gd(data).passed() == (skew && jacobi))
}

fn criterion_6() -> Outcome {
    let mut corpus: Vec<AlgebraData> = shipped_b().iter().map(|b| w1b(b).data().clone()).collect();
    corpus.extend(criterion_1_edits());
    let (valid, forced) = criterion_3_algebras()?;
    corpus.extend(valid.iter().cloned());
    corpus.extend(forced.iter().cloned());
    for data in &corpus {
        ensure!(conformal_agrees(data)?, "disagreement on\n{}", print_algebra(data));
    }
    let br = QuadraticLambdaBracket::new(w1b(&q(0)).data());
    let l = br.e(0);
    let got = br.lambda_bracket(&l, &l, &Spectral::lambda()).map_err(|e| e.to_string())?;
    let lv = Vector::from_ints(&[1, 0]);
    let want = PolyVector::monomial((1, 0, 0), lv.clone()).unwrap().add(&PolyVector::monomial((0, 1, 0), lv.scale(&q(2))).unwrap());
    ensure!(got == want, "[L_λ L] = {got:?}");
    Ok(format!("check_gd agrees with the conformal axioms on {} algebras; [L_λ L] = (∂+2λ)L for W(1,0)", corpus.len()))
}

fn criterion_7() -> Outcome {
    ensure!(!is_perfect(&w1b(&q(1)).lie()), "W(1,1) reported perfect");
    let c = center(&w1b(&q(0)).lie());
    ensure!(c.len() == 2, "center of W(1,0) has dimension {}", c.len());
    let mut algebras: Vec<_> = shipped_b().iter().map(w1b).collect();
    for inst in catalog_instances().into_iter().step_by(97) {
        algebras.push(build_flag_extension(&w1b(&inst.b), &inst.datum).unwrap());
    }
    let mut r = rng(7);
    for _ in 0..20 {
        let a = &algebras[r.random_range(0..algebras.len())];
        let b = Vector::new((0..a.dim()).map(|_| qr(r.random_range(-4..=4), r.random_range(1..=3))).collect());
        let n = a.novikov();
        let t = inner_quasicentroid(&n, &b);
        let rep = check_quasicentroid(&n, &t);
        ensure!(rep.passed(), "T_b with b = {b} fails: {rep}");
    }
    Ok(format!("W(1,1) not perfect; dim center W(1,0) = 2; 20 random T_b pass over {} algebras", algebras.len()))
}

fn criterion_8() -> Outcome {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let mut r = rng(8);
    let instances = catalog_instances();
    let edits = criterion_1_edits();
    let perturbed = perturbed_instances();
    for n in 0..50 {
        let path = dir.path().join(format!("gen{n}.json"));
        let (text, reread): (String, Box<dyn Fn() -> Result<String, String>>) = match n % 3 {
            0 => {
                let data = edits[r.random_range(0..edits.len())].clone();
                let text = print_algebra(&data);
                let p = path.clone();
                (
                    text,
                    Box::new(move || {
                        let back = read_algebra(&p).map_err(|e| e.to_string())?;
                        ensure!(back == data, "algebra value changed");
                        Ok(print_algebra(&back))
                    }),
                )
            }
            1 => {
                let d = perturbed[r.random_range(0..perturbed.len())].1.clone();
                let p = path.clone();
                (
                    print_flag(&d),
                    Box::new(move || {
                        let back = read_flag(&p).map_err(|e| e.to_string())?;
                        ensure!(back == d, "flag datum changed");
                        Ok(print_flag(&back))
                    }),
                )
            }
            _ => {
                let inst = &instances[r.random_range(0..instances.len())];
                let ext = inst.datum.to_extending_datum().unwrap();
                let p = path.clone();
                (
                    print_extending(&ext),
                    Box::new(move || {
                        let back = match read_datum(&p).map_err(|e| e.to_string())? {
                            DatumFile::Extending(x) => x.to_datum().map_err(|e| e.to_string())?,
                            DatumFile::Flag(_) => return Err("extending file read as flag".into()),
                        };
                        ensure!(back == ext, "extending datum changed");
                        Ok(print_extending(&back))
                    }),
                )
            }
        };
        std::fs::write(&path, &text).map_err(|e| e.to_string())?;
        ensure!(reread()? == text, "gen{n}.json does not print back identically");
    }

    let bin = env!("CARGO_BIN_EXE_gdext");
    let run = |args: &[&str]| -> Result<(i32, String), String> {
        let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
    };
    let file = |name: &str, text: &str| -> Result<String, String> {
        let p = dir.path().join(name);
        std::fs::write(&p, text).map_err(|e| e.to_string())?;
        Ok(p.to_str().unwrap().to_string())
    };
    let good = file("w11.json", &print_algebra(w1b(&q(1)).data()))?;
    let mut bad = w1b(&q(1)).data().clone();
    bad.bracket.add_to(0, 1, 0, &q(1));
    bad.bracket.add_to(1, 0, 0, &q(-1));
    let bad = file("bad.json", &print_algebra(&bad))?;
    let broken = file("broken.json", "{\n  \"dim\": 2,\n  \"basis\": [\"L\", \"W\"],\n  \"product\": [[0, 0, 0, \"1/0\"]]\n}\n")?;
    let (code, _) = run(&["check", &good, "--kind", "gd"])?;
    ensure!(code == 0, "pass fixture exits {code}");
    let (code, out) = run(&["check", &bad, "--kind", "gd"])?;
    ensure!(code == 1 && out.contains("GD-COMPAT at (a"), "fail fixture exits {code}: {out}");
    let (code, _) = run(&["check", &broken, "--kind", "gd"])?;
    ensure!(code == 2, "parse-error fixture exits {code}");
    Ok("50 generated files round-trip; exit codes 0/1/2 on pass/fail/parse-error fixtures".into())
}
