//! Acceptance suite: one line per criterion, PASS or FAIL with evidence.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use knotbound_cli::analysis::{entry_profile, row_diagram, verify_table, RowStatus};
use knotbound_cli::table::{read_table, Entry, Table};
use knotbound_cli::{analyze, AnalyzeOptions, KnotInput};
use knotbound_core::algebra::{IntMatrix, LaurentPoly, QuadRing, QuadValue, Variable};
use knotbound_core::covering::{goeritz, linking_form, parse_matrix, Spectrum, SPECTRUM_CAP};
use knotbound_core::criteria::{
    analyze_diagram, combined_report, conjecture_scan, distance_bound, jones_u1_test, Conjecture, ConjectureStatus,
    KnotProfile,
};
use knotbound_core::diagram::{braid_closure, realize_dt, Diagram, DtCode, SmoothMode};
use knotbound_core::invariants::{
    golden_form, jones, jones_battery, kauffman_bracket, q_polynomial, root5, GoldenForm, JonesBattery, DEFAULT_BUDGET,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn load(name: &str) -> Table {
    read_table(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn profile(table: &Table, name: &str) -> Result<KnotProfile, String> {
    let entry = table.entry(name).ok_or_else(|| format!("{name} missing from fixture"))?;
    entry_profile(table, entry, DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))
}

fn frac(n: i64, d: &BigInt) -> BigRational {
    BigRational::new(BigInt::from(n), d.clone())
}

fn spectrum(p: &KnotProfile) -> Result<&Spectrum, String> {
    p.spectrum.as_ref().ok_or_else(|| "linking form not enumerated".to_string())
}

fn timed(limit: Duration, start: Instant, detail: String) -> Outcome {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:.2?}, limit {limit:?}");
    Ok(format!("{detail} ({took:.2?})"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let input = KnotInput::Dt("4 12 16 20 18 2 8 6 10 14".into());
    let opts = AnalyzeOptions { name: Some("10_105".into()), mirror_both: true, budget: DEFAULT_BUDGET, json: false };
    let a = analyze(&input, &opts).map_err(|e| e.to_string())?;
    let p = &a.profile;
    ensure!(p.det == BigInt::from(91), "det {}", p.det);
    ensure!(p.sigma.map(i64::abs) == Some(2), "sigma {:?}", p.sigma);
    ensure!(p.homology.factors == [BigInt::from(91)], "H1 = {}", p.homology);
    let s = spectrum(p)?;
    let two = frac(2, &p.det);
    ensure!(!s.has_generator_with(&two) && !s.has_generator_with(&-two.clone()), "a generator has ±2/91");
    ensure!(a.report.bound_of("linking-u1") == 2, "linking-u1 gives {}", a.report.bound_of("linking-u1"));
    ensure!(a.report.combined_lower == 2, "combined {}", a.report.combined_lower);

    // the printed example block: annotation line, row, and the matrix with its generator
    let block = load("example_10_105.txt");
    let row = block.row("10_105").ok_or("example row missing")?;
    ensure!(row.annotations == ["91 (0,0,0,1)"], "annotations {:?}", row.annotations);
    ensure!(row.reference_det == Some(BigInt::from(91)) && row.reference_sigma == Some(2), "example references");
    let m = parse_matrix(&std::fs::read_to_string(fixture("goeritz_10_105.txt")).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure!(m.determinant().map_err(|e| e.to_string())? == BigInt::from(91), "printed matrix det");
    let inv = m.rational_inverse().map_err(|e| e.to_string())?;
    let e4 = &inv[(3, 3)];
    ensure!(*e4.denom() == BigInt::from(91), "(0,0,0,1) has order {}", e4.denom());
    let printed = linking_form(&m).and_then(|l| l.self_linking_spectrum(SPECTRUM_CAP)).map_err(|e| e.to_string())?;
    ensure!(printed.generator_values() == s.generator_values() || printed.negated().generator_values() == s.generator_values(),
        "printed matrix and diagram give different linking forms");
    timed(
        Duration::from_secs(5),
        start,
        format!("det 91, sigma {}, H1 Z/91, no generator with ±2/91, combined u >= 2; lambda(e4,e4) = {e4}", p.sigma.unwrap()),
    )
}

fn criterion_2(examples: &Table) -> Outcome {
    let p = profile(examples, "8_16")?;
    ensure!(p.det == BigInt::from(35), "det {}", p.det);
    let s = spectrum(&p)?;
    ensure!(s.has_generator_with(&frac(11, &p.det)) || s.has_generator_with(&frac(24, &p.det)), "no generator with ±11/35");
    ensure!(!s.has_generator_with(&frac(2, &p.det)) && !s.has_generator_with(&frac(-2, &p.det)), "generator with ±2/35");
    let g = p.polynomials.as_ref().unwrap().special.golden_form;
    ensure!(g == GoldenForm::Conforming { negative: false, k: 1 }, "golden value {g}");
    let r = combined_report(&p, None).map_err(|e| e.to_string())?;
    ensure!(r.combined_lower == 2, "combined {}", r.combined_lower);
    Ok("det 35, generator with 11/35 mod ±, none with ±2/35, Q((sqrt5-1)/2) = +sqrt5, combined u >= 2".into())
}

fn criterion_3(examples: &Table) -> Outcome {
    let p = profile(examples, "9_49")?;
    ensure!(p.homology.factors == [BigInt::from(5), BigInt::from(5)], "H1 = {}", p.homology);
    ensure!(p.sigma.map(i64::abs) == Some(4), "sigma {:?}", p.sigma);
    let sv = &p.polynomials.as_ref().unwrap().special;
    ensure!(sv.q_at_golden == QuadValue::integer(QuadRing::Golden, -5), "Q((sqrt5-1)/2) = {}", sv.q_at_golden);
    let r = combined_report(&p, None).map_err(|e| e.to_string())?;
    ensure!(r.bound_of("q-golden") == 3, "q-golden {}", r.bound_of("q-golden"));
    ensure!(r.bound_of("sigma4-square") == 3, "sigma4-square {}", r.bound_of("sigma4-square"));
    ensure!(r.combined_lower == 3, "combined {}", r.combined_lower);

    let q = profile(examples, "12_664")?;
    let rq = combined_report(&q, None).map_err(|e| e.to_string())?;
    ensure!(q.homology.factors == [BigInt::from(13), BigInt::from(13)], "12_664 H1 = {}", q.homology);
    ensure!(q.sigma.map(i64::abs) == Some(4) && rq.combined_lower == 3, "12_664 bound {}", rq.combined_lower);
    Ok(format!("H1 Z/5 + Z/5, sigma {}, Q = -5, golden and square-determinant criteria each give 3; 12_664 also 3", p.sigma.unwrap()))
}

fn criterion_4(examples: &Table) -> Outcome {
    let q_row = ["8_16", "10_86", "10_106", "10_109", "10_116", "10_121", "9_49", "10_103"];
    let lambda_row = ["8_16", "10_86", "10_105", "10_106", "10_109", "10_116", "10_121", "9_49"];
    let mut out = Vec::new();
    for name in ["8_16", "9_49", "10_86", "10_103", "10_105", "10_106", "10_109", "10_116", "10_121"] {
        let entry = examples.entry(name).ok_or(format!("{name} missing"))?;
        let Entry::Prime(row) = entry else { return Err(format!("{name} is not a prime row")) };
        let p = profile(examples, name)?;
        ensure!(Some(&p.det) == row.reference_det.as_ref() && p.sigma == row.reference_sigma, "{name}: det/sigma differ from the fixture");
        let u = row.reference_u.ok_or(format!("{name} has no u"))?.value;
        let r = combined_report(&p, None).map_err(|e| e.to_string())?;
        ensure!(r.combined_lower == u, "{name}: combined {} != {u}", r.combined_lower);
        let q_fires = r.bound_of("q-golden") >= u;
        ensure!(q_fires == q_row.contains(&name), "{name}: golden-value criterion gives {}", r.bound_of("q-golden"));
        let lambda = if u == 3 { r.bound_of("sigma4-square") } else { r.bound_of("linking-u1") };
        ensure!((lambda >= u) == lambda_row.contains(&name), "{name}: linking-form criterion gives {lambda}");
        if name == "10_103" {
            ensure!(r.verdict("sigma4-square").is_some_and(|v| !v.applicable), "sigma4-square fires on 10_103");
        }
        out.push(format!("{name}={u}"));
    }
    Ok(format!("{} with matching Q and linking-form attributions", out.join(" ")))
}

fn criterion_5(examples: &Table) -> Outcome {
    let mut both = Vec::new();
    for name in ["7_4", "8_18", "9_15", "9_17", "9_37", "9_40", "9_46", "9_47", "9_48"] {
        let p = profile(examples, name)?;
        for q in [p.clone(), p.mirror().map_err(|e| e.to_string())?] {
            let v = jones_u1_test(&q.polynomials.as_ref().unwrap().jones, q.sigma.unwrap());
            ensure!(v.signed.is_some_and(|s| s.both()) && v.bound == Some(2), "{}: {}", name, v.witness);
        }
        both.push(name);
    }
    for name in ["6_1", "7_7"] {
        let p = profile(examples, name)?;
        for q in [p.clone(), p.mirror().map_err(|e| e.to_string())?] {
            let v = jones_u1_test(&q.polynomials.as_ref().unwrap().jones, q.sigma.unwrap());
            let s = v.signed.ok_or(format!("{name}: no signed verdict"))?;
            ensure!(s.either() && !s.both() && v.bound == Some(0), "{name}: {}", v.witness);
        }
    }
    Ok(format!("both signs excluded for {}; one sign only for 6_1, 7_7", both.join(" ")))
}

fn criterion_6(examples: &Table) -> Outcome {
    let start = Instant::now();
    let sums: Vec<&Entry> = examples.entries.iter().filter(|e| matches!(e, Entry::Sum(_))).collect();
    ensure!(sums.len() == 42, "{} composite rows", sums.len());
    let mut exact = 0;
    for e in &sums {
        let u = e.reference_u().ok_or(format!("{} has no u", e.name()))?;
        let p = entry_profile(examples, e, DEFAULT_BUDGET).map_err(|x| format!("{}: {x}", e.name()))?;
        let b = combined_report(&p, Some(u)).map_err(|x| x.to_string())?.combined_lower;
        ensure!(b <= u.value, "{}: bound {b} above {}", e.name(), u.value);
        ensure!(b >= u.lowest(), "{}: bound {b} below {}", e.name(), u.lowest());
        if u.uncertain == 0 {
            exact += 1;
        }
    }
    timed(Duration::from_secs(120), start, format!("{} rows within the '?' slack, {exact} rows without '?' exact", sums.len()))
}

/// Bracket by recursive smoothing with label merging.
fn oracle_bracket(d: &Diagram) -> LaurentPoly {
    fn go(mut xs: Vec<[usize; 4]>, loops: usize, exp: i64, out: &mut BTreeMap<i64, i64>) {
        let Some(c) = xs.pop() else {
            let mut poly = BTreeMap::from([(0i64, 1i64)]);
            for _ in 1..loops {
                let mut next = BTreeMap::new();
                for (&e, &k) in &poly {
                    *next.entry(e + 2).or_insert(0) -= k;
                    *next.entry(e - 2).or_insert(0) -= k;
                }
                poly = next;
            }
            for (e, k) in poly {
                *out.entry(e + exp).or_insert(0) += k;
            }
            return;
        };
        for (pairs, shift) in [([(0usize, 1usize), (2, 3)], 1i64), ([(0, 3), (1, 2)], -1)] {
            let (mut rest, mut cur, mut l) = (xs.clone(), c, loops);
            for (p, q) in pairs {
                let (x, y) = (cur[p], cur[q]);
                if x == y {
                    l += 1;
                    continue;
                }
                for e in rest.iter_mut().flat_map(|r| r.iter_mut()).chain(cur.iter_mut()) {
                    if *e == y {
                        *e = x;
                    }
                }
            }
            go(rest, l, exp + shift, out);
        }
    }
    let xs: Vec<[usize; 4]> = d.crossings().iter().map(|c| c.edges).collect();
    let loops = if xs.is_empty() { d.free_loops().max(1) } else { d.free_loops() };
    let mut out = BTreeMap::new();
    go(xs, loops, 0, &mut out);
    let terms: Vec<(i64, i64)> = out.into_iter().filter(|(_, v)| *v != 0).collect();
    LaurentPoly::from_terms(Variable::A, &terms)
}

fn random_knots(count: usize) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b6e6f74);
    let mut out = Vec::new();
    while out.len() < count {
        let strands = rng.gen_range(2..=4usize);
        let len = rng.gen_range(1..=8usize);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) { g } else { -g }
            })
            .collect();
        if let Ok(d) = braid_closure(strands, &word) {
            if d.is_knot() {
                out.push(d);
            }
        }
    }
    out
}

fn check_properties(d: &Diagram, crossing: usize) -> Result<(), String> {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let p = analyze_diagram(d, DEFAULT_BUDGET).map_err(|e| err(&e))?;
    let poly = p.polynomials.as_ref().unwrap();
    let sv = &poly.special;
    // (a) |V(-1)| = sqrt(Q(2)) = |det Goeritz|
    let g = goeritz(d).map_err(|e| err(&e))?;
    let gdet = if g.matrix.rows() == 0 { BigInt::one() } else { g.matrix.determinant().map_err(|e| err(&e))?.abs() };
    let v1 = poly.jones.eval_integer(-1).map_err(|e| err(&e))?.abs();
    let q2 = poly.q.eval_integer(2).map_err(|e| err(&e))?;
    ensure!(v1 == gdet && &v1 * &v1 == q2, "(a) |V(-1)| {v1}, Q(2) {q2}, Goeritz {gdet}");
    // (b) skein residuals
    if d.crossing_count() > 0 {
        let i = crossing % d.crossing_count();
        let sw = d.switch_crossing(i).map_err(|e| err(&e))?;
        let v = jones(d, DEFAULT_BUDGET).map_err(|e| err(&e))?;
        let w = jones(&sw, DEFAULT_BUDGET).map_err(|e| err(&e))?;
        let v0 = jones(&d.smooth_crossing(i, SmoothMode::Oriented).map_err(|e| err(&e))?, DEFAULT_BUDGET).map_err(|e| err(&e))?;
        let (vp, vm) = if d.crossings()[i].sign.value() > 0 { (v, w) } else { (w, v) };
        let t = |e4: i64| LaurentPoly::monomial_quarter(Variable::T, 1, e4);
        let residual = &(&(&t(-4) * &vp) - &(&t(4) * &vm)) - &(&(&t(2) - &t(-2)) * &v0);
        ensure!(residual.is_zero(), "(b) Jones skein residual {residual}");
        let q = |x: &Diagram| q_polynomial(x, DEFAULT_BUDGET).map_err(|e| err(&e));
        let qa = q(&d.smooth_crossing(i, SmoothMode::A).map_err(|e| err(&e))?)?;
        let qb = q(&d.smooth_crossing(i, SmoothMode::B).map_err(|e| err(&e))?)?;
        let z = LaurentPoly::monomial(Variable::Z, 1, 1);
        let residual = &(&q(d)? + &q(&sw)?) - &(&z * &(&qa + &qb));
        ensure!(residual.is_zero(), "(b) Q skein residual {residual}");
    }
    // (c) congruence battery
    ensure!(jones_battery(&poly.jones) == JonesBattery::Passes, "(c) battery fails for V = {}", poly.jones);
    // (d) 3- and 5-ranks
    let count = |m: u32| p.homology.factors.iter().filter(|f| f.is_multiple_of(&BigInt::from(m))).count() as u32;
    let GoldenForm::Conforming { negative, k } = sv.golden_form else { return Err("(d) golden value not ±sqrt5^k".into()) };
    ensure!(sv.traczyk_d == count(3) && k == count(5), "(d) d {} k {k} vs H1 {}", sv.traczyk_d, p.homology);
    // (e) sign of the golden value for 5 not dividing det
    if !p.det.is_multiple_of(&BigInt::from(5)) {
        let r = (&p.det % 5u32).to_string();
        ensure!(negative != (r == "1" || r == "4"), "(e) golden sign {} with det {}", negative, p.det);
    }
    // (f) det and sigma mod 4
    let sigma = p.sigma.unwrap();
    ensure!(((&p.det % 4u32) == BigInt::one()) == (sigma.rem_euclid(4) == 0), "(f) det {} sigma {sigma}", p.det);
    // (g) two bracket computations
    let b = kauffman_bracket(d, DEFAULT_BUDGET).map_err(|e| err(&e))?;
    ensure!(b == oracle_bracket(d), "(g) state sum and skein recursion differ");
    Ok(())
}

fn criterion_7(all: &Table) -> Outcome {
    let mut count = 0;
    for (i, row) in all.rows().enumerate() {
        let d = row_diagram(row).map_err(|e| e.to_string())?;
        check_properties(&d, i).map_err(|e| format!("{}: {e}", row.name()))?;
        count += 1;
    }
    let random = random_knots(50);
    for (i, d) in random.iter().enumerate() {
        ensure!(d.crossing_count() <= 8, "random diagram with {} crossings", d.crossing_count());
        check_properties(d, i).map_err(|e| format!("random diagram {i} ({}): {e}", d.to_pd_text().replace('\n', " ")))?;
    }
    Ok(format!("(a)-(g) hold on {count} fixture knots and {} random diagrams", random.len()))
}

fn criterion_8(examples: &Table) -> Outcome {
    let a = profile(examples, "5_1")?;
    let b = profile(examples, "4_1")?;
    let d = distance_bound(&a.det, a.sigma.unwrap(), &b.det, b.sigma.unwrap());
    ensure!(d == Some(3), "distance bound {d:?}");
    Ok(format!("det {} sigma {} vs det {} sigma {}: distance >= 3", a.det, a.sigma.unwrap(), b.det, b.sigma.unwrap()))
}

/// Seifert matrices from KnotInfo for knots whose conjecture findings
/// need a second opinion.
const SEIFERT: &[(&str, &str)] = &[(
    "10_56",
    "[[-1,0,-1,0,0,0],[0,1,0,0,0,0],[0,0,-2,0,0,0],[0,-1,-1,-1,-1,-1],[0,-1,-1,0,-1,0],[0,-1,-1,0,-1,-1]]",
)];

/// Tabulated Q polynomials, independent of the diagram fixtures.
fn reference_q(name: &str) -> Option<LaurentPoly> {
    let text = include_str!("../../core/tests/data/knotinfo_le10.txt");
    let line = text.lines().find(|l| l.split('|').next() == Some(name))?;
    let terms: Vec<(i64, i64)> = line
        .split('|')
        .nth(4)?
        .split_whitespace()
        .map(|t| {
            let (e, c) = t.split_once(':').unwrap();
            (e.parse().unwrap(), c.parse().unwrap())
        })
        .collect();
    Some(LaurentPoly::from_terms(Variable::Z, &terms))
}

/// Recomputes a C3 finding from a Seifert matrix `S`: `H1` is presented by
/// `S + S^T` and the linking form is `±(S + S^T)^{-1}`.
fn confirm_c3(name: &str) -> Result<String, String> {
    let s = SEIFERT.iter().find(|(n, _)| *n == name).ok_or(format!("no independent data for {name}"))?.1;
    let s = parse_matrix(s).map_err(|e| e.to_string())?;
    let n = s.rows();
    let mut a = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = &s[(i, j)] + &s[(j, i)];
        }
    }
    let det = a.determinant().map_err(|e| e.to_string())?.abs();
    let inv = a.rational_inverse().map_err(|e| e.to_string())?;
    let mut generator = None;
    'search: for i in 0..n {
        for j in i..n {
            let x: Vec<BigInt> = (0..n).map(|k| BigInt::from(i64::from(k == i) + i64::from(k == j && j != i))).collect();
            let y: Vec<BigRational> = (0..n)
                .map(|r| (0..n).fold(BigRational::zero(), |acc, c| acc + &inv[(r, c)] * BigRational::from_integer(x[c].clone())))
                .collect();
            let order = y.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
            if order == det {
                let lam: BigRational = (0..n).fold(BigRational::zero(), |acc, r| acc + &y[r] * BigRational::from_integer(x[r].clone()));
                generator = Some(lam);
                break 'search;
            }
        }
    }
    let lam = generator.ok_or(format!("{name}: no generator found"))?;
    let mod1 = |q: BigRational| q.clone() - q.floor();
    let values: Vec<BigRational> = (1..)
        .take_while(|a: &i64| BigInt::from(*a) < det)
        .filter(|a| BigInt::from(*a).gcd(&det).is_one())
        .map(|a| mod1(&lam * BigRational::from_integer(BigInt::from(a * a))))
        .collect();
    let two = mod1(frac(2, &det));
    let minus_two = mod1(frac(-2, &det));
    let exists = values.contains(&two) || values.contains(&minus_two);
    let q = reference_q(name).ok_or(format!("no tabulated Q for {name}"))?;
    let golden = QuadValue::eval(&q, QuadRing::Golden).map_err(|e| e.to_string())?;
    let plus = root5();
    let expected = if exists { -plus.clone() } else { plus };
    ensure!(golden != expected, "{name}: independent data agree with the conjecture");
    Ok(format!("{name}: Seifert form of order {det} has ±2/{det}: {exists}, tabulated Q((sqrt5-1)/2) = {}", golden_form(&golden)))
}

/// Returns the criterion line and whether a red result is an independently
/// confirmed property of the data rather than a defect.
fn criterion_9(all: &Table) -> (Outcome, bool) {
    let start = Instant::now();
    let profiles: Result<Vec<KnotProfile>, String> =
        all.entries.iter().map(|e| entry_profile(all, e, DEFAULT_BUDGET).map_err(|x| format!("{}: {x}", e.name()))).collect();
    let profiles = match profiles {
        Ok(p) => p,
        Err(e) => return (Err(e), false),
    };
    let findings = conjecture_scan(&profiles);
    let took = start.elapsed();
    if took > Duration::from_secs(300) {
        return (Err(format!("took {took:.2?}")), false);
    }
    let mut support: BTreeMap<Conjecture, usize> = BTreeMap::new();
    let mut against = Vec::new();
    for f in &findings {
        match f.status {
            ConjectureStatus::Consistent => *support.entry(f.conjecture).or_default() += 1,
            ConjectureStatus::Counterexample => against.push(f),
        }
    }
    let summary: Vec<String> = support.iter().map(|(c, n)| format!("{c}:{n}")).collect();
    if against.is_empty() {
        return (Ok(format!("0 counterexamples over {} knots; support {} ({took:.2?})", profiles.len(), summary.join(" "))), false);
    }
    let mut confirmed = true;
    let mut notes = Vec::new();
    for f in &against {
        let check = if f.conjecture == Conjecture::C3 { confirm_c3(&f.knot) } else { Err("no independent check".into()) };
        match check {
            Ok(n) => notes.push(format!("{} at {} confirmed ({n})", f.conjecture, f.knot)),
            Err(e) => {
                confirmed = false;
                notes.push(format!("{} at {} NOT confirmed: {e}", f.conjecture, f.knot));
            }
        }
    }
    (Err(format!("{} counterexample(s): {}; support {}", against.len(), notes.join("; "), summary.join(" "))), confirmed)
}

fn fixtures_validated(examples: &Table, all: &Table) -> Outcome {
    for (name, t) in [("worked_examples.txt", examples), ("knots_le10.txt", all)] {
        for r in verify_table(t, DEFAULT_BUDGET) {
            ensure!(
                matches!(r.status, RowStatus::Pass | RowStatus::Open),
                "{name}: {}",
                r.line()
            );
        }
    }
    let dt = DtCode::parse("4 6 2").map_err(|e| e.to_string())?;
    ensure!(realize_dt(&dt).is_ok(), "trefoil DT");
    Ok(format!("{} + {} rows agree with their reference det and sigma", examples.entries.len(), all.entries.len()))
}

fn main() -> ExitCode {
    let examples = load("worked_examples.txt");
    let all = load("knots_le10.txt");
    let mut failed = false;
    let mut report = |label: &str, outcome: Outcome, tolerated: bool| {
        match outcome {
            Ok(detail) => println!("{label}: PASS  {detail}"),
            Err(detail) => {
                println!("{label}: FAIL  {detail}");
                if !tolerated {
                    failed = true;
                }
            }
        }
    };
    report("fixtures  ", fixtures_validated(&examples, &all), false);
    report("criterion 1", criterion_1(), false);
    report("criterion 2", criterion_2(&examples), false);
    report("criterion 3", criterion_3(&examples), false);
    report("criterion 4", criterion_4(&examples), false);
    report("criterion 5", criterion_5(&examples), false);
    report("criterion 6", criterion_6(&examples), false);
    report("criterion 7", criterion_7(&all), false);
    report("criterion 8", criterion_8(&examples), false);
    let (outcome, confirmed) = criterion_9(&all);
    report("criterion 9", outcome, confirmed);
    if confirmed {
        println!("criterion 9 is red because the data contradict a conjecture, not because of a computation; the counterexample is a FLAG");
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
