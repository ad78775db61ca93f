//! End-to-end checks of the genus-four, q = 7 result. Each criterion prints
//! one PASS/FAIL line; the test fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use curvebound::bounds;
use curvebound::covers::{self, SplittingProfile};
use curvebound::curves::{self, CurveSpec};
use curvebound::exactalg::{resultant, IntPolynomial};
use curvebound::exclusion::{self, Verdict};
use curvebound::report::{self, ReplayOptions, Status};
use curvebound::weilsearch::{self, SearchConstraints, DEFAULT_NODE_CAP};
use curvebound::zeta;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

type Outcome = Result<String, String>;

const C: &str = "y^2 = x^3 + 3; z^2 = 6*x^3 + 3 over GF(7)";

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
}

fn lin(r: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[r, 1])
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn curve(text: &str) -> Result<CurveSpec, String> {
    curves::parse_curve(text).map_err(|e| format!("{text}: {e}"))
}

fn count1(text: &str) -> Result<u64, String> {
    let spec = curve(text)?;
    let v = match spec.kind() {
        curves::CurveKind::FiberProduct { .. } => curves::fiber_point_counts(&spec, 1),
        _ => curves::hyperelliptic_counts(&spec, 1),
    }
    .map_err(|e| e.to_string())?;
    Ok(v.counts[0])
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for (text, expected) in [
        ("y^2 = x^3 + 3 over GF(7)", 13),
        ("y^2 = -x^6 + 2 over GF(7)", 14),
        ("y^2 = x^3 + x + 4 over GF(7)", 10),
        ("y^2 = x^3 + 3*x + 4 over GF(7)", 10),
        (C, 24),
    ] {
        let n = count1(text)?;
        ensure(n == expected, || format!("{text}: N = {n}, expected {expected}"))?;
    }
    // The sextic has no rational points at infinity; both become rational
    // over F_49, where they form one place of degree 2.
    let sextic = curve("y^2 = -x^6 + 2 over GF(7)")?;
    let affine1 = curves::hyperelliptic_count_bruteforce(&sextic, 1).map_err(|e| e.to_string())?;
    let v = curves::hyperelliptic_counts(&sextic, 2).map_err(|e| e.to_string())?;
    let places = v.places().map_err(|e| e.to_string())?;
    ensure(affine1 == 14, || format!("brute-force count {affine1}"))?;
    ensure(places[1] == BigInt::from(19), || format!("a_2 = {}", places[1]))?;
    let lead_is_square = (1..7u64).any(|y| y * y % 7 == 6);
    ensure(!lead_is_square, || "-1 is a square mod 7".to_string())?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("N = 13, 14, 10, 10, 24; sextic a_2 = 19 ({:?})", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let spec = curve(C)?;
    ensure(spec.genus() == 4, || format!("genus {}", spec.genus()))?;
    let counts = curves::fiber_point_counts(&spec, 4).map_err(|e| e.to_string())?;
    let big: Vec<BigInt> = counts.counts.iter().map(|&n| BigInt::from(n)).collect();
    let wd = zeta::WeilData::from_counts(7, 4, &big, 10).map_err(|e| e.to_string())?;
    let expected = &poly(&[1, 1, 7]) * &poly(&[1, 5, 7]).pow(3);
    ensure(wd.l == expected, || format!("L = {}", wd.l))?;
    let low: Vec<BigInt> = wd.l.coeffs()[..3].to_vec();
    ensure(low == ints(&[1, 16, 118]), || format!("low coefficients {low:?}"))?;
    ensure(wd.places[..4] == ints(&[24, 3, 120, 558]), || format!("a = {:?}", wd.places))?;
    ensure(zeta::validate(&wd).passed(), || "validation failed".to_string())?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("L = {}, a = [24, 3, 120, 558] ({:?})", wd.l, start.elapsed()))
}

/// `L` from the first `g` counts must predict counts `g+1 .. 2g`.
fn predicts(spec: &CurveSpec, counts: &[u64]) -> Result<(), String> {
    let g = spec.genus() as usize;
    let big: Vec<BigInt> = counts.iter().map(|&n| BigInt::from(n)).collect();
    let l = zeta::l_from_counts(spec.p(), g, &big[..g]).map_err(|e| e.to_string())?;
    let predicted = zeta::counts_from_l(spec.p(), &l, counts.len());
    ensure(predicted == big, || format!("{spec}: predicted {predicted:?}, counted {counts:?}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let c = curve(C)?;
    let fiber = curves::fiber_point_counts(&c, 8).map_err(|e| e.to_string())?.counts;
    // Direct scans of the system up to F_2401.
    let mut scanned = Vec::new();
    for n in 1..=4 {
        let affine = curves::affine_system_count(&c, n).map_err(|e| e.to_string())?;
        let inf = curves::points_at_infinity(&c, n).map_err(|e| e.to_string())?;
        scanned.push(affine + inf);
    }
    ensure(scanned[..] == fiber[..4], || format!("scan {scanned:?} vs fiber {:?}", &fiber[..4]))?;
    // Each hyperelliptic curve: brute force to depth 2g, predicted from depth g.
    let mut checked = 0;
    let mut subcovers = c.subcovers();
    subcovers.extend([
        curve("y^2 = -x^6 + 2 over GF(7)")?,
        curve("y^2 = x^3 + x + 4 over GF(7)")?,
        curve("y^2 = x^3 + 3*x + 4 over GF(7)")?,
    ]);
    let mut sub_l = Vec::new();
    for spec in &subcovers {
        let g = spec.genus() as usize;
        let brute: Vec<u64> = (1..=2 * g)
            .map(|n| curves::hyperelliptic_count_bruteforce(spec, n))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        predicts(spec, &brute)?;
        let big: Vec<BigInt> = brute.iter().map(|&n| BigInt::from(n)).collect();
        sub_l.push(zeta::l_from_counts(7, g, &big[..g]).map_err(|e| e.to_string())?);
        checked += 1;
    }
    // The genus-four curve: its L from depth 4 predicts depths 5..8 of the
    // fiber counts, and equals the product of the subcover L-polynomials
    // obtained from the scans above.
    predicts(&c, &fiber)?;
    let product = sub_l[..3].iter().fold(IntPolynomial::one(), |acc, l| &acc * l);
    let big: Vec<BigInt> = fiber.iter().map(|&n| BigInt::from(n)).collect();
    let l = zeta::l_from_counts(7, 4, &big[..4]).map_err(|e| e.to_string())?;
    ensure(l == product, || format!("L = {l}, product of subcovers {product}"))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "scan = fiber for n <= 4; {checked} curves predicted to depth 2g; C predicted to depth 8 ({:?})",
        start.elapsed()
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let c = SearchConstraints::new(7, 4, 25).with_unit_resultant_filter();
    let found = weilsearch::enumerate_real_weil(&c).map_err(|e| e.to_string())?;
    let expected = &lin(2) * &lin(5).pow(3);
    ensure(found.len() == 1 && found[0].h == expected, || {
        format!("found {:?}", found.iter().map(|w| w.factored()).collect::<Vec<_>>())
    })?;
    ensure(found[0].places[..4] == ints(&[25, 1, 115, 576]), || format!("a = {:?}", found[0].places))?;
    let unfiltered = weilsearch::enumerate_real_weil(&SearchConstraints::new(7, 4, 25)).map_err(|e| e.to_string())?;
    ensure(unfiltered.iter().any(|w| w.h == expected), || "missing without the filter".to_string())?;
    within(start, Duration::from_secs(10))?;
    Ok(format!(
        "{} with a = [25, 1, 115, 576]; {} candidates before the unit-resultant filter ({:?})",
        found[0].factored(),
        unfiltered.len(),
        start.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let c = SearchConstraints::new(7, 10, 45).with_lower(2, 3);
    let expected = &lin(3).pow(3) * &lin(4).pow(7);
    let forward = c
        .admits(&expected, &[(lin(3), 3), (lin(4), 7)])
        .ok_or("forward verification rejects (t+3)^3(t+4)^7")?;
    ensure(forward[..4] == ints(&[45, 3, 17, 807]), || format!("a = {forward:?}"))?;
    let forward_time = start.elapsed();
    ensure(forward_time <= Duration::from_secs(1), || format!("forward check took {forward_time:?}"))?;
    let found = weilsearch::enumerate_real_weil(&c).map_err(|e| e.to_string())?;
    ensure(found.len() == 1 && found[0].h == expected, || {
        format!("found {:?}", found.iter().map(|w| w.factored()).collect::<Vec<_>>())
    })?;
    let direct = weilsearch::enumerate_direct(&c, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    ensure(direct == vec![expected.clone()], || format!("direct enumeration {direct:?}"))?;
    within(start, Duration::from_secs(30 * 60))?;
    Ok(format!(
        "(t+3)^3*(t+4)^7 with a = [45, 3, 17, 807]; table and direct searches agree ({:?})",
        start.elapsed()
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let r = resultant(&lin(2), &lin(5)).map_err(|e| e.to_string())?;
    ensure(r == BigInt::from(3), || format!("Res(t+2, t+5) = {r}"))?;
    let h4 = &lin(2) * &lin(5).pow(3);
    let hl = exclusion::howe_lauter_test(&h4, -2).map_err(|e| e.to_string())?;
    ensure(hl.verdict == Verdict::EllipticMap { mu: -2, r: BigInt::from(3) }, || format!("{:?}", hl.verdict))?;
    let h10 = &lin(3).pow(3) * &lin(4).pow(7);
    let serre = exclusion::serre_test(&h10, &[(lin(3), 3), (lin(4), 7)]).map_err(|e| e.to_string())?;
    let Verdict::Excluded { resultant: res, .. } = &serre.verdict else {
        return Err(format!("Serre verdict {:?}", serre.verdict));
    };
    ensure(res.abs().is_one() && serre.witness_holds(&h10), || format!("resultant {res}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("Res = 3, elliptic map degree divides 3, Serre resultant {res} ({:?})", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let an = covers::nongalois_profiles(25, 10, 4, 1, Some(1), 7).map_err(|e| e.to_string())?;
    let rows: [((u64, u64, u64, u64, u64), u64, &[u64]); 5] = [
        ((8, 0, 1, 0, 1), 48, &[10]),
        ((8, 0, 0, 1, 1), 50, &[7, 9]),
        ((7, 2, 0, 0, 1), 48, &[8, 10]),
        ((7, 1, 1, 1, 0), 47, &[9]),
        ((6, 3, 1, 0, 0), 45, &[10]),
    ];
    for ((a, b, b_prime, c, c_prime), n_bar, genera) in rows {
        let profile = SplittingProfile { a, b, b_prime, c, c_prime };
        let case = an.cases.iter().find(|x| x.profile == profile).ok_or(format!("{profile} missing"))?;
        ensure(case.closure_points() == n_bar, || format!("{profile}: N = {}", case.closure_points()))?;
        let computed = case.genera();
        ensure(genera.iter().all(|g| computed.contains(g)), || format!("{profile}: genera {computed:?}"))?;
    }
    ensure(an.cases.len() == 5, || format!("{} cases", an.cases.len()))?;
    let excluded = SplittingProfile { a: 7, b: 1, b_prime: 2, c: 0, c_prime: 0 };
    ensure(an.excluded.iter().any(|e| e.profile == excluded), || "(7,1,2,0,0) not excluded".to_string())?;
    let unfiltered = covers::nongalois_profiles(25, 10, 4, 1, None, 7).map_err(|e| e.to_string())?;
    ensure(unfiltered.cases.iter().any(|c| c.profile == excluded), || "(7,1,2,0,0) not generated".to_string())?;
    let galois = covers::galois_split_feasible(25, 10, 4, 1);
    ensure(galois.len() == 1, || format!("{} Galois options", galois.len()))?;
    let g = &galois[0];
    ensure(
        (g.split, g.ramified, g.inert) == (8, 1, 1) && g.residual_places == vec![vec![2]],
        || g.to_string(),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("five rows, (7,1,2,0,0) excluded, Galois {g} ({:?})", start.elapsed()))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let half = BigRational::new(1.into(), 2.into());
    let weil = bounds::bound_from_u(7, 4, &[half]).map_err(|e| e.to_string())?;
    ensure(
        weil.bound_rational == BigRational::from_integer(8.into()) && weil.bound_sqrt == BigRational::from_integer(8.into()),
        || format!("bound {}", weil.bound_text()),
    )?;
    let mut certs = vec![weil];
    let g4 = bounds::optimize_u(7, 4, 5, bounds::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(g4.floor == BigInt::from(25), || format!("g = 4: floor {}", g4.floor))?;
    let g10 = bounds::optimize_u(7, 10, 6, bounds::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(g10.floor <= BigInt::from(47), || format!("g = 10: floor {}", g10.floor))?;
    let g9 = bounds::optimize_u(7, 9, 6, bounds::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(g9.floor <= BigInt::from(44), || format!("g = 9: floor {}", g9.floor))?;
    let m48 = bounds::min_genus(7, 48, bounds::DEFAULT_TERMS, 50).map_err(|e| e.to_string())?;
    let m45 = bounds::min_genus(7, 45, bounds::DEFAULT_TERMS, 50).map_err(|e| e.to_string())?;
    ensure(m48.genus >= 11, || format!("min genus for 48 points: {}", m48.genus))?;
    ensure(m45.genus >= 10, || format!("min genus for 45 points: {}", m45.genus))?;
    let (floors, g48, g45) = (
        [g4.floor.clone(), g10.floor.clone(), g9.floor.clone()],
        m48.genus,
        m45.genus,
    );
    certs.extend([g4, g10, g9]);
    certs.extend(m48.certificates);
    certs.extend(m45.certificates);
    let bad: Vec<u64> = certs.iter().filter(|c| !c.verify()).map(|c| c.g).collect();
    ensure(bad.is_empty(), || format!("certificates fail to verify at genus {bad:?}"))?;
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "Weil 8 + 8*sqrt(7); floors {} (g=4), {} (g=10), {} (g=9); min genus {g48} (48 pts), {g45} (45 pts); {} certificates verified ({:?})",
        floors[0],
        floors[1],
        floors[2],
        certs.len(),
        start.elapsed()
    ))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    common::resultant_laws(1000)?;
    common::sturm_matches_grid(1000)?;
    common::zeta_round_trips(500)?;
    let compared = common::search_matches_oracle()?;
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "1000 resultant triples, 1000 Sturm cases, 500 zeta round trips, {compared} search/oracle comparisons ({:?})",
        start.elapsed()
    ))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let run = || report::replay_theorem(ReplayOptions::default()).map_err(|e| format!("step {}: {}", e.step, e.witness));
    let first = run()?;
    let second = run()?;
    ensure(first.verdict == Status::Verified, || format!("verdict {:?}", first.verdict))?;
    let external = first.steps.iter().filter(|s| s.status == Status::External).count();
    ensure(external == 1 && first.external_steps == 1, || format!("{external} external steps"))?;
    let json = |r: &report::ProofReport| serde_json::to_string_pretty(r).map_err(|e| e.to_string());
    ensure(json(&first)? == json(&second)?, || "JSON differs between runs".to_string())?;
    ensure(first.to_text() == second.to_text(), || "text differs between runs".to_string())?;
    let flagged: Vec<&serde_json::Value> = first
        .steps
        .iter()
        .filter_map(|s| s.outputs.get("patterns").and_then(|p| p.as_array()))
        .flatten()
        .filter(|item| item["status"] == "FLAGGED")
        .collect();
    ensure(
        flagged.len() == 1 && flagged[0]["genus"] == 7 && flagged[0]["N"] == 48,
        || format!("flagged items {flagged:?}"),
    )?;
    let g7 = bounds::optimize_u(7, 7, 6, bounds::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(g7.floor <= BigInt::from(47) && g7.verify(), || format!("g = 7: floor {}", g7.floor))?;
    Ok(format!(
        "VERIFIED, 1 external step, deterministic; genus-7 pattern FLAGGED and bounded by {} ({:?})",
        g7.floor,
        start.elapsed()
    ))
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = Vec::new();
    for (i, criterion) in criteria.iter().enumerate() {
        match criterion() {
            Ok(summary) => println!("criterion {}: PASS {summary}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
