use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use curvebound::bounds;
use curvebound::covers;
use curvebound::curves::{self, parse_factored, parse_polynomial, CurveKind, CurveSpec};
use curvebound::exactalg::IntPolynomial;
use curvebound::exclusion::{self, Verdict};
use curvebound::json::parse_fraction;
use curvebound::report::{self, ReplayOptions, Status};
use curvebound::weilsearch::{self, SearchConstraints, DEFAULT_NODE_CAP};
use curvebound::zeta::{self, WeilData};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "curvebound", version, about = "Exact point counts, zeta functions and point bounds for curves over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Count points over F_q, .., F_{q^D}.
    Count {
        /// e.g. "y^2 = x^3 + 3 over GF(7)" or "y^2 = x^3 + 3; z^2 = 6*x^3 + 3 over GF(7)".
        curve: String,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Zeta function data of a curve, or of a real Weil polynomial with --h.
    Zeta {
        curve: Option<String>,
        /// Real Weil polynomial in t, factored or expanded.
        #[arg(long, requires = "q", conflicts_with = "curve")]
        h: Option<String>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = zeta::DEFAULT_DEPTH)]
        depth: usize,
        #[command(flatten)]
        out: Output,
    },
    /// List real Weil polynomials with the given genus and number of points.
    Enumerate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: usize,
        #[arg(long = "N")]
        n: i64,
        /// Lower bound a_d >= min, as d:min. Repeatable.
        #[arg(long = "a", value_parser = parse_lower)]
        a: Vec<(usize, i64)>,
        /// Number of place counts checked for nonnegativity.
        #[arg(long, default_value_t = zeta::DEFAULT_DEPTH)]
        depth: usize,
        /// Drop polynomials that split into two factors with resultant +-1.
        #[arg(long)]
        serre_filter: bool,
        /// Also run the table-free enumeration and compare.
        #[arg(long)]
        long: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Resultant tests on a factored real Weil polynomial.
    Exclude {
        /// e.g. "(t+3)^3*(t+4)^7".
        h: String,
        /// Also test for a map to the elliptic curve with real Weil polynomial t - mu.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Splitting profiles of degree-3 coverings of a curve E.
    Covers {
        #[arg(long = "NX")]
        n_x: u64,
        #[arg(long = "NE")]
        n_e: u64,
        #[arg(long = "gX")]
        g_x: u64,
        #[arg(long = "gE")]
        g_e: u64,
        /// Number of degree-2 places of X; omit for no bound.
        #[arg(long)]
        a2: Option<u64>,
        #[arg(long, default_value_t = 7)]
        q: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Explicit-formula upper bound on the number of points.
    Bound {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: u64,
        /// Number of cosine terms of the trial function.
        #[arg(long = "D", default_value_t = bounds::DEFAULT_TERMS)]
        d: usize,
        /// Use these coefficients instead of optimizing, e.g. "2/3,1/5".
        #[arg(long)]
        u: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Smallest genus whose bound allows N points.
    MinGenus {
        #[arg(long)]
        q: u64,
        #[arg(long = "N")]
        n: u64,
        #[arg(long = "D", default_value_t = bounds::DEFAULT_TERMS)]
        d: usize,
        #[arg(long, default_value_t = 50)]
        cap: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Check every step of N_7(4) = 24 and print the report.
    ReplayTheorem {
        #[arg(long, value_enum, default_value_t = Switch::On)]
        a2_filter: Switch,
        /// Do not echo the details of the externally imported step.
        #[arg(long)]
        skip_external: bool,
        /// Cross-check the genus-10 search with the table-free enumeration.
        #[arg(long)]
        long: bool,
        #[arg(long, conflicts_with = "json")]
        markdown: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

fn parse_lower(s: &str) -> Result<(usize, i64), String> {
    let (d, m) = s.split_once(':').ok_or("expected d:min")?;
    let d = d.trim().parse().map_err(|_| format!("bad degree {d:?}"))?;
    let m = m.trim().parse().map_err(|_| format!("bad bound {m:?}"))?;
    Ok((d, m))
}

/// What a command prints, and whether its verdict is positive.
struct Outcome {
    json: Value,
    text: String,
    positive: bool,
}

fn counts_of(spec: &CurveSpec, depth: usize) -> Result<Vec<u64>> {
    let v = match spec.kind() {
        CurveKind::FiberProduct { .. } => curves::fiber_point_counts(spec, depth)?,
        _ => curves::hyperelliptic_counts(spec, depth)?,
    };
    Ok(v.counts)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn count(curve: &str, depth: usize) -> Result<Outcome> {
    let spec = curves::parse_curve(curve)?;
    let counts = counts_of(&spec, depth)?;
    let big: Vec<BigInt> = counts.iter().map(|&n| BigInt::from(n)).collect();
    let places = curvebound::exactalg::mobius_a_from_n(&big)?;
    Ok(Outcome {
        json: json!({
            "curve": spec.to_string(),
            "q": spec.p(),
            "genus": spec.genus(),
            "N": counts,
            "a": places.iter().map(curvebound::json::bigint_value).collect::<Vec<_>>(),
        }),
        text: format!(
            "{spec}\ngenus {}\nN = [{}]\na = [{}]\n",
            spec.genus(),
            join(&counts),
            join(&places)
        ),
        positive: true,
    })
}

fn zeta_outcome(wd: WeilData, curve: Option<String>) -> Outcome {
    let report = zeta::validate(&wd);
    let mut text = String::new();
    if let Some(c) = &curve {
        text += &format!("{c}\n");
    }
    text += &format!(
        "q = {}, g = {}\nL(t) = {}\nh(t) = {}\nN = [{}]\na = [{}]\n",
        wd.q,
        wd.g,
        wd.l,
        wd.h,
        join(&wd.counts),
        join(&wd.places)
    );
    for c in &report.checks {
        text += &format!("{} {}: {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    let mut json = serde_json::to_value(&wd).expect("serializable");
    if let (Some(c), Value::Object(m)) = (&curve, &mut json) {
        m.insert("curve".to_string(), Value::String(c.clone()));
    }
    if let Value::Object(m) = &mut json {
        m.insert("checks".to_string(), serde_json::to_value(&report.checks).expect("serializable"));
    }
    Outcome {
        json,
        text,
        positive: report.passed(),
    }
}

fn factored(text: &str) -> Result<(IntPolynomial, Vec<(IntPolynomial, u32)>)> {
    let factors = parse_factored(text, "t")?;
    let h = factors.iter().fold(IntPolynomial::one(), |acc, (f, m)| &acc * &f.pow(*m));
    Ok((h, factors))
}

fn zeta_cmd(curve: Option<String>, h: Option<String>, q: Option<u64>, depth: usize) -> Result<Outcome> {
    if let Some(h) = h {
        let q = q.expect("clap enforces --q");
        let poly = match factored(&h) {
            Ok((p, _)) => p,
            Err(_) => parse_polynomial(&h, "t")?,
        };
        return Ok(zeta_outcome(WeilData::from_h(q, &poly, depth)?, None));
    }
    let curve = curve.ok_or_else(|| anyhow!("give a curve or --h"))?;
    let spec = curves::parse_curve(&curve)?;
    let g = spec.genus() as usize;
    let counts = counts_of(&spec, g.max(1))?;
    let big: Vec<BigInt> = counts.iter().take(g).map(|&n| BigInt::from(n)).collect();
    let wd = WeilData::from_counts(spec.p(), g, &big, depth.max(2 * g))?;
    Ok(zeta_outcome(wd, Some(spec.to_string())))
}

#[allow(clippy::too_many_arguments)]
fn enumerate(q: u64, g: usize, n: i64, lower: &[(usize, i64)], depth: usize, serre: bool, long: bool) -> Result<Outcome> {
    let mut c = SearchConstraints::new(q, g, n).with_depth(depth);
    for &(d, m) in lower {
        c = c.with_lower(d, m);
    }
    if serre {
        c = c.with_unit_resultant_filter();
    }
    let found = weilsearch::enumerate_real_weil(&c)?;
    let mut text = format!("{} candidate(s)\n", found.len());
    for w in &found {
        text += &format!("{}  a = [{}]\n", w.factored(), join(&w.places));
    }
    let mut json = json!({"constraints": c, "candidates": found});
    let mut positive = true;
    if long {
        let direct = weilsearch::enumerate_direct(&c, DEFAULT_NODE_CAP)?;
        let agree = direct == found.iter().map(|w| w.h.clone()).collect::<Vec<_>>();
        text += &format!("table-free enumeration: {} candidate(s), {}\n", direct.len(), if agree { "agrees" } else { "DISAGREES" });
        json["direct_agrees"] = Value::Bool(agree);
        positive = agree;
    }
    Ok(Outcome { json, text, positive })
}

fn describe(verdict: &Verdict) -> String {
    match verdict {
        Verdict::Excluded { h1, h2, resultant } => {
            format!("EXCLUDED: Res({h1}, {h2}) = {resultant}")
        }
        Verdict::EllipticMap { mu, r } => format!(
            "ELLIPTIC_MAP: maps to an elliptic curve with real Weil polynomial {} by a map of degree dividing {r}",
            IntPolynomial::linear(*mu)
        ),
        Verdict::NoConclusion => "NO_CONCLUSION".to_string(),
    }
}

fn exclude(h: &str, mu: Option<i64>) -> Result<Outcome> {
    let (poly, factors) = factored(h)?;
    let serre = exclusion::serre_test(&poly, &factors)?;
    let mut text = format!("h = {poly}\n{}\n", describe(&serre.verdict));
    for n in &serre.notes {
        text += &format!("  {n}\n");
    }
    let mut json = json!({"h": poly, "serre": serre});
    if let Some(mu) = mu {
        let hl = exclusion::howe_lauter_test(&poly, mu)?;
        text += &format!("{}\n", describe(&hl.verdict));
        json["elliptic"] = serde_json::to_value(&hl)?;
    }
    Ok(Outcome {
        json,
        text,
        positive: serre.is_excluded(),
    })
}

fn covers_cmd(n_x: u64, n_e: u64, g_x: u64, g_e: u64, a2: Option<u64>, q: u64) -> Result<Outcome> {
    let analysis = covers::nongalois_profiles(n_x, n_e, g_x, g_e, a2, q)?;
    let galois = covers::galois_split_feasible(n_x, n_e, g_x, g_e);
    let mut text = analysis.to_string();
    text += "Galois coverings:\n";
    if galois.is_empty() {
        text += "  none\n";
    }
    for s in &galois {
        text += &format!("  {s}\n");
    }
    Ok(Outcome {
        json: json!({"nongalois": analysis, "galois": galois}),
        text,
        positive: true,
    })
}

fn certificate_text(c: &bounds::BoundCertificate) -> String {
    let u: Vec<String> = c.u.iter().map(curvebound::json::fraction_string).collect();
    format!(
        "q = {}, g = {}\nu = [{}]\nbound = {}\nN <= {}\nP(x) = {} is nonnegative on [-1, 1]\n",
        c.q,
        c.g,
        u.join(", "),
        c.bound_text(),
        c.floor,
        c.witness.display_var('x')
    )
}

fn bound(q: u64, g: u64, d: usize, u: Option<String>) -> Result<Outcome> {
    let c = match u {
        Some(u) => {
            let u = u
                .split(',')
                .map(|s| parse_fraction(s.trim()).ok_or_else(|| anyhow!("bad fraction {s:?}")))
                .collect::<Result<Vec<_>>>()?;
            bounds::bound_from_u(q, g, &u)?
        }
        None => bounds::optimize_u(q, g, d, bounds::DEFAULT_BUDGET)?,
    };
    let ihara = bounds::ihara_bound(q, g);
    Ok(Outcome {
        text: format!("{}Ihara: N <= {ihara}\n", certificate_text(&c)),
        json: json!({"certificate": c, "ihara_floor": curvebound::json::bigint_value(&ihara)}),
        positive: true,
    })
}

fn min_genus(q: u64, n: u64, d: usize, cap: u64) -> Result<Outcome> {
    let m = bounds::min_genus(q, n, d, cap)?;
    let mut text = format!("a curve over F_{q} with {n} points has genus at least {}\n", m.genus);
    for c in &m.certificates {
        text += &format!("  genus {}: N <= {}\n", c.g, c.floor);
    }
    Ok(Outcome {
        json: serde_json::to_value(&m)?,
        text,
        positive: true,
    })
}

fn replay(a2_filter: Switch, skip_external: bool, long: bool, markdown: bool) -> Result<Outcome> {
    let r = report::replay_theorem(ReplayOptions {
        a2_filter: a2_filter == Switch::On,
        skip_external,
        long,
    })?;
    Ok(Outcome {
        json: serde_json::to_value(&r)?,
        text: if markdown { r.to_markdown() } else { r.to_text() },
        positive: r.verdict == Status::Verified,
    })
}

fn run(cli: Cli) -> Result<(Outcome, bool)> {
    Ok(match cli.command {
        Command::Count { curve, depth, out } => (count(&curve, depth)?, out.json),
        Command::Zeta { curve, h, q, depth, out } => (zeta_cmd(curve, h, q, depth)?, out.json),
        Command::Enumerate { q, g, n, a, depth, serre_filter, long, out } => {
            if g == 0 {
                bail!("genus must be positive");
            }
            (enumerate(q, g, n, &a, depth, serre_filter, long)?, out.json)
        }
        Command::Exclude { h, mu, out } => (exclude(&h, mu)?, out.json),
        Command::Covers { n_x, n_e, g_x, g_e, a2, q, out } => (covers_cmd(n_x, n_e, g_x, g_e, a2, q)?, out.json),
        Command::Bound { q, g, d, u, out } => (bound(q, g, d, u)?, out.json),
        Command::MinGenus { q, n, d, cap, out } => (min_genus(q, n, d, cap)?, out.json),
        Command::ReplayTheorem { a2_filter, skip_external, long, markdown, out } => {
            (replay(a2_filter, skip_external, long, markdown)?, out.json)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, as_json)) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe (e.g. `| head`) is not an error of the command.
            let _ = if as_json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&outcome.json).expect("serializable"))
            } else {
                write!(stdout, "{}", outcome.text)
            };
            if outcome.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
