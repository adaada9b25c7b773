//! Front end of the `schubert-trace` binary, kept in a library so the
//! acceptance suite can drive it in-process.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schubert_trace::oracle::{
    run_all, OracleConfig, SuiteSummary, DEFAULT_ENUMERATION_CAP, DEFAULT_PAIR_CAP,
};
use schubert_trace::{
    det_report_with_cap, schubert_report, Ambient, BaseRingAssumptions, BiMinor, BoundaryFamily,
    DeterminantalReport, Execution, PrimeMarker, SchubertIndex, SchubertReport, TauEntry,
    TraceDescription, DEFAULT_MIN_DEGREE_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_ORACLE_FAIL: i32 = 2;
pub const EXIT_CAP_SKIP: i32 = 3;

/// Overrides the default enumeration cap when no `--cap` is given.
pub const CAP_ENV: &str = "SCHUBERT_TRACE_CAP";

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "schubert-trace",
    version,
    about = "Canonical traces of Schubert cycles and determinantal rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze the Schubert cycle G(X; gamma).
    AnalyzeSchubert {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Column tuple, e.g. 1,4,7.
        #[arg(long, value_parser = parse_tuple)]
        gamma: Tuple,
        #[command(flatten)]
        common: Common,
    },
    /// Analyze the determinantal ring R(X; delta), delta = [rows | cols].
    AnalyzeDeterminantal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_tuple)]
        rows: Tuple,
        #[arg(long, value_parser = parse_tuple)]
        cols: Tuple,
        /// Largest interval for which factor degrees are enumerated.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Run every oracle sweep up to the given matrix shape.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        bound: u64,
        /// Poset elements a single check may enumerate.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_PAIR_CAP)]
        pair_cap: usize,
        /// Treat checks skipped at the cap as failures (exit 3).
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Base::Gorenstein)]
    base: Base,
    /// With a reduced Cohen-Macaulay base: the base itself is not CTR.
    #[arg(long)]
    base_not_ctr: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Base {
    Gorenstein,
    ReducedCm,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

/// A comma-separated list of 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Tuple(Vec<usize>);

fn parse_tuple(s: &str) -> Result<Tuple, String> {
    if s.chars().any(char::is_whitespace) {
        return Err("whitespace is not allowed in tuples".into());
    }
    s.split(',')
        .map(|part| match part.parse::<usize>() {
            Ok(0) => Err("tuple entries are 1-based".to_string()),
            Ok(v) => Ok(v),
            Err(_) => Err(format!("'{part}' is not a positive integer")),
        })
        .collect::<Result<_, _>>()
        .map(Tuple)
}

impl Common {
    fn base(&self) -> BaseRingAssumptions {
        match self.base {
            Base::Gorenstein => BaseRingAssumptions {
                base_is_ctr: !self.base_not_ctr,
                ..BaseRingAssumptions::gorenstein()
            },
            Base::ReducedCm => BaseRingAssumptions::reduced_cm(!self.base_not_ctr),
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<schubert_trace::Error> for Failure {
    fn from(e: schubert_trace::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{shown}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{shown}");
                    EXIT_INPUT
                }
            };
        }
    };
    let result = match cli.command {
        Command::AnalyzeSchubert {
            m,
            n,
            gamma,
            common,
        } => analyze_schubert(m, n, gamma.0, &common),
        Command::AnalyzeDeterminantal {
            m,
            n,
            rows,
            cols,
            cap,
            common,
        } => analyze_determinantal(m, n, rows.0, cols.0, cap, &common),
        Command::Verify {
            max_m,
            max_n,
            trials,
            seed,
            bound,
            cap,
            pair_cap,
            strict,
            sequential,
            format,
        } => env_cap(cap).and_then(|cap| {
            let cfg = OracleConfig {
                cap: cap.unwrap_or(DEFAULT_ENUMERATION_CAP),
                pair_cap,
                trials,
                seed,
                bound,
                execution: if sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
            };
            verify(max_m, max_n, &cfg, strict, format)
        }),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn env_cap(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.parse().map(Some).map_err(|_| Failure {
            code: EXIT_INPUT,
            message: format!("{CAP_ENV}='{v}' is not a non-negative integer"),
        }),
        Err(_) => Ok(None),
    }
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn base_json(base: &BaseRingAssumptions) -> Value {
    json!({
        "gorenstein_normal_domain": base.gorenstein_normal_domain,
        "reduced_cm_with_canonical": base.reduced_cm_with_canonical,
        "base_is_ctr": base.base_is_ctr,
    })
}

fn minor_json(b: &BiMinor) -> Value {
    json!({ "rows": b.rows(), "cols": b.cols() })
}

fn tau_json(t: &TauEntry) -> Value {
    match t {
        TauEntry::Minor(b) => minor_json(b),
        TauEntry::Unit => json!("unit"),
    }
}

fn markers_json(primes: &[PrimeMarker]) -> Value {
    primes
        .iter()
        .map(|p| json!({ "index": p.index, "generator": p.generator.to_string() }))
        .collect()
}

fn boundary_json(family: &BoundaryFamily) -> Value {
    family
        .levels()
        .iter()
        .map(|l| json!({ "h": l.h, "S": l.s, "T": l.t, "U_plus": l.u_plus, "U_minus": l.u_minus, "U": l.u }))
        .collect()
}

fn trace_json(trace: &TraceDescription) -> Value {
    json!({
        "factors": trace.factors().iter().map(|f| json!({ "h": f.h, "primes": markers_json(&f.primes) })).collect::<Vec<_>>(),
        "text": trace.to_string(),
    })
}

fn ctr_json(ctr: &schubert_trace::CtrVerdict) -> Value {
    json!({
        "verdict": ctr.verdict,
        "reason": ctr.reason,
        "intersection": ctr.intersection.as_deref().map(markers_json),
        "base_token": ctr.base_token,
    })
}

fn locus_json(locus: &schubert_trace::GorensteinLocus) -> Value {
    json!({ "primes": markers_json(&locus.primes), "base_token": locus.base_token })
}

fn render_set(v: &[usize]) -> String {
    let body: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", body.join(", "))
}

fn render_list<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// A value from a published worked example that the defining formulas do
/// not reproduce. Each entry holds both values side by side.
struct Disputed {
    kind: &'static str,
    shape: (usize, usize),
    input: &'static [usize],
    quantity: &'static str,
    reference: &'static str,
}

const DISPUTED: &[Disputed] = &[
    Disputed {
        kind: "determinantal",
        shape: (4, 4),
        input: &[1, 3, 4, 1, 3, 4],
        quantity: "tau_tilde_2",
        reference: "[1 4 7 8]",
    },
    Disputed {
        kind: "schubert",
        shape: (4, 8),
        input: &[1, 3, 4, 7],
        quantity: "sigma_2",
        reference: "[1 4 7 8]",
    },
    Disputed {
        kind: "determinantal",
        shape: (4, 5),
        input: &[1, 3, 4, 1, 3, 4],
        quantity: "tau_tilde_2",
        reference: "[1 4 8 9]",
    },
    Disputed {
        kind: "determinantal",
        shape: (4, 5),
        input: &[1, 3, 4, 1, 3, 4],
        quantity: "tau_2",
        reference: "[3 4|1 4]",
    },
    Disputed {
        kind: "determinantal",
        shape: (4, 5),
        input: &[1, 3, 4, 1, 3, 4],
        quantity: "U_1",
        reference: "{1}",
    },
    Disputed {
        kind: "determinantal",
        shape: (4, 5),
        input: &[1, 3, 4, 1, 3, 4],
        quantity: "U_2",
        reference: "{1, 2}",
    },
    Disputed {
        kind: "determinantal",
        shape: (4, 5),
        input: &[1, 3, 4, 1, 3, 4],
        quantity: "trace",
        reference: "I(x;τ_1)·(I(x;τ_1) ∩ I(x;τ_2))",
    },
    Disputed {
        kind: "schubert",
        shape: (4, 9),
        input: &[1, 3, 4, 8],
        quantity: "sigma_2",
        reference: "[1 4 8 9]",
    },
    Disputed {
        kind: "schubert",
        shape: (4, 9),
        input: &[1, 3, 4, 8],
        quantity: "U_1",
        reference: "{1}",
    },
    Disputed {
        kind: "schubert",
        shape: (4, 9),
        input: &[1, 3, 4, 8],
        quantity: "U_2",
        reference: "{1, 2}",
    },
];

fn disputed_for(
    kind: &str,
    m: usize,
    n: usize,
    input: &[usize],
    computed: impl Fn(&str) -> String,
) -> Vec<Value> {
    DISPUTED
        .iter()
        .filter(|d| d.kind == kind && d.shape == (m, n) && d.input == input)
        .map(|d| {
            json!({
                "quantity": d.quantity,
                "reference_value": d.reference,
                "computed_value": computed(d.quantity),
                "resolution": "computed value follows the defining formulas and passes the brute-force oracle",
            })
        })
        .collect()
}

fn level_u(family: &BoundaryFamily, h: usize) -> String {
    family
        .level(h)
        .map(|l| render_set(&l.u))
        .unwrap_or_else(|| "{}".into())
}

fn analyze_schubert(
    m: usize,
    n: usize,
    gamma: Vec<usize>,
    common: &Common,
) -> Result<(String, i32), Failure> {
    let ambient = Ambient::new(m, n)?;
    ambient.require_schubert()?;
    let g = SchubertIndex::new(ambient, gamma.clone())?;
    let base = common.base();
    let rep = schubert_report(&g, &base)?;
    let disputed = disputed_for("schubert", m, n, &gamma, |q| match q {
        "sigma_2" => rep.sigma.get(1).map(|s| s.to_string()).unwrap_or_default(),
        "U_1" => level_u(&rep.family, 1),
        "U_2" => level_u(&rep.family, 2),
        _ => String::new(),
    });
    let text = match common.format {
        Format::Json => render(&schubert_json(&rep, m, n, &gamma, &base, disputed)),
        Format::Text => schubert_text(&rep, &g, &disputed),
    };
    Ok((text, EXIT_OK))
}

fn schubert_json(
    rep: &SchubertReport,
    m: usize,
    n: usize,
    gamma: &[usize],
    base: &BaseRingAssumptions,
    disputed: Vec<Value>,
) -> Value {
    let kp = &rep.kappa;
    json!({
        "kind": "schubert",
        "version": VERSION,
        "input": { "m": m, "n": n, "gamma": gamma, "base": base_json(base) },
        "blocks": { "t": rep.blocks.t(), "blocks": rep.blocks.blocks(), "gaps": rep.blocks.gaps() },
        "kappa": { "values": kp.values(), "max": kp.max(), "min": kp.min(), "spread": kp.spread() },
        "zeta": rep.zeta.iter().map(|z| z.cols()).collect::<Vec<_>>(),
        "sigma": rep.sigma.iter().map(|s| s.cols()).collect::<Vec<_>>(),
        "boundary_sets": boundary_json(&rep.family),
        "canonical_class": rep.canonical_class.iter().map(|(k, z)| json!({ "coefficient": k, "zeta": z.cols() })).collect::<Vec<_>>(),
        "trace": trace_json(&rep.trace),
        "ctr": ctr_json(&rep.ctr),
        "gorenstein_locus": locus_json(&rep.gorenstein_locus),
        "witness": rep.witness.as_ref().map(|w| json!({
            "element": w.element.cols(),
            "degree": w.degree,
            "product_min_degree": w.product_min_degree,
        })),
        "closed_form": Value::Null,
        "base_change": rep.base_change,
        "disputed_fixtures": disputed,
    })
}

fn family_text(family: &BoundaryFamily, out: &mut String) {
    for l in family.levels() {
        out.push_str(&format!(
            "h={}: S={} T={} U+={} U-={} U={}\n",
            l.h,
            render_set(&l.s),
            render_set(&l.t),
            render_set(&l.u_plus),
            render_set(&l.u_minus),
            render_set(&l.u)
        ));
    }
}

fn verdict_text(
    ctr: &schubert_trace::CtrVerdict,
    locus: &schubert_trace::GorensteinLocus,
    base_change: &Option<String>,
    out: &mut String,
) {
    out.push_str(&format!("ctr: {} ({})\n", ctr.verdict, ctr.reason));
    let primes: Vec<String> = locus
        .primes
        .iter()
        .map(|p| p.generator.to_string())
        .collect();
    let mut locus_line = primes.join(", ");
    if let Some(tok) = &locus.base_token {
        if !locus_line.is_empty() {
            locus_line.push_str(", ");
        }
        locus_line.push_str(tok);
    }
    out.push_str(&format!("non-gorenstein locus: {{{locus_line}}}\n"));
    if let Some(bc) = base_change {
        out.push_str(&format!("base change: {bc}\n"));
    }
}

fn disputed_text(disputed: &[Value], out: &mut String) {
    for d in disputed {
        out.push_str(&format!(
            "disputed {}: reference {} computed {}\n",
            d["quantity"].as_str().unwrap_or_default(),
            d["reference_value"].as_str().unwrap_or_default(),
            d["computed_value"].as_str().unwrap_or_default()
        ));
    }
}

fn schubert_text(rep: &SchubertReport, g: &SchubertIndex, disputed: &[Value]) -> String {
    let mut out = format!("schubert {} gamma={g}\n", g.ambient());
    out.push_str(&format!("t: {}\n", rep.blocks.t()));
    out.push_str(&format!(
        "kappa: {} (spread {})\n",
        render_list(rep.kappa.values()),
        rep.kappa.spread()
    ));
    out.push_str(&format!("zeta: {}\n", render_list(&rep.zeta)));
    out.push_str(&format!("sigma: {}\n", render_list(&rep.sigma)));
    family_text(&rep.family, &mut out);
    out.push_str(&format!("trace: {}\n", rep.trace));
    verdict_text(&rep.ctr, &rep.gorenstein_locus, &rep.base_change, &mut out);
    if let Some(w) = &rep.witness {
        out.push_str(&format!(
            "witness: {} degree {} < product minimum degree {}\n",
            w.element, w.degree, w.product_min_degree
        ));
    }
    disputed_text(disputed, &mut out);
    out
}

fn analyze_determinantal(
    m: usize,
    n: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    cap: Option<usize>,
    common: &Common,
) -> Result<(String, i32), Failure> {
    let cap = env_cap(cap)?.unwrap_or(DEFAULT_MIN_DEGREE_CAP);
    let ambient = Ambient::new(m, n)?;
    let delta = BiMinor::new(ambient, rows.clone(), cols.clone())?;
    let base = common.base();
    let rep = det_report_with_cap(&delta, &base, cap)?;
    let key: Vec<usize> = rows.iter().chain(&cols).copied().collect();
    let disputed = disputed_for("determinantal", m, n, &key, |q| match q {
        "tau_tilde_2" => rep
            .profile
            .tau_tilde
            .get(1)
            .map(|s| s.to_string())
            .unwrap_or_default(),
        "tau_2" => rep
            .profile
            .tau
            .get(1)
            .map(|t| match t {
                TauEntry::Minor(b) => b.compact(),
                TauEntry::Unit => "1".into(),
            })
            .unwrap_or_default(),
        "U_1" => level_u(&rep.family, 1),
        "U_2" => level_u(&rep.family, 2),
        "trace" => rep.trace.to_string(),
        _ => String::new(),
    });
    let text = match common.format {
        Format::Json => render(&det_json(&rep, m, n, &rows, &cols, &base, disputed)),
        Format::Text => det_text(&rep, &delta, &disputed),
    };
    Ok((text, EXIT_OK))
}

fn det_json(
    rep: &DeterminantalReport,
    m: usize,
    n: usize,
    rows: &[usize],
    cols: &[usize],
    base: &BaseRingAssumptions,
    disputed: Vec<Value>,
) -> Value {
    let p = &rep.profile;
    let lp = &p.lambda;
    json!({
        "kind": "determinantal",
        "version": VERSION,
        "input": { "m": m, "n": n, "rows": rows, "cols": cols, "base": base_json(base) },
        "lifted": p.lifted.index().cols(),
        "blocks": { "t": p.blocks.t(), "blocks": p.blocks.blocks(), "gaps": p.blocks.gaps() },
        "lambda": { "values": lp.values(), "max": lp.max(), "min": lp.min(), "spread": lp.spread() },
        "eta_tilde": p.eta_tilde.iter().map(|z| z.cols()).collect::<Vec<_>>(),
        "tau_tilde": p.tau_tilde.iter().map(|z| z.cols()).collect::<Vec<_>>(),
        "eta": p.eta.iter().map(tau_json).collect::<Vec<_>>(),
        "tau": p.tau.iter().map(tau_json).collect::<Vec<_>>(),
        "thresholds": rep.thresholds.values(),
        "boundary_sets": boundary_json(&rep.family),
        "canonical_class": lp.values().iter().zip(&p.eta).map(|(k, e)| json!({ "coefficient": k, "eta": tau_json(e) })).collect::<Vec<_>>(),
        "trace": trace_json(&rep.trace),
        "ctr": ctr_json(&rep.ctr),
        "gorenstein_locus": locus_json(&rep.gorenstein_locus),
        "witness": rep.witness.as_ref().map(|w| json!({
            "element": minor_json(&w.element),
            "degree": w.degree,
            "factor_min_degrees": w.factor_min_degrees,
            "product_min_degree": w.product_min_degree,
            "exact": w.exact,
            "in_radical": w.in_radical,
            "certified": w.certified(),
        })),
        "closed_form": rep.closed_form.map(|c| json!({ "r": c.r, "exponent": c.exponent, "text": c.to_string() })),
        "base_change": rep.base_change,
        "disputed_fixtures": disputed,
    })
}

fn det_text(rep: &DeterminantalReport, delta: &BiMinor, disputed: &[Value]) -> String {
    let p = &rep.profile;
    let mut out = format!(
        "determinantal {} delta={}\n",
        delta.ambient(),
        delta.compact()
    );
    out.push_str(&format!("lifted: {}\n", p.lifted.index()));
    out.push_str(&format!("t: {}\n", p.t()));
    out.push_str(&format!(
        "lambda: {} (spread {})\n",
        render_list(p.lambda.values()),
        p.lambda.spread()
    ));
    out.push_str(&format!("tau_tilde: {}\n", render_list(&p.tau_tilde)));
    let taus: Vec<String> = p
        .tau
        .iter()
        .map(|t| match t {
            TauEntry::Minor(b) => b.compact(),
            TauEntry::Unit => "1".into(),
        })
        .collect();
    out.push_str(&format!("tau: {}\n", taus.join(" ")));
    out.push_str(&format!(
        "thresholds: {}\n",
        render_list(rep.thresholds.values())
    ));
    family_text(&rep.family, &mut out);
    out.push_str(&format!("trace: {}\n", rep.trace));
    if let Some(c) = &rep.closed_form {
        out.push_str(&format!("closed form: {c}\n"));
    }
    verdict_text(&rep.ctr, &rep.gorenstein_locus, &rep.base_change, &mut out);
    if let Some(w) = &rep.witness {
        out.push_str(&format!(
            "witness: {} degree {} < product minimum degree {}{}\n",
            w.element.compact(),
            w.degree,
            w.product_min_degree,
            if w.exact { "" } else { " (lower bound)" }
        ));
    }
    disputed_text(disputed, &mut out);
    out
}

fn verify(
    max_m: usize,
    max_n: usize,
    cfg: &OracleConfig,
    strict: bool,
    format: Format,
) -> Result<(String, i32), Failure> {
    if max_m == 0 || max_n == 0 {
        return Err(Failure {
            code: EXIT_INPUT,
            message: "sweep bounds must be at least 1".into(),
        });
    }
    if cfg.bound == 0 {
        return Err(Failure {
            code: EXIT_INPUT,
            message: "entry bound must be at least 1".into(),
        });
    }
    let suites = run_all(max_m, max_n, cfg)?;
    let failed = suites.iter().any(|s| s.failed > 0);
    let skipped = suites.iter().any(|s| s.skipped > 0);
    let code = if failed {
        EXIT_ORACLE_FAIL
    } else if skipped && strict {
        EXIT_CAP_SKIP
    } else {
        EXIT_OK
    };
    let text = match format {
        Format::Json => render(&json!({
            "kind": "verify",
            "version": VERSION,
            "input": {
                "max_m": max_m,
                "max_n": max_n,
                "trials": cfg.trials,
                "seed": cfg.seed,
                "bound": cfg.bound,
                "cap": cfg.cap,
                "pair_cap": cfg.pair_cap,
                "strict": strict,
            },
            "suites": suites,
            "passed": !failed && !(strict && skipped),
        })),
        Format::Text => verify_text(&suites),
    };
    Ok((text, code))
}

fn verify_text(suites: &[SuiteSummary]) -> String {
    let mut out = String::new();
    for s in suites {
        let status = if s.failed > 0 {
            "FAIL"
        } else if s.skipped > 0 {
            "SKIP"
        } else {
            "PASS"
        };
        out.push_str(&format!(
            "{status} {} reports={} passed={} failed={} skipped={} cases={}\n",
            s.sweep, s.reports, s.passed, s.failed, s.skipped, s.cases
        ));
        for f in &s.failures {
            out.push_str(&format!(
                "  counterexample {} {}\n",
                f.parameters,
                f.counterexample.clone().unwrap_or(Value::Null)
            ));
        }
    }
    out
}
