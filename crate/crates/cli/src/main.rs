//! `icc`: construct, enumerate and verify irreducible cyclic codes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use icc_core::analytic::{
    classify, lemma_branch, predicted_enumerator, predicted_period_polynomial, FormChoice, T319Reading,
};
use icc_core::codes::{codeword, codeword_residues};
use icc_core::cyclotomy::{gaussian_periods, period_polynomial, trace_count_matrix, Period};
use icc_core::gf::DEFAULT_FIELD_CAP;
use icc_core::verify::{self, SweepSpec, Verdict, VerificationReport, VerifyOptions};
use icc_core::{brute_weight_distribution, CodeParams, CodeSpec, Error, Exec, Strategy};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "icc",
    version,
    about = "Irreducible cyclic codes: enumeration, Gaussian periods and closed-form checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derived sizes and the theorem covering the parameters
    Info(Common),
    /// Codeword rows c(beta)
    Codewords {
        #[command(flatten)]
        common: Common,
        /// Maximum number of rows
        #[arg(long, default_value_t = 256)]
        limit: usize,
        /// Print every codeword regardless of --limit
        #[arg(long)]
        all: bool,
    },
    /// Weight distribution by enumeration, closed form, or both
    Weights(Common),
    /// Gaussian periods of index N over the prime field
    Periods(Common),
    /// Period polynomial and its predicted factorization
    Poly(Common),
    /// Full cross-check of enumeration against the closed forms
    Verify(Common),
    /// Verify every admissible tuple in a range
    Sweep {
        #[command(flatten)]
        out: Output,
        /// Largest prime p
        #[arg(long, default_value_t = 30)]
        p_max: u64,
        #[arg(long, default_value_t = 2)]
        s_max: u32,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        /// Indices N to try
        #[arg(short = 'N', long = "index", value_delimiter = ',', default_value = "5,6,7,8")]
        indices: Vec<u64>,
        /// Skip tuples with r above this
        #[arg(long, default_value_t = 100_000)]
        r_max: u128,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(short = 'p', long)]
    p: u64,
    #[arg(short = 's', long, default_value_t = 1)]
    s: u32,
    #[arg(short = 'm', long)]
    m: u32,
    #[arg(short = 'N', long = "index")]
    n: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug, Clone)]
struct Output {
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for enumeration (0 = all cores)
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Largest field order that will be enumerated
    #[arg(long, env = "ICC_FIELD_CAP", default_value_t = DEFAULT_FIELD_CAP)]
    cap: u64,
    /// Include notes and alternative readings in reports
    #[arg(long)]
    show_discrepancies: bool,
    /// Reading of the three-weight theorem for N = 7
    #[arg(long, value_enum, default_value_t = Reading::Literal)]
    reading: Reading,
    /// Use the printed period-polynomial factorizations even where they are known to be wrong
    #[arg(long)]
    as_printed: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Brute,
    Analytic,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Reading {
    Literal,
    BaseLength,
    BaseLengthAmended,
}

impl Output {
    fn exec(&self) -> Exec {
        Exec::with_threads(self.threads)
    }

    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            cap: self.cap,
            exec: self.exec(),
            reading: match self.reading {
                Reading::Literal => T319Reading::Literal,
                Reading::BaseLength => T319Reading::BaseLength,
                Reading::BaseLengthAmended => T319Reading::BaseLengthAmended,
            },
            form: if self.as_printed { FormChoice::AsPrinted } else { FormChoice::Amended },
            ..VerifyOptions::default()
        }
    }
}

/// What a subcommand hands back for rendering.
struct Rendered {
    json: Value,
    csv: String,
    text: String,
    status: u8,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::FieldTooLarge { .. } => 3,
        _ => 2,
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::FieldTooLarge { .. } => "cap_exceeded",
        Error::NotPrime(_) => "not_prime",
        Error::IndexDoesNotDivide { .. } | Error::IndexTooSmall(_) => "bad_index",
        Error::ZeroExponent(_) => "bad_exponent",
        Error::Overflow => "overflow",
        _ => "error",
    }
}

fn emit(format: Format, r: &Rendered) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&r.json).expect("values serialize")),
        Format::Csv => print!("{}", r.csv),
        Format::Text => print!("{}", r.text),
    }
}

fn params_of(c: &Common) -> Result<CodeParams, Error> {
    CodeParams::new(c.p, c.s, c.m, c.n)
}

fn tuple(p: &CodeParams) -> String {
    format!("({},{},{},{})", p.p, p.s, p.m, p.index)
}

fn spec_of(params: CodeParams, out: &Output) -> Result<CodeSpec, Error> {
    CodeSpec::new(params, out.cap)
}

fn weights_json(m: &BTreeMap<u128, u128>) -> Value {
    Value::Array(m.iter().map(|(w, c)| json!({"w": num(*w), "count": num(*c)})).collect())
}

fn num(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn inum(x: i128) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn pairs(m: &BTreeMap<u128, u128>) -> String {
    m.iter().map(|(w, c)| format!("{w}:{c}")).collect::<Vec<_>>().join(";")
}

fn info(c: &Common) -> Result<Rendered, Error> {
    let params = params_of(c)?;
    let case = classify(&params);
    let branch = lemma_branch(params.p, params.degree(), params.index).map(|b| b.to_string());
    let json = json!({
        "params": params,
        "theorem": case,
        "lemma_branch": branch,
        "subfield_in_first_class": params.subfield_in_first_class(),
        "desk_scale": params.r <= c.out.cap as u128,
    });
    let csv = format!(
        "p,s,m,N,q,r,n,theorem\n{},{},{},{},{},{},{},{}\n",
        params.p, params.s, params.m, params.index, params.q, params.r, params.length, case.theorem_id
    );
    let mut text = format!(
        "p = {}, s = {}, m = {}, N = {}\nq = {}, r = {}, n = {}\ntheorem: {}\n",
        params.p, params.s, params.m, params.index, params.q, params.r, params.length, case.theorem_id
    );
    for cond in &case.conditions {
        let _ = writeln!(text, "  {cond}");
    }
    if let Some(b) = branch {
        let _ = writeln!(text, "period polynomial: {b}");
    }
    Ok(Rendered { json, csv, text, status: 0 })
}

fn codewords(c: &Common, limit: usize, all: bool) -> Result<Rendered, Error> {
    let params = params_of(c)?;
    let spec = spec_of(params, &c.out)?;
    let f = &spec.field;
    let total = params.r as usize;
    let shown = if all { total } else { limit.min(total) };
    let prime = params.s == 1;
    let mut rows = Vec::with_capacity(shown);
    let (mut csv, mut text) = (String::new(), String::new());
    for i in 0..shown {
        // row 0 is beta = 0, row i is alpha^(i-1)
        let beta = if i == 0 { icc_core::Element::ZERO } else { f.from_log(i as u32 - 1) };
        let label = if i == 0 { "0".to_string() } else { format!("a^{}", i - 1) };
        let symbols: Vec<String> = if prime {
            codeword_residues(&spec, beta)?.iter().map(u32::to_string).collect()
        } else {
            codeword(&spec, beta).iter().map(|&l| if l == 0 { "0".into() } else { format!("g^{}", l - 1) }).collect()
        };
        let weight = symbols.iter().filter(|s| *s != "0").count();
        let _ = writeln!(csv, "{label},{weight},{}", symbols.join(","));
        let _ = writeln!(text, "{label:>8} [{weight:>4}]  {}", symbols.join(" "));
        let syms: Vec<Value> = if prime {
            symbols.iter().map(|s| Value::from(s.parse::<u64>().expect("residue"))).collect()
        } else {
            symbols.into_iter().map(Value::String).collect()
        };
        rows.push(json!({"beta": label, "weight": weight, "symbols": syms}));
    }
    if shown < total {
        let _ = writeln!(text, "... {} more rows (use --all or --limit)", total - shown);
    }
    let json = json!({"params": params, "codewords": rows, "shown": shown, "total": total});
    Ok(Rendered { json, csv: format!("beta,weight,symbols\n{csv}"), text, status: 0 })
}

fn brute_map(params: CodeParams, out: &Output) -> Result<BTreeMap<u128, u128>, Error> {
    let spec = spec_of(params, out)?;
    let d = brute_weight_distribution(&spec, Strategy::ClassOrbit, out.exec());
    Ok(d.counts.iter().map(|(&w, &c)| (w as u128, c as u128)).collect())
}

fn weights(c: &Common) -> Result<Rendered, Error> {
    let params = params_of(c)?;
    let case = classify(&params);
    let brute = match c.out.method {
        Method::Analytic => None,
        _ => Some(brute_map(params, &c.out)?),
    };
    let predicted = match c.out.method {
        Method::Brute => None,
        _ => Some(
            predicted_enumerator(&params, &case, c.out.options().reading).and_then(|e| e.distribution(&params)).map(
                |mut m| {
                    *m.entry(0).or_default() += 1;
                    m
                },
            ),
        ),
    };
    let mut status = 0;
    let verdict = match (&brute, &predicted) {
        (Some(b), Some(Ok(p))) if b == p => Some(Verdict::Match),
        (Some(_), Some(Ok(_))) => {
            status = 1;
            Some(Verdict::Mismatch)
        }
        (_, Some(Err(_))) => Some(Verdict::NotApplicable),
        _ => None,
    };
    let predicted_json = match &predicted {
        Some(Ok(m)) => weights_json(m),
        Some(Err(e)) => json!({"error": e.to_string()}),
        None => Value::Null,
    };
    let main = brute.as_ref().or(predicted.as_ref().and_then(|p| p.as_ref().ok()));
    let json = json!({
        "params": params,
        "theorem": case.theorem_id,
        "weights": main.map(weights_json),
        "predicted": predicted_json,
        "verdict": verdict,
    });
    let mut csv = String::from("source,w,count\n");
    let mut text = format!("{} theorem {}\n", tuple(&params), case.theorem_id);
    for (name, m) in [("brute", brute.as_ref()), ("analytic", predicted.as_ref().and_then(|p| p.as_ref().ok()))] {
        if let Some(m) = m {
            for (w, n) in m {
                let _ = writeln!(csv, "{name},{w},{n}");
            }
            let _ = writeln!(
                text,
                "{name:>8}: {}",
                m.iter().map(|(w, n)| format!("{n}x^{w}")).collect::<Vec<_>>().join(" + ")
            );
        }
    }
    if let Some(Err(e)) = &predicted {
        let _ = writeln!(text, "analytic: unavailable ({e})");
    }
    if let Some(v) = verdict {
        let _ = writeln!(text, "verdict: {v}");
    }
    Ok(Rendered { json, csv, text, status })
}

fn periods(c: &Common) -> Result<Rendered, Error> {
    let params = params_of(c)?;
    let spec = spec_of(params, &c.out)?;
    let matrix = trace_count_matrix(&spec.field, params.index, c.out.exec())?;
    let set = gaussian_periods(&matrix);
    let mut rows = Vec::new();
    let mut csv = String::from("i,re,im,exact\n");
    let mut text = String::new();
    for (i, p) in set.values.iter().enumerate() {
        match *p {
            Period::Exact(v) => {
                rows.push(json!({"i": i, "value": v, "exact": true}));
                let _ = writeln!(csv, "{i},{v},0,true");
                let _ = writeln!(text, "eta_{i} = {v} (exact)");
            }
            Period::Numeric { re, im } => {
                rows.push(json!({"i": i, "re": re, "im": im, "exact": false}));
                let _ = writeln!(csv, "{i},{re},{im},false");
                let _ = writeln!(text, "eta_{i} = {re:.6} {im:+.6}i (numeric)");
            }
        }
    }
    let _ = writeln!(text, "sum = -1: {}", set.sum_identity_holds());
    let json = json!({"params": params, "periods": rows, "sum_is_minus_one": set.sum_identity_holds()});
    Ok(Rendered { json, csv, text, status: 0 })
}

fn poly(c: &Common) -> Result<Rendered, Error> {
    let params = params_of(c)?;
    let spec = spec_of(params, &c.out)?;
    let matrix = trace_count_matrix(&spec.field, params.index, c.out.exec())?;
    let psi = period_polynomial(&gaussian_periods(&matrix))?;
    let form = c.out.options().form;
    let predicted = lemma_branch(params.p, params.degree(), params.index)
        .map(|_| predicted_period_polynomial(params.p, params.s, params.m, params.index, form));
    let agrees = match &predicted {
        Some(Ok(p)) => p.agrees_with(&psi.coeffs),
        _ => None,
    };
    let mut status = 0;
    if agrees == Some(false) {
        status = 1;
    }
    let predicted_json = match &predicted {
        Some(Ok(p)) => serde_json::to_value(p).expect("prediction serializes"),
        Some(Err(e)) => json!({"error": e.to_string()}),
        None => Value::Null,
    };
    let coeffs: Vec<Value> = psi.coeffs.iter().map(|&x| inum(x)).collect();
    let json = json!({
        "params": params,
        "poly": coeffs,
        "exact": psi.exact,
        "predicted": predicted_json,
        "agrees": agrees,
    });
    let degree = psi.coeffs.len() - 1;
    let mut csv = String::from("degree,coefficient\n");
    for (i, x) in psi.coeffs.iter().enumerate() {
        let _ = writeln!(csv, "{},{x}", degree - i);
    }
    let mut text = format!("psi = {}\n", render_poly(&psi.coeffs));
    if let Some(Ok(p)) = &predicted {
        let _ = writeln!(text, "branch {}: agrees = {:?}", p.branch(), agrees);
    }
    Ok(Rendered { json, csv, text, status })
}

fn render_poly(c: &[i128]) -> String {
    let deg = c.len() - 1;
    let mut out = String::new();
    for (i, &x) in c.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let k = deg - i;
        let sign = if x < 0 {
            " - "
        } else if out.is_empty() {
            ""
        } else {
            " + "
        };
        let a = x.unsigned_abs();
        let coef = if a == 1 && k > 0 { String::new() } else { a.to_string() };
        let var = match k {
            0 => String::new(),
            1 => "X".into(),
            _ => format!("X^{k}"),
        };
        let _ = write!(out, "{sign}{coef}{var}");
    }
    out
}

fn report_json(rep: &VerificationReport, full: bool) -> Value {
    let mut v = serde_json::to_value(rep).expect("reports serialize");
    let obj = v.as_object_mut().expect("object");
    let weights = rep.computed.as_ref().map(|c| serde_json::to_value(&c.weights).expect("weights"));
    obj.insert("weights".into(), weights.unwrap_or(Value::Null));
    let poly = rep.period_check.as_ref().and_then(|p| p.computed.clone());
    obj.insert("poly".into(), poly.map_or(Value::Null, |c| Value::Array(c.into_iter().map(Value::String).collect())));
    if !full {
        obj.remove("notes");
        obj.remove("alternatives");
    }
    v
}

fn report_row(rep: &VerificationReport) -> String {
    let m: BTreeMap<u128, u128> = rep
        .computed
        .as_ref()
        .map(|c| c.weights.iter().map(|w| (w.w as u128, w.count as u128)).collect())
        .unwrap_or_default();
    format!("\"{}\",{},{},{}", tuple(&rep.params), rep.theorem.theorem_id, rep.verdict, pairs(&m))
}

fn report_text(rep: &VerificationReport, full: bool) -> String {
    let mut t = format!("{} {} {}\n", tuple(&rep.params), rep.theorem.theorem_id, rep.verdict);
    if let Some(c) = &rep.computed {
        let body: Vec<String> = c.weights.iter().map(|w| format!("{}:{}", w.w, w.count)).collect();
        let _ = writeln!(t, "  computed  {{{}}} ({} distinct codewords, dim {})", body.join(", "), c.distinct, c.dim);
    }
    if let Some(e) = &rep.predicted {
        if let Ok(m) = e.distribution(&rep.params) {
            let _ = writeln!(t, "  predicted {{{}}} over nonzero beta", pairs(&m).replace(';', ", "));
        }
    }
    if let Some(pc) = &rep.period_check {
        if let Some(c) = &pc.computed {
            let _ = writeln!(t, "  psi [{}] agrees: {:?}", c.join(", "), pc.agrees);
        }
    }
    for d in &rep.diffs {
        let _ = writeln!(t, "  diff {}: expected {} got {}", d.field, d.expected, d.actual);
    }
    if full {
        for n in &rep.notes {
            let _ = writeln!(t, "  note: {n}");
        }
        for a in &rep.alternatives {
            let _ = writeln!(t, "  alt {}: {} {}", a.label, a.status, a.detail);
        }
    }
    t
}

fn verify_one(c: &Common) -> Result<Rendered, Error> {
    let params = params_of(c)?;
    let rep = verify::verify(&params, &c.out.options())?;
    let full = c.out.show_discrepancies;
    Ok(Rendered {
        json: report_json(&rep, full),
        csv: format!("params,theorem,verdict,weights\n{}\n", report_row(&rep)),
        text: report_text(&rep, full),
        status: (rep.verdict == Verdict::Mismatch) as u8,
    })
}

fn sweep(out: &Output, p_max: u64, s_max: u32, m_max: u32, indices: Vec<u64>, r_max: u128) -> u8 {
    let spec = SweepSpec {
        primes: (2..=p_max).filter(|&p| icc_core::arith::is_prime(p)).collect(),
        s_max,
        m_max,
        indices,
        r_max,
    };
    let opts = out.options();
    let mut status = 0u8;
    if out.format == Format::Csv {
        println!("params,theorem,verdict,weights");
    }
    verify::sweep(&spec, &opts, |res| match res {
        Ok(rep) => {
            if rep.verdict == Verdict::Mismatch {
                status = status.max(1);
            }
            match out.format {
                Format::Json => println!("{}", report_json(&rep, out.show_discrepancies)),
                Format::Csv => println!("{}", report_row(&rep)),
                Format::Text => print!("{}", report_text(&rep, out.show_discrepancies)),
            }
        }
        Err(e) => {
            eprintln!("icc: {e}");
            status = status.max(exit_code(&e));
        }
    });
    status
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Info(c) => (c, info(c)),
        Command::Codewords { common, limit, all } => (common, codewords(common, *limit, *all)),
        Command::Weights(c) => (c, weights(c)),
        Command::Periods(c) => (c, periods(c)),
        Command::Poly(c) => (c, poly(c)),
        Command::Verify(c) => (c, verify_one(c)),
        Command::Sweep { out, p_max, s_max, m_max, indices, r_max } => {
            return ExitCode::from(sweep(out, *p_max, *s_max, *m_max, indices.clone(), *r_max));
        }
    };
    match result {
        Ok(r) => {
            emit(common.out.format, &r);
            ExitCode::from(r.status)
        }
        Err(e) => {
            let code = exit_code(&e);
            let r = Rendered {
                json: json!({"error": {"kind": error_kind(&e), "message": e.to_string(), "exit": code}}),
                csv: format!("error,message\n{},\"{}\"\n", error_kind(&e), e),
                text: format!("error: {e}\n"),
                status: code,
            };
            eprintln!("icc: {e}");
            emit(common.out.format, &r);
            ExitCode::from(code)
        }
    }
}
