//! Command handlers and report assembly.

use crate::io::{self, BatchItem};
use crate::{Cli, Command, Family, Output};
use mprec_core::analysis::registry::{self, VerifyParams};
use mprec_core::analysis::{extremal, nordhaus, DEFAULT_SEED};
use mprec_core::constructions::{self, MinusKind};
use mprec_core::graph::Graph;
use mprec_core::preclusion::{mp, upper_bounds, verify_certificate};
use mprec_core::report::{
    BoundsRecord, CertificateRecord, MpValueRecord, TheoremReport, TheoremStatus,
};
use rayon::prelude::*;
use serde::Serialize;
use std::process::ExitCode;
use std::time::Instant;

type CmdResult = Result<ExitCode, Box<dyn std::error::Error>>;

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Mp { input } => cmd_mp(cli, input, false),
        Command::Bounds { input } => cmd_mp(cli, input, true),
        Command::Certify { input, certificate } => cmd_certify(cli, input, certificate),
        Command::Generate { family, n, k, r, t } => cmd_generate(cli, *family, *n, *k, *r, *t),
        Command::VerifyTheorem {
            id,
            n,
            k,
            r,
            samples,
        } => cmd_verify(cli, id, *n, *k, *r, *samples),
        Command::Scan { samples } => cmd_scan(cli, *samples),
        Command::NgScan { n, samples } => cmd_ng_scan(cli, *n, *samples),
        Command::SFG { n, k } => cmd_sfg(cli, *n, *k),
    }
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    results: Vec<T>,
    timing_ms: u128,
}

#[derive(Serialize)]
struct GraphOutcome {
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mp: Option<MpValueRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn emit<T: Serialize>(cli: &Cli, report: &Report<T>, text: String, csv: String) {
    match cli.output {
        Output::Text => print!("{text}"),
        Output::Json => println!(
            "{}",
            serde_json::to_string(report).expect("report serialises")
        ),
        Output::Csv => print!("{csv}"),
    }
}

fn mp_display(v: &MpValueRecord) -> String {
    match v {
        MpValueRecord::Finite(k) => k.to_string(),
        MpValueRecord::Marker(_) => "not precludable".to_string(),
    }
}

fn cmd_mp(cli: &Cli, input: &str, bounds_only: bool) -> CmdResult {
    let started = Instant::now();
    let source = io::read_source(input)?;
    let items = io::parse_batch(&source, cli.format);
    let outcomes: Vec<GraphOutcome> = items
        .par_iter()
        .map(|item| solve_item(item, bounds_only))
        .collect();

    let mut text = String::new();
    let mut csv = String::from(if bounds_only {
        "index,n,m,even_delta,odd_xi,odd_two_vertex\n"
    } else {
        "index,n,m,mp\n"
    });
    let mut worst = 0u8;
    for o in &outcomes {
        if let Some(err) = &o.error {
            text.push_str(&format!("graph {}: error: {err}\n", o.index));
            csv.push_str(&format!("{},,,\n", o.index));
            worst = worst.max(2);
            continue;
        }
        let (n, m) = (o.n.unwrap_or_default(), o.m.unwrap_or_default());
        if bounds_only {
            let b = o.bounds.as_ref().expect("bounds computed");
            let fmt_opt = |x: Option<usize>| x.map_or(String::from("-"), |v| v.to_string());
            text.push_str(&format!(
                "graph {}: n={n} m={m} even_delta={} odd_xi={} odd_two_vertex={}\n",
                o.index,
                fmt_opt(b.even_delta),
                fmt_opt(b.odd_xi),
                fmt_opt(b.odd_two_vertex),
            ));
            csv.push_str(&format!(
                "{},{n},{m},{},{},{}\n",
                o.index,
                fmt_opt(b.even_delta),
                fmt_opt(b.odd_xi),
                fmt_opt(b.odd_two_vertex),
            ));
        } else {
            let value = o.mp.as_ref().expect("mp computed");
            text.push_str(&format!(
                "graph {}: n={n} m={m} mp={}",
                o.index,
                mp_display(value)
            ));
            if let Some(cert) = &o.certificate {
                text.push_str(&format!(" F={:?} S={:?}", cert.f, cert.s));
            }
            text.push('\n');
            csv.push_str(&format!("{},{n},{m},{}\n", o.index, mp_display(value)));
        }
    }
    let report = Report {
        command: if bounds_only { "bounds" } else { "mp" }.to_string(),
        seed: cli.seed,
        results: outcomes,
        timing_ms: started.elapsed().as_millis(),
    };
    emit(cli, &report, text, csv);
    Ok(ExitCode::from(worst))
}

fn solve_item(item: &BatchItem, bounds_only: bool) -> GraphOutcome {
    let mut outcome = GraphOutcome {
        index: item.index,
        n: None,
        m: None,
        mp: None,
        certificate: None,
        bounds: None,
        error: None,
    };
    match &item.graph {
        Err(e) => outcome.error = Some(e.clone()),
        Ok(g) => {
            outcome.n = Some(g.order());
            outcome.m = Some(g.edge_count());
            if bounds_only {
                outcome.bounds = Some(upper_bounds(g).into());
            } else {
                let result = mp(g);
                outcome.mp = Some(result.value.into());
                outcome.certificate = result.certificate.as_ref().map(CertificateRecord::from);
            }
        }
    }
    outcome
}

fn cmd_certify(cli: &Cli, input: &str, certificate: &str) -> CmdResult {
    let started = Instant::now();
    let source = io::read_source(input)?;
    let items = io::parse_batch(&source, cli.format);
    let item = items.first().ok_or("no graph in input")?;
    let g = item.graph.as_ref().map_err(|e| e.clone())?;
    let cert_text = io::read_source(certificate)?;
    let record: CertificateRecord =
        serde_json::from_str(&cert_text).map_err(|e| format!("certificate JSON: {e}"))?;

    #[derive(Serialize)]
    struct CertifyOutcome {
        n: usize,
        m: usize,
        valid: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        rejected: Option<String>,
    }

    let (valid, rejected) = match record.to_certificate() {
        Err(e) => (false, Some(e.to_string())),
        Ok(cert) => match verify_certificate(g, &cert) {
            Ok(v) => (v, None),
            Err(e) => (false, Some(e.to_string())),
        },
    };
    let text = match (&valid, &rejected) {
        (true, _) => "certificate valid: proves the graph precludable\n".to_string(),
        (false, Some(r)) => format!("certificate rejected: {r}\n"),
        (false, None) => "certificate well-formed but proves nothing\n".to_string(),
    };
    let report = Report {
        command: "certify".to_string(),
        seed: cli.seed,
        results: vec![CertifyOutcome {
            n: g.order(),
            m: g.edge_count(),
            valid,
            rejected,
        }],
        timing_ms: started.elapsed().as_millis(),
    };
    emit(cli, &report, text.clone(), text);
    Ok(ExitCode::from(u8::from(!valid)))
}

fn cmd_generate(
    cli: &Cli,
    family: Family,
    n: usize,
    k: Option<usize>,
    r: Option<usize>,
    t: Option<usize>,
) -> CmdResult {
    let need = |p: Option<usize>, name: &str| -> Result<usize, String> {
        p.ok_or(format!("family requires --{name}"))
    };
    let g: Graph = match family {
        Family::Complete => constructions::complete(n)?,
        Family::Empty => constructions::empty(n)?,
        Family::Path => constructions::path(n)?,
        Family::Cycle => constructions::cycle(n)?,
        Family::Star => constructions::star(n)?,
        Family::NearPmPlusIsolated => constructions::near_pm_plus_isolated(n)?,
        Family::CompleteMinusEdge => constructions::complete_minus(n, MinusKind::OneEdge)?,
        Family::CompleteMinusP3 => constructions::complete_minus(n, MinusKind::P3)?,
        Family::CompleteMinusMatching => {
            constructions::complete_minus(n, MinusKind::Matching(need(t, "t")?))?
        }
        Family::OneFactorUnion => constructions::one_factor_union(n, need(k, "k")?)?,
        Family::NearFactorUnion => constructions::near_factor_union(n, need(r, "r")?)?,
        Family::HamUnion => constructions::ham_union(n, need(k, "k")?)?,
        Family::FWitness => constructions::f_witness(n, need(k, "k")?)?,
        Family::CliqueSatellites => constructions::clique_with_satellites(n)?,
        Family::UniversalFactors => constructions::universal_plus_factors(n, need(r, "r")?)?,
    };
    print!("{}", io::encode_graph(&g, cli.format)?);
    Ok(ExitCode::SUCCESS)
}

fn verify_params(
    cli: &Cli,
    n: Option<usize>,
    k: Option<usize>,
    r: Option<usize>,
    samples: Option<usize>,
) -> VerifyParams {
    let defaults = VerifyParams::default();
    VerifyParams {
        n,
        k,
        r,
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
        samples: samples.unwrap_or(defaults.samples),
        oracle_cap: cli.oracle_cap,
    }
}

fn theorem_text(report: &TheoremReport) -> String {
    let mut line = report.csv_row().replace(',', " ");
    if let Some(ce) = &report.counterexample {
        line.push_str(&format!("  counterexample {} ({})", ce.graph6, ce.observed));
    }
    line.push('\n');
    line
}

fn cmd_verify(
    cli: &Cli,
    id: &str,
    n: Option<usize>,
    k: Option<usize>,
    r: Option<usize>,
    samples: Option<usize>,
) -> CmdResult {
    let started = Instant::now();
    let params = verify_params(cli, n, k, r, samples);
    let result = registry::verify(id, &params)?;
    let exit = ExitCode::from(u8::from(result.status == TheoremStatus::Counterexample));
    let text = theorem_text(&result);
    let csv = format!("theorem_id,mode,params,status\n{}\n", result.csv_row());
    let report = Report {
        command: format!("verify-theorem {id}"),
        seed: Some(params.seed),
        results: vec![result],
        timing_ms: started.elapsed().as_millis(),
    };
    emit(cli, &report, text, csv);
    Ok(exit)
}

fn cmd_scan(cli: &Cli, samples: Option<usize>) -> CmdResult {
    let started = Instant::now();
    let plan = registry::default_plan(cli.enum_cap);
    let mut results = Vec::new();
    let mut text = String::new();
    let mut csv = String::from("theorem_id,mode,params,status\n");
    let mut worst = ExitCode::SUCCESS;
    for (id, mut params) in plan {
        params.seed = cli.seed.unwrap_or(DEFAULT_SEED);
        params.oracle_cap = cli.oracle_cap;
        if let Some(s) = samples {
            params.samples = s;
        }
        let report = registry::verify(id, &params)?;
        if report.status == TheoremStatus::Counterexample {
            worst = ExitCode::from(1);
        }
        text.push_str(&theorem_text(&report));
        csv.push_str(&report.csv_row());
        csv.push('\n');
        results.push(report);
    }
    let report = Report {
        command: "scan".to_string(),
        seed: Some(cli.seed.unwrap_or(DEFAULT_SEED)),
        results,
        timing_ms: started.elapsed().as_millis(),
    };
    emit(cli, &report, text, csv);
    Ok(worst)
}

fn cmd_ng_scan(cli: &Cli, n: usize, samples: Option<usize>) -> CmdResult {
    let started = Instant::now();

    #[derive(Serialize)]
    struct NgOutcome {
        n: usize,
        scanned: u64,
        sum_bound: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        product_bound: Option<usize>,
        max_sum: usize,
        max_product: usize,
        sum_violations: u64,
        product_violations: u64,
        attained_sums: Vec<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    }

    let summary = if n <= cli.enum_cap && n <= 7 {
        nordhaus::scan_exhaustive(n)?
    } else {
        nordhaus::scan_sampled(n, cli.seed.unwrap_or(DEFAULT_SEED), samples.unwrap_or(300))
    };
    let violations = summary.sum_violations + summary.product_violations;
    let outcome = NgOutcome {
        n: summary.n,
        scanned: summary.scanned,
        sum_bound: summary.sum_bound,
        product_bound: summary.product_bound,
        max_sum: summary.max_sum,
        max_product: summary.max_product,
        sum_violations: summary.sum_violations,
        product_violations: summary.product_violations,
        attained_sums: summary.attained_sums.clone(),
        seed: summary.seed,
    };
    let text = format!(
        "n={} scanned={} max_sum={} (bound {}) max_product={} (bound {}) violations={} attained_sums={:?}\n",
        outcome.n,
        outcome.scanned,
        outcome.max_sum,
        outcome.sum_bound,
        outcome.max_product,
        outcome
            .product_bound
            .map_or("-".to_string(), |b| b.to_string()),
        violations,
        outcome.attained_sums,
    );
    let csv = format!(
        "n,scanned,max_sum,sum_bound,max_product,product_bound,violations\n{},{},{},{},{},{},{}\n",
        outcome.n,
        outcome.scanned,
        outcome.max_sum,
        outcome.sum_bound,
        outcome.max_product,
        outcome
            .product_bound
            .map_or(String::new(), |b| b.to_string()),
        violations,
    );
    let report = Report {
        command: "ng-scan".to_string(),
        seed: outcome.seed,
        results: vec![outcome],
        timing_ms: started.elapsed().as_millis(),
    };
    emit(cli, &report, text, csv);
    Ok(ExitCode::from(u8::from(violations > 0)))
}

fn cmd_sfg(cli: &Cli, n: usize, k: Option<usize>) -> CmdResult {
    let started = Instant::now();

    #[derive(Serialize)]
    struct SfgOutcome {
        n: usize,
        k: usize,
        s: Option<usize>,
        f: Option<usize>,
        g: Option<usize>,
    }

    let range: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=extremal::max_mp(n)?).collect(),
    };
    let mut results = Vec::new();
    let mut text = String::new();
    let mut csv = String::from("n,k,s,f,g\n");
    for k in range {
        let s = extremal::brute_s(n, k)?;
        let f = extremal::brute_f(n, k)?;
        let g = extremal::brute_g(n, k)?;
        let fmt_opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        text.push_str(&format!(
            "n={n} k={k}: s={} f={} g={}\n",
            fmt_opt(s.value),
            fmt_opt(f.value),
            fmt_opt(g.value)
        ));
        csv.push_str(&format!(
            "{n},{k},{},{},{}\n",
            fmt_opt(s.value),
            fmt_opt(f.value),
            fmt_opt(g.value)
        ));
        results.push(SfgOutcome {
            n,
            k,
            s: s.value,
            f: f.value,
            g: g.value,
        });
    }
    let report = Report {
        command: "s-f-g".to_string(),
        seed: cli.seed,
        results,
        timing_ms: started.elapsed().as_millis(),
    };
    emit(cli, &report, text, csv);
    Ok(ExitCode::SUCCESS)
}
