use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use leechlab::families::FamilySpec;
use leechlab::formulas::{
    closed_form_tgp, cycle_feasibility, edge_transitive_feasibility, general_weighted_sum_identity,
    knn_feasibility, FeasibilityResult, FormulaError,
};
use leechlab::io::{parse_graph6, parse_label_values, write_labels};
use leechlab::labeling::{classify, Labeling, LabelingError, Verdict};
use leechlab::search::{census_corpus, CensusOptions, CensusRow, SearchError};
use leechlab::{census, count_geodesics, search, Graph, SearchConfig, SearchMode, SearchOutcome, SearchStatus, REPORT_SCHEMA};
use serde_json::{json, Value};

use crate::source::{read_text, Source, SourceArgs};
use crate::*;

pub fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Tgp { graph, source, closed_form, json } => tgp(graph.as_deref(), &source, closed_form, json),
        Command::Verify { inputs, source, json } => verify(&inputs, &source, json),
        Command::Search {
            graph,
            source,
            preset,
            almost,
            max_label,
            sum,
            time_limit,
            node_limit,
            all,
            workers,
            seedless: _,
            symmetry,
            output,
            json,
        } => {
            let (label, g, mut cfg) = match preset {
                Some(name) => {
                    let preset: leechlab::search::Preset = name.parse().map_err(|e: SearchError| Failure::usage(e.to_string()))?;
                    let (g, mut cfg) = preset.problem().map_err(|e| Failure::usage(e.to_string()))?;
                    if almost && cfg.mode != SearchMode::Almost {
                        cfg = SearchConfig::defaults(&g, &census(&g), SearchMode::Almost);
                    }
                    (name, g, cfg)
                }
                None => {
                    let (src, g) = source.load(graph.as_deref())?;
                    let mode = if almost { SearchMode::Almost } else { SearchMode::Leech };
                    let cfg = SearchConfig::defaults(&g, &census(&g), mode);
                    (src.describe(), g, cfg)
                }
            };
            if let Some(m) = max_label {
                cfg.max_label = m;
            }
            if sum.is_some() {
                cfg.forced_label_sum = sum;
            }
            cfg.time_limit = time_limit;
            cfg.node_limit = node_limit;
            cfg.find_all = all;
            cfg.workers = workers;
            cfg.cycle_symmetry = symmetry;
            run_search(&label, &g, &cfg, output.as_deref(), json)
        }
        Command::Feasible { graph, source, range, json } => feasible(graph.as_deref(), &source, range.as_deref(), json),
        Command::Census { corpus, workers, time_limit, node_limit } => {
            let opts = CensusOptions { time_limit, node_limit, workers: workers.max(1) };
            run_census(&corpus, &opts)
        }
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn tgp(graph: Option<&Path>, source: &SourceArgs, closed_form: bool, json_out: bool) -> Result<u8, Failure> {
    let (src, g) = source.load(graph)?;
    let c = census(&g);
    let counted = count_geodesics(&g);
    if counted != c.total {
        return Err(Failure::internal(format!(
            "path counting gives {counted} but enumeration gives {}",
            c.total
        )));
    }
    let expected = if closed_form {
        let Source::Family(spec) = &src else {
            return Err(Failure::usage("--closed-form needs --family"));
        };
        let value = closed_form_tgp(spec)
            .ok_or_else(|| Failure::usage(format!("no closed form known for {spec}")))?
            .map_err(|e: FormulaError| Failure::usage(e.to_string()))?;
        if value != c.total {
            return Err(Failure::internal(format!(
                "MISMATCH for {spec}: closed form {value}, enumeration {}",
                c.total
            )));
        }
        Some(value)
    } else {
        None
    };

    if json_out {
        print_json(&json!({
            "schema": REPORT_SCHEMA,
            "command": "tgp",
            "source": src.describe(),
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "census": c,
            "closed_form": expected,
        }));
    } else {
        println!("source: {}", src.describe());
        println!("vertices: {}  edges: {}", g.vertex_count(), g.edge_count());
        println!("t_gp: {}", c.total);
        println!("diameter: {}", c.diameter);
        println!("by length: {}", join(c.by_length.iter().map(|(l, n)| format!("{l}:{n}"))));
        println!("per edge: {}", join(&c.per_edge));
        if let Some(v) = expected {
            println!("closed form: {v} (agrees)");
        }
    }
    Ok(0)
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::GeodesicLeech => 0,
        Verdict::AlmostGeodesicLeech => EXIT_ALMOST,
        Verdict::Neither => EXIT_NEITHER,
    }
}

fn labeling_error(e: LabelingError) -> Failure {
    Failure::data(e.to_string())
}

fn verify(inputs: &[PathBuf], source: &SourceArgs, json_out: bool) -> Result<u8, Failure> {
    let (graph, labels_path) = match (source.family.is_some(), inputs) {
        (true, [labels]) => (None, labels),
        (false, [graph, labels]) => (Some(graph.as_path()), labels),
        (true, _) => return Err(Failure::usage("with --family, give only the labeling file")),
        (false, _) => return Err(Failure::usage("give a graph file and a labeling file")),
    };
    let (src, g) = source.load(graph)?;
    let text = read_text(labels_path)?;
    let values = parse_label_values(&text).map_err(|e| Failure::data(format!("{}: {e}", labels_path.display())))?;
    let lab = Labeling::from_values(&values).map_err(labeling_error)?;
    let report = classify(&g, &lab).map_err(labeling_error)?;

    if json_out {
        print_json(&json!({
            "schema": REPORT_SCHEMA,
            "command": "verify",
            "source": src.describe(),
            "labels": lab,
            "report": report,
        }));
    } else {
        println!("source: {}", src.describe());
        println!("labels: {}", join(lab.labels()));
        println!("verdict: {:?}", report.verdict);
        println!("t_gp: {}", report.t_gp);
        println!("weights: {}", join(&report.weight_multiset));
        if report.verdict != Verdict::GeodesicLeech {
            println!("missing: {}", join(&report.missing));
            println!(
                "duplicates: {}",
                join(report.duplicates.iter().map(|(w, c)| format!("{w}x{c}")))
            );
            println!("overshoot: {}", join(&report.overshoot));
        }
    }
    Ok(verdict_code(report.verdict))
}

fn status_code(status: SearchStatus) -> u8 {
    match status {
        SearchStatus::Found => 0,
        SearchStatus::ExhaustedNone => EXIT_EXHAUSTED,
        SearchStatus::TimedOut => EXIT_TIMED_OUT,
        SearchStatus::NodeLimit => EXIT_NODE_LIMIT,
    }
}

fn run_search(label: &str, g: &Graph, cfg: &SearchConfig, output: Option<&Path>, json_out: bool) -> Result<u8, Failure> {
    let outcome: SearchOutcome = search(g, cfg).map_err(|e| match e {
        SearchError::ConfigInvalid(_) | SearchError::EmptyGraph => Failure::usage(e.to_string()),
        other => Failure::internal(other.to_string()),
    })?;
    if let (Some(path), Some(w)) = (output, outcome.witnesses.first()) {
        std::fs::write(path, write_labels(w.labels()))
            .map_err(|e| Failure::no_input(format!("{}: {e}", path.display())))?;
    }
    let reports: Vec<_> = outcome
        .witnesses
        .iter()
        .map(|w| classify(g, w).map_err(labeling_error))
        .collect::<Result<_, _>>()?;

    if json_out {
        print_json(&json!({
            "schema": REPORT_SCHEMA,
            "command": "search",
            "source": label,
            "config": cfg,
            "outcome": outcome,
            "reports": reports,
        }));
    } else {
        let b = &outcome.bounds;
        println!("# leechlab search: {label} ({:?} mode)", cfg.mode);
        println!(
            "# status {:?}: {} nodes, {} ms",
            outcome.status,
            outcome.nodes_explored,
            outcome.elapsed.as_millis()
        );
        for (w, r) in outcome.witnesses.iter().zip(&reports) {
            print!("{}", write_labels(w.labels()));
            println!("# verified {:?}, t_gp = {}", r.verdict, r.t_gp);
        }
        if outcome.status != SearchStatus::Found {
            println!(
                "# bounds: t_gp {}, labels 1..={}, label sum {}, weighted target {} over coefficients [{}]{}",
                b.t_gp,
                b.label_cap,
                b.forced_label_sum.map_or("free".to_string(), |s| s.to_string()),
                b.weighted_sum_target,
                join(&b.weighted_sum_coefficients),
                if b.cycle_symmetry { ", cycle symmetry broken" } else { "" }
            );
        }
        if outcome.status == SearchStatus::ExhaustedNone {
            println!("# certificate: every labeling within these bounds was covered; none qualifies");
        }
    }
    Ok(status_code(outcome.status))
}

fn feasibility_of(spec: Option<&FamilySpec>, g: Option<&Graph>) -> Result<Value, Failure> {
    let result: Option<FeasibilityResult> = match spec {
        Some(FamilySpec::Cycle(n)) => Some(cycle_feasibility(*n as u64).map_err(|e| Failure::usage(e.to_string()))?),
        Some(FamilySpec::Knn(n)) => Some(knn_feasibility(*n as u64).map_err(|e| Failure::usage(e.to_string()))?),
        _ => None,
    };
    if let Some(r) = result {
        return Ok(serde_json::to_value(r).expect("serializable"));
    }
    let owned;
    let g = match (g, spec) {
        (Some(g), _) => g,
        (None, Some(spec)) => {
            owned = spec.build().map_err(|e| Failure::usage(e.to_string()))?;
            &owned
        }
        (None, None) => return Err(Failure::usage("no graph given")),
    };
    if g.edge_count() == 0 {
        return Err(Failure::usage("graph has no edges"));
    }
    let c = census(g);
    Ok(match c.uniform_edge_count() {
        Some(k) => serde_json::to_value(edge_transitive_feasibility(k, c.total, g.edge_count() as u64)).expect("serializable"),
        None => {
            let identity = general_weighted_sum_identity(&c);
            json!({
                "feasible": Value::Null,
                "identity": identity,
                "reason": format!(
                    "edges lie on different numbers of geodesics; a Leech labeling must satisfy sum k_e a_e = {}",
                    identity.target
                ),
            })
        }
    })
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::usage(format!("bad range `{text}`, expected lo..hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let (lo, hi): (usize, usize) = (lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?);
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn feasible(graph: Option<&Path>, source: &SourceArgs, range: Option<&str>, json_out: bool) -> Result<u8, Failure> {
    if let Some(range) = range {
        let family = source
            .family
            .as_deref()
            .ok_or_else(|| Failure::usage("--range needs --family name:n"))?;
        let name = family.strip_suffix(":n").ok_or_else(|| Failure::usage("--range needs a family of the form name:n"))?;
        let template: FamilySpec = format!("{name}:3")
            .parse()
            .map_err(|e: leechlab::families::FamilyError| Failure::usage(e.to_string()))?;
        let (lo, hi) = parse_range(range)?;
        let mut rows = Vec::new();
        let mut feasible_at = Vec::new();
        for n in lo..=hi {
            let spec = template
                .with_size(n)
                .ok_or_else(|| Failure::usage(format!("{name} takes no size parameter")))?;
            let r = feasibility_of(Some(&spec), None)?;
            if r["feasible"] == json!(true) {
                feasible_at.push(n);
            }
            if !json_out {
                println!("{spec}: {}", describe_feasibility(&r));
            }
            rows.push(json!({ "n": n, "result": r }));
        }
        if json_out {
            print_json(&json!({
                "schema": REPORT_SCHEMA,
                "command": "feasible",
                "family": name,
                "range": [lo, hi],
                "results": rows,
                "feasible": feasible_at,
            }));
        } else {
            println!("feasible at: {}", join(&feasible_at));
        }
        return Ok(0);
    }

    let (src, g) = source.load(graph)?;
    let spec = match &src {
        Source::Family(spec) => Some(*spec),
        Source::File(_) => None,
    };
    let r = feasibility_of(spec.as_ref(), Some(&g))?;
    if json_out {
        print_json(&json!({
            "schema": REPORT_SCHEMA,
            "command": "feasible",
            "source": src.describe(),
            "result": r,
        }));
    } else {
        println!("{}: {}", src.describe(), describe_feasibility(&r));
    }
    Ok(0)
}

fn describe_feasibility(r: &Value) -> String {
    let verdict = match r["feasible"].as_bool() {
        Some(true) => "feasible",
        Some(false) => "infeasible",
        None => "undecided",
    };
    format!("{verdict}: {}", r["reason"].as_str().unwrap_or(""))
}

fn census_line(row: &CensusRow) -> String {
    let mut v = json!({
        "schema": REPORT_SCHEMA,
        "index": row.index,
        "n": row.n,
        "m": row.m,
        "t_gp": row.t_gp,
        "verdict": row.verdict,
        "nodes": row.nodes,
        "millis": row.millis,
    });
    if let Some(w) = &row.witness {
        v["labels"] = json!(w);
    }
    if let Some(e) = &row.error {
        v["error"] = json!(e);
    }
    v.to_string()
}

fn run_census(corpus: &Path, opts: &CensusOptions) -> Result<u8, Failure> {
    let reader: Box<dyn BufRead> = if corpus == Path::new("-") {
        Box::new(BufReader::new(std::io::stdin()))
    } else {
        let file = std::fs::File::open(corpus).map_err(|e| Failure::no_input(format!("{}: {e}", corpus.display())))?;
        Box::new(BufReader::new(file))
    };
    let batch_size = opts.workers.max(1) * 4;
    let mut counts = [0usize; 5];
    let mut stdout = std::io::stdout().lock();
    let mut index = 0;
    let mut lines = reader.lines();
    loop {
        // (index, parsed graph or error) in input order
        let mut batch: Vec<(usize, Result<Graph, String>)> = Vec::new();
        for line in lines.by_ref() {
            let line = line.map_err(|e| Failure::no_input(format!("{}: {e}", corpus.display())))?;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let parsed = parse_graph6(&line).map_err(|e| format!("line {}: {e}", index + 1));
            batch.push((index, parsed));
            index += 1;
            if batch.len() == batch_size {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let graphs: Vec<Graph> = batch.iter().filter_map(|(_, g)| g.as_ref().ok().cloned()).collect();
        let mut solved = census_corpus(&graphs, opts).into_iter();
        for (i, parsed) in batch {
            let row = match parsed {
                Ok(_) => {
                    let mut row = solved.next().expect("one row per graph");
                    row.index = i;
                    row
                }
                Err(e) => CensusRow::error(i, e),
            };
            counts[row.verdict as usize] += 1;
            writeln!(stdout, "{}", census_line(&row)).map_err(|e| Failure::internal(e.to_string()))?;
        }
    }
    let [leech, almost, neither, timeout, error] = counts;
    writeln!(
        stdout,
        "{}",
        json!({
            "schema": REPORT_SCHEMA,
            "summary": {
                "graphs": index,
                "leech": leech,
                "almost": almost,
                "neither": neither,
                "timeout": timeout,
                "error": error,
            }
        })
    )
    .map_err(|e| Failure::internal(e.to_string()))?;
    eprintln!("leech={leech} almost={almost} neither={neither} timeout={timeout} error={error}");
    Ok(0)
}
