//! The six commands. Each returns its rendered report; failures map to exit
//! codes through [`CliError`].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use clutterlab::corpus::{all_clutters, random_clutter, random_independent_set};
use clutterlab::domination::{domination_report, edge_cover};
use clutterlab::verify::{check_clutter, check_field_dominance, Violation};
use clutterlab::{
    bounds_report, closed_forms, connected_graph_clutter, epsilon, family_clutter, independent_domination,
    realizability_search, BoundsReport, Clutter, FamilyKind, FamilySpec, FieldSpec, Hochster, VertexSet,
};

use crate::error::CliError;
use crate::input::{parse, read_source, ClutterFile, GraphFile, Parsed};
use crate::output::{json, opt, Tsv};
use crate::{Command, Format, Report, RunConfig, SCHEMA_VERSION};

/// Random independent sets tried per fuzzed clutter for the colon check.
const FUZZ_COLON_SETS: usize = 3;

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match &cfg.command {
        Command::Analyze { input, betti, k } => {
            let c = match parse(&read_source(input)?)? {
                Parsed::Clutter(c) if k.is_none() => c,
                Parsed::Clutter(_) => return Err(CliError::Input("--k applies to graph input only".into())),
                Parsed::Graph(g) => connected_graph_clutter(&g, k.unwrap_or(2))?,
            };
            analyze(cfg, &c, *betti)
        }
        Command::Family { kind, n, k } => family(cfg, FamilySpec::new(*kind, *n, *k)),
        Command::Scan { n } => scan(cfg, *n),
        Command::Fuzz { n, trials, seed } => fuzz(cfg, *n, *trials, *seed),
        Command::Realizable { input, k } => realizable(cfg, &read_clutter(input)?, *k),
        Command::Dual { input } => dual(cfg, &read_clutter(input)?),
    }
}

fn read_clutter(path: &std::path::Path) -> Result<Clutter, CliError> {
    match parse(&read_source(path)?)? {
        Parsed::Clutter(c) => Ok(c),
        Parsed::Graph(_) => Err(CliError::Input("expected a clutter, found a graph".into())),
    }
}

fn guard(what: &str, size: usize, cfg: &RunConfig) -> Result<(), CliError> {
    if size > cfg.max_n {
        return Err(CliError::Guard(format!(
            "{what} = {size} exceeds the limit {} (raise with --max-n or CLUTTERLAB_MAX_N)",
            cfg.max_n
        )));
    }
    Ok(())
}

fn hochster(cfg: &RunConfig) -> Hochster {
    Hochster::new(cfg.field).with_max_vertices(cfg.max_n)
}

fn names(c: &Clutter, s: VertexSet) -> Vec<String> {
    c.set_names(s).into_iter().map(str::to_string).collect()
}

#[derive(Serialize)]
struct Witnesses {
    edgewise_dominant_family: Vec<Vec<String>>,
    maximal_independent_set: Vec<String>,
    /// Edges covering every non-isolated vertex; absent without edges.
    edge_cover: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct BettiEntry {
    i: usize,
    degree: usize,
    support: Vec<String>,
    value: usize,
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    schema: u32,
    command: &'static str,
    clutter: ClutterFile,
    report: &'a BoundsReport,
    witnesses: Witnesses,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti: Option<Vec<BettiEntry>>,
}

pub const ANALYZE_COLUMNS: [&str; 15] = [
    "n",
    "field",
    "pd",
    "reg",
    "epsilon",
    "i_dom",
    "big_height",
    "alpha",
    "edgewise_bound",
    "faltings_bound",
    "alpha_reg_bound",
    "taylor_reg_bound",
    "comparison_predicate",
    "tight_edgewise",
    "tight_faltings",
];

pub const BETTI_COLUMNS: [&str; 4] = ["i", "degree", "support", "value"];

fn analyze(cfg: &RunConfig, c: &Clutter, with_betti: bool) -> Result<Report, CliError> {
    let (stripped, _) = c.strip_isolated();
    guard("vertex count", stripped.vertex_count(), cfg)?;
    let h = hochster(cfg);
    let report = bounds_report(c, &h)?;
    let dom = domination_report(c)?;
    let cover = if stripped.has_edges() { Some(edge_cover(&stripped)?) } else { None };
    let betti = if with_betti {
        let table = h.betti_table(&stripped)?;
        Some(
            table
                .iter()
                .map(|(i, a, value)| BettiEntry { i, degree: a.len(), support: names(c, a), value })
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let text = match cfg.format {
        Format::Json => json(&AnalyzeReport {
            schema: SCHEMA_VERSION,
            command: "analyze",
            clutter: ClutterFile::from_clutter(c),
            report: &report,
            witnesses: Witnesses {
                edgewise_dominant_family: dom.witness_f.iter().map(|&e| names(c, e)).collect(),
                maximal_independent_set: names(c, dom.witness_i),
                edge_cover: cover.map(|f| f.iter().map(|&e| names(c, e)).collect()),
            },
            betti,
        }),
        Format::Tsv => {
            let r = &report;
            let mut t = Tsv::new(&ANALYZE_COLUMNS);
            t.row(&[
                r.n.to_string(),
                r.field.to_string(),
                r.pd.to_string(),
                r.reg_of_ideal.to_string(),
                r.epsilon.to_string(),
                r.i_dom.to_string(),
                r.big_height.to_string(),
                r.alpha.to_string(),
                r.edgewise_bound.to_string(),
                opt(r.faltings_bound),
                r.alpha_reg_bound.to_string(),
                opt(r.taylor_reg_bound),
                opt(r.comparison_predicate),
                r.tight_edgewise.to_string(),
                opt(r.tight_faltings),
            ]);
            if let Some(entries) = betti {
                t.section(&BETTI_COLUMNS);
                for b in entries {
                    t.row(&[b.i.to_string(), b.degree.to_string(), b.support.join(","), b.value.to_string()]);
                }
            }
            t.finish()
        }
    };
    Ok(Report { text, violations: false })
}

#[derive(Serialize)]
struct Column {
    name: &'static str,
    computed: usize,
    closed_form: usize,
    status: &'static str,
}

#[derive(Serialize)]
struct FamilyReport {
    schema: u32,
    command: &'static str,
    kind: FamilyKind,
    n: usize,
    k: usize,
    field: FieldSpec,
    columns: Vec<Column>,
    all_match: bool,
}

pub const FAMILY_COLUMNS: [&str; 13] = [
    "kind",
    "n",
    "k",
    "field",
    "i",
    "i_closed_form",
    "i_status",
    "epsilon",
    "epsilon_closed_form",
    "epsilon_status",
    "pd",
    "pd_closed_form",
    "pd_status",
];

fn family(cfg: &RunConfig, spec: FamilySpec) -> Result<Report, CliError> {
    spec.validate()?;
    guard("n", spec.n, cfg)?;
    let c = family_clutter(&spec)?;
    let expected = closed_forms(&spec)?;
    let (i, _) = independent_domination(&c)?;
    let (eps, _) = epsilon(&c)?;
    let pd = hochster(cfg).pd(&c)?;
    let column = |name, computed, closed_form| Column {
        name,
        computed,
        closed_form,
        status: if computed == closed_form { "match" } else { "mismatch" },
    };
    let columns =
        vec![column("i", i, expected.i), column("epsilon", eps, expected.epsilon), column("pd", pd, expected.pd)];
    let all_match = columns.iter().all(|c| c.computed == c.closed_form);
    let text = match cfg.format {
        Format::Json => json(&FamilyReport {
            schema: SCHEMA_VERSION,
            command: "family",
            kind: spec.kind,
            n: spec.n,
            k: spec.k,
            field: cfg.field,
            columns,
            all_match,
        }),
        Format::Tsv => {
            let mut t = Tsv::new(&FAMILY_COLUMNS);
            let mut row = vec![spec.kind.to_string(), spec.n.to_string(), spec.k.to_string(), cfg.field.to_string()];
            for c in &columns {
                row.extend([c.computed.to_string(), c.closed_form.to_string(), c.status.to_string()]);
            }
            t.row(&row);
            t.finish()
        }
    };
    Ok(Report { text, violations: !all_match })
}

/// Checks one clutter: every cross-check of the verification module, plus
/// entrywise dominance of the prime-field Betti numbers over the rational
/// ones when the field is finite.
fn check_one(cfg: &RunConfig, c: &Clutter, colon_sets: &[VertexSet]) -> Result<Vec<Violation>, CliError> {
    let mut found = check_clutter(c, &hochster(cfg), colon_sets)?;
    if let FieldSpec::Prime(p) = cfg.field {
        found.extend(check_field_dominance(c, p, cfg.max_n)?);
    }
    Ok(found)
}

#[derive(Serialize)]
struct ScanReport {
    schema: u32,
    command: &'static str,
    n: usize,
    field: FieldSpec,
    clutters: usize,
    edgewise_tight: usize,
    faltings_tight: usize,
    comparison_holds: usize,
    violations: Vec<Violation>,
}

pub const SCAN_COLUMNS: [&str; 7] =
    ["n", "field", "clutters", "edgewise_tight", "faltings_tight", "comparison_holds", "violations"];

pub const VIOLATION_COLUMNS: [&str; 3] = ["check", "clutter", "detail"];

struct ScanItem {
    violations: Vec<Violation>,
    edgewise_tight: bool,
    faltings_tight: bool,
    comparison: bool,
}

fn scan(cfg: &RunConfig, n: usize) -> Result<Report, CliError> {
    guard("n", n, cfg)?;
    let corpus = all_clutters(n)?;
    let items = corpus
        .par_iter()
        .map(|c| {
            let all: Vec<VertexSet> = c.ground().subsets().collect();
            let mut violations = check_one(cfg, c, &all)?;
            let report = match bounds_report(c, &hochster(cfg)) {
                Ok(r) => Some(r),
                Err(clutterlab::Error::InvariantViolation(detail)) => {
                    violations.push(Violation { check: "bounds-report", clutter: c.to_string(), detail });
                    None
                }
                Err(e) => return Err(e.into()),
            };
            Ok(ScanItem {
                violations,
                edgewise_tight: report.as_ref().is_some_and(|r| r.tight_edgewise),
                faltings_tight: report.as_ref().is_some_and(|r| r.tight_faltings == Some(true)),
                comparison: report.as_ref().is_some_and(|r| r.comparison_predicate == Some(true)),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let count = |f: fn(&ScanItem) -> bool| items.iter().filter(|i| f(i)).count();
    let summary = ScanReport {
        schema: SCHEMA_VERSION,
        command: "scan",
        n,
        field: cfg.field,
        clutters: corpus.len(),
        edgewise_tight: count(|i| i.edgewise_tight),
        faltings_tight: count(|i| i.faltings_tight),
        comparison_holds: count(|i| i.comparison),
        violations: items.into_iter().flat_map(|i| i.violations).collect(),
    };
    let violations = !summary.violations.is_empty();
    let text = match cfg.format {
        Format::Json => json(&summary),
        Format::Tsv => {
            let s = &summary;
            let mut t = Tsv::new(&SCAN_COLUMNS);
            t.row(&[
                s.n.to_string(),
                s.field.to_string(),
                s.clutters.to_string(),
                s.edgewise_tight.to_string(),
                s.faltings_tight.to_string(),
                s.comparison_holds.to_string(),
                s.violations.len().to_string(),
            ]);
            violation_rows(&mut t, &s.violations);
            t.finish()
        }
    };
    Ok(Report { text, violations })
}

fn violation_rows(t: &mut Tsv, violations: &[Violation]) {
    if violations.is_empty() {
        return;
    }
    t.section(&VIOLATION_COLUMNS);
    for v in violations {
        t.row(&[v.check, &v.clutter, &v.detail]);
    }
}

#[derive(Serialize)]
struct FuzzReport {
    schema: u32,
    command: &'static str,
    n: usize,
    trials: usize,
    seed: u64,
    field: FieldSpec,
    colon_checks: usize,
    violations: Vec<Violation>,
}

pub const FUZZ_COLUMNS: [&str; 7] = ["n", "trials", "seed", "field", "colon_checks", "violations", "status"];

fn fuzz(cfg: &RunConfig, n: usize, trials: usize, seed: u64) -> Result<Report, CliError> {
    guard("n", n, cfg)?;
    // Draw everything up front so the stream of random numbers does not
    // depend on scheduling.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(trials);
    for _ in 0..trials {
        let c = random_clutter(&mut rng, n)?;
        let colon: Vec<VertexSet> = (0..FUZZ_COLON_SETS).filter_map(|_| random_independent_set(&mut rng, &c)).collect();
        cases.push((c, colon));
    }
    let found = cases.par_iter().map(|(c, colon)| check_one(cfg, c, colon)).collect::<Result<Vec<_>, CliError>>()?;
    let summary = FuzzReport {
        schema: SCHEMA_VERSION,
        command: "fuzz",
        n,
        trials,
        seed,
        field: cfg.field,
        colon_checks: cases.iter().map(|(_, a)| a.len()).sum(),
        violations: found.into_iter().flatten().collect(),
    };
    let violations = !summary.violations.is_empty();
    let text = match cfg.format {
        Format::Json => json(&summary),
        Format::Tsv => {
            let s = &summary;
            let mut t = Tsv::new(&FUZZ_COLUMNS);
            t.row(&[
                s.n.to_string(),
                s.trials.to_string(),
                s.seed.to_string(),
                s.field.to_string(),
                s.colon_checks.to_string(),
                s.violations.len().to_string(),
                if violations { "fail" } else { "pass" }.to_string(),
            ]);
            violation_rows(&mut t, &s.violations);
            t.finish()
        }
    };
    Ok(Report { text, violations })
}

#[derive(Serialize)]
struct RealizableReport {
    schema: u32,
    command: &'static str,
    k: usize,
    realizable: bool,
    graph: Option<GraphFile>,
}

pub const REALIZABLE_COLUMNS: [&str; 3] = ["k", "realizable", "adjacency"];

fn realizable(cfg: &RunConfig, c: &Clutter, k: Option<usize>) -> Result<Report, CliError> {
    guard("vertex count", c.vertex_count(), cfg)?;
    let k = match (k, c.uniformity()) {
        (Some(k), _) => k,
        (None, Some(k)) => k,
        (None, None) => {
            return Err(CliError::Input("pass --k for a clutter that is not uniform or has no edges".into()))
        }
    };
    let graph = realizability_search(c, k)?.map(|g| GraphFile::from_graph(&g));
    let text = match cfg.format {
        Format::Json => json(&RealizableReport {
            schema: SCHEMA_VERSION,
            command: "realizable",
            k,
            realizable: graph.is_some(),
            graph,
        }),
        Format::Tsv => {
            let mut t = Tsv::new(&REALIZABLE_COLUMNS);
            let adjacency = graph
                .as_ref()
                .map(|g| g.adjacency.iter().map(|[a, b]| format!("{a}-{b}")).collect::<Vec<_>>().join(","));
            t.row(&[k.to_string(), graph.is_some().to_string(), opt(adjacency)]);
            t.finish()
        }
    };
    Ok(Report { text, violations: false })
}

#[derive(Serialize)]
struct DualReport {
    schema: u32,
    command: &'static str,
    clutter: ClutterFile,
}

fn dual(cfg: &RunConfig, c: &Clutter) -> Result<Report, CliError> {
    guard("vertex count", c.vertex_count(), cfg)?;
    let d = c.alexander_dual()?;
    let file = ClutterFile::from_clutter(&d);
    let text = match cfg.format {
        Format::Json => json(&DualReport { schema: SCHEMA_VERSION, command: "dual", clutter: file }),
        Format::Tsv => {
            let mut t = Tsv::new(&file.vertices.iter().map(String::as_str).collect::<Vec<_>>());
            for e in &file.edges {
                t.row(e);
            }
            t.finish()
        }
    };
    Ok(Report { text, violations: false })
}
