//! Command-line front end: `analyze`, `verify`, `export` and `list`.
//!
//! [`run`] does all the work and returns the exit code with the captured
//! output, so tests can drive it without spawning a process.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ocgroup::chartab::{dixon_character_table, CharacterTable, DEFAULT_CHARACTER_CAP};
use ocgroup::construct::{builtin, parse_group_file, write_group_file, BUILTIN_NAMES};
use ocgroup::group::DEFAULT_ENUMERATION_CAP;
use ocgroup::lemma24::{self, Lemma24Report};
use ocgroup::suite::{
    paper_fact_suite, run_lemma_2_5, run_quotient_closure, run_syskin, run_theorem_a,
    run_theorem_b_targets, Catalog, Check, Counterexample, VerificationReport, SCOPE,
};
use ocgroup::{Error, GroupReport, PermGroup};
use serde::Serialize;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest scan degree accepted; 7 already takes minutes.
pub const MAX_SCAN_DEGREE: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "ocgroup", version, about = "Conjugacy and rationality checks for small finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyse one group given as `builtin:<name>` or a group file.
    Analyze {
        source: String,
        #[arg(long)]
        json: bool,
        /// Include the character table (groups up to order 2000).
        #[arg(long)]
        chartab: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        max_order: usize,
        /// Report elapsed time as 0 so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run a verification campaign.
    Verify {
        #[arg(value_enum)]
        campaign: Campaign,
        #[arg(long)]
        json: bool,
        /// Degree of the symmetric group whose subgroups are scanned.
        #[arg(long, default_value_t = 6)]
        scan_degree: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        max_order: usize,
        /// File listing extra group files, one path per line.
        #[arg(long)]
        seed_catalog: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Print a group in group-file format.
    Export { source: String },
    /// List builtin group names.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Campaign {
    TheoremA,
    TheoremB,
    Syskin,
    #[value(name = "lemma-2-5")]
    Lemma25,
    #[value(name = "lemma-2-4")]
    Lemma24,
    QuotientClosure,
    PaperFacts,
    All,
}

impl Campaign {
    fn name(self) -> &'static str {
        match self {
            Campaign::TheoremA => "theorem-a",
            Campaign::TheoremB => "theorem-b",
            Campaign::Syskin => "syskin",
            Campaign::Lemma25 => "lemma-2-5",
            Campaign::Lemma24 => "lemma-2-4",
            Campaign::QuotientClosure => "quotient-closure",
            Campaign::PaperFacts => "paper-facts",
            Campaign::All => "all",
        }
    }

    fn needs_catalog(self) -> bool {
        matches!(
            self,
            Campaign::TheoremA | Campaign::Syskin | Campaign::Lemma25 | Campaign::PaperFacts | Campaign::All
        )
    }
}

const EVERY_CAMPAIGN: [Campaign; 7] = [
    Campaign::Lemma24,
    Campaign::TheoremA,
    Campaign::TheoremB,
    Campaign::Syskin,
    Campaign::Lemma25,
    Campaign::QuotientClosure,
    Campaign::PaperFacts,
];

#[derive(Clone, Debug, Serialize)]
pub struct CampaignSummary {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

/// The structured output of every command.
#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub version: &'static str,
    pub command: String,
    pub input: String,
    pub scope: &'static str,
    pub groups: Vec<GroupReport>,
    pub checks: Vec<Check>,
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub campaigns: Vec<CampaignSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character_table: Option<CharacterTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma24: Option<Lemma24Report>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = Outcome::default();
    match execute(cli.command, &mut out) {
        Ok(code) => out.code = code,
        Err(e) => {
            let _ = writeln!(out.stderr, "error: {e}");
            out.code = 2;
        }
    }
    out
}

fn load(source: &str, cap: usize) -> Result<PermGroup, Error> {
    let g = match source.strip_prefix("builtin:") {
        Some(name) => builtin(name)?,
        None => {
            let text = std::fs::read_to_string(source)
                .map_err(|e| Error::InvalidParameter(format!("{source}: {e}")))?;
            parse_group_file(&text)?
        }
    };
    if g.order() > cap as u128 {
        return Err(Error::TooLarge { order: g.order(), cap });
    }
    Ok(g.with_cap(cap))
}

fn label_of(source: &str) -> String {
    source.strip_prefix("builtin:").unwrap_or(source).to_string()
}

fn execute(command: Command, out: &mut Outcome) -> Result<i32, Error> {
    match command {
        Command::Analyze { source, json, chartab, max_order, no_timing } => {
            let start = Instant::now();
            let g = load(&source, max_order)?;
            let report = GroupReport::analyze(label_of(&source), &g)?;
            let mut notes = Vec::new();
            let table = if chartab && g.order() <= DEFAULT_CHARACTER_CAP as u128 {
                Some(dixon_character_table(&g)?)
            } else {
                if chartab {
                    notes.push(format!(
                        "character table skipped: order {} exceeds {DEFAULT_CHARACTER_CAP}",
                        g.order()
                    ));
                }
                None
            };
            let doc = Document {
                version: VERSION,
                command: "analyze".into(),
                input: source,
                scope: "single group",
                groups: vec![report],
                checks: Vec::new(),
                counterexamples: Vec::new(),
                passed: true,
                elapsed_ms: elapsed(start, no_timing),
                campaigns: Vec::new(),
                character_table: table,
                lemma24: None,
                notes,
            };
            emit(out, &doc, json, analyze_text);
            Ok(0)
        }
        Command::Verify { campaign, json, scan_degree, max_order, seed_catalog, no_timing } => {
            let start = Instant::now();
            if scan_degree == 0 || scan_degree > MAX_SCAN_DEGREE {
                return Err(Error::InvalidParameter(format!(
                    "scan degree must be between 1 and {MAX_SCAN_DEGREE}, got {scan_degree}"
                )));
            }
            let mut notes = Vec::new();
            let catalog = if campaign.needs_catalog() {
                if scan_degree == 7 {
                    let warning = "scanning all 11300 subgroups of S7 takes several minutes".to_string();
                    let _ = writeln!(out.stderr, "warning: {warning}");
                    notes.push(warning);
                }
                let mut c = Catalog::standard(scan_degree, max_order)?;
                if let Some(path) = &seed_catalog {
                    c.add_seed_file(path, max_order)?;
                }
                Some(c)
            } else {
                None
            };
            let chosen: Vec<Campaign> =
                if campaign == Campaign::All { EVERY_CAMPAIGN.to_vec() } else { vec![campaign] };
            let mut doc = Document {
                version: VERSION,
                command: format!("verify {}", campaign.name()),
                input: match &catalog {
                    Some(c) => format!("S{scan_degree} subgroup scan + named catalog ({} groups)", c.len()),
                    None => "builtin constructions".into(),
                },
                scope: SCOPE,
                groups: Vec::new(),
                checks: Vec::new(),
                counterexamples: Vec::new(),
                passed: true,
                elapsed_ms: 0,
                campaigns: Vec::new(),
                character_table: None,
                lemma24: None,
                notes,
            };
            for c in chosen {
                let report = match c {
                    Campaign::Lemma24 => {
                        let (report, table) = lemma24_campaign();
                        doc.lemma24 = Some(table);
                        report
                    }
                    Campaign::TheoremA => run_theorem_a(catalog.as_ref().unwrap())?,
                    Campaign::TheoremB => run_theorem_b_targets()?,
                    Campaign::Syskin => run_syskin(catalog.as_ref().unwrap())?,
                    Campaign::Lemma25 => run_lemma_2_5(catalog.as_ref().unwrap())?,
                    Campaign::QuotientClosure => run_quotient_closure()?,
                    Campaign::PaperFacts => paper_fact_suite(catalog.as_ref().unwrap())?,
                    Campaign::All => unreachable!(),
                };
                absorb(&mut doc, report, no_timing);
            }
            doc.groups.sort_by(|a, b| a.label.cmp(&b.label));
            doc.passed = doc.counterexamples.is_empty();
            doc.elapsed_ms = elapsed(start, no_timing);
            emit(out, &doc, json, verify_text);
            Ok(if doc.passed { 0 } else { 1 })
        }
        Command::Export { source } => {
            let g = load(&source, usize::MAX)?;
            out.stdout = write_group_file(&g);
            Ok(0)
        }
        Command::List => {
            for name in BUILTIN_NAMES {
                let _ = writeln!(out.stdout, "builtin:{name}");
            }
            let _ = writeln!(
                out.stdout,
                "builtin:sym:<n> alt:<n> cyc:<n> dih:<n> ea:<p>:<k> genq:<2^k> sd:<2^k>"
            );
            Ok(0)
        }
    }
}

fn elapsed(start: Instant, no_timing: bool) -> u64 {
    if no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    }
}

fn absorb(doc: &mut Document, report: VerificationReport, no_timing: bool) {
    doc.campaigns.push(CampaignSummary {
        name: report.campaign.clone(),
        passed: report.passed(),
        checks: report.checks.clone(),
        counterexamples: report.counterexamples.clone(),
        elapsed_ms: if no_timing { 0 } else { report.elapsed.as_millis() as u64 },
    });
    for g in report.groups {
        if !doc.groups.iter().any(|h| h.label == g.label) {
            doc.groups.push(g);
        }
    }
    doc.checks.extend(report.checks);
    doc.counterexamples.extend(report.counterexamples);
}

/// The arithmetic scan as a campaign with three checks.
pub fn lemma24_campaign() -> (VerificationReport, Lemma24Report) {
    let start = Instant::now();
    let table = lemma24::run(1000, 20);
    let pairs: usize = table.table.values().map(Vec::len).sum();
    let mut report = VerificationReport::new("lemma-2-4");
    report.check(
        "admissible pairs match the published table",
        "lemma-2-4",
        table.matches_expected,
        format!("{pairs} admissible (q, r) pairs with q <= {}, r <= {}", table.q_max, table.r_max),
    );
    report.check(
        "every pair divides 2^a * 315 directly",
        "lemma-2-4",
        table.literal_divisibility,
        "checked by exact division",
    );
    let c = &table.certificate;
    report.check(
        "scan bounds are complete",
        "lemma-2-4",
        c.holds(),
        format!(
            "q <= {} forced, clear to {}, exponent cutoff {}",
            c.bound, c.extended_limit, c.exponent_cutoff
        ),
    );
    report.elapsed = start.elapsed();
    (report, table)
}

fn emit(out: &mut Outcome, doc: &Document, json: bool, text: fn(&Document) -> String) {
    if json {
        out.stdout = serde_json::to_string_pretty(doc).expect("serialisable document");
        out.stdout.push('\n');
    } else {
        out.stdout = text(doc);
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn analyze_text(doc: &Document) -> String {
    let r = &doc.groups[0];
    let mut s = String::new();
    let rows: [(&str, String); 13] = [
        ("group", doc.input.clone()),
        ("order", r.order.to_string()),
        ("center order", r.center_order.to_string()),
        ("nilpotent", r.nilpotent.to_string()),
        ("abelian", r.abelian.to_string()),
        ("classes", r.class_count.to_string()),
        ("class sizes", join(&r.class_sizes)),
        ("class orders", join(&r.class_orders)),
        ("element orders", join(&r.order_spectrum)),
        ("rational", r.rational.to_string()),
        ("oc", r.oc.to_string()),
        ("odd-order conjugate", r.odd_order_conjugate.to_string()),
        ("all-order conjugate", r.all_order_conjugate.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<20} {v}");
    }
    if let Some(t) = &doc.character_table {
        let _ = writeln!(s, "\ncharacter table (exponent {}, prime {})", t.exponent, t.prime);
        s.push_str(&t.to_text());
    }
    for n in &doc.notes {
        let _ = writeln!(s, "note: {n}");
    }
    if doc.elapsed_ms > 0 {
        let _ = writeln!(s, "time {} ms", doc.elapsed_ms);
    }
    s
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verify_text(doc: &Document) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} over {} ({})", doc.command, doc.input, doc.scope);
    for c in &doc.campaigns {
        let _ = writeln!(s, "\n{}: {}", c.name, verdict(c.passed));
        for check in &c.checks {
            let _ = writeln!(s, "  {} {} [{}]", verdict(check.passed), check.name, check.detail);
        }
        for ce in &c.counterexamples {
            let _ = writeln!(s, "  counterexample {}: {}", ce.label, ce.reason);
        }
        if c.name == "lemma-2-4" {
            if let Some(t) = &doc.lemma24 {
                let _ = writeln!(s, "  q     r");
                for (q, rs) in &t.table {
                    let _ = writeln!(s, "  {q:<5} {}", join(rs));
                }
                let pairs: usize = t.table.values().map(Vec::len).sum();
                let _ = writeln!(s, "  {pairs} admissible (q, r) pairs");
            }
        }
    }
    let _ = writeln!(
        s,
        "\n{} groups, {} checks, {} counterexamples: {}",
        doc.groups.len(),
        doc.checks.len(),
        doc.counterexamples.len(),
        verdict(doc.passed)
    );
    for n in &doc.notes {
        let _ = writeln!(s, "note: {n}");
    }
    if doc.elapsed_ms > 0 {
        let _ = writeln!(s, "time {} ms", doc.elapsed_ms);
    }
    s
}
