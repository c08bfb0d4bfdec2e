use std::fmt::Write;

use serde::{Deserialize, Serialize};

use schlafli_core::presentation::EnumerationStats;
use schlafli_core::table::TableFile;
use schlafli_core::twist::{ExtensionReport, FiberCoherence, InfinityCertificate};
use schlafli_core::FiniteQuandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    Refuted,
    BudgetExceeded,
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Verified => 0,
            Outcome::Refuted => 1,
            Outcome::BudgetExceeded => 2,
            Outcome::Error => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub m: usize,
    pub target: TableFile,
    pub former: TableFile,
    pub latter: TableFile,
    /// Isomorphisms former → target, latter → target and former → latter.
    pub former_witness: Option<Vec<usize>>,
    pub latter_witness: Option<Vec<usize>>,
    pub between_witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Table {
        table: TableFile,
    },
    /// The `{3,6}` quandle, which has no finite table.
    Lazy {
        symbol: String,
        carrier: String,
        operation: String,
        pair: [String; 2],
        relations_hold: bool,
    },
    Budget {
        budget: usize,
        classes_seen: usize,
        stats: EnumerationStats,
    },
    Isomorphism {
        source: TableFile,
        target: TableFile,
        mapping: Vec<usize>,
    },
    NoIsomorphism {
        source: TableFile,
        target: TableFile,
        reason: String,
    },
    Extension {
        m: usize,
        report: ExtensionReport,
        coherence: FiberCoherence,
    },
    Lemma(LemmaReport),
    Certificate(InfinityCertificate),
    Error {
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub outcome: Outcome,
    pub payload: Payload,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Text => render_text(report),
    }
}

pub fn parse_report(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

fn outcome_word(o: Outcome) -> &'static str {
    match o {
        Outcome::Verified => "verified",
        Outcome::Refuted => "refuted",
        Outcome::BudgetExceeded => "budget exceeded",
        Outcome::Error => "error",
    }
}

fn grid(t: &TableFile) -> String {
    let mut out = format!("{} (order {})\n", t.name, t.order);
    if let Some(g) = &t.generators {
        let names: Vec<String> = g
            .iter()
            .map(|&i| format!("{i} = {}", t.elements[i]))
            .collect();
        let _ = writeln!(out, "generators: {}", names.join(", "));
    }
    let indices: Vec<String> = (0..t.order).map(|i| i.to_string()).collect();
    match FiniteQuandle::new(t.name.clone(), indices, &t.table) {
        Ok(q) => out += &q.render_text(),
        Err(e) => {
            let _ = writeln!(out, "(unrenderable: {e})");
        }
    }
    if t.elements
        .iter()
        .enumerate()
        .any(|(i, l)| *l != i.to_string())
    {
        out += "elements:\n";
        for (i, l) in t.elements.iter().enumerate() {
            let _ = writeln!(out, "  {i:>3}  {l}");
        }
    }
    out
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn render_text(r: &Report) -> String {
    let mut out = format!(
        "{}: {} ({} ms)\n",
        r.command,
        outcome_word(r.outcome),
        r.elapsed_ms
    );
    match &r.payload {
        Payload::Table { table } => out += &grid(table),
        Payload::Lazy {
            symbol,
            carrier,
            operation,
            pair,
            relations_hold,
        } => {
            let _ = writeln!(out, "{symbol} quandle on {carrier}");
            let _ = writeln!(out, "operation: {operation}");
            let _ = writeln!(
                out,
                "designated pair: ({}, {}); relations {}",
                pair[0],
                pair[1],
                pass(*relations_hold)
            );
        }
        Payload::Budget {
            budget,
            classes_seen,
            stats,
        } => {
            let _ = writeln!(
                out,
                "enumeration did not close within {budget} rows ({classes_seen} classes live)"
            );
            let _ = writeln!(
                out,
                "rows opened {}, merges {}, deductions {}, passes {}",
                stats.defined, stats.merges, stats.deductions, stats.passes
            );
            out += "this is not evidence of infiniteness\n";
        }
        Payload::Isomorphism {
            source,
            target,
            mapping,
        } => {
            let _ = writeln!(
                out,
                "{} ≅ {} (order {})",
                source.name, target.name, source.order
            );
            for (x, &y) in mapping.iter().enumerate() {
                let _ = writeln!(out, "  {} ↦ {}", source.elements[x], target.elements[y]);
            }
        }
        Payload::NoIsomorphism {
            source,
            target,
            reason,
        } => {
            let _ = writeln!(out, "{} ≇ {}: {reason}", source.name, target.name);
        }
        Payload::Extension {
            m,
            report,
            coherence,
        } => {
            let _ = writeln!(
                out,
                "p: {} → {} ({} → {} elements)",
                report.source, report.target, report.source_order, report.target_order
            );
            for (name, c) in [("E0", &report.e0), ("E1", &report.e1), ("E2", &report.e2)] {
                let _ = write!(out, "({name}) {}", pass(c.pass));
                if let Some(ce) = &c.counterexample {
                    let _ = write!(out, " at {ce:?}");
                }
                out.push('\n');
            }
            let _ = writeln!(
                out,
                "deck group: order {}, abelian {}, cyclic {}",
                report.deck_order, report.abelian, report.cyclic
            );
            let _ = writeln!(
                out,
                "m = {m}: ĝ-orbit of a {}, fiber of a {}, deck order {}",
                coherence.hat_orbit, coherence.fiber, coherence.deck_order
            );
            let _ = writeln!(out, "verdict: {}", report.verdict);
        }
        Payload::Lemma(l) => {
            let _ = writeln!(
                out,
                "m = {}: former presentation order {}, latter order {}, {} order {}",
                l.m, l.former.order, l.latter.order, l.target.name, l.target.order
            );
            let _ = writeln!(
                out,
                "former ≅ {}: {}",
                l.target.name,
                l.former_witness.is_some()
            );
            let _ = writeln!(
                out,
                "latter ≅ {}: {}",
                l.target.name,
                l.latter_witness.is_some()
            );
            let _ = writeln!(out, "former ≅ latter: {}", l.between_witness.is_some());
        }
        Payload::Certificate(c) => {
            let _ = writeln!(
                out,
                "Q_{} relations at (0, 1): {}, {}",
                c.m,
                pass(c.relations_hold[0]),
                pass(c.relations_hold[1])
            );
            let _ = writeln!(out, "{}", c.certificate);
            let _ = writeln!(out, "orbit of 0: {}", c.orbit_samples.join(", "));
            let _ = writeln!(out, "infinite: {}", c.infinite);
        }
        Payload::Error { message } => {
            let _ = writeln!(out, "{message}");
        }
    }
    out
}
