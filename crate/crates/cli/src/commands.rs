use std::fs;
use std::path::{Path, PathBuf};

use schlafli_core::geometry::{
    build_schlafli_quandle, eisenstein_quandle, lemma_relations_hold, Symbol,
};
use schlafli_core::presentation::{
    enumerate_presentation, parse_presentation, EnumerationResult, Outcome as Enumerated,
};
use schlafli_core::quandle::{find_isomorphism, FiniteQuandle, QuandleHom};
use schlafli_core::table::TableFile;
use schlafli_core::twist::{
    build_qm, certify_q6_infinite, fiber_coherence, lemma_presentations, projection_to_schlafli,
    verify_central_extension, TwistError, MAX_M,
};

use crate::report::{LemmaReport, Outcome, Payload};
use crate::{Build, Command, Model, Verify};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

type Done = Result<(Outcome, Payload), CliError>;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn in_range(name: &str, value: usize, allowed: &[usize]) -> Result<(), CliError> {
    if allowed.contains(&value) {
        Ok(())
    } else {
        let list: Vec<String> = allowed.iter().map(|v| v.to_string()).collect();
        Err(input(format!(
            "--{name} {value} is not supported (allowed: {})",
            list.join(", ")
        )))
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn table_payload(q: &FiniteQuandle, out: Option<&PathBuf>) -> Done {
    let table = TableFile::from_quandle(q);
    if let Some(path) = out {
        fs::write(path, table.write()).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok((Outcome::Verified, Payload::Table { table }))
}

fn enumerated(result: EnumerationResult, budget: usize, name: &str, out: Option<&PathBuf>) -> Done {
    match result.outcome {
        Enumerated::Finite(r) => table_payload(&r.quandle.with_name(name), out),
        Enumerated::BudgetExceeded { classes_seen } => Ok((
            Outcome::BudgetExceeded,
            Payload::Budget {
                budget,
                classes_seen,
                stats: result.stats,
            },
        )),
    }
}

fn enumerate(
    p: &schlafli_core::Presentation,
    budget: usize,
) -> Result<EnumerationResult, CliError> {
    enumerate_presentation(p, budget).map_err(|e| input(e.to_string()))
}

fn finite_or_budget(
    result: &EnumerationResult,
    budget: usize,
) -> Result<FiniteQuandle, Box<(Outcome, Payload)>> {
    match &result.outcome {
        Enumerated::Finite(r) => Ok(r.quandle.clone()),
        Enumerated::BudgetExceeded { classes_seen } => Err(Box::new((
            Outcome::BudgetExceeded,
            Payload::Budget {
                budget,
                classes_seen: *classes_seen,
                stats: result.stats.clone(),
            },
        ))),
    }
}

fn build(cmd: &Build) -> Done {
    match cmd {
        Build::Schlafli {
            m,
            model,
            budget,
            out,
        } => {
            in_range("m", *m, &[2, 3, 4, 5, 6])?;
            let symbol = Symbol::tessellation(*m).expect("checked");
            let model = model.unwrap_or(if *m == 2 {
                Model::Algebraic
            } else {
                Model::Geometric
            });
            match (*m, model) {
                (2, Model::Geometric) => {
                    Err(input("{3,2} has only the algebraic (dihedral) model"))
                }
                (6, _) => {
                    let l = eisenstein_quandle();
                    let (v, w) = l.pair.clone();
                    let relations_hold = l.op(&l.op(&v, &w), &v) == w && l.op_pow(&w, &v, 6) == w;
                    Ok((
                        Outcome::Verified,
                        Payload::Lazy {
                            symbol: symbol.to_string(),
                            carrier: "the Eisenstein integers ℤ[ζ], ζ² = ζ − 1".into(),
                            operation: "x ∗ y = y + ζ(x − y)".into(),
                            pair: [v.to_string(), w.to_string()],
                            relations_hold,
                        },
                    ))
                }
                (2, Model::Algebraic) | (_, Model::Geometric) => {
                    let x = build_schlafli_quandle(symbol).map_err(TwistError::from)?;
                    table_payload(&x.quandle, out.as_ref())
                }
                (_, Model::Algebraic) => {
                    let [former, _] = lemma_presentations(*m)?;
                    enumerated(
                        enumerate(&former, budget.budget)?,
                        budget.budget,
                        &symbol.to_string(),
                        out.as_ref(),
                    )
                }
            }
        }
        Build::Cell { cells, out } => {
            in_range("cells", *cells, &[16, 24, 600])?;
            let x = build_schlafli_quandle(Symbol::cell(*cells).expect("checked"))
                .map_err(TwistError::from)?;
            table_payload(&x.quandle, out.as_ref())
        }
        Build::TwistSpun { m, budget, out } => {
            in_range("m", *m, &(1..=MAX_M).collect::<Vec<_>>())?;
            let q = build_qm(*m, budget.budget)?;
            enumerated(
                q.realization,
                budget.budget,
                &format!("Q_{m}"),
                out.as_ref(),
            )
        }
    }
}

fn isomorphism(a: &FiniteQuandle, b: &FiniteQuandle) -> (Outcome, Payload) {
    let source = TableFile::from_quandle(a);
    let target = TableFile::from_quandle(b);
    match find_isomorphism(a, b) {
        // Re-checked from scratch before it is reported.
        Some(h)
            if QuandleHom::new(a.clone(), b.clone(), h.mapping().to_vec())
                .is_ok_and(|h| h.is_bijective()) =>
        {
            (
                Outcome::Verified,
                Payload::Isomorphism {
                    source,
                    target,
                    mapping: h.mapping().to_vec(),
                },
            )
        }
        Some(_) => (
            Outcome::Error,
            Payload::Error {
                message: "isomorphism witness failed re-verification".into(),
            },
        ),
        None => {
            let reason = if a.order() != b.order() {
                format!("orders differ ({} vs {})", a.order(), b.order())
            } else {
                "exhaustive search found no isomorphism".into()
            };
            (
                Outcome::Refuted,
                Payload::NoIsomorphism {
                    source,
                    target,
                    reason,
                },
            )
        }
    }
}

fn verify(cmd: &Verify) -> Done {
    match cmd {
        Verify::Main1 { m, budget } => {
            in_range("m", *m, &[3, 4, 5])?;
            let q = build_qm(*m, budget.budget)?;
            let qm = match finite_or_budget(&q.realization, budget.budget) {
                Ok(qm) => qm,
                Err(done) => return Ok(*done),
            };
            let cells = [16, 24, 600][*m - 3];
            let x = build_schlafli_quandle(Symbol::cell(cells).expect("supported"))
                .map_err(TwistError::from)?;
            Ok(isomorphism(&qm, &x.quandle))
        }
        Verify::Main2 { m, budget } => {
            in_range("m", *m, &[2, 3, 4, 5])?;
            let q = build_qm(*m, budget.budget)?;
            if let Err(done) = finite_or_budget(&q.realization, budget.budget) {
                return Ok(*done);
            }
            let x = build_schlafli_quandle(Symbol::tessellation(*m).expect("supported"))
                .map_err(TwistError::from)?;
            let p = projection_to_schlafli(&q, &x)?;
            let report = verify_central_extension(&p);
            let coherence = fiber_coherence(&q, &p)?;
            let outcome = if report.central_extension && coherence.coherent() {
                Outcome::Verified
            } else {
                Outcome::Refuted
            };
            Ok((
                outcome,
                Payload::Extension {
                    m: *m,
                    report,
                    coherence,
                },
            ))
        }
        Verify::Lemma { m, budget } => {
            in_range("m", *m, &[2, 3, 4, 5])?;
            let x = build_schlafli_quandle(Symbol::tessellation(*m).expect("supported"))
                .map_err(TwistError::from)?;
            let [former, latter] = lemma_presentations(*m)?;
            let a = match finite_or_budget(&enumerate(&former, budget.budget)?, budget.budget) {
                Ok(q) => q.with_name("former"),
                Err(done) => return Ok(*done),
            };
            let b = match finite_or_budget(&enumerate(&latter, budget.budget)?, budget.budget) {
                Ok(q) => q.with_name("latter"),
                Err(done) => return Ok(*done),
            };
            let witness = |s: &FiniteQuandle, t: &FiniteQuandle| {
                find_isomorphism(s, t).map(|h| h.mapping().to_vec())
            };
            let report = LemmaReport {
                m: *m,
                former_witness: witness(&a, &x.quandle),
                latter_witness: witness(&b, &x.quandle),
                between_witness: witness(&a, &b),
                target: TableFile::from_quandle(&x.quandle),
                former: TableFile::from_quandle(&a),
                latter: TableFile::from_quandle(&b),
            };
            let ok = report.former_witness.is_some()
                && report.latter_witness.is_some()
                && report.between_witness.is_some();
            let ok = ok && lemma_relations_hold(&x.quandle, x.pair.0, x.pair.1, *m);
            Ok((
                if ok {
                    Outcome::Verified
                } else {
                    Outcome::Refuted
                },
                Payload::Lemma(report),
            ))
        }
    }
}

fn load_table(path: &Path) -> Result<FiniteQuandle, CliError> {
    let text = read(path)?;
    let file = TableFile::parse(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    file.to_quandle()
        .map_err(|e| input(format!("{}: {e}", path.display())))
}

pub fn execute(cmd: &Command) -> (Outcome, Payload) {
    let result = match cmd {
        Command::Build(b) => build(b),
        Command::Enum { file, budget, out } => read(file).and_then(|text| {
            let p =
                parse_presentation(&text).map_err(|e| input(format!("{}:{e}", file.display())))?;
            let name = file
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            enumerated(
                enumerate(&p, budget.budget)?,
                budget.budget,
                &name,
                out.as_ref(),
            )
        }),
        Command::Verify(v) => verify(v),
        Command::Iso { a, b } => load_table(a).and_then(|qa| Ok(isomorphism(&qa, &load_table(b)?))),
        Command::CertifyInfinite { m } => in_range("m", *m, &[6]).map(|()| {
            let c = certify_q6_infinite();
            (
                if c.infinite {
                    Outcome::Verified
                } else {
                    Outcome::Refuted
                },
                Payload::Certificate(c),
            )
        }),
    };
    result.unwrap_or_else(|e| {
        (
            Outcome::Error,
            Payload::Error {
                message: e.to_string(),
            },
        )
    })
}
