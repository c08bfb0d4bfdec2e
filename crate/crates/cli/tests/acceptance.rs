//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Reports come from the `schlafli` binary. Their witnesses are re-checked
//! here with the core library, in this process rather than the one that
//! produced them.

mod common;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use common::{quandle, schlafli, Run};
use schlafli_cli::{emit, parse_report, Format, Outcome, Payload};
use schlafli_core::exact::{Eisenstein, Rational, Sqrt5Scalar};
use schlafli_core::geometry::eisenstein_quandle;
use schlafli_core::presentation::{
    consequence_step, enumerate_presentation, evaluate_word, tietze_apply, FreeQuandleElement,
    Letter, Move, Relation, RelationPair, Term, TietzeMove,
};
use schlafli_core::quandle::{
    constructor_quandles, dihedral_quandle, find_isomorphism, FiniteQuandle, QuandleHom,
};
use schlafli_core::table::TableFile;
use schlafli_core::twist::collapse_relation_check;
use schlafli_core::{parse_presentation, DEFAULT_BUDGET};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

#[derive(Default)]
struct Collected {
    runs: Vec<Run>,
    tables: Vec<TableFile>,
}

impl Collected {
    fn run(&mut self, args: &[&str]) -> &Run {
        let run = schlafli(args);
        for t in tables_of(&run.report.payload) {
            self.tables.push(t.clone());
        }
        self.runs.push(run);
        self.runs.last().expect("just pushed")
    }
}

fn tables_of(p: &Payload) -> Vec<&TableFile> {
    match p {
        Payload::Table { table } => vec![table],
        Payload::Isomorphism { source, target, .. }
        | Payload::NoIsomorphism { source, target, .. } => vec![source, target],
        Payload::Lemma(l) => vec![&l.target, &l.former, &l.latter],
        _ => vec![],
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure!(took <= limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

fn finite_table(run: &Run) -> Result<&TableFile, String> {
    ensure!(run.code == 0, "{}: exit {}", run.report.command, run.code);
    match &run.report.payload {
        Payload::Table { table } => Ok(table),
        other => Err(format!(
            "{}: unexpected payload {other:?}",
            run.report.command
        )),
    }
}

fn recheck(source: &TableFile, target: &TableFile, mapping: &[usize]) -> Result<(), String> {
    let h = QuandleHom::new(quandle(source), quandle(target), mapping.to_vec())
        .map_err(|e| e.to_string())?;
    ensure!(
        h.is_bijective(),
        "{} → {}: witness is not bijective",
        source.name,
        target.name
    );
    Ok(())
}

fn criterion_1(c: &mut Collected) -> Check {
    let mut orders = Vec::new();
    for (k, expected) in [(1, 1), (2, 3), (3, 8), (4, 24), (5, 120)] {
        let start = Instant::now();
        let table = finite_table(c.run(&["build", "twist-spun", "--m", &k.to_string()]))?;
        within(
            start,
            Duration::from_secs(if k <= 4 { 10 } else { 300 }),
            &format!("Q_{k}"),
        )?;
        ensure!(
            table.order == expected,
            "Q_{k} has order {}, expected {expected}",
            table.order
        );
        let q = quandle(table);
        ensure!(
            q.generators()
                .is_some_and(|g| g.len() == 2 && q.is_generated_by(g)),
            "Q_{k} not generated by a, c"
        );
        orders.push(table.order.to_string());
    }
    Ok(format!("|Q_1..Q_5| = {}", orders.join(", ")))
}

fn criterion_2(c: &mut Collected) -> Check {
    let start = Instant::now();
    let mut orders = Vec::new();
    let builds: [(&[&str], usize); 7] = [
        (&["build", "schlafli", "--m", "2"], 3),
        (&["build", "schlafli", "--m", "3"], 4),
        (&["build", "schlafli", "--m", "4"], 6),
        (&["build", "schlafli", "--m", "5"], 12),
        (&["build", "cell", "--cells", "16"], 8),
        (&["build", "cell", "--cells", "24"], 24),
        (&["build", "cell", "--cells", "600"], 120),
    ];
    for (args, expected) in builds {
        let table = finite_table(c.run(args))?;
        let q = quandle(table);
        ensure!(
            q.order() == expected,
            "{}: order {}, expected {expected}",
            table.name,
            q.order()
        );
        ensure!(
            q.is_quandle() && q.is_connected(),
            "{}: axioms or connectivity fail",
            table.name
        );
        orders.push(format!("{} {}", table.name, q.order()));
    }
    within(start, Duration::from_secs(30), "all Schläfli builds")?;
    Ok(orders.join(", "))
}

fn criterion_3(c: &mut Collected) -> Check {
    for (k, order) in [(3, 8), (4, 24), (5, 120)] {
        let start = Instant::now();
        let run = c.run(&["verify", "main1", "--m", &k.to_string()]);
        within(start, Duration::from_secs(120), &format!("main1 m = {k}"))?;
        ensure!(run.code == 0, "main1 m = {k}: exit {}", run.code);
        let Payload::Isomorphism {
            source,
            target,
            mapping,
        } = &run.report.payload
        else {
            return Err(format!("main1 m = {k}: no witness"));
        };
        ensure!(
            mapping.len() == order,
            "main1 m = {k}: witness of size {}",
            mapping.len()
        );
        recheck(source, target, mapping)?;
    }
    Ok("Q_3 ≅ {3,3,4}, Q_4 ≅ {3,4,3}, Q_5 ≅ {3,3,5}; witnesses re-verified".into())
}

fn criterion_4(c: &mut Collected) -> Check {
    let start = Instant::now();
    for k in 2..=5 {
        let run = c.run(&["verify", "lemma", "--m", &k.to_string()]);
        ensure!(run.code == 0, "lemma m = {k}: exit {}", run.code);
        let Payload::Lemma(l) = &run.report.payload else {
            return Err(format!("lemma m = {k}: unexpected payload"));
        };
        let witness = |w: &Option<Vec<usize>>, what: &str| {
            w.clone().ok_or(format!("lemma m = {k}: no {what} witness"))
        };
        recheck(&l.former, &l.target, &witness(&l.former_witness, "former")?)?;
        recheck(&l.latter, &l.target, &witness(&l.latter_witness, "latter")?)?;
        recheck(
            &l.former,
            &l.latter,
            &witness(&l.between_witness, "between")?,
        )?;
        if k == 2 {
            ensure!(
                find_isomorphism(&quandle(&l.former), &dihedral_quandle(3).expect("order 3"))
                    .is_some(),
                "m = 2 is not dihedral-3"
            );
        }
    }
    within(start, Duration::from_secs(60), "lemma checks")?;
    Ok("both presentations ≅ {3,m} for m = 2..5 ({3,2} = dihedral-3)".into())
}

fn criterion_5_and_6(c: &mut Collected) -> (Check, Check) {
    let mut deck = Vec::new();
    let mut coherent = Vec::new();
    let mut fail5 = None;
    let mut fail6 = None;
    let mut coherence_time = Duration::ZERO;
    for (k, expected) in [(2, 1), (3, 2), (4, 4), (5, 10)] {
        let start = Instant::now();
        let q = schlafli(&["build", "twist-spun", "--m", &k.to_string()]);
        let run = c.run(&["verify", "main2", "--m", &k.to_string()]);
        let took = start.elapsed();
        coherence_time += took;
        let Payload::Extension {
            report, coherence, ..
        } = &run.report.payload
        else {
            fail5.get_or_insert(format!("main2 m = {k}: unexpected payload"));
            continue;
        };
        let e = report.e0.pass && report.e1.pass && report.e2.pass;
        let ok = if k == 2 {
            run.code == 1
                && e
                && report.deck_order == 1
                && !report.central_extension
                && report.verdict.contains("trivial A")
        } else {
            run.code == 0
                && e
                && report.deck_order == expected
                && report.cyclic
                && report.central_extension
        };
        if !ok || took > Duration::from_secs(120) {
            fail5.get_or_insert(format!(
                "main2 m = {k}: exit {}, deck order {}, {:?}",
                run.code, report.deck_order, took
            ));
        }
        if let (Some(g), Payload::Table { table }) = (&report.deck_generator, &q.report.payload) {
            if let Err(e) = recheck_deck(&quandle(table), &report.projection, g, expected) {
                fail5.get_or_insert(format!("main2 m = {k}: {e}"));
            }
        } else if k > 2 {
            fail5.get_or_insert(format!("main2 m = {k}: no deck generator"));
        }
        deck.push(report.deck_order.to_string());
        if k >= 3 {
            if !coherence.coherent() {
                fail6.get_or_insert(format!("m = {k}: {coherence:?}"));
            }
            coherent.push(format!(
                "{}={}={}",
                coherence.hat_orbit, coherence.fiber, coherence.deck_order
            ));
        }
    }
    if coherence_time > Duration::from_secs(60) {
        fail6.get_or_insert(format!("coherence checks took {coherence_time:?}"));
    }
    let five = match fail5 {
        None => Ok(format!(
            "(E0)-(E2) pass; |A| = {} for m = 2..5; m = 2 refuted (trivial A)",
            deck.join(", ")
        )),
        Some(e) => Err(e),
    };
    let six = match fail6 {
        None => Ok(format!("orbit = fiber = |A|: {}", coherent.join(", "))),
        Some(e) => Err(e),
    };
    (five, six)
}

/// The reported deck generator must preserve fibers, commute with every
/// right translation and have the reported order.
fn recheck_deck(
    q: &FiniteQuandle,
    projection: &[usize],
    g: &[usize],
    order: usize,
) -> Result<(), String> {
    let n = q.order();
    ensure!(g.len() == n && projection.len() == n, "size mismatch");
    ensure!(
        (0..n).all(|x| projection[g[x]] == projection[x]),
        "deck generator leaves a fiber"
    );
    ensure!(
        (0..n).all(|x| (0..n).all(|y| g[q.op(x, y)] == q.op(g[x], y))),
        "deck generator does not commute"
    );
    let mut power: Vec<usize> = (0..n).collect();
    for step in 1..=order {
        power = power.iter().map(|&x| g[x]).collect();
        let identity = power.iter().enumerate().all(|(i, &x)| i == x);
        ensure!(
            identity == (step == order),
            "deck generator order differs from {order}"
        );
    }
    Ok(())
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut orders = Vec::new();
    for k in 2..=5 {
        let r = collapse_relation_check(k, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure!(
            r.isomorphic(),
            "m = {k}: augmented Q_m (order {:?}) is not {{3,{k}}}",
            r.order
        );
        orders.push(format!("{}", r.schlafli_order));
    }
    within(start, Duration::from_secs(120), "collapse checks")?;
    Ok(format!(
        "augmented Q_k ≅ {{3,k}}, orders {}",
        orders.join(", ")
    ))
}

fn criterion_8(c: &mut Collected) -> Check {
    let start = Instant::now();
    let run = c.run(&["certify-infinite", "--m", "6"]);
    within(start, Duration::from_secs(1), "certify-infinite")?;
    ensure!(run.code == 0, "exit {}", run.code);
    let Payload::Certificate(cert) = &run.report.payload else {
        return Err("no certificate".into());
    };
    ensure!(
        cert.relations_hold == [true, true],
        "Q_6 relations fail in the Eisenstein model"
    );
    let t = &cert.certificate;
    let two_diff = Eisenstein::new(2, 0) * (&t.w - &t.v);
    ensure!(t.map.is_translation(), "inner map is not a translation");
    ensure!(
        t.map.translation == two_diff && two_diff != Eisenstein::new(0, 0),
        "translation is not 2(w − v) ≠ 0"
    );
    // Independent replay: apply ∗v three times, then ∗w three times.
    let l = eisenstein_quandle();
    for u in [
        Eisenstein::new(0, 0),
        Eisenstein::new(5, -3),
        Eisenstein::new(-7, 11),
    ] {
        let moved = l.op_pow(&l.op_pow(&u, &t.v, 3), &t.w, 3);
        ensure!(moved == &u + &two_diff, "replay at {u} gives {moved}");
    }
    Ok(format!("{}", t))
}

// Property suites.

fn scalar() -> impl Strategy<Value = Sqrt5Scalar> {
    let r = || (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n.into(), d.into()));
    (r(), r()).prop_map(|(a, b)| Sqrt5Scalar::new(a, b))
}

fn eisenstein() -> impl Strategy<Value = Eisenstein> {
    (-30i64..30, -30i64..30).prop_map(|(a, b)| Eisenstein::new(a, b))
}

fn element() -> impl Strategy<Value = FreeQuandleElement> {
    (0..3usize, prop::collection::vec(0..6usize, 0..7)).prop_map(|(s, w)| {
        FreeQuandleElement::new(s, w.into_iter().map(Letter::from_index).collect())
    })
}

fn suite<S: Strategy>(
    name: &str,
    cases: u32,
    s: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<String, String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&s, test).map_err(|e| format!("{name}: {e}"))?;
    Ok(format!("{name} {cases}"))
}

fn holds(q: &FiniteQuandle, assign: &[usize], pairs: &[RelationPair]) -> bool {
    pairs
        .iter()
        .all(|(x, y)| evaluate_word(x, assign, q).unwrap() == evaluate_word(y, assign, q).unwrap())
}

fn criterion_9() -> Check {
    let mut done = Vec::new();
    done.push(suite(
        "free-quandle axioms",
        1000,
        (element(), element(), element()),
        |(x, y, z)| {
            prop_assert_eq!(x.op(&x, false), x.clone());
            prop_assert_eq!(x.op(&y, false).op(&y, true), x.clone());
            prop_assert_eq!(
                x.op(&y, false).op(&z, false),
                x.op(&z, false).op(&y.op(&z, false), false)
            );
            Ok(())
        },
    )?);
    done.push(suite(
        "ℚ(√5) field axioms",
        1000,
        (scalar(), scalar(), scalar()),
        |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if a != Sqrt5Scalar::from_int(0) {
                prop_assert_eq!(&a * &a.inv().unwrap(), Sqrt5Scalar::from_int(1));
            }
            prop_assert_eq!((&a * &b).signum(), a.signum() * b.signum());
            Ok(())
        },
    )?);
    done.push(suite(
        "ℤ[ζ] ring axioms",
        1000,
        (eisenstein(), eisenstein(), eisenstein()),
        |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
            Ok(())
        },
    )?);
    let models = constructor_quandles(4);
    let generators = 3u32;
    done.push(suite(
        "consequence-move soundness",
        60,
        (
            prop::collection::vec((element(), element()), 1..3),
            element(),
            0..3usize,
        ),
        |(mut r, z, s)| {
            r.push((r[0].1.clone(), r[0].0.op(&z, false)));
            let last = r.len() - 1;
            let moves = [
                Move::Reflexive(z.clone()),
                Move::Symmetric(0),
                Move::Transitive(0, last),
                Move::RightGenerator(0, s),
                Move::LeftElement(last, z.clone()),
            ];
            for q in &models {
                let n = q.order();
                for k in 0..n.pow(generators) {
                    let assign: Vec<usize> = (0..generators).map(|i| k / n.pow(i) % n).collect();
                    if !holds(q, &assign, &r) {
                        continue;
                    }
                    for mv in &moves {
                        let grown = consequence_step(&r, mv).unwrap();
                        prop_assert!(holds(q, &assign, &grown), "{:?} in {}", mv, q.name());
                    }
                }
            }
            Ok(())
        },
    )?);
    let sources = [
        "< a, c | (a*c)*a = c, c *^2 a = c >",
        "< a, c | (a*c)*a = c, c *^3 a = c >",
        "< v, w | (v*w)*v = w, (w*v)*w = v, w *^4 v = w >",
        "< x, y | x*y*y = x, y*x*x = y, x*y*x*y = y*x >",
        "< a, b | a*b = a, b*a = b >",
    ];
    for src in sources {
        let p = parse_presentation(src).map_err(|e| e.to_string())?;
        let finite = |p: &schlafli_core::Presentation| {
            enumerate_presentation(p, DEFAULT_BUDGET)
                .ok()
                .and_then(|r| r.into_finite())
                .map(|f| f.quandle)
        };
        let original = finite(&p).ok_or(format!("{src} did not enumerate"))?;
        let r0 = &p.relations()[0];
        let derived = Relation::new(
            Term::star(r0.lhs.clone(), Term::Gen(1)),
            Term::star(r0.rhs.clone(), Term::Gen(1)),
        );
        let def = Term::star(Term::Gen(0), Term::bar(Term::Gen(1), Term::Gen(0)));
        let moves = [
            TietzeMove::AddRelation(derived),
            TietzeMove::AddGenerator {
                name: "s".into(),
                definition: def,
            },
        ];
        for mv in moves {
            let moved = tietze_apply(&p, &mv, DEFAULT_BUDGET)
                .map_err(|e| format!("{src}: {e}"))?
                .presentation;
            let q = finite(&moved).ok_or(format!("{moved} did not enumerate"))?;
            ensure!(
                find_isomorphism(&original, &q).is_some(),
                "{mv:?} changed {src}"
            );
        }
    }
    done.push(format!("Tietze preservation {}", sources.len()));
    Ok(done.join(", "))
}

fn criterion_10(c: &Collected) -> Check {
    for run in &c.runs {
        let parsed = parse_report(&run.stdout).map_err(|e| e.to_string())?;
        ensure!(
            parsed == run.report,
            "{}: parse differs",
            run.report.command
        );
        ensure!(
            emit(&parsed, Format::Json) == run.stdout,
            "{}: emit(parse(x)) ≠ x",
            run.report.command
        );
    }
    for t in &c.tables {
        let text = t.write();
        let back = TableFile::parse(&text).map_err(|e| e.to_string())?;
        ensure!(
            &back == t && back.write() == text,
            "{}: table round-trip differs",
            t.name
        );
        ensure!(
            TableFile::from_quandle(&quandle(t)) == *t,
            "{}: quandle round-trip differs",
            t.name
        );
    }
    Ok(format!(
        "{} reports, {} tables",
        c.runs.len(),
        c.tables.len()
    ))
}

fn main() {
    let mut c = Collected::default();
    let one = criterion_1(&mut c);
    let two = criterion_2(&mut c);
    let three = criterion_3(&mut c);
    let four = criterion_4(&mut c);
    let (five, six) = criterion_5_and_6(&mut c);
    let seven = criterion_7();
    let eight = criterion_8(&mut c);
    let nine = criterion_9();
    let ten = criterion_10(&c);
    let results = [one, two, three, four, five, six, seven, eight, nine, ten];
    let mut failed = Vec::new();
    for (n, r) in (1..).zip(&results) {
        match r {
            Ok(detail) => println!("PASS criterion {n:>2}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {n:>2}: {why}");
                failed.push(n);
            }
        }
    }
    let errors = c
        .runs
        .iter()
        .filter(|r| r.report.outcome == Outcome::Error)
        .count();
    println!(
        "acceptance: {} of {} criteria pass",
        results.len() - failed.len(),
        results.len()
    );
    if !failed.is_empty() || errors > 0 {
        eprintln!("failed criteria: {failed:?}; commands with input errors: {errors}");
        std::process::exit(1);
    }
}
