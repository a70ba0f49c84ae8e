//! Acceptance suite: one line per criterion, then a verdict. Built without
//! the test harness so the lines always reach the console.
//!
//! Criterion 2 is known to be unattainable as stated: the exhaustive search
//! finds every listed two-strand class plus two more. That outcome is pinned
//! exactly, so any other result (including an unexpected pass) fails the run.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sca_analysis::properties::{self, is_glider};
use sca_analysis::{
    find_period, infer_turning_rule, is_nested_under, is_pure, leading_subpattern, rule_is_pure,
    GliderDescription, NoRule, Period,
};
use sca_core::{parse_generations, CellContent, CrossingRule, Generation, Symbol, TurningRule};
use sca_enumerate::tables::TWO_STRAND;
use sca_enumerate::{
    classify_small, enumerate_pure, oracle_enumerate, v1, Mismatch, OracleConfig, PureConfig, VSet,
};

enum Outcome {
    Pass(String),
    Fail(String),
    /// Red, with the failure matching the recorded analysis exactly.
    KnownRed(String),
}

const KNOWN_UNATTAINABLE: [usize; 1] = [2];

fn sca(args: &[&str]) -> (String, i32, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_sca"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap_or(-1),
        elapsed,
    )
}

fn check(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn criterion_1() -> Outcome {
    let (out, code, took) = sca(&["--jobs", "1", "classify", "--strands", "1"]);
    let expected = [
        ("0/2", "X0X00XXXX", "@0 -s;@1 s-"),
        ("-1/1", "XXXX0XX1X", "@0 r-"),
        ("-1/3", "X1X00XX0X", "@0 -s;@1 r-;@2 s-"),
        ("1/1", "XXXX01XXX", "@0 -l"),
        ("1/3", "X0X100XXX", "@0 -l;@-1 -s;@0 s-"),
        ("0/4", "X1X100X0X", "@0 -l;@-1 -s;@0 r-;@1 s-"),
    ];
    let result = (|| {
        check(code == 0, format!("exit code {code}"))?;
        let items: Vec<&str> = out.lines().filter(|l| l.starts_with("item")).collect();
        check(items.len() == 6, format!("{} classes", items.len()))?;
        for (line, (speed, turn, period)) in items.iter().zip(expected) {
            let want = format!("speed {speed:<6} turn {turn} cross XXXXXXXXX period {period}");
            check(line.ends_with(&want), format!("`{line}` != `{want}`"))?;
        }
        check(took < Duration::from_secs(1), format!("took {took:?}"))
    })();
    match result {
        Ok(()) => Outcome::Pass(format!("6/6 exact in {:.3}s", took.as_secs_f64())),
        Err(e) => Outcome::Fail(e),
    }
}

fn criterion_2() -> Outcome {
    let (out, code, took) = sca(&["--jobs", "1", "classify", "--strands", "2"]);
    if took >= Duration::from_secs(60) {
        return Outcome::Fail(format!("took {took:?}"));
    }
    if code == 0 {
        return Outcome::Fail("unexpected exact match; the recorded analysis is stale".into());
    }
    let c = match classify_small(2) {
        Ok(_) => return Outcome::Fail("library reports an exact match".into()),
        Err(report) => report.0,
    };
    let unlisted: BTreeSet<(String, String)> = c
        .mismatches
        .iter()
        .filter_map(|m| match m {
            Mismatch::Unlisted(u) => Some((u.turning.to_string(), u.speed.to_string())),
            _ => None,
        })
        .collect();
    let want: BTreeSet<(String, String)> = [("11X100X00", "0/4"), ("011100100", "0/12")]
        .iter()
        .map(|(t, s)| (t.to_string(), s.to_string()))
        .collect();
    let summary = out.lines().last().unwrap_or("");
    if c.matched.len() == 31 && c.mismatches.len() == 2 && unlisted == want && c.found == 33 {
        Outcome::KnownRed(format!(
            "`{summary}` in {:.2}s: all 31 items match, 2 extra classes ({})",
            took.as_secs_f64(),
            want.iter()
                .map(|(t, s)| format!("{t} {s}"))
                .collect::<Vec<_>>()
                .join(", ")
        ))
    } else {
        Outcome::Fail(format!("{summary}; mismatches {:?}", c.mismatches))
    }
}

fn criterion_3() -> Outcome {
    let (out, code, _) = sca(&["enumerate-pure", "--strands", "1"]);
    let frozen = [
        "period=@0 s-;@-1 -s;@0 r- ; turn=X1X00XX0X ; width=1 ; speed=-1/3",
        "period=@0 s-;@-1 -l;@-2 -s ; turn=X0X100XXX ; width=1 ; speed=1/3",
        "period=@0 -s;@1 s-;@0 -l ; turn=X0X100XXX ; width=1 ; speed=1/3",
        "period=@0 -s;@1 r-;@2 s- ; turn=X1X00XX0X ; width=1 ; speed=-1/3",
        "period=@0 r- ; turn=XXXX0XX1X ; width=1 ; speed=-1/1",
        "period=@0 r-;@1 s-;@0 -s ; turn=X1X00XX0X ; width=1 ; speed=-1/3",
        "period=@0 -l ; turn=XXXX01XXX ; width=1 ; speed=1/1",
        "period=@0 -l;@-1 -s;@0 s- ; turn=X0X100XXX ; width=1 ; speed=1/3",
    ];
    let lines: Vec<&str> = out.lines().collect();
    let rules: BTreeSet<String> = lines
        .iter()
        .filter_map(|l| l.parse::<GliderDescription>().ok())
        .map(|d| d.turning.to_string())
        .collect();
    let want: BTreeSet<String> = ["X0X100XXX", "X1X00XX0X", "XXXX01XXX", "XXXX0XX1X"]
        .map(String::from)
        .into();
    if code == 0 && lines == frozen && rules == want && v1().len() == 8 {
        Outcome::Pass("8 descriptions, 4 rule families".into())
    } else {
        Outcome::Fail(format!(
            "exit {code}, {} lines, rules {rules:?}",
            lines.len()
        ))
    }
}

/// Non-crossing, moving, nested and pure: the part of a classification the
/// pure enumeration is meant to reproduce.
fn pure_classes(ps: impl Iterator<Item = Period>) -> BTreeSet<(String, String)> {
    ps.filter(|p| p.speed().displacement != 0 && !p.has_crossing())
        .filter_map(|p| GliderDescription::of(p).ok())
        .filter(|d| rule_is_pure(&d.turning, d.period.speed()) == Ok(true))
        .map(|d| {
            (
                d.period.canonical_rotation().to_string(),
                d.turning.to_string(),
            )
        })
        .collect()
}

fn criterion_4(v2: &VSet, took: Duration) -> Outcome {
    let alg = v2.classes();
    let oracle = pure_classes(
        oracle_enumerate(&OracleConfig::new(2, 3, 256))
            .classes
            .into_iter()
            .map(|c| c.period),
    );
    let table = pure_classes(TWO_STRAND.iter().map(|e| e.period().unwrap()));
    let ok = alg == oracle && alg == table && took < Duration::from_secs(300);
    let msg = format!(
        "{} descriptions, {} classes; algorithm/oracle/table agree: {}/{}; {:.2}s",
        v2.len(),
        alg.len(),
        alg == oracle,
        alg == table,
        took.as_secs_f64()
    );
    if ok && !alg.is_empty() {
        Outcome::Pass(msg)
    } else {
        Outcome::Fail(msg)
    }
}

fn criterion_5() -> Outcome {
    let worked = parse_generations("@0 -s -l\n@1 rl\n@0 -s s-\n").unwrap();
    let conflict = parse_generations(
        "@0 s- r- -s RL\n@-1 -l -- r- RL s-\n@-2 -s -- -- ss ss\n@-1 r- -- -s rl r-\n",
    )
    .unwrap();
    let a = infer_turning_rule(&worked).map(|r| r.to_string());
    let b = infer_turning_rule(&conflict);
    let ok_a = a.as_deref() == Ok("XX1X00X0X");
    let ok_b = matches!(&b, Err(NoRule::Conflict { bits }) if bits == &vec![3, 6]);
    let msg = format!("worked example {a:?}; second example {b:?}");
    if ok_a && ok_b {
        Outcome::Pass(msg)
    } else {
        Outcome::Fail(msg)
    }
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    for n in 1..=3 {
        let start = Instant::now();
        let result = oracle_enumerate(&OracleConfig::new(n, n + 1, 512));
        let unit: Vec<&Period> = result
            .classes
            .iter()
            .filter(|c| c.speed.is_unit())
            .map(|c| &c.period)
            .collect();
        let all = |s: Symbol| {
            unit.iter().filter(move |p| {
                p.generations()
                    .iter()
                    .flat_map(Generation::strands)
                    .all(|(_, x)| x == s)
            })
        };
        let left = all(Symbol::Left).count();
        let right = all(Symbol::Right).count();
        let pos = unit.iter().filter(|p| p.speed().displacement > 0).count();
        if unit.len() != 2 || left != 1 || right != 1 || pos != 1 {
            return Outcome::Fail(format!("n = {n}: unit-speed classes {unit:?}"));
        }
        notes.push(format!("n={n} {:.2}s", start.elapsed().as_secs_f64()));
    }
    Outcome::Pass(format!("one class each way ({})", notes.join(", ")))
}

/// Random initial rows of one to three strands and random rules, kept when
/// they settle into a glider.
fn random_gliders(count: usize) -> Vec<(Period, TurningRule, CrossingRule)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 1_000_000, "too few random gliders");
        let width = rng.gen_range(1..=4);
        let cells: Vec<CellContent> = (0..width)
            .map(|_| CellContent::ALL[rng.gen_range(0..CellContent::ALL.len())])
            .collect();
        let g = Generation::new(0, cells);
        if g.strand_count() == 0 || g.strand_count() > 3 {
            continue;
        }
        let t = TurningRule::new(rng.gen_range(0u16..512) & !(1 << 4)).unwrap();
        let c = CrossingRule::new(rng.gen_range(0u16..512)).unwrap();
        if let Ok(info) = find_period(&g, t, c, 300) {
            if is_glider(&info.period) {
                out.push((info.period, t, c));
            }
        }
    }
    out
}

fn criterion_7(enumerated: &[Period]) -> Outcome {
    let random = random_gliders(500);
    let mut violations = Vec::new();
    let mut runs = 0;
    for prop in &properties::ALL {
        let mut bad = 0;
        let cases = enumerated
            .iter()
            .map(|p| (p, None))
            .chain(random.iter().map(|(p, t, c)| (p, Some((*t, *c)))));
        for (p, rules) in cases {
            runs += 1;
            if let Err(e) = (prop.check)(p, rules) {
                if bad < 3 {
                    violations.push(format!("{}: {p}: {e}", prop.name));
                }
                bad += 1;
            }
        }
    }
    let all: Vec<&Period> = enumerated
        .iter()
        .chain(random.iter().map(|r| &r.0))
        .collect();
    let noncrossing: Vec<&&Period> = all.iter().filter(|p| !p.has_crossing()).collect();
    let slow = noncrossing.iter().filter(|p| !p.speed().is_unit()).count();
    let pure_multi = noncrossing
        .iter()
        .filter(|p| p.strand_count() >= 2 && is_pure(p) == Ok(true))
        .count();
    let msg = format!(
        "{} properties over {} enumerated and {} random gliders, {} checks; \
         {} non-crossing, {} of non-unit speed, {} pure with 2+ strands",
        properties::ALL.len(),
        enumerated.len(),
        random.len(),
        runs,
        noncrossing.len(),
        slow,
        pure_multi
    );
    if violations.is_empty() {
        Outcome::Pass(msg)
    } else {
        Outcome::Fail(format!("{msg}; violations: {}", violations.join(" | ")))
    }
}

fn criterion_8(v2: &VSet) -> Outcome {
    let start = Instant::now();
    let run = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| enumerate_pure(3, &PureConfig::default()));
    let took = start.elapsed();
    let v3 = &run.vset;
    let result = (|| {
        check(!v3.is_empty(), "no descriptions")?;
        for d in v3.iter() {
            let p = &d.period;
            check(is_glider(p), format!("{d}: not a glider"))?;
            check(is_pure(p) == Ok(true), format!("{d}: not pure"))?;
            check(is_nested_under(p).is_ok(), format!("{d}: not nested"))?;
            let sub = leading_subpattern(p, 2)
                .map_err(|e| format!("{d}: {e}"))?
                .minimal();
            let sub = GliderDescription::of(sub).map_err(|e| format!("{d}: {e}"))?;
            check(
                v2.contains(&sub),
                format!("{d}: subpattern {sub} not in V2"),
            )?;
        }
        let doubled = enumerate_pure(
            3,
            &PureConfig {
                budget_multiplier: 2,
            },
        );
        check(doubled.vset == *v3, "output changes under a doubled budget")?;
        let pooled = rayon::ThreadPoolBuilder::new()
            .num_threads(3)
            .build()
            .unwrap()
            .install(|| enumerate_pure(3, &PureConfig::default()));
        check(pooled.vset == *v3, "output changes with the thread count")?;
        check(took < Duration::from_secs(1800), format!("took {took:?}"))
    })();
    match result {
        Ok(()) => Outcome::Pass(format!(
            "{} descriptions, stable; {:.2}s single-threaded",
            v3.len(),
            took.as_secs_f64()
        )),
        Err(e) => Outcome::Fail(e),
    }
}

fn main() {
    let start = Instant::now();
    let v2 = enumerate_pure(2, &PureConfig::default());
    let v2_time = start.elapsed();

    let mut enumerated: Vec<Period> = Vec::new();
    for n in 1..=2 {
        let classes = oracle_enumerate(&OracleConfig::new(n, n + 1, 256)).classes;
        enumerated.extend(classes.into_iter().map(|c| c.period).filter(is_glider));
    }
    enumerated.extend(
        TWO_STRAND
            .iter()
            .map(|e| e.period().unwrap())
            .filter(is_glider),
    );
    enumerated.extend(v1().iter().chain(v2.vset.iter()).map(|d| d.period.clone()));

    let outcomes = [
        (1, "one-strand classification", criterion_1()),
        (2, "two-strand classification", criterion_2()),
        (3, "V1 descriptions", criterion_3()),
        (4, "V2 triple cross-check", criterion_4(&v2.vset, v2_time)),
        (5, "turning rule inference examples", criterion_5()),
        (6, "unit-speed uniqueness", criterion_6()),
        (7, "property suites", criterion_7(&enumerated)),
        (8, "V3 internal consistency", criterion_8(&v2.vset)),
    ];

    let mut unexpected = Vec::new();
    for (id, name, outcome) in &outcomes {
        let known = KNOWN_UNATTAINABLE.contains(id);
        match outcome {
            Outcome::Pass(m) => {
                println!("criterion {id} PASS {name}: {m}");
                if known {
                    unexpected.push(*id);
                }
            }
            Outcome::KnownRed(m) => {
                println!("criterion {id} FAIL {name} (known, unattainable as stated): {m}");
                if !known {
                    unexpected.push(*id);
                }
            }
            Outcome::Fail(m) => {
                println!("criterion {id} FAIL {name}: {m}");
                unexpected.push(*id);
            }
        }
    }
    if !unexpected.is_empty() {
        println!("criteria with unexpected outcomes: {unexpected:?}");
        std::process::exit(1);
    }
    println!("acceptance: all outcomes as expected");
}
