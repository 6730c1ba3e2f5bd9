//! The subcommands.

use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use circum_turan::constructions::ConstructionId;
use circum_turan::formulas::{
    self, audit_lemmas, critical_case_report, half, turan_number, AuditGrid, ExtremalResult,
    Problem,
};
use circum_turan::graph6;
use circum_turan::invariants::{is_free, FamilyKind, ForbiddenFamily, Freeness, InvariantError};
use circum_turan::oracle::{
    brute_force_ex, lower_bound_search, Connectivity, EnumerationTask, OracleResult,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{write_json, write_record, Format, Table};
use crate::{CliError, OracleArgs};

/// `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn achiever_list(r: &ExtremalResult) -> String {
    r.achievers
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct ExvalJson<'a> {
    #[serde(flatten)]
    result: &'a ExtremalResult,
    achiever_names: Vec<String>,
}

pub fn exval(
    out: &mut dyn Write,
    format: Format,
    problem: Problem,
    n: usize,
    k: usize,
    r: usize,
) -> Result<(), CliError> {
    let res = turan_number(problem, n, k, r).map_err(usage)?;
    let fields = [
        ("problem", json!(problem.to_string())),
        ("n", json!(n)),
        ("k", json!(k)),
        ("r", json!(r)),
        ("value", json!(res.value)),
        ("status", json!(res.status.to_string())),
        ("achievers", json!(achiever_list(&res))),
    ];
    let names = res.achievers.iter().map(ToString::to_string).collect();
    write_record(
        out,
        format,
        &fields,
        &ExvalJson {
            result: &res,
            achiever_names: names,
        },
    )?;
    Ok(())
}

/// Parses `name` and its parameters into a construction.
pub fn construction_id(name: &str, p: &[usize]) -> Result<ConstructionId, CliError> {
    let lower = name.to_ascii_lowercase();
    let arity = match lower.as_str() {
        "tree" => 1,
        "turan" | "g1" | "g4" => 2,
        "f" | "h" | "g2" | "g3" | "katonaxiao" | "katona-xiao" => 3,
        "gr" => 4,
        _ => {
            return Err(usage(format!(
                "unknown construction {name:?}; expected turan, F, H, Gr, G1, G2, G3, G4, KatonaXiao or tree"
            )))
        }
    };
    if p.len() != arity {
        return Err(usage(format!(
            "{name} takes {arity} parameters, got {}",
            p.len()
        )));
    }
    Ok(match lower.as_str() {
        "tree" => ConstructionId::Tree { n: p[0] },
        "turan" => ConstructionId::Turan { n: p[0], p: p[1] },
        "g1" => ConstructionId::G1 { n: p[0], k: p[1] },
        "g4" => ConstructionId::G4 { n: p[0], k: p[1] },
        "f" => ConstructionId::F {
            n: p[0],
            k: p[1],
            r: p[2],
        },
        "h" => ConstructionId::H {
            n: p[0],
            a: p[1],
            k: p[2],
        },
        "g2" => ConstructionId::G2 {
            n: p[0],
            k: p[1],
            r: p[2],
        },
        "g3" => ConstructionId::G3 {
            n: p[0],
            k: p[1],
            r: p[2],
        },
        "gr" => ConstructionId::GrNak {
            n: p[0],
            a: p[1],
            k: p[2],
            r: p[3],
        },
        _ => ConstructionId::KatonaXiao {
            n: p[0],
            k: p[1],
            r: p[2],
        },
    })
}

fn invariant_failure(e: InvariantError) -> CliError {
    CliError::Failed(e.to_string())
}

pub fn construct(
    out: &mut dyn Write,
    format: Format,
    name: &str,
    params: &[usize],
    verify: bool,
) -> Result<(), CliError> {
    let id = construction_id(name, params)?;
    let g = id.build().map_err(usage)?;
    let verified = if verify {
        if !id.verify(&g).map_err(invariant_failure)? {
            return Err(CliError::Failed(format!("{id} failed verification")));
        }
        Some(true)
    } else {
        None
    };
    let code = graph6::encode(&g);
    match format {
        Format::Text => writeln!(out, "{code}")?,
        _ => {
            let fields = [
                ("construction", json!(id.to_string())),
                ("n", json!(g.n())),
                ("edges", json!(g.edge_count())),
                (
                    "claimed_family",
                    json!(id.claimed_family().map(|f| f.to_string())),
                ),
                ("verified", json!(verified)),
                ("graph6", json!(code)),
            ];
            let obj: serde_json::Map<String, Value> = fields
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect();
            write_record(out, format, &fields, &obj)?;
        }
    }
    if verify && format == Format::Text {
        let claim = id
            .claimed_family()
            .map_or_else(String::new, |f| format!(", free of {{{f}}}"));
        eprintln!("{id}: {} edges{claim}, verified", g.edge_count());
    }
    Ok(())
}

pub fn check(
    out: &mut dyn Write,
    format: Format,
    fam: &ForbiddenFamily,
    input: Option<&Path>,
    expect_free: bool,
) -> Result<(), CliError> {
    let reader: Box<dyn BufRead> = match input {
        Some(p) => Box::new(BufReader::new(
            std::fs::File::open(p).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufReader::new(io::stdin().lock())),
    };
    let mut table = Table::new(&["line", "verdict", "kind", "vertices"]);
    let mut parse_errors = 0;
    let mut violations = 0;
    let mut undecided = 0;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim().trim_start_matches(">>graph6<<");
        if text.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let g = match graph6::decode(text) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("line {lineno}: parse error: {e}");
                parse_errors += 1;
                continue;
            }
        };
        let row = match is_free(&g, fam) {
            Ok(Freeness::Free) => vec![json!(lineno), json!("free"), Value::Null, Value::Null],
            Ok(Freeness::Violation(c)) => {
                violations += 1;
                let vs: Vec<String> = c.vertices.iter().map(ToString::to_string).collect();
                vec![
                    json!(lineno),
                    json!("violation"),
                    json!(c.kind.to_string()),
                    json!(vs.join(" ")),
                ]
            }
            Err(e) => {
                undecided += 1;
                vec![
                    json!(lineno),
                    json!("unknown"),
                    json!(e.to_string()),
                    Value::Null,
                ]
            }
        };
        if format == Format::Text {
            match (row[1].as_str(), &row[2], &row[3]) {
                (Some("violation"), Value::String(kind), Value::String(vs)) => {
                    writeln!(out, "violation {kind} {vs}")?
                }
                (Some("unknown"), Value::String(why), _) => writeln!(out, "unknown ({why})")?,
                _ => writeln!(out, "free")?,
            }
        }
        table.push(row);
    }
    if format != Format::Text {
        table.write(out, format)?;
    }
    if parse_errors > 0 {
        return Err(usage(format!("{parse_errors} malformed line(s)")));
    }
    if undecided > 0 {
        return Err(CliError::Failed(format!(
            "{undecided} graph(s) could not be decided within the budget"
        )));
    }
    if expect_free && violations > 0 {
        return Err(CliError::Failed(format!(
            "{violations} graph(s) contain a forbidden subgraph"
        )));
    }
    Ok(())
}

/// The dispatcher matching an oracle task, if any.
fn formula_for(n: usize, fam: &ForbiddenFamily, conn: Connectivity) -> Option<ExtremalResult> {
    let problem = match (fam.kind, conn) {
        (FamilyKind::CyclesAtLeast, Connectivity::Any) => Problem::Cycles,
        (FamilyKind::CyclesAtLeast, Connectivity::TwoConnected) => Problem::Cycles2Conn,
        (FamilyKind::Path, Connectivity::Any) => Problem::Paths,
        _ => return None,
    };
    turan_number(problem, n, fam.k, fam.r).ok()
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
    Incomplete,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::NotApplicable => "NOT-APPLICABLE",
            Verdict::Incomplete => "INCOMPLETE",
        })
    }
}

/// Compares an oracle value with the formula. Only exact formulas can be
/// contradicted; an incomplete run contradicts one only by exceeding it.
pub fn verdict(res: &OracleResult, formula: Option<&ExtremalResult>) -> Verdict {
    let Some(f) = formula.filter(|f| f.status.is_exact()) else {
        return Verdict::NotApplicable;
    };
    match (res.complete, res.max_edges) {
        (_, Some(v)) if v > f.value => Verdict::Mismatch,
        (false, _) => Verdict::Incomplete,
        (true, Some(v)) if v == f.value => Verdict::Match,
        (true, _) => Verdict::Mismatch,
    }
}

#[derive(Serialize)]
struct OracleJson<'a> {
    n: usize,
    family: Option<String>,
    connectivity: Connectivity,
    method: &'static str,
    result: &'a OracleResult,
    formula: Option<&'a ExtremalResult>,
    verdict: Verdict,
}

pub fn oracle(
    out: &mut dyn Write,
    format: Format,
    a: &OracleArgs,
    budget: Option<u64>,
) -> Result<(), CliError> {
    let (res, method) = if a.lower_bound {
        let fam = a
            .family
            .ok_or_else(|| usage("--lower-bound requires --family"))?;
        let res = lower_bound_search(a.n, &fam, a.connectivity, budget, a.seed).map_err(usage)?;
        (res, "saturation")
    } else {
        let mut task = EnumerationTask::new(a.n, a.family)
            .connectivity(a.connectivity)
            .cap(a.cap)
            .witness_cap(a.witnesses);
        task.budget = budget;
        task.workers = a.workers;
        (brute_force_ex(&task).map_err(usage)?, "enumeration")
    };
    let formula = a.family.and_then(|f| formula_for(a.n, &f, a.connectivity));
    let v = if a.lower_bound {
        // A lower bound can only contradict an exact formula by exceeding it.
        match formula.as_ref().filter(|f| f.status.is_exact()) {
            Some(f) if res.max_edges.is_some_and(|m| m > f.value) => Verdict::Mismatch,
            _ => Verdict::NotApplicable,
        }
    } else {
        verdict(&res, formula.as_ref())
    };
    if format == Format::Json {
        write_json(
            out,
            &OracleJson {
                n: a.n,
                family: a.family.map(|f| f.to_string()),
                connectivity: a.connectivity,
                method,
                result: &res,
                formula: formula.as_ref(),
                verdict: v,
            },
        )?;
    } else {
        let value = res.max_edges.map_or(Value::Null, |m| json!(m));
        let formula_text = formula
            .as_ref()
            .map(|f| format!("{} {} ({})", f.value, f.status, achiever_list(f)))
            .unwrap_or_else(|| "none".into());
        let witnesses: Vec<String> = res.witnesses.iter().map(graph6::encode).collect();
        let fields = [
            ("n", json!(a.n)),
            (
                "family",
                json!(a.family.map_or_else(|| "none".into(), |f| f.to_string())),
            ),
            ("connectivity", json!(a.connectivity.to_string())),
            ("method", json!(method)),
            ("oracle", value),
            ("complete", json!(res.complete)),
            ("optimal_classes", json!(res.optimal_classes)),
            ("explored", json!(res.explored)),
            ("formula", json!(formula_text)),
            ("verdict", json!(v.to_string())),
            ("witnesses", json!(witnesses.join(" "))),
        ];
        write_record(out, format, &fields, &())?;
    }
    if v == Verdict::Mismatch {
        return Err(CliError::Failed(format!(
            "oracle value {:?} contradicts the formula",
            res.max_edges
        )));
    }
    Ok(())
}

pub fn audit(
    out: &mut dyn Write,
    format: Format,
    k: (usize, usize),
    n_max: usize,
) -> Result<(), CliError> {
    let grid = AuditGrid {
        k_min: k.0,
        k_max: k.1,
        n_max,
    };
    let mut reports = audit_lemmas(&grid);
    reports.push(critical_case_report(&[6, 8, 10, 12], 5));
    if format == Format::Json {
        write_json(out, &reports)?;
    } else {
        let mut t = Table::new(&[
            "lemma",
            "grid",
            "checked",
            "failed",
            "result",
            "first_failure",
        ]);
        for r in &reports {
            let first = r.failures.first().map(|f| {
                f.iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            });
            t.push(vec![
                json!(r.lemma.to_string()),
                json!(r.grid),
                json!(r.checked),
                json!(r.failed),
                json!(if r.passed() { "pass" } else { "FAIL" }),
                json!(first),
            ]);
        }
        t.write(out, format)?;
    }
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.lemma.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "lemma audit failed: {}",
            failed.join(", ")
        )))
    }
}

fn opt(v: Result<u64, formulas::ParamError>) -> Value {
    v.map_or(Value::Null, |x| json!(x))
}

pub fn table(
    out: &mut dyn Write,
    format: Format,
    problem: Problem,
    k: usize,
    r: usize,
    n: (usize, usize),
) -> Result<(), CliError> {
    let headers: &[&'static str] = match problem {
        Problem::Cycles => &[
            "n",
            "k",
            "r",
            "value",
            "status",
            "achievers",
            "f",
            "e_G1",
            "e_G2",
            "f_vs_G1",
        ],
        Problem::Cycles2Conn => &[
            "n",
            "k",
            "r",
            "value",
            "status",
            "achievers",
            "g_2",
            "g_t",
            "e_G2",
            "crossover",
        ],
        Problem::Paths => &[
            "n",
            "k",
            "r",
            "value",
            "status",
            "achievers",
            "e_G3",
            "e_G4",
            "e_KX",
            "G3_vs_G4",
        ],
    };
    let mut t = Table::new(headers);
    let t_half = half(k);
    let mut crossed = false;
    for n in n.0..=n.1 {
        let res = turan_number(problem, n, k, r).map_err(usage)?;
        let mut row = vec![
            json!(n),
            json!(k),
            json!(r),
            json!(res.value),
            json!(res.status.to_string()),
            json!(achiever_list(&res)),
        ];
        match problem {
            Problem::Cycles => {
                let f = formulas::f_value(n, k, r).ok();
                let g1 = if k % 2 == 1 {
                    formulas::e_g1(n, k).ok()
                } else {
                    None
                };
                row.extend([
                    json!(f),
                    json!(g1),
                    opt(formulas::e_g2(n, k, r)),
                    json!(compare(f, g1, "f", "G1")),
                ]);
            }
            Problem::Cycles2Conn => {
                let g2 = formulas::g_value(n, 2, k, r).ok();
                let gt = formulas::g_value(n, t_half, k, r).ok();
                // First n where the a = 2 construction no longer beats a = t.
                let cross = !crossed && matches!((g2, gt), (Some(a), Some(b)) if a <= b);
                crossed |= cross;
                row.extend([
                    json!(g2),
                    json!(gt),
                    opt(formulas::e_g2(n, k, r)),
                    json!(cross),
                ]);
            }
            Problem::Paths => {
                let g3 = formulas::e_g3(n, k, r).ok();
                let g4 = if k.is_multiple_of(2) {
                    formulas::e_g4(n, k).ok()
                } else {
                    None
                };
                row.extend([
                    json!(g3),
                    json!(g4),
                    opt(formulas::e_katona_xiao(n, k, r)),
                    json!(compare(g3, g4, "G3", "G4")),
                ]);
            }
        }
        t.push(row);
    }
    t.write(out, format)?;
    Ok(())
}

/// Which of two candidate values is larger, by label.
fn compare(a: Option<u64>, b: Option<u64>, la: &str, lb: &str) -> Option<String> {
    match (a, b) {
        (Some(x), Some(y)) if x > y => Some(la.to_string()),
        (Some(x), Some(y)) if x < y => Some(lb.to_string()),
        (Some(_), Some(_)) => Some("tie".to_string()),
        _ => None,
    }
}
