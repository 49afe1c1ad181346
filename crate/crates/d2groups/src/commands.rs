//! The subcommands, independent of argument parsing.
//!
//! Each command returns an [`Output`] (a JSON document, a text summary and
//! a pass flag) or a [`CommandError`] carrying the process exit code.

use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use d2groups_core::catalog::GroupExpr;
use d2groups_core::classify::{d2_report_with, GroupAnalysis};
use d2groups_core::group::{are_isomorphic, center, conjugacy_classes};
use d2groups_core::pool::{
    analyze_member, inject_fault, run_suites, standard_pool, Fault, MemberRecord, Origin,
};
use d2groups_core::presentation::realize_group;
use d2groups_core::{Error, GroupTable, Limits};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{load_permutation_group, load_presentation, InputError};
use crate::report::{analysis_document, presentation_value, summary, timing, SCHEMA_VERSION};

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Fail = 1,
    Parse = 2,
    Budget = 3,
    Internal = 4,
}

#[derive(Debug)]
pub struct CommandError {
    pub code: ExitCode,
    pub message: String,
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            ExitCode::Parse
        } else if e.is_limit_error() {
            ExitCode::Budget
        } else {
            ExitCode::Internal
        };
        CommandError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<InputError> for CommandError {
    fn from(e: InputError) -> Self {
        let code = match &e {
            InputError::Io { .. } => ExitCode::Parse,
            InputError::Parse { source, .. } => CommandError::from(source.clone()).code,
        };
        CommandError {
            code,
            message: e.to_string(),
        }
    }
}

pub type CommandResult = Result<Output, CommandError>;

#[derive(Clone, Debug)]
pub struct Output {
    pub document: Value,
    pub summary: String,
    pub passed: bool,
}

/// Where `analyze` gets its group from.
#[derive(Clone, Debug)]
pub enum GroupSource {
    Expr(String),
    Perm(PathBuf),
    Pres(PathBuf),
}

pub fn analyze(source: &GroupSource, limits: Limits) -> CommandResult {
    let start = Instant::now();
    let (g, input, presentation) = match source {
        GroupSource::Expr(text) => {
            let expr = GroupExpr::from_str(text)?;
            let g = expr.build(limits.max_order)?;
            (g, json!({ "kind": "expr", "value": expr.to_string() }), None)
        }
        GroupSource::Perm(path) => {
            let g = load_permutation_group(path, limits.max_order)?;
            (g, json!({ "kind": "perm", "value": path.display().to_string() }), None)
        }
        GroupSource::Pres(path) => {
            let p = load_presentation(path)?;
            let (g, _) = realize_group(&p, limits.max_cosets, limits.max_order)?;
            let input = json!({ "kind": "pres", "value": path.display().to_string() });
            (g, input, Some(presentation_value(&p)))
        }
    };
    let analysis = GroupAnalysis::new(&g, limits)?;
    let report = d2_report_with(&analysis)?;
    let text = summary(&report);
    let document = analysis_document(input, &analysis, &report, presentation, start.elapsed());
    Ok(Output {
        document,
        summary: text,
        passed: true,
    })
}

pub fn verify_presentation(file: &Path, expect: &str, limits: Limits) -> CommandResult {
    let start = Instant::now();
    let p = load_presentation(file)?;
    let expr = GroupExpr::from_str(expect)?;
    let (g, _) = realize_group(&p, limits.max_cosets, limits.max_order)?;
    let want = expr.build(limits.max_order)?;
    let isomorphic = g.order() == want.order() && are_isomorphic(&g, &want, limits.iso_budget)?;
    let deficiency = p.deficiency();
    let document = json!({
        "schema_version": SCHEMA_VERSION,
        "input": { "file": file.display().to_string(), "expect": expr.to_string() },
        "presentation": presentation_value(&p),
        "order": g.order(),
        "expected_order": want.order(),
        "isomorphic": isomorphic,
        "passed": isomorphic,
        "timing": timing(start.elapsed()),
    });
    let summary = format!(
        "{}: order {} (expected {} for {expr}), deficiency {}, balanced {}, isomorphic {}\n{}\n",
        file.display(),
        g.order(),
        want.order(),
        deficiency.deficiency,
        deficiency.balanced,
        isomorphic,
        if isomorphic { "PASS" } else { "FAIL" },
    );
    Ok(Output {
        document,
        summary,
        passed: isomorphic,
    })
}

/// Analyses the standard pool in parallel and runs every property suite.
pub fn selftest(pool_max_order: usize, limits: Limits, fault: Fault) -> CommandResult {
    let start = Instant::now();
    let pool = standard_pool(pool_max_order, limits)?;
    let mut records: Vec<MemberRecord> = pool
        .par_iter()
        .map(|m| analyze_member(m, limits))
        .collect::<Result<_, _>>()?;
    inject_fault(&mut records, fault);
    let suites = run_suites(&records);
    let passed = suites.iter().all(|s| s.passed());
    let bases = pool.iter().filter(|m| matches!(m.origin, Origin::Expression(_))).count();

    let mut summary = format!(
        "pool: {} groups ({} named, {} quotients), base orders <= {pool_max_order}\n",
        pool.len(),
        bases,
        pool.len() - bases
    );
    for s in &suites {
        summary.push_str(&format!(
            "{:<4} {:<30} {:>6} checks  {}\n",
            if s.passed() { "PASS" } else { "FAIL" },
            s.key,
            s.checked,
            s.title
        ));
        for f in s.failures.iter().take(5) {
            summary.push_str(&format!("       {f}\n"));
        }
    }
    let document = json!({
        "schema_version": SCHEMA_VERSION,
        "pool": {
            "max_order": pool_max_order,
            "groups": pool.len(),
            "named": bases,
            "members": pool.iter().map(|m| json!({ "name": m.name, "order": m.table.order() })).collect::<Vec<_>>(),
        },
        "suites": suites.iter().map(|s| json!({
            "key": s.key,
            "title": s.title,
            "checked": s.checked,
            "passed": s.passed(),
            "failures": s.failures,
        })).collect::<Vec<_>>(),
        "passed": passed,
        "timing": timing(start.elapsed()),
    });
    Ok(Output {
        document,
        summary,
        passed,
    })
}

/// One line per constructor of the expression language.
pub const CATALOG_ENTRIES: &[(&str, &str, &str)] = &[
    ("C:n", "cyclic group C_n", "n >= 1"),
    ("D:n", "dihedral group of order 2n", "n >= 2"),
    ("Q:n", "dicyclic group Q_4n of order 4n", "n >= 2"),
    ("BT", "binary tetrahedral group, order 24", ""),
    ("BO", "binary octahedral group, order 48", ""),
    ("BI", "binary icosahedral group, order 120", ""),
    ("Dd:n,m", "D(2^n,m) = C_m x| C_{2^n} by inversion, order 2^n m", "n >= 3, m >= 3 odd"),
    ("Pp:n", "P'_{8.3^n} = Q_8 x| C_{3^n}, order 8.3^n", "n >= 2"),
    ("Ppp:n", "P''_{48n} = C_n . binary octahedral with cyclic Sylow 3-subgroup", "n >= 3 odd"),
    ("Qt:n,a,b,c", "Q(2^n a;b,c) = (C_a x C_b x C_c) x| Q_{2^n}, order 2^n abc", "n >= 3; a, b, c odd, pairwise coprime"),
];

pub fn catalog_list() -> Output {
    let entries: Vec<Value> = CATALOG_ENTRIES
        .iter()
        .map(|(syntax, name, constraints)| {
            json!({ "syntax": syntax, "description": name, "constraints": constraints })
        })
        .collect();
    let mut summary = String::new();
    for (syntax, name, constraints) in CATALOG_ENTRIES {
        summary.push_str(&format!("{syntax:<12} {name}"));
        if !constraints.is_empty() {
            summary.push_str(&format!(" ({constraints})"));
        }
        summary.push('\n');
    }
    summary.push_str("Factors combine with '*', e.g. Qt:4,1,3,1 * C:5\n");
    Output {
        document: json!({ "schema_version": SCHEMA_VERSION, "constructors": entries }),
        summary,
        passed: true,
    }
}

pub fn catalog_build(expr: &str, include_table: bool, limits: Limits) -> CommandResult {
    let start = Instant::now();
    let expr = GroupExpr::from_str(expr)?;
    let g = expr.build(limits.max_order)?;
    let classes = conjugacy_classes(&g).count();
    let mut document = json!({
        "schema_version": SCHEMA_VERSION,
        "expr": expr.to_string(),
        "order": g.order(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "center_order": center(&g).size(),
        "class_count": classes,
        "timing": timing(start.elapsed()),
    });
    if include_table {
        document["table"] = table_rows(&g);
    }
    let summary = format!(
        "{expr}: order {}, exponent {}, center {}, {classes} classes\n",
        g.order(),
        g.exponent(),
        center(&g).size()
    );
    Ok(Output {
        document,
        summary,
        passed: true,
    })
}

fn table_rows(g: &GroupTable) -> Value {
    g.table()
        .chunks(g.order())
        .map(|row| Value::from(row.to_vec()))
        .collect()
}
