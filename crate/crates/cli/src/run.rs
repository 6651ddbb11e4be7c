//! Subcommand implementations.

use std::path::Path;
use std::time::Instant;

use permdn_core::catalog::{self, CatalogEntry};
use permdn_core::coloring::stabilizer_is_trivial;
use permdn_core::error::Error;
use permdn_core::search::{
    distinguishing_number_for_chain, exhaustive_refute, random_search, RefuteOutcome,
    SearchLimits,
};
use permdn_core::{
    format_cycles, is_primitive, is_quasiprimitive, is_semiprimitive, is_transitive, Coloring,
    PermutationGroup, StabilizerChain,
};
use serde_json::{json, Value};

use crate::output;
use crate::{Mode, TableFormat};

// Input errors surface as Err(..) and exit 2 from main.
const EXIT_OK: u8 = 0;
const EXIT_NOT_DISTINGUISHING: u8 = 1;
const EXIT_BUDGET: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;

type CmdResult = Result<u8, String>;

/// Under CI_DETERMINISTIC=1 every randomized command must be given an
/// explicit seed.
fn resolve_seed(seed: Option<u64>) -> Result<u64, String> {
    match seed {
        Some(s) => Ok(s),
        None => {
            if std::env::var("CI_DETERMINISTIC").as_deref() == Ok("1") {
                Err("CI_DETERMINISTIC=1 requires an explicit --seed".into())
            } else {
                Ok(0)
            }
        }
    }
}

fn load_group(path: &Path) -> Result<(CatalogEntry, PermutationGroup), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let entry = catalog::parse_group_record(&text).map_err(|e| e.to_string())?;
    let group = entry.group().map_err(|e| e.to_string())?;
    Ok((entry, group))
}

fn limits(budget: u64, trials: u64, seed: u64) -> SearchLimits {
    SearchLimits {
        trials,
        seed,
        coloring_budget: budget,
        workers: 1,
    }
}

enum Flag {
    Decided(bool),
    Unknown(String),
}

impl Flag {
    fn json(&self) -> Value {
        match self {
            Flag::Decided(v) => json!({ "value": v }),
            Flag::Unknown(reason) => json!({ "unknown": reason }),
        }
    }

    fn text(&self) -> String {
        match self {
            Flag::Decided(v) => v.to_string(),
            Flag::Unknown(reason) => format!("unknown ({reason})"),
        }
    }
}

/// Quasiprimitivity and semiprimitivity with the primitive shortcut: a
/// primitive group is quasiprimitive, and a quasiprimitive group is
/// semiprimitive, so the scan only runs for imprimitive groups.
fn classification_flags(
    group: &PermutationGroup,
    primitive: bool,
    cap: u64,
) -> (Flag, Flag) {
    if primitive {
        return (Flag::Decided(true), Flag::Decided(true));
    }
    let quasi = match is_quasiprimitive(group, cap) {
        Ok(v) => Flag::Decided(v),
        Err(e) => Flag::Unknown(e.to_string()),
    };
    let semi = match (&quasi, is_semiprimitive(group, cap)) {
        (Flag::Decided(true), _) => Flag::Decided(true),
        (_, Ok(v)) => Flag::Decided(v),
        (_, Err(e)) => Flag::Unknown(e.to_string()),
    };
    (quasi, semi)
}

pub fn analyze(
    path: &Path,
    cap: u64,
    budget: u64,
    trials: u64,
    seed: Option<u64>,
    as_json: bool,
) -> CmdResult {
    let seed = resolve_seed(seed)?;
    let (entry, group) = load_group(path)?;
    let started = Instant::now();
    let chain = StabilizerChain::build(&group);
    let transitive = is_transitive(&group);
    let primitive = is_primitive(&group);
    let (quasi, semi) = classification_flags(&group, primitive, cap);
    let result = distinguishing_number_for_chain(&chain, &limits(budget, trials, seed));
    let timing_ms = started.elapsed().as_millis() as u64;

    let undecided = !result.is_exact()
        || matches!(quasi, Flag::Unknown(_))
        || matches!(semi, Flag::Unknown(_));
    if as_json {
        let report = json!({
            "name": entry.name,
            "degree": group.degree(),
            "order": chain.order().to_string(),
            "flags": {
                "transitive": transitive,
                "primitive": primitive,
                "quasiprimitive": quasi.json(),
                "semiprimitive": semi.json(),
            },
            "d": output::d_json(&result),
            "certificate": output::coloring_json(&result.certificate),
            "refutations": output::refutations_json(&result),
            "seed": seed,
            "budget": { "colorings": budget, "elements": cap },
            "timing_ms": timing_ms,
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("name:           {}", entry.display_name());
        println!("degree:         {}", group.degree());
        println!("order:          {}", chain.order());
        println!("transitive:     {transitive}");
        println!("primitive:      {primitive}");
        println!("quasiprimitive: {}", quasi.text());
        println!("semiprimitive:  {}", semi.text());
        println!("D:              {}", output::d_text(&result));
        println!(
            "certificate:    {}",
            output::coloring_string(&result.certificate)
        );
        println!("timing:         {timing_ms} ms");
    }
    Ok(if undecided { EXIT_BUDGET } else { EXIT_OK })
}

pub fn distinguish(
    path: &Path,
    k: Option<usize>,
    mode: Mode,
    budget: u64,
    trials: u64,
    seed: Option<u64>,
    as_partition: bool,
) -> CmdResult {
    let seed = resolve_seed(seed)?;
    let (entry, group) = load_group(path)?;
    let chain = StabilizerChain::build(&group);
    let render = |c: &Coloring| -> Value {
        if as_partition {
            json!(output::partition_string(c))
        } else {
            output::coloring_json(c)
        }
    };
    if let Some(k) = k {
        let payload = match mode {
            Mode::Random => match random_search(&chain, k, trials, seed).unwrap() {
                Some(cert) => json!({
                    "name": entry.name,
                    "k": k,
                    "verdict": "found",
                    "trials": trials,
                    "seed": seed,
                    "certificate": render(&cert),
                }),
                None => json!({
                    "name": entry.name,
                    "k": k,
                    "verdict": "none",
                    "trials": trials,
                    "seed": seed,
                }),
            },
            Mode::Exact => match exhaustive_refute(&chain, k, budget) {
                Ok(RefuteOutcome::Found { coloring, examined }) => json!({
                    "name": entry.name,
                    "k": k,
                    "verdict": "found",
                    "examined": examined,
                    "certificate": render(&coloring),
                }),
                Ok(RefuteOutcome::Refuted { mode, examined }) => json!({
                    "name": entry.name,
                    "k": k,
                    "verdict": "refuted",
                    "mode": output::mode_name(mode),
                    "examined": examined,
                }),
                Err(Error::BudgetExceeded { examined }) => {
                    let payload = json!({
                        "name": entry.name,
                        "k": k,
                        "verdict": "budget-exceeded",
                        "examined": examined,
                    });
                    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
                    return Ok(EXIT_BUDGET);
                }
                Err(e) => return Err(e.to_string()),
            },
        };
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        return Ok(EXIT_OK);
    }
    let result = distinguishing_number_for_chain(&chain, &limits(budget, trials, seed));
    let payload = json!({
        "name": entry.name,
        "degree": group.degree(),
        "order": chain.order().to_string(),
        "d": output::d_json(&result),
        "certificate": render(&result.certificate),
        "refutations": output::refutations_json(&result),
        "seed": seed,
        "budget": { "colorings": budget },
        "colorings_examined": result.colorings_examined(),
    });
    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    Ok(if result.is_exact() { EXIT_OK } else { EXIT_BUDGET })
}

pub fn verify(path: &Path, coloring_text: &str, as_partition: bool) -> CmdResult {
    let (_, group) = load_group(path)?;
    let raw: Result<Vec<usize>, _> = coloring_text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect();
    let raw = raw.map_err(|e| format!("bad coloring string: {e}"))?;
    if raw.len() != group.degree() {
        return Err(Error::LengthMismatch {
            got: raw.len(),
            want: group.degree(),
        }
        .to_string());
    }
    // Relabeling never changes the colorwise stabilizer, so accept any
    // labels and canonicalize.
    let mut labels: Vec<usize> = raw.clone();
    labels.sort_unstable();
    labels.dedup();
    let colors: Vec<usize> = raw
        .iter()
        .map(|c| labels.binary_search(c).unwrap())
        .collect();
    let coloring = Coloring::new(colors).map_err(|e| e.to_string())?;
    let chain = StabilizerChain::build(&group);
    match stabilizer_is_trivial(&chain, &coloring).map_err(|e| e.to_string())? {
        None => {
            if as_partition {
                println!("distinguishing: {}", output::partition_string(&coloring));
            } else {
                println!("distinguishing");
            }
            Ok(EXIT_OK)
        }
        Some(witness) => {
            println!("not distinguishing; witness {}", format_cycles(&witness));
            Ok(EXIT_NOT_DISTINGUISHING)
        }
    }
}

pub fn reduce(
    path: &Path,
    budget: u64,
    trials: u64,
    seed: Option<u64>,
    quotient_out: Option<&Path>,
) -> CmdResult {
    let seed = resolve_seed(seed)?;
    let (entry, group) = load_group(path)?;
    if !is_transitive(&group) {
        println!("group is not transitive; nothing to reduce");
        return Ok(EXIT_PRECONDITION);
    }
    let system = match permdn_core::some_maximal_block_system(&group) {
        Ok(system) => system,
        Err(Error::PrimitiveInput) => {
            println!("group is primitive; nothing to reduce");
            return Ok(EXIT_PRECONDITION);
        }
        Err(e) => return Err(e.to_string()),
    };
    let quotient = permdn_core::quotient_action(&group, &system).map_err(|e| e.to_string())?;
    let kernel = permdn_core::kernel_of_block_action(&group, &system)
        .map_err(|e| e.to_string())?;
    let kernel_chain = StabilizerChain::build(&kernel);
    let chain = StabilizerChain::build(&group);

    println!("degree:        {}", group.degree());
    println!("order:         {}", chain.order());
    println!(
        "block system:  {} cells of size {}",
        system.cell_count(),
        system.cells()[0].len()
    );
    for cell in system.cells() {
        let inner = cell
            .iter()
            .map(|p| (p + 1).to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!("  {{{inner}}}");
    }
    println!("kernel order:  {}", kernel_chain.order());

    let quotient_record = CatalogEntry {
        name: entry.name.as_ref().map(|n| format!("{n} quotient")),
        degree: system.cell_count(),
        generators: quotient
            .image()
            .generators()
            .iter()
            .map(format_cycles)
            .collect(),
        expected_order: None,
        expected_d: None,
        expected_primitive: None,
        expected_quasiprimitive: None,
        expected_semiprimitive: None,
        note: None,
    };
    println!("quotient record:");
    print!("{}", quotient_record.to_record());
    if let Some(out) = quotient_out {
        std::fs::write(out, quotient_record.to_record())
            .map_err(|e| format!("{}: {e}", out.display()))?;
    }

    // Lifted certificate when the kernel is semiregular.
    if !permdn_core::is_semiregular(&kernel) {
        println!("kernel is not semiregular; no lifted certificate");
        return Ok(EXIT_OK);
    }
    let cells = system.cell_count();
    if system.cells().iter().all(|c| c.len() + 1 >= cells) {
        let cert = permdn_core::reduce::graded_subset(&group, &system)
            .map_err(|e| e.to_string())?;
        debug_assert!(stabilizer_is_trivial(&chain, &cert).unwrap().is_none());
        println!(
            "graded-subset certificate (D = 2): {}",
            output::coloring_string(&cert)
        );
        return Ok(EXIT_OK);
    }
    let q_chain = StabilizerChain::build(quotient.image());
    let q_result = distinguishing_number_for_chain(&q_chain, &limits(budget, trials, seed));
    if !q_result.is_exact() {
        println!(
            "quotient distinguishing number within [{}, {}]; budget exhausted",
            q_result.lo, q_result.hi
        );
        return Ok(EXIT_BUDGET);
    }
    if q_result.certificate.color_count() < 2 {
        println!("quotient is trivial; no lift needed");
        return Ok(EXIT_OK);
    }
    let lifted = permdn_core::reduce::extend_partition(&group, &system, &q_result.certificate)
        .map_err(|e| e.to_string())?;
    if stabilizer_is_trivial(&chain, &lifted)
        .map_err(|e| e.to_string())?
        .is_some()
    {
        return Err("lifted certificate failed re-verification".into());
    }
    println!(
        "lifted certificate (D <= {}): {}",
        q_result.lo,
        output::coloring_string(&lifted)
    );
    Ok(EXIT_OK)
}

pub fn tables(
    catalog_path: Option<&Path>,
    budget: u64,
    trials: u64,
    seed: Option<u64>,
    format: TableFormat,
) -> CmdResult {
    let seed = resolve_seed(seed)?;
    let entries = match catalog_path {
        Some(path) => catalog::load_catalog(path).map_err(|e| e.to_string())?,
        None => catalog::builtin_catalog(),
    };
    let mut contradiction = false;
    let mut rows: Vec<Value> = Vec::new();
    if matches!(format, TableFormat::Tsv) {
        println!("name\tdegree\torder\texpected_D\tcomputed_D\tstatus\tcolorings_examined");
    }
    for entry in &entries {
        let chain = match entry.validate() {
            Ok(chain) => chain,
            Err(e) => {
                contradiction = true;
                emit_row(
                    format,
                    &mut rows,
                    entry,
                    "-",
                    &format!("metadata-mismatch: {e}"),
                    0,
                );
                continue;
            }
        };
        let result = distinguishing_number_for_chain(&chain, &limits(budget, trials, seed));
        let computed = output::d_text(&result);
        let status = match (entry.expected_d, result.value()) {
            (Some(expected), Some(value)) if value == expected => "exact".to_string(),
            (Some(expected), Some(value)) => {
                contradiction = true;
                format!("MISMATCH (expected {expected}, computed {value})")
            }
            (Some(expected), None) => {
                if result.lo <= expected && expected <= result.hi {
                    "upper-bound-only".to_string()
                } else {
                    contradiction = true;
                    format!("MISMATCH (expected {expected} outside bounds)")
                }
            }
            (None, Some(_)) => "exact (no expectation)".to_string(),
            (None, None) => "upper-bound-only (no expectation)".to_string(),
        };
        emit_row(
            format,
            &mut rows,
            entry,
            &computed,
            &status,
            result.colorings_examined(),
        );
    }
    if matches!(format, TableFormat::Json) {
        println!("{}", serde_json::to_string_pretty(&Value::Array(rows)).unwrap());
    }
    Ok(if contradiction {
        EXIT_NOT_DISTINGUISHING
    } else {
        EXIT_OK
    })
}

fn emit_row(
    format: TableFormat,
    rows: &mut Vec<Value>,
    entry: &CatalogEntry,
    computed: &str,
    status: &str,
    examined: u64,
) {
    let order = entry
        .expected_order
        .as_ref()
        .map(|o| o.to_string())
        .unwrap_or_else(|| "-".into());
    let expected = entry
        .expected_d
        .map(|d| d.to_string())
        .unwrap_or_else(|| "-".into());
    match format {
        TableFormat::Tsv => {
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                entry.display_name(),
                entry.degree,
                order,
                expected,
                computed,
                status,
                examined
            );
        }
        TableFormat::Json => {
            rows.push(json!({
                "name": entry.display_name(),
                "degree": entry.degree,
                "order": order,
                "expected_D": entry.expected_d,
                "computed_D": computed,
                "status": status,
                "colorings_examined": examined,
            }));
        }
    }
}
