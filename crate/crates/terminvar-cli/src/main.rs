//! `terminvar` — exact invariants of terminalized Kummer quotients from the
//! command line.
//!
//! Subcommands:
//!
//! * `models list` — the built-in torus models and the catalogue of actions.
//! * `invariants` — the invariant record of one action, from a catalogue id
//!   or a JSON spec file.
//! * `singularities` — the full singular configuration of one catalogued
//!   action.
//! * `enumerate` — subgroup classes of an ambient translation-extended frame
//!   group and their invariant records.
//! * `table` — one of the built-in result tables.
//! * `verify` — recompute tables and diff them against the embedded
//!   reference data.
//!
//! Exit codes: 0 success, 1 verification mismatch or engine failure, 2 bad
//! usage or bad input specification, 3 size cap exceeded.  The cap on group
//! closures is `100000` elements unless overridden by the environment
//! variable `TERMINVAR_SIZE_CAP`.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use terminvar_core::group::action::{ActionGroup, GenSpec};
use terminvar_core::group::catalogue::Catalogue;
use terminvar_core::group::enumerate::subgroup_classes;
use terminvar_core::invariants::{self, KummerInvariants};
use terminvar_core::models::TorusModel;
use terminvar_core::report::{self, Format, Table};
use terminvar_core::{catalog, size_cap, EngineError, Result};

/// Exact invariants of terminalized quotients of generalized Kummer
/// fourfolds and sixfolds under finite symplectic group actions.
#[derive(Parser)]
#[command(name = "terminvar", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect the built-in torus models and the action catalogue.
    Models {
        #[command(subcommand)]
        cmd: ModelsCmd,
    },
    /// Compute the invariant record of one group action.
    Invariants(InvariantsArgs),
    /// Report the singular configuration of one catalogued action.
    Singularities {
        /// Catalogue id, e.g. `k2/216,153`.
        #[arg(long)]
        catalog: String,
    },
    /// Enumerate subgroup classes of an ambient group and their records.
    Enumerate(EnumerateArgs),
    /// Print one of the built-in result tables.
    Table {
        /// One of: kummer-n2, kummer-n2-sing, kummer-n3-sing, hilb2,
        /// fixed-loci.
        name: String,
        #[arg(long, value_enum, default_value_t = Fmt::Md)]
        format: Fmt,
    },
    /// Recompute tables and compare them against the embedded reference
    /// data.
    Verify {
        /// Table name, or `all`.
        #[arg(default_value = "all")]
        name: String,
        /// Number of worker threads for table verification.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ModelsCmd {
    /// List the torus models and every catalogued action.
    List,
}

#[derive(Args)]
struct InvariantsArgs {
    /// Path to a JSON action specification.
    #[arg(long, conflicts_with = "catalog", required_unless_present = "catalog")]
    spec: Option<PathBuf>,
    /// Catalogue id, e.g. `k2/162,54`.
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long, value_enum, default_value_t = Fmt::Json)]
    format: Fmt,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Torus model name (see `models list`).
    #[arg(long)]
    model: String,
    /// Comma-separated linear words generating the ambient frame group.
    #[arg(long)]
    g0: String,
    /// Kummer parameter: 2 (fourfold) or 3 (sixfold).
    #[arg(long)]
    n: u32,
    /// Keep only subgroups whose frame image is the full ambient frame.
    #[arg(long, value_enum)]
    filter: Option<FilterKind>,
    /// Permit ambient groups with more than 243 elements.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterKind {
    /// Subgroups surjecting onto the ambient frame group.
    Surjective,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Fmt {
    Json,
    Csv,
    Md,
}

impl From<Fmt> for Format {
    fn from(f: Fmt) -> Format {
        match f {
            Fmt::Json => Format::Json,
            Fmt::Csv => Format::Csv,
            Fmt::Md => Format::Md,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                EngineError::BadSpec(_) => 2,
                EngineError::SizeCapExceeded { .. } => 3,
                EngineError::UnknownLocalModel(_) | EngineError::Inconsistency(_) => 1,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.cmd {
        Cmd::Models { cmd: ModelsCmd::List } => {
            print!("{}", cmd_models_list());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Invariants(args) => {
            print!("{}", cmd_invariants(args)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Singularities { catalog: id } => {
            print!("{}", cmd_singularities(id)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate(args) => {
            print!("{}", cmd_enumerate(args)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Table { name, format } => {
            print!("{}", report::build_table(name)?.render((*format).into()));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { name, jobs } => cmd_verify(name, *jobs),
    }
}

fn cmd_models_list() -> String {
    let mut out = String::from("torus models:\n");
    for m in TorusModel::all() {
        let symbols: Vec<&str> = m.symbols.keys().copied().collect();
        out.push_str(&format!("  {:<13} symbols: {}\n", m.name, symbols.join(", ")));
    }
    out.push_str("\ncatalogued actions:\n");
    for e in catalog::entries() {
        out.push_str(&format!(
            "  {:<12} {:<9} model {:<13} n={} order {}\n",
            e.id,
            e.alias,
            e.model,
            e.n,
            e.declared_order()
        ));
    }
    out
}

fn cmd_invariants(args: &InvariantsArgs) -> Result<String> {
    let (group, n, id) = if let Some(id) = &args.catalog {
        let entry = catalog::find(id)?;
        (entry.build()?, entry.n, Some(entry.id))
    } else {
        let path = args.spec.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path).map_err(|e| {
            EngineError::BadSpec(format!("cannot read `{}`: {e}", path.display()))
        })?;
        let (group, n) = build_from_spec(&text)?;
        (group, n, None)
    };
    let inv = invariants::compute(&group, n)?;
    Ok(match args.format {
        Fmt::Json => {
            let mut value = serde_json::to_value(&inv).expect("record serializes");
            if let Some(id) = id {
                value
                    .as_object_mut()
                    .expect("record is an object")
                    .insert("id".to_string(), serde_json::Value::String(id.to_string()));
            }
            let mut s = serde_json::to_string_pretty(&value).expect("value renders");
            s.push('\n');
            s
        }
        Fmt::Csv | Fmt::Md => invariants_table(&inv).render(args.format.into()),
    })
}

fn invariants_table(inv: &KummerInvariants) -> Table {
    Table {
        name: "invariants",
        header: vec![
            "n", "order", "g_tr", "g0", "rank", "N2", "N3", "eps", "b2", "b3", "pi1", "gate",
        ],
        rows: vec![vec![
            inv.n.to_string(),
            inv.group_order.to_string(),
            inv.g_tr_order.to_string(),
            inv.g0.clone(),
            inv.rank.to_string(),
            inv.n2.to_string(),
            inv.n3.to_string(),
            inv.epsilon.to_string(),
            inv.b2.to_string(),
            inv.b3.to_string(),
            inv.pi1.clone(),
            inv.gate.as_str().to_string(),
        ]],
    }
}

/// JSON shape of an action specification file.
#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    model: String,
    n: u32,
    generators: Vec<SpecGen>,
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecGen {
    /// Translation as four rational coordinates in the lattice basis
    /// (e.g. `["1/3", "0", "2/3", "0"]`).
    #[serde(default)]
    t: Option<Vec<String>>,
    /// Linear word in the model's symbols (e.g. `"g3"`, `"li*lw"`).
    #[serde(default)]
    m: Option<String>,
}

fn build_from_spec(text: &str) -> Result<(ActionGroup, u32)> {
    let sf: SpecFile = serde_json::from_str(text)
        .map_err(|e| EngineError::BadSpec(format!("invalid action specification: {e}")))?;
    if sf.n != 2 && sf.n != 3 {
        return Err(EngineError::BadSpec(format!(
            "`n` must be 2 or 3, got {}",
            sf.n
        )));
    }
    if sf.generators.is_empty() {
        return Err(EngineError::BadSpec(
            "the specification must list at least one generator".to_string(),
        ));
    }
    let level = i64::from(sf.n) + 1;
    let model = TorusModel::by_name(&sf.model)?;
    let mut gens = Vec::new();
    for (i, g) in sf.generators.iter().enumerate() {
        let mut t = [0i64; 4];
        if let Some(coords) = &g.t {
            if coords.len() != 4 {
                return Err(EngineError::BadSpec(format!(
                    "generator {i}: `t` must have exactly 4 coordinates"
                )));
            }
            for (k, s) in coords.iter().enumerate() {
                t[k] = frac_to_level(s, level)?;
            }
        }
        let word = g.m.clone().unwrap_or_default();
        if !word.is_empty() && word != "id" {
            model.linear_word(&word)?;
        }
        gens.push(GenSpec {
            translation: t,
            linear: word,
        });
    }
    let group = ActionGroup::new(&model, level, &gens, size_cap())?;
    Ok((group, sf.n))
}

/// Parses `"p"` or `"p/q"` as a rational torsion coordinate and converts it
/// to level numerators: `p/q` becomes `p * (level/q) mod level`.
fn frac_to_level(s: &str, level: i64) -> Result<i64> {
    let bad = || EngineError::BadSpec(format!("bad rational coordinate `{s}`"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<i64>().map_err(|_| bad())?,
            q.trim().parse::<i64>().map_err(|_| bad())?,
        ),
        None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
    };
    if q <= 0 {
        return Err(bad());
    }
    if level % q != 0 {
        return Err(EngineError::BadSpec(format!(
            "coordinate `{s}` is not a multiple of 1/{level}"
        )));
    }
    Ok((p * (level / q)).rem_euclid(level))
}

fn cmd_singularities(id: &str) -> Result<String> {
    let group = catalog::find(id)?.build()?;
    let value = report::singular_configuration(&group)?;
    let mut s = serde_json::to_string_pretty(&value).expect("value renders");
    s.push('\n');
    Ok(s)
}

enum Outcome {
    Skipped,
    Unclassified(usize),
    Record(usize, String),
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<String> {
    if args.n != 2 && args.n != 3 {
        return Err(EngineError::BadSpec(format!(
            "--n must be 2 or 3, got {}",
            args.n
        )));
    }
    let level = i64::from(args.n) + 1;
    let model = TorusModel::by_name(&args.model)?;
    let mut gens = Vec::new();
    for word in args.g0.split(',') {
        let w = word.trim();
        if w.is_empty() {
            return Err(EngineError::BadSpec(
                "--g0 expects a comma-separated list of linear words".to_string(),
            ));
        }
        model.linear_word(w)?;
        gens.push(GenSpec::linear_only(w));
    }
    for i in 0..4 {
        let mut t = [0i64; 4];
        t[i] = 1;
        gens.push(GenSpec::translation_only(t));
    }
    let ambient = ActionGroup::new(&model, level, &gens, size_cap())?;
    if ambient.order() > 243 && !args.allow_large {
        eprintln!(
            "note: the ambient group has {} elements; pass --allow-large to enumerate it",
            ambient.order()
        );
        return Err(EngineError::SizeCapExceeded { cap: 243 });
    }

    let frame = ambient.g0_abstract();
    let frame_name = Catalogue::new()
        .identify(&frame)
        .map(str::to_string)
        .unwrap_or_else(|| format!("order-{} group", frame.order()));
    let classes = subgroup_classes(&ambient);
    let surjective_only = matches!(args.filter, Some(FilterKind::Surjective));
    let outcomes: Vec<Outcome> = classes
        .par_iter()
        .map(|class| {
            let sub = ambient.subgroup(&class.rep);
            let image = sub.parts().len();
            if image == 1 || (surjective_only && image != frame.order()) {
                return Ok(Outcome::Skipped);
            }
            match invariants::compute(&sub, args.n) {
                Ok(inv) => Ok(Outcome::Record(
                    inv.group_order,
                    report::invariant_string(&inv),
                )),
                Err(EngineError::Inconsistency(_)) => Ok(Outcome::Unclassified(sub.order())),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;

    let mut records: BTreeMap<(usize, String), usize> = BTreeMap::new();
    let mut unclassified: BTreeMap<usize, usize> = BTreeMap::new();
    let mut computed = 0usize;
    for o in outcomes {
        match o {
            Outcome::Skipped => {}
            Outcome::Unclassified(order) => *unclassified.entry(order).or_insert(0) += 1,
            Outcome::Record(order, s) => {
                computed += 1;
                *records.entry((order, s)).or_insert(0) += 1;
            }
        }
    }

    let mut out = format!(
        "ambient: model={} level={} order={} frame={} subgroup-classes={}\n",
        model.name,
        level,
        ambient.order(),
        frame_name,
        classes.len()
    );
    out.push_str(&format!(
        "records: computed={} distinct={}\n",
        computed,
        records.len()
    ));
    for ((_, s), count) in &records {
        out.push_str(&format!("{count:>4}  {s}\n"));
    }
    for (order, count) in &unclassified {
        out.push_str(&format!(
            "{count:>4}  order={order} (fundamental group not in the name catalogue)\n"
        ));
    }
    Ok(out)
}

fn cmd_verify(name: &str, jobs: Option<usize>) -> Result<ExitCode> {
    let names: Vec<String> = if name == "all" {
        report::TABLE_NAMES.iter().map(|s| s.to_string()).collect()
    } else if report::TABLE_NAMES.contains(&name) {
        vec![name.to_string()]
    } else {
        return Err(EngineError::BadSpec(format!(
            "unknown table `{name}` (expected one of {} or `all`)",
            report::TABLE_NAMES.join(", ")
        )));
    };

    let verify_all = || -> Result<Vec<(String, Vec<report::CellDiff>, usize)>> {
        names
            .par_iter()
            .map(|n| {
                let diffs = report::verify_table(n)?;
                let rows = report::expected_table(n)?.rows.len();
                Ok((n.clone(), diffs, rows))
            })
            .collect()
    };
    let results = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| EngineError::BadSpec(format!("cannot build worker pool: {e}")))?
            .install(verify_all),
        None => verify_all(),
    }?;

    let mut out = String::new();
    let mut total_diffs = 0usize;
    let mut total_rows = 0usize;
    for (table, diffs, rows) in &results {
        total_rows += rows;
        if diffs.is_empty() {
            out.push_str(&format!("table {table}: ok ({rows} rows)\n"));
        } else {
            for d in diffs {
                out.push_str(&format!("{d}\n"));
            }
            out.push_str(&format!("table {table}: FAIL ({} cell diffs)\n", diffs.len()));
            total_diffs += diffs.len();
        }
    }
    if total_diffs == 0 {
        out.push_str(&format!(
            "verify: ok tables={} rows={total_rows}\n",
            results.len()
        ));
        print!("{out}");
        Ok(ExitCode::SUCCESS)
    } else {
        out.push_str(&format!("verify: FAIL cell-diffs={total_diffs}\n"));
        print!("{out}");
        Ok(ExitCode::FAILURE)
    }
}
