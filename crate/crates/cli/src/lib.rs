//! Command-line front end for the `quattern` library.

pub mod report;

use std::collections::BTreeMap;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use quattern::census::{
    assemble_numeric, assemble_symbolic, assign_families, core_histogram, families_for, inventory, malle_check,
};
use quattern::gfq::moduli_checksum;
use quattern::oracle::{class_count_of_core, ExplicitGroup, DEFAULT_BUDGET_LOG2, MAX_BUDGET_LOG2};
use quattern::patterns::representable_sets;
use quattern::{CommutatorTable, FieldCtx, RootSystem, RootType};

#[derive(Debug, Parser)]
#[command(name = "quattern", about = "Character census of Sylow p-subgroups of Chevalley groups")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Representable sets of U.
    Repsets {
        ty: RootType,
        rank: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// List the sets, not just the count.
        #[arg(long)]
        list: bool,
    },
    /// Cores of the reduction with forms and branching classes.
    Cores {
        ty: RootType,
        rank: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Include abelian cores in the listing.
        #[arg(long)]
        all: bool,
    },
    /// Numeric character histogram of one nonabelian core.
    SolveCore {
        ty: RootType,
        rank: usize,
        /// Core index as printed by `cores`.
        core: usize,
        #[arg(long)]
        q: u32,
    },
    /// Degree census of U.
    Census {
        ty: RootType,
        rank: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Evaluate at this q by solving every core numerically.
        #[arg(long, conflicts_with = "symbolic")]
        q: Option<u32>,
        /// Symbolic census (the default).
        #[arg(long)]
        symbolic: bool,
    },
    /// Brute-force checks on explicit groups.
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
    /// Compare computed values with the reference tables.
    Report {
        #[arg(long)]
        paper_tables: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Conjugacy classes and abelianization of U.
    Classes {
        ty: RootType,
        rank: usize,
        #[arg(long)]
        q: u32,
        /// Allow groups of order up to 2^24.
        #[arg(long)]
        expensive: bool,
    },
    /// Character count of one core by inclusion–exclusion over quotients.
    CoreClasses {
        ty: RootType,
        rank: usize,
        core: usize,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        expensive: bool,
    },
}

/// Output of a command: text or JSON, plus whether every check passed.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

fn table(ty: RootType, rank: usize, p: u32) -> anyhow::Result<CommutatorTable> {
    Ok(CommutatorTable::build(&RootSystem::build(ty, rank)?, p)?)
}

fn provenance(ty: RootType, rank: usize) -> anyhow::Result<Value> {
    let rs = RootSystem::build(ty, rank)?;
    Ok(json!({
        "version": env!("CARGO_PKG_VERSION"),
        "root_table": rs.name(),
        "root_table_checksum": rs.table_checksum(),
        "moduli_checksum": moduli_checksum(),
    }))
}

fn field_for(q: u32) -> anyhow::Result<FieldCtx> {
    if !q.is_power_of_two() || q < 2 {
        bail!("q must be a power of 2, got {q}");
    }
    Ok(FieldCtx::for_q(q)?)
}

fn budget(expensive: bool) -> u32 {
    if expensive {
        MAX_BUDGET_LOG2
    } else {
        DEFAULT_BUDGET_LOG2
    }
}

fn histogram_json(h: &quattern::coresolver::Histogram) -> Value {
    let m: BTreeMap<String, String> = h.iter().map(|(d, c)| (format!("2^{d}"), c.to_string())).collect();
    json!(m)
}

/// Executes one parsed command.
pub fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Repsets { ty, rank, p, list } => {
            let tab = table(*ty, *rank, *p)?;
            let reps = representable_sets(&tab);
            let mut text = format!("{ty}{rank} p={p}: {} representable sets\n", reps.len());
            let mut items = Vec::new();
            for r in &reps {
                if *list {
                    text.push_str(&format!("  Σ = {:?}  N = {:?}\n", r.sigma.labels(), r.n_sigma.labels()));
                }
                items.push(json!({"sigma": r.sigma.labels(), "n_sigma": r.n_sigma.labels()}));
            }
            let mut j = json!({"type": ty.to_string(), "rank": rank, "p": p, "count": reps.len()});
            if *list {
                j["sets"] = json!(items);
            }
            Ok(Outcome { text, json: j, ok: true })
        }
        Command::Cores { ty, rank, p, all } => {
            if *p != 2 {
                bail!("the core reduction is implemented for p = 2");
            }
            let tab = table(*ty, *rank, *p)?;
            let inv = inventory(&tab)?;
            let mut text = format!(
                "{ty}{rank}: {} representable sets, {} cores, {} nonabelian, {} branching classes\n",
                inv.rep_count,
                inv.records.len(),
                inv.nonabelian().count(),
                inv.classes.len()
            );
            for (f, n) in inv.forms() {
                text.push_str(&format!("  {n} x {f}\n"));
            }
            let mut cores = Vec::new();
            for (idx, rec) in inv.records.iter().enumerate() {
                if rec.nonabelian.is_none() && !all {
                    continue;
                }
                let c = &rec.core;
                let mut j = json!({
                    "id": idx,
                    "rep": rec.rep,
                    "S": c.s.labels(), "Z": c.z.labels(), "A": c.a.labels(),
                    "L": c.l.labels(), "K": c.k.labels(), "D": c.d.labels(),
                    "abelian": c.abelian,
                    "log": c.path,
                });
                if let Some(n) = &rec.nonabelian {
                    j["form"] = json!([n.form.z, n.form.m, n.form.c]);
                    j["class"] = json!(n.class);
                    if let Some(eq) = &n.equation {
                        j["equation"] = json!(eq.to_string());
                    }
                    text.push_str(&format!(
                        "  core {idx} (set {}) {} class {} Z={:?}{}\n",
                        rec.rep,
                        n.form,
                        n.class,
                        c.reduced_z().labels(),
                        n.equation.as_ref().map(|e| format!(" {e}")).unwrap_or_else(|| " (heart)".into())
                    ));
                }
                cores.push(j);
            }
            let forms: Vec<Value> = inv
                .forms()
                .iter()
                .map(|(f, n)| json!({"form": [f.z, f.m, f.c], "count": n}))
                .collect();
            Ok(Outcome {
                text,
                json: json!({"type": ty.to_string(), "rank": rank, "forms": forms, "classes": inv.classes.len(), "cores": cores}),
                ok: true,
            })
        }
        Command::SolveCore { ty, rank, core, q } => {
            let tab = table(*ty, *rank, 2)?;
            let ctx = field_for(*q)?;
            let inv = inventory(&tab)?;
            let rec = inv.records.get(*core).with_context(|| format!("no core {core}"))?;
            let n = rec.nonabelian.as_ref().context("core is abelian")?;
            let h = core_histogram(&tab, &ctx, n)?;
            let mut text = format!("core {core} {} at q={q}:\n", n.form);
            for (d, c) in &h {
                text.push_str(&format!("  {c} characters of degree 2^{d}\n"));
            }
            Ok(Outcome {
                text,
                json: json!({"core": core, "q": q, "form": [n.form.z, n.form.m, n.form.c], "histogram": histogram_json(&h)}),
                ok: true,
            })
        }
        Command::Census { ty, rank, p, q, .. } => {
            if *p != 2 {
                bail!("the census is implemented for p = 2");
            }
            let tab = table(*ty, *rank, *p)?;
            let inv = inventory(&tab)?;
            let fams = families_for(*ty, *rank);
            let asg = assign_families(&tab, &inv, &fams, &[1, 2, 3])?;
            let prov = provenance(*ty, *rank)?;
            match q {
                Some(q) => {
                    let ctx = field_for(*q)?;
                    let f = ctx.q().trailing_zeros();
                    let h = assemble_numeric(&tab, &inv, &fams, &asg, f)?;
                    let total: u128 = h.values().sum();
                    let mut text = format!("{ty}{rank} at q={q}: {total} irreducible characters\n");
                    for (d, c) in &h {
                        text.push_str(&format!("  2^{d:<4} {c}\n"));
                    }
                    Ok(Outcome {
                        text,
                        json: json!({"q": q, "total": total.to_string(), "histogram": histogram_json(&h), "provenance": prov}),
                        ok: true,
                    })
                }
                None => {
                    let census = assemble_symbolic(&inv, &fams, &asg)?;
                    let mut text = format!("{ty}{rank} degree census (v = q − 1)\n");
                    let mut rows = Vec::new();
                    for (d, c) in &census.entries {
                        text.push_str(&format!("  {:<10} {}\n", d.to_string(), c));
                        rows.push(json!({"degree": d.to_string(), "i": d.i, "j": d.j, "even": c.even.render("v"), "odd": c.odd.render("v")}));
                    }
                    let total = census.total();
                    text.push_str(&format!("  total      {}\n", total));
                    text.push_str(&format!("  total in q {}\n", total.even.render("q")));
                    let mut j = json!({
                        "type": ty.to_string(), "rank": rank, "entries": rows,
                        "total": {"even": total.even.render("q"), "odd": total.odd.render("q")},
                        "provenance": prov,
                    });
                    if *ty == RootType::F && *rank == 4 {
                        let m = malle_check(&inv, &fams, &asg, &census);
                        text.push_str(&format!(
                            "  degree {}: {} ({})\n",
                            m.degree,
                            if m.present { m.count.to_string() } else { "absent".into() },
                            m.sources.join(", ")
                        ));
                        j["malle"] = json!({"present": m.present, "count": m.count.to_string(), "sources": m.sources});
                    }
                    Ok(Outcome { text, json: j, ok: true })
                }
            }
        }
        Command::Oracle { what } => match what {
            OracleCommand::Classes { ty, rank, q, expensive } => {
                let tab = table(*ty, *rank, 2)?;
                let ctx = field_for(*q)?;
                let g = ExplicitGroup::full(&tab, &ctx, budget(*expensive))?;
                let k = g.conjugacy_class_count();
                let ab = g.abelianization_order();
                Ok(Outcome {
                    text: format!("U{ty}{rank}({q}): {k} conjugacy classes, abelianization of order {ab}\n"),
                    json: json!({"type": ty.to_string(), "rank": rank, "q": q, "classes": k, "abelianization": ab.to_string()}),
                    ok: true,
                })
            }
            OracleCommand::CoreClasses { ty, rank, core, q, expensive } => {
                let tab = table(*ty, *rank, 2)?;
                let ctx = field_for(*q)?;
                let inv = inventory(&tab)?;
                let rec = inv.records.get(*core).with_context(|| format!("no core {core}"))?;
                let n = class_count_of_core(&tab, &ctx, &rec.core, budget(*expensive))?;
                Ok(Outcome {
                    text: format!("core {core}: {n} irreducible characters over nontrivial central characters\n"),
                    json: json!({"core": core, "q": q, "count": n.to_string()}),
                    ok: true,
                })
            }
        },
        Command::Report { paper_tables } => {
            if !paper_tables {
                bail!("report needs --paper-tables");
            }
            let r = report::reference_tables()?;
            Ok(Outcome {
                text: r.render(),
                ok: r.all_match(),
                json: serde_json::to_value(&r)?,
            })
        }
    }
}

/// Exit status and captured output of one invocation.
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` and runs the command. The status is nonzero when a check
/// fails or an error occurs.
pub fn run<I, T>(argv: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let (code, text) = (if e.use_stderr() { 2 } else { 0 }, e.to_string());
            return if code == 0 {
                RunResult { code, stdout: text, stderr: String::new() }
            } else {
                RunResult { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Some(n) = cli.threads {
        // Ignored when a pool already exists (repeated calls in one process).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
            } else {
                out.text
            };
            RunResult {
                code: if out.ok { 0 } else { 1 },
                stdout: body,
                stderr: String::new(),
            }
        }
        Err(e) => RunResult {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}
