use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use log::{debug, info};
use serde_json::{json, Value};

use crossed_burnside::classify;
use crossed_burnside::crossed::{self, TuplePlan};
use crossed_burnside::json as input;
use crossed_burnside::ring::{self, HomVerification, RingHom, RingPresentation};
use crossed_burnside::sample;
use crossed_burnside::{FiniteGroupoid, GMonoid, GSet, MorphismId};

#[derive(Parser)]
#[command(name = "gb", version, about = "Burnside rings of finite groupoids and crossed G-sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Groupoid JSON file
    #[arg(long, global = true)]
    groupoid: Option<PathBuf>,
    /// G-set JSON file
    #[arg(long, global = true)]
    gset: Option<PathBuf>,
    /// `conjugation`, `trivial`, or a G-monoid JSON file
    #[arg(long, global = true)]
    weight: Option<String>,
    #[arg(long, global = true)]
    object: Option<usize>,
    /// Random tuples checked per axiom
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Check the groupoid (and G-set / weight, if given)
    Validate,
    /// Connected components
    Components,
    /// Isotropy group at `--object`
    Isotropy,
    /// Action groupoid of `--gset`
    ActionGroupoid,
    /// Burnside ring of G-sets
    Burnside,
    /// Hadamard ring of objects over `--gset`
    Hadamard,
    /// Crossed Burnside ring over `--weight` (default: conjugation)
    CrossedBurnside,
    /// Run a verification; exits 1 on a counterexample
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Axioms,
    Embedding,
    Reduction,
    Decomposition,
    ActionGroupoidIso,
    BasisOracle,
}

enum Failure {
    Input(String),
    Counterexample(Report),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Report {
    json: Value,
    table: String,
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    input::parse_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

impl Cli {
    fn groupoid(&self) -> Result<Arc<FiniteGroupoid>, Failure> {
        let path = self.groupoid.as_ref().ok_or(Failure::Input("--groupoid is required".into()))?;
        input::parse_groupoid(&read_json(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }

    fn gset(&self, base: &Arc<FiniteGroupoid>) -> Result<GSet, Failure> {
        let path = self.gset.as_ref().ok_or(Failure::Input("--gset is required".into()))?;
        input::parse_gset(&read_json(path)?, base).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }

    fn weight(&self, base: &Arc<FiniteGroupoid>) -> Result<Arc<GMonoid>, Failure> {
        let w = match self.weight.as_deref() {
            None | Some("conjugation") => GMonoid::conjugation(base),
            Some("trivial") => GMonoid::trivial(base),
            Some(path) => {
                let path = Path::new(path);
                input::parse_gmonoid(&read_json(path)?, base).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
            }
        };
        Ok(Arc::new(w))
    }
}

/// A small generating set of a subgroup of loops at one object, chosen
/// greedily in ascending id order.
fn generators(base: &FiniteGroupoid, h: &[MorphismId]) -> Vec<MorphismId> {
    let mut gens: Vec<MorphismId> = Vec::new();
    let mut span: Vec<MorphismId> = h.first().map(|&g| vec![base.identity(base.dom(g))]).unwrap_or_default();
    for &g in h {
        if span.contains(&g) {
            continue;
        }
        gens.push(g);
        let mut frontier = span.clone();
        while let Some(a) = frontier.pop() {
            for &k in &gens {
                let next = base.comp(k, a);
                if !span.contains(&next) {
                    span.push(next);
                    frontier.push(next);
                }
            }
        }
    }
    gens
}

fn ring_table(title: &str, ring: &RingPresentation, base: Option<&FiniteGroupoid>) -> String {
    let mut s = format!("{title}\ndim {}\n", ring.dim());
    let _ = writeln!(s, "{:>4}  {:<28} {:>6}", "i", "(component, H-generators, s)", "unit");
    for (i, b) in ring.basis().iter().enumerate() {
        let gens = base.map_or_else(|| b.subgroup.clone(), |g| generators(g, &b.subgroup));
        let label = b.label.map_or("-".to_string(), |l| l.to_string());
        let factor = b.factor.map_or(String::new(), |f| format!("{f}:"));
        let entry = format!("{factor}({}, {:?}, {label})", b.component, gens);
        let _ = writeln!(s, "{i:>4}  {entry:<28} {:>6}", ring.unit()[i]);
    }
    let _ = writeln!(s, "products");
    for i in 0..ring.dim() {
        for j in i..ring.dim() {
            let terms: Vec<String> = ring
                .row(i, j)
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| if c == 1 { format!("e{k}") } else { format!("{c}·e{k}") })
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            let _ = writeln!(s, "  e{i}·e{j} = {rhs}");
        }
    }
    s
}

fn hom_table(title: &str, v: &HomVerification, hom: &RingHom) -> String {
    let mut s = format!("{title}\n{} -> {}\n", hom.source.dim(), hom.target.dim());
    for (k, val) in [
        ("unital", v.unital),
        ("multiplicative", v.multiplicative),
        ("injective", v.injective),
        ("bijective", v.bijective),
    ] {
        let _ = writeln!(s, "  {k:<16}{val}");
    }
    if let Some(f) = &v.failure {
        let _ = writeln!(s, "  failure: {f}");
    }
    s
}

fn hom_json(hom: &RingHom, v: &HomVerification) -> Value {
    json!({
        "matrix": hom.matrix,
        "verified": {
            "unital": v.unital,
            "multiplicative": v.multiplicative,
            "injective": v.injective,
            "bijective": v.bijective,
        },
        "permutation": v.permutation,
        "constants_match": v.constants_match,
        "failure": v.failure,
    })
}

fn verdict(ok: bool, report: Report) -> Result<Report, Failure> {
    if ok {
        Ok(report)
    } else {
        Err(Failure::Counterexample(report))
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Validate => {
            let g = cli.groupoid()?;
            let mut out = json!({
                "groupoid": {
                    "objects": g.object_count(),
                    "morphisms": g.morphism_count(),
                    "components": g.components().count(),
                    "valid": true,
                }
            });
            let mut table = format!(
                "groupoid: {} objects, {} morphisms, {} components\n",
                g.object_count(),
                g.morphism_count(),
                g.components().count()
            );
            if cli.gset.is_some() {
                let x = cli.gset(&g)?;
                out["gset"] = json!({ "fibers": x.fibers(), "orbits": x.orbits().len(), "valid": true });
                let _ = writeln!(table, "gset: fibers {:?}, {} orbits", x.fibers(), x.orbits().len());
            }
            if cli.weight.is_some() {
                let w = cli.weight(&g)?;
                let sizes: Vec<usize> = (0..g.object_count()).map(|x| w.monoid(x).size()).collect();
                out["weight"] = json!({ "monoid_sizes": sizes, "conjugation": w.is_conjugation(), "valid": true });
                let _ = writeln!(table, "weight: monoid sizes {sizes:?}");
            }
            Ok(Report { json: out, table })
        }
        Command::Components => {
            let g = cli.groupoid()?;
            let c = g.components();
            let classes: Vec<Vec<usize>> = (0..c.count())
                .map(|i| (0..g.object_count()).filter(|&x| c.component_of[x] == i).collect())
                .collect();
            let mut table = format!("{} components\n", c.count());
            for (rep, cls) in c.representatives().iter().zip(&classes) {
                let order = g.loops(*rep).len();
                let _ = writeln!(table, "  rep {rep:>3}  isotropy order {order:>3}  objects {cls:?}");
            }
            let json = json!({
                "count": c.count(),
                "components": classes,
                "representatives": c.representatives(),
                "isotropy_orders": c.representatives().iter().map(|&r| g.loops(r).len()).collect::<Vec<_>>(),
            });
            Ok(Report { json, table })
        }
        Command::Isotropy => {
            let g = cli.groupoid()?;
            let x = cli.object.unwrap_or(0);
            let (group, inclusion) = g.isotropy_group(x)?;
            let k = group.morphism_count();
            let mult: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| group.comp(a, b)).collect()).collect();
            let classes: Vec<Vec<MorphismId>> = crossed_burnside::subgroups::subgroup_classes(&group)
                .iter()
                .map(|c| c.representative.iter().map(|&i| inclusion.morphism_map[i]).collect())
                .collect();
            let mut table = format!("isotropy at {x}: order {k}\nelements {:?}\n", inclusion.morphism_map);
            let _ = writeln!(table, "{} subgroup classes", classes.len());
            let json = json!({
                "object": x,
                "order": k,
                "elements": inclusion.morphism_map,
                "table": mult,
                "subgroup_classes": classes,
            });
            Ok(Report { json, table })
        }
        Command::ActionGroupoid => {
            let g = cli.groupoid()?;
            let x = cli.gset(&g)?;
            let a = x.action_groupoid()?;
            let transitive = a.groupoid.is_connected();
            let json = json!({
                "objects": a.tags,
                "morphisms": a.groupoid.morphism_count(),
                "components": a.groupoid.components().count(),
                "transitive": transitive,
                "groupoid": input::groupoid_to_json(&a.groupoid),
            });
            let table = format!(
                "action groupoid: {} objects, {} morphisms, {} components, transitive {transitive}\n",
                a.groupoid.object_count(),
                a.groupoid.morphism_count(),
                a.groupoid.components().count()
            );
            Ok(Report { json, table })
        }
        Command::Burnside => {
            let g = cli.groupoid()?;
            let (r, _) = ring::burnside_ring(&g)?;
            Ok(Report {
                json: r.to_json(),
                table: ring_table("Burnside ring", &r, Some(&g)),
            })
        }
        Command::Hadamard => {
            let g = cli.groupoid()?;
            let x = cli.gset(&g)?;
            let (r, _) = ring::hadamard_ring(&x)?;
            Ok(Report {
                json: r.to_json(),
                table: ring_table("Hadamard ring", &r, Some(&g)),
            })
        }
        Command::CrossedBurnside => {
            let g = cli.groupoid()?;
            let w = cli.weight(&g)?;
            let (r, _) = ring::crossed_burnside_ring(&w)?;
            let mut json = r.to_json();
            json["commutative"] = json!(r.commutativity_failure().is_none());
            Ok(Report {
                json,
                table: ring_table("crossed Burnside ring", &r, Some(&g)),
            })
        }
        Command::Verify { target } => verify(cli, *target),
    }
}

fn verify(cli: &Cli, target: VerifyTarget) -> Result<Report, Failure> {
    let g = cli.groupoid()?;
    match target {
        VerifyTarget::Axioms => {
            let w = cli.weight(&g)?;
            let pool = sample::sample_crossed_sets(&w, 12, cli.seed);
            info!("checking axioms on {} tuples per axiom", cli.samples);
            let plan = TuplePlan::Random {
                count: cli.samples,
                seed: cli.seed,
            };
            let report = crossed::check_monoidal_axioms(&pool, &plan);
            let mut table = String::from("axiom             checked  status\n");
            for o in &report.outcomes {
                let status = match &o.witness {
                    None => "ok".to_string(),
                    Some(w) => format!("FAILED samples {:?} object {} element {}: {}", w.samples, w.object, w.element, w.detail),
                };
                let _ = writeln!(table, "{:<17} {:>7}  {status}", o.axiom.name(), o.checked);
            }
            let samples: Vec<Value> = pool.iter().map(input::crossed_to_json).collect();
            let json = json!({ "seed": cli.seed, "axioms": report.to_json(), "samples": samples });
            verdict(report.all_hold(), Report { json, table })
        }
        VerifyTarget::Embedding => {
            let w = cli.weight(&g)?;
            let hom = ring::embedding_hom(&w)?;
            let v = hom.verify()?;
            let ok = v.unital && v.multiplicative && v.injective;
            verdict(ok, Report { json: hom_json(&hom, &v), table: hom_table("embedding", &v, &hom) })
        }
        VerifyTarget::Reduction => {
            let w = cli.weight(&g)?;
            let hom = ring::connected_reduction_hom(&w, cli.object.unwrap_or(0))?;
            let v = hom.verify()?;
            verdict(v.is_isomorphism(), Report { json: hom_json(&hom, &v), table: hom_table("connected reduction", &v, &hom) })
        }
        VerifyTarget::Decomposition => {
            let w = cli.weight(&g)?;
            let hom = ring::decomposition_hom(&w)?;
            let v = hom.verify()?;
            let mut factor_dims: Vec<usize> = Vec::new();
            for b in hom.target.basis() {
                let f = b.factor.unwrap_or(0);
                if factor_dims.len() <= f {
                    factor_dims.resize(f + 1, 0);
                }
                factor_dims[f] += 1;
            }
            let mut json = hom_json(&hom, &v);
            json["source_dim"] = json!(hom.source.dim());
            json["factor_dims"] = json!(factor_dims);
            let mut table = hom_table("decomposition", &v, &hom);
            let _ = writeln!(table, "  dims {} = {:?}", hom.source.dim(), factor_dims);
            verdict(v.is_isomorphism(), Report { json, table })
        }
        VerifyTarget::ActionGroupoidIso => {
            let x = cli.gset(&g)?;
            let (report, a, b) = ring::action_groupoid_iso_check(&x)?;
            let json = json!({
                "dim_action_groupoid": report.dim_action,
                "dim_hadamard": report.dim_hadamard,
                "witness": report.witness,
                "action_groupoid_ring": a.to_json(),
                "hadamard_ring": b.to_json(),
            });
            let table = format!(
                "action groupoid ring dim {}, Hadamard ring dim {}, witness {:?}\n",
                report.dim_action, report.dim_hadamard, report.witness
            );
            verdict(report.succeeded(), Report { json, table })
        }
        VerifyTarget::BasisOracle => {
            let w = cli.weight(&g)?;
            let bound = g
                .components()
                .representatives()
                .iter()
                .map(|&r| GSet::representable(&g, r).total_size())
                .max()
                .unwrap_or(0);
            debug!("brute force bound {bound}");
            let catalog = classify::enumerate_basis(&w);
            let oracle = classify::brute_force_slice_basis(w.underlying(), bound)?;
            let matching = classify::match_oracle(&oracle, &catalog)?;
            let json = json!({
                "catalog": catalog.to_json(),
                "catalog_size": catalog.len(),
                "oracle_size": oracle.len(),
                "matching": matching,
            });
            let table = format!(
                "catalog {} entries, brute force {} classes, matched {}\n",
                catalog.len(),
                oracle.len(),
                matching.is_some()
            );
            verdict(matching.is_some(), Report { json, table })
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), String> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json).map_err(|e| e.to_string())? + "\n",
        Format::Table => report.table.clone(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn init_logging() {
    let level = match std::env::var("GB_LOG").as_deref() {
        Ok("quiet") => log::LevelFilter::Off,
        Ok("info") => log::LevelFilter::Info,
        Ok("debug") => log::LevelFilter::Debug,
        _ => log::LevelFilter::Warn,
    };
    env_logger::Builder::new().filter_level(level).target(env_logger::Target::Stderr).init();
}

fn main() -> ExitCode {
    init_logging();
    let cli = Cli::parse();
    let (report, code) = match run(&cli) {
        Ok(r) => (r, 0),
        Err(Failure::Counterexample(r)) => (r, 1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(msg) = emit(&cli, &report) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
