use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fk_core::category::{builtin_ring, CategoryRing};
use fk_core::complex::{hom_group, relative_S};
use fk_core::module::{
    check_resolution, ext_from_resolution, free_generator, free_layout, free_resolution, is_exact, is_free,
    parse_module_over, spec_to_string, validate_module, FreeResolution, Module, DEFAULT_MAX_LENGTH,
};
use fk_core::poset::FinitePoset;
use fk_core::table::hom_table;
use fk_core::verify;

const ORIENTATION: &str = "Points are ordered by x ⪯ y iff cl{x} ⊆ cl{y}; open sets are up-closed. \
In a poset file, `cover a<b` puts b above a, so b lies in every open set containing a. \
In d4 the point 4 is open and `cover 1<4, 2<4, 3<4`.";

#[derive(Parser)]
#[command(name = "fk", about = "Filtrated K-theory of finite T0 spaces", after_help = ORIENTATION)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Points, open sets and connected locally closed sets of a space
    Space(SpaceArgs),
    /// Table of graded hom groups between connected locally closed sets
    Homtable(SpaceArgs),
    /// The simplicial pair whose K-theory computes hom(Y, Z)
    Complex {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Validate a module and report exactness and freeness
    ModuleCheck { ring: String, module: PathBuf },
    /// Free resolution of a module
    ModuleResolve {
        ring: String,
        module: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
        max_length: usize,
    },
    /// Ext^n(A, B)
    ModuleExt {
        ring: String,
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
        max_length: usize,
    },
    /// Run the reproduction checks
    VerifyPaper {
        /// criterion number or tag prefix
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(clap::Args)]
struct SpaceArgs {
    /// builtin space: chain:N, d4, d4op
    name: Option<String>,
    #[arg(long, conflicts_with = "name")]
    poset: Option<PathBuf>,
}

impl SpaceArgs {
    fn load(&self) -> Result<FinitePoset> {
        match (&self.poset, &self.name) {
            (Some(path), _) => Ok(FinitePoset::parse(&read(path)?)?),
            (None, Some(name)) => {
                let ring = builtin_ring(name)?;
                ring.poset().cloned().with_context(|| format!("{name} has no underlying space"))
            }
            (None, None) => bail!("give a builtin space name or --poset <file>"),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_module(ring: &Arc<CategoryRing>, path: &Path) -> Result<Module> {
    parse_module_over(&read(path)?, ring).with_context(|| format!("parsing {}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let machine = cli.format == Format::Machine;
    match &cli.command {
        Command::Space(args) => {
            let p = args.load()?;
            let names = |sets: Vec<_>| sets.into_iter().map(|s| p.set_name(s)).collect::<Vec<_>>().join(" ");
            if machine {
                print!("{}", p.to_spec());
            } else {
                print!("{p}");
            }
            println!("open {}", names(p.open_sets()));
            println!("closed {}", names(p.closed_sets()));
            println!("connected-lc {}", names(p.connected_lc_sets()));
            Ok(true)
        }
        Command::Homtable(args) => {
            let t = hom_table(&args.load()?);
            print!("{}", if machine { t.render_machine() } else { t.render_text() });
            Ok(true)
        }
        Command::Complex { space, from, to } => {
            let p = space.load()?;
            let (y, z) = (p.parse_set(from)?, p.parse_set(to)?);
            for (s, name) in [(y, from), (z, to)] {
                if !p.is_locally_closed(s) {
                    bail!("{name} is not locally closed");
                }
            }
            print!("{}", relative_S(&p, y, z).render(&p));
            let k = hom_group(&p, y, z);
            println!("hom {} ({})", k.groups, k.exactness);
            Ok(true)
        }
        Command::ModuleCheck { ring, module } => {
            let ring = Arc::new(builtin_ring(ring)?);
            let m = load_module(&ring, module)?;
            module_check(&m, machine)
        }
        Command::ModuleResolve { ring, module, max_length } => {
            let ring = Arc::new(builtin_ring(ring)?);
            let m = load_module(&ring, module)?;
            if !validate_module(&m).passed() {
                bail!("{} is not a module over {}", module.display(), ring.name());
            }
            let res = free_resolution(&m, *max_length);
            print_resolution(&ring, &res, machine);
            let defects = check_resolution(&res);
            for d in &defects {
                println!("defect {d}");
            }
            Ok(res.complete && defects.is_empty())
        }
        Command::ModuleExt { ring, a, b, degree, max_length } => {
            let ring = Arc::new(builtin_ring(ring)?);
            let (ma, mb) = (load_module(&ring, a)?, load_module(&ring, b)?);
            for (m, path) in [(&ma, a), (&mb, b)] {
                if !validate_module(m).passed() {
                    bail!("{} is not a module over {}", path.display(), ring.name());
                }
            }
            let res = free_resolution(&ma, *max_length);
            let e = ext_from_resolution(&res, &mb, *degree)?;
            if machine {
                println!("ext {degree} {e}");
            } else {
                println!("Ext^{degree} = {e}");
            }
            Ok(true)
        }
        Command::VerifyPaper { only } => {
            let reports = verify::run(only.as_deref());
            if reports.is_empty() {
                bail!("no criterion matches {:?}", only.as_deref().unwrap_or(""));
            }
            for r in &reports {
                if machine {
                    let status = if r.passed() { "pass" } else { "fail" };
                    println!("criterion {} {} {status}", r.id, r.tag);
                } else {
                    print!("{r}");
                }
            }
            Ok(reports.iter().all(|r| r.passed()))
        }
    }
}

fn module_check(m: &Module, machine: bool) -> Result<bool> {
    let valid = validate_module(m);
    if !valid.passed() {
        println!("valid false");
        for f in &valid.failures {
            println!("  {f}");
        }
        return Ok(false);
    }
    let exact = is_exact(m);
    let free = is_free(m);
    if machine {
        println!("valid true");
        println!("exact {}", exact.exact());
        println!("slotwise-free {}", m.is_slotwise_free());
        println!("tor1 {}", free.tor1);
        println!("free {}", free.free);
    } else {
        print!("{m}");
        println!("valid: true");
        println!("exact: {} ({} triples)", exact.exact(), exact.triples_checked);
        for f in &exact.failures {
            println!("  fails at {} in {}", f.position, f.triple);
        }
        println!("slotwise free: {}", m.is_slotwise_free());
        println!("Tor1(ss, M) = {}", free.tor1);
        match &free.witness {
            Some(w) => println!("free: {}", spec_to_string(m.ring(), &w.spec)),
            None => println!("free: false"),
        }
    }
    Ok(true)
}

fn print_resolution(ring: &CategoryRing, res: &FreeResolution, machine: bool) {
    if machine {
        for (i, s) in res.specs.iter().enumerate() {
            println!("F {i} {}", spec_to_string(ring, s));
        }
        println!("complete {}", res.complete);
        return;
    }
    let mut chain: Vec<String> = res.specs.iter().rev().map(|s| spec_to_string(ring, s)).collect();
    if res.complete {
        chain.insert(0, "0".into());
    } else {
        chain.insert(0, "…".into());
    }
    chain.extend(["M".into(), "0".into()]);
    println!("{}", chain.join(" → "));
    for (i, d) in res.boundaries.iter().enumerate() {
        let (src, tgt) = (&res.specs[i + 1], &res.specs[i]);
        println!("d{}:", i + 1);
        for g in 0..src.len() {
            let (y, p, pos) = free_generator(ring, src, g);
            let col = d.map(y, p).column(pos);
            let terms: Vec<String> = free_layout(ring, tgt, y, p)
                .iter()
                .zip(&col)
                .filter(|(_, c)| **c != 0.into())
                .map(|(&(k, b), c)| format!("{c}·{}·e{k}", ring.basis()[b].label))
                .collect();
            let rhs = if terms.is_empty() { "0".into() } else { terms.join(" + ") };
            println!("  e{g} ↦ {rhs}");
        }
    }
    if !res.complete {
        println!("truncated at length {}", res.length());
    }
}
