use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zgray::error::{Error, Result};
use zgray::format::{self, Role};
use zgray::gray::{image, member_of_phi_cap_image, phi_cap_image_size, GrayMap, MATERIALIZE_LIMIT};
use zgray::reproduce::{self, DEFAULT_SEED};
use zgray::verify::{self, VerificationReport};
use zgray::weights::{hamming_we, macwilliams_binary};
use zgray::zcode::space_size;
use zgray::{
    build_bi, code_di, code_hi, z24_examples, LinearZCode, OrderedHadamard, PerfectPartition,
    TypeProfile, ZMatrix, DEFAULT_BUDGET,
};

const BUDGET_VAR: &str = "ZGRAY_BUDGET";

/// Linear codes over Z_2m, Gray-map images and their verification.
#[derive(Parser)]
#[command(name = "zgray", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a matrix of the B_I family or a fixed Z_24 example.
    Build(BuildArgs),
    /// Map a code to its binary image.
    Map(MapArgs),
    /// Run a verification; exit 0 iff the verdict is true.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Hamming weight distribution of a binary code.
    Wef(WefArgs),
    /// Reproduce the published examples end to end.
    Demo {
        #[command(subcommand)]
        what: DemoCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildWhat {
    Bi,
    Hi,
    Di,
    Z24Bprime,
    Z24Bdprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    Gen,
    Check,
}

#[derive(clap::Args)]
struct BuildArgs {
    #[arg(value_enum)]
    what: BuildWhat,
    #[arg(long)]
    k: Option<u32>,
    /// Counts i1,…,ik.
    #[arg(long)]
    profile: Option<String>,
    #[arg(long)]
    out: PathBuf,
    /// Override the role written to the header.
    #[arg(long, value_enum)]
    role: Option<RoleArg>,
    /// Apply a random monomial transform (di only).
    #[arg(long)]
    scramble: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Phi,
    Cap,
}

#[derive(Clone, Copy, ValueEnum)]
enum HadamardKind {
    Sylvester,
    Paley12,
}

#[derive(clap::Args)]
struct MapArgs {
    #[arg(value_enum)]
    kind: MapKind,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "sylvester")]
    hadamard: HadamardKind,
    /// Refuse to write more words than this.
    #[arg(long)]
    max_words: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PerfectMethod {
    Auto,
    Definition,
    Criterion,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// 1'-perfect test of the kernel of a check matrix.
    Perfect1p {
        #[arg(long)]
        check: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: PerfectMethod,
    },
    /// Extended 1-perfect test of a binary code, or of Φ(ker CHECK) streamed.
    ExtPerfect {
        #[arg(
            long = "in",
            conflicts_with = "check",
            required_unless_present = "check"
        )]
        input: Option<PathBuf>,
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Hadamard parameter test of a binary code.
    Hadamard {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Formal duality of φ(D_I) and Φ(H_I).
    Duality {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        profile: String,
    },
    /// Profile and monomial transform of an (n, n2^k, n2^(k-2))* code.
    Canon {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(clap::Args)]
struct WefArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write (1/|C|)·W(X+Y, X-Y) instead.
    #[arg(long)]
    macwilliams: bool,
}

#[derive(Subcommand)]
enum DemoCmd {
    /// Run every reproduced claim in order.
    Paper {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn budget() -> Result<u64> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("{BUDGET_VAR}={v:?} is not a word count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn profile_arg(k: Option<u32>, profile: Option<&str>) -> Result<TypeProfile> {
    let k = k.ok_or_else(|| Error::Invalid("--k is required".into()))?;
    let p = profile.ok_or_else(|| Error::Invalid("--profile is required".into()))?;
    TypeProfile::parse(k, p)
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)?;
    Ok(())
}

fn load_code(path: &Path, budget: u64) -> Result<LinearZCode> {
    let (m, role) = format::read_zcode(path)?;
    let code = match role {
        Role::Gen => LinearZCode::from_generators(m)?,
        Role::Check => LinearZCode::from_check(m),
    };
    Ok(code.with_budget(budget))
}

fn load_check(path: &Path) -> Result<ZMatrix> {
    match format::read_zcode(path)? {
        (m, Role::Check) => Ok(m),
        (m, Role::Gen) => Ok(LinearZCode::from_generators(m)?.check_matrix().clone()),
    }
}

fn cmd_build(a: &BuildArgs) -> Result<()> {
    let (matrix, default_role) = match a.what {
        BuildWhat::Bi => (
            build_bi(&profile_arg(a.k, a.profile.as_deref())?),
            Role::Check,
        ),
        BuildWhat::Hi => {
            let p = profile_arg(a.k, a.profile.as_deref())?;
            match a.role {
                Some(RoleArg::Gen) => (code_hi(&p)?.generators().clone(), Role::Gen),
                _ => (build_bi(&p), Role::Check),
            }
        }
        BuildWhat::Di => {
            let p = profile_arg(a.k, a.profile.as_deref())?;
            if a.scramble {
                let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
                let (z, perm) = reproduce::random_monomial(&mut rng, p.modulus(), p.n())?;
                (
                    code_di(&p)?.apply_monomial(&z, &perm)?.generators().clone(),
                    Role::Gen,
                )
            } else {
                (build_bi(&p), Role::Gen)
            }
        }
        BuildWhat::Z24Bprime => (z24_examples().0, Role::Check),
        BuildWhat::Z24Bdprime => (z24_examples().1, Role::Check),
    };
    if a.scramble && !matches!(a.what, BuildWhat::Di) {
        return Err(Error::Invalid(
            "--scramble applies to `build di` only".into(),
        ));
    }
    let role = match (a.what, a.role) {
        (BuildWhat::Hi, _) | (_, None) => default_role,
        (_, Some(RoleArg::Gen)) => Role::Gen,
        (_, Some(RoleArg::Check)) => Role::Check,
    };
    write(&a.out, &format::write_zcode(&matrix, role))
}

fn cmd_map(a: &MapArgs, budget: u64) -> Result<()> {
    let code = load_code(&a.input, budget)?;
    let limit = a.max_words.unwrap_or(budget).min(MATERIALIZE_LIMIT);
    let md = code.modulus();
    let bin = match a.kind {
        MapKind::Phi => {
            let hadamard = match a.hadamard {
                HadamardKind::Sylvester => OrderedHadamard::sylvester(md.require_k()?)?,
                HadamardKind::Paley12 => OrderedHadamard::paley12(),
            };
            let size = code.cardinality();
            if size > BigUint::from(limit) {
                return Err(Error::budget("φ image", size, limit));
            }
            image(&code, GrayMap::Phi(&hadamard))?
        }
        MapKind::Cap => {
            let partition = PerfectPartition::standard(md.require_k()?)?;
            let size = phi_cap_image_size(&code, &partition)?;
            if size > limit as u128 {
                return Err(Error::budget(
                    "Φ image (use `verify ext-perfect --check` to stream it instead)",
                    size,
                    limit,
                ));
            }
            image(&code.with_budget(limit), GrayMap::PhiCap(&partition))?
        }
    };
    write(&a.out, &format::write_bincode(&bin))
}

fn cmd_verify(what: &VerifyCmd, budget: u64) -> Result<VerificationReport> {
    match what {
        VerifyCmd::Perfect1p { check, method } => {
            let m = load_check(check)?;
            let q = m.modulus().two_m() as u64;
            let use_definition = match method {
                PerfectMethod::Definition => true,
                PerfectMethod::Criterion => false,
                PerfectMethod::Auto => space_size(q, m.n_cols(), budget).is_some(),
            };
            if use_definition {
                verify::one_prime_perfect_definition(
                    &LinearZCode::from_check(m).with_budget(budget),
                )
            } else {
                verify::one_prime_perfect_criterion(&m, budget)
            }
        }
        VerifyCmd::ExtPerfect { input, check } => match (input, check) {
            (Some(path), _) => verify::is_extended_one_perfect(&format::read_bincode(path)?),
            (None, Some(path)) => {
                let m = load_check(path)?;
                let partition = PerfectPartition::standard(m.modulus().require_k()?)?;
                let code = LinearZCode::from_check(m.clone()).with_budget(budget);
                let size = phi_cap_image_size(&code, &partition)?;
                verify::is_extended_one_perfect_oracle(
                    partition.m() * m.n_cols(),
                    &BigUint::from(size),
                    |w| member_of_phi_cap_image(w, &m, &partition).unwrap_or(false),
                    budget,
                )
            }
            (None, None) => Err(Error::Invalid("one of --in or --check is required".into())),
        },
        VerifyCmd::Hadamard { input } => Ok(verify::is_hadamard(&format::read_bincode(input)?)),
        VerifyCmd::Duality { k, profile } => {
            verify::verify_duality(&TypeProfile::parse(*k, profile)?)
        }
        VerifyCmd::Canon { input } => {
            let code = load_code(input, budget)?;
            let c = verify::canonicalize(&code)?;
            Ok(canon_report(&code, &c))
        }
    }
}

fn canon_report(code: &LinearZCode, c: &verify::Canonical) -> VerificationReport {
    let perm: Vec<String> = c.perm.iter().map(|p| p.to_string()).collect();
    VerificationReport {
        claim: format!("monomially equivalent to D_I with I = {}", c.profile),
        verdict: true,
        method: verify::Method::Exhaustive,
        length: code.len(),
        cardinality: code.cardinality(),
        distance: None,
        witnesses: Vec::new(),
        details: vec![
            ("profile".into(), c.profile.to_string()),
            ("k".into(), c.profile.k().to_string()),
            ("z".into(), c.z.to_string()),
            ("perm".into(), perm.join(" ")),
        ],
    }
}

fn cmd_wef(a: &WefArgs) -> Result<()> {
    let code = format::read_bincode(&a.input)?;
    let mut we = hamming_we(&code);
    if a.macwilliams {
        we = macwilliams_binary(&we, &BigUint::from(code.cardinality()))?;
    }
    let text = format::write_wef(&we);
    match &a.out {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_demo(seed: u64) -> bool {
    let mut all = true;
    for o in reproduce::all(seed) {
        println!("[{}] {}", o.id, o.claim);
        for line in &o.computed {
            println!("    {line}");
        }
        println!("{} [{}] ({:.2?})", o.status(), o.id, o.elapsed);
        all &= o.pass;
    }
    all
}

fn exit_for(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    if e.is_infeasible() {
        ExitCode::from(2)
    } else {
        ExitCode::from(3)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let budget = match budget() {
        Ok(b) => b,
        Err(e) => return exit_for(&e),
    };
    let result: Result<bool> = match &cli.cmd {
        Cmd::Build(a) => cmd_build(a).map(|_| true),
        Cmd::Map(a) => cmd_map(a, budget).map(|_| true),
        Cmd::Wef(a) => cmd_wef(a).map(|_| true),
        Cmd::Verify { what } => cmd_verify(what, budget).map(|r| {
            print!("{r}");
            r.verdict
        }),
        Cmd::Demo {
            what: DemoCmd::Paper { seed },
        } => Ok(cmd_demo(*seed)),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => exit_for(&e),
    }
}
