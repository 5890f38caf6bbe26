//! Command-line workbench for order-domain codes: inspect a code, encode,
//! corrupt, decode, trace the decoder, self-test against the worked
//! examples, and sweep random errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ordercodes::codes::{build_code, decoding_radius, encode, feng_rao_distance};
use ordercodes::config::{hermitian_config, plane8_config, WorkbenchConfig};
use ordercodes::error::Error;
use ordercodes::field::Gf;
use ordercodes::poly::Poly;
use ordercodes::values::{decode, DecodeResult, ErrorVector};
use ordercodes::EvaluationCode;

#[derive(Parser)]
#[command(name = "ordercodes", about = "order-domain code workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ConfigArg {
    /// Workbench configuration file
    #[arg(long)]
    config: PathBuf,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print code parameters: length, dimensions, distance bound, basis monomials
    Info(ConfigArg),
    /// Encode a message file into a dual codeword
    Encode {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, name = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Add a seeded random error of given weight, or an explicit error file
    Corrupt {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, name = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        weight: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Explicit error pattern file (index:code lines); overrides --weight
        #[arg(long)]
        error: Option<PathBuf>,
    },
    /// Decode a received word and write the decoding report
    Decode {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, name = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the step-by-step decoder trace
        #[arg(long)]
        trace: bool,
    },
    /// Print only the decoder trace for a received word
    Trace {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, name = "in")]
        input: PathBuf,
    },
    /// Run the built-in golden scenarios
    Selftest,
    /// Seeded random-error sweep; prints CSV of success fractions
    Montecarlo {
        #[command(flatten)]
        config: ConfigArg,
        /// Largest error weight to sweep (from 0)
        #[arg(long, default_value_t = 3)]
        weight: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::DecodeFailure { stage, detail }) => {
            eprintln!("decode failure at {}: {}", stage, detail);
            ExitCode::from(2)
        }
        Err(e @ (Error::NoMajority(_) | Error::CardinalityMismatch { .. })) => {
            eprintln!("decode failure: {}", e);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Info(c) => {
            let cfg = WorkbenchConfig::load(&c.config)?;
            let pres = cfg.presentation()?;
            let code = build_code(&pres, cfg.ell)?;
            let d = feng_rao_distance(&pres, cfg.ell)?;
            println!("n                = {}", code.n());
            println!("ell              = {}", cfg.ell);
            println!("rank(Ev)         = {}", code.rank);
            println!("dim C (dual)     = {}", code.dual_dim());
            println!("Feng-Rao d >=    = {}", d);
            println!("radius t         = {}", (d - 1) / 2);
            let monos: Vec<String> = code
                .monomials
                .iter()
                .map(|e| Poly::monomial(e.clone(), Gf::ONE).render(&pres.names))
                .collect();
            println!("basis monomials  = {}", monos.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Encode { config, input, out } => {
            let cfg = WorkbenchConfig::load(&config.config)?;
            let code = cfg.code()?;
            let msg = read_vector(&input, &code)?;
            let word = encode(&code, &msg)?;
            write_vector(&out, &word)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Corrupt {
            config,
            input,
            out,
            weight,
            seed,
            error,
        } => {
            let cfg = WorkbenchConfig::load(&config.config)?;
            let code = cfg.code()?;
            let mut word = read_vector(&input, &code)?;
            if word.len() != code.n() {
                return Err(Error::LengthMismatch {
                    expected: code.n(),
                    got: word.len(),
                });
            }
            let field = &code.pres.field;
            let ev = match error {
                Some(path) => read_error_pattern(&path, code.n())?,
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(cfg.seed));
                    random_error(&mut rng, &code, weight)
                }
            };
            for (&i, &v) in &ev.entries {
                word[i] = field.add(word[i], v);
            }
            write_vector(&out, &word)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decode {
            config,
            input,
            out,
            trace,
        } => {
            let cfg = WorkbenchConfig::load(&config.config)?;
            let code = cfg.code()?;
            let word = read_vector(&input, &code)?;
            let res = decode(&code, &word)?;
            if trace {
                print!("{}", render_trace(&code, &res));
            }
            let report = render_result(&code, &res);
            match out {
                Some(path) => std::fs::write(path, report)?,
                None => print!("{}", report),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Trace { config, input } => {
            let cfg = WorkbenchConfig::load(&config.config)?;
            let code = cfg.code()?;
            let word = read_vector(&input, &code)?;
            let res = decode(&code, &word)?;
            print!("{}", render_trace(&code, &res));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Selftest => selftest(),
        Cmd::Montecarlo {
            config,
            weight,
            trials,
            seed,
        } => {
            let cfg = WorkbenchConfig::load(&config.config)?;
            let code = cfg.code()?;
            let seed = seed.unwrap_or(cfg.seed);
            println!("weight,trials,successes,fraction");
            for w in 0..=weight {
                let ok = monte_carlo_weight(&code, w, trials, seed);
                println!("{},{},{},{:.4}", w, trials, ok, ok as f64 / trials as f64);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// One seeded trial stream per (seed, weight, trial) so results do not
/// depend on scheduling or trial order.
pub fn monte_carlo_weight(code: &EvaluationCode, w: usize, trials: usize, seed: u64) -> usize {
    let mut ok = 0;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (w as u64) << 32 ^ t as u64);
        let ev = random_error(&mut rng, code, w);
        let word = ev.as_word(code.n());
        match decode(code, &word) {
            Ok(res) if res.error == ev => ok += 1,
            _ => {}
        }
    }
    ok
}

fn random_error<R: Rng>(rng: &mut R, code: &EvaluationCode, weight: usize) -> ErrorVector {
    let n = code.n();
    let q = code.pres.field.q;
    let mut idx: Vec<usize> = (0..n).collect();
    // partial Fisher-Yates for the support
    for i in 0..weight.min(n) {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    let mut ev = ErrorVector::default();
    for &i in idx.iter().take(weight.min(n)) {
        ev.entries.insert(i, Gf(rng.gen_range(1..q) as u16));
    }
    ev
}

fn read_vector(path: &PathBuf, code: &EvaluationCode) -> Result<Vec<Gf>, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad element code '{}'", tok)))?;
            out.push(code.pres.field.element(v)?);
        }
    }
    Ok(out)
}

fn write_vector(path: &PathBuf, word: &[Gf]) -> Result<(), Error> {
    let line: Vec<String> = word.iter().map(|g| g.0.to_string()).collect();
    std::fs::write(path, format!("{}\n", line.join(" ")))?;
    Ok(())
}

fn read_error_pattern(path: &PathBuf, n: usize) -> Result<ErrorVector, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut ev = ErrorVector::default();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(Error::Parse(format!("expected index:code, got '{}'", line)));
        };
        let idx: usize = line[..colon]
            .trim()
            .parse()
            .map_err(|_| Error::Parse("bad point index".into()))?;
        let val: u16 = line[colon + 1..]
            .trim()
            .parse()
            .map_err(|_| Error::Parse("bad element code".into()))?;
        if idx >= n {
            return Err(Error::Parse(format!("point index {} out of range", idx)));
        }
        if val != 0 {
            ev.entries.insert(idx, Gf(val));
        }
    }
    Ok(ev)
}

fn render_result(code: &EvaluationCode, res: &DecodeResult) -> String {
    let names = &code.pres.names;
    let mut out = String::new();
    let word: Vec<String> = res.corrected.iter().map(|g| g.0.to_string()).collect();
    out.push_str("corrected:\n");
    out.push_str(&word.join(" "));
    out.push('\n');
    out.push_str("error:\n");
    for (&i, &v) in &res.error.entries {
        out.push_str(&format!("{}:{}\n", i, v.0));
    }
    out.push_str("diagnostics:\n");
    out.push_str(&format!("  error weight   = {}\n", res.error.weight()));
    out.push_str(&format!("  radius         = {}\n", res.radius));
    out.push_str(&format!("  within radius  = {}\n", res.within_radius));
    let fp: Vec<String> = res
        .locator
        .footprint
        .iter()
        .map(|e| Poly::monomial(e.clone(), Gf::ONE).render(names))
        .collect();
    out.push_str(&format!("  footprint      = {{{}}}\n", fp.join(", ")));
    out.push_str("  locator basis:\n");
    for g in &res.locator.basis {
        out.push_str(&format!("    {}\n", g.render(names)));
    }
    for v in &res.outcome.votes {
        let tallies: Vec<String> = v
            .tallies
            .iter()
            .map(|(val, n)| format!("{}x{}", val, n))
            .collect();
        out.push_str(&format!(
            "  voted {} = {} (tally {})\n",
            Poly::monomial(v.monomial.clone(), Gf::ONE).render(names),
            v.winner.0,
            tallies.join(" ")
        ));
    }
    out.push_str(&format!("  bms steps      = {}\n", res.outcome.steps));
    out
}

fn render_trace(code: &EvaluationCode, res: &DecodeResult) -> String {
    let names = &code.pres.names;
    let mut out = String::new();
    for t in &res.outcome.trace {
        let ext: Vec<String> = t
            .ext_corners
            .iter()
            .map(|e| Poly::monomial(e.clone(), Gf::ONE).render(names))
            .collect();
        let int: Vec<String> = t
            .int_corners
            .iter()
            .map(|e| Poly::monomial(e.clone(), Gf::ONE).render(names))
            .collect();
        out.push_str(&format!(
            "step {:>3} {:<8} footprint {:>2} ext [{}] int [{}]",
            t.index,
            Poly::monomial(t.monomial.clone(), Gf::ONE).render(names),
            t.footprint_size,
            ext.join(", "),
            int.join(", ")
        ));
        if let Some(v) = &t.vote {
            let tallies: Vec<String> = v
                .tallies
                .iter()
                .map(|(val, n)| format!("{}x{}", val, n))
                .collect();
            out.push_str(&format!(" vote {} (tally {})", v.winner.0, tallies.join(" ")));
        }
        out.push('\n');
    }
    out
}

fn selftest() -> Result<ExitCode, Error> {
    let failures = std::cell::Cell::new(0usize);
    let check = |name: &str, ok: bool| {
        println!("{} {}", if ok { "PASS" } else { "FAIL" }, name);
        if !ok {
            failures.set(failures.get() + 1);
        }
    };

    // Hermitian worked example
    let cfg = WorkbenchConfig::parse(hermitian_config())?;
    let code = cfg.code()?;
    check("hermitian: 64 points", code.n() == 64);
    check(
        "hermitian: distance bound 15",
        feng_rao_distance(&code.pres, 20)? == 15,
    );
    let field = &code.pres.field;
    let b = |k: u32| field.pow(Gf(2), k as u64);
    let pts = [
        (b(1), b(6)),
        (b(2), b(14)),
        (b(4), b(6)),
        (b(5), b(14)),
        (b(8), b(3)),
        (b(11), b(12)),
        (Gf(0), Gf(0)),
    ];
    let vals = [b(1), b(4), b(12), Gf(1), Gf(1), b(1), b(1)];
    let mut word = vec![Gf::ZERO; code.n()];
    let mut planted = ErrorVector::default();
    for ((x, y), v) in pts.iter().zip(vals.iter()) {
        let i = code
            .points
            .points
            .iter()
            .position(|p| p[0] == *x && p[1] == *y)
            .expect("error point on curve");
        word[i] = *v;
        planted.entries.insert(i, *v);
    }
    match decode(&code, &word) {
        Ok(res) => {
            check("hermitian: seven errors recovered", res.error == planted);
            check(
                "hermitian: footprint size 7",
                res.locator.footprint.len() == 7,
            );
        }
        Err(e) => {
            println!("FAIL hermitian decode: {}", e);
            failures.set(failures.get() + 1);
        }
    }
    // determinism: decode twice, identical reports
    let r1 = decode(&code, &word).map(|r| render_result(&code, &r))?;
    let r2 = decode(&code, &word).map(|r| render_result(&code, &r))?;
    check("hermitian: deterministic report", r1 == r2);

    // plane code worked example
    let cfg = WorkbenchConfig::parse(plane8_config())?;
    let code = cfg.code()?;
    check("plane: 64 points", code.n() == 64);
    check(
        "plane: distance bound 5",
        feng_rao_distance(&code.pres, 10)? == 5,
    );
    let f8 = &code.pres.field;
    let a = |k: u32| f8.pow(Gf(2), k as u64);
    let mut word = vec![Gf::ZERO; code.n()];
    let mut planted = ErrorVector::default();
    for ((x, y), v) in [
        ((Gf(1), Gf(1)), Gf(1)),
        ((a(1), a(2)), f8.add(a(2), Gf(1))),
    ] {
        let i = code
            .points
            .points
            .iter()
            .position(|p| p[0] == x && p[1] == y)
            .unwrap();
        word[i] = v;
        planted.entries.insert(i, v);
    }
    match decode(&code, &word) {
        Ok(res) => {
            check("plane: two errors recovered", res.error == planted);
            let line = res
                .locator
                .basis
                .iter()
                .any(|g| g.render(&code.pres.names) == "X + 6*Y + 7");
            check("plane: printed line locator", line);
        }
        Err(e) => {
            println!("FAIL plane decode: {}", e);
            failures.set(failures.get() + 1);
        }
    }

    // radius sweeps
    let herm = WorkbenchConfig::parse(hermitian_config())?.code()?;
    let t = decoding_radius(&herm.pres, herm.ell)?;
    let mut all_ok = true;
    for w in 0..=t {
        if monte_carlo_weight(&herm, w, 5, 99) != 5 {
            all_ok = false;
        }
    }
    check("hermitian: short in-radius sweep", all_ok);

    if failures.get() == 0 {
        println!("selftest: all scenarios passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("selftest: {} failures", failures.get());
        Ok(ExitCode::from(1))
    }
}
