//! Command-line front end for the deformed-oscillator library.
//!
//! Exit codes: 0 on success, 2 on a domain or usage error, 3 when a
//! requested verification fails. Data rows go to stdout (or --out);
//! the wall-time footer goes to stderr so output files stay
//! byte-identical across runs.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use defosc::harness::{
    self, eval_point_1d, eval_point_dd, eval_radialwf, eval_states1d, render, run_sweep, Mode,
    OutFormat, SweepLines, SweepSpec,
};
use defosc::Error;

#[derive(Parser)]
#[command(
    name = "defosc",
    version,
    about = "Spectra and eigenstates of deformed-commutator oscillators"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Jsonl,
    Csv,
}

impl FormatArg {
    fn to_format(self) -> OutFormat {
        match self {
            FormatArg::Jsonl => OutFormat::Jsonl,
            FormatArg::Csv => OutFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    General,
    Alpha0,
    Beta0,
    Equal,
}

impl ModeArg {
    fn to_mode(self) -> Mode {
        match self {
            ModeArg::General => Mode::General,
            ModeArg::Alpha0 => Mode::Alpha0,
            ModeArg::Beta0 => Mode::Beta0,
            ModeArg::Equal => Mode::Equal,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format: jsonl (canonical) or csv (projection)
    #[arg(long, value_enum, default_value = "jsonl")]
    format: FormatArg,
    /// Write rows to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Energy levels of the 1-D oscillator in a uniform field
    Spectrum1d {
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        #[arg(long, default_value_t = 0.0)]
        efield: f64,
        /// Evaluation branch; inferred from the parameters when omitted
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Number of levels (records n = 0 .. levels-1)
        #[arg(long, default_value_t = 10)]
        levels: u32,
        /// Check each level against the brute-force oracle
        #[arg(long)]
        verify: bool,
        /// Verification tolerance
        #[arg(long, default_value_t = 1.0e-7)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bargmann-representation eigenstate of the 1-D oscillator
    States1d {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 0.0)]
        efield: f64,
        /// Level index
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Fock-space truncation of the coefficient vector
        #[arg(long, default_value_t = 64)]
        mcap: usize,
        /// Compare the polynomial prefactor with its closed form (n <= 3)
        #[arg(long)]
        check_closed_form: bool,
        /// Measure the eigenvector residual against the oracle Hamiltonian
        #[arg(long)]
        verify_eigen: bool,
        /// Residual tolerance for --verify-eigen
        #[arg(long, default_value_t = 1.0e-8)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Energy levels of the D-dimensional oscillator with minimal length
    Spectrumdd {
        #[arg(long, default_value_t = 3)]
        dim: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 0.0)]
        betap: f64,
        /// Records n = 0 ..= nmax at the given l
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        /// Check each level against the Sturm-Liouville oracle
        #[arg(long)]
        verify: bool,
        /// Verification tolerance
        #[arg(long, default_value_t = 1.0e-6)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sampled radial wavefunction (P, chi, R) table
    Radialwf {
        #[arg(long, default_value_t = 3)]
        dim: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 0.0)]
        betap: f64,
        /// Measure-weight exponent entering R (chi is weight-free)
        #[arg(long, default_value_t = 0.0)]
        gamma_weight: f64,
        /// Upper end of the sampled momentum interval
        #[arg(long, default_value_t = 10.0)]
        pmax: f64,
        /// Number of sample points, endpoints included
        #[arg(long, default_value_t = 101)]
        samples: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Grid evaluation driven by a JSON spec file
    Sweep {
        /// Path to the sweep specification (JSON)
        #[arg(long)]
        spec: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the full closed-form-versus-oracle battery
    VerifyAll,
}

fn emit(lines: &[String], out: &Option<PathBuf>) -> std::io::Result<()> {
    let mut body = lines.join("\n");
    body.push('\n');
    match out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn run(cmd: &Cmd) -> Result<(Vec<String>, Option<PathBuf>, usize), Error> {
    match cmd {
        Cmd::Spectrum1d {
            alpha,
            beta,
            efield,
            mode,
            levels,
            verify,
            tol,
            output,
        } => {
            if *levels == 0 {
                return Err(Error::Domain("need at least one level".into()));
            }
            let out = eval_point_1d(
                mode.map(ModeArg::to_mode),
                *alpha,
                *beta,
                *efield,
                *levels,
                *verify,
                *tol,
            )?;
            Ok((
                render(&out.records, output.format.to_format()),
                output.out.clone(),
                out.failures,
            ))
        }
        Cmd::States1d {
            alpha,
            beta,
            efield,
            n,
            mcap,
            check_closed_form,
            verify_eigen,
            tol,
            output,
        } => {
            let mcap = (*mcap).max(2 * *n as usize + 30);
            let out = eval_states1d(
                *alpha,
                *beta,
                *efield,
                *n,
                mcap,
                *check_closed_form,
                *verify_eigen,
                *tol,
            )?;
            Ok((
                render(&out.records, output.format.to_format()),
                output.out.clone(),
                out.failures,
            ))
        }
        Cmd::Spectrumdd {
            dim,
            l,
            beta,
            betap,
            nmax,
            verify,
            tol,
            output,
        } => {
            let out = eval_point_dd(*dim, *l, *beta, *betap, *nmax, *verify, *tol)?;
            Ok((
                render(&out.records, output.format.to_format()),
                output.out.clone(),
                out.failures,
            ))
        }
        Cmd::Radialwf {
            dim,
            l,
            n,
            beta,
            betap,
            gamma_weight,
            pmax,
            samples,
            output,
        } => {
            let records = eval_radialwf(*dim, *l, *n, *beta, *betap, *gamma_weight, *pmax, *samples)?;
            Ok((
                render(&records, output.format.to_format()),
                output.out.clone(),
                0,
            ))
        }
        Cmd::Sweep { spec, output } => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", spec.display())))?;
            let spec: SweepSpec = serde_json::from_str(&text)
                .map_err(|e| Error::Domain(format!("bad sweep spec: {e}")))?;
            let out = run_sweep(&spec)?;
            let lines = match &out.lines {
                SweepLines::OneD(records) => render(records, output.format.to_format()),
                SweepLines::Radial(records) => render(records, output.format.to_format()),
            };
            Ok((lines, output.out.clone(), out.failures))
        }
        Cmd::VerifyAll => {
            let (lines, failures) = harness::verify_all();
            Ok((lines, None, failures))
        }
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cli = Cli::parse();
    let code = match run(&cli.cmd) {
        Ok((lines, out, failures)) => {
            if let Err(e) = emit(&lines, &out) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if failures > 0 {
                eprintln!("# verification failed for {failures} row(s)");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    };
    eprintln!("# wall_time_ms {}", started.elapsed().as_millis());
    code
}
