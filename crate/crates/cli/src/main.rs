use clap::{Args, Parser, Subcommand};
use oscbath::stieltjes::{ComplexValue, JMethod};
use oscbath_cli::config::{ModelKind, SweepSettings};
use oscbath_cli::{jfun_report, parse_config, parse_method_list, render, run_sweep, zero_point_report, CliError};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "oscbath", version, about = "Thermodynamics of a quantum oscillator in a heat bath")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate F, S, U, C over a temperature grid
    Sweep(SweepArgs),
    /// Evaluate the Stieltjes J-function at a complex point
    #[command(allow_negative_numbers = true)]
    Jfun(JfunArgs),
    /// Zero-point energy of a bath model
    Zeropoint(ModelArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// ohmic, srt or qed
    #[arg(long)]
    model: Option<String>,
    /// Damping rate in units of omega0
    #[arg(long)]
    gamma: Option<f64>,
    /// Relaxation time times omega0
    #[arg(long)]
    tau: Option<f64>,
    /// QED cutoff Omega' in units of omega0
    #[arg(long)]
    omega_prime: Option<f64>,
    /// QED large-cutoff limit (Omega' -> infinity)
    #[arg(long)]
    large_cutoff: bool,
    /// key = value settings file; flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long)]
    theta_min: Option<f64>,
    #[arg(long)]
    theta_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// Logarithmic temperature spacing
    #[arg(long)]
    log: bool,
    /// Comma-separated: exact_j, exact_quadrature, low_T_series, high_T_series
    #[arg(long)]
    method: Option<String>,
    /// csv or json
    #[arg(long)]
    format: Option<String>,
    /// reduced or si
    #[arg(long)]
    units: Option<String>,
    /// Oscillator frequency f0 = omega0/2pi in Hz (si units)
    #[arg(long)]
    omega0_hz: Option<f64>,
    /// Order of the series methods
    #[arg(long)]
    terms: Option<usize>,
}

#[derive(Args)]
struct JfunArgs {
    /// Real part, or a complex literal such as 1+2i
    #[arg(allow_hyphen_values = true)]
    re: String,
    /// Imaginary part
    im: Option<f64>,
    /// quadrature, loggamma, lanczos, series, asymptotic or auto
    #[arg(long, default_value = "auto")]
    method: String,
    /// Number of series terms
    #[arg(long)]
    terms: Option<usize>,
}

fn config_error<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Config(e.to_string())
}

fn settings(model: &ModelArgs) -> Result<SweepSettings, CliError> {
    let file = match &model.config {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            parse_config(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
        }
        None => SweepSettings::default(),
    };
    let flags = SweepSettings {
        model: model.model.as_deref().map(str::parse::<ModelKind>).transpose().map_err(config_error)?,
        gamma: model.gamma,
        tau: model.tau,
        omega_prime: model.omega_prime,
        large_cutoff: model.large_cutoff.then_some(true),
        ..Default::default()
    };
    Ok(file.merge(flags))
}

fn sweep(args: &SweepArgs) -> Result<(), CliError> {
    let flags = SweepSettings {
        theta_min: args.theta_min,
        theta_max: args.theta_max,
        points: args.points,
        log: args.log.then_some(true),
        methods: args.method.as_deref().map(parse_method_list).transpose().map_err(config_error)?,
        format: args.format.as_deref().map(str::parse).transpose().map_err(config_error)?,
        units: args.units.as_deref().map(str::parse).transpose().map_err(config_error)?,
        omega0_hz: args.omega0_hz,
        terms: args.terms,
        ..Default::default()
    };
    let config = settings(&args.model)?.merge(flags).build()?;
    let output = run_sweep(&config)?;
    for w in &output.warnings {
        eprintln!("warning: {w}");
    }
    print!("{}", render(&config, &output));
    Ok(())
}

fn jfun(args: &JfunArgs) -> Result<(), CliError> {
    let z: ComplexValue = match args.im {
        Some(im) => {
            let re: f64 =
                args.re.trim().parse().map_err(|_| CliError::Config(format!("bad real part '{}'", args.re)))?;
            ComplexValue::new(re, im).map_err(CliError::from)?
        }
        None => args.re.parse().map_err(CliError::from)?,
    };
    let method: JMethod = args.method.parse().map_err(CliError::from)?;
    print!("{}", jfun_report(z, method, args.terms)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sweep(args) => sweep(args),
        Command::Jfun(args) => jfun(args),
        Command::Zeropoint(args) => settings(args).and_then(|s| zero_point_report(&s)).map(|r| print!("{r}")),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
