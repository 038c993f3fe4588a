use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use frobenius_euler::exactnum::{parse_rational, render_rational, ExactRational};
use frobenius_euler::fourier::fourier_coeff_exact;
use frobenius_euler::frobenius::{euler_sequence, fe_eval, fe_number_table, fe_polynomial};
use frobenius_euler::harness::{exit_status, parse_suite, render_report, run_suite, OutputFormat, SuiteConfig};
use frobenius_euler::lerch::lerch_phi;
use frobenius_euler::report::{fmt_real, Verdict};
use frobenius_euler::stirling::stirling2_table;
use frobenius_euler::Error;

#[derive(Parser)]
#[command(name = "frobenius", version, about = "Frobenius-Euler numbers, polynomials and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Print H_0(u)..H_K(u), symbolically or at a rational u.
    Numbers {
        /// A rational such as "1/2", or "symbolic".
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        u: String,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
    },
    /// Print H_K(x,u), optionally specialized in u and/or x.
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Print the Euler numbers E_n and polynomials E_n(x).
    Euler {
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Print the Stirling triangle S2(m, n).
    Stirling {
        #[arg(long = "max-m")]
        max_m: usize,
    },
    /// Print the w-basis Fourier coefficient of H_m(x,u), or its value.
    FourierCoeffs {
        #[arg(long)]
        m: usize,
        /// Frequency index (requires --u).
        #[arg(long, allow_negative_numbers = true, requires = "u")]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
    },
    /// Evaluate the Lerch transcendent Phi(z, s, a).
    Lerch {
        /// Real and imaginary parts, "RE,IM".
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Run the verification suite.
    Verify {
        /// "all" or a comma-separated list of identity ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
}

/// Exit code for bad input or configuration.
const USAGE: u8 = 2;

fn rational_arg(text: &str) -> Result<ExactRational, Error> {
    parse_rational(text).map_err(|e| e.context(format!("parsing {text:?}")))
}

fn numbers(u: &str, max_n: usize, format: TableFormat) -> Result<(), Error> {
    let table = fe_number_table(max_n);
    let u_val = if u == "symbolic" { None } else { Some(rational_arg(u)?) };
    let rows: Vec<String> = table
        .values()
        .iter()
        .map(|h| match &u_val {
            None => Ok(h.to_string()),
            Some(u) => h.eval(u).map(|v| render_rational(&v)),
        })
        .collect::<Result<_, _>>()?;
    match format {
        TableFormat::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("strings serialize")),
        TableFormat::Table => {
            for (n, r) in rows.iter().enumerate() {
                println!("H_{n} = {r}");
            }
        }
    }
    Ok(())
}

fn poly(n: usize, u: Option<&str>, x: Option<&str>) -> Result<(), Error> {
    let p = fe_polynomial(n, &fe_number_table(n))?;
    match (u.map(rational_arg).transpose()?, x.map(rational_arg).transpose()?) {
        (None, None) => println!("{p}"),
        (Some(u), None) => println!("{}", p.specialize_u(&u)?.render_in("x")),
        (None, Some(x)) => println!("{}", p.eval_x(&x)),
        (Some(u), Some(x)) => println!("{}", render_rational(&fe_eval(&p, &u, &x)?)),
    }
    Ok(())
}

fn euler(max_n: usize) -> Result<(), Error> {
    let seq = euler_sequence(max_n);
    for (n, (e, p)) in seq.numbers.iter().zip(&seq.polynomials).enumerate() {
        println!("E_{n} = {}    E_{n}(x) = {}", render_rational(e), p.render_in("x"));
    }
    Ok(())
}

fn stirling(max_m: usize) -> Result<(), Error> {
    let s2 = stirling2_table(max_m);
    for m in 0..=max_m {
        let row: Vec<String> = s2.row(m).iter().map(ToString::to_string).collect();
        println!("{}", row.join(" "));
    }
    Ok(())
}

fn fourier_coeffs(m: usize, n: Option<i64>, u: Option<&str>) -> Result<(), Error> {
    let c = fourier_coeff_exact(m, &fe_number_table(m))?;
    match (n, u.map(rational_arg).transpose()?) {
        (Some(n), Some(u)) => {
            let v = c.numeric(&u)?.eval(n);
            println!("{} + {}i", fmt_real(v.re), fmt_real(v.im));
        }
        (None, Some(u)) => {
            for (j, cj) in c.coeffs().iter().enumerate() {
                println!("c_{} = {}", j + 1, render_rational(&cj.eval(&u)?));
            }
        }
        _ => println!("{c}"),
    }
    Ok(())
}

fn lerch(z: &str, s: f64, a: f64, tol: f64) -> Result<(), Error> {
    let parts: Vec<&str> = z.split(',').collect();
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|_| Error::InvalidParameter(format!("bad number {t:?} in --z")));
    let z = match parts.as_slice() {
        [re] => Complex64::new(parse(re)?, 0.0),
        [re, im] => Complex64::new(parse(re)?, parse(im)?),
        _ => return Err(Error::InvalidParameter("--z expects RE,IM".into())),
    };
    let r = lerch_phi(z, s, a, tol)?;
    println!("value = {} + {}i", fmt_real(r.value.re), fmt_real(r.value.im));
    println!("tail_bound = {}", fmt_real(r.tail_bound));
    println!("terms_used = {}", r.terms_used);
    for note in &r.notes {
        println!("note: {note}");
    }
    Ok(())
}

fn verify(suite: &str, strict: bool, config: Option<PathBuf>, out: Option<PathBuf>, format: Option<OutputFormat>) -> ExitCode {
    let mut cfg = match config {
        None => SuiteConfig::default(),
        Some(path) => {
            let parsed = std::fs::read_to_string(&path)
                .map_err(|e| e.to_string())
                .and_then(|text| serde_json::from_str::<SuiteConfig>(&text).map_err(|e| e.to_string()));
            match parsed {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("configuration error: {}: {e}", path.display());
                    return ExitCode::from(USAGE);
                }
            }
        }
    };
    cfg.strict |= strict;
    if let Some(f) = format {
        cfg.output_format = f;
    }
    if out.is_some() {
        cfg.output_path = out;
    }
    let checks = match parse_suite(suite) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("configuration error: {e}");
            return ExitCode::from(USAGE);
        }
    };
    let reports = match run_suite(&cfg, &checks) {
        Ok(r) => r,
        Err(problems) => {
            for p in problems {
                eprintln!("configuration error: {p}");
            }
            return ExitCode::from(USAGE);
        }
    };
    let text = render_report(&reports, cfg.output_format);
    match &cfg.output_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(USAGE);
            }
        }
        None => print!("{text}"),
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    eprintln!(
        "{} checks: {} pass, {} fail, {} reported",
        reports.len(),
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::Reported)
    );
    ExitCode::from(exit_status(&reports, cfg.strict) as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Numbers { u, max_n, format } => numbers(&u, max_n, format),
        Command::Poly { n, u, x } => poly(n, u.as_deref(), x.as_deref()),
        Command::Euler { max_n } => euler(max_n),
        Command::Stirling { max_m } => stirling(max_m),
        Command::FourierCoeffs { m, n, u } => fourier_coeffs(m, n, u.as_deref()),
        Command::Lerch { z, s, a, tol } => lerch(&z, s, a, tol),
        Command::Verify { suite, strict, config, out, format } => return verify(&suite, strict, config, out, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}
