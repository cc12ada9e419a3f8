use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use varinterp_cli::{run_text, CliError, Command, Mode, Options, OrderArg, EXIT_USAGE};

/// Exact interpolation on algebraic varieties.
#[derive(Parser, Debug)]
#[command(name = "varinterp", version, about)]
struct Args {
    /// Subcommand to run.
    #[arg(value_enum)]
    command: Command,
    /// Problem file, or `-` for standard input.
    file: PathBuf,
    /// Interpolation solver; overrides the file's `mode` line.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Print cofactor certificates.
    #[arg(long)]
    certificate: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Monomial order for `groebner`.
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    let options = Options { certificate: args.certificate, json: args.json, order: args.order, mode: args.mode };
    let result = read_input(&args.file).and_then(|text| run_text(args.command, &text, &options));
    match result {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
