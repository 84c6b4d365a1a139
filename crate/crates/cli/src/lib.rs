//! Command-line front end for `polargrass`.
//!
//! ```text
//! polargrass info      --form FORM.json
//! polargrass verify    --form FORM.json --k 2 [--mode exhaustive|sampled] [--samples N] [--tensor X.txt]
//! polargrass enumerate --form FORM.json --k 2 [--count-only]
//! polargrass equations --form FORM.json --k 2
//! polargrass props     --field 3 --n 4 --trials 1000
//! ```
//!
//! Exit status: 0 when every check passes, 1 on a mathematical mismatch,
//! 2 on usage or configuration errors.

pub mod commands;
pub mod formfile;
pub mod report;
pub mod tensor_text;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polargrass::field::AnyField;
use polargrass::polar::{VerifyMode, DEFAULT_ENUMERATION_BUDGET};
use polargrass::tensor::DEFAULT_SIZE_CAP;

use commands::{Common, Status, VerifyArgs};
use formfile::LoadedForm;
pub use report::{Format, Report};

#[derive(Debug, Parser)]
#[command(name = "polargrass", version, about = "Tensor equations of polar Grassmannians over small fields")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,

    /// Seed for sampled runs and the identity suite.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest number of entries any intermediate tensor may hold.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FormArg {
    /// JSON form file.
    #[arg(long)]
    pub form: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a form and print its radical and Witt index.
    Info(FormArg),
    /// Compare the tensor equation with direct isotropy on k-subspaces.
    Verify {
        #[command(flatten)]
        form: FormArg,
        /// Subspace dimension.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        /// Random subspaces drawn in sampled mode.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Refuse exhaustive runs over more subspaces than this.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u128,
        /// Worker threads for exhaustive runs (0 = all cores).
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Check one alternating tensor (sparse text file) instead.
        #[arg(long, conflicts_with_all = ["mode", "k"])]
        tensor: Option<PathBuf>,
        /// Add wall-clock time to the report (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
    },
    /// List the totally isotropic k-subspaces.
    Enumerate {
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        k: usize,
        /// Print only the number of subspaces.
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u128,
    },
    /// Print the Grassmann–Plücker relations and the expanded tensor equation.
    Equations {
        #[command(flatten)]
        form: FormArg,
        #[arg(long)]
        k: usize,
    },
    /// Run the randomized product-identity suite.
    Props {
        /// `p`, `p^2`, `p^2:frobenius` or `Q`.
        #[arg(long, default_value = "3")]
        field: String,
        /// Ambient dimension, at most 4.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Random instances per identity.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

macro_rules! on_form {
    ($loaded:expr, $f:ident => $body:expr) => {
        match $loaded {
            LoadedForm::Finite($f) => $body,
            LoadedForm::Rational($f) => $body,
        }
    };
}

fn dispatch(cli: &Cli) -> commands::CmdResult {
    let common = Common { seed: cli.seed, cap: cli.cap };
    match &cli.command {
        Command::Info(f) => {
            let loaded = formfile::load_form(&f.form)?;
            on_form!(&loaded, form => commands::info(form, &common))
        }
        Command::Verify { form, k, mode, samples, budget, threads, tensor, timing } => {
            let loaded = formfile::load_form(&form.form)?;
            if let Some(path) = tensor {
                let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                return on_form!(&loaded, form => {
                    let x = tensor_text::parse_tensor(*form.field(), &text)?;
                    commands::verify_tensor(form, &x, &common)
                });
            }
            let k = k.ok_or("verify needs --k or --tensor")?;
            let mode = match mode {
                ModeArg::Exhaustive => VerifyMode::Exhaustive,
                ModeArg::Sampled => VerifyMode::Sampled { samples: *samples },
            };
            let args = VerifyArgs { k, mode, budget: *budget, threads: *threads, timing: *timing };
            on_form!(&loaded, form => commands::verify(form, &args, &common))
        }
        Command::Enumerate { form, k, count_only, budget } => {
            let loaded = formfile::load_form(&form.form)?;
            on_form!(&loaded, form => commands::enumerate(form, *k, *budget, *count_only, &common))
        }
        Command::Equations { form, k } => {
            let loaded = formfile::load_form(&form.form)?;
            on_form!(&loaded, form => commands::equations(form, *k, &common))
        }
        Command::Props { field, n, trials, inject_fault } => {
            let spec = formfile::parse_field_arg(field)?;
            match AnyField::new(&spec).map_err(|e| e.to_string())? {
                AnyField::Finite(f) => commands::props(f, *n, *trials, *inject_fault, cli.seed),
                AnyField::Rational(q) => commands::props(q, *n, *trials, *inject_fault, cli.seed),
            }
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Execution { code, stdout: text, stderr: String::new() }
            } else {
                Execution { code: Status::Config as i32, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok((report, status)) => Execution { code: status as i32, stdout: report.render(cli.format), stderr: String::new() },
        Err(msg) => Execution { code: Status::Config as i32, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}
