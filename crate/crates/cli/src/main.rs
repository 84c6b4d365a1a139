use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let ex = polargrass_cli::run(std::env::args_os());
    std::io::stdout().write_all(ex.stdout.as_bytes()).ok();
    std::io::stderr().write_all(ex.stderr.as_bytes()).ok();
    ExitCode::from(ex.code as u8)
}
