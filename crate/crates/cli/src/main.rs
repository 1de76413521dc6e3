use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let inv = sqmat_cli::run(std::env::args_os());
    let mut out = std::io::stdout().lock();
    if out
        .write_all(inv.stdout.as_bytes())
        .and_then(|()| out.flush())
        .is_err()
    {
        return ExitCode::from(6);
    }
    eprint!("{}", inv.stderr);
    ExitCode::from(inv.code as u8)
}
