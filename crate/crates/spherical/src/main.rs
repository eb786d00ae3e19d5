use std::io::{stderr, stdin, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = spherical::run(std::env::args_os(), &mut stdin().lock(), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(code as u8)
}
