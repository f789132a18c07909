use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use cid_harness::cli::main_with;

fn main() -> ExitCode {
    let mut out = BufWriter::new(io::stdout());
    let status = main_with(std::env::args_os(), &mut io::stdin(), &mut out, &mut io::stderr());
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(status as u8)
}
