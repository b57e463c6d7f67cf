use std::io::Write;
use std::process::ExitCode;

use schubert::cli::{format_output, run_command};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let result = run_command(&args);
    let bytes = format_output(&result, result.mode);
    if result.payload.is_some() || result.is_success() {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(&bytes);
        let _ = out.write_all(b"\n");
    } else {
        let mut err = std::io::stderr().lock();
        let _ = err.write_all(&bytes);
        if !bytes.ends_with(b"\n") {
            let _ = err.write_all(b"\n");
        }
    }
    ExitCode::from(result.status as u8)
}
