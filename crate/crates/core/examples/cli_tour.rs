//! Drive the command layer in-process, in both output modes.

use schubert::cli::{format_output, run_command, OutputMode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let commands: [&[&str]; 4] = [
        &["gr", "product", "--k", "2", "--n", "4", "--classes", "1,1,1,1"],
        &["flag", "schubpoly", "--perm", "1432"],
        &["sym", "lr", "--lambda", "[2,1]", "--mu", "[1]", "--output", "json"],
        &["gz", "demazure", "--perm", "132", "--lambda", "(0,1,2)", "--dim"],
    ];
    for argv in commands {
        let result = run_command(argv);
        if !result.is_success() {
            return Err(result.message.unwrap_or_default().into());
        }
        let mode: OutputMode = result.mode;
        println!("$ {}\n{}", argv.join(" "), String::from_utf8(format_output(&result, mode))?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
