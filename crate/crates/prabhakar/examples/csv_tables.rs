//! The command-line layer used as a library: build a CSV table in memory.

use prabhakar::cli::run;

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        ["prabhakar", "negaxis", "--alpha", "0.7", "--gamma", "0.9", "--t-min", "5", "--t-max", "80", "--points", "5"],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    std::process::exit(code);
}
