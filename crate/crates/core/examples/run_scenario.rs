//! Runs a bundled scenario through the library API, the way the `waveop`
//! binary does.
//!
//! cargo run --example run_scenario -- [scenario-name-or-file] [out-dir]

use waveop::scenario::{check_invariants, RunOptions};

fn main() -> waveop::Result<()> {
    let mut args = std::env::args().skip(1);
    let scenario = args.next().unwrap_or_else(|| "two-level-general".into());
    let out = args.next().map_or_else(std::env::temp_dir, Into::into);
    let opts = RunOptions {
        out_dir: Some(out),
        fuzz: 10,
        ..Default::default()
    };
    let report = check_invariants(&scenario, &opts)?;
    print!("{}", report.summary());
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
