use clap::Parser;
use wulff_towers::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("wulff-towers: {e}");
        std::process::exit(e.exit_code());
    }
}
