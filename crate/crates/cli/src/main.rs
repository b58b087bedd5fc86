use clap::Parser;
use quiver_walls_cli::app::{run, Args};

fn main() {
    std::process::exit(run(&Args::parse()));
}
