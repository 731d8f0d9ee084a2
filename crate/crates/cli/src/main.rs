use clap::Parser;

fn main() {
    std::process::exit(edgematch_cli::run(edgematch_cli::Cli::parse()));
}
