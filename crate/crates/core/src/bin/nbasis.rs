use clap::Parser;

fn main() {
    std::process::exit(nbasis::cli::run(nbasis::cli::Cli::parse()));
}
