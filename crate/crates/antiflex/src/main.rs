use clap::Parser;

fn main() {
    let cli = antiflex::cli::Cli::parse();
    let outcome = antiflex::cli::run(cli);
    print!("{}", outcome.stdout);
    std::process::exit(outcome.code);
}
