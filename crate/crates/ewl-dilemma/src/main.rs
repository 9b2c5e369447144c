use clap::Parser;

fn main() {
    let cli = ewl_dilemma::cli::Cli::parse();
    std::process::exit(ewl_dilemma::cli::run(cli));
}
