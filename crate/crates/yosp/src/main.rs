use clap::Parser;

fn main() {
    let cli = yosp::cli::Cli::parse();
    std::process::exit(yosp::cli::run(&cli));
}
