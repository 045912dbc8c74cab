use clap::Parser;

fn main() {
    let cli = lionman::cli::Cli::parse();
    let code = lionman::cli::run(cli, &mut std::io::stdout().lock());
    std::process::exit(code);
}
