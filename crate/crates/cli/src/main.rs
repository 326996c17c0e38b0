use clap::Parser;

fn main() {
    let cli = affrig::Cli::parse();
    let level = if cli.global.quiet { "error" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    std::process::exit(affrig::run(cli));
}
