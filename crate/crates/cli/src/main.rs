use clap::Parser;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    // Help and version requests print clap's own text.
    if let Err(e) = schlafli_cli::Cli::try_parse_from(&args) {
        if matches!(
            e.kind(),
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
        ) {
            e.exit();
        }
    }
    let (report, format) = schlafli_cli::run(args);
    print!("{}", schlafli_cli::emit(&report, format));
    std::process::exit(report.outcome.exit_code());
}
