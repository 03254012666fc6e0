use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let result = permion::cli::run(&argv);
    if !result.output.is_empty() {
        let mut stdout = std::io::stdout().lock();
        let _ = writeln!(stdout, "{}", result.output.trim_end_matches('\n'));
    }
    if let Some(diagnostic) = result.diagnostic {
        let mut stderr = std::io::stderr().lock();
        let _ = writeln!(stderr, "{}", diagnostic.trim_end_matches('\n'));
    }
    std::process::exit(result.status.exit_code());
}
