use std::io::IsTerminal;

fn main() {
    let color = std::io::stdout().is_terminal()
        && std::env::var("CMIKIT_COLOR").map_or(true, |v| v != "0");
    let code = cmikit::cli::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        color,
    );
    std::process::exit(code);
}
