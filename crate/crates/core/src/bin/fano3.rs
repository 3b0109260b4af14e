use std::io;

fn main() {
    let code = fano3::cli::run(std::env::args_os(), std::env::var(fano3::cli::SEED_ENV).ok(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
