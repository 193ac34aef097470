fn main() {
    std::process::exit(frobweight::cli::run(
        std::env::args_os(),
        &mut std::io::stdout(),
    ));
}
