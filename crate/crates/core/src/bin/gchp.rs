fn main() {
    std::process::exit(gchp::cli::run(std::env::args_os()));
}
