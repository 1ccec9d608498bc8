fn main() {
    std::process::exit(quasifs::cli::run_args());
}
