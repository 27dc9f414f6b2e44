fn main() {
    std::process::exit(bicolor::cli::dispatch(std::env::args().collect()));
}
