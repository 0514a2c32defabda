fn main() {
    std::process::exit(spectral_bounds::cli::run(std::env::args_os()));
}
