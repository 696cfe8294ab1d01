fn main() {
    std::process::exit(ito_fourier::cli::run_cli(std::env::args_os()));
}
