fn main() {
    std::process::exit(siegel_lambert::cli::main_with_args(std::env::args_os()));
}
