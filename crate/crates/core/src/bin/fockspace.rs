fn main() {
    std::process::exit(fockspace::cli::main_with(std::env::args_os()));
}
