fn main() {
    std::process::exit(spechtcoh::cli::main_with_args(std::env::args_os()));
}
