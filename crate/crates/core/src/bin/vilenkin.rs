fn main() {
    std::process::exit(vilenkin::cli::main_with_args(std::env::args_os()));
}
