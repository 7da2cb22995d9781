fn main() {
    std::process::exit(hopf::cli::main_with_args(std::env::args_os()));
}
