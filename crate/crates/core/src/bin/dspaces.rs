fn main() {
    std::process::exit(dirichlet_spaces::cli::main_with_args(std::env::args_os()));
}
