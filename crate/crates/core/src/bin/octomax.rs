fn main() {
    std::process::exit(octomax::cli::main_from_env());
}
