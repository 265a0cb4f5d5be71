fn main() {
    std::process::exit(clique_isolation::cli::run(std::env::args_os()));
}
