fn main() {
    std::process::exit(tensym_cli::run(std::env::args_os()));
}
