fn main() {
    std::process::exit(realforms::cli::run(std::env::args_os()));
}
