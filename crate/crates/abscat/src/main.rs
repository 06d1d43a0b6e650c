fn main() {
    std::process::exit(abscat::cli::run(std::env::args_os()));
}
