fn main() {
    std::process::exit(rbsep::cli::run(std::env::args_os()));
}
