fn main() {
    std::process::exit(p2q2::cli::run(std::env::args_os()));
}
