fn main() {
    std::process::exit(perchopt::cli::parse_and_dispatch(std::env::args_os()));
}
