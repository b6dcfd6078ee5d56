fn main() {
    std::process::exit(pretzel_lspace::cli::run(std::env::args_os()));
}
