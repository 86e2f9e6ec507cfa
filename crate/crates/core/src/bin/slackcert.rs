fn main() {
    std::process::exit(slackcert::cli::run(std::env::args_os()));
}
