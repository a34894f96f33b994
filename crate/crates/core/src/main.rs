fn main() {
    std::process::exit(walsh_forge::cli::run(std::env::args_os()));
}
