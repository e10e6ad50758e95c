fn main() {
    std::process::exit(zetalike::cli::run(std::env::args_os()));
}
