fn main() {
    std::process::exit(bracerep::cli::run(std::env::args()));
}
