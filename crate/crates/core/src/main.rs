fn main() {
    std::process::exit(hopfcross::cli::run());
}
