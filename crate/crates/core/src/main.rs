fn main() {
    std::process::exit(wreathlab::cli::run());
}
