fn main() {
    std::process::exit(nefcone::cli::run(std::env::args_os()));
}
