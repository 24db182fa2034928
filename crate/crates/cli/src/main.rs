fn main() {
    std::process::exit(hbn_cli::run(std::env::args_os()));
}
