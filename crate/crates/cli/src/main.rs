fn main() {
    std::process::exit(whn::run(std::env::args_os()));
}
