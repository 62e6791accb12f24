fn main() {
    std::process::exit(combospec::cli::run(std::env::args_os()));
}
