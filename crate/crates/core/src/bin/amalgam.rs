fn main() {
    std::process::exit(amalgams::cli::main_with(std::env::args_os()));
}
