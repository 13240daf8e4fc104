fn main() {
    std::process::exit(omegact::main_with_args(std::env::args_os()));
}
