fn main() -> std::process::ExitCode {
    polyplateau::cli::main()
}
