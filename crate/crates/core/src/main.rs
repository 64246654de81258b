fn main() -> std::process::ExitCode {
    steinerforge::cli::main()
}
