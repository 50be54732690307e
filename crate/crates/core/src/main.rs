fn main() -> std::process::ExitCode {
    udg_maxcut::cli::main()
}
