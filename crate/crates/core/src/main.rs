fn main() -> std::process::ExitCode {
    axial_core::cli::main()
}
