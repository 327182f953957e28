fn main() -> std::process::ExitCode {
    binlrc::cli::main_entry()
}
