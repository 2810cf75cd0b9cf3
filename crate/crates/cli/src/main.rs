use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let caps = std::env::var(cranklab_cli::CAPS_ENV).ok();
    let code = cranklab_cli::run(
        std::env::args_os(),
        caps.as_deref(),
        &mut io::stdout(),
        &mut io::stderr(),
    );
    ExitCode::from(code as u8)
}
