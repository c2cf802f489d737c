use std::fmt;

pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// A failure that stops a command before it produces a report.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<fullproj::Error> for CliError {
    fn from(e: fullproj::Error) -> Self {
        CliError {
            code: if e.is_limit() {
                EXIT_LIMIT
            } else {
                EXIT_INVALID
            },
            message: e.to_string(),
        }
    }
}
