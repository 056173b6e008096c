use acta_core::act::ActError;
use acta_core::classify::ClassifyError;
use acta_core::flatness::FlatnessError;
use acta_core::io::IoError;
use acta_core::MonoidError;

/// Process exit codes.
pub const EXIT_IO: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_INCONSISTENT: u8 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] IoError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Act(#[from] ActError),
    #[error(transparent)]
    Flatness(#[from] FlatnessError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {message}")]
    Output { path: String, message: String },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

fn monoid_code(e: &MonoidError) -> u8 {
    match e {
        MonoidError::OrderExceedsCap { .. } | MonoidError::Interrupted(_) => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

fn act_code(e: &ActError) -> u8 {
    match e {
        ActError::Monoid(m) => monoid_code(m),
        _ => EXIT_INVALID,
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(IoError::File { .. }) | CliError::Output { .. } => EXIT_IO,
            CliError::Input(IoError::TooLarge { .. }) => EXIT_CAP,
            CliError::Input(IoError::Monoid(m)) | CliError::Monoid(m) => monoid_code(m),
            CliError::Input(IoError::Act(a)) | CliError::Act(a) => act_code(a),
            CliError::Input(_) | CliError::Usage(_) => EXIT_INVALID,
            CliError::Flatness(f) => flatness_code(f),
            CliError::Classify(c) => match c {
                ClassifyError::Monoid(m) => monoid_code(m),
                ClassifyError::Act(a) => act_code(a),
                ClassifyError::Flatness(f) => flatness_code(f),
                ClassifyError::ConsistencyFailure(_) | ClassifyError::InjectionFailure(_) => {
                    EXIT_INCONSISTENT
                }
                ClassifyError::NotIdempotent(_)
                | ClassifyError::IdentityIdempotent
                | ClassifyError::NoCover { .. } => EXIT_INCONSISTENT,
            },
            CliError::Inconsistent(_) => EXIT_INCONSISTENT,
        }
    }
}

fn flatness_code(e: &FlatnessError) -> u8 {
    match e {
        FlatnessError::Act(a) => act_code(a),
        FlatnessError::ZeroBound => EXIT_INVALID,
        FlatnessError::BoundTooLargeForBudget { .. } => EXIT_CAP,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_error_class_has_its_code() {
        let file = IoError::File {
            path: "x".into(),
            message: "gone".into(),
        };
        assert_eq!(CliError::Input(file).exit_code(), EXIT_IO);
        let out = CliError::Output {
            path: "x".into(),
            message: "denied".into(),
        };
        assert_eq!(out.exit_code(), EXIT_IO);
        assert_eq!(CliError::Usage("bad".into()).exit_code(), EXIT_INVALID);
        assert_eq!(
            CliError::Flatness(FlatnessError::ZeroBound).exit_code(),
            EXIT_INVALID
        );
        assert_eq!(
            CliError::Input(IoError::Act(ActError::MonoidMismatch)).exit_code(),
            EXIT_INVALID
        );
        assert_eq!(
            CliError::Input(IoError::TooLarge { cap: 1 }).exit_code(),
            EXIT_CAP
        );
        assert_eq!(
            CliError::Classify(ClassifyError::ConsistencyFailure("x".into())).exit_code(),
            EXIT_INCONSISTENT
        );
        assert_eq!(
            CliError::Classify(ClassifyError::InjectionFailure("x".into())).exit_code(),
            EXIT_INCONSISTENT
        );
        assert_eq!(
            CliError::Inconsistent("x".into()).exit_code(),
            EXIT_INCONSISTENT
        );
    }
}
