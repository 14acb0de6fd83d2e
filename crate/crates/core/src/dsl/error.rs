use thiserror::Error;

use super::ast::{Kind, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NameProblem {
    Undefined,
    Redefined { previous: Span },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{span}: syntax error: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        span: Span,
        expected: Vec<String>,
        found: String,
    },
    #[error("{span}: {}", describe_name(name, problem))]
    Name {
        span: Span,
        name: String,
        problem: NameProblem,
    },
    #[error("{span}: type error: expected a {expected}, found a {found}")]
    Kind { span: Span, expected: Kind, found: Kind },
}

fn describe_name(name: &str, problem: &NameProblem) -> String {
    match problem {
        NameProblem::Undefined => format!("name error: `{name}` is not defined"),
        NameProblem::Redefined { previous } => {
            format!("name error: `{name}` is already defined at {previous}")
        }
    }
}

impl ParseError {
    pub fn span(&self) -> Span {
        match self {
            ParseError::Syntax { span, .. } | ParseError::Name { span, .. } | ParseError::Kind { span, .. } => *span,
        }
    }
}
