use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Returns true if `s` is a nonempty run of ASCII alphanumerics and underscores.
pub fn is_valid_token(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

macro_rules! token_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(Arc<str>);

        impl $name {
            pub fn new(token: &str) -> Result<Self> {
                if is_valid_token(token) {
                    Ok(Self(Arc::from(token)))
                } else {
                    Err(Error::InvalidToken(token.to_string()))
                }
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl std::str::FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                Self::new(s)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), self.0)
            }
        }
    };
}

token_type!(
    /// Vertex identifier.
    VertexId
);
token_type!(
    /// Edge identifier.
    EdgeId
);
token_type!(
    /// Edge label. Labels are also the atoms of queries.
    Label
);

impl From<&EdgeId> for Label {
    /// Edge tokens double as labels in characteristic databases.
    fn from(e: &EdgeId) -> Self {
        Label(e.0.clone())
    }
}

/// Shorthand constructors for tests, examples and fixtures. They panic on
/// invalid tokens.
pub fn v(token: &str) -> VertexId {
    VertexId::new(token).expect("valid vertex token")
}

pub fn e(token: &str) -> EdgeId {
    EdgeId::new(token).expect("valid edge token")
}

pub fn l(token: &str) -> Label {
    Label::new(token).expect("valid label token")
}
