use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which route produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Dp,
    Genfun,
    Closed,
    TwoRow,
    Dft,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Dp,
        Method::Genfun,
        Method::Closed,
        Method::TwoRow,
        Method::Dft,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Dp => "dp",
            Method::Genfun => "genfun",
            Method::Closed => "closed",
            Method::TwoRow => "tworow",
            Method::Dft => "dft",
            Method::Oracle => "oracle",
        }
    }

    /// Largest shape height the method accepts, if bounded.
    pub fn max_height(self) -> Option<usize> {
        match self {
            Method::TwoRow => Some(2),
            Method::Dft => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method `{s}`")))
    }
}
