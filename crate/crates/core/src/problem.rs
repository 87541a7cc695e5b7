use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The decision problems about fixed points and result functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    ExistsFixpoint,
    ExistsAttractor,
    /// Existence of a fixed point that is not an attractor.
    ExistsFixge,
    GivenStateAttractor,
    CommonFixpoint,
    CommonAttractor,
    CommonFixge,
    ShareAllFixpoints,
    ShareAllAttractors,
    ShareAllFixge,
    ResEq,
}

impl Problem {
    pub const ALL: [Problem; 11] = [
        Problem::ExistsFixpoint,
        Problem::ExistsAttractor,
        Problem::ExistsFixge,
        Problem::GivenStateAttractor,
        Problem::CommonFixpoint,
        Problem::CommonAttractor,
        Problem::CommonFixge,
        Problem::ShareAllFixpoints,
        Problem::ShareAllAttractors,
        Problem::ShareAllFixge,
        Problem::ResEq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::ExistsFixpoint => "exists-fixpoint",
            Problem::ExistsAttractor => "exists-attractor",
            Problem::ExistsFixge => "exists-fixge",
            Problem::GivenStateAttractor => "given-state-attractor",
            Problem::CommonFixpoint => "common-fixpoint",
            Problem::CommonAttractor => "common-attractor",
            Problem::CommonFixge => "common-fixge",
            Problem::ShareAllFixpoints => "share-all-fixpoints",
            Problem::ShareAllAttractors => "share-all-attractors",
            Problem::ShareAllFixge => "share-all-fixge",
            Problem::ResEq => "res-eq",
        }
    }

    /// Problems over a pair of systems with a common background set.
    pub fn is_pair(self) -> bool {
        matches!(
            self,
            Problem::CommonFixpoint
                | Problem::CommonAttractor
                | Problem::CommonFixge
                | Problem::ShareAllFixpoints
                | Problem::ShareAllAttractors
                | Problem::ShareAllFixge
                | Problem::ResEq
        )
    }

    /// Universally quantified problems: a NO answer comes with a counterexample
    /// rather than a YES answer with a witness.
    pub fn is_universal(self) -> bool {
        matches!(
            self,
            Problem::ShareAllFixpoints
                | Problem::ShareAllAttractors
                | Problem::ShareAllFixge
                | Problem::ResEq
        )
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown problem `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in Problem::ALL {
            assert_eq!(p.name().parse::<Problem>().unwrap(), p);
        }
        assert!("fixpoints".parse::<Problem>().is_err());
    }
}
