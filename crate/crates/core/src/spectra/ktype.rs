use std::fmt;

use crate::rep::{GroupId, RepError, Weight};

use super::SpectraError;

/// Which family of `Spin(n+1)` K-types an eigenspace sits in: `A` has
/// `j−1` entries `3/2` after the level entry, `B` has `j`. The Dirac K-types
/// are the `B` family at `j = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KTypeLabel {
    pub branch: Branch,
    pub j: usize,
    pub l: usize,
    /// Sign of the last entry; only present for odd `n`, where the two
    /// K-types `(…, ±x)` are distinct.
    pub sign: Option<Sign>,
    pub weight: Weight,
}

impl KTypeLabel {
    /// `((2l+1)/2, 3/2 × c, 1/2, …)` over `Spin(n+1)` with `c = j` for `B`
    /// and `c = j−1` for `A`; for odd `n` the last entry carries `sign`.
    pub fn new(n: usize, branch: Branch, j: usize, l: usize, sign: Sign) -> Result<Self, SpectraError> {
        let k_group = GroupId::new(n + 1)?;
        let rank = k_group.rank();
        let threes = match branch {
            Branch::B => j,
            Branch::A if j >= 1 => j - 1,
            Branch::A => {
                return Err(SpectraError::OutOfRange(
                    "A-type K-types need j >= 1".into(),
                ))
            }
        };
        if threes + 1 > rank {
            return Err(SpectraError::OutOfRange(format!(
                "j = {j} leaves no room in a {k_group} weight"
            )));
        }
        let mut doubled = vec![1i64; rank];
        doubled[0] = 2 * l as i64 + 1;
        for d in doubled.iter_mut().skip(1).take(threes) {
            *d = 3;
        }
        let odd = n % 2 == 1;
        if odd {
            doubled[rank - 1] *= sign.factor();
        }
        let weight = Weight::from_doubled(k_group, &doubled)?;
        weight.require_dominant().map_err(SpectraError::from)?;
        Ok(Self {
            branch,
            j,
            l,
            sign: odd.then_some(sign),
            weight,
        })
    }
}

impl From<RepError> for SpectraError {
    fn from(e: RepError) -> Self {
        SpectraError::Rep(e)
    }
}
