use std::fmt;

use super::RepError;

/// Root system type of `Spin(n)`: `B_k` for odd `n = 2k+1`, `D_k` for even
/// `n = 2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    B,
    D,
}

/// The group `Spin(n)`. Rank and type are derived from `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    n: usize,
}

impl GroupId {
    pub fn new(n: usize) -> Result<Self, RepError> {
        if n < 2 {
            return Err(RepError::OutOfRange(format!("Spin({n}) needs n >= 2")));
        }
        Ok(Self { n })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn rank(self) -> usize {
        self.n / 2
    }

    pub fn kind(self) -> Kind {
        if self.n % 2 == 1 {
            Kind::B
        } else {
            Kind::D
        }
    }

    pub fn is_odd(self) -> bool {
        self.kind() == Kind::B
    }

    /// `Spin(n+1)`.
    pub fn up(self) -> Self {
        Self { n: self.n + 1 }
    }

    /// `Spin(n−1)`, if that is still a valid group.
    pub fn down(self) -> Result<Self, RepError> {
        Self::new(self.n - 1)
    }

    /// `dim S = 2^⌊n/2⌋`, counting both half-spin pieces in even dimension.
    pub fn spinor_dim(self) -> u64 {
        1 << self.rank()
    }

    /// Half the sum of positive roots, doubled: `(2k−1, 2k−3, …, 1)` for
    /// `B_k`, `(2k−2, …, 2, 0)` for `D_k`.
    pub fn rho_doubled(self) -> Vec<i64> {
        let k = self.rank() as i64;
        (0..k)
            .map(|i| match self.kind() {
                Kind::B => 2 * (k - i) - 1,
                Kind::D => 2 * (k - 1 - i),
            })
            .collect()
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spin({})", self.n)
    }
}
