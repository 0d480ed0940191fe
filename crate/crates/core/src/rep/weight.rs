use std::fmt;

use crate::exact::HalfInt;

use super::{GroupId, Kind, RepError};

/// A weight of `Spin(n)` in the orthonormal `eᵢ` basis.
///
/// Entries are all integers or all strict half-integers; the length equals
/// the rank. Dominance is not a construction invariant, since reflected
/// intermediate weights are useful, and is checked by the operations that
/// need it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    group: GroupId,
    entries: Vec<HalfInt>,
}

impl Weight {
    pub fn new(group: GroupId, entries: Vec<HalfInt>) -> Result<Self, RepError> {
        if entries.len() != group.rank() {
            return Err(RepError::Shape(format!(
                "{group} weights have {} entries, got {}",
                group.rank(),
                entries.len()
            )));
        }
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| e.is_integer() != first.is_integer()) {
                return Err(RepError::Shape(
                    "entries must be all integers or all half-integers".into(),
                ));
            }
        }
        Ok(Self { group, entries })
    }

    pub fn from_doubled(group: GroupId, doubled: &[i64]) -> Result<Self, RepError> {
        Self::new(group, doubled.iter().map(|&d| HalfInt::from_doubled(d)).collect())
    }

    /// Dominant weight or `NotDominant`.
    pub fn dominant(group: GroupId, entries: Vec<HalfInt>) -> Result<Self, RepError> {
        let w = Self::new(group, entries)?;
        w.require_dominant()?;
        Ok(w)
    }

    /// Parses the comma-separated text form, e.g. `"3/2,3/2,1/2"`.
    pub fn parse(group: GroupId, text: &str) -> Result<Self, RepError> {
        let text = text.trim();
        let entries = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|t| t.trim().parse::<HalfInt>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| RepError::Parse(format!("{text:?}: {e}")))?
        };
        Self::new(group, entries)
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.entries
    }

    pub fn doubled(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.doubled()).collect()
    }

    /// True when the entries are integers (a representation of `SO(n)`).
    pub fn is_integral(&self) -> bool {
        self.entries.first().is_none_or(|e| e.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        let d = self.doubled();
        let k = d.len();
        if k == 0 {
            return true;
        }
        let chain_ok = d.windows(2).take(k.saturating_sub(2)).all(|w| w[0] >= w[1]);
        match self.group.kind() {
            Kind::B => d.windows(2).all(|w| w[0] >= w[1]) && d[k - 1] >= 0,
            Kind::D if k == 1 => true,
            Kind::D => chain_ok && d[k - 2] >= d[k - 1].abs(),
        }
    }

    pub fn require_dominant(&self) -> Result<(), RepError> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(RepError::NotDominant(format!("{} for {}", self, self.group)))
        }
    }

    /// Same weight with the last entry negated (the `D_k` outer automorphism).
    pub fn flip_last(&self) -> Self {
        let mut entries = self.entries.clone();
        if let Some(last) = entries.last_mut() {
            *last = -*last;
        }
        Self { group: self.group, entries }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}
