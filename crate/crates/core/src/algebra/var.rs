use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// A polynomial indeterminate.
///
/// The derived ordering is the documented variable order
/// `C1 < C2 < ... < CN < T < X < n`: Chern variables by index, then the
/// twist parameter, the auxiliary univariate variable, and the symbolic rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// Chern class variable `C_i`, `i >= 1`.
    Chern(u32),
    /// Twist parameter `T`.
    Twist,
    /// Auxiliary variable `X` (the variable of univariate helpers such as `R_N`).
    Aux,
    /// Symbolic sheaf rank `n`.
    Rank,
}

impl VarId {
    /// Chern variable `C_index`.
    ///
    /// Panics if `index == 0`; `C_0 = 1` is a constant, not a variable.
    pub fn chern(index: u32) -> Self {
        assert!(index >= 1, "Chern variable index must be >= 1");
        VarId::Chern(index)
    }

    pub fn chern_index(self) -> Option<u32> {
        match self {
            VarId::Chern(i) => Some(i),
            _ => None,
        }
    }

    /// Name as used by the text and JSON forms.
    pub fn name(self) -> String {
        self.to_string()
    }

    pub fn latex(self) -> String {
        match self {
            VarId::Chern(i) => format!("c_{{{i}}}"),
            VarId::Twist => "T".into(),
            VarId::Aux => "x".into(),
            VarId::Rank => "n".into(),
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Chern(i) => write!(f, "C{i}"),
            VarId::Twist => f.write_str("T"),
            VarId::Aux => f.write_str("X"),
            VarId::Rank => f.write_str("n"),
        }
    }
}

impl FromStr for VarId {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(VarId::Twist),
            "X" => Ok(VarId::Aux),
            "n" => Ok(VarId::Rank),
            _ => {
                let idx = s
                    .strip_prefix('C')
                    .and_then(|rest| rest.parse::<u32>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| AlgebraError::UnknownVariable(s.to_string()))?;
                Ok(VarId::Chern(idx))
            }
        }
    }
}
