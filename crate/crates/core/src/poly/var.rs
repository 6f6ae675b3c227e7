use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which generic matrix an indeterminate belongs to. `T` is the Rees parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    X,
    Y,
    Z,
    T,
}

/// One indeterminate: `x[i,j]`, `y[i,j]`, `z[i,j]` (1-based) or `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableId {
    pub family: Family,
    pub row: u8,
    pub col: u8,
}

impl VariableId {
    pub fn x(row: usize, col: usize) -> Self {
        Self::indexed(Family::X, row, col)
    }

    pub fn y(row: usize, col: usize) -> Self {
        Self::indexed(Family::Y, row, col)
    }

    pub fn z(row: usize, col: usize) -> Self {
        Self::indexed(Family::Z, row, col)
    }

    pub fn t() -> Self {
        VariableId {
            family: Family::T,
            row: 0,
            col: 0,
        }
    }

    pub fn indexed(family: Family, row: usize, col: usize) -> Self {
        assert!(family != Family::T, "t carries no indices");
        assert!(
            (1..=u8::MAX as usize).contains(&row) && (1..=u8::MAX as usize).contains(&col),
            "variable indices are 1-based and below 256"
        );
        VariableId {
            family,
            row: row as u8,
            col: col as u8,
        }
    }

    pub fn row(&self) -> usize {
        self.row as usize
    }

    pub fn col(&self) -> usize {
        self.col as usize
    }

    /// Exchanges the X and Y families, leaving Z and t alone.
    pub fn swap_xy(self) -> Self {
        let family = match self.family {
            Family::X => Family::Y,
            Family::Y => Family::X,
            f => f,
        };
        VariableId { family, ..self }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::X => write!(f, "x[{},{}]", self.row, self.col),
            Family::Y => write!(f, "y[{},{}]", self.row, self.col),
            Family::Z => write!(f, "z[{},{}]", self.row, self.col),
            Family::T => write!(f, "t"),
        }
    }
}

/// Shape of the problem: `m x n` generic matrices, the `s1 x t1` corner of X
/// and the `s2 x t2` corner of Y whose maximal minors define the two
/// determinantal rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProblemParams {
    pub m: usize,
    pub n: usize,
    pub s1: usize,
    pub t1: usize,
    pub s2: usize,
    pub t2: usize,
}

impl ProblemParams {
    pub fn new(m: usize, n: usize, s1: usize, t1: usize, s2: usize, t2: usize) -> Result<Self> {
        let p = ProblemParams {
            m,
            n,
            s1,
            t1,
            s2,
            t2,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let ProblemParams {
            m,
            n,
            s1,
            t1,
            s2,
            t2,
        } = *self;
        let fail = |msg: &str| Err(Error::InvalidParams(format!("{msg} in {self}")));
        if !(2 <= m && m <= n) {
            return fail("need 2 <= m <= n");
        }
        if !(2 <= s1 && s1 <= t1) {
            return fail("need 2 <= s1 <= t1");
        }
        if !(2 <= s2 && s2 <= t2) {
            return fail("need 2 <= s2 <= t2");
        }
        if s1 > m || s2 > m || t1 > n || t2 > n {
            return fail("submatrices must fit inside m x n");
        }
        Ok(())
    }

    /// The parameters with the roles of the X and Y corners exchanged.
    pub fn swapped(&self) -> Self {
        ProblemParams {
            s1: self.s2,
            t1: self.t2,
            s2: self.s1,
            t2: self.t1,
            ..*self
        }
    }

    /// Largest column index usable by the `f` families.
    pub fn f_width(&self) -> usize {
        self.t1.min(self.t2)
    }

    pub fn as_tuple(&self) -> [usize; 6] {
        [self.m, self.n, self.s1, self.t1, self.s2, self.t2]
    }
}

impl fmt::Display for ProblemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{}",
            self.m, self.n, self.s1, self.t1, self.s2, self.t2
        )
    }
}

impl std::str::FromStr for ProblemParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidParams(format!("{s:?}: {e}")))?;
        match parts.as_slice() {
            &[m, n, s1, t1, s2, t2] => ProblemParams::new(m, n, s1, t1, s2, t2),
            _ => Err(Error::InvalidParams(format!(
                "{s:?}: expected six comma-separated integers m,n,s1,t1,s2,t2"
            ))),
        }
    }
}
