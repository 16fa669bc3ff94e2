//! The polynomial families and the numbers they are built from.

mod families;
mod numbers;

use std::fmt;
use std::str::FromStr;

use crate::coeffring::{MPoly, Rational, Ring};
use crate::error::Error;

pub use families::{
    binomial_transform, family_egf, family_inverse_array, family_moment_array, family_poly,
    family_recurrence, family_value, family_value_in, family_values, whitney_first_array,
    whitney_second_array,
};
pub use numbers::{
    stirling, stirling_table, whitney, whitney1_in, whitney2_in, whitney2_power_sum, whitney_table,
    StirlingKind, WhitneyKind,
};

/// The five moment families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// `D_m(n, x) = sum_k W_m(n, k) x^k`
    Dowling,
    /// `F_m(n, x) = sum_k k! W_m(n, k) x^k`
    Tanny,
    /// `A_m(n, x) = sum_k k! W_m(n, k) (x - 1)^{n-k}`
    Eulerian,
    /// `w_n(x, m) = sum_k k! S(n, k) x^k m^{n-k}`
    Geometric,
    /// `sum_k (k+1)! S(n, k) x^k m^{n-k}`
    GeometricMod,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [
        FamilyId::Dowling,
        FamilyId::Tanny,
        FamilyId::Eulerian,
        FamilyId::Geometric,
        FamilyId::GeometricMod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Dowling => "dowling",
            FamilyId::Tanny => "tanny",
            FamilyId::Eulerian => "eulerian",
            FamilyId::Geometric => "geometric",
            FamilyId::GeometricMod => "geometric-mod",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("unknown family {s:?}"),
            })
    }
}

/// Values of the polynomial variable `x` and the Dowling parameter `m`, in
/// whatever ring the computation runs over.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyParams<R> {
    pub x: R,
    pub m: R,
}

impl<R: Ring> FamilyParams<R> {
    pub fn new(x: R, m: R) -> Self {
        FamilyParams { x, m }
    }
}

impl FamilyParams<MPoly> {
    pub fn symbolic() -> Self {
        FamilyParams {
            x: MPoly::x(),
            m: MPoly::m(),
        }
    }
}

impl FamilyParams<Rational> {
    pub fn at(x: Rational, m: Rational) -> Self {
        FamilyParams { x, m }
    }
}
