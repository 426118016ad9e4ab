//! Interval-valued intuitionistic fuzzy numbers and their statistics.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

/// One of the four bounds of an IVIFN.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    MuLo,
    MuHi,
    NuLo,
    NuHi,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::MuLo => "mu_lo",
            Field::MuHi => "mu_hi",
            Field::NuLo => "nu_lo",
            Field::NuHi => "nu_hi",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("{field} = {value} lies outside [0, 1]")]
    OutOfUnit { field: Field, value: Rational },
    /// `field` is the lower bound of the inverted interval.
    #[error("interval inverted: {field} = {lo} exceeds its upper bound {hi}")]
    IntervalInverted {
        field: Field,
        lo: Rational,
        hi: Rational,
    },
    #[error("mu_hi + nu_hi = {sum} exceeds 1")]
    CapacityExceeded { sum: Rational },
}

/// An interval-valued intuitionistic fuzzy number `<[mu_lo, mu_hi], [nu_lo, nu_hi]>`.
///
/// Always valid: `0 <= mu_lo <= mu_hi <= 1`, `0 <= nu_lo <= nu_hi <= 1` and
/// `mu_hi + nu_hi <= 1`. Structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIvifn", into = "RawIvifn")]
pub struct Ivifn {
    mu_lo: Rational,
    mu_hi: Rational,
    nu_lo: Rational,
    nu_hi: Rational,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawIvifn {
    mu_lo: Rational,
    mu_hi: Rational,
    nu_lo: Rational,
    nu_hi: Rational,
}

impl TryFrom<RawIvifn> for Ivifn {
    type Error = ValidationError;

    fn try_from(raw: RawIvifn) -> Result<Self, Self::Error> {
        Ivifn::new(raw.mu_lo, raw.mu_hi, raw.nu_lo, raw.nu_hi)
    }
}

impl From<Ivifn> for RawIvifn {
    fn from(a: Ivifn) -> Self {
        RawIvifn {
            mu_lo: a.mu_lo,
            mu_hi: a.mu_hi,
            nu_lo: a.nu_lo,
            nu_hi: a.nu_hi,
        }
    }
}

impl Ivifn {
    /// Validates the four bounds and builds the number.
    pub fn new(
        mu_lo: Rational,
        mu_hi: Rational,
        nu_lo: Rational,
        nu_hi: Rational,
    ) -> Result<Self, ValidationError> {
        for (field, value) in [
            (Field::MuLo, &mu_lo),
            (Field::MuHi, &mu_hi),
            (Field::NuLo, &nu_lo),
            (Field::NuHi, &nu_hi),
        ] {
            if !value.in_unit() {
                return Err(ValidationError::OutOfUnit {
                    field,
                    value: value.clone(),
                });
            }
        }
        if mu_lo > mu_hi {
            return Err(ValidationError::IntervalInverted {
                field: Field::MuLo,
                lo: mu_lo,
                hi: mu_hi,
            });
        }
        if nu_lo > nu_hi {
            return Err(ValidationError::IntervalInverted {
                field: Field::NuLo,
                lo: nu_lo,
                hi: nu_hi,
            });
        }
        let sum = &mu_hi + &nu_hi;
        if sum > Rational::one() {
            return Err(ValidationError::CapacityExceeded { sum });
        }
        Ok(Ivifn {
            mu_lo,
            mu_hi,
            nu_lo,
            nu_hi,
        })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(
        mu_lo: (i64, i64),
        mu_hi: (i64, i64),
        nu_lo: (i64, i64),
        nu_hi: (i64, i64),
    ) -> Result<Self, ValidationError> {
        let r = |(n, d): (i64, i64)| Rational::new(n, d);
        Ivifn::new(r(mu_lo), r(mu_hi), r(nu_lo), r(nu_hi))
    }

    /// `<[0,0],[1,1]>`, the least element under both total orders.
    pub fn bottom() -> Self {
        Ivifn {
            mu_lo: Rational::zero(),
            mu_hi: Rational::zero(),
            nu_lo: Rational::one(),
            nu_hi: Rational::one(),
        }
    }

    /// `<[1,1],[0,0]>`, the greatest element under both total orders.
    pub fn top() -> Self {
        Ivifn {
            mu_lo: Rational::one(),
            mu_hi: Rational::one(),
            nu_lo: Rational::zero(),
            nu_hi: Rational::zero(),
        }
    }

    pub fn mu_lo(&self) -> &Rational {
        &self.mu_lo
    }

    pub fn mu_hi(&self) -> &Rational {
        &self.mu_hi
    }

    pub fn nu_lo(&self) -> &Rational {
        &self.nu_lo
    }

    pub fn nu_hi(&self) -> &Rational {
        &self.nu_hi
    }

    pub fn get(&self, field: Field) -> &Rational {
        match field {
            Field::MuLo => &self.mu_lo,
            Field::MuHi => &self.mu_hi,
            Field::NuLo => &self.nu_lo,
            Field::NuHi => &self.nu_hi,
        }
    }

    /// Score: mean membership minus mean non-membership.
    pub fn score(&self) -> Rational {
        (&self.mu_lo + &self.mu_hi - &self.nu_lo - &self.nu_hi).half()
    }

    /// Accuracy: mean membership plus mean non-membership.
    pub fn accuracy(&self) -> Rational {
        (&self.mu_lo + &self.mu_hi + &self.nu_lo + &self.nu_hi).half()
    }

    pub fn mu_width(&self) -> Rational {
        &self.mu_hi - &self.mu_lo
    }

    pub fn nu_width(&self) -> Rational {
        &self.nu_hi - &self.nu_lo
    }

    pub fn stats(&self) -> StatVector {
        StatVector::of(self)
    }
}

impl fmt::Display for Ivifn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<[{}, {}], [{}, {}]>",
            self.mu_lo, self.mu_hi, self.nu_lo, self.nu_hi
        )
    }
}

impl fmt::Debug for Ivifn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every statistic the two ranking principles read off an IVIFN.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatVector {
    /// Score S.
    pub s: Rational,
    /// Accuracy H.
    pub h: Rational,
    /// Hesitancy entropy E1 = 1 - H.
    pub e1: Rational,
    /// Total interval width entropy E2 (mean of the two widths).
    pub e2: Rational,
    /// Membership width entropy E3.
    pub e3: Rational,
    /// Membership uncertainty index T (membership width minus non-membership width).
    pub t: Rational,
    /// Hesitation uncertainty index G (sum of the two widths).
    pub g: Rational,
    /// Indeterminacy interval `[1 - mu_hi - nu_hi, 1 - mu_lo - nu_lo]`.
    pub pi_lo: Rational,
    pub pi_hi: Rational,
}

impl StatVector {
    pub fn of(a: &Ivifn) -> Self {
        let one = Rational::one();
        let mu_w = a.mu_width();
        let nu_w = a.nu_width();
        StatVector {
            s: a.score(),
            h: a.accuracy(),
            e1: ((&one - &a.mu_lo - &a.mu_hi) + (&one - &a.nu_lo - &a.nu_hi)).half(),
            e2: (&mu_w + &nu_w).half(),
            e3: mu_w.clone(),
            t: &mu_w - &nu_w,
            g: &mu_w + &nu_w,
            pi_lo: &one - &a.mu_hi - &a.nu_hi,
            pi_hi: &one - &a.mu_lo - &a.nu_lo,
        }
    }
}
