use core::fmt;
use core::ops::{Mul, MulAssign, Neg};

use num_traits::{Signed, Zero};

use crate::Rational;

/// The sign of a real value: one of −1, 0, +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: &Rational) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn from_i8(value: i8) -> Option<Sign> {
        match value {
            -1 => Some(Sign::Negative),
            0 => Some(Sign::Zero),
            1 => Some(Sign::Positive),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// `self` raised to a natural power; `s^0 = +1` for every sign, including zero.
    pub fn pow(self, exp: u32) -> Sign {
        match (self, exp) {
            (_, 0) => Sign::Positive,
            (Sign::Negative, e) if e % 2 == 0 => Sign::Positive,
            (s, _) => s,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Negative
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Negative => f.write_str("-1"),
            Sign::Zero => f.write_str("0"),
            Sign::Positive => f.write_str("+1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: [Sign; 3] = [Sign::Negative, Sign::Zero, Sign::Positive];

    #[test]
    fn multiplication_matches_integer_product() {
        for a in ALL {
            for b in ALL {
                assert_eq!((a * b).to_i8(), a.to_i8() * b.to_i8());
            }
        }
    }

    #[test]
    fn pow_and_roundtrip() {
        assert_eq!(Sign::Negative.pow(2), Sign::Positive);
        assert_eq!(Sign::Negative.pow(3), Sign::Negative);
        assert_eq!(Sign::Zero.pow(0), Sign::Positive);
        assert_eq!(Sign::Zero.pow(4), Sign::Zero);
        for s in ALL {
            assert_eq!(Sign::from_i8(s.to_i8()), Some(s));
        }
        assert_eq!(Sign::from_i8(2), None);
    }
}
