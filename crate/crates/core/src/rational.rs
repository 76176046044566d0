use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Non-negative reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const HALF: Rational = Rational { num: 1, den: 2 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Panics if `den` is zero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(n: u64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// `(a + c) / (b + d)` for `a/b` and `c/d`, reduced afterwards.
    pub fn mediant(self, other: Rational) -> Rational {
        Rational::new(self.num + other.num, self.den + other.den)
    }

    pub fn mul_int(self, k: u64) -> Rational {
        Rational::new(self.num * k, self.den)
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }

    /// Exact test of `self * k == n`.
    pub fn times_equals(&self, k: u64, n: u64) -> bool {
        self.num as u128 * k as u128 == n as u128 * self.den as u128
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid fraction '{}'", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = n.parse().map_err(|_| err())?;
        let den: u64 = d.parse().map_err(|_| err())?;
        if den == 0 {
            return Err(err());
        }
        Ok(Rational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduced_and_ordered() {
        let r = Rational::new(4, 6);
        assert_eq!((r.numer(), r.denom()), (2, 3));
        assert_eq!(Rational::new(0, 5), Rational::ZERO);
        assert!(Rational::new(1, 3) < Rational::HALF);
        assert!(Rational::new(2, 3) > Rational::HALF);
        assert_eq!(Rational::new(3, 6).cmp(&Rational::HALF), Ordering::Equal);
        assert_eq!(Rational::new(2, 3).to_string(), "2/3");
        assert_eq!(Rational::new(4, 4).to_string(), "1");
        assert_eq!("4/6".parse::<Rational>().unwrap(), Rational::new(2, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert_eq!(Rational::new(3, 4).ceil(), 1);
        assert_eq!(Rational::new(3, 2).ceil(), 2);
        assert!(Rational::new(2, 3).times_equals(3, 2));
    }

    #[test]
    fn mediant_examples() {
        let m = Rational::new(1, 2).mediant(Rational::new(2, 3));
        assert_eq!(m, Rational::new(3, 5));
        assert!(Rational::HALF <= m && m <= Rational::new(2, 3));
        // Computed from the reduced forms, not from the raw fractions.
        assert_eq!(Rational::new(2, 4).mediant(Rational::ONE), Rational::new(2, 3));
    }

    proptest! {
        #[test]
        fn mediant_of_equal_values_is_that_value(n in 0u64..1000, d in 1u64..1000) {
            let x = Rational::new(n, d);
            prop_assert_eq!(x.mediant(x), x);
        }

        #[test]
        fn mediant_lies_between(a in 0u64..500, b in 1u64..500, c in 0u64..500, d in 1u64..500) {
            let (x, y) = (Rational::new(a, b), Rational::new(c, d));
            let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
            let m = lo.mediant(hi);
            prop_assert!(lo <= m && m <= hi);
            prop_assert_eq!(lo == m, lo == hi);
            prop_assert_eq!(m == hi, lo == hi);
        }
    }
}
