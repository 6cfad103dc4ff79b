use std::fmt;
use std::str::FromStr;

use khperiod::repcyc::is_prime;

/// A period `p^n` with `p` prime and `n ≥ 1`, written `5` or `5^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Period {
    pub p: u64,
    pub n: u32,
}

impl Period {
    pub fn new(p: u64, n: u32) -> Result<Self, String> {
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        if n == 0 {
            return Err("exponent must be at least 1".into());
        }
        if p.checked_pow(n).is_none() {
            return Err(format!("{p}^{n} overflows"));
        }
        Ok(Self { p, n })
    }

    pub fn order(self) -> u64 {
        self.p.pow(self.n)
    }
}

impl FromStr for Period {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, n) = match s.trim().split_once('^') {
            Some((p, n)) => (p, n),
            None => (s.trim(), "1"),
        };
        let p = p
            .trim()
            .parse()
            .map_err(|_| format!("bad prime in period {s:?}"))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| format!("bad exponent in period {s:?}"))?;
        Self::new(p, n)
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("5".parse::<Period>().unwrap(), Period { p: 5, n: 1 });
        assert_eq!("5^2".parse::<Period>().unwrap().order(), 25);
        assert_eq!("3^3".parse::<Period>().unwrap().to_string(), "3^3");
        assert!("6".parse::<Period>().is_err());
        assert!("5^0".parse::<Period>().is_err());
        assert!("x".parse::<Period>().is_err());
    }
}
