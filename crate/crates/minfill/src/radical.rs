//! Exact arithmetic with quadratic radicals: values of the form
//! `coeff * sqrt(kernel)` and finite sums of such terms.
//!
//! The volume convention weights topology classes by `sqrt(det)/m!`, so
//! ratios and normalizations live in a field extension by a few square
//! roots. Keeping the kernel square-free makes equality testing exact;
//! decimal output is produced on demand from a high-precision integer
//! square root.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{decimal_string, trial_factor, Rat};

/// Splits `x` into `(s, k)` with `x = s^2 * k` and `k` square-free, by trial
/// division. The bound covers every prime that can appear in the Gram
/// determinants handled here (all their factors stay far below it); a
/// perfect-square check mops up any large cofactor.
fn extract_square(x: &BigUint) -> (BigUint, BigUint) {
    const BOUND: u64 = 100_000;
    debug_assert!(!x.is_zero());
    let (factors, rest) = trial_factor(x, BOUND);
    let mut square_part = BigUint::one();
    let mut kernel = BigUint::one();
    for (p, e) in factors {
        square_part *= BigUint::from(p).pow(e / 2);
        if e % 2 == 1 {
            kernel *= BigUint::from(p);
        }
    }
    if !rest.is_one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            square_part *= root;
        } else {
            kernel *= rest;
        }
    }
    (square_part, kernel)
}

/// An exact value `coeff * sqrt(kernel)` with square-free integer kernel.
/// Zero is represented as `coeff = 0, kernel = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    coeff: Rat,
    kernel: BigUint,
}

impl Radical {
    /// `coeff * sqrt(kernel)`, normalizing squares out of the kernel.
    pub fn new(coeff: Rat, kernel: BigUint) -> Radical {
        if coeff.is_zero() || kernel.is_zero() {
            return Radical::zero();
        }
        let (s, k) = extract_square(&kernel);
        Radical { coeff: coeff * Rat::from_integer(BigInt::from(s)), kernel: k }
    }

    pub fn zero() -> Radical {
        Radical { coeff: Rat::zero(), kernel: BigUint::one() }
    }

    pub fn from_rat(r: Rat) -> Radical {
        Radical { coeff: r, kernel: BigUint::one() }
    }

    /// Exact square root of a nonnegative rational:
    /// `sqrt(p/q) = sqrt(p q) / q`.
    pub fn sqrt_of(r: &Rat) -> Radical {
        assert!(!r.is_negative(), "square root of a negative rational");
        if r.is_zero() {
            return Radical::zero();
        }
        let p = r.numer().magnitude();
        let q = r.denom().magnitude();
        let coeff = Rat::new(BigInt::one(), BigInt::from(q.clone()));
        Radical::new(coeff, p * q)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn kernel(&self) -> &BigUint {
        &self.kernel
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &Rat) -> Radical {
        if r.is_zero() {
            return Radical::zero();
        }
        Radical { coeff: &self.coeff * r, kernel: self.kernel.clone() }
    }

    pub fn mul(&self, other: &Radical) -> Radical {
        if self.is_zero() || other.is_zero() {
            return Radical::zero();
        }
        Radical::new(&self.coeff * &other.coeff, &self.kernel * &other.kernel)
    }

    /// Exact quotient of radicals:
    /// `a sqrt(j) / (b sqrt(k)) = (a / (b k)) sqrt(j k)`.
    pub fn div(&self, other: &Radical) -> Radical {
        assert!(!other.is_zero(), "division by zero radical");
        let coeff = &self.coeff
            / (&other.coeff * Rat::from_integer(BigInt::from(other.kernel.clone())));
        Radical::new(coeff, &self.kernel * &other.kernel)
    }

    /// The value as a rational when the kernel is trivial.
    pub fn rational_part(&self) -> Option<Rat> {
        self.kernel.is_one().then(|| self.coeff.clone())
    }

    /// High-precision rational approximation with roughly `digits` correct
    /// decimal digits.
    pub fn eval_rat(&self, digits: u32) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        if self.kernel.is_one() {
            return self.coeff.clone();
        }
        let scale = BigUint::from(10u32).pow(digits);
        let root = (&self.kernel * &scale * &scale).sqrt();
        &self.coeff * Rat::new(BigInt::from(root), BigInt::from(scale))
    }

    pub fn to_f64(&self) -> f64 {
        self.eval_rat(40).to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `sig` significant digits.
    pub fn decimal(&self, sig: usize) -> String {
        decimal_string(&self.eval_rat(sig as u32 + 15), sig)
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kernel.is_one() || self.is_zero() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "sqrt({})", self.kernel)
        } else {
            write!(f, "{} * sqrt({})", self.coeff, self.kernel)
        }
    }
}

/// A finite sum of radicals, grouped by square-free kernel. Sums compare
/// exactly: two sums are equal iff all grouped coefficients match.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RadicalSum {
    terms: BTreeMap<BigUint, Rat>,
}

impl RadicalSum {
    pub fn zero() -> RadicalSum {
        RadicalSum::default()
    }

    pub fn from_radical(r: &Radical) -> RadicalSum {
        let mut sum = RadicalSum::zero();
        sum.add(r);
        sum
    }

    pub fn add(&mut self, r: &Radical) {
        if r.is_zero() {
            return;
        }
        let entry = self.terms.entry(r.kernel.clone()).or_insert_with(Rat::zero);
        *entry += &r.coeff;
        if entry.is_zero() {
            self.terms.remove(&r.kernel);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = Radical> + '_ {
        self.terms
            .iter()
            .map(|(k, c)| Radical { coeff: c.clone(), kernel: k.clone() })
    }

    pub fn eval_rat(&self, digits: u32) -> Rat {
        self.terms().map(|t| t.eval_rat(digits)).sum()
    }

    pub fn to_f64(&self) -> f64 {
        self.eval_rat(40).to_f64().unwrap_or(f64::NAN)
    }

    pub fn decimal(&self, sig: usize) -> String {
        decimal_string(&self.eval_rat(sig as u32 + 15), sig)
    }
}

impl fmt::Display for RadicalSum {
    fmt_sum_display!();
}

macro_rules! fmt_sum_display {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.terms.is_empty() {
                return write!(f, "0");
            }
            for (i, term) in self.terms().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "{term}")?;
            }
            Ok(())
        }
    };
}
use fmt_sum_display;
