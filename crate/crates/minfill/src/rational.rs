//! Exact rational arithmetic helpers shared across the crate.
//!
//! Everything in the analytic pipeline is computed over arbitrary-precision
//! rationals; floating point only appears in the numeric oracle. This module
//! adds the few utilities `num-rational` does not ship: factorials, the
//! double-factorial tree count, decimal rendering with a fixed number of
//! significant digits, and a factored rendering for very small determinants.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// `v` as an exact rational.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `num/den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `k!` as a big integer.
pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for v in 2..=k {
        acc *= BigInt::from(v);
    }
    acc
}

/// Number of labeled binary boundary trees on `n >= 3` leaves: `(2n-5)!!`.
pub fn labeled_topology_count(n: usize) -> u128 {
    assert!(n >= 3);
    let mut acc: u128 = 1;
    let mut v: u128 = 3;
    while v <= 2 * n as u128 - 5 {
        acc *= v;
        v += 2;
    }
    acc
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, num_rational::ParseRatioError> {
    s.trim().parse::<Rat>()
}

/// Canonical "p/q" rendering ("p" when the value is an integer).
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

fn pow10(e: u32) -> BigUint {
    BigUint::from(10u32).pow(e)
}

/// Rounds `r` to `sig` significant digits and renders it in decimal,
/// switching to scientific notation outside a comfortable exponent range.
pub fn decimal_string(r: &Rat, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let p = r.numer().magnitude().clone();
    let q = r.denom().magnitude().clone();
    // First guess for floor(log10(p/q)), then correct by inspecting the
    // rounded mantissa.
    let mut e = p.to_string().len() as i64 - q.to_string().len() as i64;
    let (digits, exponent) = loop {
        let shift = sig as i64 - 1 - e;
        let (num, den) = if shift >= 0 {
            (&p * pow10(shift as u32), q.clone())
        } else {
            (p.clone(), &q * pow10((-shift) as u32))
        };
        // round half away from zero
        let mant = (BigUint::from(2u32) * num + &den) / (BigUint::from(2u32) * &den);
        if mant < pow10(sig as u32 - 1) {
            e -= 1;
        } else if mant >= pow10(sig as u32) {
            e += 1;
        } else {
            break (mant.to_string(), e);
        }
    };
    if exponent >= 0 && (exponent as usize) < sig.max(7) && exponent < 18 {
        let ip = exponent as usize + 1;
        if ip >= digits.len() {
            format!("{sign}{}{}", digits, "0".repeat(ip - digits.len()))
        } else {
            format!("{sign}{}.{}", &digits[..ip], &digits[ip..])
        }
    } else if exponent < 0 && exponent >= -4 {
        format!("{sign}0.{}{}", "0".repeat((-exponent - 1) as usize), digits)
    } else {
        format!("{sign}{}.{}e{}", &digits[..1], &digits[1..], exponent)
    }
}

/// Prime factors of `x` found by trial division up to `bound`, plus the
/// unfactored cofactor (1 when the factorization is complete).
pub fn trial_factor(x: &BigUint, bound: u64) -> (Vec<(u64, u32)>, BigUint) {
    let mut rest = x.clone();
    let mut factors = Vec::new();
    if rest.is_zero() {
        return (factors, rest);
    }
    let mut p = 2u64;
    while p <= bound {
        if (&rest % p).is_zero() {
            let mut e = 0u32;
            while (&rest % p).is_zero() {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        if rest.is_one() {
            break;
        }
        p = if p == 2 { 3 } else { p + 2 };
        // cheap early exit once the remaining cofactor is below p^2
        if rest < BigUint::from(p) * p {
            if !rest.is_one() {
                if let Some(small) = rest.to_u64() {
                    factors.push((small, 1));
                    rest = BigUint::one();
                }
            }
            break;
        }
    }
    (factors, rest)
}

/// Renders `r` with large prime powers pulled out, e.g. `4/9 * 5^-12`.
/// Primes whose exponent magnitude is below the extraction threshold stay
/// in the leading fraction.
pub fn factored_string(r: &Rat) -> String {
    const EXTRACT_AT: u32 = 6;
    const BOUND: u64 = 10_000;
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let (nf, nrest) = trial_factor(r.numer().magnitude(), BOUND);
    let (df, drest) = trial_factor(r.denom().magnitude(), BOUND);
    let mut plain_num = nrest;
    let mut plain_den = drest;
    let mut extracted: Vec<(u64, i64)> = Vec::new();
    for (p, e) in nf {
        if e >= EXTRACT_AT {
            extracted.push((p, e as i64));
        } else {
            plain_num *= BigUint::from(p).pow(e);
        }
    }
    for (p, e) in df {
        if e >= EXTRACT_AT {
            extracted.push((p, -(e as i64)));
        } else {
            plain_den *= BigUint::from(p).pow(e);
        }
    }
    extracted.sort_unstable();
    let frac = if plain_den.is_one() {
        format!("{plain_num}")
    } else {
        format!("{plain_num}/{plain_den}")
    };
    let mut out = format!("{sign}{frac}");
    for (p, e) in extracted {
        out.push_str(&format!(" * {p}^{e}"));
    }
    out
}
