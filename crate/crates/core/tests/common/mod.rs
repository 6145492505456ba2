//! Shared test oracles.
//!
//! The indicator oracle evaluates the five-factor product in exact
//! rational arithmetic over `BigInt`, independent of the f64 pipeline it
//! checks. Every finite f64 is a dyadic rational, so converting inputs
//! with `BigRational::from_float` is lossless and the oracle result is
//! exact, which is strictly stronger than any fixed decimal precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use entryrisk::{FirmValuation, MacroProfile};

/// Exact rational from a finite f64. Lossless.
pub fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

/// Exact rational from a decimal string such as `-12.345`.
pub fn decimal(text: &str) -> BigRational {
    let (sign, digits) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    let mantissa: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .expect("decimal digits");
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    BigRational::new(mantissa * sign, denom)
}

/// The five-factor product, exactly, from f64 inputs.
///
/// The parts are multiplied as raw integer fractions and reduced once at
/// the end; `Ratio` arithmetic would reduce after every operation, which
/// dominates the runtime of large sweeps.
pub fn indicator_oracle(profile: &MacroProfile, valuation: &FirmValuation) -> BigRational {
    fn parts(x: f64) -> (BigInt, BigInt) {
        let r = BigRational::from_float(x).expect("finite input");
        (r.numer().clone(), r.denom().clone())
    }
    fn one_plus(x: f64) -> (BigInt, BigInt) {
        let (n, d) = parts(x);
        (n + &d, d)
    }

    let n = parts(profile.n_rating);
    let f = parts(profile.f_compat);
    let ri_t = one_plus(profile.ri_target);
    let ri_o = one_plus(profile.ri_origin);
    let rce_t = one_plus(profile.rce_target);
    let rce_o = one_plus(profile.rce_origin);
    let v = parts(valuation.enterprise_value);
    let cs = parts(valuation.common_stock);

    let numer = n.0 * f.0 * ri_t.0 * ri_o.1 * rce_t.0 * rce_o.1 * v.0 * cs.1;
    let denom = n.1 * f.1 * ri_t.1 * ri_o.0 * rce_t.1 * rce_o.0 * v.1 * cs.0;
    BigRational::new(numer, denom)
}

/// Relative error of an f64 against an exact rational reference.
///
/// `|a - e| / |e|` computed by exact cross-multiplication; only the
/// final magnitude of the (tiny) ratio goes through f64.
pub fn relative_error(approx: f64, exact: &BigRational) -> f64 {
    let a = rational(approx);
    let diff = (a.numer() * exact.denom() - exact.numer() * a.denom()).abs();
    let scale = exact.numer().abs() * a.denom();
    diff.to_f64().expect("numerator magnitude") / scale.to_f64().expect("denominator magnitude")
}

/// The published five-factor product for a given valuation, from the
/// printed decimal inputs (N=7, F=10, 6.6% vs 4.1% inflation, 6% vs 4%
/// growth), in exact decimal arithmetic.
pub fn case_2007_oracle(value: &str, common_stock: &str) -> BigRational {
    decimal("7")
        * decimal("10")
        * (decimal("1.066") / decimal("1.041"))
        * (decimal("1.06") / decimal("1.04"))
        * (decimal(value) / decimal(common_stock))
}
