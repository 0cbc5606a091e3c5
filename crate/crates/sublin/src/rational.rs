//! Exact rational arithmetic for constraint rows.
//!
//! Values are [`num_rational::BigRational`]: reduced integer pairs with a
//! positive denominator and no magnitude limit. The text form is always
//! `<p>/<q>` with both parts in decimal, so `3`, `3/0`, and `1/2/3` are all
//! rejected by [`parse_rat`].

use num_bigint::BigInt;
use num_traits::Zero;

pub type Rat = num_rational::BigRational;

/// Builds a reduced rational from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses the strict `<p>/<q>` form; the result is reduced and `q > 0`.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let (p, q) = text
        .split_once('/')
        .ok_or_else(|| format!("expected <p>/<q>, got `{text}`"))?;
    if q.contains('/') {
        return Err(format!("expected <p>/<q>, got `{text}`"));
    }
    let p: BigInt = p
        .parse()
        .map_err(|_| format!("bad numerator in `{text}`"))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| format!("bad denominator in `{text}`"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(Rat::new(p, q))
}

/// Formats as `<p>/<q>` with the sign on the numerator; inverse of [`parse_rat`].
pub fn format_rat(value: &Rat) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rat("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_rat("3").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1/2/3").is_err());
        assert!(parse_rat("a/2").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn round_trips() {
        for text in ["0/1", "7/3", "-5/9", "1000000000000000000000/7"] {
            let v = parse_rat(text).unwrap();
            assert_eq!(format_rat(&v), text);
        }
    }
}
