//! Quaternion literals.
//!
//! ```text
//! quat  := term (('+'|'-') term)*
//! term  := coeff? unit?          (at least one of the two)
//! unit  := 'i' | 'j' | 'k'
//! coeff := integer | integer '/' integer | decimal
//! ```
//!
//! A leading sign is allowed and whitespace is ignored, so `1+3i+2j+k`,
//! `-1/2 + j` and `2.5i-k` are all valid. Decimal literals are converted to
//! rationals exactly; [`parse_quat`] additionally reports them so callers can
//! pick the floating-point backend.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::quaternion::SplitQuaternion;
use crate::scalar::{Approx, Exact, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the problem was found.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed literal: exact coefficients plus whether any decimal appeared.
#[derive(Clone, Debug, PartialEq)]
pub struct Literal {
    pub coeffs: [BigRational; 4],
    pub has_decimal: bool,
}

impl Literal {
    pub fn to_quaternion<S: Scalar>(&self) -> SplitQuaternion<S> {
        SplitQuaternion::from_array(self.coeffs.clone().map(|c| S::from_rational(&c)))
    }
}

/// A quaternion on whichever backend its literal calls for.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyQuaternion {
    Exact(SplitQuaternion<Exact>),
    Approx(SplitQuaternion<Approx>),
}

impl fmt::Display for AnyQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyQuaternion::Exact(q) => q.fmt(f),
            AnyQuaternion::Approx(q) => q.fmt(f),
        }
    }
}

/// Parses a literal, choosing exact rationals unless a decimal appears.
pub fn parse_quat(text: &str) -> Result<AnyQuaternion, ParseError> {
    let lit = parse_literal(text)?;
    Ok(if lit.has_decimal {
        AnyQuaternion::Approx(lit.to_quaternion())
    } else {
        AnyQuaternion::Exact(lit.to_quaternion())
    })
}

impl<S: Scalar> FromStr for SplitQuaternion<S> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_literal(s).map(|lit| lit.to_quaternion())
    }
}

pub fn parse_literal(text: &str) -> Result<Literal, ParseError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        chars,
        pos: 0,
        end: text.len(),
        has_decimal: false,
    };
    let mut coeffs = [0, 0, 0, 0].map(|_| <Exact as Scalar>::zero());

    let mut negative = p.eat_sign().unwrap_or(false);
    loop {
        let (value, unit) = p.term()?;
        coeffs[unit] += if negative { -value } else { value };
        match p.peek() {
            None => break,
            Some('+' | '-') => negative = p.eat_sign().unwrap(),
            Some(c) => return Err(p.error(format!("expected '+' or '-', found '{c}'"))),
        }
    }
    Ok(Literal {
        coeffs,
        has_decimal: p.has_decimal,
    })
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    has_decimal: bool,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            offset: self.offset(),
            message,
        }
    }

    fn eat_sign(&mut self) -> Option<bool> {
        let negative = match self.peek()? {
            '+' => false,
            '-' => true,
            _ => return None,
        };
        self.pos += 1;
        Some(negative)
    }

    fn term(&mut self) -> Result<(BigRational, usize), ParseError> {
        let coeff = self.coeff()?;
        let unit = match self.peek() {
            Some('i') => Some(1),
            Some('j') => Some(2),
            Some('k') => Some(3),
            _ => None,
        };
        if unit.is_some() {
            self.pos += 1;
        }
        match (coeff, unit) {
            (None, None) => Err(self.error(match self.peek() {
                Some(c) => format!("expected a coefficient or unit, found '{c}'"),
                None => "expected a coefficient or unit, found end of input".to_owned(),
            })),
            (c, u) => Ok((c.unwrap_or_else(<Exact as Scalar>::one), u.unwrap_or(0))),
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn coeff(&mut self) -> Result<Option<BigRational>, ParseError> {
        let whole = self.digits();
        match self.peek() {
            Some('/') if !whole.is_empty() => {
                self.pos += 1;
                let at = self.offset();
                let den = self.digits();
                if den.is_empty() {
                    return Err(self.error("expected a denominator".to_owned()));
                }
                let den: BigInt = den.parse().unwrap();
                if den.is_zero() {
                    return Err(ParseError {
                        offset: at,
                        message: "zero denominator".to_owned(),
                    });
                }
                Ok(Some(BigRational::new(whole.parse().unwrap(), den)))
            }
            Some('.') => {
                self.pos += 1;
                let frac = self.digits();
                if whole.is_empty() && frac.is_empty() {
                    return Err(self.error("expected digits around '.'".to_owned()));
                }
                self.has_decimal = true;
                let scale = BigInt::from(10).pow(frac.len() as u32);
                let num: BigInt = format!("0{whole}{frac}").parse().unwrap();
                Ok(Some(BigRational::new(num, scale)))
            }
            _ if whole.is_empty() => Ok(None),
            _ => Ok(Some(BigRational::from_integer(whole.parse().unwrap()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = SplitQuaternion<Exact>;

    fn r(n: i64, d: i64) -> Exact {
        Exact::from_ratio(n, d)
    }

    #[test]
    fn integer_literals() {
        assert_eq!("1+3i+2j+k".parse::<Q>().unwrap(), Q::from_ints(1, 3, 2, 1));
        assert_eq!("-i-k".parse::<Q>().unwrap(), Q::from_ints(0, -1, 0, -1));
        assert_eq!(
            " 1 + 5 i\t- 3j ".parse::<Q>().unwrap(),
            Q::from_ints(1, 5, -3, 0)
        );
        assert_eq!("0".parse::<Q>().unwrap(), Q::zero());
    }

    #[test]
    fn rational_and_decimal_literals() {
        let q: Q = "-1/2+j".parse().unwrap();
        assert_eq!(q, Q::new(r(-1, 2), r(0, 1), r(1, 1), r(0, 1)));
        let lit = parse_literal("2.5i-k").unwrap();
        assert!(lit.has_decimal);
        assert_eq!(
            lit.to_quaternion::<Exact>(),
            Q::new(r(0, 1), r(5, 2), r(0, 1), r(-1, 1))
        );
        assert!(matches!(
            parse_quat("2.5i-k").unwrap(),
            AnyQuaternion::Approx(_)
        ));
        assert!(matches!(
            parse_quat("1/3").unwrap(),
            AnyQuaternion::Exact(_)
        ));
    }

    #[test]
    fn repeated_units_accumulate() {
        assert_eq!("i+i-1+3".parse::<Q>().unwrap(), Q::from_ints(2, 2, 0, 0));
    }

    #[test]
    fn malformed_literals_report_offsets() {
        let err = "1+".parse::<Q>().unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(err.message.contains("end of input"));
        assert_eq!("".parse::<Q>().unwrap_err().offset, 0);
        assert_eq!("1+x".parse::<Q>().unwrap_err().offset, 2);
        assert_eq!("2ij".parse::<Q>().unwrap_err().offset, 2);
        assert_eq!("3/0".parse::<Q>().unwrap_err().offset, 2);
        assert_eq!("3/".parse::<Q>().unwrap_err().offset, 2);
        assert_eq!("1++i".parse::<Q>().unwrap_err().offset, 2);
    }
}
