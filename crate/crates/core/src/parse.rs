//! Matrix entries as text.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | atom ('^' uint)?
//! atom     := rational | 'i' | 'eps' | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! Whitespace is ignored and there is no implicit multiplication.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Rational, Ring};
use crate::poly::{Poly, PARAM_VAR};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryExpr {
    Rational(Rational),
    I,
    Eps,
    Neg(Box<EntryExpr>),
    Add(Box<EntryExpr>, Box<EntryExpr>),
    Sub(Box<EntryExpr>, Box<EntryExpr>),
    Mul(Box<EntryExpr>, Box<EntryExpr>),
    Pow(Box<EntryExpr>, u32),
}

impl EntryExpr {
    pub fn eval(&self) -> Poly<GaussianRational> {
        use EntryExpr::*;
        match self {
            Rational(q) => Poly::constant(GaussianRational::real(q.clone())),
            I => Poly::constant(GaussianRational::i()),
            Eps => Poly::x(),
            Neg(a) => a.eval().neg(),
            Add(a, b) => Ring::add(&a.eval(), &b.eval()),
            Sub(a, b) => Ring::sub(&a.eval(), &b.eval()),
            Mul(a, b) => Ring::mul(&a.eval(), &b.eval()),
            Pow(a, e) => a.eval().pow(*e),
        }
    }

    pub fn mentions_eps(&self) -> bool {
        use EntryExpr::*;
        match self {
            Rational(_) | I => false,
            Eps => true,
            Neg(a) | Pow(a, _) => a.mentions_eps(),
            Add(a, b) | Sub(a, b) | Mul(a, b) => a.mentions_eps() || b.mentions_eps(),
        }
    }
}

pub fn parse_entry(src: &str) -> Result<EntryExpr> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("operator or end of input"));
    }
    Ok(e)
}

/// Parse and evaluate in one step.
pub fn parse_poly(src: &str) -> Result<Poly<GaussianRational>> {
    parse_entry(src).map(|e| e.eval())
}

/// Text that [`parse_entry`] reads back to `p`.
pub fn render_entry(p: &Poly<GaussianRational>) -> String {
    p.display(PARAM_VAR).to_string()
}

fn parse_error(offset: usize, expected: &str) -> Error {
    Error::Parse {
        offset,
        expected: expected.to_string(),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, expected: &str) -> Error {
        parse_error(self.pos, expected)
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<EntryExpr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = EntryExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = EntryExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<EntryExpr> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = EntryExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<EntryExpr> {
        if self.eat(b'-') {
            return Ok(EntryExpr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let digits = self
                .digits()
                .ok_or_else(|| parse_error(at, "non-negative integer exponent"))?;
            let e = digits
                .parse::<u32>()
                .map_err(|_| parse_error(at, "exponent that fits in 32 bits"))?;
            return Ok(EntryExpr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<EntryExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("')'"));
                }
                Ok(e)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(EntryExpr::I)
            }
            Some(b'e') if self.src[self.pos..].starts_with(b"eps") => {
                self.pos += 3;
                Ok(EntryExpr::Eps)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            _ => Err(self.error("atom")),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn rational(&mut self) -> Result<EntryExpr> {
        let num: BigInt = self.digits().expect("caller saw a digit").parse().expect("digits");
        if !self.eat(b'/') {
            return Ok(EntryExpr::Rational(Rational::from_integer(num)));
        }
        self.skip_ws();
        let at = self.pos;
        let den: BigInt = self
            .digits()
            .ok_or_else(|| parse_error(at, "unsigned integer denominator"))?
            .parse()
            .expect("digits");
        if den == BigInt::from(0) {
            return Err(parse_error(at, "nonzero denominator"));
        }
        Ok(EntryExpr::Rational(Rational::new(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    type G = GaussianRational;

    fn err_at(src: &str) -> (usize, String) {
        match parse_entry(src) {
            Err(Error::Parse { offset, expected }) => (offset, expected),
            other => panic!("{src:?} parsed as {other:?}"),
        }
    }

    #[test]
    fn imaginary_unit() {
        assert_eq!(parse_poly("i").unwrap(), Poly::constant(G::i()));
        assert!(!parse_entry("i").unwrap().mentions_eps());
    }

    #[test]
    fn mixed_expression() {
        let p = parse_poly("3/2 - i*eps^2").unwrap();
        assert_eq!(p, Poly::new(vec![G::real(rat(3, 2)), G::zero(), G::from_ints(0, -1)]));
        assert!(parse_entry("3/2 - i*eps^2").unwrap().mentions_eps());
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(err_at("2+"), (2, "atom".into()));
        assert_eq!(err_at("2 eps").0, 2);
        assert_eq!(err_at("eps^-1"), (4, "non-negative integer exponent".into()));
        assert_eq!(err_at("1/0"), (2, "nonzero denominator".into()));
        assert_eq!(err_at("(1 + i").0, 6);
        assert_eq!(err_at("eps/2").0, 3);
        assert_eq!(err_at("x").0, 0);
        assert_eq!(err_at("").0, 0);
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        assert_eq!(parse_poly("-eps^2").unwrap(), Poly::monomial(G::from_ints(-1, 0), 2));
        assert_eq!(parse_poly("--2").unwrap(), Poly::constant(G::from_ints(2, 0)));
        assert_eq!(parse_poly("2*-i").unwrap(), Poly::constant(G::from_ints(0, -2)));
    }

    #[test]
    fn whitespace_and_parentheses() {
        let p = parse_poly(" ( 1 + i ) * ( 1 - i ) ").unwrap();
        assert_eq!(p, Poly::constant(G::from_ints(2, 0)));
        assert_eq!(
            parse_poly("(eps + 1)^2").unwrap(),
            Poly::from_ints(&[1, 2, 1]).map(|c: &Rational| G::real(c.clone()))
        );
    }

    fn arb_poly() -> impl Strategy<Value = Poly<G>> {
        prop::collection::vec((-5i64..6, -5i64..6, 1i64..5), 0..5)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(a, b, d)| G::new(rat(a, d), rat(b, d))).collect()))
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let text = render_entry(&p);
            prop_assert_eq!(parse_poly(&text).unwrap(), p, "text = {}", text);
        }
    }
}
