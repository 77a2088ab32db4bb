//! Label expressions: parsing, printing and evaluation in r(H) or G_0(H).
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | atom ("^" uint)?
//! atom   := int | ident | label | alias | "(" expr ")"
//! label  := "V" "[" uint "]" "(" simple (";" cyclo)? ")"
//! alias  := ("w" | "y") "[" cyclo "]"
//! ```

use std::fmt;

use hopfore::decomp::IndecLabel;
use hopfore::exactnum::{parse_prefix, Cyclotomic};
use hopfore::fusion::{canonicalize, LabelKind};
use hopfore::greenring::{ring_mul, ring_pow, to_groth, GreenError, RingElement, RingLabel};
use hopfore::grouprep::AlgebraData;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown label `{name}` at byte {pos}")]
    UnknownLabel { pos: usize, name: String },
    #[error(transparent)]
    Ring(#[from] GreenError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Label(IndecLabel),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alg: &'a AlgebraData,
}

fn syntax<T>(pos: usize, message: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError::Syntax {
        pos,
        message: message.into(),
    })
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            syntax(self.pos, format!("expected `{c}`"))
        }
    }

    fn uint(&mut self) -> Result<u64, ExprError> {
        self.skip_ws();
        let digits: &str = &self.rest()[..self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len())];
        if digits.is_empty() {
            return syntax(self.pos, "expected an unsigned integer");
        }
        let start = self.pos;
        self.pos += digits.len();
        digits
            .parse()
            .or_else(|_| syntax(start, "integer too large"))
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn cyclo(&mut self) -> Result<Cyclotomic, ExprError> {
        self.skip_ws();
        let start = self.pos;
        match parse_prefix(self.rest(), self.alg.order()) {
            Ok((value, used)) if used > 0 => {
                self.pos += used;
                Ok(value)
            }
            Ok(_) => syntax(start, "expected a cyclotomic number"),
            Err(e) => syntax(start, e.to_string()),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let start = self.pos;
            let e = self.uint()?;
            let e = u32::try_from(e).or_else(|_| syntax(start, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let start = match self.peek() {
            None => return syntax(self.pos, "unexpected end of input"),
            Some(_) => self.pos,
        };
        let c = self.peek().unwrap_or(' ');
        if c == '(' {
            self.pos += 1;
            let inner = self.expr()?;
            self.expect(')')?;
            return Ok(inner);
        }
        if c.is_ascii_digit() {
            let v = self.uint()?;
            return i64::try_from(v)
                .map(Expr::Int)
                .or_else(|_| syntax(start, "integer too large"));
        }
        if !c.is_ascii_alphabetic() {
            return syntax(start, format!("unexpected `{c}`"));
        }
        let name = self.ident();
        let bracket = self.rest().starts_with('[');
        match (name, bracket) {
            ("V", true) => self.label(start),
            ("w" | "y", true) => {
                self.expect('[')?;
                let beta_pos = self.pos;
                let beta = self.cyclo()?;
                self.expect(']')?;
                self.eig(start, beta_pos, 1, self.alg.trivial(), beta)
            }
            _ => self.named(start, name),
        }
    }

    fn label(&mut self, start: usize) -> Result<Expr, ExprError> {
        self.expect('[')?;
        let tpos = self.pos;
        let t = self.uint()?;
        let t = u32::try_from(t)
            .ok()
            .filter(|&t| t > 0)
            .map_or_else(|| syntax(tpos, "length must be positive"), Ok)?;
        self.expect(']')?;
        self.expect('(')?;
        self.skip_ws();
        let spos = self.pos;
        let sname = self.ident();
        let i = self
            .alg
            .simple_by_name(sname)
            .ok_or_else(|| ExprError::UnknownLabel {
                pos: spos,
                name: sname.to_string(),
            })?;
        let label = if self.eat(';') {
            let beta_pos = self.pos;
            let beta = self.cyclo()?;
            self.expect(')')?;
            return self.eig(start, beta_pos, t, i, beta);
        } else {
            IndecLabel::Nil { i, t }
        };
        self.expect(')')?;
        Ok(Expr::Label(label))
    }

    fn eig(
        &self,
        start: usize,
        beta_pos: usize,
        t: u32,
        i: hopfore::grouprep::SimpleId,
        beta: Cyclotomic,
    ) -> Result<Expr, ExprError> {
        if beta.is_zero() {
            let suggestion = IndecLabel::Nil {
                i,
                t: t * self.alg.s(),
            }
            .display(self.alg);
            return syntax(
                beta_pos,
                format!("β = 0 is not allowed; write {suggestion} instead"),
            );
        }
        canonicalize(self.alg, LabelKind::Eig, t, i, Some(&beta))
            .map(Expr::Label)
            .or_else(|e| syntax(start, e.to_string()))
    }

    fn named(&self, start: usize, name: &str) -> Result<Expr, ExprError> {
        let unknown = || ExprError::UnknownLabel {
            pos: start,
            name: name.to_string(),
        };
        if self.alg.dihedral_m().is_some() {
            let by = |n: &str, t| {
                self.alg
                    .simple_by_name(n)
                    .map(|i| Expr::Label(IndecLabel::Nil { i, t }))
            };
            match name {
                "x" => return by("1", 1).ok_or_else(unknown),
                "y" => {
                    return Ok(Expr::Label(IndecLabel::Nil {
                        i: self.alg.trivial(),
                        t: 2,
                    }))
                }
                "z" => {
                    return Ok(Expr::Label(IndecLabel::Nil {
                        i: self.alg.trivial(),
                        t: 3,
                    }))
                }
                _ => {}
            }
        }
        match self.alg.simple_by_name(name) {
            Some(i) => Ok(Expr::Label(IndecLabel::Nil { i, t: 1 })),
            None => Err(unknown()),
        }
    }
}

/// Parses a full expression; trailing input is an error.
pub fn parse(src: &str, alg: &AlgebraData) -> Result<Expr, ExprError> {
    let mut p = Parser { src, pos: 0, alg };
    let e = p.expr()?;
    if p.peek().is_some() {
        return syntax(
            p.pos,
            format!("unexpected `{}`", p.rest().chars().next().unwrap_or(' ')),
        );
    }
    Ok(e)
}

/// Parses a single indecomposable label or alias.
pub fn parse_label(src: &str, alg: &AlgebraData) -> Result<IndecLabel, ExprError> {
    match parse(src, alg)? {
        Expr::Label(l) => Ok(l),
        _ => syntax(
            0,
            "expected a single label such as V[2](eps) or V[1](eps;2)",
        ),
    }
}

/// Evaluates with `lift` mapping each label atom into the target ring.
pub fn eval<L: RingLabel>(
    e: &Expr,
    alg: &AlgebraData,
    lift: &dyn Fn(&IndecLabel) -> Result<RingElement<L>, GreenError>,
) -> Result<RingElement<L>, ExprError> {
    Ok(match e {
        Expr::Int(k) => RingElement::one(alg).scale(*k),
        Expr::Label(l) => lift(l)?,
        Expr::Add(a, b) => eval(a, alg, lift)?.add(&eval(b, alg, lift)?),
        Expr::Sub(a, b) => eval(a, alg, lift)?.sub(&eval(b, alg, lift)?),
        Expr::Neg(a) => eval(a, alg, lift)?.scale(-1),
        Expr::Mul(a, b) => ring_mul(alg, &eval(a, alg, lift)?, &eval(b, alg, lift)?)?,
        Expr::Pow(a, k) => ring_pow(alg, &eval(a, alg, lift)?, *k)?,
    })
}

pub fn eval_green(
    e: &Expr,
    alg: &AlgebraData,
) -> Result<hopfore::greenring::GreenElement, ExprError> {
    eval(e, alg, &|l| Ok(RingElement::from_label(l.clone())))
}

pub fn eval_groth(
    e: &Expr,
    alg: &AlgebraData,
) -> Result<hopfore::greenring::GrothElement, ExprError> {
    eval(e, alg, &|l| {
        to_groth(alg, &RingElement::from_label(l.clone()))
    })
}

/// Fully parenthesized debug form.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(k) => write!(f, "{k}"),
            Expr::Label(l) => write!(f, "{l:?}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Pow(a, k) => write!(f, "({a}^{k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfore::greenring::GrothElement;
    use hopfore::grouprep::dihedral_algebra;

    #[test]
    fn grammar() {
        let alg = dihedral_algebra(3).unwrap();
        let e = parse("V[3](1) * V[2](eps;1)", &alg).unwrap();
        assert!(matches!(e, Expr::Mul(..)));
        let zero = parse("x^3 - 3*x - (1+lam)*chi", &alg).unwrap();
        assert_eq!(eval_groth(&zero, &alg).unwrap(), GrothElement::zero());
        let f = parse("chi*x - (x^2 - (1+lam))", &alg).unwrap();
        assert_eq!(eval_groth(&f, &alg).unwrap(), GrothElement::zero());
        let e = parse("-x + 2", &alg).unwrap();
        assert_eq!(eval_groth(&e, &alg).unwrap().display(&alg), "2 - V[1](1)");
    }

    #[test]
    fn zero_beta_rejected() {
        let alg = dihedral_algebra(3).unwrap();
        match parse("V[2](eps;0)", &alg) {
            Err(ExprError::Syntax { pos, message }) => {
                assert_eq!(pos, 9);
                assert!(message.contains("V[4](eps)"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_have_positions() {
        let alg = dihedral_algebra(3).unwrap();
        assert_eq!(
            parse("x + foo", &alg),
            Err(ExprError::UnknownLabel {
                pos: 4,
                name: "foo".into()
            })
        );
        assert!(matches!(
            parse("x +", &alg),
            Err(ExprError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse("V[0](eps)", &alg),
            Err(ExprError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse("x )", &alg),
            Err(ExprError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse("V[2](9)", &alg),
            Err(ExprError::UnknownLabel { .. })
        ));
    }

    #[test]
    fn aliases() {
        let alg = dihedral_algebra(3).unwrap();
        let eps = alg.trivial();
        let beta = Cyclotomic::from_integer(alg.order(), 2);
        let w = IndecLabel::Eig { i: eps, t: 1, beta };
        assert_eq!(parse_label("w[2]", &alg).unwrap(), w);
        assert_eq!(parse_label("y[2]", &alg).unwrap(), w);
        assert_eq!(
            parse_label("z", &alg).unwrap(),
            IndecLabel::Nil { i: eps, t: 3 }
        );
        assert_eq!(parse_label("V[1](chi;2)", &alg).unwrap(), w);
    }

    #[test]
    fn print_parse_round_trip() {
        let alg = dihedral_algebra(5).unwrap();
        let betas = ["1", "-1", "1/2", "w", "1 + w^2", "-2/3*w^3"];
        let mut labels = Vec::new();
        for i in alg.simple_ids() {
            labels.push(IndecLabel::Nil { i, t: 2 });
        }
        for i in alg.orbit_reps() {
            for b in betas {
                labels.push(IndecLabel::Eig {
                    i,
                    t: 3,
                    beta: Cyclotomic::parse(b, alg.order()).unwrap(),
                });
            }
        }
        for l in &labels {
            let text = l.display(&alg);
            assert_eq!(parse_label(&text, &alg).unwrap(), *l, "{text}");
        }
        let e = eval_green(&parse("x*x*y + 3*w[1/2] - chi*z", &alg).unwrap(), &alg).unwrap();
        let text = e.display(&alg);
        assert_eq!(
            eval_green(&parse(&text, &alg).unwrap(), &alg).unwrap(),
            e,
            "{text}"
        );
    }
}
