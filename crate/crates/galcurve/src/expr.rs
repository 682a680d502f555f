//! A small expression language in one variable `s`, used wherever curvature
//! or torsion enters as text (the CLI, curve specs, the demo page).
//!
//! Grammar, with `+ - * /` left-associative and `^` right-associative:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' factor)?
//! atom   := number | 's' | func '(' expr ')' | '(' expr ')'
//! func   := sin | cos | tan | exp | ln | sqrt | abs
//! ```
//!
//! Exponentiation binds tighter than unary minus, so `-2^2` is `-(2^2) = -4`
//! and `(-2)^2` is `4`. Parse and evaluation errors carry the byte offset of
//! the offending token.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        expected: &'static str,
        found: String,
    },
    #[error("unknown identifier '{name}' at byte {offset}")]
    UnknownIdentifier { offset: usize, name: String },
    #[error("bad number literal at byte {offset}")]
    BadNumber { offset: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero at byte {offset}")]
    DivisionByZero { offset: usize },
    #[error("logarithm of a non-positive value at byte {offset}")]
    LogDomain { offset: usize },
    #[error("square root of a negative value at byte {offset}")]
    SqrtDomain { offset: usize },
    #[error("non-finite result at byte {offset}")]
    NonFinite { offset: usize },
}

impl EvalError {
    /// True for the errors caused by evaluating outside a function's
    /// mathematical domain (as opposed to overflow).
    pub fn is_domain_fault(&self) -> bool {
        !matches!(self, EvalError::NonFinite { .. })
    }

    pub fn offset(&self) -> usize {
        match *self {
            EvalError::DivisionByZero { offset }
            | EvalError::LogDomain { offset }
            | EvalError::SqrtDomain { offset }
            | EvalError::NonFinite { offset } => offset,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone)]
struct Node {
    kind: NodeKind,
    /// Byte offset of the token that produced this node; reported by
    /// evaluation errors.
    offset: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum NodeKind {
    Number(f64),
    Var,
    Neg(Box<Node>),
    Bin(BinOp, Box<Node>, Box<Node>),
    Call(Func, Box<Node>),
}

// Structural equality: offsets are ignored at every level (NodeKind's derived
// PartialEq recurses through this impl for its Box<Node> fields).
impl PartialEq for Node {
    fn eq(&self, other: &Node) -> bool {
        self.kind == other.kind
    }
}

/// A parsed expression in the variable `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct Expression {
    root: Node,
}

pub fn parse(text: &str) -> Result<Expression, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let root = p.parse_expr()?;
    if p.peek().is_some() {
        return Err(ParseError::Syntax {
            offset: p.pos,
            expected: "an operator or end of input",
            found: p.found(),
        });
    }
    Ok(Expression { root })
}

impl Expression {
    /// Evaluates the expression at `s`. Every intermediate result is checked
    /// for finiteness, so overflow surfaces as [`EvalError::NonFinite`]
    /// rather than leaking infinities.
    pub fn eval(&self, s: f64) -> Result<f64, EvalError> {
        eval_node(&self.root, s)
    }
}

fn eval_node(n: &Node, s: f64) -> Result<f64, EvalError> {
    let v = match &n.kind {
        NodeKind::Number(x) => *x,
        NodeKind::Var => s,
        NodeKind::Neg(a) => -eval_node(a, s)?,
        NodeKind::Bin(op, a, b) => {
            let x = eval_node(a, s)?;
            let y = eval_node(b, s)?;
            match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
                BinOp::Div => {
                    if y == 0.0 {
                        return Err(EvalError::DivisionByZero { offset: n.offset });
                    }
                    x / y
                }
                BinOp::Pow => x.powf(y),
            }
        }
        NodeKind::Call(f, a) => {
            let x = eval_node(a, s)?;
            match f {
                Func::Sin => x.sin(),
                Func::Cos => x.cos(),
                Func::Tan => x.tan(),
                Func::Exp => x.exp(),
                Func::Ln => {
                    if x <= 0.0 {
                        return Err(EvalError::LogDomain { offset: n.offset });
                    }
                    x.ln()
                }
                Func::Sqrt => {
                    if x < 0.0 {
                        return Err(EvalError::SqrtDomain { offset: n.offset });
                    }
                    x.sqrt()
                }
                Func::Abs => x.abs(),
            }
        }
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::NonFinite { offset: n.offset })
    }
}

// ---------------------------------------------------------------------------
// Parsing

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Skips whitespace and returns the next byte without consuming it.
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    /// Human-readable description of whatever sits at the cursor.
    fn found(&self) -> String {
        match self.src[self.pos..].chars().next() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn syntax(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            expected,
            found: self.found(),
        }
    }

    fn expect(&mut self, byte: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(expected))
        }
    }

    fn parse_expr(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.parse_term()?;
        loop {
            let op = match self.peek() {
                Some(b'+') => BinOp::Add,
                Some(b'-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let offset = self.pos;
            self.pos += 1;
            let rhs = self.parse_term()?;
            lhs = Node {
                kind: NodeKind::Bin(op, Box::new(lhs), Box::new(rhs)),
                offset,
            };
        }
    }

    fn parse_term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.parse_factor()?;
        loop {
            let op = match self.peek() {
                Some(b'*') => BinOp::Mul,
                Some(b'/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            let offset = self.pos;
            self.pos += 1;
            let rhs = self.parse_factor()?;
            lhs = Node {
                kind: NodeKind::Bin(op, Box::new(lhs), Box::new(rhs)),
                offset,
            };
        }
    }

    // factor := '-' factor | atom ('^' factor)?
    //
    // The '-' branch recurses below '^', which is what makes -2^2 parse as
    // -(2^2); a '-' inside an exponent (2^-3) also lands here.
    fn parse_factor(&mut self) -> Result<Node, ParseError> {
        if self.peek() == Some(b'-') {
            let offset = self.pos;
            self.pos += 1;
            let inner = self.parse_factor()?;
            return Ok(Node {
                kind: NodeKind::Neg(Box::new(inner)),
                offset,
            });
        }
        let base = self.parse_atom()?;
        if self.peek() == Some(b'^') {
            let offset = self.pos;
            self.pos += 1;
            let exponent = self.parse_factor()?;
            return Ok(Node {
                kind: NodeKind::Bin(BinOp::Pow, Box::new(base), Box::new(exponent)),
                offset,
            });
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Node, ParseError> {
        const EXPECTED: &str = "a number, 's', a function call, or '('";
        let c = match self.peek() {
            Some(c) => c,
            None => return Err(self.syntax(EXPECTED)),
        };
        match c {
            b'(' => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(b')', "')'")?;
                Ok(inner)
            }
            b'0'..=b'9' | b'.' => self.parse_number(),
            c if c.is_ascii_alphabetic() || c == b'_' => self.parse_ident(),
            _ => Err(self.syntax(EXPECTED)),
        }
    }

    fn parse_number(&mut self) -> Result<Node, ParseError> {
        let bytes = self.src.as_bytes();
        let start = self.pos;
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if bytes.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        // Exponent suffix, only if digits actually follow it.
        if matches!(bytes.get(self.pos), Some(b'e' | b'E')) {
            let mut ahead = self.pos + 1;
            if matches!(bytes.get(ahead), Some(b'+' | b'-')) {
                ahead += 1;
            }
            if matches!(bytes.get(ahead), Some(d) if d.is_ascii_digit()) {
                self.pos = ahead;
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            }
        }
        match self.src[start..self.pos].parse::<f64>() {
            Ok(v) => Ok(Node {
                kind: NodeKind::Number(v),
                offset: start,
            }),
            Err(_) => Err(ParseError::BadNumber { offset: start }),
        }
    }

    fn parse_ident(&mut self) -> Result<Node, ParseError> {
        let bytes = self.src.as_bytes();
        let start = self.pos;
        while self.pos < bytes.len()
            && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        if name == "s" {
            return Ok(Node {
                kind: NodeKind::Var,
                offset: start,
            });
        }
        if let Some(func) = Func::from_name(name) {
            self.expect(b'(', "'(' after function name")?;
            let arg = self.parse_expr()?;
            self.expect(b')', "')'")?;
            return Ok(Node {
                kind: NodeKind::Call(func, Box::new(arg)),
                offset: start,
            });
        }
        Err(ParseError::UnknownIdentifier {
            offset: start,
            name: name.to_string(),
        })
    }
}

// ---------------------------------------------------------------------------
// Printing

/// Binding strength used to decide parenthesization: add/sub 1, mul/div 2,
/// unary minus 3, pow 4, atoms 5. A node is parenthesized when its strength
/// is below what its context requires.
fn prec(n: &Node) -> u8 {
    match &n.kind {
        NodeKind::Number(v) if v.is_sign_negative() => 3,
        NodeKind::Number(_) | NodeKind::Var | NodeKind::Call(..) => 5,
        NodeKind::Neg(_) => 3,
        NodeKind::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
        NodeKind::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
        NodeKind::Bin(BinOp::Pow, ..) => 4,
    }
}

fn print_node(n: &Node, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parens = prec(n) < min;
    if parens {
        write!(out, "(")?;
    }
    match &n.kind {
        NodeKind::Number(v) => write!(out, "{v}")?,
        NodeKind::Var => write!(out, "s")?,
        NodeKind::Neg(a) => {
            write!(out, "-")?;
            print_node(a, 3, out)?;
        }
        NodeKind::Bin(op, a, b) => {
            let (sym, lmin, rmin) = match op {
                BinOp::Add => ("+", 1, 2),
                BinOp::Sub => ("-", 1, 2),
                BinOp::Mul => ("*", 2, 3),
                BinOp::Div => ("/", 2, 3),
                // Base must be an atom; the exponent admits any factor,
                // which keeps a^b^c right-associative on re-parse.
                BinOp::Pow => ("^", 5, 3),
            };
            print_node(a, lmin, out)?;
            write!(out, "{sym}")?;
            print_node(b, rmin, out)?;
        }
        NodeKind::Call(f, a) => {
            write!(out, "{}(", f.name())?;
            print_node(a, 0, out)?;
            write!(out, ")")?;
        }
    }
    if parens {
        write!(out, ")")?;
    }
    Ok(())
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print_node(&self.root, 0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eval_str(text: &str, s: f64) -> f64 {
        parse(text).unwrap().eval(s).unwrap()
    }

    #[test]
    fn arithmetic_precedence() {
        assert_eq!(eval_str("2+3*4", 0.0), 14.0);
        assert_eq!(eval_str("2*3+4", 0.0), 10.0);
        assert_eq!(eval_str("6/3/2", 0.0), 1.0);
        assert_eq!(eval_str("1-2-3", 0.0), -4.0);
        assert_eq!(eval_str("(2+3)*4", 0.0), 20.0);
    }

    #[test]
    fn power_is_right_associative_and_binds_above_unary_minus() {
        assert_eq!(eval_str("2^3^2", 0.0), 512.0);
        assert_eq!(eval_str("-2^2", 0.0), -4.0);
        assert_eq!(eval_str("(-2)^2", 0.0), 4.0);
        assert_eq!(eval_str("2^-3", 0.0), 0.125);
        assert_eq!(eval_str("-s^2", 3.0), -9.0);
    }

    #[test]
    fn functions_and_variable() {
        assert_eq!(eval_str("sin(0)", 0.0), 0.0);
        assert_eq!(eval_str("sqrt(abs(-9))", 0.0), 3.0);
        assert_eq!(eval_str("tan(0.5)", 0.0), 0.5f64.tan());
        assert_eq!(eval_str("exp(s)*cos(2*s)", 0.25), 0.25f64.exp() * 0.5f64.cos());
        assert_eq!(eval_str(" 1 + 2 * s ", 3.0), 7.0);
        assert!((eval_str("exp(ln(5))", 0.0) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn unary_minus_chains() {
        assert_eq!(eval_str("--5", 0.0), 5.0);
        assert_eq!(eval_str("3--5", 0.0), 8.0);
        assert_eq!(eval_str("-s", 2.0), -2.0);
    }

    #[test]
    fn truncated_call_reports_offset_of_missing_expression() {
        match parse("sin(") {
            Err(ParseError::Syntax { offset, found, .. }) => {
                assert_eq!(offset, 4);
                assert_eq!(found, "end of input");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn dangling_operator_reports_offset() {
        match parse("2*") {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn trailing_garbage_is_rejected() {
        assert!(matches!(
            parse("1)"),
            Err(ParseError::Syntax { offset: 1, .. })
        ));
    }

    #[test]
    fn unknown_identifier_is_reported_with_its_name() {
        match parse("foo(1)") {
            Err(ParseError::UnknownIdentifier { offset, name }) => {
                assert_eq!(offset, 0);
                assert_eq!(name, "foo");
            }
            other => panic!("expected unknown identifier, got {other:?}"),
        }
    }

    #[test]
    fn missing_parenthesis_after_function_name() {
        assert!(matches!(
            parse("sin 1"),
            Err(ParseError::Syntax {
                offset: 4,
                expected: "'(' after function name",
                ..
            })
        ));
    }

    #[test]
    fn division_by_zero_carries_operator_offset() {
        let e = parse("1/(s-2)").unwrap();
        assert_eq!(e.eval(2.0), Err(EvalError::DivisionByZero { offset: 1 }));
        assert_eq!(e.eval(3.0), Ok(1.0));
    }

    #[test]
    fn domain_faults() {
        let e = parse("ln(s)").unwrap();
        assert_eq!(e.eval(-1.0), Err(EvalError::LogDomain { offset: 0 }));
        assert_eq!(e.eval(0.0), Err(EvalError::LogDomain { offset: 0 }));
        let e = parse("sqrt(s)").unwrap();
        assert_eq!(e.eval(-4.0), Err(EvalError::SqrtDomain { offset: 0 }));
        assert!(EvalError::SqrtDomain { offset: 0 }.is_domain_fault());
    }

    #[test]
    fn overflow_is_caught_as_non_finite() {
        let e = parse("exp(s)").unwrap();
        assert_eq!(e.eval(1000.0), Err(EvalError::NonFinite { offset: 0 }));
        assert!(!EvalError::NonFinite { offset: 0 }.is_domain_fault());
        let e = parse("s^s").unwrap();
        assert!(matches!(e.eval(400.0), Err(EvalError::NonFinite { .. })));
    }

    #[test]
    fn printing_inserts_only_needed_parentheses() {
        for (src, printed) in [
            ("2+3*4", "2+3*4"),
            ("(2+3)*4", "(2+3)*4"),
            ("-2^2", "-2^2"),
            ("(-2)^2", "(-2)^2"),
            ("2^(3^2)", "2^3^2"),
            ("(2^3)^2", "(2^3)^2"),
            ("1-(2-3)", "1-(2-3)"),
            ("1-2-3", "1-2-3"),
            ("s/(2*s)", "s/(2*s)"),
            ("sin(s)^2+cos(s)^2", "sin(s)^2+cos(s)^2"),
            ("-(s+1)", "-(s+1)"),
            ("exp(-s)", "exp(-s)"),
        ] {
            assert_eq!(parse(src).unwrap().to_string(), printed, "source {src:?}");
        }
    }

    #[test]
    fn structural_equality_ignores_whitespace_and_redundant_parens() {
        assert_eq!(parse("1 + s").unwrap(), parse("((1)+(s))").unwrap());
        assert_ne!(parse("1+s").unwrap(), parse("s+1").unwrap());
    }

    // -----------------------------------------------------------------------
    // Randomized round trips

    #[derive(Debug, Clone)]
    enum Shape {
        Num(f64),
        Var,
        Neg(Box<Shape>),
        Bin(u8, Box<Shape>, Box<Shape>),
        Call(u8, Box<Shape>),
    }

    fn to_node(s: &Shape) -> Node {
        let kind = match s {
            Shape::Num(v) => NodeKind::Number(*v),
            Shape::Var => NodeKind::Var,
            Shape::Neg(a) => NodeKind::Neg(Box::new(to_node(a))),
            Shape::Bin(op, a, b) => {
                let op = [BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div, BinOp::Pow]
                    [*op as usize % 5];
                NodeKind::Bin(op, Box::new(to_node(a)), Box::new(to_node(b)))
            }
            Shape::Call(f, a) => {
                let f = [
                    Func::Sin,
                    Func::Cos,
                    Func::Tan,
                    Func::Exp,
                    Func::Ln,
                    Func::Sqrt,
                    Func::Abs,
                ][*f as usize % 7];
                NodeKind::Call(f, Box::new(to_node(a)))
            }
        };
        Node { kind, offset: 0 }
    }

    fn arb_shape() -> impl Strategy<Value = Shape> {
        let leaf = prop_oneof![
            (0u32..100_000u32).prop_map(|n| Shape::Num(n as f64 / 100.0)),
            Just(Shape::Var),
        ];
        leaf.prop_recursive(5, 48, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| Shape::Neg(Box::new(a))),
                (any::<u8>(), inner.clone(), inner.clone())
                    .prop_map(|(op, a, b)| Shape::Bin(op, Box::new(a), Box::new(b))),
                (any::<u8>(), inner).prop_map(|(f, a)| Shape::Call(f, Box::new(a))),
            ]
        })
    }

    proptest! {
        /// Printing any tree and re-parsing the text recovers the tree.
        #[test]
        fn print_parse_round_trip(shape in arb_shape()) {
            let tree = Expression { root: to_node(&shape) };
            let printed = tree.to_string();
            let reparsed = parse(&printed)
                .unwrap_or_else(|e| panic!("reparse of {printed:?} failed: {e}"));
            prop_assert_eq!(reparsed, tree);
        }

        /// Evaluation never returns a non-finite number without erroring.
        #[test]
        fn eval_is_finite_or_errors(shape in arb_shape(), s in -10.0..10.0f64) {
            let tree = Expression { root: to_node(&shape) };
            if let Ok(v) = tree.eval(s) {
                prop_assert!(v.is_finite());
            }
        }
    }
}
