use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{NumericError, Rational};

/// Exact sign of a real number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn from_i32(v: i32) -> Sign {
        match v.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        Sign::from_i32(-self.as_i32())
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i32(self.as_i32() * rhs.as_i32())
    }
}

fn is_square_free(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// The field `Q(√d1, √d2)` a [`QuadExt`] lives in.
///
/// `d2 = 1` is the quadratic field `Q(√d1)`; `(1, 1)` is `Q` itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldContext {
    d1: u64,
    d2: u64,
}

impl FieldContext {
    pub const RATIONAL: FieldContext = FieldContext { d1: 1, d2: 1 };

    pub fn new(d1: u64, d2: u64) -> Result<FieldContext, NumericError> {
        for d in [d1, d2] {
            if !is_square_free(d) {
                return Err(NumericError::NotSquareFree(d));
            }
        }
        if d1 == d2 && d1 != 1 {
            return Err(NumericError::RepeatedRadicand(d1));
        }
        let (d1, d2) = if d1 == 1 { (d2, d1) } else { (d1, d2) };
        Ok(FieldContext { d1, d2 })
    }

    /// `Q(√d)`.
    pub fn quadratic(d: u64) -> Result<FieldContext, NumericError> {
        FieldContext::new(d, 1)
    }

    pub fn d1(self) -> u64 {
        self.d1
    }

    pub fn d2(self) -> u64 {
        self.d2
    }

    pub fn is_rational(self) -> bool {
        self.d1 == 1
    }

    /// Smallest context containing both, if one of them is `Q`.
    pub fn join(self, other: FieldContext) -> Result<FieldContext, NumericError> {
        if self == other || other.is_rational() {
            Ok(self)
        } else if self.is_rational() {
            Ok(other)
        } else {
            Err(NumericError::ContextMismatch {
                left: self,
                right: other,
            })
        }
    }

    /// `√d1` as an element of this context.
    pub fn sqrt_d1(self) -> QuadExt {
        QuadExt::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero(), self)
    }

    /// `√d2` as an element of this context.
    pub fn sqrt_d2(self) -> QuadExt {
        QuadExt::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero(), self)
    }

    /// `√(d1·d2)` as an element of this context.
    pub fn sqrt_d1d2(self) -> QuadExt {
        QuadExt::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one(), self)
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.d1, self.d2) {
            (1, 1) => write!(f, "Q"),
            (d, 1) => write!(f, "Q(√{d})"),
            (a, b) => write!(f, "Q(√{a},√{b})"),
        }
    }
}

/// Exact element `a + b√d1 + c√d2 + e√(d1·d2)` of a real biquadratic field.
///
/// Elements of `Q` (context `(1, 1)`) combine with any context. Arithmetic
/// between two different irrational contexts is rejected: the checked
/// methods return [`NumericError::ContextMismatch`], the operator impls
/// panic.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    c: Rational,
    e: Rational,
    ctx: FieldContext,
}

fn sign_of(r: &Rational) -> Sign {
    if r.is_zero() {
        Sign::Zero
    } else if r.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Sign of `p + q√d` for square-free `d`.
fn sign_simple(p: &Rational, q: &Rational, d: u64) -> Sign {
    let sp = sign_of(p);
    let sq = sign_of(q);
    if sq == Sign::Zero || sq == sp {
        return if sp == Sign::Zero { sq } else { sp };
    }
    if sp == Sign::Zero {
        return sq;
    }
    // opposite signs: the larger magnitude wins
    let lhs = p * p;
    let rhs = q * q * Rational::from_integer(BigInt::from(d));
    match lhs.cmp(&rhs) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => Sign::Zero,
    }
}

/// `Σ wᵢ·xᵢ·yᵢ`, skipping terms with a zero factor.
fn sum_products(terms: &[(i64, &Rational, &Rational)]) -> Rational {
    let mut acc: Option<Rational> = None;
    for (w, x, y) in terms {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let mut t = *x * *y;
        if *w != 1 {
            t *= Rational::from_integer(BigInt::from(*w));
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a + t,
        });
    }
    acc.unwrap_or_else(Rational::zero)
}

fn add_coeff(x: &Rational, y: &Rational) -> Rational {
    if y.is_zero() {
        x.clone()
    } else if x.is_zero() {
        y.clone()
    } else {
        x + y
    }
}

fn sub_coeff(x: &Rational, y: &Rational) -> Rational {
    if y.is_zero() {
        x.clone()
    } else if x.is_zero() {
        -y
    } else {
        x - y
    }
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, c: Rational, e: Rational, ctx: FieldContext) -> QuadExt {
        let (a, b, c, e) = match (ctx.d1, ctx.d2) {
            (1, 1) => (a + b + c + e, Rational::zero(), Rational::zero(), Rational::zero()),
            (_, 1) => (a + c, b + e, Rational::zero(), Rational::zero()),
            _ => (a, b, c, e),
        };
        QuadExt { a, b, c, e, ctx }
    }

    pub fn from_rational(r: Rational) -> QuadExt {
        QuadExt::in_context(r, FieldContext::RATIONAL)
    }

    pub fn in_context(r: Rational, ctx: FieldContext) -> QuadExt {
        QuadExt {
            a: r,
            b: Rational::zero(),
            c: Rational::zero(),
            e: Rational::zero(),
            ctx,
        }
    }

    pub fn from_int(n: i64) -> QuadExt {
        QuadExt::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> QuadExt {
        QuadExt::from_int(0)
    }

    pub fn one() -> QuadExt {
        QuadExt::from_int(1)
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    /// Coefficients `(a, b, c, e)` on the basis `1, √d1, √d2, √(d1·d2)`.
    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.e]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    /// True when the value is rational, whatever the context.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Re-expresses `self` in `ctx`. Fails unless `self` already lives in
    /// `ctx` or is rational.
    pub fn lift_to(&self, ctx: FieldContext) -> Result<QuadExt, NumericError> {
        if self.ctx == ctx {
            return Ok(self.clone());
        }
        if self.is_rational() {
            return Ok(QuadExt::in_context(self.a.clone(), ctx));
        }
        Err(NumericError::ContextMismatch {
            left: self.ctx,
            right: ctx,
        })
    }

    fn common(&self, other: &QuadExt) -> Result<FieldContext, NumericError> {
        if self.ctx == other.ctx {
            return Ok(self.ctx);
        }
        match self.ctx.join(other.ctx) {
            Ok(ctx) => Ok(ctx),
            // a rational value tagged with an irrational context still mixes freely
            Err(_) if self.is_rational() => Ok(other.ctx),
            Err(_) if other.is_rational() => Ok(self.ctx),
            Err(err) => Err(err),
        }
    }

    pub fn checked_add(&self, other: &QuadExt) -> Result<QuadExt, NumericError> {
        let ctx = self.common(other)?;
        Ok(QuadExt {
            a: add_coeff(&self.a, &other.a),
            b: add_coeff(&self.b, &other.b),
            c: add_coeff(&self.c, &other.c),
            e: add_coeff(&self.e, &other.e),
            ctx,
        })
    }

    pub fn checked_sub(&self, other: &QuadExt) -> Result<QuadExt, NumericError> {
        let ctx = self.common(other)?;
        Ok(QuadExt {
            a: sub_coeff(&self.a, &other.a),
            b: sub_coeff(&self.b, &other.b),
            c: sub_coeff(&self.c, &other.c),
            e: sub_coeff(&self.e, &other.e),
            ctx,
        })
    }

    pub fn checked_mul(&self, other: &QuadExt) -> Result<QuadExt, NumericError> {
        let ctx = self.common(other)?;
        if ctx.is_rational() || (self.is_rational() && other.is_rational()) {
            return Ok(QuadExt::in_context(&self.a * &other.a, ctx));
        }
        if self.is_rational() || other.is_rational() {
            let (s, x) = if self.is_rational() { (&self.a, other) } else { (&other.a, self) };
            return Ok(QuadExt {
                a: s * &x.a,
                b: s * &x.b,
                c: s * &x.c,
                e: s * &x.e,
                ctx,
            });
        }
        let (x, y) = (self, other);
        let (d1, d2) = (ctx.d1 as i64, ctx.d2 as i64);
        let a = sum_products(&[(1, &x.a, &y.a), (d1, &x.b, &y.b), (d2, &x.c, &y.c), (d1 * d2, &x.e, &y.e)]);
        let b = sum_products(&[(1, &x.a, &y.b), (1, &x.b, &y.a), (d2, &x.c, &y.e), (d2, &x.e, &y.c)]);
        let c = sum_products(&[(1, &x.a, &y.c), (1, &x.c, &y.a), (d1, &x.b, &y.e), (d1, &x.e, &y.b)]);
        let e = sum_products(&[(1, &x.a, &y.e), (1, &x.e, &y.a), (1, &x.b, &y.c), (1, &x.c, &y.b)]);
        Ok(QuadExt { a, b, c, e, ctx })
    }

    /// Multiplicative inverse via the two Galois conjugations.
    pub fn checked_inv(&self) -> Result<QuadExt, NumericError> {
        if self.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(QuadExt::in_context(self.a.recip(), self.ctx));
        }
        // x * conj2(x) lies in Q(√d1); multiply by its conj1 to land in Q
        let c2 = self.conj_d2();
        let n = self.checked_mul(&c2)?;
        let c1 = n.conj_d1();
        let norm = n.checked_mul(&c1)?;
        let norm = norm.as_rational().cloned().expect("norm of field element is rational");
        let numer = c2.checked_mul(&c1)?;
        let s = norm.recip();
        Ok(QuadExt {
            a: &numer.a * &s,
            b: &numer.b * &s,
            c: &numer.c * &s,
            e: &numer.e * &s,
            ctx: self.ctx,
        })
    }

    pub fn checked_div(&self, other: &QuadExt) -> Result<QuadExt, NumericError> {
        self.common(other)?;
        self.checked_mul(&other.checked_inv()?)
    }

    /// `√d1 ↦ −√d1`.
    fn conj_d1(&self) -> QuadExt {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            e: -&self.e,
            ctx: self.ctx,
        }
    }

    /// `√d2 ↦ −√d2`.
    fn conj_d2(&self) -> QuadExt {
        QuadExt {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -&self.c,
            e: -&self.e,
            ctx: self.ctx,
        }
    }

    pub fn scale(&self, r: &Rational) -> QuadExt {
        QuadExt {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            e: &self.e * r,
            ctx: self.ctx,
        }
    }

    /// Exact sign, by writing the value as `X + Y√d2` with `X, Y ∈ Q(√d1)`
    /// and comparing `X²` against `d2·Y²` when `X` and `Y` disagree.
    pub fn sign(&self) -> Sign {
        let d1 = self.ctx.d1;
        let d2 = self.ctx.d2;
        let sx = sign_simple(&self.a, &self.b, d1);
        let sy = sign_simple(&self.c, &self.e, d1);
        if sy == Sign::Zero || sy == sx {
            return if sx == Sign::Zero { sy } else { sx };
        }
        if sx == Sign::Zero {
            return sy;
        }
        let d1r = Rational::from_integer(BigInt::from(d1));
        let d2r = Rational::from_integer(BigInt::from(d2));
        let two = Rational::from_integer(BigInt::from(2));
        // X² − d2·Y² = p + q√d1
        let p = &self.a * &self.a + &d1r * &self.b * &self.b
            - &d2r * (&self.c * &self.c + &d1r * &self.e * &self.e);
        let q = &two * (&self.a * &self.b - &d2r * &self.c * &self.e);
        match sign_simple(&p, &q, d1) {
            Sign::Positive => sx,
            Sign::Negative => sy,
            Sign::Zero => Sign::Zero,
        }
    }

    pub fn abs(&self) -> QuadExt {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    pub fn cmp_exact(&self, other: &QuadExt) -> Result<Ordering, NumericError> {
        Ok(match self.checked_sub(other)?.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
        let d1 = self.ctx.d1 as f64;
        let d2 = self.ctx.d2 as f64;
        f(&self.a) + f(&self.b) * d1.sqrt() + f(&self.c) * d2.sqrt() + f(&self.e) * (d1 * d2).sqrt()
    }

    /// `⌊self⌋`, exactly.
    pub fn floor(&self) -> BigInt {
        // fixed-point estimate of each term, within a couple of units of the
        // true floor, then corrected by exact comparison
        const BITS: u32 = 64;
        let scale = BigInt::one() << BITS;
        let d1 = BigInt::from(self.ctx.d1);
        let d2 = BigInt::from(self.ctx.d2);
        let radicands = [BigInt::one(), d1.clone(), d2.clone(), d1 * d2];
        let mut acc = BigInt::zero();
        for (coeff, m) in self.coefficients().into_iter().zip(radicands.iter()) {
            if coeff.is_zero() {
                continue;
            }
            let num = coeff.numer();
            let den = coeff.denom();
            // |num|·√m·2^BITS / den, rounded down in magnitude
            let mag = (num.abs() * num.abs() * m * &scale * &scale).sqrt() / den;
            acc += if num.sign() == BigSign::Minus { -mag } else { mag };
        }
        let mut n = num_integer::Integer::div_floor(&acc, &scale);
        let as_q = |n: &BigInt| QuadExt::from_rational(Rational::from_integer(n.clone()));
        while self.cmp_exact(&as_q(&n)).unwrap() == Ordering::Less {
            n -= 1;
        }
        while self
            .cmp_exact(&as_q(&(&n + 1)))
            .unwrap()
            != Ordering::Less
        {
            n += 1;
        }
        n
    }

    /// Decimal string with `sig` significant digits, rounded half to even,
    /// in plain positional notation.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        assert!(sig > 0);
        if self.is_zero() {
            return if sig == 1 { "0".to_string() } else { format!("0.{}", "0".repeat(sig - 1)) };
        }
        let negative = self.sign() == Sign::Negative;
        let v = self.abs();
        let ten = Rational::from_integer(BigInt::from(10));
        let pow10 = |k: i64| -> Rational {
            let mut r = Rational::one();
            for _ in 0..k.unsigned_abs() {
                r *= &ten;
            }
            if k < 0 {
                r.recip()
            } else {
                r
            }
        };
        let ge = |x: &QuadExt, r: &Rational| x.cmp_exact(&QuadExt::from_rational(r.clone())).unwrap() != Ordering::Less;
        let approx = v.to_f64();
        let mut exp = if approx.is_finite() && approx > 0.0 {
            approx.log10().floor() as i64
        } else {
            0
        };
        while !ge(&v, &pow10(exp)) {
            exp -= 1;
        }
        while ge(&v, &pow10(exp + 1)) {
            exp += 1;
        }
        let shift = sig as i64 - 1 - exp;
        let scaled = v.scale(&pow10(shift));
        let mut n = scaled.floor();
        let frac = scaled
            .checked_sub(&QuadExt::from_rational(Rational::from_integer(n.clone())))
            .unwrap();
        let half = QuadExt::from_rational(Rational::new(BigInt::one(), BigInt::from(2)));
        match frac.cmp_exact(&half).unwrap() {
            Ordering::Greater => n += 1,
            Ordering::Equal if num_integer::Integer::is_odd(&n) => n += 1,
            _ => {}
        }
        let mut digits = n.to_string();
        if digits.len() > sig {
            // rounding carried into a new leading digit
            digits.truncate(sig);
            exp += 1;
        }
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if int_len >= digits.len() {
                out.push_str(&digits);
                out.extend(std::iter::repeat_n('0', int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
            out.push_str(&digits);
        }
        out
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &QuadExt) -> bool {
        if self.is_rational() && other.is_rational() {
            return self.a == other.a;
        }
        self.ctx == other.ctx
            && self.a == other.a
            && self.b == other.b
            && self.c == other.c
            && self.e == other.e
    }
}

impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &QuadExt) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d1 = self.ctx.d1;
        let d2 = self.ctx.d2;
        let terms = [
            (&self.a, String::new()),
            (&self.b, format!("√{d1}")),
            (&self.c, format!("√{d2}")),
            (&self.e, format!("√{}", d1 * d2)),
        ];
        let mut first = true;
        for (coeff, radical) in terms {
            if coeff.is_zero() {
                continue;
            }
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if radical.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{radical}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{radical}")?;
            } else {
                write!(f, "({mag}){radical}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            e: -&self.e,
            ctx: self.ctx,
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> QuadExt {
        QuadExt::from_rational(r)
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> QuadExt {
        QuadExt::from_int(n)
    }
}
