use super::poly::{common_factor, mv_div_exact, LaurentPoly};
use super::{AlgebraError, VarId};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact ratio of Laurent polynomials.
///
/// Canonical form: the denominator is nonzero, carries no monomial content
/// (each variable's minimum exponent in it is 0), and its integer content
/// is positive. When numerator and denominator are univariate in a common
/// variable their polynomial gcd is cancelled as well; in the multivariate
/// case equality is still decided semantically by cross-multiplication, so
/// full gcd reduction is never required for correctness.
#[derive(Debug, Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RationalFn {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        // cancel the shared polynomial factor
        if !den.support_vars().is_empty() {
            if let Some(g) = common_factor(&num, &den) {
                if let (Some(n2), Some(d2)) = (mv_div_exact(&num, &g), mv_div_exact(&den, &g)) {
                    num = n2;
                    den = d2;
                }
            }
        }
        // factor the monomial content out of the denominator
        let mc = den.monomial_content();
        if !mc.is_one() {
            let inv = mc.inverse();
            den = den.mul_monomial(&inv);
            num = num.mul_monomial(&inv);
        }
        // shared integer content, and a positive denominator content
        let g = num.content().gcd(&den.content());
        if !g.is_one() && !g.is_zero() {
            num = num.div_content(&g);
            den = den.div_content(&g);
        }
        if den.leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        RationalFn { num, den }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn var(v: VarId) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    /// The strand variable `T_i`.
    pub fn strand(i: crate::Label) -> Self {
        Self::from_poly(LaurentPoly::strand(i))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn div(&self, rhs: &RationalFn) -> Result<RationalFn, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let flipped = RationalFn {
            num: rhs.den.clone(),
            den: rhs.num.clone(),
        };
        Ok(self * &flipped)
    }

    pub fn inverse(&self) -> Result<RationalFn, AlgebraError> {
        RationalFn::one().div(self)
    }

    /// Semantic equality: a/b = c/d iff a*d = c*b.
    pub fn rf_eq(&self, other: &RationalFn) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }

    /// Replace variables by variables in numerator and denominator. A
    /// non-injective mapping can annihilate the denominator, which is
    /// reported as `ZeroDenominator`.
    pub fn substitute(&self, mapping: &BTreeMap<VarId, VarId>) -> Result<RationalFn, AlgebraError> {
        let den = self.den.substitute(mapping);
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::normalized(self.num.substitute(mapping), den))
    }

    pub fn set_var_to_one(&self, v: &VarId) -> Result<RationalFn, AlgebraError> {
        let den = self.den.set_var_to_one(v);
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::normalized(self.num.set_var_to_one(v), den))
    }

    pub fn support_vars(&self) -> std::collections::BTreeSet<VarId> {
        let mut s = self.num.support_vars();
        s.extend(self.den.support_vars());
        s
    }

    /// The polynomial part when the denominator is a unit `+/- c * m`;
    /// None otherwise. (After normalization a unit denominator is a
    /// positive integer constant.)
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        let (m, c) = self.den.as_monomial()?;
        if !m.is_one() {
            return None;
        }
        if c.is_one() {
            return Some(self.num.clone());
        }
        // exact integer division or nothing
        let g = self.num.content();
        if (&g % c).is_zero() || g.is_zero() {
            Some(self.num.div_content(c))
        } else {
            None
        }
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.rf_eq(other)
    }
}

impl Eq for RationalFn {}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if let Some(g) = common_factor(&self.den, &rhs.den) {
            if let (Some(b0), Some(d0)) =
                (mv_div_exact(&self.den, &g), mv_div_exact(&rhs.den, &g))
            {
                return RationalFn::normalized(
                    &(&self.num * &d0) + &(&rhs.num * &b0),
                    &self.den * &d0,
                );
            }
        }
        RationalFn::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        let mut a = self.num.clone();
        let mut b = self.den.clone();
        let mut c = rhs.num.clone();
        let mut d = rhs.den.clone();
        if let Some(g) = common_factor(&a, &d) {
            if let (Some(a2), Some(d2)) = (mv_div_exact(&a, &g), mv_div_exact(&d, &g)) {
                a = a2;
                d = d2;
            }
        }
        if let Some(g) = common_factor(&c, &b) {
            if let (Some(c2), Some(b2)) = (mv_div_exact(&c, &g), mv_div_exact(&b, &g)) {
                c = c2;
                b = b2;
            }
        }
        RationalFn::normalized(&a * &c, &b * &d)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
