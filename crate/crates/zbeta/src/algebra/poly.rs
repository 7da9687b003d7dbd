use super::VarId;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A power product with integer (possibly negative) exponents.
/// Invariant: no stored zero exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<VarId, i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: VarId, exp: i64) -> Self {
        let mut m = BTreeMap::new();
        if exp != 0 {
            m.insert(v, exp);
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&VarId, i64)> {
        self.0.iter().map(|(v, &e)| (v, e))
    }

    pub fn exponent(&self, v: &VarId) -> i64 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, &e) in &other.0 {
            let slot = out.entry(v.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.remove(v);
            }
        }
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, &e)| (v.clone(), -e)).collect())
    }

    /// Map each variable through `f`, adding exponents on collisions.
    pub fn map_vars(&self, f: impl Fn(&VarId) -> VarId) -> Monomial {
        let mut out: BTreeMap<VarId, i64> = BTreeMap::new();
        for (v, &e) in &self.0 {
            let w = f(v);
            let slot = out.entry(w).or_insert(0);
            *slot += e;
        }
        out.retain(|_, e| *e != 0);
        Monomial(out)
    }
}

/// Graded-lexicographic order: total degree first, then the exponent of
/// the smallest variable where the monomials differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let vars: BTreeSet<&VarId> = self.0.keys().chain(other.0.keys()).collect();
        for v in vars {
            match self.exponent(v).cmp(&other.exponent(v)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate Laurent polynomial with arbitrary-precision
/// integer coefficients. Invariant: no stored zero coefficient; the empty
/// map is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::constant_big(BigInt::from(c))
    }

    pub fn constant_big(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        Self::term(BigInt::one(), Monomial::var(v, 1))
    }

    /// `T_i` for a strand label.
    pub fn strand(i: crate::Label) -> Self {
        Self::var(VarId::Strand(i))
    }

    pub fn term(coeff: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(v: VarId, exp: i64) -> Self {
        Self::term(BigInt::one(), Monomial::var(v, exp))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True iff the polynomial is a single term `c * m`.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, coeff: BigInt, m: Monomial) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn support_vars(&self) -> BTreeSet<VarId> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (v, _) in m.exponents() {
                out.insert(v.clone());
            }
        }
        out
    }

    /// Replace variables by variables; exponents of collided variables add
    /// within each monomial, and terms may merge or cancel afterwards.
    pub fn substitute(&self, mapping: &BTreeMap<VarId, VarId>) -> LaurentPoly {
        if mapping.is_empty() {
            return self.clone();
        }
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let m2 = m.map_vars(|v| mapping.get(v).cloned().unwrap_or_else(|| v.clone()));
            out.add_term(c.clone(), m2);
        }
        out
    }

    /// Set one variable to 1 (drop it from every monomial).
    pub fn set_var_to_one(&self, v: &VarId) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let m2 = Monomial(
                m.0.iter()
                    .filter(|(w, _)| *w != v)
                    .map(|(w, &e)| (w.clone(), e))
                    .collect(),
            );
            out.add_term(c.clone(), m2);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.mul(m), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, a)| (k.clone(), a * c))
            .collect();
        LaurentPoly { terms }
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide all coefficients by `d` exactly. Panics if not exact.
    pub fn div_content(&self, d: &BigInt) -> LaurentPoly {
        assert!(!d.is_zero());
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let (q, r) = c.div_rem(d);
                assert!(r.is_zero(), "non-exact content division");
                (k.clone(), q)
            })
            .collect();
        LaurentPoly { terms }
    }

    /// Coefficient of the graded-lex greatest monomial (zero poly: 0).
    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// For each variable, its minimum exponent across all terms; the
    /// monomial of those minima is the "monomial content".
    pub fn monomial_content(&self) -> Monomial {
        let mut out = BTreeMap::new();
        for v in self.support_vars() {
            let lo = self
                .terms
                .keys()
                .map(|m| m.exponent(&v))
                .min()
                .unwrap_or(0);
            if lo != 0 {
                out.insert(v, lo);
            }
        }
        Monomial(out)
    }

    /// If the polynomial involves at most one variable, return its dense
    /// description `(var, min_exp, coeffs)` with `coeffs[0]` the
    /// coefficient of `var^min_exp`. The zero polynomial yields
    /// `(None, 0, [])`; a constant yields `(None, 0, [c])`.
    pub fn as_univariate(&self) -> Option<(Option<VarId>, i64, Vec<BigInt>)> {
        let vars = self.support_vars();
        if vars.len() > 1 {
            return None;
        }
        let var = vars.into_iter().next();
        if self.is_zero() {
            return Some((var, 0, vec![]));
        }
        match var {
            None => Some((None, 0, vec![self.terms.values().next().unwrap().clone()])),
            Some(v) => {
                let lo = self.terms.keys().map(|m| m.exponent(&v)).min().unwrap();
                let hi = self.terms.keys().map(|m| m.exponent(&v)).max().unwrap();
                let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (m, c) in &self.terms {
                    coeffs[(m.exponent(&v) - lo) as usize] = c.clone();
                }
                Some((Some(v), lo, coeffs))
            }
        }
    }

    /// Rebuild from a dense univariate description.
    pub fn from_univariate(var: Option<&VarId>, lo: i64, coeffs: &[BigInt]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = lo + i as i64;
            let m = match var {
                Some(v) if e != 0 => Monomial::var(v.clone(), e),
                _ => Monomial::one(),
            };
            out.add_term(c.clone(), m);
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), m.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }
}

/// Exact division in the univariate (Laurent) ring: `a / b` when the
/// remainder is zero. Returns None on inexact division or when the inputs
/// are not univariate in a common variable.
pub fn univar_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let (va, la, ca) = a.as_univariate()?;
    let (vb, lb, cb) = b.as_univariate()?;
    let var = match (&va, &vb) {
        (Some(x), Some(y)) if x != y => return None,
        (Some(x), _) => Some(x.clone()),
        (_, Some(y)) => Some(y.clone()),
        (None, None) => None,
    };
    let mut rem = ca;
    let db = cb.len() - 1;
    if rem.len() < cb.len() {
        return None;
    }
    let mut quo = vec![BigInt::zero(); rem.len() - db];
    for i in (0..quo.len()).rev() {
        let top = rem[i + db].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(&cb[db]);
        if !r.is_zero() {
            return None;
        }
        quo[i] = q.clone();
        for (j, c) in cb.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(LaurentPoly::from_univariate(var.as_ref(), la - lb, &quo))
}


fn deg_in(p: &LaurentPoly, x: &VarId) -> i64 {
    p.terms.keys().map(|m| m.exponent(x)).max().unwrap_or(0)
}

/// The coefficient of x^d, with the power of x divided out.
fn coeff_of(p: &LaurentPoly, x: &VarId, d: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (m, c) in &p.terms {
        if m.exponent(x) == d {
            out.add_term(c.clone(), m.mul(&Monomial::var(x.clone(), -d)));
        }
    }
    out
}

/// Gcd of the x-coefficients of a true polynomial.
fn cont_in(p: &LaurentPoly, x: &VarId) -> LaurentPoly {
    let degs: BTreeSet<i64> = p.terms.keys().map(|m| m.exponent(x)).collect();
    let mut g = LaurentPoly::zero();
    for d in degs {
        g = mv_gcd(&g, &coeff_of(p, x, d));
        if g.is_one() {
            break;
        }
    }
    g
}

/// Pseudo-remainder with respect to x: repeatedly scales by lc_x(g) and
/// subtracts a multiple of g until deg_x drops below deg_x(g).
fn pseudo_rem_in(f: &LaurentPoly, g: &LaurentPoly, x: &VarId) -> LaurentPoly {
    let d = deg_in(g, x);
    let lcg = coeff_of(g, x, d);
    let mut r = f.clone();
    while !r.is_zero() && deg_in(&r, x) >= d {
        let k = deg_in(&r, x);
        let lcr = coeff_of(&r, x, k);
        let shift = LaurentPoly::term(BigInt::one(), Monomial::var(x.clone(), k - d));
        let sub = &(g * &lcr) * &shift;
        r = &(&r * &lcg) - &sub;
    }
    r
}

/// Exact division `a / b` in the multivariate Laurent ring. None when the
/// division is inexact (or is not detected as exact; see the monomial
/// content caveat in `mv_gcd`).
pub fn mv_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let pa = a.mul_monomial(&ma.inverse());
    let pb = b.mul_monomial(&mb.inverse());
    let shift = ma.mul(&mb.inverse());
    let (lmb, lcb) = {
        let (m, c) = pb.terms.iter().next_back().expect("nonzero divisor");
        (m.clone(), c.clone())
    };
    let mut r = pa;
    let mut q = LaurentPoly::zero();
    while !r.is_zero() {
        let (lmr, lcr) = {
            let (m, c) = r.terms.iter().next_back().expect("nonzero remainder");
            (m.clone(), c.clone())
        };
        let tm = lmr.mul(&lmb.inverse());
        if tm.exponents().any(|(_, e)| e < 0) {
            return None;
        }
        let (qc, rem) = lcr.div_rem(&lcb);
        if rem.is_zero() && !qc.is_zero() {
            let t = LaurentPoly::term(qc, tm);
            q = &q + &t;
            r = &r - &(&t * &pb);
        } else {
            return None;
        }
    }
    Some(q.mul_monomial(&shift))
}

/// Multivariate gcd over Z, up to monomial factors: monomial content is
/// stripped from both inputs first, so the result is a true polynomial
/// with positive leading coefficient. Recursive primitive PRS in a chosen
/// main variable.
pub fn mv_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let strip = |p: &LaurentPoly| p.mul_monomial(&p.monomial_content().inverse());
    if a.is_zero() && b.is_zero() {
        return LaurentPoly::zero();
    }
    if a.is_zero() {
        return positive_leading(strip(b));
    }
    if b.is_zero() {
        return positive_leading(strip(a));
    }
    gcd_poly(&strip(a), &strip(b))
}

fn positive_leading(p: LaurentPoly) -> LaurentPoly {
    let negative = p
        .terms
        .iter()
        .next_back()
        .map_or(false, |(_, c)| c.is_negative());
    if negative {
        -&p
    } else {
        p
    }
}

fn gcd_poly(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ica = a.content();
    let icb = b.content();
    let ic = ica.gcd(&icb);
    let pa = a.div_content(&ica);
    let pb = b.div_content(&icb);
    let vars_a = pa.support_vars();
    let vars_b = pb.support_vars();
    let common: Vec<VarId> = vars_a.intersection(&vars_b).cloned().collect();
    if common.is_empty() {
        return LaurentPoly::constant_big(ic);
    }
    // shortest primitive remainder sequence: smallest shared degree first
    let x = common
        .iter()
        .min_by_key(|v| deg_in(&pa, v).min(deg_in(&pb, v)))
        .expect("nonempty")
        .clone();
    let ca = cont_in(&pa, &x);
    let cb = cont_in(&pb, &x);
    let cg = gcd_poly(&ca, &cb);
    let fa = mv_div_exact(&pa, &ca).expect("content divides");
    let fb = mv_div_exact(&pb, &cb).expect("content divides");
    let (mut f, mut g) = if deg_in(&fa, &x) >= deg_in(&fb, &x) {
        (fa, fb)
    } else {
        (fb, fa)
    };
    loop {
        if deg_in(&g, &x) == 0 {
            // coprime in x: the gcd is carried entirely by the contents
            return positive_leading(&cg * &LaurentPoly::constant_big(ic));
        }
        let r = pseudo_rem_in(&f, &g, &x);
        if r.is_zero() {
            break;
        }
        let rc = cont_in(&r, &x);
        f = g;
        g = mv_div_exact(&r, &rc).expect("content divides");
    }
    positive_leading(&(&cg * &g) * &LaurentPoly::constant_big(ic))
}

const PROBE_PRIME: u64 = 1_000_000_007;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn big_mod(c: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    let mut v = (c % BigInt::from(p)).to_i64().expect("reduced mod p");
    if v < 0 {
        v += p as i64;
    }
    v as u64
}

/// Dense coefficients in x mod p after substituting `assign` for the other
/// variables. Requires nonnegative exponents.
fn eval_univar_mod(
    poly: &LaurentPoly,
    x: &VarId,
    assign: &BTreeMap<VarId, u64>,
    p: u64,
) -> Vec<u64> {
    let d = deg_in(poly, x).max(0) as usize;
    let mut out = vec![0u64; d + 1];
    for (m, c) in &poly.terms {
        let mut v = big_mod(c, p);
        let mut ex = 0usize;
        for (var, e) in m.exponents() {
            if var == x {
                ex = e as usize;
            } else {
                let a = assign.get(var).copied().unwrap_or(1);
                v = v * pow_mod(a, e as u64, p) % p;
            }
        }
        out[ex] = (out[ex] + v) % p;
    }
    out
}

fn gcd_deg_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // reduce a mod b
        let lb_inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !a.is_empty() {
            let k = a.len() - b.len();
            let f = *a.last().unwrap() * lb_inv % p;
            for (j, bc) in b.iter().enumerate() {
                a[k + j] = (a[k + j] + p - f * bc % p) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
        trim(&mut b);
    }
    a.len().saturating_sub(1)
}

/// A shared nonconstant polynomial factor of `a` and `b`, or None. A cheap
/// modular image check runs first, so the coprime case (the common one)
/// never pays for a full gcd; a vanishingly unlikely unlucky evaluation can
/// only miss a cancellation, never produce a wrong factor.
pub fn common_factor(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let pa = a.mul_monomial(&a.monomial_content().inverse());
    let pb = b.mul_monomial(&b.monomial_content().inverse());
    let vars_a = pa.support_vars();
    let vars_b = pb.support_vars();
    let common: Vec<&VarId> = vars_a.intersection(&vars_b).collect();
    if common.is_empty() {
        return None;
    }
    let all_vars: BTreeSet<&VarId> = vars_a.union(&vars_b).collect();
    let mut seed = 0x9e3779b97f4a7c15u64
        ^ (pa.num_terms() as u64) << 32
        ^ pb.num_terms() as u64;
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        2 + seed % (PROBE_PRIME - 4)
    };
    let mut maybe_shared = false;
    'vars: for &x in &common {
        for _ in 0..2 {
            let assign: BTreeMap<VarId, u64> = all_vars
                .iter()
                .filter(|&&v| v != x)
                .map(|&v| (v.clone(), next()))
                .collect();
            let ia = eval_univar_mod(&pa, x, &assign, PROBE_PRIME);
            let ib = eval_univar_mod(&pb, x, &assign, PROBE_PRIME);
            let full_a = ia.last() != Some(&0) && ia.len() as i64 == deg_in(&pa, x) + 1;
            let full_b = ib.last() != Some(&0) && ib.len() as i64 == deg_in(&pb, x) + 1;
            if !(full_a && full_b) {
                continue;
            }
            if gcd_deg_mod(ia, ib, PROBE_PRIME) == 0 {
                continue 'vars;
            }
            maybe_shared = true;
            break 'vars;
        }
        // leading coefficients kept vanishing: stay conservative
        maybe_shared = true;
        break;
    }
    if !maybe_shared {
        return None;
    }
    let g = mv_gcd(a, b);
    if g.num_terms() > 1 {
        Some(g)
    } else {
        None
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                let mut lead = true;
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                    lead = false;
                }
                for (v, e) in m.exponents() {
                    if !lead {
                        write!(f, "*")?;
                    }
                    lead = false;
                    if e == 1 {
                        write!(f, "{v}")?;
                    } else {
                        write!(f, "{v}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
