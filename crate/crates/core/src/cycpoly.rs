//! Exact integer polynomials in one and two variables, cyclotomic polynomials,
//! and evaluation at a primitive `k`-th root of unity.
//!
//! A primitive root of unity is represented by the class of `q` in
//! `Z[q] / (Phi_k(q))`, so every evaluation stays exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense univariate polynomial, index = exponent. Trailing zeros are trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        IntPoly::from_coeffs(coeffs)
    }

    /// `1 - x^exp`.
    pub fn one_minus_power(exp: usize) -> Self {
        &IntPoly::one() - &IntPoly::monomial(1, exp)
    }

    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = IntPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^exp`, zero past the degree.
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c))
    }

    pub fn pow(&self, mut e: usize) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Drops every term of degree above `order`.
    pub fn truncated(&self, order: usize) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().take(order + 1).cloned())
    }

    pub fn mul_truncated(&self, other: &IntPoly, order: usize) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(order + 1);
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Power series inverse up to `order`; requires constant term `+-1`.
    pub fn series_inverse(&self, order: usize) -> Option<IntPoly> {
        let c0 = self.coeff(0);
        if !(c0.is_one() || (-&c0).is_one()) {
            return None;
        }
        let mut inv: Vec<BigInt> = Vec::with_capacity(order + 1);
        inv.push(c0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for (j, a) in self.coeffs.iter().enumerate().skip(1).take(n) {
                acc += a * &inv[n - j];
            }
            // c0 is a unit equal to its own inverse
            inv.push(-(acc * &c0));
        }
        Some(IntPoly::from_coeffs(inv))
    }

    /// Quotient and remainder; `None` when some step needs a non-integral quotient.
    pub fn div_rem(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let d_deg = divisor.degree()?;
        let lead = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + d_deg];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let factor = top / lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &factor * c;
            }
            quot[i] = factor;
        }
        Some((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        match self.div_rem(divisor)? {
            (q, r) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Renders with variable name `var`, e.g. `t^4 - 2*t^3 + t^2`.
    pub fn to_string_in(&self, var: &str) -> String {
        let terms: Vec<(BigInt, String)> = self
            .terms()
            .rev()
            .map(|(e, c)| (c.clone(), power(var, e)))
            .collect();
        format_terms(&terms, " + ", " - ")
    }

    fn to_compact_string_in(&self, var: &str) -> String {
        let terms: Vec<(BigInt, String)> = self
            .terms()
            .rev()
            .map(|(e, c)| (c.clone(), power(var, e)))
            .collect();
        format_terms(&terms, "+", "-")
    }

    /// The single term, when there is exactly one.
    fn as_monomial(&self) -> Option<(usize, &BigInt)> {
        let mut it = self.terms();
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }
}

fn power(var: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

fn join_monomials(a: &str, b: &str) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_string(),
        (_, true) => a.to_string(),
        _ => format!("{a}*{b}"),
    }
}

/// Joins `coefficient * monomial` terms; an empty monomial means a constant.
fn format_terms(terms: &[(BigInt, String)], plus: &str, minus: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, mono)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(minus),
            (_, false) => out.push_str(plus),
        }
        let abs = c.abs();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.to_string_in("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) - other.coeff(i)))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        self.mul_truncated(other, self.coeffs.len() + other.coeffs.len())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c))
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, other: &IntPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

#[derive(Serialize, Deserialize)]
struct UniTerm {
    exp: usize,
    coeff: String,
}

impl Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<UniTerm> = self
            .terms()
            .map(|(exp, c)| UniTerm {
                exp,
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<UniTerm>::deserialize(d)?;
        let mut p = IntPoly::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            p += &IntPoly::monomial(c, t.exp);
        }
        Ok(p)
    }
}

/// Sparse polynomial in `q` and `t`, keyed by `(q exponent, t exponent)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(1, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, q_exp: usize, t_exp: usize) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(c, q_exp, t_exp);
        p
    }

    /// Embeds a polynomial in `t`.
    pub fn from_t_poly(p: &IntPoly) -> Self {
        let mut out = BiPoly::zero();
        for (e, c) in p.terms() {
            out.add_term(c.clone(), 0, e);
        }
        out
    }

    /// Embeds `p(q) * t^t_exp`.
    pub fn from_q_poly(p: &IntPoly, t_exp: usize) -> Self {
        let mut out = BiPoly::zero();
        for (e, c) in p.terms() {
            out.add_term(c.clone(), e, t_exp);
        }
        out
    }

    pub fn add_term(&mut self, c: impl Into<BigInt>, q_exp: usize, t_exp: usize) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((q_exp, t_exp)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    /// Nonzero terms as `((q exponent, t exponent), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, t)| t).max()
    }

    /// Coefficient of `t^t_exp` as a polynomial in `q`.
    pub fn t_coefficient(&self, t_exp: usize) -> IntPoly {
        let mut out = IntPoly::zero();
        for (&(qe, te), c) in &self.terms {
            if te == t_exp {
                out += &IntPoly::monomial(c.clone(), qe);
            }
        }
        out
    }

    /// Coefficients grouped by `t` exponent.
    pub fn by_t(&self) -> BTreeMap<usize, IntPoly> {
        let mut out: BTreeMap<usize, IntPoly> = BTreeMap::new();
        for (&(qe, te), c) in &self.terms {
            *out.entry(te).or_default() += &IntPoly::monomial(c.clone(), qe);
        }
        out
    }

    /// Multiplies by `q^q_exp * t^t_exp`.
    pub fn shifted(&self, q_exp: usize, t_exp: usize) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(qe, te), c)| ((qe + q_exp, te + t_exp), c.clone()))
                .collect(),
        }
    }

    pub fn truncated_t(&self, order: usize) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, te), _)| te <= order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Product, dropping terms with `t` exponent above `order`.
    pub fn mul_truncated_t(&self, other: &BiPoly, order: usize) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(qa, ta), a) in &self.terms {
            for (&(qb, tb), b) in &other.terms {
                if ta + tb <= order {
                    out.add_term(a * b, qa + qb, ta + tb);
                }
            }
        }
        out
    }

    /// `q = 1`.
    pub fn at_q_one(&self) -> IntPoly {
        let mut out = IntPoly::zero();
        for (&(_, te), c) in &self.terms {
            out += &IntPoly::monomial(c.clone(), te);
        }
        out
    }

    /// `t = 1`.
    pub fn at_t_one(&self) -> IntPoly {
        let mut out = IntPoly::zero();
        for (&(qe, _), c) in &self.terms {
            out += &IntPoly::monomial(c.clone(), qe);
        }
        out
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(qe, te), c) in &other.terms {
            out.add_term(c.clone(), qe, te);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, other: &BiPoly) -> BiPoly {
        self.mul_truncated_t(other, usize::MAX)
    }
}

impl fmt::Display for BiPoly {
    /// `q^12*t^4 + (q^10+q^9+q^8)*t^3 + q^6*t^2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups: Vec<(usize, String, Option<BigInt>)> = self
            .by_t()
            .into_iter()
            .rev()
            .map(|(te, coeff)| match coeff.as_monomial() {
                Some((qe, c)) => (te, power("q", qe), Some(c.clone())),
                None => (te, coeff.to_compact_string_in("q"), None),
            })
            .collect();
        f.write_str(&format_grouped(&groups))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// Terms in `t` whose coefficients are either a signed monomial (`Some(c)`,
/// with the monomial string in the middle slot) or a multi-term expression
/// that gets parenthesised (`None`).
fn format_grouped(groups: &[(usize, String, Option<BigInt>)]) -> String {
    if groups.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (te, body, scalar)) in groups.iter().enumerate() {
        let t = power("t", *te);
        match scalar {
            Some(c) => {
                let term = format_terms(&[(c.clone(), join_monomials(body, &t))], "", "");
                match (i, term.strip_prefix('-')) {
                    (0, _) => out.push_str(&term),
                    (_, Some(rest)) => {
                        out.push_str(" - ");
                        out.push_str(rest);
                    }
                    (_, None) => {
                        out.push_str(" + ");
                        out.push_str(&term);
                    }
                }
            }
            None => {
                if i > 0 {
                    out.push_str(" + ");
                }
                if t.is_empty() {
                    out.push_str(&format!("({body})"));
                } else {
                    out.push_str(&format!("({body})*{t}"));
                }
            }
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct BiTerm {
    q: usize,
    t: usize,
    coeff: String,
}

impl Serialize for BiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<BiTerm> = self
            .terms
            .iter()
            .map(|(&(q, t), c)| BiTerm {
                q,
                t,
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<BiTerm>::deserialize(d)?;
        let mut p = BiPoly::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(c, t.q, t.t);
        }
        Ok(p)
    }
}

/// `Phi_k(q)`, obtained by dividing `q^k - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_poly(k: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::ZeroStripSize);
    }
    let mut table: BTreeMap<usize, IntPoly> = BTreeMap::new();
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        let mut p = &IntPoly::monomial(1, d) - &IntPoly::one();
        for (_, phi) in table.iter().filter(|(&e, _)| d % e == 0) {
            p = p.div_exact(phi).expect("cyclotomic factors divide q^d - 1");
        }
        table.insert(d, p);
    }
    Ok(table.remove(&k).expect("k divides itself"))
}

#[derive(Debug)]
struct Modulus {
    k: usize,
    phi: IntPoly,
    /// `q^r mod Phi_k` for `0 <= r < k`.
    powers: Vec<IntPoly>,
}

/// The ring `Z[q] / (Phi_k(q))`, i.e. the integers adjoined a primitive `k`-th root of unity.
#[derive(Debug, Clone)]
pub struct RootOfUnity {
    modulus: Arc<Modulus>,
}

impl RootOfUnity {
    pub fn new(k: usize) -> Result<Self> {
        let phi = cyclotomic_poly(k)?;
        let powers = (0..k)
            .map(|r| {
                IntPoly::monomial(1, r)
                    .div_rem(&phi)
                    .expect("cyclotomic polynomials are monic")
                    .1
            })
            .collect();
        Ok(RootOfUnity {
            modulus: Arc::new(Modulus { k, phi, powers }),
        })
    }

    pub fn k(&self) -> usize {
        self.modulus.k
    }

    pub fn cyclotomic(&self) -> &IntPoly {
        &self.modulus.phi
    }

    fn elem(&self, residue: IntPoly) -> CycElem {
        CycElem {
            root: self.clone(),
            residue,
        }
    }

    pub fn zero(&self) -> CycElem {
        self.elem(IntPoly::zero())
    }

    pub fn from_int(&self, c: impl Into<BigInt>) -> CycElem {
        self.elem(IntPoly::constant(c))
    }

    /// `xi^exp`.
    pub fn power(&self, exp: usize) -> CycElem {
        self.elem(self.modulus.powers[exp % self.modulus.k].clone())
    }

    /// Substitutes `q = xi` into a polynomial in `q`.
    pub fn eval(&self, p: &IntPoly) -> CycElem {
        let mut acc = IntPoly::zero();
        for (e, c) in p.terms() {
            acc += &self.modulus.powers[e % self.modulus.k].scale(c);
        }
        self.elem(acc)
    }

    fn reduce(&self, p: &IntPoly) -> IntPoly {
        p.div_rem(&self.modulus.phi)
            .expect("cyclotomic polynomials are monic")
            .1
    }
}

/// An element of `Z[q] / (Phi_k(q))`, stored as its residue of degree below `deg Phi_k`.
#[derive(Clone)]
pub struct CycElem {
    root: RootOfUnity,
    residue: IntPoly,
}

impl CycElem {
    pub fn k(&self) -> usize {
        self.root.k()
    }

    pub fn residue(&self) -> &IntPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// The integer this element equals, if it lies in the image of `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.residue.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            Some(_) => None,
        }
    }

    fn check_same_ring(&self, other: &CycElem) {
        assert_eq!(
            self.k(),
            other.k(),
            "mixing roots of unity of different orders"
        );
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        self.k() == other.k() && self.residue == other.residue
    }
}

impl Eq for CycElem {}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.residue.to_compact_string_in("q"))
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem[k={}]({self})", self.k())
    }
}

impl Add for &CycElem {
    type Output = CycElem;

    fn add(self, other: &CycElem) -> CycElem {
        self.check_same_ring(other);
        self.root.elem(&self.residue + &other.residue)
    }
}

impl Sub for &CycElem {
    type Output = CycElem;

    fn sub(self, other: &CycElem) -> CycElem {
        self.check_same_ring(other);
        self.root.elem(&self.residue - &other.residue)
    }
}

impl Mul for &CycElem {
    type Output = CycElem;

    fn mul(self, other: &CycElem) -> CycElem {
        self.check_same_ring(other);
        self.root
            .elem(self.root.reduce(&(&self.residue * &other.residue)))
    }
}

impl Neg for &CycElem {
    type Output = CycElem;

    fn neg(self) -> CycElem {
        self.root.elem(-&self.residue)
    }
}

/// Polynomial in `t` with coefficients in `Z[xi]`. Zero coefficients are not stored.
#[derive(Clone)]
pub struct CycPolyT {
    root: RootOfUnity,
    coeffs: BTreeMap<usize, CycElem>,
}

impl CycPolyT {
    pub fn zero(root: &RootOfUnity) -> Self {
        CycPolyT {
            root: root.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.root.k()
    }

    pub fn coefficient(&self, t_exp: usize) -> CycElem {
        self.coeffs
            .get(&t_exp)
            .cloned()
            .unwrap_or_else(|| self.root.zero())
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &CycElem)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, t_exp: usize, c: &CycElem) {
        let sum = match self.coeffs.get(&t_exp) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&t_exp);
        } else {
            self.coeffs.insert(t_exp, sum);
        }
    }

    /// The integer polynomial this equals, if every coefficient is an integer.
    pub fn as_integer_poly(&self) -> Option<IntPoly> {
        let mut out = IntPoly::zero();
        for (&e, c) in &self.coeffs {
            out += &IntPoly::monomial(c.as_integer()?, e);
        }
        Some(out)
    }
}

impl PartialEq for CycPolyT {
    fn eq(&self, other: &Self) -> bool {
        self.k() == other.k() && self.coeffs == other.coeffs
    }
}

impl Mul for &CycPolyT {
    type Output = CycPolyT;

    fn mul(self, other: &CycPolyT) -> CycPolyT {
        let mut out = CycPolyT::zero(&self.root);
        for (&ea, a) in &self.coeffs {
            for (&eb, b) in &other.coeffs {
                out.add_term(ea + eb, &(a * b));
            }
        }
        out
    }
}

impl fmt::Display for CycPolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups: Vec<(usize, String, Option<BigInt>)> = self
            .coeffs
            .iter()
            .rev()
            .map(|(&te, c)| match c.residue.as_monomial() {
                Some((qe, coeff)) => (te, power("q", qe), Some(coeff.clone())),
                None => (te, c.to_string(), None),
            })
            .collect();
        f.write_str(&format_grouped(&groups))
    }
}

impl fmt::Debug for CycPolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycPolyT[k={}]({self})", self.k())
    }
}

/// Substitutes a primitive `k`-th root of unity for `q`, collecting by powers of `t`.
pub fn eval_at_root(f: &BiPoly, k: usize) -> Result<CycPolyT> {
    let root = RootOfUnity::new(k)?;
    Ok(eval_at(f, &root))
}

pub fn eval_at(f: &BiPoly, root: &RootOfUnity) -> CycPolyT {
    let mut out = CycPolyT::zero(root);
    for (te, coeff) in f.by_t() {
        out.add_term(te, &root.eval(&coeff));
    }
    out
}

/// `(1 - t)(1 - t^k)^(n/k)`, the value of `(t; xi)_(n+1)`.
pub fn pochhammer(k: usize, n: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::ZeroStripSize);
    }
    if !n.is_multiple_of(k) {
        return Err(Error::NotDivisible { k, n });
    }
    Ok(&IntPoly::one_minus_power(1) * &IntPoly::one_minus_power(k).pow(n / k))
}

/// `(t; q)_len = (1 - t)(1 - t q) ... (1 - t q^(len-1))`.
pub fn q_pochhammer(len: usize) -> BiPoly {
    (0..len).fold(BiPoly::one(), |acc, i| {
        let mut factor = BiPoly::one();
        factor.add_term(-1, i, 1);
        &acc * &factor
    })
}
