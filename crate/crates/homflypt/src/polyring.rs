//! Exact sparse Laurent-polynomial arithmetic in the variables `v` and `z`.
//!
//! Two rings are provided: [`VPoly`] (Laurent polynomials in `v` alone) and
//! [`VZPoly`] (Laurent polynomials in `v` and `z`). Coefficients are
//! arbitrary-precision integers; no operation can overflow. Term maps are
//! canonical: zero coefficients are never stored, and iteration order is
//! lexicographic on (z-exponent, v-exponent), which fixes the text form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Trial division is plenty: every prime this toolkit sees is tiny.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<(), Error> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Least-absolute-value representative of `c` mod `p`, in
/// `{-(p-1)/2, ..., (p-1)/2}` for odd `p`.
fn symmetric_residue(c: &BigInt, p: u64) -> BigInt {
    let m = BigInt::from(p);
    let mut r = c % &m;
    if r.is_negative() {
        r += &m;
    }
    if &r + &r > m {
        r -= &m;
    }
    r
}

/// One-variable Laurent polynomial in `v` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct VPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl VPoly {
    pub fn zero() -> Self {
        VPoly::default()
    }

    pub fn one() -> Self {
        VPoly::monomial(1, 0)
    }

    /// `c * v^a`.
    pub fn monomial(c: impl Into<BigInt>, a: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(a, c);
        }
        VPoly { terms }
    }

    /// `v - v^-1`, the divisor appearing in the colored lowest-coefficient check.
    pub fn v_minus_v_inv() -> Self {
        &VPoly::monomial(1, 1) - &VPoly::monomial(1, -1)
    }

    /// `v^-1 - v`, the split-union unit numerator.
    pub fn v_inv_minus_v() -> Self {
        &VPoly::monomial(1, -1) - &VPoly::monomial(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, a: i64) -> BigInt {
        self.terms.get(&a).cloned().unwrap_or_default()
    }

    fn insert(&mut self, a: i64, c: BigInt) {
        if !c.is_zero() {
            self.terms.insert(a, c);
        }
    }

    fn add_term(&mut self, a: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(a).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = VPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients reduced mod `p` to symmetric representatives.
    pub fn reduce_mod(&self, p: u64) -> Result<Self, Error> {
        check_prime(p)?;
        let mut out = VPoly::zero();
        for (&a, c) in &self.terms {
            out.insert(a, symmetric_residue(c, p));
        }
        Ok(out)
    }

    /// Lift into the two-variable ring (z-exponent 0 throughout).
    pub fn to_vz(&self) -> VZPoly {
        let mut out = VZPoly::zero();
        for (&a, c) in &self.terms {
            out.insert(a, 0, c.clone());
        }
        out
    }

    /// Substitute `v := 1` (used to sanity-check lowest-coefficient products).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// Membership in `Z_p[v^{±p}]`: every surviving exponent divisible by `p`.
///
/// Callers reduce mod `p` first; the offending monomials are returned as the
/// witness on failure.
pub fn in_vp_subring(a: &VPoly, p: u64) -> (bool, Vec<(i64, BigInt)>) {
    let witness: Vec<(i64, BigInt)> = a
        .terms()
        .filter(|(e, _)| e.rem_euclid(p as i64) != 0)
        .map(|(e, c)| (e, c.clone()))
        .collect();
    (witness.is_empty(), witness)
}

/// Exact quotient `a / (v - v^-1)^k` over the integers.
///
/// Division happens before any mod-p reduction; a nonzero remainder is an
/// error, not a rounding.
pub fn exact_div_vv(a: &VPoly, k: u32) -> Result<VPoly, Error> {
    let mut cur = a.clone();
    for _ in 0..k {
        cur = div_once(&cur)?;
    }
    Ok(cur)
}

/// One exact division by `(v - v^-1)`.
///
/// Writing `a = v^L * A(v)` with `A` an ordinary polynomial, we have
/// `a / (v - v^-1) = v^{L+1} * A(v) / (v^2 - 1)`, so this is long division
/// by `v^2 - 1` plus an exponent shift.
fn div_once(a: &VPoly) -> Result<VPoly, Error> {
    if a.is_zero() {
        return Ok(VPoly::zero());
    }
    let lo = *a.terms.keys().next().unwrap();
    let hi = *a.terms.keys().next_back().unwrap();
    let n = (hi - lo) as usize;
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for (&e, c) in &a.terms {
        coeffs[(e - lo) as usize] = c.clone();
    }
    // Divide coeffs (poly of degree n) by v^2 - 1, top down.
    let mut quot: Vec<BigInt> = vec![BigInt::zero(); n.saturating_sub(1)];
    for i in (2..=n).rev() {
        let q = std::mem::take(&mut coeffs[i]);
        if q.is_zero() {
            continue;
        }
        coeffs[i - 2] += &q;
        quot[i - 2] = q;
    }
    let remainder: Vec<(i64, BigInt)> = coeffs
        .iter()
        .take(2.min(n + 1))
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (lo + i as i64, c.clone()))
        .collect();
    if !remainder.is_empty() {
        return Err(Error::NotDivisible {
            divisor: "v - v^-1".into(),
            remainder: {
                let mut r = VPoly::zero();
                for (e, c) in remainder {
                    r.insert(e, c);
                }
                r.to_string()
            },
        });
    }
    let mut out = VPoly::zero();
    for (i, c) in quot.into_iter().enumerate() {
        // a / (v - v^-1) shifts exponents up by one past the v^2-1 quotient.
        out.insert(lo + i as i64 + 1, c);
    }
    Ok(out)
}

impl Add for &VPoly {
    type Output = VPoly;
    fn add(self, rhs: &VPoly) -> VPoly {
        let mut out = self.clone();
        for (&a, c) in &rhs.terms {
            out.add_term(a, c);
        }
        out
    }
}

impl Sub for &VPoly {
    type Output = VPoly;
    fn sub(self, rhs: &VPoly) -> VPoly {
        let mut out = self.clone();
        for (&a, c) in &rhs.terms {
            out.add_term(a, &(-c.clone()));
        }
        out
    }
}

impl Neg for &VPoly {
    type Output = VPoly;
    fn neg(self) -> VPoly {
        let mut out = VPoly::zero();
        for (&a, c) in &self.terms {
            out.insert(a, -c.clone());
        }
        out
    }
}

impl Mul for &VPoly {
    type Output = VPoly;
    fn mul(self, rhs: &VPoly) -> VPoly {
        let mut out = VPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }
}

/// Two-variable Laurent polynomial in `v`, `z`; the home of `P_L(v,z)`.
///
/// Keys are (z-exponent, v-exponent) so map order is the canonical term order.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct VZPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl VZPoly {
    pub fn zero() -> Self {
        VZPoly::default()
    }

    pub fn one() -> Self {
        VZPoly::monomial(1, 0, 0)
    }

    /// `c * v^a * z^b`.
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((b, a), c);
        }
        VZPoly { terms }
    }

    /// `(v^-1 - v) z^-1`, the value of a split unknot factor.
    pub fn split_unit() -> Self {
        &VZPoly::monomial(1, -1, -1) - &VZPoly::monomial(1, 1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(|c| c.is_one()) == Some(true)
    }

    /// Terms as ((v-exp, z-exp), coefficient), in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.terms.iter().map(|(&(b, a), c)| (a, b, c))
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(b, a)).cloned().unwrap_or_default()
    }

    fn insert(&mut self, a: i64, b: i64, c: BigInt) {
        if !c.is_zero() {
            self.terms.insert((b, a), c);
        }
    }

    fn add_term(&mut self, a: i64, b: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((b, a)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(b, a));
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = VZPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by the monomial `c * v^a * z^b` in place-free style.
    pub fn scale(&self, c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let c = c.into();
        let mut out = VZPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (&(zb, va), coeff) in &self.terms {
            out.insert(va + a, zb + b, coeff * &c);
        }
        out
    }

    /// Coefficients reduced mod `p` to symmetric representatives; mod-p zero
    /// literally becomes the empty term map.
    pub fn reduce_mod(&self, p: u64) -> Result<Self, Error> {
        check_prime(p)?;
        let mut out = VZPoly::zero();
        for (&(b, a), c) in &self.terms {
            out.insert(a, b, symmetric_residue(c, p));
        }
        Ok(out)
    }

    /// The one-variable polynomial multiplying `z^e`; zero if absent.
    pub fn z_coefficient(&self, e: i64) -> VPoly {
        let mut out = VPoly::zero();
        for (&(b, a), c) in self.terms.range((e, i64::MIN)..=(e, i64::MAX)) {
            debug_assert_eq!(b, e);
            out.insert(a, c.clone());
        }
        out
    }

    /// All z-exponents carrying a nonzero coefficient, ascending.
    pub fn z_exponents(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.terms.keys().map(|&(b, _)| b).collect();
        out.dedup();
        out
    }

    pub fn min_z_exponent(&self) -> Option<i64> {
        self.terms.keys().next().map(|&(b, _)| b)
    }
}

impl Add for &VZPoly {
    type Output = VZPoly;
    fn add(self, rhs: &VZPoly) -> VZPoly {
        let mut out = self.clone();
        for (&(b, a), c) in &rhs.terms {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Sub for &VZPoly {
    type Output = VZPoly;
    fn sub(self, rhs: &VZPoly) -> VZPoly {
        let mut out = self.clone();
        for (&(b, a), c) in &rhs.terms {
            out.add_term(a, b, &(-c.clone()));
        }
        out
    }
}

impl Neg for &VZPoly {
    type Output = VZPoly;
    fn neg(self) -> VZPoly {
        let mut out = VZPoly::zero();
        for (&(b, a), c) in &self.terms {
            out.insert(a, b, -c.clone());
        }
        out
    }
}

impl Mul for &VZPoly {
    type Output = VZPoly;
    fn mul(self, rhs: &VZPoly) -> VZPoly {
        let mut out = VZPoly::zero();
        for (&(b1, a1), c1) in &self.terms {
            for (&(b2, a2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Canonical text form: terms sorted by (z-exp, v-exp), rendered as
// `c*v^a*z^b` with zero-exponent factors omitted, e.g.
// `-3*v^-7 + 6*v^-5 - 3*v^-3`. parse(format(p)) == p.
// ---------------------------------------------------------------------------

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    a: i64,
    b: i64,
) -> fmt::Result {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mut factors: Vec<String> = Vec::new();
    if !mag.is_one() || (a == 0 && b == 0) {
        factors.push(mag.to_string());
    }
    if a != 0 {
        factors.push(if a == 1 { "v".into() } else { format!("v^{a}") });
    }
    if b != 0 {
        factors.push(if b == 1 { "z".into() } else { format!("z^{b}") });
    }
    write!(f, "{}", factors.join("*"))
}

impl fmt::Display for VZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(b, a), c) in &self.terms {
            write_term(f, first, c, a, b)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&a, c) in &self.terms {
            write_term(f, first, c, a, 0)?;
            first = false;
        }
        Ok(())
    }
}

/// Parse the canonical text format (whitespace variations tolerated).
pub fn parse_vz(text: &str) -> Result<VZPoly, Error> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::PolyParse("empty polynomial text".into()));
    }
    let mut out = VZPoly::zero();
    let bytes = s.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        // sign
        let mut sign = 1i64;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= bytes.len() {
            return Err(Error::PolyParse("dangling sign".into()));
        }
        // factors separated by '*'
        let mut coeff = BigInt::from(sign);
        let mut va = 0i64;
        let mut zb = 0i64;
        let mut saw_factor = false;
        loop {
            if i < bytes.len() && bytes[i].is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i]
                    .parse()
                    .map_err(|_| Error::PolyParse(format!("bad integer in {text:?}")))?;
                coeff *= n;
                saw_factor = true;
            } else if i < bytes.len() && (bytes[i] == b'v' || bytes[i] == b'z') {
                let var = bytes[i];
                i += 1;
                let mut e = 1i64;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let mut esign = 1i64;
                    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                        if bytes[i] == b'-' {
                            esign = -1;
                        }
                        i += 1;
                    }
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(Error::PolyParse(format!("bad exponent in {text:?}")));
                    }
                    e = esign
                        * s[start..i]
                            .parse::<i64>()
                            .map_err(|_| Error::PolyParse(format!("bad exponent in {text:?}")))?;
                }
                if var == b'v' {
                    va += e;
                } else {
                    zb += e;
                }
                saw_factor = true;
            } else {
                break;
            }
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
                continue;
            }
            break;
        }
        if !saw_factor {
            return Err(Error::PolyParse(format!(
                "unexpected character {:?} in {text:?}",
                s[i..].chars().next().unwrap()
            )));
        }
        out.add_term(va, zb, &coeff);
    }
    Ok(out)
}

/// Parse a one-variable polynomial: same grammar, `z` factors rejected.
pub fn parse_v(text: &str) -> Result<VPoly, Error> {
    let vz = parse_vz(text)?;
    let mut out = VPoly::zero();
    for (a, b, c) in vz.terms() {
        if b != 0 {
            return Err(Error::PolyParse(format!(
                "z-term not allowed in one-variable polynomial {text:?}"
            )));
        }
        out.insert(a, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vz(s: &str) -> VZPoly {
        parse_vz(s).unwrap()
    }

    fn vp(s: &str) -> VPoly {
        parse_v(s).unwrap()
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = vz("v^-1 - v");
        let b = vz("v^-1 + v");
        assert_eq!(&a * &b, vz("v^-2 - v^2"));
    }

    #[test]
    fn mul_identity() {
        let p = vz("2*v^2 - v^4 + v^2*z^2");
        assert_eq!(&VZPoly::one() * &p, p);
    }

    #[test]
    fn mul_monomial_cancellation() {
        let a = VZPoly::monomial(1, 1, 1);
        let b = VZPoly::monomial(1, -1, -1);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn pow_binomial() {
        let a = vz("v^-1 - v");
        assert_eq!(a.pow(3), vz("v^-3 - 3*v^-1 + 3*v - v^3"));
    }

    #[test]
    fn pow_zero_is_one() {
        let p = vz("v*z + 7*v^-2");
        assert!(p.pow(0).is_one());
    }

    #[test]
    fn pow_monomial() {
        assert_eq!(VZPoly::monomial(1, 2, 0).pow(3), VZPoly::monomial(1, 6, 0));
    }

    #[test]
    fn reduce_mod_freshman_collapse() {
        let p = vz("v^-3 - 3*v^-1 + 3*v - v^3");
        assert_eq!(p.reduce_mod(3).unwrap(), vz("v^-3 - v^3"));
    }

    #[test]
    fn reduce_mod_census_coefficient_vanishes() {
        let p = vz("-3*v^-7 + 6*v^-5 - 3*v^-3");
        assert!(p.reduce_mod(3).unwrap().is_zero());
    }

    #[test]
    fn reduce_mod_zero() {
        assert!(VZPoly::zero().reduce_mod(5).unwrap().is_zero());
    }

    #[test]
    fn reduce_mod_rejects_composite() {
        assert!(VZPoly::one().reduce_mod(6).is_err());
        assert!(VZPoly::one().reduce_mod(1).is_err());
    }

    #[test]
    fn z_coefficient_hopf() {
        let p = vz("v*z + v*z^-1 - v^3*z^-1");
        assert_eq!(p.z_coefficient(-1), vp("v - v^3"));
        assert!(p.z_coefficient(0).is_zero());
    }

    #[test]
    fn z_coefficient_constant() {
        assert_eq!(VZPoly::one().z_coefficient(0), VPoly::one());
    }

    #[test]
    fn subring_membership() {
        let (ok, w) = in_vp_subring(&vp("v^-3 - v^3"), 3);
        assert!(ok && w.is_empty());
        let (ok, w) = in_vp_subring(&vp("v^-3 + v^-1"), 3);
        assert!(!ok);
        assert_eq!(w, vec![(-1, BigInt::from(1))]);
        let (ok, _) = in_vp_subring(&VPoly::zero(), 3);
        assert!(ok);
    }

    #[test]
    fn exact_div_square() {
        let a = vp("v^-2 - 2 + v^2");
        assert_eq!(exact_div_vv(&a, 2).unwrap(), VPoly::one());
    }

    #[test]
    fn exact_div_k_zero_is_identity() {
        let a = vp("3*v^-4 + v - 2*v^5");
        assert_eq!(exact_div_vv(&a, 0).unwrap(), a);
    }

    #[test]
    fn exact_div_remainder_is_error() {
        assert!(matches!(
            exact_div_vv(&vp("v + 1"), 1),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn display_census_form() {
        let p = vz("-3*v^-7 + 6*v^-5 - 3*v^-3");
        assert_eq!(p.to_string(), "-3*v^-7 + 6*v^-5 - 3*v^-3");
        let t = vz("2*v^2 - v^4 + v^2*z^2");
        assert_eq!(t.to_string(), "2*v^2 - v^4 + v^2*z^2");
        assert_eq!(VZPoly::zero().to_string(), "0");
        assert_eq!(vz("0"), VZPoly::zero());
    }

    #[test]
    fn parse_whitespace_variations() {
        assert_eq!(vz("  -3*v^-7+6*v^-5   - 3 * v^-3 "), vz("-3*v^-7 + 6*v^-5 - 3*v^-3"));
        assert_eq!(vz("1"), VZPoly::one());
        assert_eq!(vz("v"), VZPoly::monomial(1, 1, 0));
        assert_eq!(vz("-z^-1"), VZPoly::monomial(-1, 0, -1));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_vz("v^").is_err());
        assert!(parse_vz("3*w").is_err());
        assert!(parse_vz("+").is_err());
        assert!(parse_vz("").is_err());
    }
}
