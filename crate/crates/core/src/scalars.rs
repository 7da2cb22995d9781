//! Exact arithmetic in the cyclotomic field Q(ζ_N).
//!
//! An element is a residue modulo the N-th cyclotomic polynomial Φ_N,
//! stored as rational coefficients on the power basis 1, ζ, …, ζ^{φ(N)-1}
//! with trailing zeros trimmed. Rational elements therefore carry a single
//! coefficient and take a fast path through every operation.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use smallvec::SmallVec;

use crate::error::Error;
use crate::rational::Rational;

type Coeffs = SmallVec<[Rational; 2]>;

struct FieldData {
    n: u32,
    /// Monic Φ_N, lowest degree first; length φ(N)+1.
    cyclotomic: Vec<i64>,
    /// ζ^k reduced, for 0 ≤ k < N.
    powers: Vec<Coeffs>,
}

/// Handle on Q(ζ_N). Cheap to clone; all values built from the same
/// conductor value compare as living in the same field.
#[derive(Clone)]
pub struct Conductor(Arc<FieldData>);

impl PartialEq for Conductor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.n == other.0.n
    }
}
impl Eq for Conductor {}

impl fmt::Debug for Conductor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Conductor({})", self.0.n)
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic.
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        quot[k - dd] = c;
        for (i, &di) in den.iter().enumerate() {
            rem[k - dd + i] -= c * di;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

pub(crate) fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut result = n as usize;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p as usize;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m as usize;
    }
    result
}

fn trim(c: &mut Coeffs) {
    while c.last().is_some_and(Rational::is_zero) {
        c.pop();
    }
}

impl Conductor {
    /// Largest conductor accepted; larger fields are far outside desk scale.
    pub const MAX: u32 = 2520;

    pub fn new(n: u32) -> Result<Self, Error> {
        if n == 0 || n > Self::MAX {
            return Err(Error::InvalidConductor(n));
        }
        let cyclotomic = cyclotomic_poly(n);
        let phi = cyclotomic.len() - 1;
        debug_assert_eq!(phi, euler_phi(n));
        let mut data = FieldData { n, cyclotomic, powers: Vec::with_capacity(n as usize) };
        let mut cur: Coeffs = smallvec::smallvec![Rational::ONE];
        for _ in 0..n {
            data.powers.push(cur.clone());
            // multiply by x and reduce
            let mut next: Coeffs = SmallVec::with_capacity(cur.len() + 1);
            next.push(Rational::ZERO);
            next.extend(cur.iter().cloned());
            reduce_in_place(&data.cyclotomic, &mut next);
            cur = next;
        }
        Ok(Conductor(Arc::new(data)))
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    /// Degree φ(N) of the field over Q.
    pub fn degree(&self) -> usize {
        self.0.cyclotomic.len() - 1
    }

    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.0.cyclotomic
    }

    pub fn zero(&self) -> CycNumber {
        CycNumber { field: self.clone(), coeffs: SmallVec::new() }
    }

    pub fn one(&self) -> CycNumber {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> CycNumber {
        self.rational(Rational::from_int(n))
    }

    pub fn rational(&self, q: Rational) -> CycNumber {
        let mut coeffs = Coeffs::new();
        if !q.is_zero() {
            coeffs.push(q);
        }
        CycNumber { field: self.clone(), coeffs }
    }

    pub fn frac(&self, num: i64, den: i64) -> CycNumber {
        self.rational(Rational::new(num, den))
    }

    /// ζ_N^k in canonical form; `k` may be negative.
    pub fn root_of_unity(&self, k: i64) -> CycNumber {
        let n = self.0.n as i64;
        let idx = k.rem_euclid(n) as usize;
        CycNumber { field: self.clone(), coeffs: self.0.powers[idx].clone() }
    }

    /// Builds an element from raw power-basis coefficients, reducing mod Φ_N.
    pub fn from_coeffs(&self, coeffs: &[Rational]) -> CycNumber {
        let mut c: Coeffs = coeffs.iter().cloned().collect();
        reduce_in_place(&self.0.cyclotomic, &mut c);
        CycNumber { field: self.clone(), coeffs: c }
    }

    /// Whether a primitive k-th root of unity lives in this field.
    pub fn contains_roots_of_order(&self, k: u32) -> bool {
        let n = self.0.n;
        // Q(ζ_N) contains μ_k iff k | lcm(2, N).
        let m = if n.is_multiple_of(2) { n } else { 2 * n };
        k != 0 && m % k == 0
    }

    /// Exponent e with ζ_N^e = x, if x is an N-th root of unity (or −1 times one,
    /// which is again a root of unity of order dividing 2N; only exponents modulo
    /// N are returned).
    pub fn log_root_of_unity(&self, x: &CycNumber) -> Option<u32> {
        self.0.powers.iter().position(|p| *p == x.coeffs).map(|i| i as u32)
    }
}

fn reduce_in_place(cyclo: &[i64], p: &mut Coeffs) {
    let phi = cyclo.len() - 1;
    if p.len() > phi {
        for k in (phi..p.len()).rev() {
            if p[k].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut p[k]);
            for (i, &ci) in cyclo.iter().enumerate().take(phi) {
                if ci != 0 {
                    let t = &c * &Rational::from_int(ci);
                    p[k - phi + i] = &p[k - phi + i] - &t;
                }
            }
        }
        p.truncate(phi);
    }
    trim(p);
}

/// Element of Q(ζ_N).
#[derive(Clone)]
pub struct CycNumber {
    field: Conductor,
    coeffs: Coeffs,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}
impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.n().hash(state);
        self.coeffs.hash(state);
    }
}

impl CycNumber {
    pub fn conductor(&self) -> &Conductor {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::ZERO),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Power-basis coefficients padded to length φ(N).
    pub fn coefficients(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.coeffs.iter().cloned().collect();
        v.resize(self.field.degree(), Rational::ZERO);
        v
    }

    /// Trimmed power-basis coefficients.
    pub fn raw_coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.field.n(), other.field.n()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.add_unchecked(&-other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        if other.coeffs.is_empty() {
            return self.clone();
        }
        if self.coeffs.is_empty() {
            return other.clone();
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut c = Coeffs::with_capacity(len);
        for i in 0..len {
            let v = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            c.push(v);
        }
        trim(&mut c);
        CycNumber { field: self.field.clone(), coeffs: c }
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return self.field.zero();
        }
        if q.is_one() {
            return self.clone();
        }
        CycNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        match (self.coeffs.len(), other.coeffs.len()) {
            (0, _) | (_, 0) => return self.field.zero(),
            (1, _) => return other.scale(&self.coeffs[0]),
            (_, 1) => return self.scale(&other.coeffs[0]),
            _ => {}
        }
        let la = self.coeffs.len();
        let lb = other.coeffs.len();
        let mut p: Coeffs = smallvec::smallvec![Rational::ZERO; la + lb - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                p[i + j] = &p[i + j] + &t;
            }
        }
        reduce_in_place(&self.field.0.cyclotomic, &mut p);
        CycNumber { field: self.field.clone(), coeffs: p }
    }

    /// Multiplicative inverse, via extended Euclid against Φ_N.
    pub fn inv(&self) -> Result<Self, Error> {
        match self.coeffs.len() {
            0 => Err(Error::DivisionByZero),
            1 => Ok(self.field.rational(self.coeffs[0].recip())),
            _ => {
                let modulus: Vec<Rational> =
                    self.field.0.cyclotomic.iter().map(|&c| Rational::from_int(c)).collect();
                let a: Vec<Rational> = self.coeffs.to_vec();
                let s = poly::inverse_mod(&a, &modulus).ok_or(Error::DivisionByZero)?;
                Ok(self.field.from_coeffs(&s))
            }
        }
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&b);
            }
            b = b.mul_unchecked(&b);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Canonical text form, e.g. `cyc(N=4)[0/1, 1/1]` for ζ_4.
    pub fn to_literal(&self) -> String {
        let mut s = String::new();
        s.push_str("cyc(N=");
        s.push_str(&self.field.n().to_string());
        s.push_str(")[");
        for (i, c) in self.coefficients().iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&c.to_string());
        }
        s.push(']');
        s
    }

    /// Parses the canonical literal. The coefficient list must have length φ(N).
    pub fn parse_literal(s: &str, field: &Conductor) -> Result<Self, Error> {
        let err = || Error::Parse(String::from(s));
        let rest = s.trim().strip_prefix("cyc(N=").ok_or_else(err)?;
        let (n, rest) = rest.split_once(')').ok_or_else(err)?;
        let n: u32 = n.trim().parse().map_err(|_| err())?;
        if n != field.n() {
            return Err(Error::ConductorMismatch(n, field.n()));
        }
        let body = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(err)?;
        let mut coeffs = Vec::new();
        if !body.trim().is_empty() {
            for part in body.split(',') {
                coeffs.push(part.trim().parse::<Rational>().map_err(|_| err())?);
            }
        }
        if coeffs.len() != field.degree() {
            return Err(err());
        }
        Ok(field.from_coeffs(&coeffs))
    }

    /// Short human-readable form: `3/4`, `-z^2 + 1/2*z`, with z = ζ_N.
    pub fn to_compact(&self) -> String {
        if let Some(q) = self.as_rational() {
            return rational_compact(&q);
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let mag = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => String::from("z"),
                _ => alloc::format!("z^{}", i),
            };
            if i == 0 {
                out.push_str(&rational_compact(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&rational_compact(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn rational_compact(q: &Rational) -> String {
    match q.as_small() {
        Some((n, 1)) => n.to_string(),
        _ => q.to_string(),
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact())
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

// Operator impls panic on conductor mismatch; the `try_*` methods report it.
impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.try_add(rhs).expect("conductor mismatch")
    }
}
impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.try_sub(rhs).expect("conductor mismatch")
    }
}
impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.try_mul(rhs).expect("conductor mismatch")
    }
}
impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}
impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}
impl Add for CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: CycNumber) -> CycNumber {
        &self + &rhs
    }
}
impl Sub for CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: CycNumber) -> CycNumber {
        &self - &rhs
    }
}
impl Mul for CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: CycNumber) -> CycNumber {
        &self * &rhs
    }
}
impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        if rhs.coeffs.is_empty() {
            return;
        }
        if self.coeffs.is_empty() {
            self.coeffs = rhs.coeffs.clone();
            return;
        }
        if self.coeffs.len() == 1 && rhs.coeffs.len() == 1 {
            self.coeffs[0] = &self.coeffs[0] + &rhs.coeffs[0];
            trim(&mut self.coeffs);
            return;
        }
        *self = &*self + rhs;
    }
}
impl SubAssign<&CycNumber> for CycNumber {
    fn sub_assign(&mut self, rhs: &CycNumber) {
        *self = &*self - rhs;
    }
}

pub(crate) mod poly {
    //! Dense polynomials over Q, lowest degree first.
    use super::Rational;
    use alloc::vec;
    use alloc::vec::Vec;

    pub fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(Rational::is_zero) {
            p.pop();
        }
    }

    fn sub_scaled_shift(a: &mut Vec<Rational>, b: &[Rational], c: &Rational, shift: usize) {
        if a.len() < b.len() + shift {
            a.resize(b.len() + shift, Rational::ZERO);
        }
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                a[i + shift] = &a[i + shift] - &(c * bi);
            }
        }
    }

    /// (quotient, remainder) of a / b; b nonzero.
    pub fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        let db = b.len() - 1;
        let lead_inv = b[db].recip();
        if r.len() < b.len() {
            return (vec![], r);
        }
        let mut q = vec![Rational::ZERO; r.len() - db];
        while r.len() >= b.len() {
            let k = r.len() - 1;
            let c = &r[k] * &lead_inv;
            q[k - db] = c.clone();
            sub_scaled_shift(&mut r, &b, &c, k - db);
            r.pop();
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        trim(&mut out);
        out
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = a.to_vec();
        if out.len() < b.len() {
            out.resize(b.len(), Rational::ZERO);
        }
        for (i, y) in b.iter().enumerate() {
            out[i] = &out[i] - y;
        }
        trim(&mut out);
        out
    }

    /// s with a·s ≡ 1 (mod m), when gcd(a, m) = 1.
    pub fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::ONE]);
        while !r1.is_empty() {
            let (q, r) = divmod(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].recip();
        Some(s0.iter().map(|x| x * &c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        for n in 1..60 {
            assert_eq!(cyclotomic_poly(n).len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let k = Conductor::new(4).unwrap();
        let z = k.root_of_unity(1);
        assert_eq!(&z * &z, k.int(-1));
    }

    #[test]
    fn one_plus_zeta3_times_conjugate() {
        let k = Conductor::new(3).unwrap();
        let a = &k.one() + &k.root_of_unity(1);
        let b = &k.one() + &k.root_of_unity(2);
        assert_eq!(&a * &b, k.one());
    }

    #[test]
    fn additive_identity() {
        let k = Conductor::new(5).unwrap();
        let a = &k.root_of_unity(3) + &k.frac(2, 7);
        assert_eq!(&a + &k.zero(), a);
    }

    #[test]
    fn inverses() {
        let k = Conductor::new(7).unwrap();
        assert_eq!(k.one().inv().unwrap(), k.one());
        assert_eq!(k.root_of_unity(1).inv().unwrap(), k.root_of_unity(6));
        assert_eq!(k.int(2).inv().unwrap(), k.frac(1, 2));
        assert!(k.zero().inv().is_err());
    }

    #[test]
    fn roots_of_unity() {
        let k = Conductor::new(8).unwrap();
        assert_eq!(k.root_of_unity(0), k.one());
        assert_eq!(k.root_of_unity(8), k.one());
        let i = k.root_of_unity(2);
        assert_eq!(&i * &i, k.int(-1));
        assert_eq!(k.root_of_unity(-1), k.root_of_unity(7));
        assert_eq!(k.log_root_of_unity(&k.root_of_unity(5)), Some(5));
    }

    #[test]
    fn literal_round_trip() {
        let k = Conductor::new(4).unwrap();
        let z = k.root_of_unity(1);
        assert_eq!(z.to_literal(), "cyc(N=4)[0/1, 1/1]");
        assert_eq!(CycNumber::parse_literal("cyc(N=4)[0/1, 1/1]", &k).unwrap(), z);
        let k12 = Conductor::new(12).unwrap();
        let x = &k12.root_of_unity(5) + &k12.frac(-3, 4);
        let lit = x.to_literal();
        assert_eq!(CycNumber::parse_literal(&lit, &k12).unwrap().to_literal(), lit);
        assert!(CycNumber::parse_literal("cyc(N=4)[1/1]", &k).is_err());
        assert!(matches!(
            CycNumber::parse_literal("cyc(N=3)[1/1, 0/1]", &k),
            Err(Error::ConductorMismatch(3, 4))
        ));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Conductor::new(3).unwrap().one();
        let b = Conductor::new(4).unwrap().one();
        assert!(matches!(a.try_add(&b), Err(Error::ConductorMismatch(3, 4))));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn compact_form() {
        let k = Conductor::new(3).unwrap();
        assert_eq!(k.frac(3, 4).to_compact(), "3/4");
        assert_eq!(k.root_of_unity(1).to_compact(), "z");
        assert_eq!(k.root_of_unity(2).to_compact(), "-z - 1");
    }
}
