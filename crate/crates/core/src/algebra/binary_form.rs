use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::det_bareiss;
use super::{Field, Ring};
use crate::error::{Error, Result};

/// Homogeneous polynomial in `(s, t)`; `coeffs[k]` multiplies `s^(d-k) t^k`.
///
/// The degree is part of the value: the zero form of degree 3 and the zero
/// form of degree 1 are different objects.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm<K> {
    coeffs: Vec<K>,
}

impl<K: Ring> BinaryForm<K> {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<K>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form has at least one coefficient");
        Self { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![K::zero(); degree + 1])
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    pub fn s() -> Self {
        Self::new(vec![K::one(), K::zero()])
    }

    pub fn t() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    /// `c * s^(degree-k) * t^k`.
    pub fn monomial(degree: usize, k: usize, c: K) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[k] = c;
        f
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(K::is_zero)
    }

    pub fn eval(&self, s: &K, t: &K) -> K {
        let d = self.degree();
        let mut s_pows = Vec::with_capacity(d + 1);
        let mut t_pows = Vec::with_capacity(d + 1);
        let (mut sp, mut tp) = (K::one(), K::one());
        for _ in 0..=d {
            s_pows.push(sp.clone());
            t_pows.push(tp.clone());
            sp = sp * s.clone();
            tp = tp * t.clone();
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(K::zero(), |acc, (k, c)| acc + c.clone() * s_pows[d - k].clone() * t_pows[k].clone())
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn map<L: Ring>(&self, f: impl Fn(&K) -> L) -> BinaryForm<L> {
        BinaryForm::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplicity of the root `(1, 0)`, i.e. the power of `t` dividing the form.
    pub fn t_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Sylvester matrix of `(self, other)` for their formal degrees.
    pub fn sylvester(&self, other: &Self) -> Vec<Vec<K>> {
        sylvester_matrix(&self.coeffs, &other.coeffs)
    }
}

/// Sylvester matrix of two coefficient lists, `e` shifted rows of the first
/// followed by `d` shifted rows of the second (`d`, `e` the formal degrees).
pub fn sylvester_matrix<K: Ring>(f: &[K], g: &[K]) -> Vec<Vec<K>> {
    let d = f.len() - 1;
    let e = g.len() - 1;
    let n = d + e;
    let mut rows = Vec::with_capacity(n);
    for shift in 0..e {
        let mut row = vec![K::zero(); n];
        row[shift..shift + d + 1].clone_from_slice(f);
        rows.push(row);
    }
    for shift in 0..d {
        let mut row = vec![K::zero(); n];
        row[shift..shift + e + 1].clone_from_slice(g);
        rows.push(row);
    }
    rows
}

impl<K: Field> BinaryForm<K> {
    /// Scale so the first nonzero coefficient is one. Zero forms are returned as is.
    pub fn monic(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(&lead.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::ZeroGcd),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        let shift = self.t_multiplicity().min(other.t_multiplicity());
        let h = poly_gcd(dehomogenize(&self.coeffs), dehomogenize(&other.coeffs));
        // Rehomogenize h(x) to degree deg h, then multiply by t^shift.
        let mut coeffs = vec![K::zero(); shift];
        coeffs.extend(h.into_iter().rev());
        Ok(Self::new(coeffs))
    }

    /// Quotient `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || divisor.degree() > self.degree() {
            return None;
        }
        let z = divisor.t_multiplicity();
        if self.coeffs[..z].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let f = &self.coeffs[z..];
        let g = &divisor.coeffs[z..];
        let lead_inv = g[0].inv()?;
        let qdeg = self.degree() - divisor.degree();
        let mut q: Vec<K> = Vec::with_capacity(qdeg + 1);
        for k in 0..=qdeg {
            let mut acc = f[k].clone();
            for j in 1..=k.min(g.len() - 1) {
                acc = acc - g[j].clone() * q[k - j].clone();
            }
            q.push(acc * lead_inv.clone());
        }
        let q = Self::new(q);
        (q.clone() * divisor.clone() == *self).then_some(q)
    }

    /// Resultant for arbitrary formal degrees (not both zero).
    pub fn resultant_any(&self, other: &Self) -> K {
        det_bareiss(self.sylvester(other))
    }

    /// Resultant of two forms of a common degree `d >= 1`.
    pub fn resultant(&self, other: &Self) -> Result<K> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        if self.degree() == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(self.resultant_any(other))
    }
}

/// `f(x, 1)` as a low-to-high coefficient vector with trailing zeros removed.
fn dehomogenize<K: Ring>(coeffs: &[K]) -> Vec<K> {
    let mut u: Vec<K> = coeffs.iter().rev().cloned().collect();
    trim(&mut u);
    u
}

fn trim<K: Ring>(u: &mut Vec<K>) {
    while u.last().is_some_and(K::is_zero) {
        u.pop();
    }
}

/// Monic gcd of univariate polynomials (low-to-high); empty means zero.
fn poly_gcd<K: Field>(mut a: Vec<K>, mut b: Vec<K>) -> Vec<K> {
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().expect("nonzero input").inv().expect("nonzero lead");
    a.into_iter().map(|c| c * lead.clone()).collect()
}

fn poly_rem<K: Field>(a: &[K], b: &[K]) -> Vec<K> {
    let mut r = a.to_vec();
    let lead_inv = b.last().expect("nonzero divisor").inv().expect("nonzero lead");
    while r.len() >= b.len() {
        let factor = r.last().unwrap().clone() * lead_inv.clone();
        let off = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[off + i] = r[off + i].clone() - factor.clone() * c.clone();
        }
        r.pop();
        trim(&mut r);
    }
    r
}

impl<K: Ring> Add for BinaryForm<K> {
    type Output = Self;
    /// Panics on a degree mismatch.
    fn add(self, o: Self) -> Self {
        assert_eq!(self.degree(), o.degree(), "adding binary forms of different degree");
        Self::new(self.coeffs.into_iter().zip(o.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl<K: Ring> Sub for BinaryForm<K> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<K: Ring> Neg for BinaryForm<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<K: Ring> Mul for BinaryForm<K> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = vec![K::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<K: Ring + fmt::Debug> fmt::Debug for BinaryForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})")?;
            match d - k {
                0 => {}
                1 => write!(f, "s")?,
                e => write!(f, "s^{e}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " [deg {d}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussianRational as Q;

    fn bf(c: &[i64]) -> BinaryForm<Q> {
        BinaryForm::new(c.iter().map(|&x| Q::from(x)).collect())
    }

    #[test]
    fn evaluation() {
        assert!(bf(&[1, 0, 1]).eval(&Q::one(), &Q::i()).is_zero());
        assert!(bf(&[0, 1, 0]).eval(&Q::one(), &Q::zero()).is_zero());
        assert_eq!(bf(&[1, 1, 1]).eval(&Q::from(2), &Q::one()), Q::from(7));
        let f = bf(&[3, -1, 4, 2]);
        assert_eq!(f.eval(&Q::one(), &Q::zero()), Q::from(3));
        assert_eq!(f.eval(&Q::zero(), &Q::one()), Q::from(2));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(bf(&[1, 0, -1]).gcd(&bf(&[1, -1])).unwrap(), bf(&[1, -1]));
        assert_eq!(bf(&[1, 0, 0]).gcd(&bf(&[0, 0, 1])).unwrap(), bf(&[1]));
        assert_eq!(bf(&[1, 0, -1, 0]).gcd(&bf(&[0, 1, 0, -1])).unwrap(), bf(&[1, 0, -1]));
        assert_eq!(bf(&[0, 0]).gcd(&bf(&[0, 0])), Err(Error::ZeroGcd));
        // powers of t are tracked through dehomogenization
        assert_eq!(bf(&[0, 0, 2]).gcd(&bf(&[0, 3, 0])).unwrap(), bf(&[0, 1]));
    }

    #[test]
    fn gcd_divides_inputs() {
        let f = bf(&[1, 0, -1, 0]);
        let g = bf(&[0, 1, 0, -1]);
        let h = f.gcd(&g).unwrap();
        assert!(f.div_exact(&h).is_some());
        assert!(g.div_exact(&h).is_some());
        assert!(bf(&[1, 0, 1]).div_exact(&bf(&[1, 1])).is_none());
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(bf(&[1, 0]).resultant(&bf(&[0, 1])).unwrap(), Q::one());
        assert!(bf(&[1, -1]).resultant(&bf(&[1, -1])).unwrap().is_zero());
        assert_eq!(bf(&[1, 0, 1]).resultant(&bf(&[1, 0, -1])).unwrap(), Q::from(4));
        assert_eq!(bf(&[1, 0]).resultant(&bf(&[1, 0, 1])), Err(Error::DegreeMismatch(1, 2)));
        assert_eq!(bf(&[1]).resultant(&bf(&[2])), Err(Error::ZeroDegree));
    }

    #[test]
    fn product_degrees_add() {
        let p = bf(&[1, 1]) * bf(&[1, -1]);
        assert_eq!(p, bf(&[1, 0, -1]));
    }
}
