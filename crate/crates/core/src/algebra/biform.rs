use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{BinaryForm, Ring};

/// Exponents of `p0^e0 p1^e1 p2^e2 l0^f0 l1^f1 l2^f2`.
///
/// The derived order is lexicographic on `((e0,e1,e2),(f0,f1,f2))`; it fixes
/// term order in serialization and column order in condition matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub p: [u32; 3],
    pub l: [u32; 3],
}

impl Monomial {
    pub fn new(p: [u32; 3], l: [u32; 3]) -> Self {
        Self { p, l }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.p.iter().sum(), self.l.iter().sum())
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial::new(
            [self.p[0] + o.p[0], self.p[1] + o.p[1], self.p[2] + o.p[2]],
            [self.l[0] + o.l[0], self.l[1] + o.l[1], self.l[2] + o.l[2]],
        )
    }

    pub fn swapped(&self) -> Monomial {
        Monomial::new(self.l, self.p)
    }

    /// Not divisible by `p0 l0`, the leading term of the incidence form.
    pub fn is_standard(&self) -> bool {
        self.p[0] == 0 || self.l[0] == 0
    }

    /// All monomials of bidegree `(a, b)` in increasing order.
    pub fn all(a: u32, b: u32) -> Vec<Monomial> {
        let ps = exponent_triples(a);
        let ls = exponent_triples(b);
        ps.iter().flat_map(|&p| ls.iter().map(move |&l| Monomial::new(p, l))).collect()
    }

    /// Monomials of bidegree `(a, b)` forming a basis of forms modulo the
    /// incidence ideal.
    pub fn standard(a: u32, b: u32) -> Vec<Monomial> {
        Self::all(a, b).into_iter().filter(Monomial::is_standard).collect()
    }
}

/// Exponent triples summing to `d`, lexicographically increasing.
pub fn exponent_triples(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for e0 in 0..=d {
        for e1 in 0..=d - e0 {
            out.push([e0, e1, d - e0 - e1]);
        }
    }
    out.sort();
    out
}

/// Bihomogeneous polynomial of bidegree `(a, b)` in `p = (p0,p1,p2)` and
/// `l = (l0,l1,l2)`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BiForm<K> {
    bidegree: (u32, u32),
    terms: BTreeMap<Monomial, K>,
}

impl<K: Ring> BiForm<K> {
    pub fn zero(a: u32, b: u32) -> Self {
        Self { bidegree: (a, b), terms: BTreeMap::new() }
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(Monomial::new([0; 3], [0; 3]), c)
    }

    pub fn monomial(m: Monomial, c: K) -> Self {
        let (a, b) = m.bidegree();
        let mut f = Self::zero(a, b);
        if !c.is_zero() {
            f.terms.insert(m, c);
        }
        f
    }

    /// Collects terms, summing repeated monomials. Panics if a monomial has
    /// the wrong bidegree.
    pub fn from_terms(bidegree: (u32, u32), terms: impl IntoIterator<Item = (Monomial, K)>) -> Self {
        let mut f = Self::zero(bidegree.0, bidegree.1);
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    fn add_term(&mut self, m: Monomial, c: K) {
        assert_eq!(m.bidegree(), self.bidegree, "monomial of the wrong bidegree");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let v = old + c;
                if !v.is_zero() {
                    self.terms.insert(m, v);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn p_var(i: usize) -> Self {
        Self::monomial(Monomial::new(unit(i), [0; 3]), K::one())
    }

    pub fn l_var(i: usize) -> Self {
        Self::monomial(Monomial::new([0; 3], unit(i)), K::one())
    }

    /// `c0 p0 + c1 p1 + c2 p2`.
    pub fn linear_p(c: &[K; 3]) -> Self {
        Self::from_terms((1, 0), (0..3).map(|i| (Monomial::new(unit(i), [0; 3]), c[i].clone())))
    }

    /// `c0 l0 + c1 l1 + c2 l2`.
    pub fn linear_l(c: &[K; 3]) -> Self {
        Self::from_terms((0, 1), (0..3).map(|i| (Monomial::new([0; 3], unit(i)), c[i].clone())))
    }

    /// The incidence form `p0 l0 + p1 l1 + p2 l2` cutting out the flag threefold.
    pub fn incidence() -> Self {
        Self::from_terms((1, 1), (0..3).map(|i| (Monomial::new(unit(i), unit(i)), K::one())))
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.bidegree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, K> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn eval(&self, p: &[K; 3], l: &[K; 3]) -> K {
        let (a, b) = self.bidegree;
        let pp = powers(p, a);
        let lp = powers(l, b);
        self.terms.iter().fold(K::zero(), |acc, (m, c)| {
            let mut v = c.clone();
            for i in 0..3 {
                v = v * pp[i][m.p[i] as usize].clone() * lp[i][m.l[i] as usize].clone();
            }
            acc + v
        })
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut f = Self::zero(self.bidegree.0, self.bidegree.1);
        for (m, v) in &self.terms {
            f.add_term(*m, v.clone() * c.clone());
        }
        f
    }

    pub fn map_coeffs<L: Ring>(&self, f: impl Fn(&K) -> L) -> BiForm<L> {
        BiForm::from_terms(self.bidegree, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Exchange the roles of `p` and `l`; bidegree `(a,b)` becomes `(b,a)`.
    pub fn swap_roles(&self) -> Self {
        Self::from_terms(
            (self.bidegree.1, self.bidegree.0),
            self.terms.iter().map(|(m, c)| (m.swapped(), c.clone())),
        )
    }

    /// Partial derivative in `p_i`.
    pub fn partial_p(&self, i: usize) -> Self {
        self.partial(i, true)
    }

    /// Partial derivative in `l_i`.
    pub fn partial_l(&self, i: usize) -> Self {
        self.partial(i, false)
    }

    fn partial(&self, i: usize, in_p: bool) -> Self {
        let (a, b) = self.bidegree;
        let bideg = if in_p { (a.saturating_sub(1), b) } else { (a, b.saturating_sub(1)) };
        let mut f = Self::zero(bideg.0, bideg.1);
        for (m, c) in &self.terms {
            let mut m = *m;
            let e = if in_p { &mut m.p[i] } else { &mut m.l[i] };
            if *e == 0 {
                continue;
            }
            let factor = int_to_ring::<K>(*e as u64);
            *e -= 1;
            f.add_term(m, c.clone() * factor);
        }
        f
    }

    /// Normal form modulo the incidence form, rewriting `p0 l0` as
    /// `-(p1 l1 + p2 l2)`. The result is supported on standard monomials and is
    /// zero exactly when the input is a multiple of the incidence form.
    pub fn reduce_mod_incidence(&self) -> Self {
        let mut out = Self::zero(self.bidegree.0, self.bidegree.1);
        for (m, c) in &self.terms {
            let k = m.p[0].min(m.l[0]);
            if k == 0 {
                out.add_term(*m, c.clone());
                continue;
            }
            // (p0 l0)^k = (-1)^k sum_j C(k,j) (p1 l1)^j (p2 l2)^(k-j)
            let sign = if k % 2 == 1 { -c.clone() } else { c.clone() };
            let mut binom: u64 = 1;
            for j in 0..=k {
                let mut n = *m;
                n.p[0] -= k;
                n.l[0] -= k;
                n.p[1] += j;
                n.l[1] += j;
                n.p[2] += k - j;
                n.l[2] += k - j;
                out.add_term(n, sign.clone() * int_to_ring::<K>(binom));
                binom = binom * (k - j) as u64 / (j + 1) as u64;
            }
        }
        out
    }

    /// Substitute binary forms for the six variables. All `p` forms share one
    /// degree and all `l` forms another.
    pub fn substitute(&self, p: &[BinaryForm<K>; 3], l: &[BinaryForm<K>; 3]) -> BinaryForm<K> {
        let (a, b) = self.bidegree;
        let out_deg = a as usize * p[0].degree() + b as usize * l[0].degree();
        let pp: Vec<Vec<BinaryForm<K>>> = p.iter().map(|f| form_powers(f, a)).collect();
        let lp: Vec<Vec<BinaryForm<K>>> = l.iter().map(|f| form_powers(f, b)).collect();
        let mut acc = BinaryForm::zero(out_deg);
        for (m, c) in &self.terms {
            let mut term = BinaryForm::constant(c.clone());
            for i in 0..3 {
                term = term * pp[i][m.p[i] as usize].clone() * lp[i][m.l[i] as usize].clone();
            }
            acc = acc + term;
        }
        acc
    }
}

fn unit(i: usize) -> [u32; 3] {
    let mut e = [0; 3];
    e[i] = 1;
    e
}

fn powers<K: Ring>(x: &[K; 3], n: u32) -> [Vec<K>; 3] {
    let row = |v: &K| {
        let mut out = vec![K::one()];
        for _ in 0..n {
            let next = out.last().unwrap().clone() * v.clone();
            out.push(next);
        }
        out
    };
    [row(&x[0]), row(&x[1]), row(&x[2])]
}

fn form_powers<K: Ring>(f: &BinaryForm<K>, n: u32) -> Vec<BinaryForm<K>> {
    let mut out = vec![BinaryForm::constant(K::one())];
    for _ in 0..n {
        let next = out.last().unwrap().clone() * f.clone();
        out.push(next);
    }
    out
}

pub(crate) fn int_to_ring<K: Ring>(n: u64) -> K {
    // Double-and-add keeps this usable for rings without a from_int.
    let mut acc = K::zero();
    let mut base = K::one();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        n >>= 1;
    }
    acc
}

impl<K: Ring> Ring for BiForm<K> {
    fn zero() -> Self {
        Self::zero(0, 0)
    }

    fn one() -> Self {
        Self::constant(K::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Ring> Add for BiForm<K> {
    type Output = Self;
    /// Panics when both summands are nonzero with different bidegrees.
    fn add(mut self, o: Self) -> Self {
        if o.is_zero() {
            return self;
        }
        if self.is_zero() {
            return o;
        }
        assert_eq!(self.bidegree, o.bidegree, "adding forms of different bidegree");
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<K: Ring> Sub for BiForm<K> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<K: Ring> Neg for BiForm<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { bidegree: self.bidegree, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<K: Ring> Mul for BiForm<K> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (self.bidegree.0 + o.bidegree.0, self.bidegree.1 + o.bidegree.1);
        let mut f = Self::zero(a, b);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                f.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        f
    }
}

impl<K: Ring + fmt::Debug> fmt::Debug for BiForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiForm{:?}[", self.bidegree)?;
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})")?;
            for (name, exps) in [("p", m.p), ("l", m.l)] {
                for (i, e) in exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => write!(f, "{name}{i}")?,
                        e => write!(f, "{name}{i}^{e}")?,
                    }
                }
            }
        }
        write!(f, "]")
    }
}
