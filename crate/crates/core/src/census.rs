//! Brute-force conic census over small prime fields.
//!
//! Every pair `(q, m)` of points of `P2(F_p)` with `q . m != 0` is tested for
//! containment in a reduced surface by the same restriction used over `Q(i)`.
//! Results are mod-p evidence: a conic over `F_p` need not lift.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::{is_odd_prime, BiForm, Fp, GaussianRational, Monomial};
use crate::error::{Error, Result};
use crate::geometry::{conics_disjoint, contains_conic, Conic, ProjPoint};

/// Primes accepted by [`conic_census`] and [`max_disjoint_subset`].
pub const SUPPORTED_PRIMES: [u64; 14] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Default size up to which [`max_disjoint_subset`] searches exactly.
pub const EXACT_LIMIT: usize = 24;

macro_rules! with_prime {
    ($p:expr, $P:ident => $body:expr) => {
        match $p {
            3 => { const $P: u32 = 3; $body }
            5 => { const $P: u32 = 5; $body }
            7 => { const $P: u32 = 7; $body }
            11 => { const $P: u32 = 11; $body }
            13 => { const $P: u32 = 13; $body }
            17 => { const $P: u32 = 17; $body }
            19 => { const $P: u32 = 19; $body }
            23 => { const $P: u32 = 23; $body }
            29 => { const $P: u32 = 29; $body }
            31 => { const $P: u32 = 31; $body }
            37 => { const $P: u32 = 37; $body }
            41 => { const $P: u32 = 41; $body }
            43 => { const $P: u32 = 43; $body }
            47 => { const $P: u32 = 47; $body }
            other => Err(Error::UnsupportedPrime(other)),
        }
    };
}

/// A surface with coefficients in `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpSurface {
    pub p: u64,
    /// Image of `i`: the smallest square root of `-1`, present only when the
    /// original form had nonreal coefficients.
    pub i_image: Option<u64>,
    pub bidegree: (u32, u32),
    /// Nonzero residues in `0..p`.
    pub terms: BTreeMap<Monomial, u64>,
}

impl FpSurface {
    pub fn eval(&self, p: &[u64; 3], l: &[u64; 3]) -> u64 {
        let m = self.p;
        self.terms.iter().fold(0, |acc, (mono, &c)| {
            let mut v = c;
            for i in 0..3 {
                v = v * pow_mod(p[i], mono.p[i] as u64, m) % m;
                v = v * pow_mod(l[i], mono.l[i] as u64, m) % m;
            }
            (acc + v) % m
        })
    }

    fn to_form<const P: u32>(&self) -> BiForm<Fp<P>> {
        BiForm::from_terms(self.bidegree, self.terms.iter().map(|(m, &c)| (*m, Fp::<P>::new(c as i64))))
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Smallest `x` in `1..p` with `x^2 = -1 (mod p)`.
pub fn sqrt_minus_one(p: u64) -> Option<u64> {
    (1..p).find(|x| x * x % p == p - 1)
}

fn reduce_rational(r: &num_rational::BigRational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(Error::BadPrime(p));
    }
    let num = r.numer().mod_floor(&pb).to_u64().expect("residue fits");
    let den = den.to_u64().expect("residue fits");
    Ok(num * pow_mod(den, p - 2, p) % p)
}

/// Image of `z` in `F_p`, sending `i` to `i_image`.
pub fn reduce_scalar(z: &GaussianRational, p: u64, i_image: Option<u64>) -> Result<u64> {
    let re = reduce_rational(&z.re, p)?;
    if z.im.is_zero() {
        return Ok(re);
    }
    let i = i_image.ok_or(Error::NoSqrtMinusOne(p))?;
    Ok((re + i * reduce_rational(&z.im, p)?) % p)
}

/// Coefficientwise reduction of `f` modulo `p`.
pub fn reduce_mod_p(f: &BiForm<GaussianRational>, p: u64) -> Result<FpSurface> {
    if !is_odd_prime(p) || p >= 1 << 31 {
        return Err(Error::NotOddPrime(p));
    }
    let i_image = if f.terms().values().all(GaussianRational::is_real) {
        None
    } else {
        Some(sqrt_minus_one(p).ok_or(Error::NoSqrtMinusOne(p))?)
    };
    let mut terms = BTreeMap::new();
    for (m, c) in f.terms() {
        let v = reduce_scalar(c, p, i_image)?;
        if v != 0 {
            terms.insert(*m, v);
        }
    }
    if terms.is_empty() {
        return Err(Error::ZeroModP(p));
    }
    Ok(FpSurface { p, i_image, bidegree: f.bidegree(), terms })
}

/// A conic `L_{q,m}` over `F_p` with canonical coordinates (first nonzero entry one).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpConic {
    pub q: [u64; 3],
    pub m: [u64; 3],
}

impl FpConic {
    fn to_conic<const P: u32>(self) -> Conic<Fp<P>> {
        let pt = |v: [u64; 3]| ProjPoint::new(v.map(|x| Fp::<P>::new(x as i64))).expect("nonzero point");
        Conic::new(pt(self.q), pt(self.m))
    }
}

fn canonical(v: [u64; 3], p: u64) -> Option<[u64; 3]> {
    let lead = *v.iter().find(|&&x| x % p != 0)?;
    let inv = pow_mod(lead, p - 2, p);
    Some(v.map(|x| x % p * inv % p))
}

/// Reduction of a conic over `Q(i)`; `None` if a coordinate vector vanishes mod `p`.
pub fn reduce_conic(c: &Conic<GaussianRational>, p: u64, i_image: Option<u64>) -> Result<Option<FpConic>> {
    let red = |pt: &ProjPoint<GaussianRational>| -> Result<Option<[u64; 3]>> {
        let lcm = pt.coords().iter().fold(BigInt::from(1), |acc, z| acc.lcm(&z.denominator_lcm()));
        let scale = GaussianRational::real(num_rational::BigRational::from_integer(lcm));
        let mut v = [0u64; 3];
        for (slot, z) in v.iter_mut().zip(pt.coords()) {
            *slot = reduce_scalar(&(z * &scale), p, i_image)?;
        }
        Ok(canonical(v, p))
    };
    match (red(c.q())?, red(c.m())?) {
        (Some(q), Some(m)) => Ok(Some(FpConic { q, m })),
        _ => Ok(None),
    }
}

/// Points of `P2(F_p)` in canonical form, ascending.
pub fn projective_points(p: u64) -> Vec<[u64; 3]> {
    let mut out = vec![[0, 0, 1]];
    out.extend((0..p).map(|y| [0, 1, y]));
    for x in 0..p {
        out.extend((0..p).map(|y| [1, x, y]));
    }
    out
}

fn dot_mod(a: &[u64; 3], b: &[u64; 3], p: u64) -> u64 {
    (0..3).map(|i| a[i] * b[i] % p).sum::<u64>() % p
}

/// Whether the reduced surface contains the smooth conic `c`.
pub fn fp_contains(s: &FpSurface, c: &FpConic) -> Result<bool> {
    with_prime!(s.p, P => contains_conic(&s.to_form::<P>(), &c.to_conic::<P>()))
}

/// All smooth conics over `F_p` contained in `{S = 0}`, in lexicographic
/// `(q, m)` order. Scans `q` in parallel with an ordered merge.
pub fn conic_census(s: &FpSurface) -> Result<Vec<FpConic>> {
    with_prime!(s.p, P => census_impl::<P>(s))
}

fn census_impl<const P: u32>(s: &FpSurface) -> Result<Vec<FpConic>> {
    let p = P as u64;
    let f = s.to_form::<P>();
    let points = projective_points(p);
    let per_q: Vec<Vec<FpConic>> = points
        .par_iter()
        .map(|&q| {
            let mut hits = Vec::new();
            for &m in &points {
                if dot_mod(&q, &m, p) == 0 {
                    continue;
                }
                let c = FpConic { q, m };
                if contains_conic(&f, &c.to_conic::<P>())? {
                    hits.push(c);
                }
            }
            Ok(hits)
        })
        .collect::<Result<_>>()?;
    Ok(per_q.into_iter().flatten().collect())
}

/// Size of a largest pairwise disjoint family within a census.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisjointSubset {
    pub size: usize,
    /// `false` when the census exceeded the limit and `size` is a greedy lower bound.
    pub exact: bool,
}

/// Maximum pairwise disjoint subfamily: exact branch and bound up to `limit`
/// conics, greedy lower bound beyond.
pub fn max_disjoint_subset(p: u64, census: &[FpConic], limit: usize) -> Result<DisjointSubset> {
    let n = census.len();
    let adj: Vec<Vec<bool>> = with_prime!(p, P => {
        let conics: Vec<Conic<Fp<P>>> = census.iter().map(|c| c.to_conic::<P>()).collect();
        Ok((0..n)
            .map(|i| (0..n).map(|j| i != j && conics_disjoint(&conics[i], &conics[j]).unwrap_or(false)).collect())
            .collect())
    })?;
    if n <= limit.min(63) {
        let mut best = 0;
        let all: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
        let masks: Vec<u64> = adj
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &e)| e).fold(0u64, |m, (j, _)| m | 1 << j))
            .collect();
        clique(&masks, 0, all, &mut best);
        return Ok(DisjointSubset { size: best, exact: true });
    }
    let mut chosen: Vec<usize> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(adj[i].iter().filter(|&&e| e).count()));
    for i in order {
        if chosen.iter().all(|&j| adj[i][j]) {
            chosen.push(i);
        }
    }
    Ok(DisjointSubset { size: chosen.len(), exact: false })
}

/// Largest clique extending a set of `size` vertices by vertices of `candidates`.
fn clique(adj: &[u64], size: usize, candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    clique(adj, size + 1, candidates & adj[v], best);
    clique(adj, size, candidates & !(1 << v), best);
}
