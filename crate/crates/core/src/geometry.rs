//! Points of the flag threefold, conics `L_{q,m}`, twistor fibers and the
//! anti-holomorphic involution `j(p, l) = (conj l, conj p)`.

use rand::Rng;

use crate::algebra::{BiForm, BinaryForm, Field, GaussianRational, Ring};
use crate::error::{Error, Result};
use crate::rng;

pub fn dot<K: Ring>(a: &[K; 3], b: &[K; 3]) -> K {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn cross<K: Ring>(a: &[K; 3], b: &[K; 3]) -> [K; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// A point of the projective plane, stored with its first nonzero coordinate
/// scaled to one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint<K> {
    coords: [K; 3],
}

impl<K: Field> ProjPoint<K> {
    pub fn new(coords: [K; 3]) -> Result<Self> {
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let inv = lead.inv().expect("nonzero");
        Ok(Self { coords: coords.map(|c| c * inv.clone()) })
    }

    pub fn coords(&self) -> &[K; 3] {
        &self.coords
    }

    pub fn dot(&self, other: &Self) -> K {
        dot(&self.coords, &other.coords)
    }

    /// Index of the coordinate normalised to one.
    pub fn lead_index(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("canonical point is nonzero")
    }
}

impl ProjPoint<GaussianRational> {
    pub fn from_ints(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(GaussianRational::from))
    }

    pub fn conj(&self) -> Self {
        // conj(1) = 1, so the canonical form survives conjugation.
        Self { coords: self.coords.clone().map(|c| c.conj()) }
    }
}

/// A point `(p, l)` with `p . l = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagPoint<K> {
    pub p: ProjPoint<K>,
    pub l: ProjPoint<K>,
}

impl<K: Field> FlagPoint<K> {
    pub fn new(p: ProjPoint<K>, l: ProjPoint<K>) -> Result<Self> {
        if !p.dot(&l).is_zero() {
            return Err(Error::NotOnFlag);
        }
        Ok(Self { p, l })
    }
}

/// The curve `L_{q,m} = {(p, l) in F : p.m = 0, q.l = 0}`.
///
/// Smooth (an irreducible conic) exactly when `q.m != 0`; otherwise the union
/// of the two fibers `pi1^-1(q)` and `pi2^-1(m)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Conic<K> {
    q: ProjPoint<K>,
    m: ProjPoint<K>,
    smooth: bool,
}

impl<K: Field> Conic<K> {
    pub fn new(q: ProjPoint<K>, m: ProjPoint<K>) -> Self {
        let smooth = !q.dot(&m).is_zero();
        Self { q, m, smooth }
    }

    pub fn q(&self) -> &ProjPoint<K> {
        &self.q
    }

    pub fn m(&self) -> &ProjPoint<K> {
        &self.m
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    /// Degree-one parametrization `(p(s,t), q x p(s,t))`.
    ///
    /// `p(s,t)` runs over the line `p.m = 0` using the basis obtained by
    /// dropping the coordinate of `m` normalised to one. Injective on `P1`
    /// because `q` is not on that line.
    pub fn param(&self) -> Result<FlagCurve<K>> {
        if !self.smooth {
            return Err(Error::DegenerateConic);
        }
        let m = self.m.coords();
        let k = self.m.lead_index();
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        // basis vector for the free coordinate j: e_j - m_j e_k  (m_k = 1)
        let basis = |j: usize| -> [K; 3] {
            let mut v = [K::zero(), K::zero(), K::zero()];
            v[j] = K::one();
            v[k] = -m[j].clone();
            v
        };
        let (v1, v2) = (basis(others[0]), basis(others[1]));
        let p: [BinaryForm<K>; 3] =
            std::array::from_fn(|i| BinaryForm::new(vec![v1[i].clone(), v2[i].clone()]));
        let q = self.q.coords();
        let l = [
            p[2].scale(&q[1]) - p[1].scale(&q[2]),
            p[0].scale(&q[2]) - p[2].scale(&q[0]),
            p[1].scale(&q[0]) - p[0].scale(&q[1]),
        ];
        FlagCurve::new(p, l)
    }
}

impl Conic<GaussianRational> {
    /// The twistor fiber over `q`: `L_{q, conj q}`, smooth since
    /// `q . conj q = sum |q_i|^2 > 0`.
    pub fn twistor_fiber(q: ProjPoint<GaussianRational>) -> Self {
        let m = q.conj();
        Self::new(q, m)
    }

    /// Image under `j`: `L_{q,m}` goes to `L_{conj m, conj q}`.
    pub fn j(&self) -> Self {
        Self::new(self.m.conj(), self.q.conj())
    }

    pub fn is_twistor_fiber(&self) -> bool {
        self.m == self.q.conj()
    }
}

/// Substitute the conic's parametrization into `f`; a binary form of degree
/// `a + b` that vanishes identically iff the conic lies on `{f = 0}`.
pub fn restrict_to_conic<K: Field>(f: &BiForm<K>, c: &Conic<K>) -> Result<BinaryForm<K>> {
    let curve = c.param()?;
    Ok(f.substitute(&curve.p, &curve.l))
}

pub fn contains_conic<K: Field>(f: &BiForm<K>, c: &Conic<K>) -> Result<bool> {
    Ok(restrict_to_conic(f, c)?.is_zero())
}

/// Whether `L_{q1,m1}` and `L_{q2,m2}` have no common point.
///
/// With `m1, m2` independent the only candidate `p` is `m1 x m2`, and likewise
/// `l = q1 x q2`; the curves meet iff that pair is a flag. If `m1 ~ m2` (or
/// `q1 ~ q2`) the `p` (or `l`) solutions form a line and a flag always exists.
/// Valid for degenerate `L_{q,m}` as well.
pub fn conics_disjoint<K: Field>(c1: &Conic<K>, c2: &Conic<K>) -> Result<bool> {
    if c1.q == c2.q && c1.m == c2.m {
        return Err(Error::IdenticalConics);
    }
    if c1.q == c2.q || c1.m == c2.m {
        return Ok(false);
    }
    let p = cross(c1.m.coords(), c2.m.coords());
    let l = cross(c1.q.coords(), c2.q.coords());
    Ok(!dot(&p, &l).is_zero())
}

/// `j^* f`: conjugate the coefficients and exchange the roles of `p` and `l`.
pub fn j_pullback(f: &BiForm<GaussianRational>) -> BiForm<GaussianRational> {
    f.swap_roles().map_coeffs(GaussianRational::conj)
}

/// Whether `j^* f` is a nonzero multiple of `f` modulo the incidence form.
pub fn is_j_invariant(f: &BiForm<GaussianRational>) -> Result<bool> {
    let (a, b) = f.bidegree();
    if a != b {
        return Err(Error::NonSquareBidegree(a, b));
    }
    let nf = f.reduce_mod_incidence();
    let ng = j_pullback(f).reduce_mod_incidence();
    Ok(proportional(&nf, &ng))
}

pub(crate) fn proportional<K: Field>(f: &BiForm<K>, g: &BiForm<K>) -> bool {
    let Some((m, c)) = f.terms().iter().next() else {
        return g.is_zero();
    };
    let Some(lambda) = g.coeff(m).div(c) else {
        return false;
    };
    !lambda.is_zero() && f.scale(&lambda) == *g
}

/// A rational curve in `F` given by two triples of binary forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagCurve<K: Ring> {
    pub p: [BinaryForm<K>; 3],
    pub l: [BinaryForm<K>; 3],
}

impl<K: Field> FlagCurve<K> {
    pub fn new(p: [BinaryForm<K>; 3], l: [BinaryForm<K>; 3]) -> Result<Self> {
        for triple in [&p, &l] {
            if triple.iter().any(|f| f.degree() != triple[0].degree()) {
                return Err(Error::InvalidCurve("forms of a triple must share a degree"));
            }
            if triple.iter().all(BinaryForm::is_zero) {
                return Err(Error::InvalidCurve("triple is identically zero"));
            }
        }
        let pairing = (0..3)
            .map(|i| p[i].clone() * l[i].clone())
            .reduce(|acc, x| acc + x)
            .expect("three terms");
        if !pairing.is_zero() {
            return Err(Error::InvalidCurve("incidence pairing does not vanish"));
        }
        Ok(Self { p, l })
    }

    pub fn point_at(&self, s: &K, t: &K) -> Result<FlagPoint<K>> {
        let p = ProjPoint::new(self.p.clone().map(|f| f.eval(s, t)))?;
        let l = ProjPoint::new(self.l.clone().map(|f| f.eval(s, t)))?;
        FlagPoint::new(p, l)
    }
}

/// Divide a triple by the gcd of its members.
pub fn remove_base_points<K: Field>(triple: &[BinaryForm<K>; 3]) -> Result<[BinaryForm<K>; 3]> {
    let g = triple[0].gcd(&triple[1]).and_then(|g| g.gcd(&triple[2]))?;
    let reduced: Option<Vec<_>> = triple.iter().map(|f| f.div_exact(&g)).collect();
    let reduced = reduced.ok_or_else(|| Error::Internal("gcd does not divide".into()))?;
    Ok(reduced.try_into().expect("three forms"))
}

/// Bidegree `(C.O(1,0), C.O(0,1))` of a parametrized curve, counted with the
/// degree of the parametrization.
///
/// Each side is the degree of the pairing of the base-point-free triple with a
/// random constant vector; three seeded draws vote.
pub fn curve_bidegree(curve: &FlagCurve<GaussianRational>) -> Result<(u32, u32)> {
    if curve.p[0].degree() == 0 && curve.l[0].degree() == 0 {
        return Ok((0, 0));
    }
    let mut rng = rng::seeded(0x6269_6465_6772_6565);
    let mut side = |triple: &[BinaryForm<GaussianRational>; 3]| -> Result<u32> {
        let reduced = remove_base_points(triple)?;
        let mut votes = Vec::new();
        for _ in 0..3 {
            let m: [GaussianRational; 3] = std::array::from_fn(|_| rng::gaussian_int(&mut rng, 100));
            let pairing = (0..3)
                .map(|i| reduced[i].scale(&m[i]))
                .reduce(|acc, x| acc + x)
                .expect("three terms");
            if !pairing.is_zero() {
                votes.push(pairing.degree() as u32);
            }
        }
        votes
            .iter()
            .copied()
            .find(|v| votes.iter().filter(|w| *w == v).count() * 2 > votes.len())
            .ok_or(Error::InvalidCurve("pairing degree undetermined"))
    };
    let d1 = side(&curve.p)?;
    let d2 = side(&curve.l)?;
    if d1 == 0 && d2 == 0 {
        return Err(Error::InvalidCurve("parametrization is constant"));
    }
    Ok((d1, d2))
}

/// A uniformly random flag point with integer coordinates of height at most `height`.
pub fn random_flag_point<R: Rng>(rng: &mut R, height: i64) -> FlagPoint<GaussianRational> {
    loop {
        let p = rng::gaussian_vector(rng, height);
        let r = rng::gaussian_vector(rng, height);
        let l = cross(&p, &r);
        if let (Ok(p), Ok(l)) = (ProjPoint::new(p), ProjPoint::new(l)) {
            return FlagPoint::new(p, l).expect("p . (p x r) = 0");
        }
    }
}
