//! Interpolation of surfaces through prescribed conics.
//!
//! A form of bidegree `(a, b)` is identified with its normal form modulo the
//! incidence form; standard monomials (those not divisible by `p0 l0`) index
//! the columns. A smooth conic imposes `a + b + 1` linear conditions: the
//! coefficients of the restriction to its parametrization.

use rand::Rng;
use rayon::prelude::*;

use crate::algebra::matrix::row_reduce;
use crate::algebra::{BiForm, BinaryForm, Field, GaussianRational, Monomial, Ring};
use crate::error::{Error, Result};
use crate::geometry::{conics_disjoint, contains_conic, Conic, FlagCurve, FlagPoint};
use crate::rng;

type Q = GaussianRational;

/// Coordinate height used when sampling general conics.
pub const SAMPLE_HEIGHT: i64 = 100;

fn check_nonnegative(a: i64, b: i64) -> Result<(u64, u64)> {
    if a < 0 || b < 0 {
        return Err(Error::NegativeDegree);
    }
    Ok((a as u64, b as u64))
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `h^0(O_F(a,b))`: monomials of bidegree `(a,b)` minus multiples of the
/// incidence form, `((a+1)(a+2)(b+1)(b+2) - a(a+1)b(b+1)) / 4`.
pub fn h0_flag(a: i64, b: i64) -> Result<u64> {
    let (a, b) = check_nonnegative(a, b)?;
    Ok(((a + 1) * (a + 2) * (b + 1) * (b + 2) - a * (a + 1) * b * (b + 1)) / 4)
}

/// Which Hirzebruch surface `F_1` of the flag threefold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HirzebruchSide {
    /// A surface of bidegree `(1,0)`.
    X,
    /// A surface of bidegree `(0,1)`.
    Y,
}

/// `h^0(O_X(a,b)) = a(b+1) + C(b+2,2)` and `h^0(O_Y(a,b)) = b(a+1) + C(a+2,2)`.
pub fn h0_hirzebruch(side: HirzebruchSide, a: i64, b: i64) -> Result<u64> {
    let (a, b) = check_nonnegative(a, b)?;
    Ok(match side {
        HirzebruchSide::X => a * (b + 1) + binom2(b + 2),
        HirzebruchSide::Y => b * (a + 1) + binom2(a + 2),
    })
}

/// `h0_flag(a,b) - x(a+b+1)`, the dimension when conics impose independent
/// conditions. May be negative.
pub fn expected_dimension(a: i64, b: i64, x: usize) -> Result<i64> {
    Ok(h0_flag(a, b)? as i64 - x as i64 * (a + b + 1))
}

/// Whether `(a, b, x)` lies in the range where independence is a theorem:
/// `b >= a >= 1` and `x <= a(a-1)/2`.
pub fn in_vanishing_range(a: i64, b: i64, x: usize) -> bool {
    a >= 1 && b >= a && (x as i64) <= a * (a - 1) / 2
}

/// Linear conditions on standard-monomial coefficients for containing each conic.
#[derive(Clone, Debug)]
pub struct ConditionMatrix {
    pub bidegree: (u32, u32),
    pub columns: Vec<Monomial>,
    /// `a + b + 1` consecutive rows per conic.
    pub rows: Vec<Vec<Q>>,
}

impl ConditionMatrix {
    pub fn ncols(&self) -> usize {
        self.columns.len()
    }
}

fn validate(a: i64, b: i64, conics: &[Conic<Q>]) -> Result<(u32, u32)> {
    let (a, b) = check_nonnegative(a, b)?;
    for (i, c) in conics.iter().enumerate() {
        if !c.is_smooth() {
            return Err(Error::DegenerateConic);
        }
        if conics[..i].contains(c) {
            return Err(Error::IdenticalConics);
        }
    }
    Ok((a as u32, b as u32))
}

/// Restrictions of every standard monomial to one parametrized conic.
fn conic_rows(curve: &FlagCurve<Q>, a: u32, b: u32, columns: &[Monomial]) -> Vec<Vec<Q>> {
    let deg = (a + b) as usize;
    let powers = |f: &BinaryForm<Q>, n: u32| {
        let mut out = vec![BinaryForm::constant(Q::one())];
        for _ in 0..n {
            let next = out.last().unwrap().clone() * f.clone();
            out.push(next);
        }
        out
    };
    let pp: Vec<_> = curve.p.iter().map(|f| powers(f, a)).collect();
    let lp: Vec<_> = curve.l.iter().map(|f| powers(f, b)).collect();
    let mut rows = vec![vec![Q::zero(); columns.len()]; deg + 1];
    for (j, m) in columns.iter().enumerate() {
        let mut r = BinaryForm::constant(Q::one());
        for i in 0..3 {
            r = r * pp[i][m.p[i] as usize].clone() * lp[i][m.l[i] as usize].clone();
        }
        for (k, c) in r.into_coeffs().into_iter().enumerate() {
            rows[k][j] = c;
        }
    }
    rows
}

/// Assemble the condition matrix; conics are processed in parallel and the
/// rows concatenated in input order.
pub fn condition_matrix(a: i64, b: i64, conics: &[Conic<Q>]) -> Result<ConditionMatrix> {
    let (a, b) = validate(a, b, conics)?;
    let columns = Monomial::standard(a, b);
    let blocks: Vec<Vec<Vec<Q>>> = conics
        .par_iter()
        .map(|c| c.param().map(|curve| conic_rows(&curve, a, b, &columns)))
        .collect::<Result<_>>()?;
    Ok(ConditionMatrix { bidegree: (a, b), columns, rows: blocks.into_iter().flatten().collect() })
}

/// Surfaces of bidegree `(a, b)` containing every prescribed conic.
#[derive(Clone, Debug)]
pub struct SurfaceFamily {
    pub bidegree: (u32, u32),
    /// Independent modulo the incidence form; supported on standard monomials.
    pub basis: Vec<BiForm<Q>>,
    pub prescribed: Vec<Conic<Q>>,
}

impl SurfaceFamily {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub fn surface_family(a: i64, b: i64, conics: &[Conic<Q>]) -> Result<SurfaceFamily> {
    let cm = condition_matrix(a, b, conics)?;
    let red = row_reduce(&cm.rows, cm.ncols())?;
    let basis = red
        .kernel
        .into_iter()
        .map(|v| BiForm::from_terms(cm.bidegree, cm.columns.iter().copied().zip(v)))
        .collect();
    Ok(SurfaceFamily { bidegree: cm.bidegree, basis, prescribed: conics.to_vec() })
}

/// Exact dimension of the space of forms (modulo incidence) through the conics.
pub fn system_dimension(a: i64, b: i64, conics: &[Conic<Q>]) -> Result<usize> {
    let cm = condition_matrix(a, b, conics)?;
    let red = row_reduce(&cm.rows, cm.ncols())?;
    Ok(cm.ncols() - red.rank)
}

/// A seeded pseudo-random member of the family: Gaussian-integer combination
/// of the basis with coefficients of height at most 100.
pub fn random_member<R: Rng>(family: &SurfaceFamily, rng: &mut R) -> Result<BiForm<Q>> {
    if family.basis.is_empty() {
        return Err(Error::EmptySystem);
    }
    loop {
        let f = family
            .basis
            .iter()
            .map(|g| g.scale(&rng::gaussian_int(rng, 100)))
            .fold(BiForm::zero(family.bidegree.0, family.bidegree.1), |acc, x| acc + x);
        if !f.is_zero() {
            return Ok(f);
        }
    }
}

/// Pseudo-general surface of bidegree `(a, b)` through the conics.
pub fn surface_through_conics(a: i64, b: i64, conics: &[Conic<Q>], seed: u64) -> Result<BiForm<Q>> {
    let family = surface_family(a, b, conics)?;
    random_member(&family, &mut rng::seeded(seed))
}

/// `x` smooth, distinct, pairwise disjoint conics with Gaussian-integer
/// coordinates of height at most [`SAMPLE_HEIGHT`]. Draws that fail these
/// conditions are redrawn.
pub fn random_general_conics<R: Rng>(x: usize, rng: &mut R) -> Result<Vec<Conic<Q>>> {
    const MAX_ATTEMPTS: usize = 1000;
    let mut out: Vec<Conic<Q>> = Vec::with_capacity(x);
    let mut attempts = 0;
    while out.len() < x {
        attempts += 1;
        if attempts > MAX_ATTEMPTS {
            return Err(Error::SamplingExhausted(MAX_ATTEMPTS));
        }
        let c = rng::smooth_conic(rng, SAMPLE_HEIGHT);
        let ok = out.iter().all(|d| d != &c && conics_disjoint(d, &c).unwrap_or(false));
        if ok {
            out.push(c);
        }
    }
    Ok(out)
}

/// One sample of the dimension experiment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTrial {
    pub observed: usize,
    pub expected: i64,
    /// `observed - max(expected, 0)`; the observed `h^1` when positive.
    pub defect: i64,
    pub in_vanishing_range: bool,
    /// Redraws after a rank drop inside the vanishing range.
    pub resamples: usize,
}

/// Observed versus expected dimension through `x` random general conics.
///
/// Inside the vanishing range a defect is treated as a non-general draw and
/// redrawn (at most three times); the count is reported in `resamples`.
pub fn dimension_report(a: i64, b: i64, x: usize, trials: usize, seed: u64) -> Result<Vec<DimensionTrial>> {
    const MAX_RESAMPLES: usize = 3;
    let expected = expected_dimension(a, b, x)?;
    let proven = in_vanishing_range(a, b, x);
    let mut rng = rng::seeded(seed);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let mut resamples = 0;
        let observed = loop {
            let conics = random_general_conics(x, &mut rng)?;
            let observed = system_dimension(a, b, &conics)?;
            if !proven || observed as i64 == expected.max(0) || resamples == MAX_RESAMPLES {
                break observed;
            }
            resamples += 1;
        };
        out.push(DimensionTrial {
            observed,
            expected,
            defect: observed as i64 - expected.max(0),
            in_vanishing_range: proven,
            resamples,
        });
    }
    Ok(out)
}

/// Singular points of `{F = 0}` on a conic it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularLocus {
    /// The surface is singular at every point of the conic.
    WholeConic,
    /// Singular exactly at the roots of `locus` on the conic's parameter line;
    /// `points` lists those roots that are rational over `Q(i)`.
    Points { locus: BinaryForm<Q>, points: Vec<FlagPoint<Q>> },
}

/// Singular points of the surface `{F = 0} ∩ F` along a contained smooth conic.
///
/// The surface is singular at a flag point exactly when the gradient of `F`
/// is proportional to the gradient `(l, p)` of the incidence form. The
/// fifteen 2x2 minors of the two gradients are restricted to the conic and
/// their gcd is taken; `None` means the gcd is constant.
pub fn conic_singularity_witness(f: &BiForm<Q>, c: &Conic<Q>) -> Result<Option<SingularLocus>> {
    if !contains_conic(f, c)? {
        return Err(Error::NotContained);
    }
    let (a, b) = f.bidegree();
    let curve = c.param()?;
    let grad_deg = (a + b).saturating_sub(1) as usize;
    let restrict = |g: BiForm<Q>| -> BinaryForm<Q> {
        let r = g.substitute(&curve.p, &curve.l);
        if r.is_zero() {
            BinaryForm::zero(grad_deg)
        } else {
            r
        }
    };
    let grad_f: Vec<BinaryForm<Q>> = (0..3)
        .map(|i| restrict(f.partial_p(i)))
        .chain((0..3).map(|i| restrict(f.partial_l(i))))
        .collect();
    // gradient of p.l is (l, p)
    let grad_g: Vec<BinaryForm<Q>> = curve.l.iter().chain(curve.p.iter()).cloned().collect();
    let mut gcd: Option<BinaryForm<Q>> = None;
    for i in 0..6 {
        for j in i + 1..6 {
            let minor = grad_f[i].clone() * grad_g[j].clone() - grad_f[j].clone() * grad_g[i].clone();
            if minor.is_zero() {
                continue;
            }
            gcd = Some(match gcd {
                None => minor.monic(),
                Some(g) => g.gcd(&minor)?,
            });
        }
    }
    let Some(locus) = gcd else {
        return Ok(Some(SingularLocus::WholeConic));
    };
    if locus.degree() == 0 {
        return Ok(None);
    }
    let points = gaussian_roots(&locus)
        .into_iter()
        .map(|(s, t)| curve.point_at(&s, &t))
        .collect::<Result<_>>()?;
    Ok(Some(SingularLocus::Points { locus, points }))
}

/// Projective roots `(s, t)` over `Q(i)` of a nonzero binary form, found for
/// the factor `t^k` and for remaining parts of degree at most two.
pub fn gaussian_roots(f: &BinaryForm<Q>) -> Vec<(Q, Q)> {
    let mut roots = Vec::new();
    let k = f.t_multiplicity();
    if k > 0 {
        roots.push((Q::one(), Q::zero()));
    }
    let rest = &f.coeffs()[k..];
    match rest {
        [c0, c1] => roots.push((-(c1.div(c0).expect("nonzero lead")), Q::one())),
        [c0, c1, c2] => {
            let disc = c1.clone() * c1.clone() - Q::from(4) * c0.clone() * c2.clone();
            if let Some(r) = disc.sqrt() {
                let two_c0 = Q::from(2) * c0.clone();
                for sign in [Q::one(), -Q::one()] {
                    let s = (-c1.clone() + sign * r.clone()).div(&two_c0).expect("nonzero lead");
                    if !roots.contains(&(s.clone(), Q::one())) {
                        roots.push((s, Q::one()));
                    }
                }
            }
        }
        _ => {}
    }
    roots
}
