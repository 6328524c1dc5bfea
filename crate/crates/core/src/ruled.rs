//! Surfaces of bidegree `(a,a)` swept by a circle of twistor fibers.
//!
//! A real binary triple `f` of degree `a` traces a rational curve in `P2`;
//! the surface is the union of the conics `L_{f(x), f(x)}`. A flag `(p, l)`
//! lies on such a conic iff `p . f` and `l . f` share a root, so the surface
//! is cut out by their resultant in `(s, t)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;

use crate::algebra::matrix::det_by_minors;
use crate::algebra::{BiForm, BinaryForm, GaussianRational, Ring};
use crate::error::{Error, Result};
use crate::geometry::{cross, is_j_invariant, Conic, ProjPoint};
use crate::linear_systems::{conic_singularity_witness, SingularLocus};
use crate::rng;

type Q = GaussianRational;

/// A projective parameter `(s : t)` on the real line; `(1 : 0)` is the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub s: Q,
    pub t: Q,
}

impl Param {
    /// `x` as `(x : 1)`.
    pub fn affine(x: BigRational) -> Self {
        Self { s: Q::real(x), t: Q::one() }
    }

    pub fn infinity() -> Self {
        Self { s: Q::one(), t: Q::zero() }
    }
}

/// One certified parameter and its ruling conic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessParam {
    pub param: Param,
    pub conic: Conic<Q>,
}

#[derive(Clone, Debug)]
pub struct RuledSurfaceSpec {
    pub f: [BinaryForm<Q>; 3],
    /// Bidegree `(a, a)`, real coefficients.
    pub surface: BiForm<Q>,
    /// The parameters at which containment was checked; enough of them to
    /// certify containment of every ruling conic.
    pub witness_params: Vec<WitnessParam>,
}

impl RuledSurfaceSpec {
    pub fn degree(&self) -> usize {
        self.f[0].degree()
    }

    /// The ruling conic `L_{f(s,t), f(s,t)}`.
    pub fn fiber(&self, param: &Param) -> Result<Conic<Q>> {
        ruling_fiber(&self.f, param)
    }
}

fn ruling_fiber(f: &[BinaryForm<Q>; 3], param: &Param) -> Result<Conic<Q>> {
    let q = ProjPoint::new(f.clone().map(|g| g.eval(&param.s, &param.t)))?;
    Ok(Conic::twistor_fiber(q))
}

/// Build the surface swept by the ruling of `f`.
///
/// Checks, in order: common degree at least 2, real coefficients, no common
/// factor, birationality onto the image (three seeded image points must each
/// have exactly one preimage), optionally `f . f > 0` on the real line, a
/// nonzero resultant modulo the incidence form, and containment of every
/// ruling conic certified by sampling past the degree bound.
pub fn twistor_ruled_surface(f: [BinaryForm<Q>; 3], check_positivity: bool) -> Result<RuledSurfaceSpec> {
    let a = f[0].degree();
    if f.iter().any(|g| g.degree() != a) {
        return Err(Error::InvalidCurve("forms of a triple must share a degree"));
    }
    if a < 2 {
        return Err(Error::DegreeTooSmall(a));
    }
    if f.iter().any(|g| g.coeffs().iter().any(|c| !c.is_real())) {
        return Err(Error::NonRealForms);
    }
    if f.iter().all(BinaryForm::is_zero) {
        return Err(Error::InvalidCurve("triple is identically zero"));
    }
    let mut g = BinaryForm::zero(a);
    for h in &f {
        g = if g.is_zero() { h.monic() } else { g.gcd(h)? };
    }
    if g.degree() > 0 {
        return Err(Error::CommonFactor);
    }
    check_birational(&f)?;
    if check_positivity && !is_positive_on_real_line(&f) {
        return Err(Error::NotPositive);
    }

    let surface = sweep_resultant(&f);
    if surface.reduce_mod_incidence().is_zero() {
        return Err(Error::VanishingResultant);
    }
    let a32 = a as u32;
    if surface.bidegree() != (a32, a32)
        || surface.terms().keys().any(|m| m.bidegree() != (a32, a32))
    {
        return Err(Error::Internal(format!("resultant has bidegree {:?}", surface.bidegree())));
    }
    let witness_params = certify_containment(&f, &surface)?;
    Ok(RuledSurfaceSpec { f, surface, witness_params })
}

/// `Res_{(s,t)}(p . f, l . f)` via the Sylvester matrix with linear-form entries.
pub fn sweep_resultant(f: &[BinaryForm<Q>; 3]) -> BiForm<Q> {
    let a = f[0].degree();
    let coeff_forms = |linear: fn(&[Q; 3]) -> BiForm<Q>| -> Vec<BiForm<Q>> {
        (0..=a)
            .map(|k| linear(&std::array::from_fn(|i| f[i].coeffs()[k].clone())))
            .collect()
    };
    let pf = coeff_forms(BiForm::linear_p);
    let lf = coeff_forms(BiForm::linear_l);
    let n = 2 * a;
    let mut m = vec![vec![BiForm::zero(0, 0); n]; n];
    for r in 0..a {
        m[r][r..=r + a].clone_from_slice(&pf);
        m[a + r][r..=r + a].clone_from_slice(&lf);
    }
    let det = det_by_minors(&m);
    if det.is_zero() {
        BiForm::zero(a as u32, a as u32)
    } else {
        det
    }
}

/// The three coordinate pairings of `f` with `y`; they vanish together
/// exactly at the parameters mapping to `y`.
fn fiber_forms(f: &[BinaryForm<Q>; 3], y: &[Q; 3]) -> [BinaryForm<Q>; 3] {
    let c = |i: usize, j: usize| f[i].scale(&y[j]) - f[j].scale(&y[i]);
    [c(1, 2), c(2, 0), c(0, 1)]
}

fn check_birational(f: &[BinaryForm<Q>; 3]) -> Result<()> {
    let mut rng = rng::seeded(0x6269_7261_7469_6f6e);
    for _ in 0..3 {
        let x = BigRational::new(BigInt::from(rng.gen_range(-1000i64..=1000)), BigInt::from(rng.gen_range(1i64..=97)));
        let param = Param::affine(x);
        let y: [Q; 3] = std::array::from_fn(|i| f[i].eval(&param.s, &param.t));
        let forms = fiber_forms(f, &y);
        let mut g: Option<BinaryForm<Q>> = None;
        for h in forms.iter().filter(|h| !h.is_zero()) {
            g = Some(match g {
                None => h.monic(),
                Some(g) => g.gcd(h)?,
            });
        }
        // all pairings zero means f is constant up to scale
        let preimages = g.map_or(usize::MAX, |g| g.degree());
        if preimages != 1 {
            return Err(Error::NotBirational);
        }
    }
    Ok(())
}

/// Parameters sampled for the containment certificate.
///
/// With `p(s,t) = q x (s e_u + t e_w)` and `l = q x p` for `q = f(x)`, the
/// restriction has coefficients homogeneous in `x` of degree
/// `a deg_x(p) + a deg_x(l) = 3a^2`; vanishing at `3a^2 + 1` points of `P1`
/// forces them to vanish identically.
pub fn certificate_bound(a: usize) -> usize {
    let p_deg = a;
    let l_deg = 2 * a;
    a * p_deg + a * l_deg
}

fn certify_containment(f: &[BinaryForm<Q>; 3], surface: &BiForm<Q>) -> Result<Vec<WitnessParam>> {
    let a = f[0].degree();
    let k = f.iter().position(|g| !g.is_zero()).expect("nonzero triple");
    let (u, w) = match k {
        0 => (1, 2),
        1 => (2, 0),
        _ => (0, 1),
    };
    let params = real_params(certificate_bound(a) + 1);
    let checked: Vec<Result<WitnessParam>> = params
        .into_par_iter()
        .map(|param| {
            let q: [Q; 3] = std::array::from_fn(|i| f[i].eval(&param.s, &param.t));
            let eu = unit(u);
            let ew = unit(w);
            let pu = cross(&q, &eu);
            let pw = cross(&q, &ew);
            let p: [BinaryForm<Q>; 3] = std::array::from_fn(|i| BinaryForm::new(vec![pu[i].clone(), pw[i].clone()]));
            let l: [BinaryForm<Q>; 3] = {
                let qq = q.clone().map(BinaryForm::constant);
                [
                    qq[1].clone() * p[2].clone() - qq[2].clone() * p[1].clone(),
                    qq[2].clone() * p[0].clone() - qq[0].clone() * p[2].clone(),
                    qq[0].clone() * p[1].clone() - qq[1].clone() * p[0].clone(),
                ]
            };
            if !surface.substitute(&p, &l).is_zero() {
                return Err(Error::NotContained);
            }
            let conic = ruling_fiber(f, &param)?;
            Ok(WitnessParam { param, conic })
        })
        .collect();
    checked.into_iter().collect()
}

fn unit(i: usize) -> [Q; 3] {
    std::array::from_fn(|j| if i == j { Q::one() } else { Q::zero() })
}

/// The first `n` points of a fixed enumeration of `P1(Q)` over the real line:
/// `0, 1, inf, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, 3/2, ...`.
pub fn real_params(n: usize) -> Vec<Param> {
    let mut out = vec![
        Param::affine(BigRational::zero()),
        Param::affine(BigRational::one()),
        Param::infinity(),
        Param::affine(-BigRational::one()),
    ];
    let mut h: i64 = 2;
    while out.len() < n {
        let mut level = Vec::new();
        for k in 1..h {
            if num_integer::gcd(k, h) == 1 {
                level.push((h, k));
                level.push((k, h));
            }
        }
        for (num, den) in level {
            for sign in [1, -1] {
                out.push(Param::affine(BigRational::new(BigInt::from(sign * num), BigInt::from(den))));
            }
        }
        h += 1;
    }
    out.truncate(n);
    out
}

/// `n` ruling fibers at the first `n` real parameters (including infinity).
pub fn twistor_circle_samples(spec: &RuledSurfaceSpec, n: usize) -> Result<Vec<Conic<Q>>> {
    real_params(n).iter().map(|p| spec.fiber(p)).collect()
}

/// A seeded random real parameter `num/den` with `|num| <= height`, `1 <= den <= height`.
pub fn random_param<R: Rng>(rng: &mut R, height: i64) -> Param {
    let num = rng.gen_range(-height..=height);
    let den = rng.gen_range(1..=height);
    Param::affine(BigRational::new(num.into(), den.into()))
}

/// `f . f` has no zero on the real line: Sturm count of real roots of
/// `sum f_i(x,1)^2` plus the leading coefficient for the point at infinity.
pub fn is_positive_on_real_line(f: &[BinaryForm<Q>; 3]) -> bool {
    let re = |g: &BinaryForm<Q>| g.map(|c| Q::real(c.re.clone()));
    let ff = f.iter().map(|g| re(g) * re(g)).reduce(|x, y| x + y).expect("three forms");
    if ff.coeffs()[0].is_zero() {
        return false;
    }
    // f(x, 1), low-to-high
    let mut poly: Vec<BigRational> = ff.coeffs().iter().rev().map(|c| c.re.clone()).collect();
    trim(&mut poly);
    sturm_real_roots(&poly) == 0
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let c = r.last().unwrap().clone() / &lead;
        let shift = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn sign_changes(values: impl Iterator<Item = i8>) -> usize {
    let signs: Vec<i8> = values.filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of a nonzero polynomial (low-to-high).
pub(crate) fn sturm_real_roots(p: &[BigRational]) -> usize {
    if p.len() <= 1 {
        return 0;
    }
    let deriv: Vec<BigRational> = p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect();
    let mut seq = vec![p.to_vec(), deriv];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let r: Vec<BigRational> = poly_rem(&seq[n - 2], &seq[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    let sgn = |c: &BigRational| if c.is_positive() { 1 } else { -1 };
    let at_pos = seq.iter().map(|q| sgn(q.last().unwrap()));
    let at_neg = seq.iter().map(|q| {
        let s = sgn(q.last().unwrap());
        if (q.len() - 1) % 2 == 1 { -s } else { s }
    });
    sign_changes(at_neg) - sign_changes(at_pos)
}

/// Outcome of the singularity search. There is deliberately no verdict
/// certifying smoothness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothnessVerdict {
    /// Some sampled fiber carries singular points of the surface.
    SingularWitnessFound,
    /// No sampled fiber exhibited a singular point.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberSingularities {
    pub param: Param,
    pub conic: Conic<Q>,
    pub locus: Option<SingularLocus>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessProfile {
    pub fibers: Vec<FiberSingularities>,
    pub verdict: SmoothnessVerdict,
}

/// Singularity witnesses along the first `samples` ruling fibers.
pub fn smoothness_profile(spec: &RuledSurfaceSpec, samples: usize) -> Result<SmoothnessProfile> {
    let fibers: Vec<FiberSingularities> = real_params(samples)
        .into_par_iter()
        .map(|param| {
            let conic = spec.fiber(&param)?;
            let locus = conic_singularity_witness(&spec.surface, &conic)?;
            Ok(FiberSingularities { param, conic, locus })
        })
        .collect::<Result<_>>()?;
    let verdict = if fibers.iter().any(|f| f.locus.is_some()) {
        SmoothnessVerdict::SingularWitnessFound
    } else {
        SmoothnessVerdict::Inconclusive
    };
    Ok(SmoothnessProfile { fibers, verdict })
}

/// Whether the spec's surface is j-invariant (checked modulo the incidence form).
pub fn check_j_invariance(spec: &RuledSurfaceSpec) -> Result<bool> {
    is_j_invariant(&spec.surface)
}

/// `(s^2, st, t^2)`.
pub fn veronese_conic() -> [BinaryForm<Q>; 3] {
    [
        BinaryForm::monomial(2, 0, Q::one()),
        BinaryForm::monomial(2, 1, Q::one()),
        BinaryForm::monomial(2, 2, Q::one()),
    ]
}
