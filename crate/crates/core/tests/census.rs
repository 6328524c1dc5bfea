use flagcalc::census::{
    conic_census, fp_contains, projective_points, reduce_conic, reduce_mod_p, reduce_scalar, sqrt_minus_one, FpConic,
};
use flagcalc::geometry::contains_conic;
use flagcalc::linear_systems::surface_through_conics;
use flagcalc::ruled::{random_param, twistor_ruled_surface, veronese_conic};
use flagcalc::rng::{seeded, smooth_conic};
use flagcalc::{BiForm, GaussianRational as Q};
use rand::Rng;

fn cross(u: [u64; 3], v: [u64; 3], p: u64) -> [u64; 3] {
    let m = |a: u64, b: u64| a * b % p;
    [(m(u[1], v[2]) + p - m(u[2], v[1])) % p, (m(u[2], v[0]) + p - m(u[0], v[2])) % p, (m(u[0], v[1]) + p - m(u[1], v[0])) % p]
}

/// Containment by evaluation at every `F_p` point of the conic. The
/// restriction has degree `a + b`, so vanishing at `p + 1 > a + b` points is a proof.
fn pointwise_census(f: &BiForm<Q>, p: u64) -> Vec<FpConic> {
    let s = reduce_mod_p(f, p).unwrap();
    let (a, b) = s.bidegree;
    assert!((a + b) as u64 <= p);
    let pts = projective_points(p);
    let dot = |u: &[u64; 3], v: &[u64; 3]| (0..3).map(|i| u[i] * v[i] % p).sum::<u64>() % p;
    let mut out = Vec::new();
    for q in &pts {
        for m in &pts {
            if dot(q, m) == 0 {
                continue;
            }
            let on = pts.iter().filter(|x| dot(x, m) == 0).all(|x| s.eval(x, &cross(*q, *x, p)) == 0);
            if on {
                out.push(FpConic { q: *q, m: *m });
            }
        }
    }
    out
}

#[test]
fn census_matches_pointwise_oracle() {
    let veronese = twistor_ruled_surface(veronese_conic(), true).unwrap().surface;
    for p in [5u64, 7, 11, 13] {
        assert_eq!(conic_census(&reduce_mod_p(&veronese, p).unwrap()).unwrap(), pointwise_census(&veronese, p), "p={p}");
    }
    let mut rng = seeded(3);
    let c = smooth_conic(&mut rng, 5);
    let generic = surface_through_conics(1, 1, &[c], 8).unwrap().map_coeffs(|z| Q::real(z.re.clone()));
    let census = conic_census(&reduce_mod_p(&generic, 7).unwrap()).unwrap();
    assert!(!census.is_empty());
    assert_eq!(census, pointwise_census(&generic, 7));
}

#[test]
fn census_is_invariant_under_scaling() {
    let s = twistor_ruled_surface(veronese_conic(), true).unwrap().surface;
    for p in [5u64, 11] {
        let base = conic_census(&reduce_mod_p(&s, p).unwrap()).unwrap();
        for k in [2i64, 3, -1] {
            let scaled = conic_census(&reduce_mod_p(&s.scale(&Q::from(k)), p).unwrap()).unwrap();
            assert_eq!(scaled, base);
        }
    }
}

#[test]
fn lifted_witnesses_agree_with_characteristic_zero() {
    let spec = twistor_ruled_surface(veronese_conic(), true).unwrap();
    let mut rng = seeded(0x6c69_6674);
    for p in [5u64, 7, 11, 13] {
        let s = reduce_mod_p(&spec.surface, p).unwrap();
        let census = conic_census(&s).unwrap();
        for _ in 0..20 {
            let c = spec.fiber(&random_param(&mut rng, 30)).unwrap();
            assert!(contains_conic(&spec.surface, &c).unwrap());
            let Ok(Some(red)) = reduce_conic(&c, p, None) else { continue };
            let smooth = (0..3).map(|i| red.q[i] * red.m[i]).sum::<u64>() % p != 0;
            if smooth {
                assert!(census.contains(&red));
                assert!(fp_contains(&s, &red).unwrap());
            }
        }
        for _ in 0..20 {
            let c = smooth_conic(&mut rng, 20);
            let contained = contains_conic(&spec.surface, &c).unwrap();
            let Ok(Some(red)) = reduce_conic(&c, p, sqrt_minus_one(p)) else { continue };
            if contained {
                assert!(census.contains(&red));
            }
        }
    }
}

#[test]
fn reduction_is_a_ring_homomorphism() {
    let mut rng = seeded(99);
    for p in [5u64, 13, 29] {
        let i = sqrt_minus_one(p);
        for _ in 0..200 {
            let mut z = || {
                let d = loop {
                    let d: i64 = rng.gen_range(1..50);
                    if !(d as u64).is_multiple_of(p) {
                        break d;
                    }
                };
                Q::ratio(rng.gen_range(-99..99), d) + Q::ratio(rng.gen_range(-99..99), d) * Q::i()
            };
            let (x, y) = (z(), z());
            let r = |v: &Q| reduce_scalar(v, p, i).unwrap();
            assert_eq!(r(&(x.clone() + y.clone())), (r(&x) + r(&y)) % p);
            assert_eq!(r(&(x.clone() * y.clone())), r(&x) * r(&y) % p);
        }
    }
}

#[test]
fn evaluation_commutes_with_reduction() {
    let s = twistor_ruled_surface(veronese_conic(), true).unwrap().surface;
    let red = reduce_mod_p(&s, 11).unwrap();
    let mut rng = seeded(5);
    for _ in 0..50 {
        let v: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-40..40));
        let p = [v[0], v[1], v[2]].map(Q::from);
        let l = [v[3], v[4], v[5]].map(Q::from);
        let r = |x: i64| x.rem_euclid(11) as u64;
        assert_eq!(reduce_scalar(&s.eval(&p, &l), 11, None).unwrap(), red.eval(&[v[0], v[1], v[2]].map(r), &[v[3], v[4], v[5]].map(r)));
    }
}

#[test]
fn ruled_census_has_at_least_p_plus_one_conics() {
    let s = twistor_ruled_surface(veronese_conic(), true).unwrap().surface;
    let sizes: Vec<(u64, usize)> =
        [5u64, 7, 11, 13].iter().map(|&p| (p, conic_census(&reduce_mod_p(&s, p).unwrap()).unwrap().len())).collect();
    for (p, n) in &sizes {
        assert!(*n as u64 > *p, "census sizes {sizes:?}");
    }
}
