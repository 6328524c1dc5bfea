use flagcalc::geometry::{conics_disjoint, contains_conic, j_pullback, random_flag_point};
use flagcalc::ruled::{
    certificate_bound, random_param, sweep_resultant, twistor_circle_samples, twistor_ruled_surface, veronese_conic,
    RuledSurfaceSpec,
};
use flagcalc::rng::seeded;
use flagcalc::{BinaryForm, GaussianRational as Q, Ring};

fn form(c: &[i64]) -> BinaryForm<Q> {
    BinaryForm::new(c.iter().map(|&x| Q::from(x)).collect())
}

fn specs() -> Vec<RuledSurfaceSpec> {
    let triples = vec![
        veronese_conic(),
        [form(&[1, 0, 1]), form(&[0, 1, 0]), form(&[1, 1, 0])],
        [form(&[1, 0, 0, 0]), form(&[0, 1, 1, 0]), form(&[0, 0, 0, 1])],
        [form(&[1, 0, 0, 1]), form(&[0, 2, 0, 0]), form(&[0, 0, 1, -1])],
    ];
    triples.into_iter().map(|f| twistor_ruled_surface(f, true).unwrap()).collect()
}

#[test]
fn surfaces_have_square_bidegree_and_real_coefficients() {
    for spec in specs() {
        let a = spec.degree() as u32;
        assert_eq!(spec.surface.bidegree(), (a, a));
        assert!(spec.surface.terms().keys().all(|m| m.bidegree() == (a, a)));
        assert!(spec.surface.terms().values().all(Q::is_real));
        assert_eq!(spec.witness_params.len(), certificate_bound(spec.degree()) + 1);
    }
}

/// Swapping the two arguments of a resultant of degree-`a` forms multiplies
/// it by `(-1)^(a a)`.
#[test]
fn j_pullback_is_sign_of_degree() {
    for spec in specs() {
        let s = &spec.surface;
        let expected = if spec.degree() % 2 == 0 { s.clone() } else { -s.clone() };
        assert_eq!(j_pullback(s), expected);
    }
}

#[test]
fn certificate_predicts_further_containment() {
    let mut rng = seeded(0x7275_6c65);
    for spec in specs() {
        for _ in 0..5 {
            let c = spec.fiber(&random_param(&mut rng, 50)).unwrap();
            assert!(contains_conic(&spec.surface, &c).unwrap());
        }
    }
}

#[test]
fn sampled_fibers_are_pairwise_disjoint() {
    for spec in specs() {
        let fibers = twistor_circle_samples(&spec, 15).unwrap();
        for (i, c) in fibers.iter().enumerate() {
            for d in &fibers[..i] {
                assert!(conics_disjoint(c, d).unwrap());
            }
        }
    }
}

#[test]
fn surface_is_nonzero_off_the_samples() {
    let mut rng = seeded(77);
    for spec in specs() {
        let pt = random_flag_point(&mut rng, 20);
        assert!(!spec.surface.eval(pt.p.coords(), pt.l.coords()).is_zero());
    }
}

#[test]
fn resultant_swaps_with_form_order() {
    let f = veronese_conic();
    let g = [f[2].clone(), f[1].clone(), f[0].clone()];
    // reversing the coordinates is a linear change of variables on both sides
    let s = sweep_resultant(&f);
    let t = sweep_resultant(&g);
    let rev = |m: &flagcalc::Monomial| {
        flagcalc::Monomial::new([m.p[2], m.p[1], m.p[0]], [m.l[2], m.l[1], m.l[0]])
    };
    for (m, c) in s.terms() {
        assert_eq!(&t.coeff(&rev(m)), c);
    }
}
