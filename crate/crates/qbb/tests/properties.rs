use proptest::prelude::*;
use qbb::params::QParams;
use qbb::qbernoulli::{
    beta3_closed_form, beta3_numbers, beta_closed_form, beta_numbers, bernoulli_poly, cexp_coeffs, identity_residual,
    BetaMethod, CexpMethod, Family, IdentityId, Point,
};
use qbb::qbessel::{bessel_zeros, hahn_product_forms, BesselKind};
use qbb::qconnect::{connection_coeffs, expansion_residual, legendre_coeff_oracle, legendre_norm, qlegendre_poly, Basis};
use qbb::qcore::integral::qintegral01;
use qbb::real::Real;

const PREC: u32 = 160;

fn rel(a: &Real, b: &Real) -> f64 {
    let d = (a - b).abs();
    let s = if a.abs() > b.abs() { a.abs() } else { b.abs() };
    let s = if s > 1 { s } else { Real::one(64) };
    (d / s).to_f64()
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::K1), Just(Family::K2), Just(Family::K3)]
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn recurrences_agree(alpha in -0.95f64..4.0, q in 0.05f64..0.95) {
        let p = QParams::new(q, PREC).unwrap();
        let a = p.real(alpha);
        for three in [false, true] {
            let f = if three { beta3_numbers } else { beta_numbers };
            let x = f(&a, &p, 24, BetaMethod::RecQ1902).unwrap().values;
            let y = f(&a, &p, 24, BetaMethod::RecYY).unwrap().values;
            for (n, (u, v)) in x.iter().zip(&y).enumerate() {
                prop_assert!(rel(u, v) < 1e-40, "n={} three={}", n, three);
            }
        }
    }

    #[test]
    fn closed_forms_match(alpha in -0.95f64..4.0, q in 0.05f64..0.95) {
        let p = QParams::new(q, PREC).unwrap();
        let a = p.real(alpha);
        let b = beta_numbers(&a, &p, 5, BetaMethod::RecQ1902).unwrap().values;
        let b3 = beta3_numbers(&a, &p, 5, BetaMethod::RecQ1902).unwrap().values;
        for n in 1..=5 {
            prop_assert!(rel(&b[n], &beta_closed_form(n, &a, &p).unwrap()) < 1e-40);
            if n != 4 {
                prop_assert!(rel(&b3[n], &beta3_closed_form(n, &a, &p).unwrap()) < 1e-40);
            }
        }
    }

    #[test]
    fn beta3_3_vanishes_at_half(q in 0.05f64..0.95) {
        let p = QParams::new(q, PREC).unwrap();
        let b = beta3_numbers(&p.ratio(1, 2), &p, 3, BetaMethod::RecQ1902).unwrap().values;
        prop_assert!(b[3].abs() < Real::two_pow(-140, 64));
    }

    #[test]
    fn catalog_identities_hold(
        idx in 0usize..12,
        k in 1u8..=3,
        n in 1i64..7,
        alpha in -0.9f64..3.0,
        q in 0.15f64..0.85,
        x in -1.0f64..1.0,
    ) {
        let id = IdentityId::ALL[idx];
        let p = QParams::new(q, 192).unwrap();
        let k = id.families().contains(&k).then_some(k).or_else(|| id.families().first().copied());
        let pt = Point {
            k,
            n: Some(n),
            alpha: Some(p.real(alpha)),
            q: Some(p.q().clone()),
            x: Some(p.real(x)),
            a: Some(p.real(0.4)),
        };
        let r = identity_residual(id, &pt, &p).unwrap();
        prop_assert!(r.pass, "{} residual {}", r.id, r.residual.to_sci(4));
    }

    #[test]
    fn cexp_methods_agree(q in 0.05f64..0.95) {
        let p = QParams::new(q, PREC).unwrap();
        let a = cexp_coeffs(&p, 9, CexpMethod::SeriesInversion).unwrap();
        let b = cexp_coeffs(&p, 9, CexpMethod::PartitionSum).unwrap();
        for (u, v) in a.iter().zip(&b) {
            prop_assert!(rel(u, v) < 1e-40);
        }
    }

    #[test]
    fn polys_have_exact_degree(k in family(), n in 0usize..12, alpha in -0.9f64..3.0, q in 0.1f64..0.9) {
        let p = QParams::new(q, PREC).unwrap();
        let b = bernoulli_poly(k, n, &p.real(alpha), &p).unwrap();
        prop_assert_eq!(b.degree(), Some(n));
        let lead = b.coeff(n);
        prop_assert!(rel(&lead, &p.one()) < 1e-40 || k != Family::K1);
    }
}

proptest! {
    #![proptest_config(config(10))]

    #[test]
    fn legendre_dual_path(k in family(), n in 0usize..5, alpha in -0.9f64..3.0, q in 0.2f64..0.8) {
        let p = QParams::new(q, PREC).unwrap();
        let a = p.real(alpha);
        let e = connection_coeffs(Basis::QLegendre, k, n, &a, &p).unwrap();
        prop_assert_eq!(e.coeffs.len(), n + 1);
        for j in 0..=n {
            let o = legendre_coeff_oracle(k, n, j, &a, &p).unwrap();
            prop_assert!(rel(&e.coeffs[j], &o) < 1e-25, "j={}", j);
        }
    }

    #[test]
    fn laguerre_reconstruction(k in family(), n in 0usize..6, alpha in 0.05f64..2.9, q in 0.2f64..0.85) {
        prop_assume!((alpha - alpha.round()).abs() > 1e-3);
        let p = QParams::new(q, PREC).unwrap();
        let e = connection_coeffs(Basis::QLaguerre, k, n, &p.real(alpha), &p).unwrap();
        let xs: Vec<Real> = [0.1, 0.9, 3.0].iter().map(|&v| p.real(v)).collect();
        prop_assert!(expansion_residual(&e, &xs, &p).unwrap().to_f64() < 1e-25);
    }

    #[test]
    fn legendre_orthogonality(m in 0usize..6, n in 0usize..6, q in 0.2f64..0.8) {
        let p = QParams::new(q, 128).unwrap();
        let (pm, pn) = (qlegendre_poly(m, &p), qlegendre_poly(n, &p));
        let v = qintegral01(|x| pm.eval(x) * pn.eval(x), &p).unwrap().value;
        let want = if m == n { legendre_norm(n, &p) } else { p.zero() };
        prop_assert!((v - want).abs() < Real::two_pow(-90, 64));
    }

    #[test]
    fn hahn_forms_agree(alpha in -0.45f64..3.0, q in 0.1f64..0.9, frac in -0.95f64..0.95) {
        let p = QParams::new(q, PREC).unwrap();
        let t = p.real(frac * 2.0 / (1.0 - q));
        let [a, b, c] = hahn_product_forms(&p.real(alpha), &t, &p).unwrap();
        prop_assert!(rel(&a, &c) < 1e-40 && rel(&b, &c) < 1e-40);
    }
}

proptest! {
    #![proptest_config(config(6))]

    #[test]
    fn zero_tables_are_certified(alpha in -0.9f64..3.0, q in 0.25f64..0.75, three in any::<bool>()) {
        let p = QParams::new(q, 128).unwrap();
        let kind = if three { BesselKind::J3 } else { BesselKind::J2 };
        let t = bessel_zeros(kind, &p.real(alpha), &p, 5).unwrap();
        t.validate().unwrap();
        prop_assert!(t.zeros.windows(2).all(|w| w[0] < w[1]) && t.zeros[0] > 0);
        // J2 zeros separate like q^2, J3 zeros like q
        let r = t.last_ratio().unwrap().to_f64();
        let want = if three { q } else { q * q };
        prop_assert!((r / want - 1.0).abs() < 0.2, "ratio {} vs {}", r, want);
    }
}
