//! Randomized invariant suites: ring laws for the exact arithmetic layer,
//! modular/rational agreement of the multiplicity oracle, and structural
//! invariants of the catalogs.

use proptest::prelude::*;

use mcmtop::catalog::load_catalog;
use mcmtop::exactalg::{GaussianRational, HypersurfaceRing, PolyMatrix, Polynomial, TermOrder};
use mcmtop::matfac::{verify_mf, MFMorphism, verify_morphism};
use mcmtop::truncview::{
    default_s_max, is_prime_u64, multiplicity_oracle, next_prime_1mod4, ArithMode,
};

fn arb_poly(ring: &'static str) -> impl Strategy<Value = (HypersurfaceRing, Polynomial)> {
    // up to four random terms with small exponents and coefficients
    prop::collection::vec(((0u32..4, 0u32..4), (-3i64..4, -3i64..4)), 0..4).prop_map(move |terms| {
        let r = HypersurfaceRing::by_label(ring).unwrap();
        let mut p = Polynomial::zero(r.vars());
        for ((ex, ey), (a, b)) in terms {
            let c = &GaussianRational::from_int(a)
                + &(&GaussianRational::i() * &GaussianRational::from_int(b));
            p = p
                .checked_add(&Polynomial::monomial(r.vars(), vec![ex, ey], c))
                .unwrap();
        }
        (r, p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_additive(
        (r, p) in arb_poly("Dinf-1"),
        (_, q) in arb_poly("Dinf-1"),
    ) {
        let np = r.normal_form(&p, TermOrder::Lex);
        prop_assert_eq!(r.normal_form(&np, TermOrder::Lex), np.clone());
        let sum_then = r.normal_form(&p.checked_add(&q).unwrap(), TermOrder::Lex);
        let then_sum = r.normal_form(
            &np.checked_add(&r.normal_form(&q, TermOrder::Lex)).unwrap(),
            TermOrder::Lex,
        );
        prop_assert_eq!(sum_then, then_sum);
    }

    #[test]
    fn normal_form_is_multiplicative(
        (r, p) in arb_poly("cusp"),
        (_, q) in arb_poly("cusp"),
    ) {
        let prod = r.normal_form(&p.checked_mul(&q).unwrap(), TermOrder::Lex);
        let nf_prod = r.normal_form(
            &r.normal_form(&p, TermOrder::Lex)
                .checked_mul(&r.normal_form(&q, TermOrder::Lex))
                .unwrap(),
            TermOrder::Lex,
        );
        prop_assert_eq!(prod, nf_prod);
    }

    #[test]
    fn determinant_is_multiplicative(
        (r, a) in arb_poly("Dinf-1"),
        (_, b) in arb_poly("Dinf-1"),
        (_, c) in arb_poly("Dinf-1"),
        (_, d) in arb_poly("Dinf-1"),
        (_, e) in arb_poly("Dinf-1"),
        (_, f) in arb_poly("Dinf-1"),
        (_, g) in arb_poly("Dinf-1"),
        (_, h) in arb_poly("Dinf-1"),
    ) {
        let vars = r.vars().clone();
        let m1 = PolyMatrix::from_rows(vec![vec![a, b], vec![c, d]], vars.clone());
        let m2 = PolyMatrix::from_rows(vec![vec![e, f], vec![g, h]], vars);
        let lhs = m1.mul(&m2).unwrap().det().unwrap();
        let rhs = m1.det().unwrap().checked_mul(&m2.det().unwrap()).unwrap();
        prop_assert_eq!(r.normal_form(&lhs, TermOrder::Lex), r.normal_form(&rhs, TermOrder::Lex));
    }
}

/// The oracle's modular ranks agree with the rational ones on every catalog
/// entry, for several random primes p = 1 (mod 4) above 10^6.
#[test]
fn modular_oracle_agrees_with_rational() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2026);
    let primes: Vec<u64> = (0..3)
        .map(|_| next_prime_1mod4(rng.gen_range(1_000_000u64..100_000_000)))
        .collect();
    for p in &primes {
        assert!(is_prime_u64(*p) && p % 4 == 1 && *p > 1_000_000);
    }
    for label in ["Ainf-1", "Dinf-1", "cusp", "cone"] {
        let cat = load_catalog(label, 2).unwrap();
        let s_max = default_s_max(&cat.ring);
        for class in &cat.classes {
            let phi = class.presentation_matrix(&cat.ring);
            let exact = multiplicity_oracle(&phi, &cat.ring, s_max, ArithMode::Rational)
                .unwrap();
            for &p in &primes {
                let modular =
                    multiplicity_oracle(&phi, &cat.ring, s_max, ArithMode::Modular(p)).unwrap();
                assert_eq!(
                    exact.multiplicity,
                    modular.multiplicity,
                    "{label}:{} at p = {p}",
                    class.name()
                );
                assert_eq!(exact.profile.lengths, modular.profile.lengths);
            }
        }
    }
}

/// Swapping the two matrices of any catalog factorization is again a
/// factorization, and its multiplicity matches the recorded syzygy target.
#[test]
fn catalogs_are_swap_closed() {
    for (label, n_max) in [("Ainf-1", 3), ("Dinf-1", 3), ("Dinf-2", 2), ("cusp", 0), ("cone", 0)] {
        let cat = load_catalog(label, n_max).unwrap();
        let mode = ArithMode::default_for(&cat.ring);
        let s_max = default_s_max(&cat.ring);
        for class in &cat.classes {
            let Ok(mf) = class.mf() else { continue };
            let swapped = mf.swap();
            verify_mf(&swapped.ring, &swapped.phi, &swapped.psi).unwrap();
            let target = &class.syzygy.as_ref().unwrap().target;
            let e_target = cat.e_of(target).unwrap();
            let e_swapped = multiplicity_oracle(&swapped.phi, &cat.ring, s_max, mode)
                .unwrap()
                .multiplicity;
            assert_eq!(e_swapped, e_target, "{label}:{}", class.name());
        }
    }
}

/// Identity morphisms verify, and verified morphisms compose.
#[test]
fn morphisms_compose() {
    let cat = load_catalog("Dinf-1", 4).unwrap();
    let facts = mcmtop::degen::dinf1_family_facts(&cat).unwrap();
    for fact in facts {
        let mcmtop::degen::Certificate::Family(cert) = fact.certificate else {
            continue;
        };
        let n = cert.family.size();
        let id = MFMorphism {
            alpha: PolyMatrix::identity(n, cert.family.ring.vars()),
            beta: PolyMatrix::identity(n, cert.family.ring.vars()),
        };
        verify_morphism(&cert.family, &cert.family, &id).unwrap();
        // (alpha, beta) . (id) = (alpha, beta)
        let composed = MFMorphism {
            alpha: cert.morphism.alpha.mul(&id.alpha).unwrap(),
            beta: cert.morphism.beta.mul(&id.beta).unwrap(),
        };
        verify_morphism(&cert.family, &cert.source_mf, &composed).unwrap();
    }
}
