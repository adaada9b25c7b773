use proptest::prelude::*;

use schubert_trace::oracle::{
    check_multidegree_identity, check_straightening, check_trace_set_identity, OracleConfig,
};
use schubert_trace::{
    block_decompose, det_trace, determinantal_profile, kappa_profile, phi_forward, phi_inverse,
    schubert_trace, Ambient, BiMinor, LiftedIndex, PrimeGenerator, SchubertIndex, TauEntry,
};

fn schubert_index() -> impl Strategy<Value = SchubertIndex> {
    (1usize..=5, 0usize..=6)
        .prop_flat_map(|(m, extra)| {
            let n = m + extra;
            (
                Just(m),
                Just(n),
                proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), m),
            )
        })
        .prop_map(|(m, n, cols)| SchubertIndex::new(Ambient::new(m, n).unwrap(), cols).unwrap())
}

fn bi_minor() -> impl Strategy<Value = BiMinor> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), 1..=m.min(n)))
        .prop_flat_map(|(m, n, r)| {
            (
                Just(m),
                Just(n),
                proptest::sample::subsequence((1..=m).collect::<Vec<_>>(), r),
                proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), r),
            )
        })
        .prop_map(|(m, n, rows, cols)| {
            BiMinor::new(Ambient::new(m, n).unwrap(), rows, cols).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_factor_count_is_spread(g in schubert_index()) {
        let spread = kappa_profile(&block_decompose(&g)).spread();
        prop_assert_eq!(schubert_trace(&g).unwrap().factors().len(), spread);
    }

    #[test]
    fn trace_identity_holds(g in schubert_index()) {
        let cfg = OracleConfig::default();
        let spread = kappa_profile(&block_decompose(&g)).spread();
        for h in 1..=spread.max(1) {
            let r = check_trace_set_identity(&g, h, &cfg).unwrap();
            prop_assert!(r.passed(), "{:?}", r);
        }
    }

    #[test]
    fn straightening_and_multidegree(g in schubert_index()) {
        let cfg = OracleConfig { trials: 4, ..OracleConfig::default() };
        prop_assert!(check_multidegree_identity(&g, &cfg).unwrap().passed());
        let spread = kappa_profile(&block_decompose(&g)).spread();
        for h in 1..=spread {
            let r = check_straightening(&g, h, &cfg).unwrap();
            prop_assert!(r.passed(), "{:?}", r);
        }
    }

    #[test]
    fn dehomogenization_round_trip(d in bi_minor()) {
        let lifted = phi_inverse(&d);
        prop_assert_eq!(phi_forward(&lifted).unwrap(), TauEntry::Minor(d.clone()));
        let again = LiftedIndex::new(d.ambient(), lifted.index().clone()).unwrap();
        prop_assert_eq!(again, lifted);
    }

    #[test]
    fn determinantal_trace_is_image_of_lifted_trace(d in bi_minor()) {
        let profile = determinantal_profile(&d).unwrap();
        let lifted = schubert_trace(profile.lifted.index()).unwrap();
        let down = det_trace(&d).unwrap();
        prop_assert_eq!(lifted.factors().len(), down.factors().len());
        for (up, dn) in lifted.factors().iter().zip(down.factors()) {
            prop_assert_eq!(up.primes.len(), dn.primes.len());
            for (p, q) in up.primes.iter().zip(&dn.primes) {
                let PrimeGenerator::Schubert(s) = &p.generator else { panic!("expected a Schubert prime") };
                let image = phi_forward(&LiftedIndex::new(d.ambient(), s.clone()).unwrap()).unwrap();
                prop_assert_eq!(&image.to_prime(), &q.generator);
            }
        }
    }
}
