use std::cmp::Ordering;
use std::collections::HashMap;

use proptest::prelude::*;

use ivifn::{
    compare, from_stats, join, meet, subset_leq, xu_compare, DecidedAt, Ivifn, Ivifs,
    OrderSelector, Rational,
};

fn ivifn_strategy() -> impl Strategy<Value = Ivifn> {
    (1i64..=60)
        .prop_flat_map(|d| (Just(d), 0..=d))
        .prop_flat_map(|(d, mu_hi)| (Just(d), Just(mu_hi), 0..=d - mu_hi))
        .prop_flat_map(|(d, mu_hi, nu_hi)| {
            (Just(d), 0..=mu_hi, Just(mu_hi), 0..=nu_hi, Just(nu_hi))
        })
        .prop_map(|(d, a, b, c, e)| Ivifn::from_ratios((a, d), (b, d), (c, d), (e, d)).unwrap())
}

/// Pairs sharing score and accuracy, so the later keys are exercised.
fn tied_pair_strategy() -> impl Strategy<Value = (Ivifn, Ivifn)> {
    (ivifn_strategy(), 0i64..=24, 0i64..=24).prop_filter_map("no feasible partner", |(a, x, y)| {
        // Redistribute the widths of `a` around its centres.
        let m = (a.mu_lo() + a.mu_hi()).half();
        let n = (a.nu_lo() + a.nu_hi()).half();
        let room = (Rational::one() - a.accuracy()).min(m.clone() + n.clone());
        let half_mu = (&room * Rational::new(x, 24)).min(m.clone());
        let half_nu = (&room - &half_mu).min(n.clone()) * Rational::new(y, 24);
        let b = Ivifn::new(&m - &half_mu, &m + &half_mu, &n - &half_nu, &n + &half_nu).ok()?;
        Some((a, b))
    })
}

fn order_strategy() -> impl Strategy<Value = OrderSelector> {
    prop_oneof![Just(OrderSelector::Hzx), Just(OrderSelector::Wlw)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn stat_identities(a in ivifn_strategy()) {
        let st = a.stats();
        let one = Rational::one();
        prop_assert_eq!(&st.h + &st.e1, one.clone());
        prop_assert!(st.s.abs() <= st.h && st.h <= one);
        prop_assert_eq!(st.e2.clone(), st.g.half());
        prop_assert_eq!(st.t.clone(), st.e3.double() - st.e2.double());
        for x in [&st.e2, &st.e3, &st.g] {
            prop_assert!(!x.is_negative());
        }
        prop_assert!(!(st.e2.double() - &st.e3).is_negative());
        prop_assert!(!st.pi_lo.is_negative() && st.pi_lo <= st.pi_hi && st.pi_hi <= one);
    }

    #[test]
    fn keys_invert(a in ivifn_strategy(), order in order_strategy()) {
        prop_assert_eq!(from_stats(order, order.keys(&a)).unwrap(), a.clone());
        prop_assert_eq!(order.project(&a.stats()), order.keys(&a));
    }

    #[test]
    fn compare_is_lexicographic_and_antisymmetric(a in ivifn_strategy(), b in ivifn_strategy(), order in order_strategy()) {
        let out = compare(&a, &b, order);
        prop_assert_eq!(out.relation, order.keys(&a).cmp(&order.keys(&b)));
        prop_assert_eq!(compare(&b, &a, order).relation, out.relation.reverse());
        prop_assert_eq!(out.relation == Ordering::Equal, out.decided_at == DecidedAt::AllEqual);
        prop_assert_eq!(out.relation == Ordering::Equal, a == b);
    }

    #[test]
    fn tied_pairs_are_still_separated((a, b) in tied_pair_strategy(), order in order_strategy()) {
        prop_assert_eq!(a.score(), b.score());
        prop_assert_eq!(a.accuracy(), b.accuracy());
        let out = compare(&a, &b, order);
        prop_assert_eq!(out.relation == Ordering::Equal, a == b);
        prop_assert!(matches!(out.decided_at, DecidedAt::Key3 | DecidedAt::Key4 | DecidedAt::AllEqual));
    }

    #[test]
    fn transitive(a in ivifn_strategy(), b in ivifn_strategy(), c in ivifn_strategy(), order in order_strategy()) {
        let mut v = [a, b, c];
        v.sort_by(|x, y| order.cmp(x, y));
        prop_assert_ne!(order.cmp(&v[0], &v[2]), Ordering::Greater);
    }

    #[test]
    fn xu_ranking_is_a_prefix(a in ivifn_strategy(), b in ivifn_strategy(), order in order_strategy()) {
        let xu = xu_compare(&a, &b);
        if xu != Ordering::Equal {
            prop_assert_eq!(order.cmp(&a, &b), xu);
        }
    }

    #[test]
    fn hzx_is_admissible(b in ivifn_strategy(), x in 0u8..=100, y in 0u8..=100, z in 0u8..=100, w in 0u8..=100) {
        // Shrink membership and grow non-membership of b by random fractions of the slack.
        let frac = |p: u8| Rational::new(i64::from(p), 100);
        let mu_hi = b.mu_hi() * frac(x);
        let mu_lo = b.mu_lo().clone().min(mu_hi.clone()) * frac(y);
        let nu_hi = b.nu_hi() + (Rational::one() - &mu_hi - b.nu_hi()) * frac(z);
        let nu_lo = b.nu_lo() + (&nu_hi - b.nu_lo()) * frac(w);
        let a = Ivifn::new(mu_lo, mu_hi, nu_lo, nu_hi).unwrap();
        prop_assert!(subset_leq(&a, &b));
        prop_assert_ne!(OrderSelector::Hzx.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let q = Rational::new(n, d);
        let text = q.to_string();
        prop_assert_eq!(Rational::parse(&text).unwrap(), q.clone());
        prop_assert_eq!(Rational::parse(&text).unwrap().to_string(), text);
    }

    #[test]
    fn lattice_laws(a in ivifn_strategy(), b in ivifn_strategy(), c in ivifn_strategy(), order in order_strategy()) {
        let j = |x: &Ivifn, y: &Ivifn| join(&[x.clone(), y.clone()], order);
        let m = |x: &Ivifn, y: &Ivifn| meet(&[x.clone(), y.clone()], order);
        prop_assert_eq!(j(&a, &a), a.clone());
        prop_assert_eq!(m(&a, &a), a.clone());
        prop_assert_eq!(j(&a, &b), j(&b, &a));
        prop_assert_eq!(m(&a, &b), m(&b, &a));
        prop_assert_eq!(j(&a, &m(&a, &b)), a.clone());
        prop_assert_eq!(m(&a, &j(&a, &b)), a.clone());
        prop_assert_eq!(j(&j(&a, &b), &c), j(&a, &j(&b, &c)));
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        prop_assert_eq!(j(&a, &Ivifn::bottom()), a.clone());
        prop_assert_eq!(m(&a, &Ivifn::top()), a.clone());
    }

    #[test]
    fn cut_is_antitone(
        degrees in prop::collection::vec(ivifn_strategy(), 1..8),
        alpha in ivifn_strategy(),
        beta in ivifn_strategy(),
        order in order_strategy(),
    ) {
        let set = Ivifs::new(degrees.into_iter().enumerate().map(|(i, d)| (format!("x{i}"), d))).unwrap();
        let (lo, hi) = if order.cmp(&alpha, &beta) == Ordering::Greater { (beta, alpha) } else { (alpha, beta) };
        let wide = set.cut(&lo, order);
        for x in set.cut(&hi, order) {
            prop_assert!(wide.contains(&x));
        }
    }

    #[test]
    fn decomposition_and_extension(
        degrees in prop::collection::vec(ivifn_strategy(), 1..8),
        extra in prop::collection::vec(ivifn_strategy(), 0..4),
        images in prop::collection::vec(0usize..3, 8),
        order in order_strategy(),
    ) {
        let set = Ivifs::new(degrees.into_iter().enumerate().map(|(i, d)| (format!("x{i}"), d))).unwrap();
        let mut candidates = set.degree_values();
        candidates.extend(extra);
        prop_assert_eq!(set.reconstruct(&candidates, order), set.clone());

        let xs: Vec<String> = set.universe().map(String::from).collect();
        let identity = set.zadeh_extend(|x| Some(x.to_string()), &xs, order).unwrap();
        prop_assert_eq!(identity, set.clone());

        let ys = ["y0", "y1", "y2"];
        let f: HashMap<String, String> =
            xs.iter().zip(&images).map(|(x, &i)| (x.clone(), ys[i].to_string())).collect();
        let image = set.zadeh_extend_table(&f, &ys, order).unwrap();
        for y in ys {
            let pre: Vec<Ivifn> =
                set.iter().filter(|(x, _)| f[*x] == y).map(|(_, d)| d.clone()).collect();
            prop_assert_eq!(image.degree(y).unwrap(), &join(&pre, order));
        }
    }
}
