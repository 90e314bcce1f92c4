//! Property-based invariants that cut across modules: rearrangement,
//! norm axioms, level-sequence structure, enclosure consistency, and
//! the duality pairing.

use lorentz_seq::{
    decreasing_rearrangement, dual_norm, head_sum, level_sequence, lorentz_norm, tail_sum,
    weighted_lp_norm, zeta, Enclosure, Exponents, PowerWeight, Seq, WeightSeq,
};
use proptest::prelude::*;

fn entries(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..1.0, 1..max_len)
}

fn exponent_pair() -> impl Strategy<Value = (f64, f64)> {
    (1.05f64..4.0, 1.05f64..4.0)
}

proptest! {
    #[test]
    fn rearrangement_is_idempotent_and_preserves_values(values in entries(60)) {
        let star = decreasing_rearrangement(&values);
        prop_assert!(star.is_nonincreasing());
        let again = decreasing_rearrangement(star.values());
        prop_assert_eq!(star.values(), again.values());

        // Same multiset of entries, zero-padding aside.
        let mut original = values.clone();
        original.sort_by(|a, b| b.partial_cmp(a).unwrap());
        while original.last() == Some(&0.0) {
            original.pop();
        }
        let mut sorted = star.values().to_vec();
        while sorted.last() == Some(&0.0) {
            sorted.pop();
        }
        prop_assert_eq!(original, sorted);
    }

    #[test]
    fn lorentz_norm_is_homogeneous_and_rearrangement_invariant(
        values in entries(40),
        (p, s) in exponent_pair(),
        c in 0.1f64..10.0,
    ) {
        let e = Exponents::new(p, s).unwrap();
        let x = Seq::new(values.clone()).unwrap();
        let base = lorentz_norm(&x, &e);

        let scaled = lorentz_norm(&x.scaled(c).unwrap(), &e);
        prop_assert!((scaled - c * base).abs() <= 1e-12 * (c * base).abs() + 1e-300);

        let rearranged = lorentz_norm(&x.sorted_decreasing(), &e);
        prop_assert!((rearranged - base).abs() <= 1e-12 * base.abs());
    }

    #[test]
    fn diagonal_exponents_collapse_to_plain_lp(
        values in entries(40),
        p in 1.05f64..4.0,
    ) {
        // ||x||_{p,p} has weight n^{p/p - 1} = 1: the plain l^p norm.
        let e = Exponents::new(p, p).unwrap();
        let x = Seq::new(values).unwrap();
        let lorentz = lorentz_norm(&x, &e);
        let plain = weighted_lp_norm(&x, p, PowerWeight::new(0.0).unwrap()).unwrap();
        prop_assert!((lorentz - plain).abs() <= 1e-12 * plain.abs() + 1e-300);
    }

    #[test]
    fn level_sequence_invariants(
        values in entries(40),
        alpha in -0.85f64..0.85,
    ) {
        let x = Seq::new(values).unwrap();
        let phi = WeightSeq::power(alpha).unwrap();
        let (xo, _) = level_sequence(&x, &phi).unwrap();

        // x°/phi nonincreasing, up to rounding against its maximum.
        let r1 = xo.get(1) / phi.phi(1);
        for i in 1..xo.len() {
            let a = xo.get(i) / phi.phi(i);
            let b = xo.get(i + 1) / phi.phi(i + 1);
            prop_assert!(b <= a + 1e-9 * r1.max(1e-300));
        }

        // Partial sums dominate, total mass conserved.
        let xs = x.partial_sums();
        let os = xo.partial_sums();
        let total = xs.get(x.len());
        for n in 1..=x.len() {
            prop_assert!(os.get(n) >= xs.get(n) - 4.0 * f64::EPSILON * total);
        }
        let mass_tol = 4.0 * x.len() as f64 * f64::EPSILON * total.max(1.0);
        prop_assert!((os.get(xo.len()) - total).abs() <= mass_tol);

        // Re-levelling is the identity.
        let (xo2, d2) = level_sequence(&xo, &phi).unwrap();
        prop_assert!(d2.is_identity());
        for (a, b) in xo.values().iter().zip(xo2.values()) {
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn zeta_enclosures_nest_and_match_head_plus_tail(
        q in 1.3f64..6.0,
        n in 4usize..400,
    ) {
        let coarse = zeta(q, 1e-9).unwrap();
        let fine = zeta(q, 1e-13).unwrap();
        prop_assert!(fine.width() <= 1e-13);
        // The tighter enclosure must sit inside the looser one.
        prop_assert!(fine.lo() >= coarse.lo() - 1e-15 * coarse.lo().abs());
        prop_assert!(fine.hi() <= coarse.hi() + 1e-15 * coarse.hi().abs());

        // Splitting the series at any n must cover the same value.
        let split = Enclosure::point(head_sum(n, q)).add(&tail_sum(n, q, 1e-13).unwrap());
        prop_assert!(split.lo() <= fine.hi() && fine.lo() <= split.hi());
    }

    #[test]
    fn dual_norm_satisfies_the_triangle_inequality(
        xs in entries(14),
        ys in entries(14),
        (p, s) in exponent_pair(),
    ) {
        let e = Exponents::new(p, s).unwrap();
        let n = xs.len().max(ys.len());
        let get = |v: &Vec<f64>, i: usize| v.get(i).copied().unwrap_or(0.0);
        let sum: Vec<f64> = (0..n).map(|i| get(&xs, i) + get(&ys, i)).collect();

        let dx = dual_norm(&Seq::new(xs).unwrap(), &e).unwrap();
        let dy = dual_norm(&Seq::new(ys).unwrap(), &e).unwrap();
        let dxy = dual_norm(&Seq::new(sum).unwrap(), &e).unwrap();
        prop_assert!(dxy <= (dx + dy) * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn pairing_respects_the_dual_bound(
        xs in entries(14),
        ys in entries(14),
        (p, s) in exponent_pair(),
    ) {
        // sum x_n y_n <= ||x||'_{p,s} ||y||_{p',s'}, the defining
        // property of the dual norm.
        let e = Exponents::new(p, s).unwrap();
        let x = Seq::new(xs).unwrap();
        let y = Seq::new(ys).unwrap();
        let dot: f64 = x
            .values()
            .iter()
            .zip(y.values())
            .map(|(a, b)| a * b)
            .sum();
        let bound = dual_norm(&x, &e).unwrap() * lorentz_norm(&y, &e.conjugate());
        prop_assert!(dot <= bound * (1.0 + 1e-9) + 1e-12);
    }
}
