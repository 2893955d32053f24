use casimir_core::cavity::*;
use casimir_core::msa::*;
use casimir_core::specfun::{BesselZeroTable, Spectrum};
use casimir_core::BoundaryCondition as Bc;
use proptest::prelude::*;
use std::f64::consts::PI;

fn spectrum(bc: Bc, ells: &[u32], count: u32) -> Spectrum {
    Spectrum::build(&mut BesselZeroTable::new(bc), 1.0, ells.iter().copied(), count).unwrap()
}

#[test]
fn dirichlet_order_one_resonance_is_isolated() {
    let sp = spectrum(Bc::Dirichlet, &[1], 20);
    let w = sp.omega(1, 1).unwrap();
    let r = detect_resonances(&sp, 2.0 * w, default_tol(2.0 * w));
    assert_eq!(r.parametric, [ParametricHit { ell: 1, n: 1 }]);
    assert!(r.pairs.is_empty() && r.couplings.is_empty());
    assert!(r.is_isolated(1));
}

#[test]
fn order_zero_couplings_grow_with_range() {
    let mut prev = 0;
    for count in [5, 10, 20, 40] {
        let sp = spectrum(Bc::Dirichlet, &[0], count);
        let r = detect_resonances(&sp, 2.0 * PI, default_tol(2.0 * PI));
        assert!(r.couplings.len() > prev);
        assert!(r.couplings.iter().all(|c| c.q.abs_diff(c.n) == 2));
        prev = r.couplings.len();
    }
}

#[test]
fn tm_reduced_system_rejects_coupled_blocks() {
    let mut t = BesselZeroTable::new(Bc::Neumann);
    let cs = coupling_neumann(&mut t, 0, 8, &GaugeProfile::Quadratic).unwrap();
    let om = 2.0 * cs.zeros[0];
    assert!(ReducedSystem::new(&cs, 1.0, om, default_tol(om)).is_err());
    let cs1 = coupling_neumann(&mut t, 1, 8, &GaugeProfile::Quadratic).unwrap();
    let om1 = 2.0 * cs1.zeros[0];
    let red = ReducedSystem::new(&cs1, 1.0, om1, default_tol(om1)).unwrap();
    let g = growth_rate(&mut t, 1, 1, 1.0).unwrap();
    let s = red.evolve(1, &[1.0], 1e-12).unwrap();
    let (a, b) = closed_form_with_rate(cs1.zeros[0], g, 1.0, 1.0);
    assert!((s[0].a[0] - a).norm() < 1e-8 && (s[0].b[0] - b).norm() < 1e-8);
}

#[test]
fn integrator_and_propagator_agree() {
    let cs = coupling_dirichlet(&mut BesselZeroTable::new(Bc::Dirichlet), 0, 20).unwrap();
    let red = ReducedSystem::new(&cs, 1.0, 2.0 * PI, default_tol(2.0 * PI)).unwrap();
    let taus = [0.25, 0.5, 1.0];
    for k0 in [1, 2, 7] {
        let a = red.evolve(k0, &taus, 1e-12).unwrap();
        let b = red.propagate(k0, &taus).unwrap();
        for (x, y) in a.iter().zip(&b) {
            let d =
                x.a.iter()
                    .zip(&y.a)
                    .chain(x.b.iter().zip(&y.b))
                    .map(|(u, v)| (u - v).norm())
                    .fold(0.0, f64::max);
            assert!(d < 1e-8, "k0={k0} tau={}: {d}", x.tau);
        }
    }
}

#[test]
fn particle_numbers_agree_between_routes() {
    let cs = coupling_dirichlet(&mut BesselZeroTable::new(Bc::Dirichlet), 0, 12).unwrap();
    let red = ReducedSystem::new(&cs, 1.0, 2.0 * PI, default_tol(2.0 * PI)).unwrap();
    let taus = [0.0, 0.5, 1.5];
    let a = red
        .particle_numbers(&taus, Propagation::Integrate { tol: 1e-12 })
        .unwrap();
    let b = red.particle_numbers(&taus, Propagation::Exponential).unwrap();
    for (x, y) in a.iter().flatten().zip(b.iter().flatten()) {
        assert!((x - y).abs() < 1e-8 * (1.0 + y), "{x} vs {y}");
    }
}

// Converged within 2% at tau = 1; at tau = 2 the excitation front reaches
// the truncation edge and doubling P changes the total by about 60%.
#[test]
fn order_zero_truncation_sensitivity() {
    let mut t = BesselZeroTable::new(Bc::Dirichlet);
    let taus = [1.0];
    let total = |p: usize, t: &mut BesselZeroTable| {
        let cs = coupling_dirichlet(t, 0, p).unwrap();
        let red = ReducedSystem::new(&cs, 1.0, 2.0 * PI, default_tol(2.0 * PI)).unwrap();
        red.particle_numbers(&taus, Propagation::Exponential).unwrap()[0]
            .iter()
            .sum::<f64>()
    };
    let (a, b) = (total(30, &mut t), total(60, &mut t));
    assert!((b / a - 1.0).abs() < 0.02, "P=30 {a}, P=60 {b}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn higher_orders_have_no_intermode_coupling(ell in 1u32..8, n in 1u32..5, neumann in any::<bool>()) {
        let bc = if neumann { Bc::Neumann } else { Bc::Dirichlet };
        let sp = spectrum(bc, &[ell], 16);
        let om = 2.0 * sp.omega(ell, n).unwrap();
        let r = detect_resonances(&sp, om, default_tol(om));
        prop_assert!(r.couplings_for(ell).next().is_none());
    }

    #[test]
    fn closed_form_is_unitary(w in 0.5f64..40.0, eps in 0.0f64..0.1, t in 0.0f64..200.0) {
        let (a, b) = msa_closed_form(w, eps, t);
        let x = w * eps * t / 2.0;
        prop_assume!(x < 15.0);
        let n = 2.0 * w * (b.norm_sqr() - a.norm_sqr());
        prop_assert!((n - 1.0).abs() < 1e-12 * (2.0 * x).cosh());
    }

    #[test]
    fn tm_rate_exceeds_half_frequency(ell in 1u32..10, n in 1u32..6) {
        let mut t = BesselZeroTable::new(Bc::Neumann);
        let g = growth_rate(&mut t, ell, n, 1.0).unwrap();
        prop_assert!(g / t.zero(ell, n).unwrap() > 0.5);
    }

    #[test]
    fn dirichlet_reduced_blocks_are_diagonal(ell in 1u32..6, n in 1usize..4) {
        let cs = coupling_dirichlet(&mut BesselZeroTable::new(Bc::Dirichlet), ell, 10).unwrap();
        let om = 2.0 * cs.zeros[n - 1];
        let red = ReducedSystem::new(&cs, 1.0, om, default_tol(om)).unwrap();
        prop_assert!(red.is_block_diagonal());
    }
}
