use casimir_core::fock::*;
use casimir_core::Complex64;

fn ac1_c() -> f64 {
    let j11 = 4.493409457909064;
    coefficient_c(j11 / 2.0, 0.01, 40.0 * std::f64::consts::PI / j11)
}

#[test]
fn out_vacuum_is_a_singlet() {
    let c = ac1_c();
    let v = build_out_vacuum(c, 24).unwrap();
    let r = verify_singlet(&v.state);
    assert!(r.lz_norm <= 1e-12 && r.l2_norm <= 1e-10, "{r:?}");
    let r2 = c * c / (1.0 - c * c);
    assert!((r.n_total / (3.0 * r2) - 1.0).abs() < 1e-4);
    assert!((v.normalization - (1.0 - c * c).powf(0.75)).abs() < 1e-6);
}

#[test]
fn in_annihilators_built_from_amplitudes() {
    let w = 3.0;
    let (a, b) = casimir_core::msa::msa_closed_form(w, 0.01, 25.0);
    let rel = InOutRelation::from_amplitudes(a, b, w);
    assert!(rel.unitarity_defect().abs() < 1e-12);
    let expect = -(w * 0.01 * 25.0 / 2.0).tanh();
    assert!((rel.ratio() - Complex64::new(expect, 0.0)).norm() < 1e-14);
    let ops = build_operators(10).unwrap();
    let v = build_out_vacuum_in(ops.space.clone(), rel, 1.0).unwrap();
    for m in -1..=1 {
        let r: f64 = ops.a_in(m, &rel).apply(&v.state.amp).iter().map(|x| x.norm_sqr()).sum();
        assert!(r.sqrt() < 1e-12);
    }
}

#[test]
fn dump_lists_paired_entries() {
    let v = build_out_vacuum(-0.2, 8).unwrap();
    let d = v.state.dump(-0.2, 1e-14).unwrap();
    assert_eq!(d.n_max, 8);
    assert!(d.entries.iter().all(|e| e.n_plus == e.n_minus && e.n_zero % 2 == 0));
    assert_eq!((d.entries[0].n_plus, d.entries[0].n_zero), (0, 0));
}
