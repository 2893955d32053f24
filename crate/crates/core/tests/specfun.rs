#![allow(clippy::excessive_precision)]

use casimir_core::specfun::*;

/// mpmath values at 40 significant digits, rounded to 20.
const J_TABLE: &[(u32, f64, f64)] = &[
    (0, 0.001, 9.9999983333334166667e-1),
    (0, 0.1, 9.9833416646828152307e-1),
    (0, 0.49, 9.6046099626766946159e-1),
    (0, 0.5, 9.5885107720840600055e-1),
    (0, 1.0, 8.4147098480789650665e-1),
    (0, 2.0, 4.546487134128408477e-1),
    (0, 5.0, -1.9178485493262769378e-1),
    (0, 10.0, -5.440211108893698134e-2),
    (0, 31.5, 2.6658557362459310559e-3),
    (0, 50.0, -5.2474970740785757183e-3),
    (0, 100.0, -5.0636564110975879366e-3),
    (0, 199.9, -4.5901553696755406844e-3),
    (1, 0.001, 3.3333330000000119048e-4),
    (1, 0.1, 3.3300011902557569726e-2),
    (1, 0.49, 1.5944517889295503243e-1),
    (1, 0.5, 1.6253703063606656886e-1),
    (1, 1.0, 3.0116867893975678925e-1),
    (1, 2.0, 4.3539777497999161735e-1),
    (1, 5.0, -9.5089408079170791649e-2),
    (1, 10.0, 7.8466941798751547092e-2),
    (1, 31.5, -3.1549271486377110656e-2),
    (1, 50.0, -1.9404270511323836996e-2),
    (1, 100.0, -8.6738252869878152204e-3),
    (1, 199.9, -2.0118042438441716507e-3),
    (2, 0.001, 6.6666661904762037037e-8),
    (2, 0.1, 6.6619060844556870586e-4),
    (2, 0.49, 1.5733976546340941019e-2),
    (2, 0.5, 1.6371106607993412617e-2),
    (2, 1.0, 6.2035052011373861102e-2),
    (2, 2.0, 1.9844794905714657832e-1),
    (2, 5.0, 1.3473121008512521879e-1),
    (2, 10.0, 7.7942193628562445468e-2),
    (2, 31.5, -5.6705482587580368326e-3),
    (2, 50.0, 4.0832408433991454985e-3),
    (2, 100.0, 4.80344165248795348e-3),
    (2, 199.9, 4.559963209938009344e-3),
    (3, 0.001, 9.523808994709006734e-12),
    (3, 0.1, 9.5185197208655670454e-6),
    (3, 0.49, 1.1056021921566106197e-3),
    (3, 0.5, 1.174035443867557309e-3),
    (3, 1.0, 9.0065811171125162594e-3),
    (3, 2.0, 6.0722097662874828461e-2),
    (3, 5.0, 2.2982061816429601044e-1),
    (3, 10.0, -3.9495844984470324358e-2),
    (3, 31.5, 3.064918446117742227e-2),
    (3, 50.0, 1.9812594595663751546e-2),
    (3, 100.0, 8.9139973696122128944e-3),
    (3, 199.9, 2.1258603521467731851e-3),
    (5, 0.001, 9.6200092500092561759e-20),
    (5, 0.1, 9.6163102329164460441e-10),
    (5, 0.49, 2.6924205169385293309e-6),
    (5, 0.5, 2.9774668754574455816e-6),
    (5, 1.0, 9.2561158611258163567e-5),
    (5, 2.0, 2.635169770244117349e-3),
    (5, 5.0, 1.0681116145650454205e-1),
    (5, 10.0, -5.5534511621452180909e-2),
    (5, 31.5, -2.7083047850028940491e-2),
    (5, 50.0, -2.0048300563664871196e-2),
    (5, 100.0, -9.2901489349075717663e-3),
    (5, 199.9, -2.327809766293922445e-3),
    (8, 0.001, 2.9019636099099472484e-32),
    (8, 0.1, 2.9012001025301899414e-16),
    (8, 0.49, 9.5833143095924355443e-11),
    (8, 0.5, 1.1261439602121288724e-10),
    (8, 1.0, 2.8264988022147294315e-8),
    (8, 2.0, 6.6832043238470203026e-6),
    (8, 5.0, 5.7414346745477912596e-3),
    (8, 10.0, 1.2557802364956783121e-1),
    (8, 31.5, 3.0524210676558024899e-2),
    (8, 50.0, 8.8737491082275087322e-3),
    (8, 100.0, -1.7024509771905122373e-3),
    (8, 199.9, -4.1614905070499452373e-3),
    (13, 0.001, 4.6847612368175761645e-54),
    (13, 0.1, 4.6839536652559883071e-28),
    (13, 0.49, 4.3796402649286445514e-19),
    (13, 0.5, 5.6941028333543738253e-19),
    (13, 1.0, 4.6046376776837870546e-15),
    (13, 2.0, 3.5814514015818626686e-11),
    (13, 5.0, 3.6932069977001745464e-6),
    (13, 10.0, 7.465584476587636735e-3),
    (13, 31.5, 3.3136245845368282819e-2),
    (13, 50.0, -1.0989902996530680524e-4),
    (13, 100.0, -9.3279787888824129533e-3),
    (13, 199.9, -3.8093270369553731036e-3),
    (20, 0.001, 7.6259789162179685985e-86),
    (20, 0.1, 7.6250923124090710596e-46),
    (20, 0.49, 4.8417754164547908225e-32),
    (20, 0.5, 7.2515880810153971263e-32),
    (20, 1.0, 7.537795722236872994e-26),
    (20, 2.0, 7.6326411008876086676e-20),
    (20, 5.0, 5.4277267607932083501e-12),
    (20, 10.0, 2.3083719613194687167e-6),
    (20, 31.5, 2.4351728761421081592e-2),
    (20, 50.0, -1.5785029898269297655e-2),
    (20, 100.0, 1.0107671283873054092e-2),
    (20, 199.9, -5.5308561676571183734e-4),
    (32, 0.001, 1.3702548600329380648e-142),
    (32, 0.1, 1.3701526161374886616e-78),
    (32, 0.49, 1.6683905838545460053e-56),
    (32, 0.5, 3.1844264335650130995e-56),
    (32, 1.0, 1.3600660507588990208e-46),
    (32, 2.0, 5.712044555899854371e-37),
    (32, 5.0, 2.6460361402962975813e-24),
    (32, 10.0, 6.4430792449059089196e-15),
    (32, 31.5, 2.2626136223264270965e-2),
    (32, 50.0, -2.2072175059299282879e-2),
    (32, 100.0, -1.024632142223806558e-2),
    (32, 199.9, 5.0176771058541435509e-3),
];

#[test]
fn bessel_matches_high_precision_table() {
    let mut worst = 0.0_f64;
    for &(ell, x, want) in J_TABLE {
        let got = sph_bessel_j(ell, x).unwrap();
        let rel = ((got - want) / want).abs();
        worst = worst.max(rel);
        assert!(rel <= 1e-12, "l={ell} x={x}: got {got:e}, want {want:e}, rel {rel:e}");
    }
    println!("worst relative error {worst:e}");
}
