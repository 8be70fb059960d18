//! Dirac map of the two-spinor space: gamma matrices in the Weyl and Dirac
//! bases, the Clifford relation, and the signature of the Dirac adjunction.

use ewgeom::cxmulti::signature;
use ewgeom::numeric::{Exact, Mat};
use ewgeom::twospinor::{
    charge_conjugation, gammas, k_hermitian_form, minkowski, pauli_basis, spinor_metric, DiracSpinor, SpinorBasis,
    TwoSpinorFrame,
};

fn show(m: &Mat<Exact>) {
    for r in m.to_rows() {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:>4}")).collect();
        println!("    [{}]", cells.join(" "));
    }
}

fn main() {
    let frame = TwoSpinorFrame::<Exact>::standard();
    let tau = pauli_basis::<Exact>();
    let g = Mat::from_fn(4, 4, |l, m| spinor_metric(&tau[l], &tau[m], &frame));
    println!("g(tau_l, tau_m) == eta: {}", g == minkowski());

    for basis in [SpinorBasis::Weyl, SpinorBasis::Dirac] {
        let gs = gammas::<Exact>(basis, &frame);
        println!("{basis:?} basis, gamma_0:");
        show(&gs[0]);
        let eta = minkowski::<Exact>();
        let clifford = (0..4).all(|l| {
            (0..4).all(|m| gs[l].anticommutator(&gs[m]) == Mat::identity(4).scale(&(eta[(l, m)].clone() + eta[(l, m)].clone())))
        });
        println!("  Clifford relation holds: {clifford}");
        println!("  signature of k: {}", signature(&k_hermitian_form::<Exact>(basis)));
    }

    let psi = DiracSpinor::new([Exact::int(1, 0), Exact::int(0, 1)], [Exact::int(2, 0), Exact::int(-1, 0)]);
    let cc = charge_conjugation(&charge_conjugation(&psi, &frame), &frame);
    println!("C(C(psi)) = {:?}", cc.natural().map(|x| x.to_string()));
}
