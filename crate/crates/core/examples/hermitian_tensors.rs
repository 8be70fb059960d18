//! Typed-index tensors: the dagger involution, Hermitian splitting and the
//! signature of a Hermitian form.

use ewgeom::cxmulti::{hermitian_split, signature, HermitianForm, IndexKind, MixedTensor};
use ewgeom::numeric::{Exact, Mat};

fn main() -> ewgeom::Result<()> {
    let m = Mat::from_rows(vec![vec![Exact::int(1, 2), Exact::int(0, 1)], vec![Exact::int(3, 0), Exact::int(-1, 0)]]);
    let w = MixedTensor::from_matrix([IndexKind::Vec, IndexKind::Conj], &m);
    let (h, a) = hermitian_split(&w)?;
    println!("H = {:?}", h.to_matrix()?.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    println!("A = {:?}", a.to_matrix()?.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());

    let form = HermitianForm::new(h.to_matrix()?)?;
    println!("signature of H: {}", signature(&form));
    Ok(())
}
