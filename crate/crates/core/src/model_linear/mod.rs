//! Finite-dimensional vector spaces over ℚ with exact matrices.
//!
//! Objects are dimensions, morphisms `n → m` are `m×n` matrices, `⊗` is the
//! Kronecker product with row-major index pairing `(j, l) ↦ j·d₂ + l`.
//! Every object is self-dual with the identity pairing as cup and cap.

mod matrix;
mod representations;

use std::sync::atomic::{AtomicU64, Ordering};

use rand::Rng;
use serde::Serialize;
use serde_json::json;

use crate::category::{check_trace_shape, compact_trace, Capabilities, CaseRng, Compact, Model, Structural};
use crate::eilenberg_moore::{check_algebra, TAlgebra};
use crate::error::{Error, Result};
use crate::monads::HopfBundle;
use crate::report::{finish, CheckReport, Tally};

pub use matrix::{fmt_q, q, q_frac, RatMatrix, Q};
pub use representations::{RepKind, RepresentationSource};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Dim(pub usize);

/// Traces up to this many entries in the cap/cup composite are cross-checked.
const CROSS_CHECK_CAP: usize = 4096;
/// Outside debug builds, one trace in this many is cross-checked.
const RELEASE_CHECK_EVERY: u64 = 16;

#[derive(Debug, Default)]
pub struct Mat {
    trace_calls: AtomicU64,
}

impl Mat {
    pub fn new() -> Self {
        Mat::default()
    }

    pub fn matrix(&self, dom: usize, cod: usize, m: RatMatrix) -> Result<RatMatrix> {
        if m.cols() != dom || m.rows() != cod {
            return Err(Error::type_mismatch(
                "matrix",
                format!("{cod}x{dom}"),
                format!("{}x{}", m.rows(), m.cols()),
            ));
        }
        Ok(m)
    }
}

/// Perfect shuffle `a⊗b → b⊗a`.
pub fn shuffle(a: usize, b: usize) -> RatMatrix {
    let p: Vec<usize> = (0..a * b).map(|k| (k % b) * a + k / b).collect();
    RatMatrix::permutation(&p)
}

/// `Tr(f)[j, i] = Σ_{k<X} f[j·X+k, i·X+k]`.
pub fn partial_trace(x: usize, a: usize, b: usize, f: &RatMatrix) -> Result<RatMatrix> {
    if f.cols() != a * x || f.rows() != b * x {
        return Err(Error::type_mismatch(
            "partial trace",
            format!("{}x{}", b * x, a * x),
            format!("{}x{}", f.rows(), f.cols()),
        ));
    }
    let mut trip = Vec::new();
    for j in 0..b {
        for k in 0..x {
            for (col, v) in f.row(j * x + k) {
                if col % x == k {
                    trip.push((j, col / x, v.clone()));
                }
            }
        }
    }
    Ok(RatMatrix::from_triplets(b, a, trip))
}

impl Model for Mat {
    type Obj = Dim;
    type Mor = RatMatrix;

    fn name(&self) -> String {
        "Mat".into()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            symmetric: true,
            traced: true,
            compact: true,
            cartesian: false,
            cocartesian: false,
        }
    }

    fn dom(&self, f: &RatMatrix) -> Dim {
        Dim(f.cols())
    }

    fn cod(&self, f: &RatMatrix) -> Dim {
        Dim(f.rows())
    }

    fn identity(&self, a: &Dim) -> RatMatrix {
        RatMatrix::identity(a.0)
    }

    fn compose_unchecked(&self, g: &RatMatrix, f: &RatMatrix) -> RatMatrix {
        g.mul(f)
    }

    fn unit_object(&self) -> Dim {
        Dim(1)
    }

    fn tensor_obj(&self, a: &Dim, b: &Dim) -> Dim {
        Dim(a.0 * b.0)
    }

    fn tensor(&self, f: &RatMatrix, g: &RatMatrix) -> RatMatrix {
        f.kron(g)
    }

    fn structural(&self, s: &Structural<Dim>) -> RatMatrix {
        match s {
            Structural::Assoc(a, b, c) | Structural::AssocInv(a, b, c) => RatMatrix::identity(a.0 * b.0 * c.0),
            Structural::LUnit(a) | Structural::LUnitInv(a) | Structural::RUnit(a) | Structural::RUnitInv(a) => {
                RatMatrix::identity(a.0)
            }
            Structural::Sym(a, b) => shuffle(a.0, b.0),
        }
    }

    /// Index-sum partial trace, cross-checked against the cap/cup composite.
    fn trace(&self, x: &Dim, a: &Dim, b: &Dim, f: &RatMatrix) -> Result<RatMatrix> {
        check_trace_shape(self, x, a, b, f)?;
        let t = partial_trace(x.0, a.0, b.0, f)?;
        let call = self.trace_calls.fetch_add(1, Ordering::Relaxed);
        let small = a.0.max(b.0) * x.0 * x.0 <= CROSS_CHECK_CAP;
        if small && (cfg!(debug_assertions) || call % RELEASE_CHECK_EVERY == 0) {
            let composite = compact_trace(self, x, a, b, f)?;
            assert_eq!(t, composite, "index-sum trace disagrees with the cap/cup composite");
        }
        Ok(t)
    }

    fn try_invert(&self, f: &RatMatrix) -> Option<RatMatrix> {
        f.inverse()
    }

    fn object_size(&self, a: &Dim) -> usize {
        a.0
    }

    fn sample_object(&self, rng: &mut CaseRng, max_size: usize) -> Dim {
        if max_size == 0 || rng.gen_ratio(1, 12) {
            Dim(0)
        } else {
            Dim(rng.gen_range(1..=max_size))
        }
    }

    fn sample_morphism(&self, rng: &mut CaseRng, dom: &Dim, cod: &Dim) -> Option<RatMatrix> {
        Some(random_matrix(rng, cod.0, dom.0))
    }
}

/// Entries in `[−3, 3]`, about a third zero, some halves.
pub fn random_matrix(rng: &mut CaseRng, rows: usize, cols: usize) -> RatMatrix {
    let trip = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).filter_map(|(i, j)| {
        if rng.gen_ratio(1, 3) {
            return None;
        }
        let n = rng.gen_range(-3i64..=3);
        let v = if rng.gen_ratio(1, 5) { q_frac(n, 2) } else { q(n) };
        Some((i, j, v))
    });
    let trip: Vec<_> = trip.collect();
    RatMatrix::from_triplets(rows, cols, trip)
}

impl Compact for Mat {
    fn dual(&self, a: &Dim) -> Dim {
        *a
    }

    fn cup(&self, a: &Dim) -> RatMatrix {
        let n = a.0;
        RatMatrix::from_triplets(1, n * n, (0..n).map(|i| (0, i * n + i, q(1))))
    }

    fn cap(&self, a: &Dim) -> RatMatrix {
        self.cup(a).transpose()
    }
}

/// The algebra on `A*` whose action is
/// `λ∘(m_I⊗1)∘(T(∪_A)⊗1)∘(T(1⊗a)⊗1)∘(h^{l−1}_{A*,A}⊗1)∘((1⊗η_A)⊗1)∘α∘(1⊗∩_A)∘ρ⁻¹`.
pub fn dual_algebra<M: Compact>(model: &M, hopf: &HopfBundle<M>, alg: &TAlgebra<M>) -> Result<TAlgebra<M>> {
    let b = &hopf.bimonad;
    let t = &b.monad;
    let a = &alg.carrier;
    let ad = model.dual(a);
    let tad = t.t(model, &ad);
    let action = model.chain(&[
        model.runit_inv(&tad),
        model.tensor(&model.identity(&tad), &model.cap(a)),
        model.assoc(&tad, a, &ad),
        model.tensor(&model.tensor(&model.identity(&tad), &t.eta(model, a)?), &model.identity(&ad)),
        model.tensor(&hopf.hl_inv(model, &ad, a)?, &model.identity(&ad)),
        model.tensor(
            &t.t_mor(model, &model.tensor(&model.identity(&ad), &alg.action))?,
            &model.identity(&ad),
        ),
        model.tensor(&t.t_mor(model, &model.cup(a))?, &model.identity(&ad)),
        model.tensor(&b.m_unit(model)?, &model.identity(&ad)),
        model.lunit(&ad),
    ])?;
    let dual = TAlgebra { carrier: ad, action };
    check_algebra(model, t, &dual)?;
    Ok(dual)
}

/// Builds the dual of every algebra and checks that it is again an algebra.
pub fn check_dual_algebras<M: Compact>(model: &M, hopf: &HopfBundle<M>, algs: &[TAlgebra<M>]) -> CheckReport {
    let mut tally = Tally::default();
    for alg in algs {
        let inputs = || json!({ "carrier": format!("{:?}", alg.carrier) });
        match dual_algebra(model, hopf, alg) {
            Ok(_) => {
                tally.holds("dual algebra", true, inputs);
            }
            Err(e) => tally.error("dual algebra", inputs(), &e),
        }
    }
    finish("dual algebra", model.name(), tally, true, false, vec![])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::snake_composites;

    #[test]
    fn cup_for_dimension_two() {
        let m = Mat::new();
        assert_eq!(m.cup(&Dim(2)), RatMatrix::from_ints(&[&[1, 0, 0, 1]]));
        assert_eq!(m.cup(&Dim(1)), RatMatrix::from_ints(&[&[1]]));
        let c0 = m.cup(&Dim(0));
        assert_eq!((c0.rows(), c0.cols()), (1, 0));
    }

    #[test]
    fn snakes_up_to_six() {
        let m = Mat::new();
        for n in 0..=6 {
            let (l, r) = snake_composites(&m, &Dim(n)).unwrap();
            assert_eq!(l, RatMatrix::identity(n));
            assert_eq!(r, RatMatrix::identity(n));
        }
    }

    #[test]
    fn trace_of_identity_and_swap() {
        let m = Mat::new();
        let t = m.trace(&Dim(2), &Dim(2), &Dim(2), &RatMatrix::identity(4)).unwrap();
        assert_eq!(t, RatMatrix::identity(2).scale(&q(2)));
        let y = m.trace(&Dim(2), &Dim(2), &Dim(2), &shuffle(2, 2)).unwrap();
        assert_eq!(y, RatMatrix::identity(2));
    }

    #[test]
    fn trace_shape_errors() {
        let m = Mat::new();
        assert!(m.trace(&Dim(2), &Dim(3), &Dim(3), &RatMatrix::identity(4)).is_err());
    }

    #[test]
    fn shuffle_moves_basis_vectors() {
        // e_i ⊗ e_j ↦ e_j ⊗ e_i on 2⊗3
        let s = shuffle(2, 3);
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(s.get(j * 2 + i, i * 3 + j), q(1));
            }
        }
    }
}
