//! Group representations as algebras of `ℚ[G]⊗−`, and equivariant maps
//! obtained by averaging over the group.

use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use super::{q_frac, random_matrix, Dim, Mat, RatMatrix};
use crate::category::CaseRng;
use crate::eilenberg_moore::{AlgebraSource, TAlgebra};
use crate::error::Result;
use crate::group::GroupTable;
use crate::monads::MonadBundle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RepKind {
    Trivial,
    Sign,
    Regular,
}

/// Direct sums of trivial, sign and regular representations of a group.
#[derive(Clone, Debug)]
pub struct RepresentationSource {
    group: Arc<GroupTable>,
}

impl RepresentationSource {
    pub fn new(group: GroupTable) -> Self {
        RepresentationSource { group: Arc::new(group) }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    fn dim(&self, k: RepKind) -> usize {
        match k {
            RepKind::Trivial | RepKind::Sign => 1,
            RepKind::Regular => self.group.order(),
        }
    }

    /// `ρ(g)` for one summand.
    fn block(&self, k: RepKind, g: usize) -> RatMatrix {
        match k {
            RepKind::Trivial => RatMatrix::identity(1),
            RepKind::Sign => RatMatrix::from_ints(&[&[self.group.sign(g)]]),
            RepKind::Regular => RatMatrix::permutation(&self.group.table[g]),
        }
    }

    /// The action `ℚ[G]⊗V → V` of the direct sum of `parts`; column
    /// `g·n + i` holds `ρ(g)e_i`.
    pub fn representation(&self, parts: &[RepKind]) -> TAlgebra<Mat> {
        let n: usize = parts.iter().map(|&k| self.dim(k)).sum();
        let order = self.group.order();
        let mut trip = Vec::new();
        for g in 0..order {
            let mut offset = 0;
            for &k in parts {
                let blk = self.block(k, g);
                for r in 0..blk.rows() {
                    for (c, v) in blk.row(r) {
                        trip.push((offset + r, g * n + offset + c, v.clone()));
                    }
                }
                offset += self.dim(k);
            }
        }
        TAlgebra {
            carrier: Dim(n),
            action: RatMatrix::from_triplets(n, order * n, trip),
        }
    }

    /// Every ordered decomposition of `n` into summands.
    pub fn decompositions(&self, n: usize) -> Vec<Vec<RepKind>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in [RepKind::Trivial, RepKind::Sign, RepKind::Regular] {
            let d = self.dim(k);
            if d <= n {
                for mut rest in self.decompositions(n - d) {
                    rest.insert(0, k);
                    out.push(rest);
                }
            }
        }
        out
    }

    /// `ρ(g)` read off an action matrix.
    pub fn rho(&self, alg: &TAlgebra<Mat>, g: usize) -> RatMatrix {
        let n = alg.carrier.0;
        alg.action.column_block(g * n, n)
    }

    /// Reynolds operator `f ↦ (1/|G|) Σ_g ρ_t(g)·f·ρ_s(g⁻¹)`.
    pub fn average(&self, src: &TAlgebra<Mat>, tgt: &TAlgebra<Mat>, f: &RatMatrix) -> RatMatrix {
        let order = self.group.order();
        let mut acc = RatMatrix::zeros(f.rows(), f.cols());
        for g in 0..order {
            let term = self.rho(tgt, g).mul(f).mul(&self.rho(src, self.group.inverse(g)));
            acc = acc.add(&term);
        }
        acc.scale(&q_frac(1, order as i64))
    }
}

impl AlgebraSource<Mat> for RepresentationSource {
    fn carriers(&self, _model: &Mat, _max_size: usize) -> Option<Vec<Dim>> {
        // algebra morphisms are never exhaustively listable
        None
    }

    fn sample_carrier(&self, _model: &Mat, rng: &mut CaseRng, max_size: usize) -> Dim {
        Dim(rng.gen_range(1..=max_size.max(1)))
    }

    fn algebras(&self, _model: &Mat, _monad: &MonadBundle<Mat>, carrier: &Dim) -> Result<Vec<TAlgebra<Mat>>> {
        let mut out: Vec<TAlgebra<Mat>> = Vec::new();
        for parts in self.decompositions(carrier.0) {
            let alg = self.representation(&parts);
            if !out.contains(&alg) {
                out.push(alg);
            }
        }
        Ok(out)
    }

    fn morphisms(
        &self,
        _model: &Mat,
        _monad: &MonadBundle<Mat>,
        _src: &TAlgebra<Mat>,
        _tgt: &TAlgebra<Mat>,
    ) -> Option<Vec<RatMatrix>> {
        None
    }

    fn sample_morphism(
        &self,
        _model: &Mat,
        _monad: &MonadBundle<Mat>,
        src: &TAlgebra<Mat>,
        tgt: &TAlgebra<Mat>,
        rng: &mut CaseRng,
    ) -> Option<RatMatrix> {
        let f = random_matrix(rng, tgt.carrier.0, src.carrier.0);
        Some(self.average(src, tgt, &f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_decompositions() {
        let src = RepresentationSource::new(GroupTable::cyclic(2));
        let d = src.decompositions(2);
        assert_eq!(d.len(), 5); // tt ts st ss r
        let reg = src.representation(&[RepKind::Regular]);
        // ρ(r1) swaps the two basis vectors
        assert_eq!(src.rho(&reg, 1), RatMatrix::from_ints(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn averaged_maps_are_equivariant() {
        let src = RepresentationSource::new(GroupTable::symmetric3());
        let a = src.representation(&[RepKind::Sign, RepKind::Trivial]);
        let b = src.representation(&[RepKind::Trivial, RepKind::Sign, RepKind::Sign]);
        let mut rng = crate::category::case_rng(7, 0);
        let f = random_matrix(&mut rng, 3, 2);
        let avg = src.average(&a, &b, &f);
        for g in 0..6 {
            assert_eq!(src.rho(&b, g).mul(&avg), avg.mul(&src.rho(&a, g)));
        }
    }
}
