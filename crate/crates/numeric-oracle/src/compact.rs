//! Compact real form with dense floating ad-matrices.
//!
//! Basis: an orthonormalized torus (from the simple coroots `iH_k`) followed
//! by the unit vectors `X_α = (E_α − E_{−α})/‖·‖`, `Y_α = i(E_α + E_{−α})/‖·‖`
//! for each positive root α.  After normalization the Killing form is −I, so
//! Casimir operators of subsets are plain negated sums of squared
//! ad-matrices.

use crate::chevalley::Chevalley;
use crate::{OracleError, Result};
use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use root_systems::{Root, RootSubset, RootSystem};
use std::collections::HashMap;

/// Compact form of a root system's algebra with numeric structure data.
pub struct CompactForm {
    rank: usize,
    dim: usize,
    positives: Vec<Root>,
    pos_index: HashMap<Root, usize>,
    ad: Vec<DMatrix<f64>>,
    jacobi_residual: f64,
    killing_residual: f64,
}

/// Casimir eigenvalue clusters on a target subspace.
#[derive(Debug, Clone)]
pub struct NumericCasimirResult {
    /// `(mean eigenvalue, multiplicity)` clusters separated by more than the
    /// cluster tolerance.
    pub clusters: Vec<(f64, usize)>,
    /// Largest matrix entry coupling the target span to its complement.
    pub leakage: f64,
}

const RESIDUAL_TOL: f64 = 1e-9;
const CLUSTER_TOL: f64 = 1e-6;

impl CompactForm {
    /// Builds the compact form and validates antisymmetry, the Killing
    /// normalization, and the Jacobi identity to 10⁻⁹.
    pub fn build(sys: &RootSystem) -> Result<Self> {
        let chev = Chevalley::build(sys);
        let simples = sys.simple_roots();
        let rank = simples.len();
        let positives = chev.positives.clone();
        let npos = positives.len();
        let dim = rank + 2 * npos;
        let pos_index: HashMap<Root, usize> = positives
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        // Coroot coefficients: α^∨ = Σ_k a_k (s_k,s_k)/(α,α) · s_k^∨ where
        // α = Σ a_k s_k over the simple roots.
        let coroot = |alpha: &Root| -> Vec<f64> {
            let a = sys
                .express_in_simples(alpha)
                .expect("root decomposes over simples");
            let n2 = alpha.euclid_norm2().to_f64().unwrap();
            a.iter()
                .zip(&simples)
                .map(|(&ak, sk)| ak as f64 * sk.euclid_norm2().to_f64().unwrap() / n2)
                .collect()
        };
        // ⟨α, H_{s_k}⟩ = 2(α, s_k)/(s_k, s_k).
        let pairing = |alpha: &Root, k: usize| -> f64 {
            2.0 * alpha.dot(&simples[k]).to_f64().unwrap()
                / simples[k].euclid_norm2().to_f64().unwrap()
        };

        let xi = |i: usize| rank + 2 * i;
        let yi = |i: usize| rank + 2 * i + 1;

        let mut ad = vec![DMatrix::<f64>::zeros(dim, dim); dim];

        // ad of the torus basis elements t_k = iH_{s_k}.
        for k in 0..rank {
            for (i, alpha) in positives.iter().enumerate() {
                let a = pairing(alpha, k);
                ad[k][(yi(i), xi(i))] = a; // t_k · X_α = a·Y_α
                ad[k][(xi(i), yi(i))] = -a; // t_k · Y_α = −a·X_α
            }
        }

        // ad of X_α and Y_α.
        for (i, alpha) in positives.iter().enumerate() {
            let h = coroot(alpha);
            // On the torus: [X_α, iH] = −⟨α,H⟩ Y_α, [Y_α, iH] = ⟨α,H⟩ X_α.
            for k in 0..rank {
                let a = pairing(alpha, k);
                ad[xi(i)][(yi(i), k)] = -a;
                ad[yi(i)][(xi(i), k)] = a;
            }
            // [X_α, Y_α] = 2iH_α.
            for k in 0..rank {
                ad[xi(i)][(k, yi(i))] = 2.0 * h[k];
                ad[yi(i)][(k, xi(i))] = -2.0 * h[k];
            }
            // Mixed root terms.
            for (j, beta) in positives.iter().enumerate() {
                if i == j {
                    continue;
                }
                let npp = chev.n_f64(sys, alpha, beta);
                let npm = chev.n_f64(sys, alpha, &-beta.clone());
                // Accumulate into the target root line (X_{−δ} = −X_δ,
                // Y_{−δ} = Y_δ).
                let add_x = |m: &mut DMatrix<f64>, col: usize, delta: &Root, coeff: f64| {
                    if coeff == 0.0 {
                        return;
                    }
                    if let Some(&t) = pos_index.get(delta) {
                        m[(xi(t), col)] += coeff;
                    } else if let Some(&t) = pos_index.get(&-delta.clone()) {
                        m[(xi(t), col)] -= coeff;
                    }
                };
                let add_y = |m: &mut DMatrix<f64>, col: usize, delta: &Root, coeff: f64| {
                    if coeff == 0.0 {
                        return;
                    }
                    if let Some(&t) = pos_index.get(delta) {
                        m[(yi(t), col)] += coeff;
                    } else if let Some(&t) = pos_index.get(&-delta.clone()) {
                        m[(yi(t), col)] += coeff;
                    }
                };
                let sum = alpha + beta;
                let diff = alpha - beta;
                // [X_α, X_β] = N_{α,β} X_{α+β} − N_{α,−β} X_{α−β}
                add_x(&mut ad[xi(i)], xi(j), &sum, npp);
                add_x(&mut ad[xi(i)], xi(j), &diff, -npm);
                // [X_α, Y_β] = N_{α,β} Y_{α+β} + N_{α,−β} Y_{α−β}
                add_y(&mut ad[xi(i)], yi(j), &sum, npp);
                add_y(&mut ad[xi(i)], yi(j), &diff, npm);
                // [Y_α, X_β] = −[X_β, Y_α] = −(N_{β,α} Y_{α+β} + N_{β,−α} Y_{β−α})
                let nba = chev.n_f64(sys, beta, alpha);
                let nbma = chev.n_f64(sys, beta, &-alpha.clone());
                add_y(&mut ad[yi(i)], xi(j), &sum, -nba);
                add_y(&mut ad[yi(i)], xi(j), &(beta - alpha), -nbma);
                // [Y_α, Y_β] = −N_{α,β} X_{α+β} − N_{α,−β} X_{α−β}
                add_x(&mut ad[yi(i)], yi(j), &sum, -npp);
                add_x(&mut ad[yi(i)], yi(j), &diff, -npm);
            }
        }

        // Killing form and normalization to B = −I.
        let killing = |ad: &[DMatrix<f64>], i: usize, j: usize| (&ad[i] * &ad[j]).trace();
        let mut s = DMatrix::<f64>::zeros(dim, dim);
        let ktt =
            DMatrix::from_fn(rank, rank, |a, b| -killing(&ad, a, b));
        let chol = nalgebra::Cholesky::new(ktt)
            .ok_or_else(|| OracleError::Construction("torus Killing block not negative definite".into()))?;
        // M = (Lᵀ)⁻¹ gives Mᵀ(−K)M = I on the torus block.
        let l = chol.l();
        let m = l
            .transpose()
            .try_inverse()
            .ok_or_else(|| OracleError::Construction("singular torus normalization".into()))?;
        s.view_mut((0, 0), (rank, rank)).copy_from(&m);
        for i in rank..dim {
            let k = killing(&ad, i, i);
            if k >= 0.0 {
                return Err(OracleError::Construction(
                    "root-space Killing value not negative".into(),
                ));
            }
            s[(i, i)] = 1.0 / (-k).sqrt();
        }
        let sinv = s
            .clone()
            .try_inverse()
            .ok_or_else(|| OracleError::Construction("singular basis transform".into()))?;
        let ad: Vec<DMatrix<f64>> = (0..dim)
            .map(|j| {
                let mut combo = DMatrix::<f64>::zeros(dim, dim);
                for i in 0..dim {
                    if s[(i, j)] != 0.0 {
                        combo += s[(i, j)] * &ad[i];
                    }
                }
                &sinv * combo * &s
            })
            .collect();

        // Residuals.
        let mut killing_residual: f64 = 0.0;
        for i in 0..dim {
            for j in i..dim {
                let k = (&ad[i] * &ad[j]).trace();
                let expect = if i == j { -1.0 } else { 0.0 };
                killing_residual = killing_residual.max((k - expect).abs());
            }
        }
        let mut jacobi_residual: f64 = 0.0;
        for i in 0..dim {
            for j in (i + 1)..dim {
                let bracket = ad[i].column(j).clone_owned();
                let mut lhs = DMatrix::<f64>::zeros(dim, dim);
                for k in 0..dim {
                    if bracket[k] != 0.0 {
                        lhs += bracket[k] * &ad[k];
                    }
                }
                let rhs = &ad[i] * &ad[j] - &ad[j] * &ad[i];
                jacobi_residual = jacobi_residual.max((lhs - rhs).abs().max());
            }
        }
        if jacobi_residual > RESIDUAL_TOL {
            return Err(OracleError::JacobiResidual(jacobi_residual));
        }
        if killing_residual > RESIDUAL_TOL {
            return Err(OracleError::KillingResidual(killing_residual));
        }

        Ok(Self {
            rank,
            dim,
            positives,
            pos_index,
            ad,
            jacobi_residual,
            killing_residual,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn jacobi_residual(&self) -> f64 {
        self.jacobi_residual
    }

    pub fn killing_residual(&self) -> f64 {
        self.killing_residual
    }

    fn xy_indices(&self, subset: &RootSubset) -> Vec<usize> {
        let mut out = Vec::new();
        for r in subset.positive() {
            let i = self.pos_index[r];
            out.push(self.rank + 2 * i);
            out.push(self.rank + 2 * i + 1);
        }
        out
    }

    /// Casimir matrix `C_S = −Σ ad²` over the root planes of `subset`,
    /// optionally including the Cartan generators (for maximal-rank
    /// subalgebras).
    pub fn casimir_matrix(&self, subset: &RootSubset, include_cartan: bool) -> DMatrix<f64> {
        let mut c = DMatrix::<f64>::zeros(self.dim, self.dim);
        for i in self.xy_indices(subset) {
            c -= &self.ad[i] * &self.ad[i];
        }
        if include_cartan {
            for k in 0..self.rank {
                c -= &self.ad[k] * &self.ad[k];
            }
        }
        c
    }

    /// Restricts `C_subset` to the span of the `target` root planes and
    /// clusters its eigenvalues.  Fails if the restriction leaks outside the
    /// target span by more than 10⁻⁹.
    pub fn casimir_check(
        &self,
        subset: &RootSubset,
        include_cartan: bool,
        target: &RootSubset,
    ) -> Result<NumericCasimirResult> {
        let c = self.casimir_matrix(subset, include_cartan);
        let t = self.xy_indices(target);
        let inside: std::collections::HashSet<usize> = t.iter().copied().collect();
        let mut leakage: f64 = 0.0;
        for &col in &t {
            for row in 0..self.dim {
                if !inside.contains(&row) {
                    leakage = leakage.max(c[(row, col)].abs());
                }
            }
        }
        if leakage > RESIDUAL_TOL {
            return Err(OracleError::RestrictionLeakage(leakage));
        }
        let k = t.len();
        let sub = DMatrix::from_fn(k, k, |a, b| c[(t[a], t[b])]);
        let eig = sub.symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        let mut clusters: Vec<(f64, usize)> = Vec::new();
        for v in vals {
            match clusters.last_mut() {
                Some((mean, count)) if (v - *mean).abs() <= CLUSTER_TOL => {
                    *mean = (*mean * (*count as f64) + v) / (*count as f64 + 1.0);
                    *count += 1;
                }
                _ => clusters.push((v, 1)),
            }
        }
        Ok(NumericCasimirResult { clusters, leakage })
    }

    /// Trace of `C_subset` over the whole algebra.
    pub fn casimir_trace(&self, subset: &RootSubset, include_cartan: bool) -> f64 {
        self.casimir_matrix(subset, include_cartan).trace()
    }

    /// Largest entry of `C_l + C_p − C_k` for a maximal-rank decomposition
    /// `k = l ⊕ p` (the Cartan is attributed to `l`).
    pub fn additivity_residual(
        &self,
        r_l: &RootSubset,
        r_p: &RootSubset,
        r_k: &RootSubset,
    ) -> f64 {
        let cl = self.casimir_matrix(r_l, true);
        let cp = self.casimir_matrix(r_p, false);
        let ck = self.casimir_matrix(r_k, true);
        (cl + cp - ck).abs().max()
    }

    pub fn positives(&self) -> &[Root] {
        &self.positives
    }
}
