//! Algebraic curvature tensors: the defining symmetries, the γ/α generators,
//! the starred-symmetrizer projector, and exact span-rank experiments.

use serde::Serialize;

use crate::error::AlgebraError;
use crate::group_ring::{named, GroupRingElement};
use crate::linalg::rational_rank;
use crate::rational::{rat, Rational};
use crate::rng::SplitMix64;
use crate::tensor::{apply_operator, span_rank, Scalar, Tensor};
use crate::young::curvature_tableau;

/// Symmetric bilinear form, stored dense with S_{ij} = S_{ji} exact.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricForm<T: Scalar> {
    dim: usize,
    components: Vec<T>,
}

/// Alternating bilinear form, A_{ij} = −A_{ji} exact (zero diagonal).
#[derive(Clone, Debug, PartialEq)]
pub struct AlternatingForm<T: Scalar> {
    dim: usize,
    components: Vec<T>,
}

impl<T: Scalar> SymmetricForm<T> {
    /// Builds from the upper triangle (row-major, i ≤ j), mirroring below.
    pub fn from_upper(dim: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut components = vec![T::zero(); dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = entry(i, j);
                components[i * dim + j] = v.clone();
                components[j * dim + i] = v;
            }
        }
        SymmetricForm { dim, components }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.components[i * self.dim + j]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl<T: Scalar> AlternatingForm<T> {
    /// Builds from the strict upper triangle, negating below the diagonal.
    pub fn from_upper(dim: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut components = vec![T::zero(); dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = entry(i, j);
                components[i * dim + j] = v.clone();
                components[j * dim + i] = T::zero().sub(&v);
            }
        }
        AlternatingForm { dim, components }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.components[i * self.dim + j]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// γ(S)_{κλμν} = S_{κν} S_{λμ} − S_{κμ} S_{λν}.
pub fn gamma<T: Scalar>(s: &SymmetricForm<T>) -> Tensor<T> {
    let n = s.dim;
    Tensor::from_fn(4, n, |idx| {
        let (k, l, m, v) = (idx[0], idx[1], idx[2], idx[3]);
        s.get(k, v).mul(s.get(l, m)).sub(&s.get(k, m).mul(s.get(l, v)))
    })
}

/// α(A)_{κλμν} = 2 A_{κλ} A_{μν} + A_{κμ} A_{λν} − A_{κν} A_{λμ}.
pub fn alpha<T: Scalar>(a: &AlternatingForm<T>) -> Tensor<T> {
    let n = a.dim;
    let two_kl_mn = |k: usize, l: usize, m: usize, v: usize| {
        let t = a.get(k, l).mul(a.get(m, v));
        t.add(&t)
    };
    Tensor::from_fn(4, n, |idx| {
        let (k, l, m, v) = (idx[0], idx[1], idx[2], idx[3]);
        two_kl_mn(k, l, m, v)
            .add(&a.get(k, m).mul(a.get(l, v)))
            .sub(&a.get(k, v).mul(a.get(l, m)))
    })
}

/// Checks the defining symmetries of an algebraic curvature tensor:
/// antisymmetry in the last pair, pair exchange, and the first Bianchi cyclic
/// sum — each to within `tol` (0 in rational mode). Antisymmetry in the first
/// pair follows and is checked as a consequence.
pub fn is_algebraic_curvature<T: Scalar>(t: &Tensor<T>, tol: f64) -> bool {
    assert_eq!(t.order(), 4, "curvature predicate needs an order-4 tensor");
    let n = t.dim();
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let r = t.get(&[w, x, y, z]);
                    let swap_last = t.get(&[w, x, z, y]);
                    if r.add(swap_last).magnitude() > tol {
                        return false;
                    }
                    let pair = t.get(&[y, z, w, x]);
                    if r.sub(pair).magnitude() > tol {
                        return false;
                    }
                    let cyc = r
                        .add(t.get(&[w, y, z, x]))
                        .add(t.get(&[w, z, x, y]));
                    if cyc.magnitude() > tol {
                        return false;
                    }
                    let swap_first = t.get(&[x, w, y, z]);
                    if r.add(swap_first).magnitude() > tol {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The starred symmetrizer of the 1,3/2,4 tableau, scaled so it is idempotent.
pub fn acr_idempotent() -> GroupRingElement {
    curvature_tableau().symmetrizer().star().scale(&rat(1, 12))
}

/// Projects an order-4 tensor onto the algebraic-curvature class.
pub fn acr_projector<T: Scalar>(t: &Tensor<T>) -> Result<Tensor<T>, AlgebraError> {
    apply_operator(&acr_idempotent(), t)
}

/// Exact rank of the projector as a linear map on the n⁴-component space.
pub fn acr_dimension(n: usize) -> usize {
    assert!((2..=4).contains(&n), "projector rank supported for 2 ≤ n ≤ 4");
    let e = acr_idempotent();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n.pow(4));
    for flat in 0..n.pow(4) {
        let mut basis = Tensor::<Rational>::zeros(4, n);
        let mut comps = basis.components().to_vec();
        comps[flat] = Rational::from_integer(1.into());
        basis = Tensor::from_components(4, n, comps).unwrap();
        let image = apply_operator(&e, &basis).unwrap();
        rows.push(image.components().to_vec());
    }
    rational_rank(&rows)
}

/// Which generator family a span experiment samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    Gamma,
    Alpha,
}

/// Tensor-factor order for mixed product generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProductOrder {
    /// U ⊗ w: the order-3 factor first.
    UTimesW,
    /// w ⊗ U: the vector first.
    WTimesU,
}

fn random_symmetric(dim: usize, g: &mut SplitMix64) -> SymmetricForm<Rational> {
    SymmetricForm::from_upper(dim, |_, _| g.small_rational())
}

fn random_alternating(dim: usize, g: &mut SplitMix64) -> AlternatingForm<Rational> {
    AlternatingForm::from_upper(dim, |_, _| g.small_rational())
}

/// Span rank of `samples` random γ(S) or α(A) tensors.
pub fn span_experiment(n: usize, samples: usize, kind: GeneratorKind, seed: u64) -> usize {
    let mut g = SplitMix64::new(seed);
    let tensors: Vec<Tensor<Rational>> = (0..samples)
        .map(|_| match kind {
            GeneratorKind::Gamma => gamma(&random_symmetric(n, &mut g)),
            GeneratorKind::Alpha => alpha(&random_alternating(n, &mut g)),
        })
        .collect();
    span_rank(&tensors)
}

/// Span rank of `samples` generators y_t*(U⊗w) (or w⊗U) with U drawn from
/// the symmetry class of the degree-3 idempotent `e` over dim 4.
pub fn product_span_experiment(
    e: &GroupRingElement,
    samples: usize,
    order: ProductOrder,
    seed: u64,
) -> usize {
    let dim = 4;
    let ys = curvature_tableau().symmetrizer().star();
    let mut g = SplitMix64::new(seed);
    let mut tensors = Vec::with_capacity(samples);
    for _ in 0..samples {
        let raw = Tensor::from_fn(3, dim, |_| g.small_rational());
        let u = apply_operator(e, &raw).expect("degree 3");
        let w = Tensor::from_fn(1, dim, |_| g.small_rational());
        let prod = match order {
            ProductOrder::UTimesW => u.tensor_product(&w),
            ProductOrder::WTimesU => w.tensor_product(&u),
        }
        .expect("equal dims");
        tensors.push(apply_operator(&ys, &prod).expect("degree 4"));
    }
    span_rank(&tensors)
}

/// Span rank for the ζ_ν family of minimal right ideals.
pub fn zeta_span_experiment(nu: &Rational, samples: usize, order: ProductOrder, seed: u64) -> usize {
    product_span_experiment(&named::zeta(nu), samples, order, seed)
}
