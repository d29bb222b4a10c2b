//! Dense covariant tensors and the symmetry-operator action.
//!
//! Components are stored row-major over 0-based index tuples (i₁,…,i_r); the
//! scalar type is either exact `Rational` or `f64`. A group ring element `a`
//! acts by `(aT)_{i₁…i_r} = Σ_p a(p) · T_{i_{p(1)}…i_{p(r)}}`, which composes
//! as `a(bT) = (a·b)T` under the ring's convolution product.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::AlgebraError;
use crate::group_ring::GroupRingElement;
use crate::linalg::rational_rank;
use crate::rational::{rat_display, rat_to_f64, Rational};

/// Scalar types tensors can carry.
pub trait Scalar: Clone + PartialEq {
    const MODE: &'static str;
    fn zero() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplies by an exact rational operator coefficient.
    fn scale_rational(&self, c: &Rational) -> Self;
    /// Magnitude for residual reporting.
    fn magnitude(&self) -> f64;
    /// Component as a JSON value: exact "p/q" strings in rational mode,
    /// plain numbers in float mode.
    fn component_json(&self) -> serde_json::Value;
}

impl Scalar for Rational {
    const MODE: &'static str = "rational";
    fn zero() -> Self {
        Rational::from_integer(0.into())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn scale_rational(&self, c: &Rational) -> Self {
        self * c
    }
    fn magnitude(&self) -> f64 {
        rat_to_f64(self).abs()
    }
    fn component_json(&self) -> serde_json::Value {
        serde_json::Value::String(rat_display(self))
    }
}

impl Scalar for f64 {
    const MODE: &'static str = "float";
    fn zero() -> Self {
        0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn scale_rational(&self, c: &Rational) -> Self {
        self * rat_to_f64(c)
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn component_json(&self) -> serde_json::Value {
        serde_json::json!(self)
    }
}

/// Dense covariant tensor of order `r` over an `n`-dimensional space.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<T: Scalar> {
    order: usize,
    dim: usize,
    components: Vec<T>,
}

impl<T: Scalar> Serialize for Tensor<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let components: Vec<serde_json::Value> =
            self.components.iter().map(|c| c.component_json()).collect();
        let mut s = serializer.serialize_struct("Tensor", 4)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("dim", &self.dim)?;
        s.serialize_field("mode", T::MODE)?;
        s.serialize_field("components", &components)?;
        s.end()
    }
}

impl<T: Scalar> Tensor<T> {
    pub fn zeros(order: usize, dim: usize) -> Self {
        Tensor {
            order,
            dim,
            components: vec![T::zero(); dim.pow(order as u32)],
        }
    }

    pub fn from_components(order: usize, dim: usize, components: Vec<T>) -> Result<Self, AlgebraError> {
        if components.len() != dim.pow(order as u32) {
            return Err(AlgebraError::DimMismatch(format!(
                "expected {} components for order {order}, dim {dim}, got {}",
                dim.pow(order as u32),
                components.len()
            )));
        }
        Ok(Tensor {
            order,
            dim,
            components,
        })
    }

    /// Builds by evaluating `f` on every index tuple.
    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> T) -> Self {
        let mut t = Self::zeros(order, dim);
        let mut idx = vec![0usize; order];
        for flat in 0..t.components.len() {
            t.unflatten(flat, &mut idx);
            t.components[flat] = f(&idx);
        }
        t
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[T] {
        &self.components
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.order);
        let mut flat = 0usize;
        for &i in idx {
            debug_assert!(i < self.dim);
            flat = flat * self.dim + i;
        }
        flat
    }

    fn unflatten(&self, mut flat: usize, idx: &mut [usize]) {
        for slot in (0..self.order).rev() {
            idx[slot] = flat % self.dim;
            flat /= self.dim;
        }
    }

    pub fn get(&self, idx: &[usize]) -> &T {
        &self.components[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: T) {
        let flat = self.flat_index(idx);
        self.components[flat] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.magnitude())
            .fold(0.0, f64::max)
    }

    pub fn add(&self, rhs: &Tensor<T>) -> Result<Tensor<T>, AlgebraError> {
        self.check_shape(rhs)?;
        Ok(Tensor {
            order: self.order,
            dim: self.dim,
            components: self
                .components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Tensor<T>) -> Result<Tensor<T>, AlgebraError> {
        self.check_shape(rhs)?;
        Ok(Tensor {
            order: self.order,
            dim: self.dim,
            components: self
                .components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn scale_rational(&self, c: &Rational) -> Tensor<T> {
        Tensor {
            order: self.order,
            dim: self.dim,
            components: self
                .components
                .iter()
                .map(|a| a.scale_rational(c))
                .collect(),
        }
    }

    /// Max |self − rhs| as f64.
    pub fn max_diff(&self, rhs: &Tensor<T>) -> f64 {
        self.sub(rhs).expect("shape checked by caller").max_abs()
    }

    fn check_shape(&self, rhs: &Tensor<T>) -> Result<(), AlgebraError> {
        if self.order != rhs.order || self.dim != rhs.dim {
            return Err(AlgebraError::DimMismatch(format!(
                "order/dim ({}, {}) vs ({}, {})",
                self.order, self.dim, rhs.order, rhs.dim
            )));
        }
        Ok(())
    }

    /// Outer product; the right factor's indices vary fastest.
    pub fn tensor_product(&self, rhs: &Tensor<T>) -> Result<Tensor<T>, AlgebraError> {
        if self.dim != rhs.dim {
            return Err(AlgebraError::DimMismatch(format!(
                "dim {} vs {}",
                self.dim, rhs.dim
            )));
        }
        let mut components = Vec::with_capacity(self.components.len() * rhs.components.len());
        for a in &self.components {
            for b in &rhs.components {
                components.push(a.mul(b));
            }
        }
        Ok(Tensor {
            order: self.order + rhs.order,
            dim: self.dim,
            components,
        })
    }
}

/// The symmetry-operator action (aT)_{i₁…i_r} = Σ_p a(p) T_{i_{p(1)}…i_{p(r)}}.
pub fn apply_operator<T: Scalar>(
    a: &GroupRingElement,
    tensor: &Tensor<T>,
) -> Result<Tensor<T>, AlgebraError> {
    if a.degree() != tensor.order() {
        return Err(AlgebraError::DegreeMismatch {
            expected: tensor.order(),
            got: a.degree(),
        });
    }
    let order = tensor.order();
    let dim = tensor.dim();
    let mut out = Tensor::zeros(order, dim);
    let mut idx = vec![0usize; order];
    let mut permuted = vec![0usize; order];
    for flat in 0..out.components.len() {
        out.unflatten(flat, &mut idx);
        let mut acc = T::zero();
        for (p, c) in a.terms() {
            for slot in 0..order {
                permuted[slot] = idx[p.image(slot + 1) - 1];
            }
            let val = tensor.get(&permuted).scale_rational(c);
            acc = acc.add(&val);
        }
        out.components[flat] = acc;
    }
    Ok(out)
}

/// Membership test for the symmetry class generated by the idempotent `e`:
/// true iff max |(eT)−T| ≤ tol (use 0 in rational mode).
pub fn is_class_member<T: Scalar>(
    e: &GroupRingElement,
    tensor: &Tensor<T>,
    tol: f64,
) -> Result<bool, AlgebraError> {
    let projected = apply_operator(e, tensor)?;
    Ok(projected.max_diff(tensor) <= tol)
}

/// Exact rank of the span of rational tensors, all of one shape.
pub fn span_rank(tensors: &[Tensor<Rational>]) -> usize {
    if tensors.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = tensors.iter().map(|t| t.components.clone()).collect();
    rational_rank(&rows)
}
