//! Second-order forward jets in four coordinates.
//!
//! A `Jet2` carries a value, its gradient and its Hessian; arithmetic
//! propagates both derivative orders through the chain rule, so metric
//! components evaluated on seeded jets come back with ∂g and ∂²g correct to
//! floating-point rounding. Hessians are filled symmetrically cell-by-cell,
//! keeping them symmetric to the bit.

use std::ops::{Add, Div, Mul, Neg, Sub};

pub const DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet2 {
    pub value: f64,
    pub grad: [f64; DIM],
    pub hess: [[f64; DIM]; DIM],
}

impl Jet2 {
    pub const ZERO: Jet2 = Jet2::constant(0.0);

    pub const fn constant(value: f64) -> Self {
        Jet2 {
            value,
            grad: [0.0; DIM],
            hess: [[0.0; DIM]; DIM],
        }
    }

    /// The coordinate variable along `axis`.
    pub fn variable(value: f64, axis: usize) -> Self {
        let mut j = Jet2::constant(value);
        j.grad[axis] = 1.0;
        j
    }

    /// Seeds all four coordinates of a point.
    pub fn seed_point(x: &[f64; DIM]) -> [Jet2; DIM] {
        [
            Jet2::variable(x[0], 0),
            Jet2::variable(x[1], 1),
            Jet2::variable(x[2], 2),
            Jet2::variable(x[3], 3),
        ]
    }

    /// Builds the symmetric Hessian from a closure over i ≤ j.
    fn hess_sym(mut f: impl FnMut(usize, usize) -> f64) -> [[f64; DIM]; DIM] {
        let mut h = [[0.0; DIM]; DIM];
        for i in 0..DIM {
            for j in i..DIM {
                let v = f(i, j);
                h[i][j] = v;
                h[j][i] = v;
            }
        }
        h
    }

    /// Lifts a scalar function through the chain rule given f(v), f'(v), f''(v).
    fn compose(self, f: f64, fp: f64, fpp: f64) -> Jet2 {
        let mut grad = [0.0; DIM];
        for k in 0..DIM {
            grad[k] = fp * self.grad[k];
        }
        let hess =
            Jet2::hess_sym(|i, j| fp * self.hess[i][j] + fpp * self.grad[i] * self.grad[j]);
        Jet2 {
            value: f,
            grad,
            hess,
        }
    }

    pub fn sqrt(self) -> Jet2 {
        assert!(
            self.value > 0.0,
            "sqrt of non-positive jet value {}",
            self.value
        );
        let s = self.value.sqrt();
        self.compose(s, 0.5 / s, -0.25 / (s * self.value))
    }

    pub fn sin(self) -> Jet2 {
        let (s, c) = self.value.sin_cos();
        self.compose(s, c, -s)
    }

    pub fn cos(self) -> Jet2 {
        let (s, c) = self.value.sin_cos();
        self.compose(c, -s, -c)
    }

    pub fn recip(self) -> Jet2 {
        assert!(self.value != 0.0, "jet division by zero");
        let inv = 1.0 / self.value;
        self.compose(inv, -inv * inv, 2.0 * inv * inv * inv)
    }

    /// Integer power by the chain rule (value may be zero for n ≥ 2).
    pub fn powi(self, n: i32) -> Jet2 {
        let v = self.value;
        let fp = if n == 0 { 0.0 } else { n as f64 * v.powi(n - 1) };
        let fpp = if n == 0 || n == 1 {
            0.0
        } else {
            (n as f64) * (n as f64 - 1.0) * v.powi(n - 2)
        };
        self.compose(v.powi(n), fp, fpp)
    }

    /// Real power; requires a positive base.
    pub fn powf(self, c: f64) -> Jet2 {
        assert!(self.value > 0.0, "powf of non-positive jet value");
        let v = self.value;
        self.compose(v.powf(c), c * v.powf(c - 1.0), c * (c - 1.0) * v.powf(c - 2.0))
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Jet2) -> Jet2 {
        let mut grad = [0.0; DIM];
        for k in 0..DIM {
            grad[k] = self.grad[k] + rhs.grad[k];
        }
        Jet2 {
            value: self.value + rhs.value,
            grad,
            hess: Jet2::hess_sym(|i, j| self.hess[i][j] + rhs.hess[i][j]),
        }
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        self + (-rhs)
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        let mut grad = [0.0; DIM];
        for k in 0..DIM {
            grad[k] = -self.grad[k];
        }
        Jet2 {
            value: -self.value,
            grad,
            hess: Jet2::hess_sym(|i, j| -self.hess[i][j]),
        }
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        let mut grad = [0.0; DIM];
        for k in 0..DIM {
            grad[k] = self.grad[k] * rhs.value + self.value * rhs.grad[k];
        }
        let hess = Jet2::hess_sym(|i, j| {
            self.hess[i][j] * rhs.value
                + self.value * rhs.hess[i][j]
                + self.grad[i] * rhs.grad[j]
                + self.grad[j] * rhs.grad[i]
        });
        Jet2 {
            value: self.value * rhs.value,
            grad,
            hess,
        }
    }
}

impl Div for Jet2 {
    type Output = Jet2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Jet2) -> Jet2 {
        self * rhs.recip()
    }
}

impl Add<f64> for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: f64) -> Jet2 {
        let mut out = self;
        out.value += rhs;
        out
    }
}

impl Sub<f64> for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: f64) -> Jet2 {
        self + (-rhs)
    }
}

impl Mul<f64> for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: f64) -> Jet2 {
        self * Jet2::constant(rhs)
    }
}

impl Mul<Jet2> for f64 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        Jet2::constant(self) * rhs
    }
}

impl Sub<Jet2> for f64 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        Jet2::constant(self) - rhs
    }
}

impl Div<Jet2> for f64 {
    type Output = Jet2;
    fn div(self, rhs: Jet2) -> Jet2 {
        Jet2::constant(self) / rhs
    }
}

/// First-order jet: the directional derivative of a `Jet2`. Used where a
/// quantity already containing one derivative (like the spatial Christoffel
/// analogue) must be differentiated once more.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet1 {
    pub value: f64,
    pub grad: [f64; DIM],
}

impl Jet1 {
    pub const ZERO: Jet1 = Jet1 {
        value: 0.0,
        grad: [0.0; DIM],
    };

    pub fn constant(value: f64) -> Self {
        Jet1 {
            value,
            grad: [0.0; DIM],
        }
    }
}

impl Jet2 {
    /// ∂_k of this jet, carrying one remaining derivative order.
    pub fn d(&self, k: usize) -> Jet1 {
        Jet1 {
            value: self.grad[k],
            grad: self.hess[k],
        }
    }

    /// Forgets the Hessian.
    pub fn lower(&self) -> Jet1 {
        Jet1 {
            value: self.value,
            grad: self.grad,
        }
    }
}

impl Add for Jet1 {
    type Output = Jet1;
    fn add(self, rhs: Jet1) -> Jet1 {
        let mut grad = [0.0; DIM];
        for k in 0..DIM {
            grad[k] = self.grad[k] + rhs.grad[k];
        }
        Jet1 {
            value: self.value + rhs.value,
            grad,
        }
    }
}

impl Sub for Jet1 {
    type Output = Jet1;
    fn sub(self, rhs: Jet1) -> Jet1 {
        let mut grad = [0.0; DIM];
        for k in 0..DIM {
            grad[k] = self.grad[k] - rhs.grad[k];
        }
        Jet1 {
            value: self.value - rhs.value,
            grad,
        }
    }
}

impl Mul for Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: Jet1) -> Jet1 {
        let mut grad = [0.0; DIM];
        for k in 0..DIM {
            grad[k] = self.grad[k] * rhs.value + self.value * rhs.grad[k];
        }
        Jet1 {
            value: self.value * rhs.value,
            grad,
        }
    }
}

impl Mul<f64> for Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: f64) -> Jet1 {
        let mut grad = [0.0; DIM];
        for k in 0..DIM {
            grad[k] = self.grad[k] * rhs;
        }
        Jet1 {
            value: self.value * rhs,
            grad,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_variable() {
        let x = Jet2::variable(3.0, 0);
        let sq = x * x;
        assert_eq!(sq.value, 9.0);
        assert_eq!(sq.grad[0], 6.0);
        assert_eq!(sq.hess[0][0], 2.0);
        assert_eq!(sq.grad[1], 0.0);
    }

    #[test]
    fn sqrt_chain_rule() {
        // f = sqrt(x² + y) at x=2, y=0: f=2, ∂x f = x/f = 1, ∂y f = 1/(2f)
        let x = Jet2::variable(2.0, 0);
        let y = Jet2::variable(0.0, 1);
        let f = (x * x + y).sqrt();
        assert!((f.value - 2.0).abs() < 1e-15);
        assert!((f.grad[0] - 1.0).abs() < 1e-15);
        assert!((f.grad[1] - 0.25).abs() < 1e-15);
        // ∂²x f = (f − x²/f)/f² = 0 at these values? derivative of x/sqrt(x²+y):
        // ∂x (x (x²+y)^(-1/2)) = (x²+y)^(-1/2) − x² (x²+y)^(-3/2) = 1/2 − ... = 0 at y=0? 1/2 − 4·(1/8) = 0
        assert!(f.hess[0][0].abs() < 1e-15);
        assert!((f.hess[1][1] + 1.0 / 32.0).abs() < 1e-15);
        assert_eq!(f.hess[0][1], f.hess[1][0]);
    }

    #[test]
    fn sqrt_of_four() {
        let j = Jet2::variable(4.0, 2);
        let s = j.sqrt();
        assert_eq!(s.value, 2.0);
        assert!((s.grad[2] - 0.25).abs() < 1e-15);
        assert!((s.hess[2][2] + 1.0 / 32.0).abs() < 1e-15);
    }

    #[test]
    fn pythagorean_identity() {
        let x = Jet2::variable(0.7, 1);
        let one = x.sin() * x.sin() + x.cos() * x.cos();
        assert!((one.value - 1.0).abs() < 1e-15);
        for k in 0..DIM {
            assert!(one.grad[k].abs() < 1e-15);
            for l in 0..DIM {
                assert!(one.hess[k][l].abs() < 1e-15);
            }
        }
    }

    #[test]
    fn quotient_rule() {
        // f = x / y at (6, 2): f=3, fx=1/2, fy=−3/2, fxy=−1/4, fyy=3/2
        let x = Jet2::variable(6.0, 0);
        let y = Jet2::variable(2.0, 1);
        let f = x / y;
        assert!((f.value - 3.0).abs() < 1e-15);
        assert!((f.grad[0] - 0.5).abs() < 1e-15);
        assert!((f.grad[1] + 1.5).abs() < 1e-15);
        assert!((f.hess[0][1] + 0.25).abs() < 1e-15);
        assert!((f.hess[1][1] - 1.5).abs() < 1e-15);
        assert!(f.hess[0][0].abs() < 1e-15);
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let x = Jet2::variable(1.7, 3);
        let a = x.powi(3);
        let b = x * x * x;
        assert!((a.value - b.value).abs() < 1e-14);
        assert!((a.grad[3] - b.grad[3]).abs() < 1e-13);
        assert!((a.hess[3][3] - b.hess[3][3]).abs() < 1e-13);
    }

    #[test]
    fn powf_agrees_with_sqrt_route() {
        let x = Jet2::variable(2.5, 1);
        let a = x.powf(1.5);
        let b = x * x.sqrt();
        assert!((a.value - b.value).abs() < 1e-14);
        assert!((a.grad[1] - b.grad[1]).abs() < 1e-13);
        assert!((a.hess[1][1] - b.hess[1][1]).abs() < 1e-13);
    }

    #[test]
    #[should_panic(expected = "sqrt of non-positive")]
    fn sqrt_rejects_non_positive() {
        let _ = Jet2::constant(-1.0).sqrt();
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn div_rejects_zero() {
        let _ = Jet2::constant(1.0) / Jet2::constant(0.0);
    }

    #[test]
    fn hessian_symmetric_to_the_bit() {
        let x = Jet2::variable(1.3, 0);
        let y = Jet2::variable(0.4, 2);
        let f = (x * y + x.sin() * y.cos()).sqrt() / (x + y * y);
        for i in 0..DIM {
            for j in 0..DIM {
                assert_eq!(f.hess[i][j].to_bits(), f.hess[j][i].to_bits());
            }
        }
    }

    #[test]
    fn jet1_extraction_consistent() {
        let x = Jet2::variable(2.0, 0);
        let f = x * x * x; // f' = 3x², f'' = 6x
        let d0 = f.d(0);
        assert!((d0.value - 12.0).abs() < 1e-13);
        assert!((d0.grad[0] - 12.0).abs() < 1e-13);
    }
}
