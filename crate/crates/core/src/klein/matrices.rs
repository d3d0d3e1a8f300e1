//! Matrix types: 3x3 over Q(zeta_7), 2x2 over the integers, and 2x2
//! fractional-linear maps acting projectively on the h-line.

use std::fmt;

use crate::exact::{named_constant, Cyc7, NamedConstant};

/// 3x3 matrix with entries in Q(zeta_7).
#[derive(Clone, PartialEq, Debug)]
pub struct Mat3 {
    entries: [[Cyc7; 3]; 3],
}

impl Mat3 {
    pub fn new(entries: [[Cyc7; 3]; 3]) -> Self {
        Mat3 { entries }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.entries[i][i] = Cyc7::one();
        }
        m
    }

    pub fn zero() -> Self {
        Mat3 {
            entries: std::array::from_fn(|_| std::array::from_fn(|_| Cyc7::zero())),
        }
    }

    pub fn diagonal(d0: Cyc7, d1: Cyc7, d2: Cyc7) -> Self {
        let mut m = Self::zero();
        m.entries[0][0] = d0;
        m.entries[1][1] = d1;
        m.entries[2][2] = d2;
        m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyc7 {
        &self.entries[i][j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Cyc7::zero();
                for (k, rhs_row) in rhs.entries.iter().enumerate() {
                    acc = &acc + &(&self.entries[i][k] * &rhs_row[j]);
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::identity();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for (j, row) in self.entries.iter().enumerate() {
                out.entries[i][j] = row[i].clone();
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &Cyc7) -> Self {
        let mut out = self.clone();
        for row in &mut out.entries {
            for e in row {
                *e = &*e * c;
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Cyc7; 3]) -> [Cyc7; 3] {
        std::array::from_fn(|i| {
            let mut acc = Cyc7::zero();
            for (k, x) in v.iter().enumerate() {
                acc = &acc + &(&self.entries[i][k] * x);
            }
            acc
        })
    }

    /// Some(d) when the matrix equals d*I.
    pub fn as_scalar(&self) -> Option<Cyc7> {
        let d = self.entries[0][0].clone();
        for i in 0..3 {
            for (j, e) in self.entries[i].iter().enumerate() {
                let want = if i == j { d.clone() } else { Cyc7::zero() };
                if *e != want {
                    return None;
                }
            }
        }
        Some(d)
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// The generators: the symmetric involution-like matrix tied to
/// tau -> -1/tau and the diagonal seventh-root matrix tied to tau -> tau+1.
pub fn build_generators() -> (Mat3, Mat3) {
    let eps1 = named_constant(NamedConstant::Eps1);
    // eps1^2 - eps1 - 1, which reduces to -eta_3.
    let m = &(&(&eps1 * &eps1) - &eps1) - &Cyc7::one();
    let one = Cyc7::one();
    let a = Mat3::new([
        [eps1.clone(), m.clone(), one.clone()],
        [m.clone(), -&one, -&eps1],
        [one, -&eps1, m],
    ]);
    let b = Mat3::diagonal(Cyc7::zeta_pow(4), Cyc7::zeta_pow(5), Cyc7::one());
    (a, b)
}

/// 2x2 integer matrix acting on the upper half-plane by fractional-linear
/// maps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mobius2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mobius2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mobius2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mobius2::new(1, 0, 0, 1)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mobius2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::identity();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn neg(&self) -> Self {
        Mobius2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl fmt::Display for Mobius2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// A point of the projective h-line over Q(zeta_7); infinity is (1 : 0).
#[derive(Clone, Debug)]
pub struct ProjPoint {
    pub x: Cyc7,
    pub y: Cyc7,
}

impl ProjPoint {
    pub fn from_value(v: Cyc7) -> Self {
        ProjPoint {
            x: v,
            y: Cyc7::one(),
        }
    }

    pub fn infinity() -> Self {
        ProjPoint {
            x: Cyc7::one(),
            y: Cyc7::zero(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero() && !self.x.is_zero()
    }

    /// Finite value x/y, when defined.
    pub fn value(&self) -> Option<Cyc7> {
        if self.y.is_zero() {
            None
        } else {
            Some(&self.x * &self.y.inverse().expect("nonzero"))
        }
    }

    pub fn eq_projective(&self, rhs: &ProjPoint) -> bool {
        let cross = &(&self.x * &rhs.y) - &(&rhs.x * &self.y);
        let self_nonzero = !self.x.is_zero() || !self.y.is_zero();
        let rhs_nonzero = !rhs.x.is_zero() || !rhs.y.is_zero();
        cross.is_zero() && self_nonzero && rhs_nonzero
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "infinity"),
        }
    }
}

/// Fractional-linear map h -> (a h + b)/(c h + d) with Q(zeta_7)
/// coefficients, applied projectively so that infinity needs no special
/// casing.
#[derive(Clone, Debug, PartialEq)]
pub struct MobiusOnH {
    pub m: [[Cyc7; 2]; 2],
}

impl MobiusOnH {
    pub fn new(a: Cyc7, b: Cyc7, c: Cyc7, d: Cyc7) -> Self {
        let det = &(&a * &d) - &(&b * &c);
        assert!(
            !det.is_zero(),
            "fractional-linear map must be nondegenerate"
        );
        MobiusOnH {
            m: [[a, b], [c, d]],
        }
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint {
            x: &(&self.m[0][0] * &p.x) + &(&self.m[0][1] * &p.y),
            y: &(&self.m[1][0] * &p.x) + &(&self.m[1][1] * &p.y),
        }
    }

    pub fn apply_value(&self, v: Cyc7) -> ProjPoint {
        self.apply(&ProjPoint::from_value(v))
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        let entry = |i: usize, j: usize| {
            let mut acc = Cyc7::zero();
            for (k, rhs_row) in rhs.m.iter().enumerate() {
                acc = &acc + &(&self.m[i][k] * &rhs_row[j]);
            }
            acc
        };
        MobiusOnH {
            m: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
        }
    }

    /// Some(c) when the matrix is the scalar c times the identity, i.e. the
    /// map is projectively the identity.
    pub fn as_scalar(&self) -> Option<Cyc7> {
        if self.m[0][1].is_zero() && self.m[1][0].is_zero() && self.m[0][0] == self.m[1][1] {
            Some(self.m[0][0].clone())
        } else {
            None
        }
    }

    /// nu: h -> (h - 1)/h, the order-3 map from the coset rotation.
    pub fn nu() -> Self {
        MobiusOnH::new(Cyc7::one(), -&Cyc7::one(), Cyc7::one(), Cyc7::zero())
    }

    /// mu: h -> (h - r)/((1 - r) h - 1), the order-2 map from the Fricke
    /// involution.
    pub fn mu() -> Self {
        let r = named_constant(NamedConstant::R);
        MobiusOnH::new(Cyc7::one(), -&r, &Cyc7::one() - &r, -&Cyc7::one())
    }
}
