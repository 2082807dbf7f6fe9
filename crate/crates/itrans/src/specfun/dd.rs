//! Minimal double-double arithmetic for cancellation-prone alternating
//! series (Bessel J at moderate argument). Uses FMA-based error-free
//! products; the pair (hi, lo) represents hi + lo with |lo| <= ulp(hi)/2.

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Divide by an ordinary f64 (exact enough for term recurrences whose
    /// divisors are small exact integers times well-conditioned reals).
    #[inline]
    pub fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        // remainder = self - q1*d, evaluated error-free
        let (p, e) = two_prod(q1, d);
        let (r, re) = two_sum(self.hi, -p);
        let r = r + (re + self.lo - e);
        let q2 = r / d;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, m: f64) -> Dd {
        self.mul(Dd::from_f64(m))
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn abs_hi(self) -> f64 {
        self.hi.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_recovers_squares_exactly() {
        let x = Dd::from_f64(1.0 + 2f64.powi(-30));
        let sq = x.mul(x);
        // (1 + u)^2 = 1 + 2u + u^2; the u^2 part is below f64 resolution
        let expect_lo = 2f64.powi(-60);
        assert_eq!(sq.hi, 1.0 + 2f64.powi(-29));
        assert!((sq.lo - expect_lo).abs() < 1e-25);
    }

    #[test]
    fn div_roundtrips() {
        let x = Dd::from_f64(7.0).div_f64(3.0).mul_f64(3.0);
        assert!((x.value() - 7.0).abs() < 1e-30);
    }
}
