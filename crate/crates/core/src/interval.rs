//! Rigorous fixed-point interval arithmetic over big integers.
//!
//! An [`Interval`] at precision `p` encloses the reals in
//! `[lo / 2^p, hi / 2^p]`. Every operation rounds its lower endpoint down and
//! its upper endpoint up, so enclosures stay valid at any precision; raising
//! the precision only tightens them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Guard bits used inside the series evaluations.
const GUARD: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn pow2(k: u32) -> BigInt {
    BigInt::one() << k as usize
}

fn floor_shift(x: &BigInt, k: u32) -> BigInt {
    x.div_floor(&pow2(k))
}

fn ceil_shift(x: &BigInt, k: u32) -> BigInt {
    x.div_ceil(&pow2(k))
}

fn div_dir(num: &BigInt, den: &BigInt, upper: bool) -> BigInt {
    if upper {
        num.div_ceil(den)
    } else {
        num.div_floor(den)
    }
}

fn shift_dir(x: &BigInt, k: u32, upper: bool) -> BigInt {
    if upper {
        ceil_shift(x, k)
    } else {
        floor_shift(x, k)
    }
}

impl Interval {
    pub fn from_integer(v: impl Into<BigInt>, prec: u32) -> Self {
        let v: BigInt = v.into() << prec as usize;
        Interval { lo: v.clone(), hi: v, prec }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec as usize;
        Interval { lo: scaled.div_floor(q.denom()), hi: scaled.div_ceil(q.denom()), prec }
    }

    /// Smallest interval at `prec` containing `[lo, hi]`.
    pub fn from_bounds(lo: BigRational, hi: BigRational, prec: u32) -> Self {
        let a = Self::from_rational(&lo, prec);
        let b = Self::from_rational(&hi, prec);
        Interval { lo: a.lo, hi: b.hi, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Numerator of the lower endpoint at the interval's precision.
    pub fn lo_numerator_floor(&self) -> BigInt {
        self.lo.clone()
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo.clone(), pow2(self.prec))
    }

    pub fn hi(&self) -> BigRational {
        BigRational::new(self.hi.clone(), pow2(self.prec))
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    pub fn midpoint(&self) -> BigRational {
        (self.lo() + self.hi()) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo() <= q && q <= &self.hi()
    }

    /// Lower and upper endpoints as `f64`, rounded outward.
    pub fn to_f64_outward(&self) -> (f64, f64) {
        let lo = self.lo().to_f64().unwrap_or(f64::NEG_INFINITY);
        let hi = self.hi().to_f64().unwrap_or(f64::INFINITY);
        (lo.next_down(), hi.next_up())
    }

    fn check_prec(&self, other: &Interval) {
        assert_eq!(self.prec, other.prec, "interval precisions differ");
    }

    pub fn add(&self, other: &Interval) -> Interval {
        self.check_prec(other);
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi, prec: self.prec }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        self.check_prec(other);
        let cands = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let min = cands.iter().min().unwrap();
        let max = cands.iter().max().unwrap();
        Interval { lo: floor_shift(min, self.prec), hi: ceil_shift(max, self.prec), prec: self.prec }
    }

    pub fn mul_int(&self, k: &BigInt) -> Interval {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Interval { lo: b, hi: a, prec: self.prec }
        } else {
            Interval { lo: a, hi: b, prec: self.prec }
        }
    }

    /// Quotient of a nonnegative interval by a positive one.
    pub fn div(&self, other: &Interval) -> Interval {
        self.check_prec(other);
        assert!(other.lo.is_positive(), "divisor must be positive");
        assert!(!self.lo.is_negative(), "dividend must be nonnegative");
        let p = self.prec as usize;
        Interval {
            lo: (&self.lo << p).div_floor(&other.hi),
            hi: (&self.hi << p).div_ceil(&other.lo),
            prec: self.prec,
        }
    }

    /// Widens the upper endpoint by `ulps` units in the last place.
    pub fn widen_up(&self, ulps: u32) -> Interval {
        Interval { lo: self.lo.clone(), hi: &self.hi + BigInt::from(ulps), prec: self.prec }
    }

    /// Natural logarithm of a positive interval.
    pub fn ln(&self) -> Interval {
        assert!(self.lo.is_positive(), "ln needs a positive argument");
        Interval { lo: ln_bound(&self.lo, self.prec, false), hi: ln_bound(&self.hi, self.prec, true), prec: self.prec }
    }

    /// Exponential of a nonnegative interval.
    pub fn exp(&self) -> Interval {
        assert!(!self.lo.is_negative(), "exp is implemented for nonnegative arguments");
        Interval { lo: exp_bound(&self.lo, self.prec, false), hi: exp_bound(&self.hi, self.prec, true), prec: self.prec }
    }

    /// `ceil` of the enclosed real if every point of the interval shares it.
    pub fn ceil_if_determined(&self) -> Option<BigInt> {
        let a = ceil_shift(&self.lo, self.prec);
        let b = ceil_shift(&self.hi, self.prec);
        (a == b).then_some(a)
    }
}

/// Enclosure of `e` at precision `prec`.
pub fn e_interval(prec: u32) -> Interval {
    let w = prec + GUARD;
    let mut term = pow2(w);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !term.is_zero() {
        sum += &term;
        k += 1;
        term = term.div_floor(&BigInt::from(k));
    }
    // each floored term is off by < 2 ulps; the tail past a zero term is < 6 ulps
    let hi = &sum + BigInt::from(2 * (k + 1) + 6);
    Interval { lo: floor_shift(&sum, GUARD), hi: ceil_shift(&hi, GUARD), prec }
}

/// Directed bound on `atanh(s)` for `s = s_num / 2^w` with `0 <= s <= 1/3`.
fn atanh_bound(s_num: &BigInt, w: u32, upper: bool) -> BigInt {
    let two_w = 2 * w;
    let s2 = s_num * s_num;
    let mut power = s_num.clone();
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    loop {
        let term = div_dir(&power, &BigInt::from(2 * j + 1), upper);
        sum += &term;
        if upper {
            if power <= BigInt::from(8) {
                // remaining tail is at most power / 8 < 1 ulp
                sum += BigInt::one();
                break;
            }
        } else if power.is_zero() {
            break;
        }
        power = shift_dir(&(&power * &s2), two_w, upper);
        j += 1;
    }
    sum
}

fn ln2_bound(w: u32, upper: bool) -> BigInt {
    let third = div_dir(&pow2(w), &BigInt::from(3), upper);
    atanh_bound(&third, w, upper) * 2
}

/// Directed bound on `ln(a / 2^prec)`, returned at precision `prec`.
fn ln_bound(a: &BigInt, prec: u32, upper: bool) -> BigInt {
    let w = prec + GUARD;
    let scaled = a << GUARD as usize;
    let k = scaled.bits() as i64 - 1 - w as i64;
    let m = if k >= 0 { shift_dir(&scaled, k as u32, upper) } else { scaled << (-k) as usize };
    let one = pow2(w);
    let s = div_dir(&((&m - &one) << w as usize), &(&m + &one), upper);
    let atanh = atanh_bound(&s, w, upper) * 2;
    // k*ln2: a negative k flips which ln2 bound is needed
    let ln2_upper = if k >= 0 { upper } else { !upper };
    let total = BigInt::from(k) * ln2_bound(w, ln2_upper) + atanh;
    shift_dir(&total, GUARD, upper)
}

/// Directed bound on `exp(a / 2^prec)` for `a >= 0`, returned at precision `prec`.
fn exp_bound(a: &BigInt, prec: u32, upper: bool) -> BigInt {
    let r = (a.bits() as i64 - prec as i64 + 8).max(0) as u32;
    let w = prec + r + 2 * GUARD;
    let y = a << (w - prec - r) as usize;
    let one = pow2(w);
    let mut term = one.clone();
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    loop {
        sum += &term;
        if upper {
            if term <= BigInt::one() {
                // y < 1/2, so the tail is below term + 1 ulp
                sum += &term + BigInt::one();
                break;
            }
        } else if term.is_zero() {
            break;
        }
        k += 1;
        term = div_dir(&(&term * &y), &(BigInt::from(k) << w as usize), upper);
    }
    let mut x = sum;
    for _ in 0..r {
        x = shift_dir(&(&x * &x), w, upper);
    }
    shift_dir(&x, w - prec, upper)
}
