//! Exact arithmetic in ℚ(ζ_N), ζ_N = e^{2πi/N}.
//!
//! Elements are stored as rational polynomials in ζ_N of degree below φ(N),
//! i.e. reduced modulo the N-th cyclotomic polynomial, so equality of values
//! is equality of coefficient lists.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

fn poly_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_n = (x^n − 1) / Π_{d | n, d < n} Φ_d, by exact long division.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(num);
    poly_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "cyclotomic division left a remainder");
    q
}

/// Euler's totient, as the degree of Φ_n.
pub fn totient(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero(order: u64) -> Self {
        CyclotomicNumber {
            order,
            coeffs: vec![BigRational::zero(); totient(order)],
        }
    }

    pub fn one(order: u64) -> Self {
        Self::root_of_unity(order, 0)
    }

    pub fn from_integer(order: u64, c: i64) -> Self {
        let mut x = Self::zero(order);
        x.coeffs[0] = BigRational::from_integer(c.into());
        x
    }

    /// ζ_N^e for any integer exponent.
    pub fn root_of_unity(order: u64, e: i64) -> Self {
        let mut counts = vec![BigInt::zero(); order as usize];
        counts[e.rem_euclid(order as i64) as usize] = BigInt::one();
        Self::from_power_counts(order, &counts)
    }

    /// Σ_e counts[e] ζ_N^e with `counts` indexed by exponent modulo N.
    pub fn from_power_counts(order: u64, counts: &[BigInt]) -> Self {
        assert_eq!(counts.len(), order as usize);
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        let mut work: Vec<BigInt> = counts.to_vec();
        for i in (deg..work.len()).rev() {
            if work[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut work[i]);
            for (j, &p) in phi.iter().enumerate().take(deg) {
                if p != 0 {
                    work[i - deg + j] -= &c * p;
                }
            }
        }
        work.truncate(deg);
        CyclotomicNumber {
            order,
            coeffs: work.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients of 1, ζ, ζ², … in canonical form.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rewrites the value in ℚ(ζ_M) for a multiple M of the order.
    pub fn lift(&self, order: u64) -> Self {
        assert_eq!(order % self.order, 0, "target order must be a multiple");
        let step = (order / self.order) as usize;
        let mut out = CyclotomicNumber::zero(order);
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        // Powers below the original φ(N) map to powers below N·step; reduce generally.
        let mut work = vec![BigRational::zero(); order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            work[(i * step) % order as usize] += c;
        }
        reduce_rational(&mut work, &phi);
        out.coeffs = work[..deg].to_vec();
        out
    }

    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut work = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            work[(n - i) % n] += c;
        }
        let phi = cyclotomic_polynomial(self.order);
        reduce_rational(&mut work, &phi);
        work.truncate(phi.len() - 1);
        CyclotomicNumber {
            order: self.order,
            coeffs: work,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * i as f64 / self.order as f64;
            acc += Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle);
        }
        acc
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let m = a.order.lcm(&b.order);
        (a.lift(m), b.lift(m))
    }
}

fn reduce_rational(work: &mut [BigRational], phi: &[i64]) {
    let deg = phi.len() - 1;
    for i in (deg..work.len()).rev() {
        if work[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut work[i], BigRational::zero());
        for (j, &p) in phi.iter().enumerate().take(deg) {
            if p != 0 {
                work[i - deg + j] -= &c * BigRational::from_integer(p.into());
            }
        }
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (mut a, b) = CyclotomicNumber::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::common(self, rhs);
        let phi = cyclotomic_polynomial(a.order);
        let deg = phi.len() - 1;
        let mut work = vec![BigRational::zero(); (2 * deg).max(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    work[i + j] += x * y;
                }
            }
        }
        reduce_rational(&mut work, &phi);
        work.truncate(deg);
        CyclotomicNumber {
            order: a.order,
            coeffs: work,
        }
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                _ => format!("({c})·ζ{}^{i}", self.order),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
