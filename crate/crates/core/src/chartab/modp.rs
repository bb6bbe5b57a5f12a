//! Arithmetic modulo a word-sized prime.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp {
    pub p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 62)).contains(&p));
        Zp { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Reduction of a signed integer.
    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Least primitive root.
    pub fn primitive_root(self) -> u64 {
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .unwrap_or(1)
    }

    /// A primitive `e`-th root of unity; requires `e | p − 1`.
    pub fn root_of_unity(self, e: u64) -> u64 {
        assert_eq!((self.p - 1) % e, 0, "{e} does not divide p - 1");
        self.pow(self.primitive_root(), (self.p - 1) / e)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > lower`, searched below `bound`.
pub fn prime_one_mod(e: u64, lower: u64, bound: u64) -> Option<u64> {
    let start = lower / e + 1;
    (start..)
        .map(|k| k * e + 1)
        .take_while(|&p| p < bound)
        .find(|&p| p > lower && is_prime(p))
}
