//! Fibonacci numbers with the convention F(0) = 0, F(1) = 1.

use num::BigInt;

/// Grow-on-demand cache of Fibonacci values.
pub struct FibCache {
    vals: Vec<BigInt>,
}

impl FibCache {
    pub fn new() -> Self {
        FibCache {
            vals: vec![BigInt::from(0), BigInt::from(1)],
        }
    }

    pub fn get(&mut self, n: usize) -> BigInt {
        while self.vals.len() <= n {
            let next = &self.vals[self.vals.len() - 1] + &self.vals[self.vals.len() - 2];
            self.vals.push(next);
        }
        self.vals[n].clone()
    }
}

impl Default for FibCache {
    fn default() -> Self {
        Self::new()
    }
}

/// One-off Fibonacci value.
pub fn fib(n: usize) -> BigInt {
    FibCache::new().get(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let want = [0i64, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144];
        let mut cache = FibCache::new();
        for (n, w) in want.iter().enumerate() {
            assert_eq!(cache.get(n), BigInt::from(*w));
        }
        // out-of-order access still consistent
        assert_eq!(fib(12), BigInt::from(144));
        assert_eq!(fib(0), BigInt::from(0));
    }

    #[test]
    fn recurrence_holds_far_out() {
        let mut c = FibCache::new();
        for n in 2..500 {
            assert_eq!(c.get(n), c.get(n - 1) + c.get(n - 2));
        }
    }
}
