//! Prime sieve and Bertrand-interval queries.

/// All primes up to `limit`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Sieve of Eratosthenes. A `limit` below 2 yields an empty table.
    pub fn up_to(limit: u64) -> Self {
        if limit < 2 {
            return PrimeTable { limit, primes: Vec::new() };
        }
        let n = limit as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i.saturating_mul(i);
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        PrimeTable { limit, primes }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    /// Membership for `p <= limit`; falls back to trial division above it.
    pub fn contains(&self, p: u64) -> bool {
        if p <= self.limit {
            self.primes.binary_search(&p).is_ok()
        } else {
            is_prime(p)
        }
    }

    /// Primes in the closed interval `[lo, hi]`, clipped to the table.
    pub fn range(&self, lo: u64, hi: u64) -> &[u64] {
        if lo > hi {
            return &[];
        }
        let start = self.primes.partition_point(|&p| p < lo);
        let end = self.primes.partition_point(|&p| p <= hi);
        &self.primes[start..end.max(start)]
    }

    /// Smallest listed prime `>= lo`.
    pub fn first_at_least(&self, lo: u64) -> Option<u64> {
        let i = self.primes.partition_point(|&p| p < lo);
        self.primes.get(i).copied()
    }
}

/// `primes_up_to` under its usual name.
pub fn primes_up_to(limit: u64) -> PrimeTable {
    PrimeTable::up_to(limit)
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut f = 5u64;
    while f.saturating_mul(f) <= n {
        if n.is_multiple_of(f) || n.is_multiple_of(f + 2) {
            return false;
        }
        f += 6;
    }
    true
}

/// Smallest prime `>= n`.
pub fn next_prime(n: u64) -> u64 {
    let mut k = n.max(2);
    while !is_prime(k) {
        k += 1;
    }
    k
}

/// The smallest prime `p` with `θ/2 <= p <= θ`, if any.
///
/// Bertrand's postulate guarantees one for every `θ >= 2`.
pub fn prime_in_bertrand_interval(theta: f64) -> Option<u64> {
    if !(theta.is_finite() && theta >= 2.0) {
        return None;
    }
    let lo = (theta / 2.0).ceil() as u64;
    let hi = theta.floor() as u64;
    let p = next_prime(lo);
    (p <= hi).then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_tables() {
        assert_eq!(PrimeTable::up_to(10).as_slice(), &[2, 3, 5, 7]);
        assert_eq!(PrimeTable::up_to(20).as_slice(), &[2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(PrimeTable::up_to(1).is_empty());
        assert!(PrimeTable::up_to(0).is_empty());
        assert_eq!(PrimeTable::up_to(2).as_slice(), &[2]);
    }

    #[test]
    fn odd_primes_to_19_are_the_table_primes() {
        let odd: Vec<u64> = PrimeTable::up_to(19).iter().filter(|&p| p != 2).collect();
        assert_eq!(odd, vec![3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let t = PrimeTable::up_to(20_000);
        let brute: Vec<u64> = (0..=20_000).filter(|&k| is_prime(k)).collect();
        assert_eq!(t.as_slice(), brute.as_slice());
        assert_eq!(t.len(), 2262);
    }

    #[test]
    fn range_queries() {
        let t = PrimeTable::up_to(100);
        assert_eq!(t.range(5, 10), &[5, 7]);
        assert_eq!(t.range(24, 28), &[] as &[u64]);
        assert_eq!(t.range(10, 5), &[] as &[u64]);
        assert_eq!(t.range(90, 1000), &[97]);
        assert_eq!(t.first_at_least(90), Some(97));
        assert_eq!(t.first_at_least(98), None);
        assert!(t.contains(97) && !t.contains(91) && t.contains(101));
    }

    #[test]
    fn bertrand_examples() {
        assert_eq!(prime_in_bertrand_interval(10.0), Some(5));
        assert_eq!(prime_in_bertrand_interval(2.0), Some(2));
        assert_eq!(prime_in_bertrand_interval(1.5), None);
        assert_eq!(prime_in_bertrand_interval(0.0), None);
        assert_eq!(prime_in_bertrand_interval(f64::NAN), None);
        assert_eq!(prime_in_bertrand_interval(7.9), Some(5));
    }

    #[test]
    fn bertrand_holds_on_a_grid() {
        let mut theta = 2.0f64;
        while theta <= 1.0e6 {
            let p = prime_in_bertrand_interval(theta)
                .unwrap_or_else(|| panic!("no prime for theta = {theta}"));
            assert!(p as f64 >= theta / 2.0 && p as f64 <= theta);
            theta += 0.37 + theta * 1e-3;
        }
    }

    proptest! {
        #[test]
        fn bertrand_prime_lies_in_interval(theta in 2.0f64..1.0e6) {
            let p = prime_in_bertrand_interval(theta).unwrap();
            prop_assert!(is_prime(p));
            prop_assert!(p as f64 >= theta / 2.0 && p as f64 <= theta);
            // smallest choice
            let lo = (theta / 2.0).ceil() as u64;
            prop_assert!((lo..p).all(|k| !is_prime(k)));
        }
    }
}
