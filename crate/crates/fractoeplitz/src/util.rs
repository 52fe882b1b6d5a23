/// Kahan compensated accumulator. The weight series alternate at the head and
/// decay slowly in the tail, which is exactly where naive summation loses
/// digits.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub(crate) fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub(crate) fn value(&self) -> f64 {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::KahanSum;

    #[test]
    fn kahan_recovers_small_terms() {
        let mut s = KahanSum::new();
        s.add(1.0);
        for _ in 0..1_000_000 {
            s.add(1e-18);
        }
        let naive = 1.0f64; // every naive += 1e-18 is absorbed
        assert_eq!(naive + 0.0, 1.0);
        assert!((s.value() - (1.0 + 1e-12)).abs() < 1e-15);
    }
}
