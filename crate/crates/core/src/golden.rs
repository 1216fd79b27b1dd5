//! Published level-2 fusion rules for B_l, D_l, E_7 and E_8, written out as
//! explicit products for a given rank.

use std::collections::BTreeMap;

use crate::root_system::Weight;

/// One expected product λ ⊗ γ = ⊕ summands (all with multiplicity one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenProduct {
    pub rule: &'static str,
    pub lhs: Weight,
    pub rhs: Weight,
    pub expected: Vec<(Weight, u32)>,
}

struct Builder {
    rank: usize,
    out: Vec<GoldenProduct>,
}

impl Builder {
    fn new(rank: usize) -> Self {
        Builder { rank, out: Vec::new() }
    }

    fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    fn f(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    fn two(&self, i: usize) -> Weight {
        2 * &self.f(i)
    }

    fn sum(&self, i: usize, j: usize) -> Weight {
        &self.f(i) + &self.f(j)
    }

    /// Adds a product unless the same unordered pair was already recorded.
    fn push(&mut self, rule: &'static str, lhs: Weight, rhs: Weight, summands: Vec<Weight>) {
        if self
            .out
            .iter()
            .any(|g| (g.lhs == lhs && g.rhs == rhs) || (g.lhs == rhs && g.rhs == lhs))
        {
            return;
        }
        let mut counts: BTreeMap<Weight, u32> = BTreeMap::new();
        for s in summands {
            *counts.entry(s).or_default() += 1;
        }
        self.out.push(GoldenProduct {
            rule,
            lhs,
            rhs,
            expected: counts.into_iter().collect(),
        });
    }
}

/// Rules for B_l at level 2, l ≥ 3.
pub fn b_series(l: usize) -> Vec<GoldenProduct> {
    assert!(l >= 3);
    let mut b = Builder::new(l);
    let (z, l1) = (b.zero(), b.f(1));
    b.push("λ1⊗λ1", l1.clone(), l1.clone(), vec![z.clone(), b.two(1), b.f(2)]);
    for i in 2..l - 1 {
        b.push("λi⊗λ1, 1<i<l-1", b.f(i), l1.clone(), vec![b.f(i - 1), b.f(i + 1)]);
    }
    b.push("λ(l-1)⊗λ1", b.f(l - 1), l1.clone(), vec![b.two(l), b.f(l - 2)]);
    b.push("λl⊗λ1", b.f(l), l1.clone(), vec![b.f(l)]);
    b.push("2λl⊗λ1", b.two(l), l1.clone(), vec![b.two(l), b.f(l - 1)]);
    b.push("2λ1⊗λ1", b.two(1), l1.clone(), vec![l1.clone()]);
    b.push("2λ1⊗2λ1", b.two(1), b.two(1), vec![z.clone()]);
    for i in 1..=l {
        b.push("2λ1⊗λi, i≤l", b.two(1), b.f(i), vec![b.f(i)]);
    }
    b.push("2λ1⊗2λl", b.two(1), b.two(l), vec![b.two(l)]);
    for i in 2..l {
        for j in 1..i {
            let s = i + j;
            let top = if s < l {
                b.f(s)
            } else if s == l || s == l + 1 {
                b.two(l)
            } else {
                b.f(2 * l + 1 - s)
            };
            b.push("λi⊗λj, l>i>j", b.f(i), b.f(j), vec![b.f(i - j), top]);
        }
    }
    for i in 1..l {
        let top = if 2 * i < l {
            b.f(2 * i)
        } else if 2 * i == l || 2 * i == l + 1 {
            b.two(l)
        } else {
            b.f(2 * l + 1 - 2 * i)
        };
        b.push("λi⊗λi, l>i", b.f(i), b.f(i), vec![z.clone(), b.two(1), top]);
    }
    b.out
}

/// Rules for D_l at level 2, l ≥ 6.
///
/// The general λ_i ⊗ λ_j rules are applied for j ≤ i < l−1 only.
pub fn d_series(l: usize) -> Vec<GoldenProduct> {
    assert!(l >= 6);
    let mut b = Builder::new(l);
    let (z, l1, theta) = (b.zero(), b.f(1), b.f(2));
    let spin_sum = b.sum(l - 1, l);

    b.push("λ1⊗θ", l1.clone(), theta.clone(), vec![l1.clone(), b.f(3)]);
    b.push("θ⊗θ", theta.clone(), theta.clone(), vec![z.clone(), b.two(1), b.f(4)]);
    for i in 3..l - 3 {
        b.push("λi⊗θ, 2<i<l-3", b.f(i), theta.clone(), vec![b.f(i - 2), b.f(i + 2)]);
    }
    b.push("λ(l-3)⊗θ", b.f(l - 3), theta.clone(), vec![b.f(l - 5), spin_sum.clone()]);
    b.push("λ(l-2)⊗θ", b.f(l - 2), theta.clone(), vec![b.f(l - 4), b.two(l), b.two(l - 1)]);

    b.push("2λ1⊗θ", b.two(1), theta.clone(), vec![theta.clone()]);
    for i in 1..l - 1 {
        b.push("2λ1⊗λi, i<l-1", b.two(1), b.f(i), vec![b.f(i)]);
    }
    b.push("2λl⊗θ", b.two(l), theta.clone(), vec![b.f(l - 2)]);
    b.push("2λ(l-1)⊗θ", b.two(l - 1), theta.clone(), vec![b.f(l - 2)]);
    b.push("2λl⊗2λ1", b.two(l), b.two(1), vec![b.two(l - 1)]);
    b.push("2λ(l-1)⊗2λ1", b.two(l - 1), b.two(1), vec![b.two(l)]);

    b.push("λ1⊗λ1", l1.clone(), l1.clone(), vec![z.clone(), theta.clone(), b.two(1)]);
    for i in 2..l - 2 {
        b.push("λi⊗λ1, 1<i<l-2", b.f(i), l1.clone(), vec![b.f(i - 1), b.f(i + 1)]);
    }
    b.push("λ(l-2)⊗λ1", b.f(l - 2), l1.clone(), vec![b.f(l - 3), spin_sum.clone()]);
    b.push(
        "(λ(l-1)+λl)⊗λ1",
        spin_sum.clone(),
        l1.clone(),
        vec![b.f(l - 2), b.two(l - 1), b.two(l)],
    );
    b.push("2λ(l-1)⊗λ1", b.two(l - 1), l1.clone(), vec![spin_sum.clone()]);
    b.push("2λl⊗λ1", b.two(l), l1.clone(), vec![spin_sum.clone()]);

    for i in 2..l - 1 {
        for j in 1..i {
            let s = i + j;
            let mut summands = vec![b.f(i - j)];
            if s < l - 1 {
                summands.push(b.f(s));
            } else if s == l - 1 || s == l + 1 {
                summands.push(spin_sum.clone());
            } else if s == l {
                summands.push(b.two(l - 1));
                summands.push(b.two(l));
            } else {
                summands.push(b.f(2 * l - s));
            }
            b.push("λi⊗λj, j<i<l-1", b.f(i), b.f(j), summands);
        }
    }
    for i in 1..l - 1 {
        let mut summands = vec![z.clone(), b.two(1)];
        let s = 2 * i;
        if s < l - 1 {
            summands.push(b.f(s));
        } else if s == l - 1 || s == l + 1 {
            summands.push(spin_sum.clone());
        } else if s == l {
            summands.push(b.two(l - 1));
            summands.push(b.two(l));
        } else {
            summands.push(b.f(2 * l - s));
        }
        b.push("λi⊗λi, i<l-1", b.f(i), b.f(i), summands);
    }
    for corner in [l - 1, l] {
        b.push("2λ(l-1)/2λl ⊗ λ1", b.two(corner), l1.clone(), vec![spin_sum.clone()]);
        for j in 2..l - 1 {
            b.push("2λ(l-1)/2λl ⊗ λj, 1<j<l-1", b.two(corner), b.f(j), vec![b.f(l - j)]);
        }
    }
    b.out
}

/// The eleven E_7 products at level 2 (θ = λ1).
pub fn e7() -> Vec<GoldenProduct> {
    let mut b = Builder::new(7);
    let (z, theta) = (b.zero(), b.f(1));
    b.push("2λ7⊗θ", b.two(7), theta.clone(), vec![b.f(6)]);
    b.push("θ⊗θ", theta.clone(), theta.clone(), vec![z.clone(), b.f(6)]);
    b.push("λ6⊗θ", b.f(6), theta.clone(), vec![theta.clone(), b.two(7)]);
    b.push("λ2⊗θ", b.f(2), theta.clone(), vec![b.f(7)]);
    b.push("λ7⊗θ", b.f(7), theta.clone(), vec![b.f(2), b.f(7)]);
    b.push("λ6⊗λ6", b.f(6), b.f(6), vec![z.clone(), b.f(6)]);
    b.push("λ2⊗λ6", b.f(2), b.f(6), vec![b.f(7)]);
    b.push("λ7⊗λ6", b.f(7), b.f(6), vec![b.f(2), b.f(7)]);
    b.push("λ7⊗λ7", b.f(7), b.f(7), vec![z.clone(), theta.clone(), b.two(7), b.f(6)]);
    b.push("λ2⊗λ7", b.f(2), b.f(7), vec![theta.clone(), b.f(6)]);
    b.push("λ2⊗λ2", b.f(2), b.f(2), vec![z.clone(), b.two(7)]);
    b.out
}

/// The three E_8 products at level 2 (θ = λ8).
pub fn e8() -> Vec<GoldenProduct> {
    let mut b = Builder::new(8);
    let (z, theta) = (b.zero(), b.f(8));
    b.push("θ⊗θ", theta.clone(), theta.clone(), vec![z.clone(), b.f(1)]);
    b.push("λ1⊗θ", b.f(1), theta.clone(), vec![theta.clone()]);
    b.push("λ1⊗λ1", b.f(1), b.f(1), vec![z]);
    b.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sizes() {
        assert_eq!(e7().len(), 11);
        assert_eq!(e8().len(), 3);
        assert!(!b_series(4).is_empty());
        assert!(!d_series(6).is_empty());
    }

    #[test]
    fn no_pair_listed_twice() {
        for table in [b_series(5), d_series(9), e7()] {
            for (i, a) in table.iter().enumerate() {
                for b in &table[i + 1..] {
                    assert!(!(a.lhs == b.lhs && a.rhs == b.rhs));
                }
            }
        }
    }
}
