//! Numerical semigroup arithmetic: membership, Frobenius numbers, and the
//! unique-representation tuple search.
//!
//! A semigroup is stored through its reduced (gcd-1) generators. Membership
//! and the Frobenius number are answered from the Apéry set of the smallest
//! reduced generator, which is computed once at construction by a
//! shortest-path relaxation over residue classes.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;

use crate::algebra::ExponentVector;
use crate::error::{Error, Result};

/// Default number of candidate tuples `choose_unique_tuple` may try.
pub const DEFAULT_TUPLE_BUDGET: usize = 20_000;

/// The numerical semigroup `⟨m_1, …, m_n⟩ = { Σ c_i m_i : c_i ∈ ℕ }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    raw: Vec<u64>,
    d: u64,
    reduced: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
}

impl NumericalSemigroup {
    /// Builds the semigroup and computes its Apéry set and Frobenius number.
    /// Accepts raw non-coprime generators; they are divided by their gcd.
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let d = generators.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        let reduced: Vec<u64> = generators.iter().map(|&g| g / d).collect();
        let apery = apery_set(&reduced);
        let pivot = *reduced.iter().min().expect("nonempty");
        let frobenius = if pivot == 1 {
            -1
        } else {
            let max = *apery.iter().max().expect("nonempty apery");
            max as i64 - pivot as i64
        };
        Ok(NumericalSemigroup { raw: generators.to_vec(), d, reduced, apery, frobenius })
    }

    pub fn raw_generators(&self) -> &[u64] {
        &self.raw
    }

    pub fn reduced_generators(&self) -> &[u64] {
        &self.reduced
    }

    /// gcd of the raw generators.
    pub fn gcd(&self) -> u64 {
        self.d
    }

    /// Apéry set of the reduced generators with respect to the smallest one:
    /// `apery[ρ]` is the least semigroup element congruent to `ρ`.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Largest integer not representable by the reduced generators, or `-1`
    /// when the reduced semigroup is all of ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// A-priori Erdős–Graham bound `⌊(2/n)·m_1·m_n⌋` on the Frobenius number
    /// of the reduced generators. `None` when 1 is a reduced generator (the
    /// bound's side condition `m_1 >= 2` fails and the gap set is empty).
    pub fn frobenius_bound(&self) -> Option<u64> {
        let mut sorted = self.reduced.clone();
        sorted.sort_unstable();
        let smallest = sorted[0];
        if smallest < 2 {
            return None;
        }
        let largest = *sorted.last().expect("nonempty");
        Some(2 * smallest * largest / sorted.len() as u64)
    }

    /// Membership: `e ∈ ⟨m_1, …, m_n⟩` iff `d | e` and `e/d` is reachable,
    /// decided via the Apéry set.
    pub fn contains(&self, e: u64) -> bool {
        if e % self.d != 0 {
            return false;
        }
        let q = e / self.d;
        let pivot = *self.reduced.iter().min().expect("nonempty");
        q >= self.apery[(q % pivot) as usize]
    }

    /// Membership for possibly-negative exponents (negatives are never in).
    pub fn contains_signed(&self, e: i64) -> bool {
        e >= 0 && self.contains(e as u64)
    }
}

/// Shortest-path Apéry set: nodes are residues mod the smallest generator,
/// edges add a generator. Dijkstra, since all weights are positive.
fn apery_set(reduced: &[u64]) -> Vec<u64> {
    let pivot = *reduced.iter().min().expect("nonempty");
    if pivot == 1 {
        return vec![0];
    }
    let p = pivot as usize;
    let mut dist = vec![u64::MAX; p];
    dist[0] = 0;
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &g in reduced {
            if g == pivot {
                continue;
            }
            let nd = d + g;
            let nv = (v + (g % pivot) as usize) % p;
            if nd < dist[nv] {
                dist[nv] = nd;
                heap.push(Reverse((nd, nv)));
            }
        }
    }
    dist
}

/// All `c ∈ ℕⁿ` with `Σ c_i m_i = target`, in ascending lexicographic order.
pub fn enumerate_representations(m: &[u64], target: u64) -> Vec<ExponentVector> {
    assert!(!m.is_empty() && m.iter().all(|&mi| mi > 0), "generators must be positive");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(m.len());
    backtrack(m, target, &mut prefix, &mut out);
    out
}

fn backtrack(m: &[u64], remaining: u64, prefix: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
    if m.len() == 1 {
        if remaining % m[0] == 0 {
            prefix.push(remaining / m[0]);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
        }
        return;
    }
    for c in 0..=remaining / m[0] {
        prefix.push(c);
        backtrack(&m[1..], remaining - c * m[0], prefix, out);
        prefix.pop();
    }
}

/// Finds positive integers `m'` such that `Σ c_i m'_i = Σ a_i m'_i` has no
/// nontrivial solution in `c ∈ ℕⁿ` — i.e. the target value has exactly one
/// representation, namely `a` itself.
///
/// The search enumerates n-tuples of distinct primes drawn from a fixed pool,
/// ordered by sum and then lexicographically, and verifies each candidate by
/// exhaustive enumeration, so the returned tuple is self-certifying. The
/// first verified candidate in this fixed order is returned, which makes the
/// output deterministic.
pub fn choose_unique_tuple(a: &ExponentVector, budget: usize) -> Result<Vec<u64>> {
    assert!(!a.is_zero(), "target exponent must be nonzero");
    for cand in prime_tuple_candidates(a.len(), budget) {
        let target = a.weighted_degree(&cand);
        let reps = enumerate_representations(&cand, target);
        if reps.len() == 1 {
            debug_assert_eq!(&reps[0], a);
            return Ok(cand);
        }
    }
    Err(Error::SearchBudgetExceeded { budget })
}

/// The deterministic candidate enumeration behind `choose_unique_tuple`:
/// n-tuples of distinct primes from a fixed pool, ordered by sum and then
/// lexicographically, capped at `budget` entries.
pub fn prime_tuple_candidates(n: usize, budget: usize) -> Vec<Vec<u64>> {
    let pool = prime_pool(n.max(8) * 2);
    let mut candidates = permutations_of_distinct(&pool, n);
    candidates.sort_by(|x, y| {
        let sx: u64 = x.iter().sum();
        let sy: u64 = y.iter().sum();
        sx.cmp(&sy).then_with(|| x.cmp(y))
    });
    candidates.truncate(budget);
    candidates
}

fn prime_pool(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while primes.len() < count {
        if primes.iter().all(|&p| candidate % p != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

fn permutations_of_distinct(pool: &[u64], n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; pool.len()];
    fn recurse(pool: &[u64], n: usize, current: &mut Vec<u64>, used: &mut Vec<bool>, out: &mut Vec<Vec<u64>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..pool.len() {
            if !used[i] {
                used[i] = true;
                current.push(pool[i]);
                recurse(pool, n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    recurse(pool, n, &mut current, &mut used, &mut out);
    out
}
