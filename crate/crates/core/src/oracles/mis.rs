use super::Deadline;

/// Number of cliques in a greedy clique cover of `cand`; bounds the size of
/// any independent set inside `cand`.
fn clique_cover_bound(adj: &[u128], mut cand: u128) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique_cands = cand & adj[v];
        cand &= !(1u128 << v);
        while clique_cands != 0 {
            let u = clique_cands.trailing_zeros() as usize;
            cand &= !(1u128 << u);
            clique_cands &= adj[u];
        }
        cliques += 1;
    }
    cliques
}

struct Search<'a> {
    adj: &'a [u128],
    best: usize,
    nodes: u64,
    deadline: Deadline,
    timed_out: bool,
}

impl Search<'_> {
    fn expand(&mut self, cand: u128, size: usize) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && self.deadline.passed() {
            self.timed_out = true;
        }
        if self.timed_out {
            return;
        }
        if cand == 0 {
            self.best = self.best.max(size);
            return;
        }
        if size + clique_cover_bound(self.adj, cand) <= self.best {
            return;
        }
        // Branch on the candidate with the most candidate neighbors.
        let mut v = cand.trailing_zeros() as usize;
        let mut deg = 0;
        let mut rest = cand;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[u] & cand).count_ones();
            if d > deg {
                deg = d;
                v = u;
            }
        }
        let bit = 1u128 << v;
        if deg == 0 {
            self.best = self.best.max(size + cand.count_ones() as usize);
            return;
        }
        self.expand(cand & !bit & !self.adj[v], size + 1);
        self.expand(cand & !bit, size);
    }
}

/// Exact independence number, or `None` past the deadline.
pub(super) fn maximum_independent_set(adj: &[u128], deadline: Deadline) -> Option<usize> {
    let n = adj.len();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut s = Search { adj, best: 0, nodes: 0, deadline, timed_out: false };
    s.expand(all, 0);
    (!s.timed_out).then_some(s.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::{Duration, Instant};

    fn brute(adj: &[u128]) -> usize {
        let n = adj.len();
        (0u128..1 << n)
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn matches_subset_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..11);
            let mut adj = vec![0u128; n];
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        adj[u] |= 1 << v;
                        adj[v] |= 1 << u;
                    }
                }
            }
            let deadline = Deadline(Instant::now() + Duration::from_secs(10));
            assert_eq!(maximum_independent_set(&adj, deadline), Some(brute(&adj)));
        }
    }
}
