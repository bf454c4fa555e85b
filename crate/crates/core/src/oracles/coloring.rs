use super::Deadline;

/// Size of a greedily grown clique, a lower bound on the chromatic number.
fn greedy_clique(adj: &[u128]) -> usize {
    let n = adj.len();
    (0..n)
        .map(|start| {
            let mut size = 1;
            let mut cands = adj[start];
            while cands != 0 {
                let mut pick = cands.trailing_zeros() as usize;
                let mut best = 0;
                let mut rest = cands;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let d = (adj[u] & cands).count_ones();
                    if d > best {
                        best = d;
                        pick = u;
                    }
                }
                size += 1;
                cands &= adj[pick];
            }
            size
        })
        .max()
        .unwrap_or(0)
}

struct Colorer<'a> {
    adj: &'a [u128],
    colors: usize,
    color_of: Vec<Option<usize>>,
    nodes: u64,
    deadline: Deadline,
    timed_out: bool,
}

impl Colorer<'_> {
    /// Colors still forbidden at `v`, as a bitmask.
    fn used_around(&self, v: usize) -> u128 {
        let mut mask = 0u128;
        let mut nb = self.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if let Some(c) = self.color_of[u] {
                mask |= 1 << c;
            }
        }
        mask
    }

    fn solve(&mut self, used: usize) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && self.deadline.passed() {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        // Most saturated uncolored vertex first.
        let pick = (0..self.adj.len())
            .filter(|&v| self.color_of[v].is_none())
            .max_by_key(|&v| (self.used_around(v).count_ones(), self.adj[v].count_ones(), usize::MAX - v));
        let Some(v) = pick else { return true };
        let forbidden = self.used_around(v);
        // A fresh color is interchangeable with any other unused one.
        for c in 0..self.colors.min(used + 1) {
            if forbidden >> c & 1 == 0 {
                self.color_of[v] = Some(c);
                if self.solve(used.max(c + 1)) {
                    return true;
                }
            }
        }
        self.color_of[v] = None;
        false
    }
}

/// Exact chromatic number, or `None` past the deadline.
pub(super) fn chromatic_number(adj: &[u128], deadline: Deadline) -> Option<usize> {
    let n = adj.len();
    if n == 0 {
        return Some(0);
    }
    for colors in greedy_clique(adj).max(1)..=n {
        let mut c = Colorer { adj, colors, color_of: vec![None; n], nodes: 0, deadline, timed_out: false };
        if c.solve(0) {
            return Some(colors);
        }
        if c.timed_out {
            return None;
        }
    }
    Some(n)
}
