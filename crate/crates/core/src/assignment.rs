//! Assignment and bipartite matching.
//!
//! Used for multiset comparison of spectra, permutative-structure detection
//! and index pairing in the pair construction.

/// Minimum-sum assignment on a square cost matrix (Hungarian method with
/// potentials, O(n³)). Returns `assign[row] = col`.
pub fn hungarian(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    if n == 0 {
        return Vec::new();
    }
    // 1-based arrays; column 0 is a sentinel.
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0; n];
    for j in 1..=n {
        if p[j] != 0 {
            assign[p[j] - 1] = j - 1;
        }
    }
    assign
}

/// Matching that saturates every left vertex, if one exists (Kuhn's augmenting paths).
/// Returns `m[left] = right`.
pub fn saturating_matching(
    n_left: usize,
    n_right: usize,
    adjacent: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = (0..n_left)
        .map(|l| (0..n_right).filter(|&r| adjacent(l, r)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; n_right];

    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let free = match owner[r] {
                None => true,
                Some(other) => augment(other, adj, owner, seen),
            };
            if free {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }

    for l in 0..n_left {
        let mut seen = vec![false; n_right];
        if !augment(l, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut m = vec![0; n_left];
    for (r, o) in owner.iter().enumerate() {
        if let Some(l) = o {
            m[*l] = r;
        }
    }
    Some(m)
}

/// Perfect matching minimizing the largest matched cost, ties broken by
/// minimum total cost among bottleneck-optimal matchings.
pub fn bottleneck_assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    if n == 0 {
        return Vec::new();
    }
    let mut levels: Vec<f64> = cost.iter().flatten().copied().collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();

    let feasible = |thr: f64| saturating_matching(n, n, |i, j| cost[i][j] <= thr).is_some();
    // The largest level always admits a perfect matching.
    let (mut lo, mut hi) = (0, levels.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(levels[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let thr = levels[lo];

    let total: f64 = cost.iter().flatten().map(|c| c.abs()).sum();
    let big = (total + 1.0) * (n as f64 + 1.0);
    let masked: Vec<Vec<f64>> = cost
        .iter()
        .map(|row| row.iter().map(|&c| if c <= thr { c } else { big }).collect())
        .collect();
    hungarian(&masked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_min_sum(cost: &[Vec<f64>]) -> f64 {
        fn rec(cost: &[Vec<f64>], row: usize, used: &mut Vec<bool>) -> f64 {
            if row == cost.len() {
                return 0.0;
            }
            let mut best = f64::INFINITY;
            for j in 0..cost.len() {
                if !used[j] {
                    used[j] = true;
                    best = best.min(cost[row][j] + rec(cost, row + 1, used));
                    used[j] = false;
                }
            }
            best
        }
        rec(cost, 0, &mut vec![false; cost.len()])
    }

    #[test]
    fn hungarian_matches_brute_force() {
        let cost = vec![
            vec![4.0, 1.0, 3.0, 2.5],
            vec![2.0, 0.0, 5.0, 1.0],
            vec![3.0, 2.0, 2.0, 7.0],
            vec![1.5, 4.0, 0.5, 3.0],
        ];
        let a = hungarian(&cost);
        let total: f64 = a.iter().enumerate().map(|(i, &j)| cost[i][j]).sum();
        assert!((total - brute_min_sum(&cost)).abs() < 1e-12);
        let mut cols = a.clone();
        cols.sort_unstable();
        assert_eq!(cols, vec![0, 1, 2, 3]);
    }

    #[test]
    fn bottleneck_prefers_small_max() {
        // min-sum picks (0,0),(1,1) with max 5; bottleneck picks the swap with max 3.
        let cost = vec![vec![0.0, 3.0], vec![3.0, 5.0]];
        assert_eq!(hungarian(&cost), vec![0, 1]);
        assert_eq!(bottleneck_assignment(&cost), vec![1, 0]);
    }

    #[test]
    fn no_saturating_matching() {
        // both left vertices only see right vertex 0
        assert!(saturating_matching(2, 2, |_, r| r == 0).is_none());
        assert_eq!(saturating_matching(2, 3, |l, r| r == l + 1), Some(vec![1, 2]));
    }
}
