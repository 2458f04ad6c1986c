use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SearchError;
use crate::graph::{Graph, MAX_ORDER};

/// Rejection-sampling budget for [`random_connected`].
pub const RANDOM_MAX_ATTEMPTS: u32 = 10_000;

/// Samples `G(n, p)` until the result is connected. Deterministic in
/// `(n, p, seed)`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, SearchError> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(SearchError::InvalidOrder { n, max: MAX_ORDER });
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(SearchError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_MAX_ATTEMPTS {
        let mut rows = vec![0u64; n];
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
            }
        }
        let g = Graph::from_rows(rows);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(SearchError::GiveUp { attempts: RANDOM_MAX_ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = random_connected(8, 0.5, 1).unwrap();
        let b = random_connected(8, 0.5, 1).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
    }

    #[test]
    fn two_vertices() {
        for seed in 0..5 {
            let g = random_connected(2, 0.9, seed).unwrap();
            assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        }
    }

    #[test]
    fn gives_up_when_sparse() {
        assert_eq!(
            random_connected(50, 0.0001, 1),
            Err(SearchError::GiveUp { attempts: RANDOM_MAX_ATTEMPTS })
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(random_connected(0, 0.5, 1), Err(SearchError::InvalidOrder { .. })));
        assert!(matches!(random_connected(5, 1.0, 1), Err(SearchError::InvalidProbability(_))));
        assert!(matches!(random_connected(5, 0.0, 1), Err(SearchError::InvalidProbability(_))));
        assert!(matches!(random_connected(5, f64::NAN, 1), Err(SearchError::InvalidProbability(_))));
    }
}
