use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::Partition;
use crate::error::{Error, Result};

type Memo = RwLock<HashMap<(Vec<u32>, Vec<u32>), i64>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Irreducible character `χ_λ(μ)` by the Murnaghan–Nakayama rule.
///
/// Border strips are removed through beta-sets; the memo is shared across threads.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(mn(lambda.parts(), mu.parts()))
}

fn mn(lambda: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let k = mu[0] as i64;
    let rest = &mu[1..];
    let l = lambda.len() as i64;
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + l - 1 - i as i64)
        .collect();
    let mut total = 0i64;
    for i in 0..beta.len() {
        let nb = beta[i] - k;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&b| nb < b && b < beta[i]).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nbeta
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (l - 1 - j as i64)) as u32)
            .filter(|&p| p > 0)
            .collect();
        let v = mn(&parts, rest);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo().write().unwrap().insert(key, total);
    total
}
