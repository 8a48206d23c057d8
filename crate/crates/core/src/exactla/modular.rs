//! Rank modulo a word-size prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use super::SparseMatrix;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A uniformly drawn prime in `[2^61, 2^62)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range((1u64 << 61)..(1u64 << 62)) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

fn reduce_int(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Rank of `m` over `F_p`, or `None` if some denominator vanishes mod `p`.
pub fn modular_rank(m: &SparseMatrix, p: u64) -> Option<usize> {
    let mut pivot_row: Vec<usize> = vec![usize::MAX; m.cols()];
    let mut basis: Vec<Vec<(usize, u64)>> = Vec::new();
    for row in m.row_vectors() {
        let mut r: Vec<(usize, u64)> = Vec::with_capacity(row.nnz());
        for (j, q) in row.entries() {
            let den = reduce_int(q.denom(), p);
            if den.is_zero() {
                return None;
            }
            let mut num = reduce_int(&q.numer().abs(), p);
            if q.is_negative() {
                num = (p - num) % p;
            }
            let v = mul_mod(num, inv_mod(den, p), p);
            if v != 0 {
                r.push((*j, v));
            }
        }
        while let Some(&(c, lead)) = r.first() {
            let k = pivot_row[c];
            if k == usize::MAX {
                // Normalize so the stored pivot is 1.
                let inv = inv_mod(lead, p);
                for e in r.iter_mut() {
                    e.1 = mul_mod(e.1, inv, p);
                }
                pivot_row[c] = basis.len();
                basis.push(r);
                break;
            }
            r = sub_scaled(&r, lead, &basis[k], p);
        }
    }
    Some(basis.len())
}

/// `x - c * y` over `F_p`.
fn sub_scaled(x: &[(usize, u64)], c: u64, y: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut a, mut b) = (0, 0);
    while a < x.len() || b < y.len() {
        let ia = x.get(a).map_or(usize::MAX, |e| e.0);
        let ib = y.get(b).map_or(usize::MAX, |e| e.0);
        if ia < ib {
            out.push(x[a]);
            a += 1;
        } else {
            let t = mul_mod(c, y[b].1, p);
            let v = if ia == ib {
                let v = (x[a].1 + p - t) % p;
                a += 1;
                v
            } else {
                (p - t) % p
            };
            if v != 0 {
                out.push((ib, v));
            }
            b += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(3215031751));
    }

    #[test]
    fn drawn_primes_are_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let p = random_prime(&mut rng);
            assert!((1 << 61..1 << 62).contains(&p) && is_prime(p));
        }
    }

    #[test]
    fn rank_mod_small_prime_can_drop() {
        let m = SparseMatrix::from_i64(&[vec![1, 1], vec![1, 4]]);
        assert_eq!(modular_rank(&m, 3), Some(1));
        assert_eq!(modular_rank(&m, 1_000_000_007), Some(2));
        let half = SparseMatrix::from_dense(1, 1, &[vec![crate::exactla::frac(1, 2)]]);
        assert_eq!(modular_rank(&half, 2), None);
    }
}
