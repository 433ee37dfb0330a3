//! Number-theoretic transform over `Z/998244353`, used for exact support
//! computation of dense sumsets. Coefficients of `1_A * 1_B` are at most the
//! horizon, which stays below the modulus, so a nonzero residue means a
//! nonzero count.

const P: u64 = 998_244_353;
const G: u64 = 3;
/// Largest supported transform length.
pub(crate) const MAX_LEN: usize = 1 << 23;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn transform(a: &mut [u64], invert: bool) {
    let n = a.len();
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let mut w = pow_mod(G, (P - 1) / len as u64);
        if invert {
            w = pow_mod(w, P - 2);
        }
        let half = len / 2;
        let mut tw = Vec::with_capacity(half);
        let mut cur = 1u64;
        for _ in 0..half {
            tw.push(cur);
            cur = cur * w % P;
        }
        for block in a.chunks_exact_mut(len) {
            let (lo, hi) = block.split_at_mut(half);
            for ((u, v), &t) in lo.iter_mut().zip(hi.iter_mut()).zip(&tw) {
                let x = *u;
                let y = *v * t % P;
                *u = if x + y >= P { x + y - P } else { x + y };
                *v = if x >= y { x - y } else { x + P - y };
            }
        }
        len <<= 1;
    }
    if invert {
        let inv = pow_mod(n as u64, P - 2);
        for x in a.iter_mut() {
            *x = *x * inv % P;
        }
    }
}

/// Bit-words of the support of `1_A * 1_B` below `horizon`, where `a` and
/// `b` are bit-words over `[0, horizon)`. `len` must be a power of two
/// `>= 2·horizon` and `<= MAX_LEN`.
pub(crate) fn convolve_support(a: &[u64], b: &[u64], horizon: usize, len: usize) -> Vec<u64> {
    debug_assert!(len.is_power_of_two() && len >= 2 * horizon && len <= MAX_LEN);
    let spread = |words: &[u64]| {
        let mut f = vec![0u64; len];
        for (n, x) in f.iter_mut().enumerate().take(horizon) {
            *x = (words[n / 64] >> (n % 64)) & 1;
        }
        f
    };
    let mut fa = spread(a);
    let mut fb = spread(b);
    transform(&mut fa, false);
    transform(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = *x * y % P;
    }
    drop(fb);
    transform(&mut fa, true);
    let mut out = vec![0u64; horizon.div_ceil(64)];
    for (n, &c) in fa.iter().enumerate().take(horizon) {
        if c != 0 {
            out[n / 64] |= 1 << (n % 64);
        }
    }
    out
}
