//! Words over `X = {0, .., n-1}` and their base-`n` integer encodings.
//!
//! A word `a_1 a_2 .. a_m` is encoded as `a_1 n^{m-1} + .. + a_m`, so the
//! encoding order on words of a fixed length is the lexicographic order of
//! the index sequences.

use num_bigint::BigUint;

pub type Word = Vec<usize>;

/// `n^m`, or `None` on overflow.
pub fn checked_pow(n: usize, m: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..m {
        acc = acc.checked_mul(n)?;
    }
    Some(acc)
}

pub fn encode(n: usize, word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &a| acc * n + a)
}

pub fn decode(n: usize, m: usize, mut code: usize) -> Word {
    let mut word = vec![0; m];
    for slot in word.iter_mut().rev() {
        *slot = code % n;
        code /= n;
    }
    word
}

/// Binomial coefficient for the small arguments that show up in dimension
/// formulas. Returns 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u8);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Renders a word using generator names, e.g. `xzy`. Names longer than one
/// character are separated by `*`.
pub fn render(names: &[String], word: &[usize]) -> String {
    let short = word.iter().all(|&a| names[a].chars().count() == 1);
    let parts: Vec<&str> = word.iter().map(|&a| names[a].as_str()).collect();
    if short {
        parts.concat()
    } else {
        parts.join("*")
    }
}

/// Default generator names: `x1, x2, ..`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}
