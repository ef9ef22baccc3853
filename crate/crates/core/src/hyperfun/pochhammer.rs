//! Rising factorial.

/// Pochhammer symbol (a)_m = a(a+1)···(a+m−1), with (a)_0 = 1.
pub fn pochhammer(a: f64, m: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..m {
        acc *= a + i as f64;
    }
    acc
}
