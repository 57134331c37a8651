//! Real zeta (and a gamma wrapper) for the residue constants.

/// `Gamma(x)`.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `zeta(s)` for real `s != 1`, `s > 0`, via the alternating series with
/// Borwein's acceleration.
pub fn zeta(s: f64) -> f64 {
    assert!(s > 0.0 && s != 1.0, "zeta is evaluated on s > 0, s != 1");
    const N: usize = 40;
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let n = N as f64;
    let mut d = [0.0f64; N + 1];
    let mut term = 1.0 / n; // i = 0: (n-1)!/n! = 1/n
    let mut acc = term;
    d[0] = n * acc;
    for i in 1..=N {
        let fi = i as f64;
        term *= (n + fi - 1.0) * 4.0 * (n - fi + 1.0) / ((2.0 * fi - 1.0) * (2.0 * fi));
        acc += term;
        d[i] = n * acc;
    }
    let mut eta = 0.0;
    for k in 0..N {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        eta += sign * (d[k] - d[N]) / ((k + 1) as f64).powf(s);
    }
    eta = -eta / d[N];
    eta / (1.0 - 2f64.powf(1.0 - s))
}
