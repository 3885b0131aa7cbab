//! Chirp-z evaluation of `S_k = Σ_j a_j exp(iθ j k)` for centred index ranges.
//!
//! Uses `jk = (j² + k² − (k − j)²) / 2`, which turns the sum into a linear
//! convolution with a quadratic-phase chirp, evaluated by FFT in
//! `O((Nx + Ny) log(Nx + Ny))`. Works for any real `θ`, so the frequency
//! nodes need not line up with DFT bins.

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

/// `a` holds the input at offsets `-cx..=cx`; returns the sums at offsets
/// `-cy..=cy`.
pub(crate) fn chirp_sums(a: &[f64], cy: usize, theta: f64) -> Vec<Complex64> {
    debug_assert!(a.len() % 2 == 1);
    let cx = (a.len() - 1) / 2;
    let ny = 2 * cy + 1;
    let reach = cx + cy;
    let size = (a.len() + ny - 1).next_power_of_two();

    let half_phase = |m: i64| -> Complex64 {
        let angle = 0.5 * theta * (m * m) as f64;
        let (s, c) = angle.sin_cos();
        Complex64::new(c, s)
    };

    let mut signal = vec![Complex64::new(0.0, 0.0); size];
    for (j, &v) in a.iter().enumerate() {
        signal[j] = v * half_phase(j as i64 - cx as i64);
    }
    let mut chirp = vec![Complex64::new(0.0, 0.0); size];
    for (m, slot) in chirp.iter_mut().enumerate().take(2 * reach + 1) {
        *slot = half_phase(m as i64 - reach as i64).conj();
    }

    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(size);
    let inverse = planner.plan_fft_inverse(size);
    forward.process(&mut signal);
    forward.process(&mut chirp);
    for (s, c) in signal.iter_mut().zip(&chirp) {
        *s *= c;
    }
    inverse.process(&mut signal);

    let scale = 1.0 / size as f64;
    (0..ny)
        .map(|i| {
            let k = i as i64 - cy as i64;
            let n = (k + (cx + reach) as i64) as usize;
            signal[n] * scale * half_phase(k)
        })
        .collect()
}
