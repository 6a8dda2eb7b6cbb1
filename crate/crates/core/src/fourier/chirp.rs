//! Bluestein chirp-z evaluation of `X_j = Σ_k y_k e^{-iθjk}` for arbitrary `θ`.

use num_complex::Complex;
use rustfft::FftPlanner;

use crate::scalar::Real;

pub(crate) fn chirp_z<T: Real>(y: &[Complex<T>], m: usize, theta: T) -> Vec<Complex<T>> {
    let n = y.len();
    let len = (n + m - 1).next_power_of_two();
    // chirp(k) = e^{-iθk²/2}; the phase is reduced in f64 so that f32 callers
    // do not lose it for large k
    let half_theta = theta.to_f64_lossy() * 0.5;
    let chirp = |k: usize| {
        let k2 = (k as f64) * (k as f64);
        let phase = (-half_theta * k2).rem_euclid(std::f64::consts::TAU);
        Complex::from_polar(T::one(), T::lit(phase))
    };

    let mut a = vec![Complex::new(T::zero(), T::zero()); len];
    for (k, &v) in y.iter().enumerate() {
        a[k] = v * chirp(k);
    }
    let mut b = vec![Complex::new(T::zero(), T::zero()); len];
    let reach = n.max(m);
    for k in 0..reach {
        let c = chirp(k).conj();
        b[k] = c;
        if k > 0 {
            b[len - k] = c;
        }
    }

    let mut planner = FftPlanner::<T>::new();
    let fwd = planner.plan_fft_forward(len);
    let inv = planner.plan_fft_inverse(len);
    fwd.process(&mut a);
    fwd.process(&mut b);
    for (x, z) in a.iter_mut().zip(&b) {
        *x *= z;
    }
    inv.process(&mut a);
    let scale = T::one() / T::from_index(len);
    (0..m).map(|j| a[j] * chirp(j) * scale).collect()
}
