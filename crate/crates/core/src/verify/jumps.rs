use crate::scalar::Real;

/// A first difference larger than this multiple of its local median is a jump.
pub const JUMP_FACTOR: f64 = 10.0;
/// Cells excluded on each side of a detected jump.
pub const JUMP_EXCLUSION_CELLS: usize = 5;
/// Half-width of the neighbourhood whose median sets the local scale.
const WINDOW: usize = 8;
/// Differences below this fraction of the largest one are never jumps.
const FLOOR: f64 = 1e-8;

/// Indices `i` such that `values[i+1] - values[i]` is a jump.
///
/// The scale is the median of `|Δ|` over the `WINDOW` cells on either side,
/// the cell itself excluded, so smooth data with steep but resolved slopes is
/// not flagged while an `O(1)` step amid `O(h)` increments is.
pub fn detect_jumps<T: Real>(values: &[T]) -> Vec<usize> {
    if values.len() < 2 {
        return Vec::new();
    }
    let diffs: Vec<T> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let largest = diffs.iter().copied().fold(T::zero(), T::max);
    if largest == T::zero() {
        return Vec::new();
    }
    let floor = largest * T::lit(FLOOR);
    let factor = T::lit(JUMP_FACTOR);
    let m = diffs.len();
    let mut scratch = Vec::with_capacity(2 * WINDOW);
    (0..m)
        .filter(|&i| {
            let d = diffs[i];
            if d <= floor {
                return false;
            }
            scratch.clear();
            let lo = i.saturating_sub(WINDOW);
            let hi = (i + WINDOW).min(m - 1);
            scratch.extend((lo..=hi).filter(|&j| j != i).map(|j| diffs[j]));
            scratch.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
            let median = scratch[scratch.len() / 2];
            d > factor * median
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_a_step() {
        let v: Vec<f64> = (0..100)
            .map(|i| if i < 40 { 0.01 * i as f64 } else { 5.0 })
            .collect();
        assert_eq!(detect_jumps(&v), vec![39]);
    }

    #[test]
    fn smooth_data_has_no_jumps() {
        let v: Vec<f64> = (0..2000).map(|i| (i as f64 * 0.01).sin() * 3.0).collect();
        assert!(detect_jumps(&v).is_empty());
        assert!(detect_jumps(&[1.0f64; 10]).is_empty());
    }
}
