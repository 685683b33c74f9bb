//! In-place fast Walsh–Hadamard transform.

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;

/// Unnormalized butterfly passes; length must be a power of two.
pub(crate) fn fwht_butterflies(data: &mut [f64]) {
    let n = data.len();
    let mut h = 1;
    while h < n {
        let mut i = 0;
        while i < n {
            for j in i..i + h {
                let x = data[j];
                let y = data[j + h];
                data[j] = x + y;
                data[j + h] = x - y;
            }
            i += h * 2;
        }
        h <<= 1;
    }
}

/// Orthonormal Walsh–Hadamard transform (scaled by 1/√n). Self-inverse and
/// energy-preserving.
pub fn fwht_normalized(data: &mut [f64]) -> Result<(), Error> {
    let n = data.len();
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::InvalidArgument("transform length must be a power of two"));
    }
    fwht_butterflies(data);
    let scale = 1.0 / (n as f64).sqrt();
    for v in data.iter_mut() {
        *v *= scale;
    }
    Ok(())
}
