//! Fixtures shared by the benchmarks.

use rabi_core::{DenseSymMatrix, ModelParams};

/// Parameter points spanning weak to moderate coupling.
pub fn parameter_points() -> Vec<(&'static str, ModelParams)> {
    vec![
        ("weak", ModelParams::new(1.0, 1.0, 0.1).expect("valid")),
        ("moderate", ModelParams::new(1.0, 1.5, 0.3).expect("valid")),
        ("circuit_qed", ModelParams::new(8.13, 4.25, 0.813).expect("valid")),
    ]
}

/// Deterministic dense symmetric matrix with entries in [-1, 1].
pub fn test_matrix(dim: usize) -> DenseSymMatrix {
    let mut h = DenseSymMatrix::zeros(dim);
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    for i in 0..dim {
        for j in i..dim {
            state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
            h.set(i, j, (state >> 11) as f64 / (1u64 << 52) as f64 - 1.0);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        let h = test_matrix(16);
        assert!((0..16).all(|i| (0..16).all(|j| h.get(i, j).abs() <= 1.0 && h.get(i, j) == h.get(j, i))));
        assert_eq!(parameter_points().len(), 3);
    }
}
