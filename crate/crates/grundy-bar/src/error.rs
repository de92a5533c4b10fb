use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument {t} exceeds domain_max {max}; refusing to extrapolate")]
    DomainExceeded { t: u32, max: u32 },

    #[error("position y={y}, z={z} lies outside table bounds y_max={y_max}, z_max={z_max}")]
    OutOfBounds { y: u32, z: u32, y_max: u32, z_max: u32 },

    #[error("floor_div divisor must be even and at least 2, got {divisor}")]
    DivisorNotEven { divisor: u32 },

    #[error("linear slope must be positive")]
    SlopeZero,

    #[error("linear slope {slope} overflows at domain_max {domain_max}")]
    WidthOverflow { slope: u32, domain_max: u32 },

    #[error("table of values must be non-empty")]
    TableEmpty,

    #[error("table values must be monotone non-decreasing: values[{index}] = {value} < {prev}")]
    TableNotMonotone { index: usize, value: u32, prev: u32 },

    #[error("shift amount must be positive")]
    ShiftZero,

    #[error("shifted base covers arguments up to {base_max}, but domain_max plus shift needs {needed}")]
    ShiftedBaseTooSmall { base_max: u32, needed: u32 },

    #[error("shifted formula underflows at y={y}, z={z}, s={s}: (y XOR (z+s)) < s")]
    ShiftUnderflow { y: u32, z: u32, s: u32 },

    #[error("block condition fails on window z_max={window} at (i={i}, z={z}, z'={z_prime}); formula classification refused")]
    Uncertified { window: u32, i: u32, z: u32, z_prime: u32 },

    #[error("y={y} exceeds the width bound h(z)={width}; formula classification refused")]
    AboveWidth { y: u32, width: u32 },

    #[error("persisted table fingerprint {found} does not match function fingerprint {expected}")]
    FingerprintMismatch { expected: String, found: String },

    #[error("malformed table file: {0}")]
    MalformedTable(String),

    #[error("invalid input: {0}")]
    Spec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
