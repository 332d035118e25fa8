use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

/// Gate vocabulary. Operands are stored controls first, target last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum GateKind {
    H,
    X,
    Z,
    Cx,
    Cz,
    Ccx,
    /// X on the last operand, controlled on all others.
    Mcx,
    /// Phase flip when every operand is 1.
    Mcz,
    Ry,
    Cry,
    Ccry,
    U3,
    U2,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Z => "Z",
            GateKind::Cx => "CX",
            GateKind::Cz => "CZ",
            GateKind::Ccx => "CCX",
            GateKind::Mcx => "MCX",
            GateKind::Mcz => "MCZ",
            GateKind::Ry => "RY",
            GateKind::Cry => "CRY",
            GateKind::Ccry => "CCRY",
            GateKind::U3 => "U3",
            GateKind::U2 => "U2",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "H" => GateKind::H,
            "X" => GateKind::X,
            "Z" => GateKind::Z,
            "CX" => GateKind::Cx,
            "CZ" => GateKind::Cz,
            "CCX" => GateKind::Ccx,
            "MCX" => GateKind::Mcx,
            "MCZ" => GateKind::Mcz,
            "RY" => GateKind::Ry,
            "CRY" => GateKind::Cry,
            "CCRY" => GateKind::Ccry,
            "U3" => GateKind::U3,
            "U2" => GateKind::U2,
            _ => return None,
        })
    }

    /// Fixed operand count, or `None` for the multi-controlled kinds.
    pub fn arity(self) -> Option<usize> {
        match self {
            GateKind::H | GateKind::X | GateKind::Z | GateKind::Ry | GateKind::U3 | GateKind::U2 => Some(1),
            GateKind::Cx | GateKind::Cz | GateKind::Cry => Some(2),
            GateKind::Ccx | GateKind::Ccry => Some(3),
            GateKind::Mcx | GateKind::Mcz => None,
        }
    }

    pub fn param_count(self) -> usize {
        match self {
            GateKind::Ry | GateKind::Cry | GateKind::Ccry => 1,
            GateKind::U2 => 2,
            GateKind::U3 => 3,
            _ => 0,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GateError {
    #[error("{kind} takes {expected} operands, got {got}")]
    Arity {
        kind: GateKind,
        expected: usize,
        got: usize,
    },
    #[error("{0} needs at least one control")]
    NoControls(GateKind),
    #[error("operand {0} repeated")]
    RepeatedOperand(usize),
    #[error("non-finite angle")]
    NonFiniteAngle,
}

/// A gate applied to concrete qubit indices.
///
/// Angles live in `params`: `[theta]` for the RY family, `[phi, lambda]`
/// for U2 and `[theta, phi, lambda]` for U3. Unused slots are zero.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Gate {
    kind: GateKind,
    qubits: Vec<usize>,
    params: [f64; 3],
}

impl Gate {
    pub fn new(kind: GateKind, qubits: Vec<usize>, params: [f64; 3]) -> Result<Self, GateError> {
        match kind.arity() {
            Some(expected) if expected != qubits.len() => {
                return Err(GateError::Arity {
                    kind,
                    expected,
                    got: qubits.len(),
                })
            }
            None if qubits.len() < 2 => return Err(GateError::NoControls(kind)),
            _ => {}
        }
        for (i, q) in qubits.iter().enumerate() {
            if qubits[..i].contains(q) {
                return Err(GateError::RepeatedOperand(*q));
            }
        }
        if params.iter().any(|p| !p.is_finite()) {
            return Err(GateError::NonFiniteAngle);
        }
        let mut params = params;
        for p in params.iter_mut().skip(kind.param_count()) {
            *p = 0.0;
        }
        if kind == GateKind::U2 {
            params[0] = wrap_angle(params[0]);
            params[1] = wrap_angle(params[1]);
        }
        Ok(Self { kind, qubits, params })
    }

    fn build(kind: GateKind, qubits: Vec<usize>, params: [f64; 3]) -> Self {
        match Self::new(kind, qubits, params) {
            Ok(g) => g,
            Err(e) => panic!("invalid gate: {e}"),
        }
    }

    pub fn h(q: usize) -> Self {
        Self::build(GateKind::H, alloc::vec![q], [0.0; 3])
    }

    pub fn x(q: usize) -> Self {
        Self::build(GateKind::X, alloc::vec![q], [0.0; 3])
    }

    pub fn z(q: usize) -> Self {
        Self::build(GateKind::Z, alloc::vec![q], [0.0; 3])
    }

    pub fn cx(control: usize, target: usize) -> Self {
        Self::build(GateKind::Cx, alloc::vec![control, target], [0.0; 3])
    }

    pub fn cz(a: usize, b: usize) -> Self {
        Self::build(GateKind::Cz, alloc::vec![a, b], [0.0; 3])
    }

    pub fn ccx(c0: usize, c1: usize, target: usize) -> Self {
        Self::build(GateKind::Ccx, alloc::vec![c0, c1, target], [0.0; 3])
    }

    /// X on `target` controlled on `controls`, using the narrowest kind
    /// (X, CX, CCX or MCX).
    pub fn mcx(controls: &[usize], target: usize) -> Self {
        let mut qubits = controls.to_vec();
        qubits.push(target);
        let kind = match controls.len() {
            0 => GateKind::X,
            1 => GateKind::Cx,
            2 => GateKind::Ccx,
            _ => GateKind::Mcx,
        };
        Self::build(kind, qubits, [0.0; 3])
    }

    /// Phase flip on the all-ones state of `qubits`, using the narrowest kind
    /// (Z, CZ or MCZ).
    pub fn mcz(qubits: &[usize]) -> Self {
        let kind = match qubits.len() {
            1 => GateKind::Z,
            2 => GateKind::Cz,
            _ => GateKind::Mcz,
        };
        Self::build(kind, qubits.to_vec(), [0.0; 3])
    }

    pub fn ry(theta: f64, q: usize) -> Self {
        Self::build(GateKind::Ry, alloc::vec![q], [theta, 0.0, 0.0])
    }

    pub fn cry(theta: f64, control: usize, target: usize) -> Self {
        Self::build(GateKind::Cry, alloc::vec![control, target], [theta, 0.0, 0.0])
    }

    pub fn ccry(theta: f64, c0: usize, c1: usize, target: usize) -> Self {
        Self::build(GateKind::Ccry, alloc::vec![c0, c1, target], [theta, 0.0, 0.0])
    }

    pub fn u3(theta: f64, phi: f64, lambda: f64, q: usize) -> Self {
        Self::build(GateKind::U3, alloc::vec![q], [theta, phi, lambda])
    }

    pub fn u2(phi: f64, lambda: f64, q: usize) -> Self {
        Self::build(GateKind::U2, alloc::vec![q], [phi, lambda, 0.0])
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    /// Target operand (last).
    pub fn target(&self) -> usize {
        *self.qubits.last().expect("gates have at least one operand")
    }

    /// Everything but the target.
    pub fn controls(&self) -> &[usize] {
        &self.qubits[..self.qubits.len() - 1]
    }

    pub fn params(&self) -> &[f64] {
        &self.params[..self.kind.param_count()]
    }

    pub(crate) fn raw_params(&self) -> [f64; 3] {
        self.params
    }

    /// The inverse gate. Rotation kinds keep their kind.
    pub fn inverse(&self) -> Self {
        let [a, b, c] = self.params;
        let params = match self.kind {
            GateKind::Ry | GateKind::Cry | GateKind::Ccry => [-a, 0.0, 0.0],
            GateKind::U3 => [-a, -c, -b],
            // U2(phi, lambda)^-1 = U2(-lambda - pi, pi - phi)
            GateKind::U2 => [-b - PI, PI - a, 0.0],
            _ => self.params,
        };
        Self::build(self.kind, self.qubits.clone(), params)
    }

    /// Same gate on relabelled qubits.
    pub fn remapped(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::build(self.kind, self.qubits.iter().map(|&q| map(q)).collect(), self.params)
    }

    /// True when the gate permutes basis states (no superposition, no phase).
    pub fn is_classical(&self) -> bool {
        matches!(self.kind, GateKind::X | GateKind::Cx | GateKind::Ccx | GateKind::Mcx)
    }
}

/// Wraps an angle into `(-pi, pi]`.
fn wrap_angle(a: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut w = a - two_pi * libm::floor((a + PI) / two_pi);
    if w <= -PI {
        w += two_pi;
    }
    w
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.kind)?;
        for (i, q) in self.qubits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{q}")?;
        }
        for p in self.params() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(matches!(
            Gate::new(GateKind::Cx, alloc::vec![0], [0.0; 3]),
            Err(GateError::Arity { .. })
        ));
        assert_eq!(
            Gate::new(GateKind::Mcx, alloc::vec![0], [0.0; 3]),
            Err(GateError::NoControls(GateKind::Mcx))
        );
        assert_eq!(
            Gate::new(GateKind::Ccx, alloc::vec![0, 1, 0], [0.0; 3]),
            Err(GateError::RepeatedOperand(0))
        );
        assert_eq!(
            Gate::new(GateKind::Ry, alloc::vec![0], [f64::NAN, 0.0, 0.0]),
            Err(GateError::NonFiniteAngle)
        );
    }

    #[test]
    fn narrowest_kinds() {
        assert_eq!(Gate::mcx(&[], 0).kind(), GateKind::X);
        assert_eq!(Gate::mcx(&[1], 0).kind(), GateKind::Cx);
        assert_eq!(Gate::mcx(&[1, 2], 0).kind(), GateKind::Ccx);
        assert_eq!(Gate::mcx(&[1, 2, 3], 0).kind(), GateKind::Mcx);
        assert_eq!(Gate::mcz(&[1]).kind(), GateKind::Z);
        assert_eq!(Gate::mcz(&[1, 2, 3, 4]).kind(), GateKind::Mcz);
    }

    #[test]
    fn inverse_negates_rotations() {
        assert_eq!(Gate::ry(0.7, 1).inverse(), Gate::ry(-0.7, 1));
        assert_eq!(Gate::u3(0.1, 0.2, 0.3, 0).inverse(), Gate::u3(-0.1, -0.3, -0.2, 0));
        assert_eq!(Gate::ccx(0, 1, 2).inverse(), Gate::ccx(0, 1, 2));
        let u2 = Gate::u2(0.3, -1.1, 0);
        let back = u2.inverse().inverse();
        for (a, b) in back.params().iter().zip(u2.params()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn wraps_angles() {
        assert!((wrap_angle(3.0 * PI) - PI).abs() < 1e-12);
        assert!((wrap_angle(-PI) - PI).abs() < 1e-12);
        assert!((wrap_angle(0.5) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", Gate::ccx(0, 1, 4)), "CCX 0,1,4");
        assert_eq!(alloc::format!("{}", Gate::ry(0.5, 2)), "RY 2 0.5");
    }
}
