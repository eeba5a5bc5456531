use crate::space::Role;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Tensor operands share a subsystem label.
    #[error("role {0} appears in both tensor operands")]
    DuplicateRole(Role),
    /// A requested subsystem label is not part of the layout.
    #[error("role {0} is not part of the layout")]
    UnknownRole(Role),
    /// Operands live on different labeled spaces.
    #[error("operand layouts do not match")]
    LayoutMismatch,
    /// The matrix handed to the Hermitian eigensolver is not Hermitian.
    #[error("matrix is not Hermitian (elementwise defect {defect:.3e})")]
    NotHermitian { defect: f64 },
    #[error("invalid density matrix: {0}")]
    InvalidState(String),
    #[error("invalid state vector: {0}")]
    InvalidKet(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// J(omega) diverges at the peak for a vanishing linewidth.
    #[error("spectral density is singular at omega = omega0 when gamma = 0")]
    SingularSpectralDensity,
    /// Initial states occupy mode levels |0> and |1>, so the cutoff must allow them.
    #[error("fock cutoff must be at least 1 to host the initial states")]
    CutoffTooSmall,
    /// An operation needs a two-qubit state and got something else.
    #[error("operation requires a two-qubit state, got dimension {dim}")]
    NotTwoQubit { dim: usize },
    /// Integrator diagnostics crossed their abort thresholds.
    #[error(
        "integration unstable at Omega*t = {t_omega:.6}: trace drift {trace_drift:.3e}, \
         min eigenvalue {min_eigenvalue:.3e}"
    )]
    IntegrationUnstable {
        t_omega: f64,
        trace_drift: f64,
        min_eigenvalue: f64,
    },
}
