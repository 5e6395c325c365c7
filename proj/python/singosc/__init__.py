"""Double singular oscillator: exact operator algebra, structure function and spectra."""

from ._core import (
    closed_form,
    dim_harm,
    enumerate_levels,
    fd_eigenvalues,
    harmonic_limit_ok,
    oscillator_counts_ok,
    run_cli,
    solve_unirreps,
    structure_forms_agree,
    verify_q3,
    verify_qp3,
    wavefunction_norm,
)

__all__ = [
    "closed_form",
    "dim_harm",
    "enumerate_levels",
    "fd_eigenvalues",
    "harmonic_limit_ok",
    "oscillator_counts_ok",
    "run_cli",
    "solve_unirreps",
    "structure_forms_agree",
    "verify_q3",
    "verify_qp3",
    "wavefunction_norm",
]
