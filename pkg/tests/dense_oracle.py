"""Independent dense linear-algebra oracle used by the test suite.

Everything here is built directly from 2x2 matrices and numpy.kron so that
the checks stay independent of the library code they verify.  Conventions
match the library's documented ones: letter strings are site 0 first, and
site 0 is the most significant bit of a dense index.
"""

from __future__ import annotations

import numpy as np

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)
H2 = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
MATS = {"I": I2, "X": X2, "Y": Y2, "Z": Z2, "H": H2}


def kron_chain(matrices) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for m in matrices:
        out = np.kron(out, m)
    return out


def string_matrix(label: str) -> np.ndarray:
    return kron_chain(MATS[c] for c in label)


def shifted_term_matrix(coeff: float, label: str, shift_scale: float = 1.0) -> np.ndarray:
    """coeff * string + shift_scale * |coeff| * identity."""
    dim = 2 ** len(label)
    return coeff * string_matrix(label) + shift_scale * abs(coeff) * np.eye(dim)


def basis_vector(bits) -> np.ndarray:
    """Computational basis state; bits[0] is the most significant index bit."""
    index = 0
    for b in bits:
        index = (index << 1) | int(b)
    vec = np.zeros(2 ** len(bits), dtype=complex)
    vec[index] = 1.0
    return vec


def operator_string_element(bits, coeffs, labels, shift_scale: float = 1.0) -> complex:
    """<alpha| H_{b_n} ... H_{b_1} |alpha> for shifted terms.

    ``coeffs``/``labels`` are ordered (b_1, ..., b_n); the matrix product
    applies b_1 first, i.e. H_{b_n} is the leftmost factor.
    """
    vec = basis_vector(bits)
    out = vec.copy()
    for coeff, label in zip(coeffs, labels):
        out = shifted_term_matrix(coeff, label, shift_scale) @ out
    return complex(np.vdot(vec, out))


def normalized_amplitude(bits, coeffs, labels, shift_scale: float = 1.0) -> complex:
    """Operator-string element divided by prod_i (scale+1) |h_i|."""
    value = operator_string_element(bits, coeffs, labels, shift_scale)
    denom = 1.0
    for c in coeffs:
        denom *= (shift_scale + 1.0) * abs(c)
    return value / denom


def controlled_string_unitary(
    n_system: int, n_ancilla: int, control: int, label: str, sign: float
) -> np.ndarray:
    """Unitary acting as sign * string on the system when ancilla ``control``
    is |1>, identity otherwise.  Qubit order: system 0..N-1 then ancillas,
    qubit 0 most significant."""
    p0 = np.array([[1, 0], [0, 0]], dtype=complex)
    p1 = np.array([[0, 0], [0, 1]], dtype=complex)
    total = n_system + n_ancilla
    ops0 = [I2] * total
    ops1 = [MATS[c] for c in label] + [I2] * n_ancilla
    ops0[n_system + control] = p0
    ops1[n_system + control] = p1
    return kron_chain(ops0) + sign * kron_chain(ops1)


def thermal_expectation(h_matrix: np.ndarray, beta: float, obs_matrix: np.ndarray):
    """(Tr(O exp(-beta H)) / Z, Z) by dense eigendecomposition."""
    evals, vecs = np.linalg.eigh(h_matrix)
    weights = np.exp(-beta * evals)
    z = weights.sum()
    obs_in_eig = vecs.conj().T @ obs_matrix @ vecs
    value = float(np.real(np.sum(np.diag(obs_in_eig) * weights) / z))
    return value, float(z)
