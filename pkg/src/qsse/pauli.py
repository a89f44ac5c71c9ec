"""Pauli-string operator algebra on a fixed register of sites.

A Pauli string is stored as two bitmasks (X part, Z part) with one bit per
site, so products and commutation checks are O(N) integer operations.  Site
``j`` owns bit ``j`` of each mask; the letter at a site follows the usual
symplectic convention::

    (x, z) = (0, 0) -> I      (1, 0) -> X
    (1, 1) -> Y               (0, 1) -> Z

Dense matrices place site 0 as the *most significant* bit of the row/column
index, i.e. ``matrix = kron(op[0], op[1], ..., op[N-1])``.  The statevector
module uses the same ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Union

import numpy as np

_LETTERS = "IXYZ"
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}
_PHASES = (1 + 0j, 1j, -1 + 0j, -1j)

SINGLE_QUBIT_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

DENSE_SITE_BUDGET = 12


@dataclass(frozen=True)
class PauliString:
    """Tensor product of single-site Pauli operators (no coefficient)."""

    n_sites: int
    x_mask: int
    z_mask: int

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError("PauliString needs at least one site")
        top = 1 << self.n_sites
        if not (0 <= self.x_mask < top and 0 <= self.z_mask < top):
            raise ValueError("mask exceeds register size")

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Build from a letter string, first character = site 0."""
        x = z = 0
        for j, letter in enumerate(label):
            try:
                xb, zb = _LETTER_BITS[letter]
            except KeyError:
                raise ValueError(f"unknown Pauli letter {letter!r}") from None
            x |= xb << j
            z |= zb << j
        return cls(len(label), x, z)

    @classmethod
    def identity(cls, n_sites: int) -> "PauliString":
        return cls(n_sites, 0, 0)

    @property
    def label(self) -> str:
        return "".join(
            _BITS_LETTER[(self.x_mask >> j) & 1, (self.z_mask >> j) & 1]
            for j in range(self.n_sites)
        )

    @property
    def ops(self) -> tuple[str, ...]:
        return tuple(self.label)

    @property
    def n_y(self) -> int:
        return (self.x_mask & self.z_mask).bit_count()

    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def __str__(self) -> str:
        return self.label


def multiply_strings(a: PauliString, b: PauliString) -> tuple[complex, PauliString]:
    """Return (phase, c) with matrix(a) @ matrix(b) == phase * matrix(c).

    The phase is one of {1, i, -1, -i}.  Using Y = i X Z per site, the sign
    from commuting Z factors of ``a`` past X factors of ``b`` is
    (-1)^{|z_a & x_b|}.
    """
    if a.n_sites != b.n_sites:
        raise ValueError("length mismatch")
    x = a.x_mask ^ b.x_mask
    z = a.z_mask ^ b.z_mask
    result = PauliString(a.n_sites, x, z)
    exponent = a.n_y + b.n_y - result.n_y
    exponent += 2 * (a.z_mask & b.x_mask).bit_count()
    return _PHASES[exponent % 4], result


def strings_commute(a: PauliString, b: PauliString) -> bool:
    """Symplectic test: commute iff the anticommuting-site count is even."""
    if a.n_sites != b.n_sites:
        raise ValueError("length mismatch")
    anti = (a.x_mask & b.z_mask).bit_count() + (a.z_mask & b.x_mask).bit_count()
    return anti % 2 == 0


@dataclass(frozen=True)
class PauliTerm:
    """One Hamiltonian term: a real coefficient times a Pauli string."""

    coeff: float
    string: PauliString

    def __post_init__(self):
        if not math.isfinite(self.coeff) or self.coeff == 0.0:
            raise ValueError("term coefficient must be finite and nonzero")

    @classmethod
    def from_label(cls, coeff: float, label: str) -> "PauliTerm":
        return cls(coeff, PauliString.from_label(label))

    @property
    def sign(self) -> float:
        return 1.0 if self.coeff > 0 else -1.0

    @property
    def abs_coeff(self) -> float:
        return abs(self.coeff)

    @property
    def n_sites(self) -> int:
        return self.string.n_sites


def terms_commute(a: PauliTerm, b: PauliTerm) -> bool:
    """True iff the underlying strings commute (then so do the shifted terms)."""
    return strings_commute(a.string, b.string)


@dataclass(frozen=True)
class CommutingShift:
    """Per-term shift |h_b| * identity; valid only for mutually commuting terms."""

    @property
    def scale(self) -> float:
        return 1.0

    label = "commuting"


@dataclass(frozen=True)
class GeneralShift:
    """Per-term shift 2M |h_b| * identity, M = expansion cutoff baked into weights."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("general shift needs cutoff M >= 1")

    @property
    def scale(self) -> float:
        return 2.0 * self.m

    @property
    def label(self) -> str:
        return f"general {self.m}"


ShiftMode = Union[CommutingShift, GeneralShift]


@dataclass(frozen=True)
class Hamiltonian:
    """Weighted Pauli-string decomposition plus its positivity shift.

    The stored terms are the *unshifted* coefficients h_b; shifted operators
    are h_b * string + scale * |h_b| * identity with scale fixed by
    ``shift_mode``.  Sign conventions (e.g. absorbing an overall minus sign)
    are the responsibility of the model builders.
    """

    terms: tuple[PauliTerm, ...]
    n_sites: int
    shift_mode: ShiftMode = field(default_factory=CommutingShift)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if t.n_sites != self.n_sites:
                raise ValueError("term length differs from n_sites")
        if isinstance(self.shift_mode, CommutingShift):
            for i, a in enumerate(self.terms):
                for b in self.terms[i + 1 :]:
                    if not terms_commute(a, b):
                        raise ValueError(
                            "CommutingShift requires mutually commuting terms; "
                            f"{a.string} and {b.string} anticommute"
                        )

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    @property
    def k(self) -> float:
        """Total constant added to the Hamiltonian by the shift."""
        return self.shift_mode.scale * sum(t.abs_coeff for t in self.terms)

    def term(self, index: int) -> PauliTerm:
        return self.terms[index]


def decompose_xx_chain(n_sites: int, coupling: float, periodic: bool) -> Hamiltonian:
    """XX spin chain as an SSE-ready Hamiltonian, one term per bond.

    The physical model is H' = + J sum_b sx sx (J > 0); the expansion works
    with H = -H', so each stored term is -J * sx sx and the commuting shift
    makes the shifted bond operator J * (1 - sx sx), positive semidefinite.
    """
    if n_sites < 2:
        raise ValueError("chain needs at least 2 sites")
    if coupling <= 0:
        raise ValueError("coupling must be positive")
    bonds = [(j, j + 1) for j in range(n_sites - 1)]
    if periodic and n_sites > 2:
        bonds.append((n_sites - 1, 0))
    terms = []
    for a, b in bonds:
        string = PauliString(n_sites, (1 << a) | (1 << b), 0)
        terms.append(PauliTerm(-coupling, string))
    return Hamiltonian(tuple(terms), n_sites, CommutingShift())


def string_matrix(string: PauliString) -> np.ndarray:
    """Dense matrix of a Pauli string, site 0 most significant."""
    if string.n_sites > DENSE_SITE_BUDGET:
        raise ValueError(f"dense budget is {DENSE_SITE_BUDGET} sites")
    out = np.ones((1, 1), dtype=complex)
    for letter in string.label:
        out = np.kron(out, SINGLE_QUBIT_MATRICES[letter])
    return out


def dense_matrix(
    obj: Union[Hamiltonian, PauliTerm],
    shifted: bool = False,
    shift_scale: float | None = None,
) -> np.ndarray:
    """Dense matrix of a term or a full Hamiltonian.

    With ``shifted`` each term picks up its identity shift: scale * |h_b|,
    where scale defaults to 1 for a bare term and to the Hamiltonian's own
    shift mode otherwise.
    """
    if isinstance(obj, PauliTerm):
        scale = 1.0 if shift_scale is None else shift_scale
        mat = obj.coeff * string_matrix(obj.string)
        if shifted:
            mat = mat + scale * obj.abs_coeff * np.eye(mat.shape[0])
        return mat
    if obj.n_sites > DENSE_SITE_BUDGET:
        raise ValueError(f"dense budget is {DENSE_SITE_BUDGET} sites")
    scale = obj.shift_mode.scale if shift_scale is None else shift_scale
    dim = 2**obj.n_sites
    out = np.zeros((dim, dim), dtype=complex)
    for t in obj.terms:
        out += dense_matrix(t, shifted=shifted, shift_scale=scale)
    return out


def physical_matrix(h: Hamiltonian) -> np.ndarray:
    """Dense matrix of the physical Hamiltonian H' = -sum_b h_b * string_b."""
    return -dense_matrix(h, shifted=False)


def hamiltonian_to_text(h: Hamiltonian) -> str:
    """Serialize to the flat key/value document described in the README."""
    lines = [f"n_sites = {h.n_sites}", f"shift_mode = {h.shift_mode.label}"]
    for t in h.terms:
        lines.append(f"term = {t.coeff!r} {t.string.label}")
    return "\n".join(lines) + "\n"


def hamiltonian_from_text(text: str) -> Hamiltonian:
    """Parse the serialization produced by :func:`hamiltonian_to_text`."""
    n_sites = None
    shift_mode: ShiftMode | None = None
    raw_terms: list[tuple[float, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "n_sites":
            n_sites = int(value)
        elif key == "shift_mode":
            parts = value.split()
            if parts[0] == "commuting" and len(parts) == 1:
                shift_mode = CommutingShift()
            elif parts[0] == "general" and len(parts) == 2:
                shift_mode = GeneralShift(int(parts[1]))
            else:
                raise ValueError(f"line {lineno}: bad shift_mode {value!r}")
        elif key == "term":
            parts = value.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: term wants '<coeff> <string>'")
            raw_terms.append((float(parts[0]), parts[1], lineno))
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    if n_sites is None:
        raise ValueError("missing n_sites")
    if shift_mode is None:
        raise ValueError("missing shift_mode")
    terms = []
    for coeff, label, lineno in raw_terms:
        if len(label) != n_sites:
            raise ValueError(f"line {lineno}: string length != n_sites")
        terms.append(PauliTerm.from_label(coeff, label))
    return Hamiltonian(tuple(terms), n_sites, shift_mode)
