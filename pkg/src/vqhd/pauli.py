"""Pauli-string algebra and construction of the benchmark spin-chain Hamiltonians.

A Hamiltonian is stored as a list of weighted Pauli strings.  Two randomized
benchmark families are provided on a periodic chain of ``n`` sites:

* ``generate_r2l``  -- every nearest-neighbor bond carries all 16 two-site
  Pauli products (identity included) with random coefficients rescaled so
  that the coefficients sum to ``16 n``.
* ``generate_rth``  -- spin-1/2 Heisenberg bonds (``S.S``, i.e. coefficient
  1/4 on XX, YY, ZZ) plus a random longitudinal field rescaled so that the
  field coefficients sum to ``n``.

Term counts are part of the contract: 16 terms for ``n = 2`` and ``16 n`` for
``n >= 3`` in the first family, ``3 B + n`` (``B`` bonds) in the second.
Terms coming from different bonds are kept as separate entries even when
their letter strings coincide, since downstream consumers step through the
sum term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from pathlib import Path

import numpy as np

PAULI_LETTERS = "IXYZ"

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}

MAX_DENSE_QUBITS = 12


@dataclass
class PauliString:
    """A real coefficient times a tensor product of single-qubit Paulis.

    ``letters`` has one character per qubit, drawn from ``IXYZ``; qubit 0 is
    the leftmost letter and the most significant tensor factor.
    """

    coefficient: float
    letters: str

    def __post_init__(self) -> None:
        bad = set(self.letters) - set(PAULI_LETTERS)
        if bad:
            raise ValueError(f"invalid Pauli letters {sorted(bad)} in {self.letters!r}")
        if not self.letters:
            raise ValueError("empty Pauli string")

    @property
    def qubit_count(self) -> int:
        return len(self.letters)

    @property
    def support(self) -> tuple[int, ...]:
        """Indices of the non-identity letters."""
        return tuple(i for i, ch in enumerate(self.letters) if ch != "I")

    def dense(self) -> np.ndarray:
        """Dense matrix of the string (qubit 0 = leftmost Kronecker factor)."""
        if self.qubit_count > MAX_DENSE_QUBITS:
            raise ValueError(
                f"dense expansion limited to {MAX_DENSE_QUBITS} qubits, got {self.qubit_count}"
            )
        mats = [PAULI_MATRICES[ch] for ch in self.letters]
        return self.coefficient * reduce(np.kron, mats)


@dataclass
class PauliSum:
    """A Hamiltonian or observable as a list of Pauli strings.

    The constructor keeps terms in the given order and does not merge them;
    the benchmark generators rely on per-bond terms staying separate.  Use
    :meth:`from_terms` to build a sum with duplicate letter strings merged.
    """

    terms: list[PauliString]
    qubit_count: int

    def __post_init__(self) -> None:
        if self.qubit_count < 1:
            raise ValueError("qubit_count must be positive")
        for t in self.terms:
            if t.qubit_count != self.qubit_count:
                raise ValueError(
                    f"term {t.letters!r} acts on {t.qubit_count} qubits, expected {self.qubit_count}"
                )

    @classmethod
    def from_terms(cls, terms: list[PauliString]) -> "PauliSum":
        """Build a sum with identical letter sequences merged (zeros dropped)."""
        if not terms:
            raise ValueError("cannot infer qubit count from an empty term list")
        q = terms[0].qubit_count
        acc: dict[str, float] = {}
        for t in terms:
            acc[t.letters] = acc.get(t.letters, 0.0) + t.coefficient
        merged = [PauliString(c, s) for s, c in acc.items() if c != 0.0]
        return cls(merged, q)

    @property
    def term_supports(self) -> list[tuple[int, ...]]:
        return [t.support for t in self.terms]

    @property
    def term_count(self) -> int:
        return len(self.terms)

    @property
    def max_locality(self) -> int:
        """Largest number of non-identity letters over all terms."""
        return max((len(s) for s in self.term_supports), default=0)


def chain_bonds(n: int) -> list[tuple[int, int]]:
    """Nearest-neighbor bonds of the periodic chain; one bond for n = 2."""
    if n < 2:
        raise ValueError(f"chain needs at least 2 sites, got {n}")
    if n == 2:
        return [(0, 1)]
    return [(i, (i + 1) % n) for i in range(n)]


def _embed(n: int, placed: dict[int, str]) -> str:
    letters = ["I"] * n
    for site, ch in placed.items():
        letters[site] = ch
    return "".join(letters)


def generate_r2l(n: int, seed: int) -> PauliSum:
    """Random 2-local chain Hamiltonian: all 16 Pauli products per bond.

    Coefficients are drawn uniformly on [0, 1) and rescaled so that their
    sum is exactly ``16 n``.  The identity-identity product is retained, so
    the sum carries a uniform energy shift.

    Args:
        n: number of lattice sites (>= 2).
        seed: RNG seed; identical seeds give identical coefficients.
    """
    bonds = chain_bonds(n)
    rng = np.random.default_rng(seed)
    coeffs = rng.random(16 * len(bonds))
    coeffs *= 16.0 * n / coeffs.sum()
    terms = []
    idx = 0
    for i, j in bonds:
        for a in PAULI_LETTERS:
            for b in PAULI_LETTERS:
                terms.append(PauliString(float(coeffs[idx]), _embed(n, {i: a, j: b})))
                idx += 1
    return PauliSum(terms, n)


def generate_rth(n: int, seed: int) -> PauliSum:
    """Heisenberg chain with a random longitudinal field.

    Bond terms use spin-1/2 operators S = sigma/2, so each bond contributes
    coefficient 1/4 on XX, YY and ZZ.  Field coefficients are uniform on
    [0, 1) rescaled so that they sum to exactly ``n``.
    """
    bonds = chain_bonds(n)
    rng = np.random.default_rng(seed)
    h = rng.random(n)
    h *= n / h.sum()
    terms = []
    for i, j in bonds:
        for ch in "XYZ":
            terms.append(PauliString(0.25, _embed(n, {i: ch, j: ch})))
    for i in range(n):
        terms.append(PauliString(float(h[i]), _embed(n, {i: "Z"})))
    return PauliSum(terms, n)


def to_dense(p: PauliSum) -> np.ndarray:
    """Kronecker-product expansion of a Pauli sum into a 2^q x 2^q matrix."""
    if p.qubit_count > MAX_DENSE_QUBITS:
        raise ValueError(
            f"dense expansion limited to {MAX_DENSE_QUBITS} qubits, got {p.qubit_count}"
        )
    dim = 2**p.qubit_count
    out = np.zeros((dim, dim), dtype=complex)
    for t in p.terms:
        out += t.dense()
    return out


def write_hamiltonian(p: PauliSum, path: str | Path, comment: str | None = None) -> None:
    """Write a sum in the text format: header ``qubits=<q>``, one ``<coeff> <letters>`` per line."""
    lines = [f"qubits={p.qubit_count}"]
    if comment:
        lines.append(f"# {comment}")
    for t in p.terms:
        lines.append(f"{t.coefficient!r} {t.letters}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_hamiltonian(path: str | Path) -> PauliSum:
    """Parse the text format written by :func:`write_hamiltonian`."""
    lines = [
        ln.strip()
        for ln in Path(path).read_text().splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines or not lines[0].startswith("qubits="):
        raise ValueError("missing 'qubits=<q>' header line")
    q = int(lines[0].split("=", 1)[1])
    terms = []
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise ValueError(f"expected '<coefficient> <letters>', got {ln!r}")
        terms.append(PauliString(float(fields[0]), fields[1]))
    return PauliSum(terms, q)
