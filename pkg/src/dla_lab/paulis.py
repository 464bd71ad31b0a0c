"""Exact arithmetic on n-qubit Pauli strings and skew-Hermitian Pauli sums.

Encoding
--------
A Pauli string is stored as a pair of bit masks ``(x_mask, z_mask)``:
bit ``j`` of ``x_mask`` is set iff qubit ``j`` carries ``X`` or ``Y``, and
bit ``j`` of ``z_mask`` iff it carries ``Z`` or ``Y``.  Qubit 0 is the
least significant bit.  Per qubit the encoding is

    (0, 0) -> I    (1, 0) -> X    (1, 1) -> Y    (0, 1) -> Z

and the operator represented by the masks is ``W(x, z) = i^{x.z} X^x Z^z``
with ``x.z`` the overlap popcount, so every ``W(x, z)`` is Hermitian.

Coefficient convention
----------------------
Algebra elements are kept skew-Hermitian: a :class:`PauliVector` maps each
string ``P`` to the *real* coefficient of ``i*P``.  With that convention
the commutator of two terms is again a real multiple of ``i*(product)``,
so Lie-algebra computations stay in exact integer/rational arithmetic;
the structure constants arising here are always even integers.

Display convention: qubit 0 is the leftmost character of a label.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_CHAR_OF_BITS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS_OF_CHAR = {c: b for b, c in _CHAR_OF_BITS.items()}


def phase_exponent(x1: int, z1: int, x2: int, z2: int) -> int:
    """Exponent e with W(x1,z1)·W(x2,z2) = i^e · W(x1^x2, z1^z2), mod 4."""
    x3 = x1 ^ x2
    z3 = z1 ^ z2
    e = (
        (x1 & z1).bit_count()
        + (x2 & z2).bit_count()
        + 2 * (z1 & x2).bit_count()
        - (x3 & z3).bit_count()
    )
    return e % 4


def anticommute(x1: int, z1: int, x2: int, z2: int) -> bool:
    """True iff the two Pauli strings anticommute (symplectic form is odd)."""
    return ((x1 & z2).bit_count() + (z1 & x2).bit_count()) % 2 == 1


@dataclass(frozen=True, slots=True)
class PauliString:
    """Bit-packed n-qubit Pauli word.

    Attributes
    ----------
    n : int
        Number of qubits (>= 1).
    x_mask, z_mask : int
        Symplectic masks; bits at positions >= n must be zero.
    """

    n: int
    x_mask: int
    z_mask: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one qubit")
        top = 1 << self.n
        if not (0 <= self.x_mask < top and 0 <= self.z_mask < top):
            raise ValueError("mask bits above position n-1 must be zero")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @classmethod
    def single(cls, n: int, j: int, kind: str) -> "PauliString":
        """The string with `kind` in {X, Y, Z} on qubit j and I elsewhere."""
        if not 0 <= j < n:
            raise ValueError(f"qubit index {j} out of range for n={n}")
        xb, zb = _BITS_OF_CHAR[kind]
        return cls(n, xb << j, zb << j)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse a label like "XIZY"; qubit 0 is the leftmost character."""
        x = z = 0
        for j, ch in enumerate(label):
            xb, zb = _BITS_OF_CHAR[ch]
            x |= xb << j
            z |= zb << j
        return cls(len(label), x, z)

    def label(self) -> str:
        return "".join(
            _CHAR_OF_BITS[((self.x_mask >> j) & 1, (self.z_mask >> j) & 1)]
            for j in range(self.n)
        )

    def key(self) -> tuple[int, int]:
        """Global ordering key: lexicographic on (x_mask, z_mask)."""
        return (self.x_mask, self.z_mask)

    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def __repr__(self):  # keep reprs short in test output
        return f"PauliString({self.label()!r})"


@dataclass(frozen=True, slots=True)
class PauliType:
    """Letter counts (n_I, n_X, n_Y, n_Z) of a Pauli string."""

    n_I: int
    n_X: int
    n_Y: int
    n_Z: int

    @property
    def yz_even(self) -> bool:
        return (self.n_Y + self.n_Z) % 2 == 0


def pauli_type(p: PauliString) -> PauliType:
    n_y = (p.x_mask & p.z_mask).bit_count()
    n_x = p.x_mask.bit_count() - n_y
    n_z = p.z_mask.bit_count() - n_y
    return PauliType(p.n - n_x - n_y - n_z, n_x, n_y, n_z)


def multiply(a: PauliString, b: PauliString) -> tuple[int, PauliString]:
    """Product a·b = i^e · c.  Returns (e mod 4, c)."""
    if a.n != b.n:
        raise ValueError(f"qubit counts differ: {a.n} != {b.n}")
    e = phase_exponent(a.x_mask, a.z_mask, b.x_mask, b.z_mask)
    return e, PauliString(a.n, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask)


def commutes(a: PauliString, b: PauliString) -> bool:
    if a.n != b.n:
        raise ValueError(f"qubit counts differ: {a.n} != {b.n}")
    return not anticommute(a.x_mask, a.z_mask, b.x_mask, b.z_mask)


class PauliVector:
    """Sparse real-coefficient vector over {i*P : P Pauli string}.

    The stored mapping is ``P -> c_P`` for the operator ``sum_P c_P (i P)``;
    coefficients are exact (int / Fraction) in all structural computations.
    Float coefficients are tolerated for the spectral routines that expand
    trigonometric basis elements, but nothing here ever mixes the two in
    one vector.  Instances are immutable by convention: all operations
    return new vectors.
    """

    __slots__ = ("n", "_entries")

    def __init__(self, n: int, entries: dict[PauliString, object] | None = None):
        self.n = n
        cleaned = {}
        if entries:
            for p, c in entries.items():
                if p.n != n:
                    raise ValueError("entry qubit count mismatch")
                if c == 0:
                    continue
                cleaned[p] = c
        self._entries = cleaned

    @classmethod
    def zero(cls, n: int) -> "PauliVector":
        return cls(n, {})

    @classmethod
    def single_term(cls, p: PauliString, coeff=1) -> "PauliVector":
        return cls(p.n, {p: coeff})

    @property
    def entries(self) -> dict[PauliString, object]:
        return dict(self._entries)

    def terms(self):
        return self._entries.items()

    def support(self):
        return self._entries.keys()

    def coeff(self, p: PauliString):
        return self._entries.get(p, 0)

    def is_zero(self) -> bool:
        return not self._entries

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return (
            isinstance(other, PauliVector)
            and self.n == other.n
            and self._entries == other._entries
        )

    def __add__(self, other: "PauliVector") -> "PauliVector":
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        out = dict(self._entries)
        for p, c in other._entries.items():
            s = out.get(p, 0) + c
            if s == 0:
                out.pop(p, None)
            else:
                out[p] = s
        v = PauliVector.__new__(PauliVector)
        v.n = self.n
        v._entries = out
        return v

    def __neg__(self) -> "PauliVector":
        return self.scaled(-1)

    def __sub__(self, other: "PauliVector") -> "PauliVector":
        return self + (-other)

    def scaled(self, factor) -> "PauliVector":
        v = PauliVector.__new__(PauliVector)
        v.n = self.n
        if factor == 0:
            v._entries = {}
        else:
            v._entries = {p: c * factor for p, c in self._entries.items()}
        return v

    def __repr__(self):
        if not self._entries:
            return f"PauliVector(n={self.n}, 0)"
        parts = [
            f"{c}*i{p.label()}"
            for p, c in sorted(self._entries.items(), key=lambda t: t[0].key())
        ]
        return "PauliVector(" + " + ".join(parts) + ")"


def commutator(a: PauliVector, b: PauliVector) -> PauliVector:
    """[a, b] for skew-Hermitian vectors; exact, closes within the type.

    For anticommuting strings P, Q with P·Q = i^e R the bracket of the
    terms is [iP, iQ] = -2 i^e R = (+2 if e == 3 else -2) * (i R).
    Commuting pairs contribute nothing.
    """
    if a.n != b.n:
        raise ValueError(f"qubit counts differ: {a.n} != {b.n}")
    acc: dict[tuple[int, int], object] = {}
    for p, cp in a._entries.items():
        x1, z1 = p.x_mask, p.z_mask
        for q, cq in b._entries.items():
            x2, z2 = q.x_mask, q.z_mask
            if ((x1 & z2).bit_count() + (z1 & x2).bit_count()) % 2 == 0:
                continue
            e = phase_exponent(x1, z1, x2, z2)
            key = (x1 ^ x2, z1 ^ z2)
            contrib = (2 if e == 3 else -2) * cp * cq
            s = acc.get(key, 0) + contrib
            if s == 0:
                acc.pop(key, None)
            else:
                acc[key] = s
    n = a.n
    v = PauliVector.__new__(PauliVector)
    v.n = n
    v._entries = {PauliString(n, x, z): c for (x, z), c in acc.items()}
    return v


def hs_inner(a: PauliVector, b: PauliVector):
    """Hilbert-Schmidt inner product tr(A^dag B) = 2^n * sum_P a_P b_P.

    Real, symmetric and positive definite on the skew-Hermitian vectors
    (tr((iP)^dag (iQ)) = tr(P Q) = 2^n delta_{PQ}).  The same coefficient
    formula also gives tr(A B) for two Hermitian coefficient vectors.
    """
    if a.n != b.n:
        raise ValueError(f"qubit counts differ: {a.n} != {b.n}")
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    total = 0
    for p, c in small._entries.items():
        d = big._entries.get(p)
        if d is not None:
            total += c * d
    return (1 << a.n) * total


def rationalize(value) -> Fraction:
    """Coerce an exact coefficient to Fraction (rejects floats)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {type(value).__name__}")
