"""Closed forms for the complete-graph (all-to-all) algebra.

Everything all-to-all lives in type coordinates: the symmetric group on
the qubits acts on Pauli strings, and an orbit is fixed by the triple
(p, q, r) counting X, Y and Z tensor factors (the rest identity).  A
``SymOrbitSum`` is a sparse vector over those triples; expanding one
back to Pauli strings assigns unit weight to every placement.

The two circuit generators act on type coordinates by the closed-form
adjoint maps ``ad_field`` (the X orbit, preserving p and q+r) and
``ad_cut`` (the all-pairs ZZ orbit), shared with the closure engine.

``kn_basis`` and ``kn_ideal_basis`` build explicit bases of the closure
and of its commutator ideal out of index families of triples plus
adjoint images of some of them; ``fact_suite`` re-derives the membership
statements behind those constructions directly against a computed
closure span.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .closure import (
    DlaReport,
    LinearLedger,
    ad_cut_type,
    ad_field_type,
    generate_dla_orbit_compressed,
)
from .paulis import PauliString, PauliVector

EXPANSION_VERTEX_CAP = 8

DECOMPOSITION_CONJECTURE = (
    "the commutator ideal may decompose as a direct sum of su(floor((j+1)/2)+1)"
    " blocks; unverified"
)


class SymOrbitSum:
    """Sparse sum of symmetric-group orbits, keyed by (p, q, r)."""

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: dict | None = None):
        if n < 2:
            raise ValueError("type coordinates need n >= 2")
        self.n = n
        clean = {}
        for key, c in (coeffs or {}).items():
            p, q, r = key
            if p < 0 or q < 0 or r < 0 or p + q + r > n:
                raise ValueError(f"type {key} out of range for n={n}")
            if c != 0:
                clean[key] = c
        self._coeffs = clean

    @classmethod
    def zero(cls, n: int) -> "SymOrbitSum":
        return cls(n, {})

    def terms(self) -> list:
        return sorted(self._coeffs.items())

    def coeff(self, p: int, q: int, r: int):
        return self._coeffs.get((p, q, r), 0)

    def to_dict(self) -> dict:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def max_abs(self) -> float:
        return max((abs(c) for c in self._coeffs.values()), default=0)

    def __add__(self, other: "SymOrbitSum") -> "SymOrbitSum":
        if self.n != other.n:
            raise ValueError("mismatched qubit counts")
        acc = dict(self._coeffs)
        for key, c in other._coeffs.items():
            s = acc.get(key, 0) + c
            if s == 0:
                acc.pop(key, None)
            else:
                acc[key] = s
        return SymOrbitSum(self.n, acc)

    def __neg__(self) -> "SymOrbitSum":
        return SymOrbitSum(self.n, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "SymOrbitSum") -> "SymOrbitSum":
        return self + (-other)

    def scaled(self, factor) -> "SymOrbitSum":
        if factor == 0:
            return SymOrbitSum.zero(self.n)
        return SymOrbitSum(
            self.n, {k: factor * c for k, c in self._coeffs.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymOrbitSum)
            and self.n == other.n
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"SymOrbitSum(n={self.n}, 0)"
        body = " + ".join(
            f"{c!r}*{key}" for key, c in self.terms()
        )
        return f"SymOrbitSum(n={self.n}, {body})"

    def expand(self) -> PauliVector:
        """All placements of each triple, unit weight per string.

        Exponential in n; capped at EXPANSION_VERTEX_CAP vertices.
        """
        n = self.n
        if n > EXPANSION_VERTEX_CAP:
            raise ValueError(
                f"type expansion capped at n={EXPANSION_VERTEX_CAP}"
            )
        acc: dict[PauliString, object] = {}
        for (p, q, r), c in self.terms():
            for s in _type_strings(n, p, q, r):
                tot = acc.get(s, 0) + c
                if tot == 0:
                    acc.pop(s, None)
                else:
                    acc[s] = tot
        return PauliVector(n, acc)


def _type_strings(n: int, p: int, q: int, r: int) -> list[PauliString]:
    out = []
    everyone = range(n)
    for xs in combinations(everyone, p):
        taken = set(xs)
        rest1 = [i for i in everyone if i not in taken]
        for ys in combinations(rest1, q):
            taken2 = taken | set(ys)
            rest2 = [i for i in rest1 if i not in taken2]
            for zs in combinations(rest2, r):
                x_mask = 0
                z_mask = 0
                for i in xs:
                    x_mask |= 1 << i
                for i in ys:
                    x_mask |= 1 << i
                    z_mask |= 1 << i
                for i in zs:
                    z_mask |= 1 << i
                out.append(PauliString(n, x_mask, z_mask))
    return out


def sym_term(n: int, p: int, q: int, r: int, coeff=1) -> SymOrbitSum:
    return SymOrbitSum(n, {(p, q, r): coeff})


def ad_field(v: SymOrbitSum) -> SymOrbitSum:
    """Bracket with the single-X orbit, in type coordinates."""
    return SymOrbitSum(v.n, ad_field_type(v.n, v.to_dict()))


def ad_cut(v: SymOrbitSum) -> SymOrbitSum:
    """Bracket with the all-pairs ZZ orbit, in type coordinates."""
    return SymOrbitSum(v.n, ad_cut_type(v.n, v.to_dict()))


def _types_in_range(n: int) -> list[tuple[int, int, int]]:
    return [
        (p, q, r)
        for p in range(n + 1)
        for q in range(n + 1 - p)
        for r in range(n + 1 - p - q)
    ]


def kn_basis(n: int) -> list[SymOrbitSum]:
    """Explicit basis of the all-to-all closure in type coordinates.

    Built from families of bare triples plus adjoint images of two of the
    families; the even and odd vertex counts use different families.  The
    list length always equals the closed-form dimension.
    """
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    types = _types_in_range(n)
    out = []
    if n % 2 == 0:
        j1 = [
            t
            for t in types
            if t[0] % 2 == 0 and t[1] % 2 == 1 and t[2] % 2 == 1
            and t != (0, 1, 1)
        ]
        j2 = [
            t
            for t in types
            if t[1] == 1 and t[0] % 2 == 1 and t[2] % 2 == 1
        ]
        j3 = [
            t
            for t in types
            if t[0] % 2 == 1 and t[1] % 2 == 1 and t[2] % 2 == 1
            and t[1] >= 3
        ]
        j4 = [
            t
            for t in types
            if t[0] % 2 == 1 and t[1] % 2 == 0 and t[2] % 2 == 0
        ]
        j5 = [(0, 1, 1), (0, 2, 0), (0, 0, 2)]
        for t in j1 + j2 + j3 + j4 + j5:
            out.append(sym_term(n, *t))
        for t in j1:
            out.append(ad_field(sym_term(n, *t)))
        for t in j2:
            out.append(ad_cut(sym_term(n, *t)))
    else:
        q_bare = [t for t in types if t[1] % 2 == 1 and t[2] % 2 == 1]
        q_bare += [
            t
            for t in types
            if t[0] == 1 and t[1] % 2 == 0 and t[2] % 2 == 0
        ]
        q_bare += [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
        u1 = [
            t
            for t in types
            if t[1] % 2 == 1 and t[2] % 2 == 1 and t[0] != 1
            and t != (0, 1, 1)
        ]
        u2 = [
            t
            for t in types
            if t[1] == 1 and t[2] % 2 == 1 and t[0] >= 1
            and t != (1, 1, n - 2)
        ]
        for t in q_bare:
            out.append(sym_term(n, *t))
        for t in u1:
            out.append(ad_field(sym_term(n, *t)))
        for t in u2:
            out.append(ad_cut(sym_term(n, *t)))
    return out


def kn_ideal_basis(n: int) -> list[SymOrbitSum]:
    """Explicit spanning set of the commutator ideal, provably independent.

    The K family is every in-range triple with both q and r odd; the L
    family adjoins their images under ad_field together with the ad_cut
    images of the (p, 1, r) triples with r odd.
    """
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    types = _types_in_range(n)
    k_family = [t for t in types if t[1] % 2 == 1 and t[2] % 2 == 1]
    cut_sources = [t for t in types if t[1] == 1 and t[2] % 2 == 1]
    out = [sym_term(n, *t) for t in k_family]
    out += [ad_field(sym_term(n, *t)) for t in k_family]
    out += [ad_cut(sym_term(n, *t)) for t in cut_sources]
    return out


def _ideal_ledger(report: DlaReport) -> LinearLedger:
    led = LinearLedger(maintain_rref=False)
    for gd in report._gen_dicts:
        for b in report._basis_dicts:
            led.insert(report._bracket(gd, b))
    return led


def fact_suite(n: int, report: DlaReport | None = None) -> dict[str, bool]:
    """Re-derive the membership facts behind the explicit bases.

    Each entry tests a family of triples for membership in the computed
    closure span (or its commutator ideal) and reports whether every
    member passed; the two negative controls must stay outside.
    """
    if report is None:
        report = generate_dla_orbit_compressed("complete", n)
    span = report._ledger
    ideal = _ideal_ledger(report)
    types = _types_in_range(n)
    results = {}

    mixed = [t for t in types if t[1] % 2 == 1 and t[2] % 2 == 1]
    results["odd-yz-pairs-in-span"] = all(
        span.contains({t: 1}) for t in mixed
    )
    chains = [
        t for t in mixed if t[0] <= 1 and t[1] == 1
    ]  # (0,1,r) and (1,1,r), r odd
    results["y-and-xy-chains-in-ideal"] = all(
        ideal.contains({t: 1}) for t in chains
    )
    x_even_z = [t for t in types if t[0] == 1 and t[1] == 0 and t[2] % 2 == 0]
    results["x-with-even-z-in-span"] = all(
        span.contains({t: 1}) for t in x_even_z
    )
    if n % 2 == 0:
        fam = [
            t
            for t in types
            if t[0] % 2 == 1 and t[1] % 2 == 0 and t[2] % 2 == 0
        ]
        results["odd-x-even-rest-in-span"] = all(
            span.contains({t: 1}) for t in fam
        )
    else:
        fam = [
            t
            for t in types
            if t[0] == 1 and t[1] % 2 == 0 and t[2] % 2 == 0
        ]
        results["x-with-even-pairs-in-span"] = all(
            span.contains({t: 1}) for t in fam
        )
        results["squares-in-span"] = span.contains(
            {(2, 0, 0): 1}
        ) and span.contains({(0, 2, 0): 1})

    spanners = kn_ideal_basis(n)
    led = LinearLedger(maintain_rref=False)
    for v in spanners:
        led.insert(v.to_dict())
    results["ideal-spanners-independent"] = led.rank == len(spanners)
    results["ideal-spanners-inside-ideal"] = all(
        ideal.contains(v.to_dict()) for v in spanners
    )

    results["all-x-outside-span"] = not span.contains({(n, 0, 0): 1})
    results["identity-outside-span"] = not span.contains({(0, 0, 0): 1})
    return results
