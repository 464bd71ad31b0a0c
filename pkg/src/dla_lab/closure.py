"""Lie-algebra closure: basis generation, center, and commutator ideal.

The closure loop starts from a maximal linearly independent subset B0 of
the given generators.  Round k brackets every element of B0 (outer loop,
given order) against every element added in round k-1 (inner loop,
insertion order) and inserts the independent results; the loop stops at
the first round that adds nothing.  The reported ``degree`` is the number
of productive rounds, so an abelian generator set has degree 0.  Bracketing
only against the generators is enough to span the closure: by the Jacobi
identity, [[A,B],C] lies in the span of brackets of A and B with earlier
elements, so deeper brackets never escape the generator-driven stream.

All rank decisions are exact.  ``LinearLedger`` keeps a sparse fully
reduced row-echelon form over the integers (fraction-free elimination,
rows rescaled to primitive vectors with positive pivot), with a reverse
index from keys to the rows containing them so newly found pivots are
eliminated from older rows immediately.  Keeping the form fully reduced
makes the stored rows canonical for the row space — two spans are equal
iff their ledgers hold identical rows — and keeps them sparse even when
the algebra is nearly the whole ambient space.

The same engine runs in three coordinate systems:

* raw Pauli coordinates (keys are packed ``(x_mask << n) | z_mask`` ints);
* ring-orbit coordinates for cycle graphs (keys are the packed canonical
  representatives of dihedral orbits);
* type coordinates ``(p, q, r)`` for complete graphs, where only the two
  generators ever act, via their closed-form adjoint maps.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .paulis import PauliString, PauliVector, phase_exponent

DEFAULT_MEMORY_BUDGET = 10**8


class ResourceBudgetError(RuntimeError):
    """Raised when a computation would exceed the configured entry budget."""


def _to_int_row(vec) -> dict:
    """Copy a sparse vector, clearing Fractions by a common denominator."""
    denoms = [
        c.denominator
        for c in vec.values()
        if isinstance(c, Fraction) and c.denominator != 1
    ]
    if denoms:
        m = lcm(*denoms)
        out = {}
        for k, c in vec.items():
            v = int(c * m)
            if v:
                out[k] = v
        return out
    return {k: int(c) for k, c in vec.items() if c}


def _primitive(row: dict, pivot) -> None:
    """Divide out the content and make the pivot coefficient positive."""
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        for k in row:
            row[k] //= g
    if row[pivot] < 0:
        for k in row:
            row[k] = -row[k]


class LinearLedger:
    """Sparse exact-integer reduced row echelon form with rank queries.

    Rows are pairwise independent; inserting a dependent vector is a no-op
    reported by returning ``None``; ``rank`` equals the row count.  The
    pivot of a row is its smallest key under the global ordering.  With
    ``maintain_rref`` (the default) no stored row contains the pivot key of
    another, so ``rows`` read in pivot order are the canonical reduced
    echelon basis of the span and two ledgers agree iff their row spaces
    do.  Rank-only ledgers can turn that off: plain echelon gives the same
    rank and membership answers without the back-substitution traffic.
    """

    def __init__(
        self, memory_budget: int | None = None, maintain_rref: bool = True
    ):
        self.rows: list[dict] = []
        self.pivots: list = []
        self._pivot_row: dict = {}
        self._key_rows: dict = {}
        self.entry_count = 0
        self.memory_budget = memory_budget
        self.maintain_rref = maintain_rref

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _check_budget(self):
        if self.memory_budget is not None and self.entry_count > self.memory_budget:
            raise ResourceBudgetError(
                f"ledger holds {self.entry_count} entries, over the budget of "
                f"{self.memory_budget}"
            )

    def _forward_reduce(self, vec) -> dict:
        """Eliminate every existing pivot from a copy of vec (exact).

        Elimination multipliers fall back to Fractions when the pivot
        coefficient does not divide, so only the pivot row's keys are ever
        touched; the caller clears denominators once at the end.
        """
        w = _to_int_row(vec)
        if not w:
            return w
        heap = list(w)
        heapq.heapify(heap)
        done = set()
        pivot_row = self._pivot_row
        rows = self.rows
        while heap:
            k = heapq.heappop(heap)
            if k in done:
                continue
            done.add(k)
            c = w.get(k, 0)
            if c == 0:
                w.pop(k, None)
                continue
            rid = pivot_row.get(k)
            if rid is None:
                continue
            row = rows[rid]
            b = row[k]
            if isinstance(c, Fraction):
                m = c / b
            else:
                q, rem = divmod(c, b)
                m = q if rem == 0 else Fraction(c, b)
            for kk, cc in row.items():
                cur = w.get(kk, 0) - m * cc
                if cur == 0:
                    w.pop(kk, None)
                else:
                    if kk not in w and kk not in done:
                        heapq.heappush(heap, kk)
                    w[kk] = cur
        return w

    def reduce(self, vec) -> dict:
        """Residual of vec against the current rows (no insertion)."""
        return self._forward_reduce(vec)

    def contains(self, vec) -> bool:
        """Exact membership of vec in the current row space."""
        return not self._forward_reduce(vec)

    def insert(self, vec) -> dict | None:
        """Add vec to the span.

        Returns a snapshot of the stored (reduced, primitive) row, or None
        if vec was already in the span.
        """
        w = self._forward_reduce(vec)
        if not w:
            return None
        w = _to_int_row(w)
        pivot = min(w)
        _primitive(w, pivot)
        rid = len(self.rows)
        self.rows.append(w)
        self.pivots.append(pivot)
        self._pivot_row[pivot] = rid
        self.entry_count += len(w)
        self._check_budget()
        if self.maintain_rref:
            key_rows = self._key_rows
            for k in w:
                key_rows.setdefault(k, set()).add(rid)
            holders = [r for r in key_rows[pivot] if r != rid]
            for other in holders:
                self._eliminate_key(other, pivot, w)
        return dict(w)

    def _eliminate_key(self, rid: int, key, src: dict) -> None:
        """Zero out `key` in row rid using src (whose pivot is `key`)."""
        row = self.rows[rid]
        a = row[key]
        b = src[key]
        q, rem = divmod(a, b)
        m = q if rem == 0 else Fraction(a, b)
        new_row = dict(row)
        for kk, cc in src.items():
            cur = new_row.get(kk, 0) - m * cc
            if cur == 0:
                new_row.pop(kk, None)
            else:
                new_row[kk] = cur
        new_row = _to_int_row(new_row)
        _primitive(new_row, self.pivots[rid])
        key_rows = self._key_rows
        for kk in row:
            if kk not in new_row:
                key_rows[kk].discard(rid)
        for kk in new_row:
            if kk not in row:
                key_rows.setdefault(kk, set()).add(rid)
        self.entry_count += len(new_row) - len(row)
        self.rows[rid] = new_row
        self._check_budget()

    def canonical_rows(self) -> list[dict]:
        """Rows in pivot order; equal row spaces give equal lists."""
        if not self.maintain_rref:
            raise ValueError("canonical rows need a fully reduced ledger")
        order = sorted(range(len(self.rows)), key=lambda r: self.pivots[r])
        return [dict(self.rows[r]) for r in order]


def span_ledger(vectors, memory_budget: int | None = None) -> LinearLedger:
    """Ledger spanning the given sparse vectors."""
    led = LinearLedger(memory_budget)
    for v in vectors:
        led.insert(v)
    return led


def nullspace_combos(vectors: list[dict]) -> list[dict]:
    """Combinations c with sum_i c[i]*vectors[i] == 0, as {index: coeff}.

    Augmented elimination: each vector is lifted with a marker key that
    sorts after every coordinate key, so rows whose coordinate part
    vanished end up pivoting in marker space and read off a basis of the
    left null space.  Exact integers.
    """
    led = LinearLedger(maintain_rref=False)
    for i, v in enumerate(vectors):
        lifted = {(0, k): c for k, c in v.items()}
        lifted[(1, i)] = 1
        led.insert(lifted)
    combos = []
    for rid, piv in enumerate(led.pivots):
        if piv[0] == 1:
            combos.append({k[1]: c for k, c in led.rows[rid].items()})
    return combos


# ---------------------------------------------------------------------------
# coordinate systems


def pack_pauli(p: PauliString) -> int:
    return (p.x_mask << p.n) | p.z_mask


def unpack_pauli(n: int, key: int) -> PauliString:
    return PauliString(n, key >> n, key & ((1 << n) - 1))


def pauli_vector_to_dict(v: PauliVector) -> dict:
    return {pack_pauli(p): c for p, c in v.terms()}


def dict_to_pauli_vector(n: int, d: dict) -> PauliVector:
    return PauliVector(n, {unpack_pauli(n, k): c for k, c in d.items()})


def _pauli_bracket(n: int):
    mask = (1 << n) - 1

    def bracket(u: dict, v: dict) -> dict:
        acc: dict[int, object] = {}
        for ku, cu in u.items():
            x1 = ku >> n
            z1 = ku & mask
            for kv, cv in v.items():
                x2 = kv >> n
                z2 = kv & mask
                if ((x1 & z2).bit_count() + (z1 & x2).bit_count()) & 1 == 0:
                    continue
                e = phase_exponent(x1, z1, x2, z2)
                key = ((x1 ^ x2) << n) | (z1 ^ z2)
                s = acc.get(key, 0) + (2 if e == 3 else -2) * cu * cv
                if s == 0:
                    acc.pop(key, None)
                else:
                    acc[key] = s
        return acc

    return bracket


class _RingOrbitTools:
    """Dihedral orbits of packed Pauli keys for a ring of n qubits."""

    def __init__(self, n: int):
        self.n = n
        self.mask = (1 << n) - 1
        perms = []
        for s in range(n):
            perms.append(tuple((j + s) % n for j in range(n)))
            perms.append(tuple((s - j) % n for j in range(n)))
        self._perms = perms
        self._cache: dict[int, tuple[int, int, tuple[int, ...]]] = {}

    def _apply(self, perm, m: int) -> int:
        out = 0
        j = 0
        while m >> j:
            if (m >> j) & 1:
                out |= 1 << perm[j]
            j += 1
        return out

    def orbit(self, key: int):
        """(representative, size, members) of the orbit through key."""
        got = self._cache.get(key)
        if got is None:
            n = self.n
            x = key >> n
            z = key & self.mask
            members = set()
            for perm in self._perms:
                members.add((self._apply(perm, x) << n) | self._apply(perm, z))
            got = (min(members), len(members), tuple(sorted(members)))
            for m in members:
                self._cache[m] = got
        return got


def _ring_orbit_bracket(n: int, tools: _RingOrbitTools):
    """Bracket of two dihedral-invariant vectors in orbit coordinates.

    [S(O_a), S(O_b)] is invariant, so it is determined by bracketing one
    representative of O_a against the full expansion of O_b and averaging
    back: the coefficient on orbit O equals |O_a|/|O| times the sum of the
    raw product coefficients landing in O.  Exact integer output.
    """
    mask = tools.mask

    def bracket(u: dict, v: dict) -> dict:
        acc: dict[int, int] = {}
        for ka, ca in u.items():
            x1 = ka >> n
            z1 = ka & mask
            size_a = tools.orbit(ka)[1]
            for kb, cb in v.items():
                members = tools.orbit(kb)[2]
                wgt = ca * cb * size_a
                for km in members:
                    x2 = km >> n
                    z2 = km & mask
                    if ((x1 & z2).bit_count() + (z1 & x2).bit_count()) & 1 == 0:
                        continue
                    e = phase_exponent(x1, z1, x2, z2)
                    key = ((x1 ^ x2) << n) | (z1 ^ z2)
                    rep = tools.orbit(key)[0]
                    acc[rep] = acc.get(rep, 0) + (2 if e == 3 else -2) * wgt
        out = {}
        for rep, total in acc.items():
            if total == 0:
                continue
            size = tools.orbit(rep)[1]
            q, r = divmod(total, size)
            assert r == 0, "orbit bracket must stay integral"
            out[rep] = q
        return out

    return bracket


def ad_field_type(n: int, v: dict) -> dict:
    """Adjoint action of the transverse-field orbit on type coordinates."""
    out: dict[tuple[int, int, int], object] = {}

    def add(key, c):
        s = out.get(key, 0) + c
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s

    for (p, q, r), c in v.items():
        if r >= 1:
            add((p, q + 1, r - 1), 2 * (q + 1) * c)
        if q >= 1:
            add((p, q - 1, r + 1), -2 * (r + 1) * c)
    return out


def ad_cut_type(n: int, v: dict) -> dict:
    """Adjoint action of the all-pairs ZZ orbit on type coordinates."""
    out: dict[tuple[int, int, int], object] = {}

    def add(key, c):
        s = out.get(key, 0) + c
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s

    for (p, q, r), c in v.items():
        m = n - p - q - r
        if q >= 1 and r >= 1:
            add((p + 1, q - 1, r - 1), 2 * (m + 1) * (p + 1) * c)
        if q >= 1 and m >= 1:
            add((p + 1, q - 1, r + 1), 2 * (p + 1) * (r + 1) * c)
        if p >= 1 and r >= 1:
            add((p - 1, q + 1, r - 1), -2 * (m + 1) * (q + 1) * c)
        if p >= 1 and m >= 1:
            add((p - 1, q + 1, r + 1), -2 * (q + 1) * (r + 1) * c)
    return out


_SYM_GEN_A = {(1, 0, 0): 1}
_SYM_GEN_B = {(0, 0, 2): 1}


def _sym_orbit_bracket(n: int):
    """Bracket in (p, q, r) coordinates; only the two generators act."""

    def negate(d: dict) -> dict:
        return {k: -c for k, c in d.items()}

    def bracket(u: dict, v: dict) -> dict:
        if u == _SYM_GEN_A:
            return ad_field_type(n, v)
        if u == _SYM_GEN_B:
            return ad_cut_type(n, v)
        if v == _SYM_GEN_A:
            return negate(ad_field_type(n, u))
        if v == _SYM_GEN_B:
            return negate(ad_cut_type(n, u))
        raise NotImplementedError(
            "type-coordinate brackets are only defined against the two "
            "generators"
        )

    return bracket


# ---------------------------------------------------------------------------
# reports and the engine


@dataclass
class DlaReport:
    """Closure output: basis, dimension, degree, and bookkeeping.

    ``basis`` entries are PauliVectors for raw runs, ``{PauliString: int}``
    orbit-representative dicts for ring-orbit runs, and
    ``{(p, q, r): int}`` dicts for complete-graph type coordinates.
    ``generator_count`` is the number of independent generators actually
    used (the size of B0).
    """

    basis: list
    dimension: int
    degree: int
    generator_count: int
    n: int
    coords: str
    _gen_dicts: list = field(repr=False, compare=False, default=None)
    _basis_dicts: list = field(repr=False, compare=False, default=None)
    _bracket: object = field(repr=False, compare=False, default=None)
    _ledger: LinearLedger = field(repr=False, compare=False, default=None)


def _closure_engine(gen_dicts, bracket, memory_budget):
    ledger = LinearLedger(memory_budget)
    b0 = []
    snaps = []
    for gd in gen_dicts:
        snap = ledger.insert(gd)
        if snap is not None:
            b0.append(gd)
            snaps.append(snap)
    frontier = list(snaps)
    degree = 0
    round_no = 0
    while frontier:
        round_no += 1
        new = []
        try:
            for gd in b0:
                for f in frontier:
                    snap = ledger.insert(bracket(gd, f))
                    if snap is not None:
                        new.append(snap)
        except ResourceBudgetError as exc:
            raise ResourceBudgetError(
                f"{exc}; gave up in closure round {round_no} "
                f"(frontier size {len(frontier)})"
            ) from None
        if new:
            degree = round_no
            snaps.extend(new)
        frontier = new
    return ledger, snaps, degree, len(b0)


def generate_dla(
    generators: list[PauliVector],
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
) -> DlaReport:
    """Closure of skew-Hermitian Pauli vectors in raw Pauli coordinates."""
    if not generators:
        raise ValueError("at least one generator is required")
    n = generators[0].n
    for g in generators:
        if g.n != n:
            raise ValueError("generators must share a qubit count")
    gen_dicts = [pauli_vector_to_dict(g) for g in generators]
    bracket = _pauli_bracket(n)
    ledger, snaps, degree, used = _closure_engine(gen_dicts, bracket, memory_budget)
    basis = [dict_to_pauli_vector(n, s) for s in snaps]
    return DlaReport(
        basis=basis,
        dimension=ledger.rank,
        degree=degree,
        generator_count=used,
        n=n,
        coords="pauli",
        _gen_dicts=gen_dicts,
        _basis_dicts=snaps,
        _bracket=bracket,
        _ledger=ledger,
    )


def generate_dla_orbit_compressed(
    family: str,
    n: int,
    memory_budget: int | None = DEFAULT_MEMORY_BUDGET,
) -> DlaReport:
    """Closure in symmetry-orbit coordinates for the two named families."""
    if family == "cycle":
        if n < 3:
            raise ValueError("ring family needs n >= 3")
        tools = _RingOrbitTools(n)
        x0 = 1 << n  # X on qubit 0
        zz = 0b11  # Z on qubits 0, 1
        gen_dicts = [
            {tools.orbit(x0)[0]: 1},
            {tools.orbit(zz)[0]: 1},
        ]
        bracket = _ring_orbit_bracket(n, tools)
        coords = "cycle-orbit"
    elif family == "complete":
        if n < 2:
            raise ValueError("complete family needs n >= 2")
        gen_dicts = [dict(_SYM_GEN_A), dict(_SYM_GEN_B)]
        bracket = _sym_orbit_bracket(n)
        coords = "complete-orbit"
    else:
        raise ValueError(
            "orbit-compressed closure supports the 'cycle' and 'complete' "
            "families only"
        )
    ledger, snaps, degree, used = _closure_engine(gen_dicts, bracket, memory_budget)
    if coords == "cycle-orbit":
        basis = [
            {unpack_pauli(n, k): c for k, c in s.items()} for s in snaps
        ]
    else:
        basis = [dict(s) for s in snaps]
    return DlaReport(
        basis=basis,
        dimension=ledger.rank,
        degree=degree,
        generator_count=used,
        n=n,
        coords=coords,
        _gen_dicts=gen_dicts,
        _basis_dicts=snaps,
        _bracket=bracket,
        _ledger=ledger,
    )


def _resolve_gen_dicts(report: DlaReport, generators) -> list[dict]:
    if generators is None:
        return report._gen_dicts
    if report.coords == "pauli":
        return [
            pauli_vector_to_dict(g) if isinstance(g, PauliVector) else dict(g)
            for g in generators
        ]
    return [dict(g) for g in generators]


def _combine_basis(report: DlaReport, combo: dict) -> dict:
    acc: dict = {}
    for i, c in combo.items():
        for k, cc in report._basis_dicts[i].items():
            s = acc.get(k, 0) + c * cc
            if s == 0:
                acc.pop(k, None)
            else:
                acc[k] = s
    return acc


def _publish(report: DlaReport, d: dict):
    if report.coords == "pauli":
        return dict_to_pauli_vector(report.n, d)
    if report.coords == "cycle-orbit":
        return {unpack_pauli(report.n, k): c for k, c in d.items()}
    return dict(d)


def center(report: DlaReport, generators=None) -> list:
    """Basis of the center: elements of the span killed by every generator.

    An element commuting with all generators commutes with the whole
    closure (Jacobi identity), so the center is the null space of the
    stacked maps v -> [G_j, v] restricted to the basis span.  Exact.
    """
    gen_dicts = _resolve_gen_dicts(report, generators)
    bracket = report._bracket
    stacked = []
    for b in report._basis_dicts:
        w = {}
        for gi, gd in enumerate(gen_dicts):
            for k, c in bracket(gd, b).items():
                w[(gi, k)] = c
        stacked.append(w)
    combos = nullspace_combos(stacked)
    return [_publish(report, _combine_basis(report, combo)) for combo in combos]


def center_dimension(report: DlaReport, generators=None) -> int:
    """dim of the center via the rank of the stacked adjoint map."""
    gen_dicts = _resolve_gen_dicts(report, generators)
    bracket = report._bracket
    led = LinearLedger(maintain_rref=False)
    for b in report._basis_dicts:
        w = {}
        for gi, gd in enumerate(gen_dicts):
            for k, c in bracket(gd, b).items():
                w[(gi, k)] = c
        led.insert(w)
    return report.dimension - led.rank


def commutator_ideal(report: DlaReport, generators=None) -> list:
    """Independent spanning set of [g, g] = span{[G_j, b] : b in basis}.

    For a generated algebra this bracket stream spans the full ideal: by
    Jacobi induction any [u, v] with u, v in the closure reduces to brackets
    of generators with closure elements.  Asserts the exact splitting
    dim(center) + dim(ideal) == dim(g).
    """
    gen_dicts = _resolve_gen_dicts(report, generators)
    bracket = report._bracket
    led = LinearLedger(maintain_rref=False)
    out = []
    for gd in gen_dicts:
        for b in report._basis_dicts:
            img = bracket(gd, b)
            if led.insert(img) is not None:
                out.append(_publish(report, img))
    cdim = center_dimension(report, generators)
    assert cdim + led.rank == report.dimension, (
        "center and commutator ideal must split the algebra: "
        f"{cdim} + {led.rank} != {report.dimension}"
    )
    return out


def ideal_dimension(report: DlaReport, generators=None) -> int:
    """dim of [g, g] without materializing the spanning vectors."""
    gen_dicts = _resolve_gen_dicts(report, generators)
    bracket = report._bracket
    led = LinearLedger(maintain_rref=False)
    for gd in gen_dicts:
        for b in report._basis_dicts:
            led.insert(bracket(gd, b))
    return led.rank
