"""Exact rank machinery: Smith normal form, Laurent matrix rank,
coset decomposition, and principal dimensions of metabelian subgroups.

Ranks over the commutative group rings Z[Z^k] are computed as ranks
over the fraction field of the Laurent polynomial ring, by fraction-free
(Bareiss) elimination: rows are first scaled by monomials to clear
negative exponents, and every division in the elimination is an exact
polynomial division.  Rank over noncommutative group rings (class >= 3
quotients) is out of reach of this route and is not implemented.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .group_ring import RingElement
from .groups import abelian_exponents
from .magnus import restricted_module_generators
from .free_solvable import free_solvable_group, normalize
from .words import Word

# ---------------------------------------------------------------------------
# Laurent polynomials with rational coefficients


class LaurentPoly:
    """Sparse Laurent polynomial in k commuting variables over Q."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], Fraction]):
        self.nvars = nvars
        self.terms = terms

    @staticmethod
    def zero(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars, {})

    @staticmethod
    def const(nvars: int, value: Fraction | int) -> "LaurentPoly":
        value = Fraction(value)
        if value == 0:
            return LaurentPoly.zero(nvars)
        return LaurentPoly(nvars, {(0,) * nvars: value})

    @staticmethod
    def monomial(
        nvars: int, exps: Sequence[int], coeff: Fraction | int = 1
    ) -> "LaurentPoly":
        coeff = Fraction(coeff)
        exps = tuple(exps)
        if len(exps) != nvars:
            raise ValueError(f"expected {nvars} exponents, got {len(exps)}")
        if coeff == 0:
            return LaurentPoly.zero(nvars)
        return LaurentPoly(nvars, {exps: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._same(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = terms.get(exps, Fraction(0)) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return LaurentPoly(self.nvars, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(
            self.nvars, {exps: -coeff for exps, coeff in self.terms.items()}
        )

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._same(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                total = terms.get(exps, Fraction(0)) + c1 * c2
                if total:
                    terms[exps] = total
                else:
                    terms.pop(exps, None)
        return LaurentPoly(self.nvars, terms)

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial t^exps (a unit of the Laurent ring)."""
        exps = tuple(exps)
        if not any(exps):
            return self
        return LaurentPoly(
            self.nvars,
            {
                tuple(a + b for a, b in zip(e, exps)): c
                for e, c in self.terms.items()
            },
        )

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Leading term in graded-lexicographic order."""
        exps = max(self.terms, key=lambda e: (sum(e), e))
        return exps, self.terms[exps]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            coeff = self.terms[exps]
            mono = "*".join(
                f"t{i + 1}^{e}" if e != 1 else f"t{i + 1}"
                for i, e in enumerate(exps)
                if e
            )
            parts.append(f"{coeff}*{mono}" if mono else str(coeff))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {
                "exps": list(exps),
                "num": self.terms[exps].numerator,
                "den": self.terms[exps].denominator,
            }
            for exps in sorted(self.terms, key=lambda e: (sum(e), e))
        ]

    @staticmethod
    def from_json(nvars: int, data: list[dict[str, Any]]) -> "LaurentPoly":
        total = LaurentPoly.zero(nvars)
        for term in data:
            total = total + LaurentPoly.monomial(
                nvars, term["exps"], Fraction(term["num"], term.get("den", 1))
            )
        return total

    def _same(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"ambient mismatch: {self.nvars} vs {other.nvars} variables"
            )


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact division f / g of polynomials known to divide evenly."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    quotient = LaurentPoly.zero(f.nvars)
    g_exps, g_coeff = g.leading()
    remainder = f
    while not remainder.is_zero():
        r_exps, r_coeff = remainder.leading()
        step = LaurentPoly.monomial(
            f.nvars,
            tuple(a - b for a, b in zip(r_exps, g_exps)),
            r_coeff / g_coeff,
        )
        quotient = quotient + step
        remainder = remainder - step * g
    return quotient


def laurent_rank(matrix: Sequence[Sequence[LaurentPoly]]) -> int:
    """Rank over the fraction field of the Laurent ring.

    Fraction-free Bareiss elimination with deterministic pivoting: rows
    are normalized by monomial shifts to clear negative exponents, then
    eliminated column by column, dividing each step by the previous
    pivot (an exact polynomial division).
    """
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        shift = _clearing_shift(row)
        if shift is not None:
            for j in range(ncols):
                row[j] = row[j].shift(shift)
    rank = 0
    prev_pivot: LaurentPoly | None = None
    row_start = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(row_start, len(rows)):
            if not rows[i][col].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[row_start], rows[pivot_row] = rows[pivot_row], rows[row_start]
        pivot = rows[row_start][col]
        for i in range(row_start + 1, len(rows)):
            coef = rows[i][col]
            for j in range(ncols):
                if j == col:
                    continue
                value = pivot * rows[i][j] - coef * rows[row_start][j]
                if prev_pivot is not None and not value.is_zero():
                    value = exact_div(value, prev_pivot)
                rows[i][j] = value
            rows[i][col] = LaurentPoly.zero(pivot.nvars)
        prev_pivot = pivot
        row_start += 1
        rank += 1
        if row_start == len(rows):
            break
    return rank


def _clearing_shift(row: Sequence[LaurentPoly]) -> tuple[int, ...] | None:
    mins: list[int] | None = None
    for entry in row:
        for exps in entry.terms:
            if mins is None:
                mins = list(exps)
            else:
                mins = [min(a, b) for a, b in zip(mins, exps)]
    if mins is None:
        return None
    shift = tuple(-x if x < 0 else 0 for x in mins)
    return shift if any(shift) else None


# ---------------------------------------------------------------------------
# Smith normal form over Z


@dataclass
class SmithForm:
    """L * M * R = diag(factors) with L, R unimodular."""

    diagonal: list[int]
    left: list[list[int]]
    right: list[list[int]]
    rank: int

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)


def _identity_matrix(size: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def smith_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form with unimodular transforms, exact over Z."""
    a = [[int(x) for x in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    left = _identity_matrix(nrows)
    right = _identity_matrix(ncols)
    t = 0
    while t < min(nrows, ncols):
        pivot = _smallest_nonzero(a, t)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            left[t], left[pi] = left[pi], left[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in right:
                row[t], row[pj] = row[pj], row[t]
        while True:
            changed = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        _row_sub(a, i, t, q)
                        _row_sub(left, i, t, q)
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        left[t], left[i] = left[i], left[t]
                    changed = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        _col_sub(a, j, t, q)
                        _col_sub(right, j, t, q)
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        for row in right:
                            row[t], row[j] = row[j], row[t]
                        changed = True
            if not changed and not _has_residue(a, t):
                offender = _divisibility_offender(a, t)
                if offender is None:
                    break
                _row_add(a, t, offender, 1)
                _row_add(left, t, offender, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1
    diagonal = [a[i][i] for i in range(min(nrows, ncols))]
    rank = sum(1 for d in diagonal if d)
    return SmithForm(diagonal, left, right, rank)


def _smallest_nonzero(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    best_val = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if a[i][j] and (best_val is None or abs(a[i][j]) < best_val):
                best = (i, j)
                best_val = abs(a[i][j])
    return best


def _has_residue(a: list[list[int]], t: int) -> bool:
    return any(a[i][t] for i in range(t + 1, len(a))) or any(
        a[t][j] for j in range(t + 1, len(a[0]))
    )


def _divisibility_offender(a: list[list[int]], t: int) -> int | None:
    d = a[t][t]
    for i in range(t + 1, len(a)):
        if any(x % d for x in a[i][t + 1 :]):
            return i
    return None


def _row_sub(a: list[list[int]], i: int, t: int, q: int) -> None:
    a[i] = [x - q * y for x, y in zip(a[i], a[t])]


def _row_add(a: list[list[int]], i: int, t: int, q: int) -> None:
    a[i] = [x + q * y for x, y in zip(a[i], a[t])]


def _col_sub(a: list[list[int]], j: int, t: int, q: int) -> None:
    for row in a:
        row[j] -= q * row[t]


def smith_rank(matrix: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Rank over Q and the nonzero invariant factors of an integer matrix."""
    if not matrix or not matrix[0]:
        return 0, ()
    form = smith_form(matrix)
    return form.rank, form.invariant_factors


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    return [
        [sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a
    ]


def row_lattice_basis(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """An independent basis of the lattice spanned by the rows."""
    if not matrix or not matrix[0]:
        return []
    form = smith_form(matrix)
    reduced = matmul(form.left, matrix)
    return [reduced[i] for i in range(form.rank)]


class LatticeSolver:
    """Membership and coordinates for the row lattice of an independent basis."""

    def __init__(self, basis: Sequence[Sequence[int]], dim: int):
        self.basis = [list(row) for row in basis]
        self.dim = dim
        self.size = len(self.basis)
        if self.size:
            if any(len(row) != dim for row in self.basis):
                raise ValueError("basis rows have wrong length")
            form = smith_form(self.basis)
            if form.rank < self.size:
                raise ValueError("dependent sub-basis")
            self.form = form

    def fingerprint(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Coset invariant: equal fingerprints iff vectors differ by a
        lattice element."""
        if not self.size:
            return tuple(vector)
        moved = matmul([list(vector)], self.form.right)[0]
        out = []
        for j in range(self.dim):
            if j < self.size:
                out.append(moved[j] % self.form.diagonal[j])
            else:
                out.append(moved[j])
        return tuple(out)

    def coordinates(self, vector: Sequence[int]) -> list[int] | None:
        """c with c * basis = vector, or None if not in the lattice."""
        if not self.size:
            return [] if not any(vector) else None
        moved = matmul([list(vector)], self.form.right)[0]
        y = []
        for j in range(self.dim):
            if j < self.size:
                d = self.form.diagonal[j]
                if moved[j] % d:
                    return None
                y.append(moved[j] // d)
            elif moved[j]:
                return None
        return matmul([y], self.form.left)[0]


# ---------------------------------------------------------------------------
# Rank of module rows over a subring Z[A-bar] of Z[B], B free abelian


def coset_rank(
    rows: Sequence[Sequence[RingElement]], sub_basis: Sequence[Any]
) -> int:
    """Rank over Z[A-bar] of the module spanned by rows of a free ZB-module.

    B must be free abelian and A-bar is given by an independent set of
    B-elements (checked; raises on a dependent sub-basis).  Support keys
    are decomposed along the finitely many A-bar-cosets they occupy,
    producing a block matrix over the Laurent ring in the A-bar
    variables whose rank is the answer.
    """
    if not rows:
        return 0
    group = rows[0][0].group
    width = len(rows[0])
    for row in rows:
        if len(row) != width:
            raise ValueError("ragged module rows")
        for entry in row:
            if entry.group != group:
                raise ValueError("ambient mismatch: rows over different rings")
    dim = group.ngens
    basis_vectors = [abelian_exponents(group, b) for b in sub_basis]
    solver = LatticeSolver(basis_vectors, dim)
    nvars = len(basis_vectors)

    # Group every support key by its coset fingerprint; the coset
    # representative is the appearing key with minimal canonical key.
    cosets: dict[tuple[int, ...], list[tuple[str, tuple[int, ...]]]] = {}
    for row in rows:
        for entry in row:
            for key, (element, _) in entry.support.items():
                vec = abelian_exponents(group, element)
                cosets.setdefault(solver.fingerprint(vec), []).append((key, vec))
    reps: dict[tuple[int, ...], tuple[str, tuple[int, ...]]] = {
        fp: min(members) for fp, members in cosets.items()
    }

    columns = sorted(
        (slot, fp) for slot in range(width) for fp in reps
    )
    column_index = {col: i for i, col in enumerate(columns)}
    matrix: list[list[LaurentPoly]] = []
    for row in rows:
        out = [LaurentPoly.zero(nvars) for _ in columns]
        for slot, entry in enumerate(row):
            for element, coeff in entry.support.values():
                vec = abelian_exponents(group, element)
                fp = solver.fingerprint(vec)
                rep_vec = reps[fp][1]
                offset = solver.coordinates(
                    [a - b for a, b in zip(vec, rep_vec)]
                )
                assert offset is not None
                col = column_index[(slot, fp)]
                out[col] = out[col] + LaurentPoly.monomial(nvars, offset, coeff)
        matrix.append(out)
    return laurent_rank(matrix)


def ring_rows_to_laurent(
    rows: Sequence[Sequence[RingElement]],
) -> list[list[LaurentPoly]]:
    """Rows over Z[Z^k] as a Laurent matrix in the full k variables."""
    out = []
    for row in rows:
        laurent_row = []
        for entry in row:
            group = entry.group
            poly = LaurentPoly.zero(group.ngens)
            for element, coeff in entry.support.values():
                poly = poly + LaurentPoly.monomial(
                    group.ngens, abelian_exponents(group, element), coeff
                )
            laurent_row.append(poly)
        out.append(laurent_row)
    return out


# ---------------------------------------------------------------------------
# Principal dimensions


@dataclass(frozen=True)
class PrincipalDimension:
    """Tuple (r_1, ..., r_n) of module ranks of the principal-series factors."""

    values: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.values)) + ")"

    def to_json(self) -> list[int]:
        return list(self.values)


def lex_compare(a: PrincipalDimension, b: PrincipalDimension) -> int:
    """Left-lexicographic comparison: -1, 0, or 1."""
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} vs {b.length}")
    if a.values < b.values:
        return -1
    if a.values > b.values:
        return 1
    return 0


def principal_dimension_metabelian(
    generators: Sequence[Word], m: int
) -> PrincipalDimension:
    """Principal dimension (r_1, r_2) of the subgroup of S(m, 2) generated
    by the given words.

    r_1 is the rank of the generators' exponent matrix.  For non-abelian
    subgroups, r_2 is one less than the Z[A-bar]-rank of the module
    spanned by the generators' coordinate rows (the induced splitting's
    module contains the abelianization ideal as a rank-1 layer on top of
    the derived part).  Abelian subgroups get the length-1 answer (r_1).
    """
    if not generators:
        raise ValueError("generator list must be nonempty")
    group = free_solvable_group(m, 2)
    elements = [normalize(m, 2, w) for w in generators]
    base = free_solvable_group(m, 1)
    pairs = restricted_module_generators(list(generators), base)
    exponent_matrix = [list(abelian_exponents(base, top)) for _, top in pairs]
    r1, _ = smith_rank(exponent_matrix)
    if r1 == 0:
        raise ValueError("trivial image: generators die in the abelianization")
    abelian = all(
        group.commutator(a, b).is_trivial()
        for i, a in enumerate(elements)
        for b in elements[i + 1 :]
    )
    if abelian:
        return PrincipalDimension((r1,))
    basis_vectors = row_lattice_basis(exponent_matrix)
    sub_basis = [normalize(m, 1, _vector_word(vec)) for vec in basis_vectors]
    rows = [coords for coords, _ in pairs]
    module_rank = coset_rank(rows, sub_basis)
    return PrincipalDimension((r1, module_rank - 1))


def _vector_word(vector: Sequence[int]) -> Word:
    letters: list[int] = []
    for i, e in enumerate(vector, start=1):
        letters.extend([i if e > 0 else -i] * abs(e))
    return tuple(letters)


def closed_form_dimension(family: str, m: int, n: int) -> PrincipalDimension:
    """Known principal dimensions of the standard families.

    free_solvable: r(S(m, n)) = (m, m-1, ..., m-1) with n entries (the
    splitting module at each level is free of rank m, so each derived
    factor has rank m-1).  wreath: r(W(m, n)) = (m, ..., m) with n+1
    entries (each level contributes a free rank-m module).
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    if family in ("free_solvable", "free-solvable"):
        if n == 1:
            return PrincipalDimension((m,))
        return PrincipalDimension((m,) + (m - 1,) * (n - 1))
    if family == "wreath":
        return PrincipalDimension((m,) * (n + 1))
    raise ValueError(f"unknown family {family!r}")
