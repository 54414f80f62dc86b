"""Wreath products Z^m wr B in base-function form.

An element is a finitely supported function from B to Z^m together with
a top element of B; multiplication translates the left factor's base
function by the right factor's top, (f.b)(x) = f(x b^-1), matching the
split-matrix product through the conversion maps below.  Iterating the
construction over Z^m gives W(m, n) = Z^m wr W(m, n-1) with
W(m, 0) = Z^m.

Level bookkeeping for the embedding of free solvable groups: S(m, 1) is
literally W(m, 0), so S(m, n) embeds into W(m, n-1) (and hence into
every higher level).  `embedding_codomain` returns that group.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any

from .errors import AmbientMismatchError
from .group_ring import RingElement
from .groups import AbelianGroup, Group, abelian_group
from .magnus import SplitMatrix


class WreathElement:
    """Element of Z^m wr B: finitely supported base function plus top.

    base maps the canonical key of a B-element to (element, vector);
    zero vectors are never stored.
    """

    __slots__ = ("product", "base", "top", "_key")

    def __init__(
        self,
        product: "WreathProduct",
        base: dict[str, tuple[Any, tuple[int, ...]]],
        top: Any,
    ):
        self.product = product
        self.base = base
        self.top = top
        self._key: str | None = None

    def key(self) -> str:
        if self._key is None:
            top_group = self.product.top_group
            inner = ",".join(
                f"{key}:{self.base[key][1]}" for key in sorted(self.base)
            )
            self._key = f"w[{top_group.key(self.top)}|{inner}]"
        return self._key

    def is_trivial(self) -> bool:
        return not self.base and self.product.top_group.is_identity(self.top)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return self.product.mul(self, other)

    def inv(self) -> "WreathElement":
        return self.product.inv(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WreathElement):
            return NotImplemented
        return self.product == other.product and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.product.label, self.key()))

    def __repr__(self) -> str:
        return f"<{self.product.label} {self.key()}>"

    def to_json(self) -> dict[str, Any]:
        top_group = self.product.top_group
        return {
            "level": self.product.level,
            "top": top_group.element_json(self.top),
            "base": [
                {
                    "at": top_group.element_json(self.base[key][0]),
                    "vec": list(self.base[key][1]),
                }
                for key in sorted(self.base)
            ],
        }


class WreathProduct(Group):
    """Z^m wr B for an arbitrary base group B (the `top_group`)."""

    def __init__(self, m: int, top_group: Group):
        if m < 1:
            raise ValueError("fiber rank m must be positive")
        self.m = m
        self.top_group = top_group
        self.ngens = m + top_group.ngens
        self.label = f"Z^{m} wr {top_group.label}"

    @property
    def level(self) -> int | None:
        """Nesting depth when iterated over Z^m; None for other tops."""
        if isinstance(self.top_group, AbelianGroup):
            return 1 if self.top_group.rank == self.m else None
        if isinstance(self.top_group, WreathProduct):
            inner = self.top_group.level
            if inner is not None and self.top_group.m == self.m:
                return inner + 1
        return None

    def identity(self) -> WreathElement:
        return WreathElement(self, {}, self.top_group.identity())

    def mul(self, a: WreathElement, b: WreathElement) -> WreathElement:
        self._check(a)
        self._check(b)
        top_group = self.top_group
        if top_group.is_identity(b.top):
            base = dict(a.base)
        else:
            base = {}
            for element, vec in a.base.values():
                shifted = top_group.mul(element, b.top)
                base[top_group.key(shifted)] = (shifted, vec)
        for key, (element, vec) in b.base.items():
            if key in base:
                total = tuple(x + y for x, y in zip(base[key][1], vec))
                if any(total):
                    base[key] = (element, total)
                else:
                    del base[key]
            else:
                base[key] = (element, vec)
        return WreathElement(self, base, top_group.mul(a.top, b.top))

    def inv(self, a: WreathElement) -> WreathElement:
        # One source of truth: inversion goes through the matrix form.
        self._check(a)
        return matrix_to_function(function_to_matrix(a).inv())

    def key(self, a: WreathElement) -> str:
        self._check(a)
        return a.key()

    def is_identity(self, a: WreathElement) -> bool:
        self._check(a)
        return a.is_trivial()

    def generator(self, i: int) -> WreathElement:
        """Generators 1..m are the base deltas at the identity; the rest
        lift the top group's generators."""
        if not 1 <= i <= self.ngens:
            raise ValueError(f"bad generator index {i} (have {self.ngens})")
        if i <= self.m:
            vec = tuple(1 if j == i - 1 else 0 for j in range(self.m))
            identity = self.top_group.identity()
            return WreathElement(
                self, {self.top_group.key(identity): (identity, vec)}, identity
            )
        return WreathElement(self, {}, self.top_group.generator(i - self.m))

    def show(self, a: WreathElement) -> str:
        return a.key()

    def element_json(self, a: WreathElement) -> dict[str, Any]:
        return a.to_json()

    def delta(self, at: Any, vec: tuple[int, ...]) -> WreathElement:
        """Base-only element supported at a single point."""
        if len(vec) != self.m:
            raise ValueError(f"expected vector of length {self.m}")
        if not any(vec):
            return self.identity()
        return WreathElement(
            self,
            {self.top_group.key(at): (at, tuple(vec))},
            self.top_group.identity(),
        )

    def _check(self, a: WreathElement) -> None:
        if not isinstance(a, WreathElement) or a.product != self:
            label = getattr(getattr(a, "product", None), "label", type(a).__name__)
            raise AmbientMismatchError(
                f"ambient mismatch: element of {label} used in {self.label}"
            )


@lru_cache(maxsize=None)
def iterated_wreath(m: int, n: int) -> Group:
    """W(m, n): Z^m for n = 0, else Z^m wr W(m, n-1)."""
    if n < 0:
        raise ValueError("level must be non-negative")
    if n == 0:
        return abelian_group(m)
    return WreathProduct(m, iterated_wreath(m, n - 1))


def matrix_to_function(p: SplitMatrix) -> WreathElement:
    """Read a split matrix as a wreath element over the same base group.

    The free module row (d_1, ..., d_m) over ZB is exactly a finitely
    supported function B -> Z^m: the i-th basis row t_i corresponds to
    the delta at the identity with value e_i.
    """
    base_group = p.base
    m = len(p.coords)
    product = WreathProduct(m, base_group)
    collected: dict[str, tuple[Any, list[int]]] = {}
    for slot, d in enumerate(p.coords):
        for key, (element, coeff) in d.support.items():
            if key not in collected:
                collected[key] = (element, [0] * m)
            collected[key][1][slot] += coeff
    base = {
        key: (element, tuple(vec))
        for key, (element, vec) in collected.items()
        if any(vec)
    }
    return WreathElement(product, base, p.top)


def function_to_matrix(w: WreathElement) -> SplitMatrix:
    """Inverse of matrix_to_function."""
    base_group = w.product.top_group
    coords = []
    for slot in range(w.product.m):
        terms = [
            (element, vec[slot])
            for element, vec in w.base.values()
            if vec[slot]
        ]
        coords.append(RingElement.from_terms(base_group, terms))
    return SplitMatrix(base_group, w.top, coords)


def embedding_codomain(m: int, n: int) -> Group:
    """Where S(m, n) lands: W(m, n-1), with S(m, 1) = W(m, 0) on the nose."""
    return iterated_wreath(m, max(n - 1, 0))


def embed_free_solvable(e: Any) -> Any:
    """Injective homomorphism S(m, n) -> W(m, n-1).

    Class 0 and 1 map to exponent vectors; for n >= 2 the split matrix
    is converted to function form level by level, pushing support keys
    through the embedding of the base group.
    """
    m, n = e.m, e.n
    if n == 0:
        return abelian_group(m).identity()
    if n == 1:
        return tuple(e.body)
    codomain = iterated_wreath(m, n - 1)
    assert isinstance(codomain, WreathProduct)
    top_group = codomain.top_group
    matrix = e.body
    base: dict[str, tuple[Any, tuple[int, ...]]] = {}
    as_function = matrix_to_function(matrix)
    for element, vec in as_function.base.values():
        image = embed_free_solvable(element)
        key = top_group.key(image)
        if key in base:
            total = tuple(x + y for x, y in zip(base[key][1], vec))
            if any(total):
                base[key] = (image, total)
            else:
                del base[key]
        else:
            base[key] = (image, vec)
    return WreathElement(codomain, base, embed_free_solvable(matrix.top))
