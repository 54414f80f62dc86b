"""Base-group interface used by the group ring and matrix layers.

A group object owns its element representation: elements are plain
immutable values (tuples, matrices, ...) and all operations go through
the group.  Every group provides a canonical key for each element - a
deterministic string such that two elements are equal in the group iff
their keys coincide.  Keys drive hashing, sorting, and serialization.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Iterable, Sequence

from .errors import AmbientMismatchError
from .words import Word


class Group:
    """Abstract group with canonical element keys.

    Subclasses must set ``label`` (a string identifying the ambient group;
    two group objects are interchangeable iff labels match) and ``ngens``,
    and implement ``identity``, ``mul``, ``inv``, ``key``, ``generator``,
    ``show``, and ``element_json``.
    """

    label: str
    ngens: int

    def identity(self) -> Any:
        raise NotImplementedError

    def mul(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def inv(self, a: Any) -> Any:
        raise NotImplementedError

    def key(self, a: Any) -> str:
        raise NotImplementedError

    def generator(self, i: int) -> Any:
        """Image of the i-th free generator, 1-based."""
        raise NotImplementedError

    def show(self, a: Any) -> str:
        return self.key(a)

    def element_json(self, a: Any) -> Any:
        raise NotImplementedError

    def equal(self, a: Any, b: Any) -> bool:
        return self.key(a) == self.key(b)

    def is_identity(self, a: Any) -> bool:
        return self.equal(a, self.identity())

    def pow(self, a: Any, k: int) -> Any:
        if k < 0:
            a = self.inv(a)
            k = -k
        result = self.identity()
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def conjugate(self, a: Any, b: Any) -> Any:
        """b^-1 a b."""
        return self.mul(self.mul(self.inv(b), a), b)

    def commutator(self, a: Any, b: Any) -> Any:
        """a^-1 b^-1 a b."""
        return self.mul(self.inv(self.mul(b, a)), self.mul(a, b))

    def generators(self) -> list[Any]:
        return [self.generator(i) for i in range(1, self.ngens + 1)]

    def evaluate_word(self, word: Word, images: Sequence[Any] | None = None) -> Any:
        """Image of a free word under x_i -> images[i-1] (default: generators)."""
        if images is None:
            images = self.generators()
        result = self.identity()
        for letter in word:
            index = abs(letter)
            if not 1 <= index <= len(images):
                raise ValueError(f"bad generator index {index} (have {len(images)})")
            g = images[index - 1]
            result = self.mul(result, g if letter > 0 else self.inv(g))
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.label == other.label

    def __hash__(self) -> int:
        return hash(self.label)

    def __repr__(self) -> str:
        return self.label


def require_same_group(a: Group, b: Group) -> None:
    if a != b:
        raise AmbientMismatchError(f"ambient mismatch: {a.label} vs {b.label}")


class AbelianGroup(Group):
    """Free abelian group Z^m; elements are integer m-tuples."""

    def __init__(self, rank: int):
        if rank < 0:
            raise ValueError("rank must be non-negative")
        self.rank = rank
        self.ngens = rank
        self.label = f"Z^{rank}"

    def identity(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(-x for x in a)

    def key(self, a: tuple[int, ...]) -> str:
        return "(" + ",".join(map(str, a)) + ")"

    def generator(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.rank:
            raise ValueError(f"bad generator index {i} (have {self.rank})")
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def show(self, a: tuple[int, ...]) -> str:
        parts = []
        for j, e in enumerate(a):
            if e == 1:
                parts.append(f"b{j + 1}")
            elif e != 0:
                parts.append(f"b{j + 1}^{e}")
        return "*".join(parts) if parts else "1"

    def element_json(self, a: tuple[int, ...]) -> list[int]:
        return list(a)

    def element(self, exponents: Iterable[int]) -> tuple[int, ...]:
        vec = tuple(int(x) for x in exponents)
        if len(vec) != self.rank:
            raise ValueError(f"expected {self.rank} exponents, got {len(vec)}")
        return vec


@lru_cache(maxsize=None)
def abelian_group(rank: int) -> AbelianGroup:
    return AbelianGroup(rank)


def abelian_exponents(group: Group, element: Any) -> tuple[int, ...]:
    """Exponent vector of an element of a free abelian base group.

    Accepts plain Z^m groups and class-1 free solvable groups (whose
    elements wrap an exponent vector).
    """
    if isinstance(group, AbelianGroup):
        return tuple(element)
    body = getattr(element, "body", None)
    if getattr(element, "n", None) == 1 and body is not None:
        return tuple(body)
    raise ValueError(f"{group.label} is not a free abelian base group")
