"""2x2 matrix splittings [[B, 0], [D, 1]] over a base group B.

A split matrix has a top entry in B and a coordinate row of m elements
of ZB (m = number of generators of B), written in the free module basis
t_1 .. t_m.  Generators map as x_i -> [[b_i, 0], [t_i, 1]], and the
right-module convention fixes the product rule

    [[b1,0],[d1,1]] * [[b2,0],[d2,1]] = [[b1*b2, 0], [d1*b2 + d2, 1]],

i.e. d(uv) = d(u)*v-bar + d(v).  The coordinate row of a word's image is
its vector of Fox derivatives evaluated in ZB; the inverse rule
d(u^-1) = -d(u)*u-bar^-1 is a consequence, not an axiom.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Sequence

from .errors import AmbientMismatchError
from .group_ring import RingElement
from .groups import Group, require_same_group
from .words import Word


class SplitMatrix:
    """Element of the split matrix group over a base group.

    The coordinate row may have any width; the splitting of a group
    presented on m generators uses width m = base.ngens, but wider or
    narrower free module rows multiply by the same rule.
    """

    __slots__ = ("base", "top", "coords", "_key")

    def __init__(self, base: Group, top: Any, coords: Sequence[RingElement]):
        self.base = base
        self.top = top
        self.coords = tuple(coords)
        self._key: str | None = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(base: Group, width: int | None = None) -> "SplitMatrix":
        if width is None:
            width = base.ngens
        return SplitMatrix(base, base.identity(), [RingElement.zero(base)] * width)

    @staticmethod
    def generator(base: Group, i: int) -> "SplitMatrix":
        """Image of the i-th free generator: top b_i, coordinate row t_i."""
        coords = [RingElement.zero(base)] * base.ngens
        coords[i - 1] = RingElement.one(base)
        return SplitMatrix(base, base.generator(i), coords)

    # -- group operations ----------------------------------------------

    def __mul__(self, other: "SplitMatrix") -> "SplitMatrix":
        require_same_group(self.base, other.base)
        if len(self.coords) != len(other.coords):
            raise AmbientMismatchError(
                "ambient mismatch: coordinate rows have different widths"
            )
        top = self.base.mul(self.top, other.top)
        coords = [
            d.translate(other.top) + e for d, e in zip(self.coords, other.coords)
        ]
        return SplitMatrix(self.base, top, coords)

    def inv(self) -> "SplitMatrix":
        top = self.base.inv(self.top)
        coords = [-(d.translate(top)) for d in self.coords]
        return SplitMatrix(self.base, top, coords)

    def is_identity(self) -> bool:
        return self.base.is_identity(self.top) and all(
            d.is_zero() for d in self.coords
        )

    # -- equality and serialization -------------------------------------

    def key(self) -> str:
        if self._key is None:
            coord_keys = ";".join(d.canonical_key() for d in self.coords)
            self._key = f"[{self.base.key(self.top)}|{coord_keys}]"
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SplitMatrix):
            return NotImplemented
        return self.base == other.base and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.base.label, self.key()))

    def __str__(self) -> str:
        coords = ", ".join(str(d) for d in self.coords)
        return f"[top={self.base.show(self.top)}; d=({coords})]"

    __repr__ = __str__

    def to_json(self) -> dict[str, Any]:
        return {
            "top": self.base.element_json(self.top),
            "coords": [d.to_json() for d in self.coords],
        }


@lru_cache(maxsize=4096)
def _letter_matrix(base: Group, letter: int) -> SplitMatrix:
    matrix = SplitMatrix.generator(base, abs(letter))
    return matrix if letter > 0 else matrix.inv()


def eval_word(word: Word, base: Group) -> SplitMatrix:
    """Image of a free word under the splitting homomorphism over `base`.

    Letters are processed left to right with incremental multiplication;
    the coordinate row of the result is the word's Fox derivative vector.
    """
    result = SplitMatrix.identity(base)
    for letter in word:
        if not 1 <= abs(letter) <= base.ngens:
            raise ValueError(
                f"bad generator index {abs(letter)} (base group has {base.ngens})"
            )
        result = result * _letter_matrix(base, letter)
    return result


def sigma(p: SplitMatrix) -> RingElement:
    """The module map sending the row sum_i t_i * d_i to sum_i (b_i - 1) * d_i.

    The factor (b_i - 1) multiplies on the left: the row lives in a right
    module, so right-linearity of t_i -> b_i - 1 puts the coordinate on
    the right.  (Both orders agree over commutative bases.)  For
    p = eval_word(w) the value is w-bar - 1 in ZB, so sigma detects
    membership of the row in the fundamental ideal's preimage.
    """
    base = p.base
    if len(p.coords) != base.ngens:
        raise ValueError("sigma needs one coordinate per base generator")
    total = RingElement.zero(base)
    for i, d in enumerate(p.coords, start=1):
        step = RingElement.monomial(base, base.generator(i)) - RingElement.one(base)
        total = total + step * d
    return total


def restricted_module_generators(
    generators: Sequence[Word], base: Group
) -> list[tuple[tuple[RingElement, ...], Any]]:
    """Coordinate rows and base images of a subgroup's generating words.

    For each generating word a_j returns (row d(a_j), top a_j-bar); the
    rows generate, over the subring Z[A-bar], the module of the induced
    splitting of the subgroup.
    """
    if not generators:
        raise ValueError("generator list must be nonempty")
    out = []
    for word in generators:
        image = eval_word(word, base)
        out.append((image.coords, image.top))
    return out
