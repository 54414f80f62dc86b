"""Free-group words and the shared input grammar.

A word over m generators is a tuple of nonzero ints: +i stands for the
generator x_i, -i for its inverse (1-based indices).  The text grammar
accepts `x3` / `X3` for a generator and its inverse, `$3` for a variable
(mixed words only), juxtaposition for products, and the sugar

    [u,v]   ->  u^-1 v^-1 u v          (commutator)
    u^v     ->  v^-1 u v               (conjugation)
    u^k     ->  k-fold power, k an integer (possibly negative)
    ( ... ) and { ... }                (grouping)

Sugar is expanded during parsing, so every parse yields a flat letter
sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import WordSyntaxError

Word = tuple[int, ...]


@dataclass(frozen=True)
class VarLetter:
    """A variable occurrence in a mixed word: x_index^sign with sign = +-1."""

    index: int
    sign: int


Letter = Union[int, VarLetter]


def free_reduce(word: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until the word is reduced."""
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert(word: Iterable[int]) -> Word:
    return tuple(-letter for letter in reversed(tuple(word)))


def concat(*words: Iterable[int]) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def conjugate(u: Iterable[int], v: Iterable[int]) -> Word:
    """v^-1 u v."""
    v = tuple(v)
    return concat(invert(v), u, v)


def commutator(u: Iterable[int], v: Iterable[int]) -> Word:
    """u^-1 v^-1 u v."""
    u, v = tuple(u), tuple(v)
    return concat(invert(u), invert(v), u, v)


def power(word: Iterable[int], k: int) -> Word:
    word = tuple(word)
    if k < 0:
        word = invert(word)
        k = -k
    return word * k


def max_generator(word: Iterable[int]) -> int:
    return max((abs(letter) for letter in word), default=0)


def word_to_str(word: Iterable[int]) -> str:
    parts = []
    for letter in word:
        parts.append(f"x{letter}" if letter > 0 else f"X{-letter}")
    return " ".join(parts)


_TOKEN = re.compile(
    r"(?P<gen>[xX][0-9]+)|(?P<var>\$[0-9]+)|(?P<int>-?[0-9]+)"
    r"|(?P<punct>[\[\](){},^])|(?P<ws>\s+)|(?P<bad>.)"
)

_CLOSER = {"(": ")", "{": "}"}


class _Parser:
    def __init__(self, text: str, allow_vars: bool, ngens: int | None, line: int):
        self.allow_vars = allow_vars
        self.ngens = ngens
        self.line = line
        self.tokens: list[tuple[str, str, int]] = []
        for match in _TOKEN.finditer(text):
            kind = match.lastgroup
            if kind == "ws":
                continue
            if kind == "bad":
                raise WordSyntaxError(
                    f"unexpected character {match.group()!r}", line, match.start() + 1
                )
            self.tokens.append((kind, match.group(), match.start() + 1))
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise WordSyntaxError("unexpected end of input", self.line, self.end_col())
        self.pos += 1
        return tok

    def end_col(self) -> int:
        if self.tokens:
            kind, text, col = self.tokens[-1]
            return col + len(text)
        return 1

    def parse(self) -> tuple[Letter, ...]:
        items = self.sequence(stop=set())
        tok = self.peek()
        if tok is not None:
            raise WordSyntaxError(f"unexpected {tok[1]!r}", self.line, tok[2])
        return items

    def sequence(self, stop: set[str]) -> tuple[Letter, ...]:
        items: list[Letter] = []
        while True:
            tok = self.peek()
            if tok is None or (tok[0] == "punct" and tok[1] in stop):
                return tuple(items)
            items.extend(self.term())

    def term(self) -> tuple[Letter, ...]:
        base = self.atom()
        while True:
            tok = self.peek()
            if tok is None or tok[1] != "^":
                return base
            self.next()
            nxt = self.peek()
            if nxt is None:
                raise WordSyntaxError("dangling '^'", self.line, self.end_col())
            if nxt[0] == "int":
                self.next()
                base = _power_items(base, int(nxt[1]))
            else:
                base = _conjugate_items(base, self.atom())

    def atom(self) -> tuple[Letter, ...]:
        kind, text, col = self.next()
        if kind == "gen":
            index = int(text[1:])
            if index < 1:
                raise WordSyntaxError("generator indices start at 1", self.line, col)
            if self.ngens is not None and index > self.ngens:
                raise WordSyntaxError(
                    f"generator index {index} out of range 1..{self.ngens}",
                    self.line,
                    col,
                )
            return (index if text[0] == "x" else -index,)
        if kind == "var":
            if not self.allow_vars:
                raise WordSyntaxError("variables are not allowed here", self.line, col)
            index = int(text[1:])
            if index < 1:
                raise WordSyntaxError("variable indices start at 1", self.line, col)
            return (VarLetter(index, 1),)
        if kind == "punct" and text in "({":
            inner = self.sequence(stop={_CLOSER[text]})
            closer = self.peek()
            if closer is None:
                raise WordSyntaxError(
                    f"missing {_CLOSER[text]!r}", self.line, self.end_col()
                )
            self.next()
            return inner
        if kind == "punct" and text == "[":
            u = self.sequence(stop={","})
            tok = self.peek()
            if tok is None:
                raise WordSyntaxError("missing ',' in commutator", self.line, self.end_col())
            self.next()
            v = self.sequence(stop={"]"})
            tok = self.peek()
            if tok is None:
                raise WordSyntaxError("missing ']'", self.line, self.end_col())
            self.next()
            return _commutator_items(u, v)
        raise WordSyntaxError(f"unexpected {text!r}", self.line, col)


def _invert_items(items: tuple[Letter, ...]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for item in reversed(items):
        if isinstance(item, VarLetter):
            out.append(VarLetter(item.index, -item.sign))
        else:
            out.append(-item)
    return tuple(out)


def _power_items(items: tuple[Letter, ...], k: int) -> tuple[Letter, ...]:
    if k < 0:
        items = _invert_items(items)
        k = -k
    return items * k


def _conjugate_items(u: tuple[Letter, ...], v: tuple[Letter, ...]) -> tuple[Letter, ...]:
    return _invert_items(v) + u + v


def _commutator_items(u: tuple[Letter, ...], v: tuple[Letter, ...]) -> tuple[Letter, ...]:
    return _invert_items(u) + _invert_items(v) + u + v


def parse_word(text: str, ngens: int | None = None, line: int = 1) -> Word:
    """Parse a constant word; variables are rejected."""
    items = _Parser(text, allow_vars=False, ngens=ngens, line=line).parse()
    return tuple(items)  # type: ignore[arg-type]


def parse_letters(
    text: str, ngens: int | None = None, line: int = 1
) -> tuple[Letter, ...]:
    """Parse a mixed word: a sequence of generator letters and variables."""
    return _Parser(text, allow_vars=True, ngens=ngens, line=line).parse()
