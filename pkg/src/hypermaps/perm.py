"""Permutations of {1..n} and the transposition calculus.

Products are read right to left: ``(p * q)(x) == p(q(x))``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import GroundSetMismatch, ParseError, ValidationError

__all__ = [
    "Permutation",
    "Transposition",
    "parse_cycles",
    "compose",
    "inverse",
    "cycles",
    "cycle_count",
    "connects",
    "is_circular",
]

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(-?\d+)|(,))")


def _count_cycles(img: Sequence[int]) -> int:
    n = len(img)
    seen = bytearray(n + 1)
    count = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            x = img[x - 1]
    return count


class Permutation:
    """A bijection of {1..n}, stored as its image tuple.

    ``images[k]`` is the image of ``k + 1``.  Instances are immutable and
    hashable, so they can key dictionaries and live in sets.
    """

    __slots__ = ("_img",)

    def __init__(self, images: Iterable[int], *, check: bool = True):
        img = tuple(images)
        if check:
            n = len(img)
            seen = bytearray(n + 1)
            for v in img:
                if not isinstance(v, int) or v < 1 or v > n or seen[v]:
                    raise ValidationError(f"{img!r} is not a permutation of 1..{n}")
                seen[v] = 1
        self._img = img

    # construction --------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1), check=False)

    @classmethod
    def from_cycles(cls, cyc: Iterable[Sequence[int]], n: int) -> "Permutation":
        img = list(range(1, n + 1))
        seen = set()
        for c in cyc:
            for x in c:
                if x < 1 or x > n:
                    raise ParseError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ParseError(f"point {x} repeated")
                seen.add(x)
            for a, b in zip(c, list(c[1:]) + list(c[:1])):
                img[a - 1] = b
        return cls(img, check=False)

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        return parse_cycles(text, n)

    # basic protocol ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        return self._img

    def __call__(self, x: int) -> int:
        return self._img[x - 1]

    def __len__(self) -> int:
        return len(self._img)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __repr__(self) -> str:
        return f"Permutation.parse({self.format()!r}, {self.n})"

    def __str__(self) -> str:
        return self.format()

    # algebra -------------------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.n != self.n:
            raise GroundSetMismatch(f"cannot compose on {self.n} and {other.n} points")
        p = self._img
        return Permutation([p[q - 1] for q in other._img], check=False)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self._img, 1):
            inv[v - 1] = i
        return Permutation(inv, check=False)

    def swap_left(self, i: int, j: int) -> "Permutation":
        """Return ``(i,j) * self`` without building the transposition."""
        img = [j if v == i else i if v == j else v for v in self._img]
        return Permutation(img, check=False)

    def swap_right(self, i: int, j: int) -> "Permutation":
        """Return ``self * (i,j)``."""
        img = list(self._img)
        img[i - 1], img[j - 1] = img[j - 1], img[i - 1]
        return Permutation(img, check=False)

    # cycle structure -----------------------------------------------------

    def cycles(self, include_fixed: bool = True) -> list:
        """Canonical decomposition: each cycle starts at its minimum,
        cycles sorted by minimum."""
        img = self._img
        seen = bytearray(self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            c = []
            x = start
            while not seen[x]:
                seen[x] = 1
                c.append(x)
                x = img[x - 1]
            if include_fixed or len(c) > 1:
                out.append(tuple(c))
        return out

    def cycle_count(self) -> int:
        return _count_cycles(self._img)

    def cycle_of(self, x: int) -> tuple:
        c = [x]
        y = self._img[x - 1]
        while y != x:
            c.append(y)
            y = self._img[y - 1]
        return tuple(c)

    def cycle_index(self) -> list:
        """List ``idx`` with ``idx[x]`` the number (0-based, canonical order)
        of the cycle containing ``x``; ``idx[0]`` is unused."""
        idx = [-1] * (self.n + 1)
        k = 0
        for start in range(1, self.n + 1):
            if idx[start] >= 0:
                continue
            x = start
            while idx[x] < 0:
                idx[x] = k
                x = self._img[x - 1]
            k += 1
        return idx

    def is_circular(self) -> bool:
        if self.n == 0:
            return False
        length = 1
        x = self._img[0]
        while x != 1:
            x = self._img[x - 1]
            length += 1
        return length == self.n

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._img, 1))

    def connects(self, i: int, j: int) -> bool:
        """True iff ``i`` and ``j`` lie in different cycles."""
        if i == j:
            return False
        x = self._img[i - 1]
        while x != i:
            if x == j:
                return False
            x = self._img[x - 1]
        return True

    def support(self) -> list:
        return [i for i, v in enumerate(self._img, 1) if v != i]

    def format(self, show_fixed: bool = False) -> str:
        cyc = self.cycles(include_fixed=show_fixed)
        if not cyc:
            return "()" if self.n and show_fixed else ""
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


class Transposition(NamedTuple):
    """The transposition ``(i,j)``, normalized so that ``i < j``."""

    i: int
    j: int

    @classmethod
    def of(cls, a: int, b: int) -> "Transposition":
        if a == b:
            raise ValidationError(f"transposition needs two distinct points, got ({a},{b})")
        return cls(a, b) if a < b else cls(b, a)

    def as_permutation(self, n: int) -> Permutation:
        return Permutation.identity(n).swap_right(self.i, self.j)

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1,2,3)(4,5)"`` on {1..n}.

    Separators inside a cycle may be commas, whitespace, or both. Points
    that are not listed are fixed; a lone ``()`` is the identity.
    """
    if n < 0:
        raise ParseError("ground set size must be nonnegative")
    cyc = []
    current = None
    pos = 0
    text = text.strip()
    if text == "()":
        return Permutation.identity(n)
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} at offset {pos}")
        pos = m.end()
        opened, closed, number, comma = m.groups()
        if opened:
            if current is not None:
                raise ParseError("nested '(' in cycle notation")
            current = []
        elif closed:
            if current is None:
                raise ParseError("unmatched ')' in cycle notation")
            if not current:
                raise ParseError("empty cycle '()'")
            cyc.append(current)
            current = None
        elif number:
            if current is None:
                raise ParseError(f"point {number} outside parentheses")
            current.append(int(number))
        elif comma and current is None:
            raise ParseError("stray ',' outside parentheses")
    if current is not None:
        raise ParseError("unclosed '(' in cycle notation")
    return Permutation.from_cycles(cyc, n)


def compose(*perms: Permutation) -> Permutation:
    """Right-to-left product: ``compose(p, q)(x) == p(q(x))``."""
    if not perms:
        raise ValueError("compose needs at least one permutation")
    out = perms[-1]
    for p in reversed(perms[:-1]):
        out = p * out
    return out


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def cycles(p: Permutation) -> list:
    return p.cycles()


def cycle_count(p: Permutation) -> int:
    return p.cycle_count()


def connects(p: Permutation, t: Transposition) -> bool:
    return p.connects(t.i, t.j)


def is_circular(p: Permutation) -> bool:
    return p.is_circular()


def iter_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for img in permutations(range(1, n + 1)):
        yield Permutation(img, check=False)


def iter_circular(points: Sequence[int], n: int) -> Iterator[Permutation]:
    """All circular permutations moving exactly ``points`` (others fixed)."""
    from itertools import permutations

    points = list(points)
    if not points:
        return
    first, rest = points[0], points[1:]
    for order in permutations(rest):
        yield Permutation.from_cycles([(first,) + order], n)
