"""Hypermaps as transitive pairs (sigma, alpha) and their duality transforms."""

from __future__ import annotations

from typing import Optional

from .errors import GroundSetMismatch, NotTransitive
from .perm import Permutation, parse_cycles

__all__ = [
    "Hypermap",
    "new_hypermap",
    "genus_of",
    "is_transitive",
    "faces",
    "dual",
    "reciprocal",
    "hyperdual",
    "mirror",
    "kreweras_dual",
    "is_map",
]


def is_transitive(*perms: Permutation) -> bool:
    """Whether the group generated by ``perms`` is transitive on {1..n}.

    Union-find over the orbits of each generator.
    """
    n = perms[0].n
    if n <= 1:
        return True
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    for p in perms:
        for x, y in enumerate(p.images, 1):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
                components -= 1
                if components == 1:
                    return True
    return components == 1


def genus_of(sigma: Permutation, alpha: Permutation) -> int:
    """Genus of the pair from n + 2 - 2g = z(sigma) + z(alpha) + z(alpha^-1 sigma).

    No transitivity check; callers that need a hypermap use ``Hypermap``.
    """
    twice = sigma.n + 2 - sigma.cycle_count() - alpha.cycle_count() - (alpha.inverse() * sigma).cycle_count()
    return twice // 2


def euler_defect(sigma: Permutation, alpha: Permutation) -> int:
    """``n + 2 - z(sigma) - z(alpha) - z(alpha^-1 sigma)``, i.e. twice the genus."""
    return sigma.n + 2 - sigma.cycle_count() - alpha.cycle_count() - (alpha.inverse() * sigma).cycle_count()


class Hypermap:
    """A validated hypermap: ``sigma`` gives the vertices, ``alpha`` the hyperedges.

    Faces (the cycles of ``alpha^-1 sigma``) and the genus are computed once
    at construction. Raises ``NotTransitive`` if the pair generates an
    intransitive group and ``GroundSetMismatch`` if the sizes differ.
    """

    __slots__ = ("sigma", "alpha", "faces", "genus", "name")

    def __init__(self, sigma: Permutation, alpha: Permutation, name: Optional[str] = None):
        if sigma.n != alpha.n:
            raise GroundSetMismatch(f"sigma acts on {sigma.n} points, alpha on {alpha.n}")
        if not is_transitive(sigma, alpha):
            raise NotTransitive("sigma and alpha generate an intransitive group")
        self.sigma = sigma
        self.alpha = alpha
        self.faces = alpha.inverse() * sigma
        twice = sigma.n + 2 - sigma.cycle_count() - alpha.cycle_count() - self.faces.cycle_count()
        if sigma.n == 0:
            twice = 0
        self.genus = twice // 2
        self.name = name

    @classmethod
    def parse(cls, sigma: str, alpha: str, n: int, name: Optional[str] = None) -> "Hypermap":
        return cls(parse_cycles(sigma, n), parse_cycles(alpha, n), name=name)

    @property
    def n(self) -> int:
        return self.sigma.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Hypermap) and self.sigma == other.sigma and self.alpha == other.alpha

    def __hash__(self) -> int:
        return hash((self.sigma, self.alpha))

    def __repr__(self) -> str:
        return f"Hypermap(sigma={self.sigma.format()!r}, alpha={self.alpha.format()!r}, n={self.n})"

    @property
    def pair(self) -> tuple:
        return self.sigma, self.alpha

    # counts --------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self.sigma.cycle_count()

    @property
    def edge_count(self) -> int:
        return self.alpha.cycle_count()

    @property
    def face_count(self) -> int:
        return self.faces.cycle_count()

    def is_map(self) -> bool:
        return is_map(self)

    def is_unicellular(self) -> bool:
        return self.face_count == 1

    # transforms ----------------------------------------------------------

    def dual(self) -> "Hypermap":
        return Hypermap(self.faces, self.alpha.inverse())

    def reciprocal(self) -> "Hypermap":
        return Hypermap(self.alpha, self.sigma)

    def hyperdual(self) -> "Hypermap":
        s_inv = self.sigma.inverse()
        return Hypermap(s_inv, s_inv * self.alpha)

    def mirror(self) -> "Hypermap":
        return Hypermap(self.sigma.inverse(), self.alpha.inverse())

    def kreweras_dual(self) -> "Hypermap":
        return Hypermap(self.sigma, self.faces)


def new_hypermap(sigma: Permutation, alpha: Permutation) -> Hypermap:
    return Hypermap(sigma, alpha)


def faces(h: Hypermap) -> Permutation:
    return h.faces


def dual(h: Hypermap) -> Hypermap:
    return h.dual()


def reciprocal(h: Hypermap) -> Hypermap:
    return h.reciprocal()


def hyperdual(h: Hypermap) -> Hypermap:
    return h.hyperdual()


def mirror(h: Hypermap) -> Hypermap:
    return h.mirror()


def kreweras_dual(h: Hypermap) -> Hypermap:
    return h.kreweras_dual()


def is_map(h: Hypermap) -> bool:
    """Every hyperedge has at most two points."""
    img = h.alpha.images
    return all(img[img[x] - 1] == x + 1 for x in range(h.n))
