"""Permutations of {1..n} composed left to right.

``p * q`` means "apply p first, then q", so ``(p * q)(x) == q(p(x))``. This is
the order in which a sequence of board rotations acts on positions.

Cycle-involution variants (``BALANCED``, ``PLUS``, ``MINUS``) follow the nested
pairings of a cycle written as ``(c1 c2 ... cl)`` with ``c1`` its smallest
element: ``BALANCED`` splits an odd-length cycle into two involutions with the
same number of transpositions, ``PLUS``/``MINUS`` split an even-length cycle so
that the first factor has one more/one fewer transposition than the second.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DomainError


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def flip(self) -> "Parity":
        return Parity(1 - self)


class Variant(enum.Enum):
    BALANCED = "balanced"
    PLUS = "plus"
    MINUS = "minus"


class Permutation:
    __slots__ = ("_img",)

    def __init__(self, images: Iterable[int], check: bool = True):
        img = tuple(int(v) for v in images)
        if check and sorted(img) != list(range(1, len(img) + 1)):
            raise DomainError(f"not a permutation of 1..{len(img)}: {img}")
        self._img = img

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(range(1, size + 1), check=False)

    @classmethod
    def from_cycles(cls, size: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(1, size + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= size or a in seen:
                    raise DomainError(f"bad cycle element {a} for size {size}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b
        return cls(img, check=False)

    @classmethod
    def transposition(cls, size: int, a: int, b: int) -> "Permutation":
        if a == b:
            raise DomainError("transposition needs two distinct points")
        return cls.from_cycles(size, [(a, b)])

    @property
    def size(self) -> int:
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

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)})"

    def inverse(self) -> "Permutation":
        return invert(self)

    def cycles(self, include_fixed: bool = False) -> list:
        return cycles(self, include_fixed)

    def parity(self) -> Parity:
        return parity(self)

    def is_involution(self) -> bool:
        img = self._img
        return all(img[img[i] - 1] == i + 1 for i in range(len(img)))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self._img))

    def transpositions(self) -> list:
        """2-cycles as ``(a, b)`` with ``a < b``, ordered by ``a``."""
        return [(c[0], c[1]) for c in cycles(self) if len(c) == 2]


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.size != q.size:
        raise DomainError(f"size mismatch: {p.size} vs {q.size}")
    qi = q.images
    return Permutation([qi[v - 1] for v in p.images], check=False)


def invert(p: Permutation) -> Permutation:
    inv = [0] * p.size
    for i, v in enumerate(p.images):
        inv[v - 1] = i + 1
    return Permutation(inv, check=False)


def cycles(p: Permutation, include_fixed: bool = False) -> list:
    """Disjoint cycles, each starting at its smallest element, sorted by it."""
    img = p.images
    seen = [False] * len(img)
    out = []
    for start in range(1, len(img) + 1):
        if seen[start - 1]:
            continue
        cyc = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            cyc.append(x)
            x = img[x - 1]
        if len(cyc) > 1 or include_fixed:
            out.append(cyc)
    return out


def parity(p: Permutation) -> Parity:
    # size minus number of cycles (fixed points included)
    k = len(cycles(p, include_fixed=True))
    return Parity((p.size - k) % 2)


def a2(p: Permutation) -> int:
    return sum(1 for c in cycles(p) if len(c) == 2)


def format_cycles(p: Permutation) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def _pairs(cycle: Sequence[int], labels: Iterable[tuple]) -> list:
    return [(cycle[a - 1], cycle[b - 1]) for a, b in labels]


def cycle_involution_pairs(cycle: Sequence[int], variant: Variant) -> tuple:
    """Transposition lists ``(sigma_pairs, upsilon_pairs)`` for one cycle.

    Labels 1..l in the construction are positions within ``cycle``.
    """
    ell = len(cycle)
    if ell < 2:
        raise DomainError("cycle must have length >= 2")
    if variant is Variant.BALANCED:
        if ell % 2 == 0:
            raise DomainError("balanced split needs an odd-length cycle")
        k = ell // 2
        sig = [(a, 2 * k + 2 - a) for a in range(1, k + 1)]
        ups = [(a, 2 * k + 3 - a) for a in range(2, k + 2)]
    else:
        if ell % 2 == 1:
            raise DomainError(f"{variant.value} split needs an even-length cycle")
        k = ell // 2
        if variant is Variant.PLUS:
            sig = [(a, 2 * k + 1 - a) for a in range(1, k + 1)]
            ups = [(a, 2 * k + 2 - a) for a in range(2, k + 1)]
        else:
            sig = [(a, 2 * k - a) for a in range(1, k)]
            ups = [(a, 2 * k + 1 - a) for a in range(1, k + 1)]
    return _pairs(cycle, sig), _pairs(cycle, ups)


def cycle_involutions(cycle: Sequence[int], variant: Variant, size: Optional[int] = None) -> tuple:
    """Involutions ``(sigma, upsilon)`` with ``sigma * upsilon`` equal to ``cycle``."""
    size = size if size is not None else max(cycle)
    sig, ups = cycle_involution_pairs(cycle, variant)
    return Permutation.from_cycles(size, sig), Permutation.from_cycles(size, ups)


@dataclass(frozen=True)
class InvolutionPair:
    sigma: Permutation
    upsilon: Permutation
    tau: Optional[Permutation] = None

    def product(self) -> Permutation:
        out = self.sigma * self.upsilon
        return out * self.tau if self.tau is not None else out


def involution_factorization(p: Permutation) -> InvolutionPair:
    """Write ``p`` as ``sigma * upsilon`` (even p) or ``sigma * upsilon * tau`` (odd p).

    ``a2(sigma) == a2(upsilon)`` always holds. Odd-length cycles use the
    balanced split; even-length cycles alternate MINUS, PLUS, MINUS, ... in
    order of their smallest element, and for odd ``p`` the transposition of
    the last MINUS upsilon containing that cycle's smallest element becomes
    ``tau``.
    """
    size = p.size
    sig_pairs, ups_pairs = [], []
    tau = None
    cs = cycles(p)
    even_len = [c for c in cs if len(c) % 2 == 0]
    last_even = even_len[-1] if len(even_len) % 2 == 1 else None
    idx = 0
    for c in cs:
        if len(c) % 2 == 1:
            s, u = cycle_involution_pairs(c, Variant.BALANCED)
        else:
            variant = Variant.MINUS if idx % 2 == 0 else Variant.PLUS
            idx += 1
            s, u = cycle_involution_pairs(c, variant)
            if c is last_even:
                split = next(t for t in u if c[0] in t)
                u = [t for t in u if t is not split]
                tau = Permutation.from_cycles(size, [split])
        sig_pairs.extend(s)
        ups_pairs.extend(u)
    return InvolutionPair(
        Permutation.from_cycles(size, sig_pairs),
        Permutation.from_cycles(size, ups_pairs),
        tau,
    )
