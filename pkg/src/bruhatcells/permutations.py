"""Permutations of {1..n}: cycle notation, exceedances, and the bridge to
the type-A Weyl group where s_i is the adjacent transposition (i, i+1).

>>> w = Permutation.parse("(1 4)(2 3)", 4)
>>> w.cycle_string()
'(1 4)(2 3)'
>>> exceedances(w)
2
>>> (w * w).is_identity
True
"""

from __future__ import annotations

import re
from itertools import permutations as _permutations

from .coxeter import RootSystem, WeylElement, reduced_word

__all__ = [
    "Permutation",
    "exceedances",
    "all_permutations",
    "involutions",
    "permutation_to_weyl",
    "weyl_to_permutation",
]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """Immutable permutation of {1..n}; ``images[i-1]`` is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (u * v)(i) = u(v(i))."""
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inv(self) -> "Permutation":
        out = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            out[j - 1] = i
        return Permutation(out)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation.parse({self.cycle_string()!r}, {self.degree})"

    @property
    def is_identity(self) -> bool:
        return all(j == i + 1 for i, j in enumerate(self.images))

    @property
    def is_involution(self) -> bool:
        return all(self.images[j - 1] == i + 1 for i, j in enumerate(self.images))

    def inversions(self) -> int:
        """Coxeter length in S_n: pairs i < j with w(i) > w(j).

        >>> Permutation((2, 1, 3)).inversions()
        1
        """
        im = self.images
        n = len(im)
        return sum(1 for i in range(n) for j in range(i + 1, n) if im[i] > im[j])

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = []
            i = start
            while not seen[i - 1]:
                seen[i - 1] = True
                cyc.append(i)
                i = self.images[i - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_lengths(self) -> tuple[int, ...]:
        """All cycle lengths including fixed points, non-increasing."""
        moved = sum(len(c) for c in self.cycles())
        lens = sorted((len(c) for c in self.cycles()), reverse=True)
        return tuple(lens) + (1,) * (self.degree - moved)

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def one_line_string(self) -> str:
        return " ".join(map(str, self.images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        if not (1 <= a <= n and 1 <= b <= n and a != b):
            raise ValueError(f"bad transposition ({a} {b}) in S_{n}")
        im = list(range(1, n + 1))
        im[a - 1], im[b - 1] = b, a
        return cls(im)

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The order-reversing permutation, the longest element of S_n."""
        return cls(range(n, 0, -1))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        im = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc}")
            for i, pt in enumerate(cyc):
                if not 1 <= pt <= n:
                    raise ValueError(f"point {pt} outside 1..{n}")
                im[pt - 1] = cyc[(i + 1) % len(cyc)]
        moved = [p for c in cycles for p in c]
        if len(set(moved)) != len(moved):
            raise ValueError("cycles are not disjoint")
        return cls(im)

    @classmethod
    def parse(cls, s: str, degree: int) -> "Permutation":
        """Parse cycle notation '(1 4)(2 3)' or one-line form '4 3 2 1'.

        'e', '()' and the empty string denote the identity.
        """
        s = s.strip()
        if s in ("", "e", "()"):
            return cls.identity(degree)
        if "(" in s:
            body = s.replace(",", " ")
            chunks = _CYCLE_RE.findall(body)
            if not chunks or _CYCLE_RE.sub("", body).strip():
                raise ValueError(f"cannot parse cycle notation {s!r}")
            cycles = [tuple(int(t) for t in c.split()) for c in chunks if c.split()]
            return cls.from_cycles(degree, cycles)
        images = [int(t) for t in s.replace(",", " ").split()]
        if len(images) != degree:
            raise ValueError(f"one-line form has {len(images)} entries, expected {degree}")
        return cls(images)


def exceedances(w: Permutation) -> int:
    """Number of points i with w(i) > i; for an involution, its 2-cycle count."""
    return sum(1 for i, j in enumerate(w.images, start=1) if j > i)


def all_permutations(n: int):
    """All of S_n in lexicographic one-line order."""
    for im in _permutations(range(1, n + 1)):
        yield Permutation(im)


def involutions(n: int):
    """All w in S_n with w * w = identity (the identity included)."""
    for w in all_permutations(n):
        if w.is_involution:
            yield w


def permutation_to_weyl(rs: RootSystem, w: Permutation) -> WeylElement:
    """Image of w under S_{n+1} ~ W(A_n), sending (i, i+1) to s_i."""
    if rs.cartan_type.family != "A" or rs.rank != w.degree - 1:
        raise ValueError(f"{rs.cartan_type} does not match S_{w.degree}")
    im = list(w.images)
    word = []
    # bubble sort by right descents; the word read backwards multiplies to w
    changed = True
    while changed:
        changed = False
        for i in range(len(im) - 1):
            if im[i] > im[i + 1]:
                im[i], im[i + 1] = im[i + 1], im[i]
                word.append(i)
                changed = True
    out = rs.identity
    for i in reversed(word):
        out = rs._mul_gen_right(out, i)
    return out


def weyl_to_permutation(w: WeylElement) -> Permutation:
    """Inverse of ``permutation_to_weyl`` via a reduced word."""
    if w.rs.cartan_type.family != "A":
        raise ValueError(f"{w.rs.cartan_type} is not of type A")
    n = w.rs.rank + 1
    out = Permutation.identity(n)
    for i in reduced_word(w):
        out = out * Permutation.transposition(n, i, i + 1)
    return out
