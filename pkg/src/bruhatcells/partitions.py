"""Integer partitions with the dominance order, duals and cycle types.

>>> dual(Partition((3, 1)))
Partition((2, 1, 1))
>>> dominance_leq(Partition((1, 1, 1)), Partition((2, 1)))
True
>>> two_one_shape(5, 2)
Partition((2, 2, 1))
"""

from __future__ import annotations

from .permutations import Permutation

__all__ = [
    "Partition",
    "dual",
    "dominance_leq",
    "two_one_shape",
    "hook_bound_matches_dominance",
    "cycle_type",
    "partitions_of",
]


class Partition:
    """A non-increasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, s: str) -> "Partition":
        """Parse a comma-separated part list such as '2,2,1'."""
        return cls(int(t) for t in s.split(",") if t.strip())


def dual(lam: Partition) -> Partition:
    """Transpose of the shape: dual(lam)_k = #{j : lam_j >= k}.

    >>> dual(Partition((1, 1, 1, 1)))
    Partition((4,))
    """
    if not len(lam):
        return Partition(())
    return Partition(
        sum(1 for p in lam if p >= k) for k in range(1, lam.parts[0] + 1)
    )


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """Partial-sum comparison of two partitions of the same weight.

    Shorter sequences are zero-padded.  Comparing different weights is an
    error rather than False, to surface caller bugs.
    """
    if lam.weight != mu.weight:
        raise ValueError(f"weights differ: {lam.weight} vs {mu.weight}")
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam.parts[k] if k < len(lam) else 0
        b += mu.parts[k] if k < len(mu) else 0
        if a > b:
            return False
    return True


def two_one_shape(p: int, l: int) -> Partition:
    """The partition (2^l, 1^(p-2l)) of p."""
    if not 0 <= 2 * l <= p:
        raise ValueError(f"need 0 <= l <= p/2, got p={p}, l={l}")
    return Partition((2,) * l + (1,) * (p - 2 * l))


def hook_bound_matches_dominance(p: int, l: int, mu: Partition) -> bool:
    """Dominance of (2^l, 1^(p-2l)) below mu; equals len(mu) <= p - l.

    Returns the dominance comparison; the length characterization is the
    independent description that the tests pin it against.
    """
    if mu.weight != p:
        raise ValueError(f"mu has weight {mu.weight}, expected {p}")
    return dominance_leq(two_one_shape(p, l), mu)


def cycle_type(w: Permutation) -> Partition:
    """Cycle lengths of a permutation, fixed points included as 1s.

    >>> cycle_type(Permutation.parse("(1 2 3)", 4))
    Partition((3, 1))
    """
    return Partition(w.cycle_lengths())


def partitions_of(p: int, max_part: int | None = None):
    """All partitions of p in decreasing lexicographic order.

    >>> [tuple(q) for q in partitions_of(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    first = p if max_part is None else min(p, max_part)
    if p == 0:
        yield Partition(())
        return
    for head in range(first, 0, -1):
        for tail in partitions_of(p - head, head):
            yield Partition((head,) + tail.parts)
