"""Decision procedures for conjugacy classes of SL(n+1) meeting Bruhat cells.

A class is described by its Jordan data: distinct eigenvalue labels, each
with a non-increasing list of block sizes.  Every criterion here depends on
the block data only, so eigenvalues stay abstract labels; concrete field
values are optional and only validated when a finite-field oracle consumes
them.  The Weyl group is S_{n+1}; for an involution w the class meets the
cell of w exactly when the 2-cycle count of w stays within a cap computed
from the Jordan data, and a whole Weyl conjugacy class lies inside the
intersection set exactly when its cycle type is dominated by the partition
obtained by summing block sizes across eigenvalues.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coxeter import build_root_system
from .errors import GuardError
from .partitions import Partition, dominance_leq
from .permutations import (
    Permutation,
    all_permutations,
    exceedances,
    involutions,
    permutation_to_weyl,
)

__all__ = [
    "JordanClass",
    "abstract_jordan_classes",
    "eigenspace_corank",
    "two_cycle_cap",
    "block_sum_partition",
    "nested_involution",
    "dense_cell_involution",
    "involution_cell_meets",
    "passes_corank_bound",
    "weyl_class_inside",
    "bruhat_lower_set",
    "is_spherical",
    "spherical_weyl_set",
    "ClosureMonotonicity",
    "closure_monotonicity",
    "SPHERICAL_CHAR_CAVEAT",
]

# The spherical characterization below is stated for fields of
# characteristic != 2; reports quote this caveat verbatim.
SPHERICAL_CHAR_CAVEAT = (
    "spherical characterization assumes characteristic != 2"
)

_LOWER_SET_DEGREE_LIMIT = 8
_SPHERICAL_DEGREE_LIMIT = 10


@dataclass(frozen=True)
class EigenData:
    """One eigenvalue label with its Jordan block sizes, non-increasing."""

    label: str
    blocks: tuple[int, ...]

    def __post_init__(self):
        if not self.blocks or any(b <= 0 for b in self.blocks):
            raise ValueError(f"blocks must be positive: {self.blocks}")
        if any(
            self.blocks[i] < self.blocks[i + 1] for i in range(len(self.blocks) - 1)
        ):
            raise ValueError(f"blocks must be non-increasing: {self.blocks}")

    @property
    def multiplicity(self) -> int:
        return sum(self.blocks)


class JordanClass:
    """Jordan data of a conjugacy class in SL(n+1).

    ``values`` optionally assigns an integer to each label, to be read in a
    prime field later; distinctness and the determinant-one constraint are
    then checked by the consumer that knows the field.
    """

    __slots__ = ("n_plus_1", "eigen_data", "values")

    def __init__(self, n_plus_1: int, eigen_data, values=None):
        eigen_data = tuple(
            e if isinstance(e, EigenData) else EigenData(e[0], tuple(e[1]))
            for e in eigen_data
        )
        labels = [e.label for e in eigen_data]
        if len(set(labels)) != len(labels):
            raise ValueError(f"labels repeat: {labels}")
        total = sum(e.multiplicity for e in eigen_data)
        if total != n_plus_1:
            raise ValueError(f"blocks sum to {total}, expected {n_plus_1}")
        if values is not None:
            values = dict(values)
            if set(values) != set(labels):
                raise ValueError("values must cover exactly the labels")
        object.__setattr__(self, "n_plus_1", n_plus_1)
        object.__setattr__(self, "eigen_data", eigen_data)
        object.__setattr__(self, "values", values)

    def __setattr__(self, *a):
        raise AttributeError("JordanClass is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, JordanClass)
            and self.n_plus_1 == other.n_plus_1
            and self.eigen_data == other.eigen_data
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.n_plus_1, self.eigen_data))

    def __repr__(self):
        data = ", ".join(f"{e.label}:{list(e.blocks)}" for e in self.eigen_data)
        return f"<JordanClass SL({self.n_plus_1}) {data}>"

    def describe(self) -> str:
        return " ".join(
            f"{e.label}={'.'.join(map(str, e.blocks))}" for e in self.eigen_data
        )

    @property
    def is_central(self) -> bool:
        return len(self.eigen_data) == 1 and all(
            b == 1 for b in self.eigen_data[0].blocks
        )

    def to_json_dict(self) -> dict:
        out = {
            "n_plus_1": self.n_plus_1,
            "eigen_data": [
                {"label": e.label, "blocks": list(e.blocks)} for e in self.eigen_data
            ],
        }
        if self.values is not None:
            out["values"] = dict(self.values)
        return out

    @classmethod
    def from_json_dict(cls, d: dict) -> "JordanClass":
        return cls(
            int(d["n_plus_1"]),
            [(e["label"], tuple(e["blocks"])) for e in d["eigen_data"]],
            d.get("values"),
        )

    @classmethod
    def from_json(cls, text: str) -> "JordanClass":
        return cls.from_json_dict(json.loads(text))


def abstract_jordan_classes(n_plus_1: int):
    """All Jordan classes of SL(n+1) up to relabeling: multisets of block
    partitions with total size n+1, labels c1, c2, ...
    """
    from .partitions import partitions_of

    shapes = []
    for k in range(1, n_plus_1 + 1):
        shapes.extend(p.parts for p in partitions_of(k))
    shapes.sort(reverse=True)

    def rec(remaining, start):
        if remaining == 0:
            yield ()
            return
        for idx in range(start, len(shapes)):
            shape = shapes[idx]
            if sum(shape) <= remaining:
                for rest in rec(remaining - sum(shape), idx):
                    yield (shape,) + rest

    for combo in rec(n_plus_1, 0):
        yield JordanClass(
            n_plus_1,
            [(f"c{i + 1}", shape) for i, shape in enumerate(combo)],
        )


def eigenspace_corank(c: JordanClass) -> int:
    """n+1 minus the largest geometric eigenvalue multiplicity.

    The block count of a label is the dimension of that eigenspace, so this
    equals the minimum over scalars z of rank(g - z*I).
    """
    return c.n_plus_1 - max(len(e.blocks) for e in c.eigen_data)


def two_cycle_cap(c: JordanClass) -> int:
    """The corank capped at floor((n+1)/2): the largest 2-cycle count an
    involution meeting the class in a Bruhat cell can have."""
    return min(eigenspace_corank(c), c.n_plus_1 // 2)


def block_sum_partition(c: JordanClass) -> Partition:
    """Partition whose t-th part sums the t-th largest block of every label.

    Labels are ranked by block count (stable for ties); the result has
    exactly n+1 - corank parts and weight n+1.
    """
    ranked = sorted(c.eigen_data, key=lambda e: -len(e.blocks))
    depth = len(ranked[0].blocks)
    parts = tuple(
        sum(e.blocks[t] if t < len(e.blocks) else 0 for e in ranked)
        for t in range(depth)
    )
    return Partition(parts)


def nested_involution(n_plus_1: int, l: int) -> Permutation:
    """The involution (1, n+1)(2, n)...(l, n+2-l); l = 0 gives the identity."""
    if not 0 <= 2 * l <= n_plus_1:
        raise ValueError(f"need 0 <= l <= (n+1)/2, got l={l}, n+1={n_plus_1}")
    im = list(range(1, n_plus_1 + 1))
    for k in range(1, l + 1):
        im[k - 1], im[n_plus_1 - k] = n_plus_1 + 1 - k, k
    return Permutation(im)


def dense_cell_involution(c: JordanClass) -> Permutation:
    """The element whose cell meets the class densely: the nested involution
    with two_cycle_cap(c) cycles.  Identity iff the class is central."""
    return nested_involution(c.n_plus_1, two_cycle_cap(c))


def involution_cell_meets(c: JordanClass, w: Permutation) -> bool:
    """Whether the class meets the cell BwB of an involution w: exactly when
    the 2-cycle count of w is at most the cap."""
    _check_degree(c, w)
    if not w.is_involution:
        raise ValueError(f"{w.cycle_string()} is not an involution")
    return exceedances(w) <= two_cycle_cap(c)


def passes_corank_bound(c: JordanClass, w: Permutation) -> bool:
    """Necessary condition for any permutation: exceedances(w) <= corank.

    False certifies the intersection with BwB is empty; True alone decides
    membership only for involutions.
    """
    _check_degree(c, w)
    return exceedances(w) <= eigenspace_corank(c)


def weyl_class_inside(c: JordanClass, lam: Partition) -> bool:
    """Whether the whole S_{n+1} class with cycle type lam lies inside the
    set of cells meeting C: dominance below the block-sum partition."""
    if lam.weight != c.n_plus_1:
        raise ValueError(f"cycle type has weight {lam.weight}, expected {c.n_plus_1}")
    return dominance_leq(lam, block_sum_partition(c))


def bruhat_lower_set(c: JordanClass) -> frozenset[Permutation]:
    """All w at or below the dense-cell involution in the Bruhat order;
    this is the set of opposite cells BwB^- the class meets."""
    n_plus_1 = c.n_plus_1
    if n_plus_1 > _LOWER_SET_DEGREE_LIMIT:
        raise GuardError(f"degree {n_plus_1} > {_LOWER_SET_DEGREE_LIMIT}")
    rs = build_root_system(f"A{n_plus_1 - 1}")
    top = permutation_to_weyl(rs, dense_cell_involution(c))
    from .coxeter import bruhat_leq

    return frozenset(
        w
        for w in all_permutations(n_plus_1)
        if bruhat_leq(permutation_to_weyl(rs, w), top)
    )


def is_spherical(c: JordanClass) -> bool:
    """Semisimple with exactly two distinct eigenvalues, or a single
    eigenvalue with all blocks of size at most 2 and some block of size 2.

    Central classes are rejected (single points).  The characterization
    carries the characteristic caveat in SPHERICAL_CHAR_CAVEAT.
    """
    if len(c.eigen_data) == 2 and all(
        b == 1 for e in c.eigen_data for b in e.blocks
    ):
        return True
    return (
        len(c.eigen_data) == 1
        and all(b <= 2 for b in c.eigen_data[0].blocks)
        and any(b == 2 for b in c.eigen_data[0].blocks)
    )


def spherical_weyl_set(c: JordanClass) -> frozenset[Permutation]:
    """For a spherical class, the full set of cells meeting it: involutions
    with at most corank 2-cycles."""
    if c.n_plus_1 > _SPHERICAL_DEGREE_LIMIT:
        raise GuardError(f"degree {c.n_plus_1} > {_SPHERICAL_DEGREE_LIMIT}")
    if not is_spherical(c):
        raise ValueError(f"{c!r} is not spherical: {c.describe()}")
    bound = eigenspace_corank(c)
    return frozenset(
        w for w in involutions(c.n_plus_1) if exceedances(w) <= bound
    )


@dataclass(frozen=True)
class ClosureMonotonicity:
    """Combinatorial consequences of one class lying in another's closure."""

    cap_monotone: bool            # cap of inner <= cap of outer
    cells_monotone: bool          # inner meets an involution cell => outer does
    dense_elements_comparable: bool  # dense involutions Bruhat-comparable

    @property
    def ok(self) -> bool:
        return self.cap_monotone and self.cells_monotone and self.dense_elements_comparable


def closure_monotonicity(inner: JordanClass, outer: JordanClass) -> ClosureMonotonicity:
    """Check the cell-membership consequences of closure containment.

    The caller asserts the geometric containment; this only verifies that
    every involution cell met by the inner class is met by the outer one
    and that the dense-cell involutions are comparable.
    """
    if inner.n_plus_1 != outer.n_plus_1:
        raise ValueError("classes live in different groups")
    cap_in, cap_out = two_cycle_cap(inner), two_cycle_cap(outer)
    cells = all(
        involution_cell_meets(outer, w)
        for w in involutions(inner.n_plus_1)
        if involution_cell_meets(inner, w)
    )
    rs = build_root_system(f"A{inner.n_plus_1 - 1}")
    from .coxeter import bruhat_leq

    comparable = bruhat_leq(
        permutation_to_weyl(rs, dense_cell_involution(inner)),
        permutation_to_weyl(rs, dense_cell_involution(outer)),
    )
    return ClosureMonotonicity(cap_in <= cap_out, cells, comparable)


def _check_degree(c: JordanClass, w: Permutation):
    if w.degree != c.n_plus_1:
        raise ValueError(
            f"permutation degree {w.degree} does not match SL({c.n_plus_1})"
        )


def format_class_summary(c: JordanClass) -> list[str]:
    """Human-readable core invariants, one per line."""
    return [
        f"class: SL({c.n_plus_1}) {c.describe()}",
        f"eigenspace corank: {eigenspace_corank(c)}",
        f"two-cycle cap: {two_cycle_cap(c)}",
        f"block-sum partition: {block_sum_partition(c)}",
        f"dense-cell involution: {dense_cell_involution(c).cycle_string()}",
        f"central: {'yes' if c.is_central else 'no'}",
    ]
