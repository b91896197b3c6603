"""Deciding which Bruhat cells a conjugacy class of SL(n+1) meets.

Everything is read off the Jordan data: the corank bounds the 2-cycle
count of any permutation whose cell meets the class, involutions are
decided exactly by a capped corank, and whole Weyl conjugacy classes are
decided by a dominance comparison of partitions.

Run:  python demos/03_sl_membership.py
"""

from bruhatcells import (
    JordanClass,
    abstract_jordan_classes,
    block_sum_partition,
    bruhat_lower_set,
    cycle_type,
    dense_cell_involution,
    eigenspace_corank,
    involution_cell_meets,
    involutions,
    spherical_weyl_set,
    is_spherical,
    two_cycle_cap,
    weyl_class_inside,
)

examples = [
    ("central", JordanClass(4, [("c", (1, 1, 1, 1))])),
    ("transvection", JordanClass(4, [("u", (2, 1, 1))])),
    ("two 2-blocks", JordanClass(4, [("u", (2, 2))])),
    ("regular unipotent", JordanClass(4, [("u", (4,))])),
    ("semisimple 2+2", JordanClass(4, [("a", (1, 1)), ("b", (1, 1))])),
    ("regular semisimple", JordanClass(4, [(x, (1,)) for x in "abcd"])),
]

print("== invariants of some SL(4) classes ==")
print(f"{'class':<20}{'corank':<8}{'cap':<6}{'block-sum':<12}{'dense cell':<14}spherical")
for label, c in examples:
    print(
        f"{label:<20}{eigenspace_corank(c):<8}{two_cycle_cap(c):<6}"
        f"{str(block_sum_partition(c)):<12}"
        f"{dense_cell_involution(c).cycle_string():<14}"
        f"{'yes' if is_spherical(c) else 'no'}"
    )

print()
print("== which involutions meet the transvection class ==")
trans = JordanClass(4, [("u", (2, 1, 1))])
for w in involutions(4):
    verdict = "meets" if involution_cell_meets(trans, w) else "misses"
    print(f"  {w.cycle_string():<14} {verdict}")

print()
print("== whole Weyl classes inside the intersection set ==")
for label, c in examples:
    inside = sorted(
        {
            str(cycle_type(w))
            for w in involutions(4)
            if weyl_class_inside(c, cycle_type(w))
        }
    )
    print(f"{label:<20} cycle types fully inside: {inside}")

print()
print("== opposite cells met = the Bruhat lower set of the dense element ==")
for label, c in examples:
    lower = bruhat_lower_set(c)
    print(f"{label:<20} {len(lower)} of 24 cells")

print()
print("== spherical classes know their whole intersection set ==")
sph = JordanClass(4, [("a", (1, 1)), ("b", (1, 1))])
print(f"semisimple 2+2: {sorted(w.cycle_string() for w in spherical_weyl_set(sph))}")

print()
count = sum(1 for _ in abstract_jordan_classes(6))
print(f"(SL(6) has {count} classes up to relabeling eigenvalues)")
