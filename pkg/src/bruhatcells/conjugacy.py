"""Conjugacy classes and twisted conjugacy classes in Weyl groups.

The central objects are the elements that are the unique maximal-length
member of their conjugacy class.  They are classified by subsets J of the
simple roots satisfying two conditions ("Property (1)" and "Property (2)"
below); the subset J corresponds to the involution w0 * w0J.  This module
materializes classes by orbit search, computes those sets, carries the
per-family catalog of classifying subsets, and bundles the exhaustive
verification suites that check the classification and its corollaries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import (
    CartanType,
    ENUMERATION_LIMIT,
    ParabolicSubset,
    RootSystem,
    WeylElement,
    bruhat_leq,
    build_root_system,
    coxeter_elements,
    delta0_on_element,
    delta0_permutation,
    element_to_word_str,
)
from .errors import GuardError
from .report import Report

__all__ = [
    "ConjugacyClass",
    "TwistedClass",
    "MaximalSet",
    "enumerate_weyl_group",
    "conjugacy_class",
    "twisted_class",
    "conjugacy_classes",
    "involution_classes",
    "max_length_elements",
    "min_length_elements",
    "is_unique_max",
    "unique_max_involutions",
    "max_length_involutions",
    "ascent_step",
    "ascent_reachable",
    "strong_conj_step",
    "strongly_conjugate",
    "property_one",
    "property_two",
    "subsets_with_property_one",
    "classifying_subsets",
    "subset_involution",
    "fixed_simple_roots",
    "catalog_subsets",
    "is_diagram_automorphism",
    "verify_unique_max_classification",
    "verify_subset_conjugacy",
    "verify_twisted_minimum",
    "verify_coxeter_bound",
    "verify_ascent_classes",
    "STRONG_CONJ_LIMIT",
]

STRONG_CONJ_LIMIT = 10**4


def _guard(rs: RootSystem, allow_large: bool):
    order = rs.cartan_type.weyl_order
    if order > ENUMERATION_LIMIT and not allow_large:
        raise GuardError(
            f"|W({rs.cartan_type})| = {order} exceeds {ENUMERATION_LIMIT}; "
            "pass allow_large=True to force the enumeration"
        )


def enumerate_weyl_group(rs: RootSystem, allow_large: bool = False):
    """All Weyl group elements, in breadth-first order by length (cached)."""
    cached = rs._memo.get("all_elements")
    if cached is None:
        _guard(rs, allow_large)
        frontier = [rs.identity]
        seen = {rs.identity.rows}
        out = [rs.identity]
        ell = 0
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(rs.rank):
                    if not rs._has_right_descent(w, i):
                        v = rs._mul_gen_right(w, i, ell + 1)
                        if v.rows not in seen:
                            seen.add(v.rows)
                            nxt.append(v)
            nxt.sort(key=lambda e: e.rows)
            out.extend(nxt)
            frontier = nxt
            ell += 1
        cached = rs._memo["all_elements"] = tuple(out)
    return cached


def _length_table(rs: RootSystem, allow_large: bool = False) -> dict:
    table = rs._memo.get("length_table")
    if table is None:
        table = rs._memo["length_table"] = {
            w.rows: w.length for w in enumerate_weyl_group(rs, allow_large)
        }
    return table


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class, materialized; extremal-length sublists are sorted."""

    representative: WeylElement
    elements: frozenset[WeylElement]
    max_length: tuple[WeylElement, ...]
    min_length: tuple[WeylElement, ...]

    @property
    def is_unique_max(self) -> bool:
        return len(self.max_length) == 1

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class TwistedClass:
    """A delta-twisted conjugacy class for a diagram automorphism delta."""

    delta: tuple[int, ...]
    representative: WeylElement
    elements: frozenset[WeylElement]
    max_length: tuple[WeylElement, ...]
    min_length: tuple[WeylElement, ...]

    @property
    def is_unique_max(self) -> bool:
        return len(self.max_length) == 1

    @property
    def is_unique_min(self) -> bool:
        return len(self.min_length) == 1

    def __len__(self):
        return len(self.elements)


def _orbit(rs: RootSystem, seed: WeylElement, left_index):
    """Closure of seed under w |-> s_{left_index(i)} * w * s_i, frontier sorted."""
    seen = {seed.rows: seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                v = rs._mul_gen_left(left_index(i), rs._mul_gen_right(w, i))
                if v.rows not in seen:
                    seen[v.rows] = v
                    nxt.append(v)
        nxt.sort(key=lambda e: e.rows)
        frontier = nxt
    return seen


def _extrema(elements):
    by_len = sorted(elements, key=lambda w: (w.length, w.rows))
    lo = by_len[0].length
    hi = by_len[-1].length
    mins = tuple(w for w in by_len if w.length == lo)
    maxs = tuple(w for w in by_len if w.length == hi)
    return maxs, mins


def conjugacy_class(w: WeylElement, allow_large: bool = False) -> ConjugacyClass:
    """Orbit of w under conjugation, grown by the simple-reflection generators."""
    _guard(w.rs, allow_large)
    found = _orbit(w.rs, w, lambda i: i)
    maxs, mins = _extrema(found.values())
    return ConjugacyClass(w, frozenset(found.values()), maxs, mins)


def is_diagram_automorphism(rs: RootSystem, delta) -> bool:
    """True when delta (1-based index images) preserves the Cartan integers."""
    delta = tuple(delta)
    if sorted(delta) != list(range(1, rs.rank + 1)):
        return False
    c = rs.cartan
    n = rs.rank
    return all(
        c[delta[i] - 1][delta[j] - 1] == c[i][j] for i in range(n) for j in range(n)
    )


def twisted_class(w: WeylElement, delta, allow_large: bool = False) -> TwistedClass:
    """Orbit of w under u |-> delta(s) * u * s over the simple reflections s."""
    rs = w.rs
    delta = tuple(delta)
    if not is_diagram_automorphism(rs, delta):
        raise ValueError(f"{delta} is not a diagram automorphism of {rs.cartan_type}")
    _guard(rs, allow_large)
    found = _orbit(rs, w, lambda i: delta[i] - 1)
    maxs, mins = _extrema(found.values())
    return TwistedClass(delta, w, frozenset(found.values()), maxs, mins)


def max_length_elements(c) -> tuple[WeylElement, ...]:
    return c.max_length


def min_length_elements(c) -> tuple[WeylElement, ...]:
    return c.min_length


def is_unique_max(c) -> bool:
    return c.is_unique_max


def _partition_into_classes(rs, elements):
    remaining = {w.rows: w for w in elements}
    classes = []
    while remaining:
        seed_rows = min(remaining)
        seed = remaining[seed_rows]
        found = _orbit(rs, seed, lambda i: i)
        for rows in found:
            remaining.pop(rows, None)
        maxs, mins = _extrema(found.values())
        classes.append(ConjugacyClass(seed, frozenset(found.values()), maxs, mins))
    return tuple(classes)


def conjugacy_classes(rs: RootSystem, allow_large: bool = False):
    """All conjugacy classes of the Weyl group."""
    cached = rs._memo.get("conj_classes")
    if cached is None:
        elements = enumerate_weyl_group(rs, allow_large)
        cached = rs._memo["conj_classes"] = _partition_into_classes(rs, elements)
    return cached


def involution_classes(rs: RootSystem, allow_large: bool = False):
    """Conjugacy classes consisting of involutions (identity class included)."""
    cached = rs._memo.get("inv_classes")
    if cached is None:
        invs = [w for w in enumerate_weyl_group(rs, allow_large) if w.is_involution()]
        cached = rs._memo["inv_classes"] = _partition_into_classes(rs, invs)
    return cached


@dataclass(frozen=True)
class MaximalSet:
    """Involutions of maximal length in their class, with their fixed subsets."""

    cartan_type: CartanType
    members: frozenset[WeylElement]
    fixed_simples: dict  # member -> frozenset of fixed simple-root indices

    def __len__(self):
        return len(self.members)


def unique_max_involutions(
    rs: RootSystem, mode: str = "involutions", allow_large: bool = False
) -> MaximalSet:
    """Elements that are the unique maximal-length member of their class.

    The default mode scans involution classes only, which is exact because
    a class containing a unique longest element is inverse-closed, forcing
    that element to be an involution; the "exhaustive" mode re-derives the
    same set from all classes and is kept as a cross-check at small rank.
    """
    key = ("unique_max", mode)
    cached = rs._memo.get(key)
    if cached is not None:
        return cached
    if mode == "involutions":
        classes = involution_classes(rs, allow_large)
    elif mode == "exhaustive":
        classes = conjugacy_classes(rs, allow_large)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    members = []
    fixed = {}
    for c in classes:
        if c.is_unique_max:
            m = c.max_length[0]
            if not m.is_involution():
                raise AssertionError(
                    f"unique maximal element {element_to_word_str(m)} "
                    "is not an involution"
                )
            members.append(m)
            fixed[m] = fixed_simple_roots(m)
    result = MaximalSet(rs.cartan_type, frozenset(members), fixed)
    rs._memo[key] = result
    return result


def max_length_involutions(rs: RootSystem, allow_large: bool = False) -> MaximalSet:
    """Involutions of maximal (not necessarily unique) length in their class."""
    cached = rs._memo.get("max_involutions")
    if cached is not None:
        return cached
    members = []
    fixed = {}
    for c in involution_classes(rs, allow_large):
        for m in c.max_length:
            members.append(m)
            fixed[m] = fixed_simple_roots(m)
    result = MaximalSet(rs.cartan_type, frozenset(members), fixed)
    rs._memo["max_involutions"] = result
    return result


def ascent_step(w: WeylElement, i: int) -> WeylElement | None:
    """s_i * w * s_i when that does not decrease length, else None."""
    rs = w.rs
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple root index {i} out of range 1..{rs.rank}")
    v = rs._mul_gen_left(i - 1, rs._mul_gen_right(w, i - 1))
    return v if v.length >= w.length else None


def ascent_reachable(w: WeylElement, target: WeylElement) -> bool:
    """Whether some chain of non-decreasing conjugation steps leads w to target."""
    if w.rs is not target.rs:
        raise ValueError("elements belong to different root systems")
    seen = {w.rows}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            if u.rows == target.rows:
                return True
            for i in range(1, u.rs.rank + 1):
                v = ascent_step(u, i)
                if v is not None and v.rows not in seen:
                    seen.add(v.rows)
                    nxt.append(v)
        frontier = nxt
    return target.rows in seen


def strong_conj_step(w: WeylElement, w2: WeylElement, x: WeylElement) -> bool:
    """One length-preserving conjugation w2 = x*w*x^-1 where one of the two
    products x*w or w*x^-1 is length-additive with x."""
    if w.length != w2.length:
        return False
    xinv = x.inv()
    xw = x * w
    if (xw * xinv) != w2:
        return False
    lw2, lx = w2.length, x.length
    return lw2 == xw.length + lx or lw2 == lx + (w * xinv).length


def strongly_conjugate(w: WeylElement, w2: WeylElement) -> bool:
    """Reflexive-transitive closure of strong conjugation steps (small groups).

    Searches conjugators over the whole group, so it refuses Weyl groups
    with more than STRONG_CONJ_LIMIT elements.
    """
    rs = w.rs
    if rs is not w2.rs:
        raise ValueError("elements belong to different root systems")
    if rs.cartan_type.weyl_order > STRONG_CONJ_LIMIT:
        raise GuardError(
            f"|W({rs.cartan_type})| > {STRONG_CONJ_LIMIT}: "
            "strong-conjugation search scans all conjugators"
        )
    if w.length != w2.length:
        return False
    group = enumerate_weyl_group(rs)
    inverses = _inverse_table(rs)
    lengths = _length_table(rs)
    seen = {w.rows}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            if u.rows == w2.rows:
                return True
            for v in _strong_conj_neighbors(rs, u, group, inverses, lengths):
                if v.rows not in seen:
                    seen.add(v.rows)
                    nxt.append(v)
        frontier = nxt
    return w2.rows in seen


def _inverse_table(rs: RootSystem) -> dict:
    table = rs._memo.get("inverse_table")
    if table is None:
        table = rs._memo["inverse_table"] = {
            w.rows: w.inv() for w in enumerate_weyl_group(rs)
        }
    return table


def _strong_conj_neighbors(rs, u, group, inverses, lengths):
    lu = lengths[u.rows]
    for x in group:
        xinv = inverses[x.rows]
        xu = x * u
        v = xu * xinv
        if lengths[v.rows] != lu:
            continue
        lx = lengths[x.rows]
        if lu == lengths[xu.rows] + lx or lu == lx + lengths[(u * xinv).rows]:
            yield v


def property_one(rs: RootSystem, J) -> bool:
    """J is stable under the -w0 diagram symmetry and w0 agrees with the
    parabolic longest element on J."""
    J = frozenset(J)
    dp = delta0_permutation(rs)
    if {dp[i - 1] for i in J} != J:
        return False
    w0 = rs.w0
    w0J = ParabolicSubset(rs, J).longest
    return all(
        w0(rs.simple_roots[i - 1]) == w0J(rs.simple_roots[i - 1]) for i in J
    )


def property_two(rs: RootSystem, J) -> bool:
    """No isolated root of J admits a -w0-fixed neighbor of the same length
    that is orthogonal to the rest of J.

    A root of J is isolated when it pairs to zero with every other root of J.
    """
    J = frozenset(J)
    simple = rs.simple_roots
    dp = delta0_permutation(rs)

    def pairing(a, b):
        return rs.pair(simple[a - 1], simple[b - 1])

    for i in J:
        if any(pairing(i, j) != 0 for j in J if j != i):
            continue  # not isolated
        for b in range(1, rs.rank + 1):
            if b == i:
                continue
            if pairing(b, b) != pairing(i, i) or pairing(b, i) == 0:
                continue
            if any(pairing(b, j) != 0 for j in J if j != i):
                continue
            if dp[b - 1] == b:
                return False
    return True


def subsets_with_property_one(rs: RootSystem) -> frozenset[frozenset[int]]:
    """All subsets of the simple roots with Property (1)."""
    return _filtered_subsets(rs, require_two=False)


def classifying_subsets(rs: RootSystem) -> frozenset[frozenset[int]]:
    """All subsets with both properties; these classify the unique-maximal
    involutions via J |-> w0 * w0J."""
    return _filtered_subsets(rs, require_two=True)


def _filtered_subsets(rs, require_two):
    key = ("subsets", require_two)
    cached = rs._memo.get(key)
    if cached is None:
        n = rs.rank
        if n > 8:
            raise GuardError(f"rank {n} > 8: 2^rank subsets")
        out = []
        for mask in range(1 << n):
            J = frozenset(i + 1 for i in range(n) if mask >> i & 1)
            if property_one(rs, J) and (not require_two or property_two(rs, J)):
                out.append(J)
        cached = rs._memo[key] = frozenset(out)
    return cached


def subset_involution(rs: RootSystem, J) -> WeylElement:
    """The element w0 * w0J attached to a subset of simple roots."""
    return rs.w0 * ParabolicSubset(rs, J).longest


def fixed_simple_roots(m: WeylElement) -> frozenset[int]:
    """Indices of the simple roots fixed by an involution."""
    if not m.is_involution():
        raise ValueError("fixed_simple_roots expects an involution")
    rs = m.rs
    return frozenset(
        i + 1 for i, a in enumerate(rs.simple_roots) if m(a) == a
    )


def catalog_subsets(t) -> frozenset[frozenset[int]]:
    """The per-family catalog of classifying subsets, stored as data.

    Includes the two trivial subsets (empty and full).  The parametric
    rules below reproduce the known classification; the verification suite
    checks them against the property-based enumeration.
    """
    t = t if isinstance(t, CartanType) else CartanType.from_string(t)
    n = t.rank
    full = frozenset(range(1, n + 1))
    out = {frozenset(), full}
    fam = t.family
    if fam == "A":
        for l in range(1, (n + 1) // 2):
            out.add(frozenset(range(l + 1, n - l + 1)))
    elif fam in ("B", "C"):
        for l in range(2, n + 1):
            out.add(frozenset(range(l, n + 1)))
        for l in range(1, (n - 2) // 2 + 1):
            out.add(frozenset(range(1, 2 * l, 2)) | frozenset(range(2 * l + 1, n + 1)))
        out.add(frozenset(range(1, n + 1, 2)))  # all odd indices
    elif fam == "D":
        m = n // 2
        for l in range(2, m + 1):
            out.add(frozenset(range(2 * l - 1, n + 1)))
        for l in range(1, m):
            out.add(frozenset(range(1, 2 * l, 2)) | frozenset(range(2 * l + 1, n + 1)))
        if n % 2 == 0:
            out.add(frozenset(range(1, n, 2)))                     # odds up to n-1
            out.add(frozenset(range(1, n - 2, 2)) | {n})           # odds up to n-3, plus n
        else:
            out.add(frozenset(range(1, n - 1, 2)))                 # odds up to n-2
    elif fam == "E":
        catalog = {
            6: [{1, 3, 4, 5, 6}, {3, 4, 5}],
            7: [{2, 3, 4, 5, 6, 7}, {2, 3, 4, 5, 7}, {2, 3, 4, 5}, {2, 5, 7}],
            8: [{1, 2, 3, 4, 5, 6, 7}, {2, 3, 4, 5, 6, 7}, {2, 3, 4, 5}],
        }[n]
        out.update(frozenset(J) for J in catalog)
    elif fam == "F":
        out.update([frozenset({1, 2, 3}), frozenset({2, 3, 4}), frozenset({2, 3})])
    elif fam == "G":
        out.update([frozenset({1}), frozenset({2})])
    return frozenset(out)


def _fmt(w: WeylElement) -> str:
    if w.rs.cartan_type.family == "A":
        from .permutations import weyl_to_permutation

        return weyl_to_permutation(w).cycle_string()
    return element_to_word_str(w)


def _fmt_subset(J) -> str:
    return "{" + " ".join(map(str, sorted(J))) + "}"


def verify_unique_max_classification(t, allow_large: bool = False) -> Report:
    """Check that the unique-maximal involutions, the property-based subset
    enumeration, and the stored catalog all produce the same set."""
    rs = build_root_system(t)
    rep = Report(f"unique-max classification {rs.cartan_type}")
    computed = unique_max_involutions(rs, allow_large=allow_large).members
    from_props = frozenset(
        subset_involution(rs, J) for J in classifying_subsets(rs)
    )
    from_catalog = frozenset(
        subset_involution(rs, J) for J in catalog_subsets(rs.cartan_type)
    )
    subject = str(rs.cartan_type)
    diff = computed ^ from_props
    rep.add(
        subject,
        "computed-set-equals-property-enumeration",
        "EXACT",
        not diff,
        None if not diff else _fmt(next(iter(diff))),
    )
    diff = from_props ^ from_catalog
    rep.add(
        subject,
        "property-enumeration-equals-catalog",
        "EXACT",
        not diff,
        None if not diff else _fmt(next(iter(diff))),
    )
    rep.add(subject, "member-count", "EXACT", len(computed) == len(from_catalog))
    return rep


def verify_subset_conjugacy(t) -> Report:
    """For subsets J, K with Property (1): the attached involutions are
    conjugate exactly when some -w0-symmetric element maps J onto K."""
    rs = build_root_system(t)
    if rs.cartan_type.weyl_order > STRONG_CONJ_LIMIT:
        raise GuardError(f"|W({rs.cartan_type})| > {STRONG_CONJ_LIMIT}")
    rep = Report(f"subset conjugacy {rs.cartan_type}")
    subsets = sorted(subsets_with_property_one(rs), key=sorted)
    symmetric = [
        w for w in enumerate_weyl_group(rs) if delta0_on_element(w) == w
    ]
    simple = rs.simple_roots
    subject = str(rs.cartan_type)
    for J in subsets:
        class_J = conjugacy_class(subset_involution(rs, J)).elements
        roots_J = [simple[i - 1] for i in sorted(J)]
        for K in subsets:
            conj = subset_involution(rs, K) in class_J
            target = {simple[i - 1] for i in K}
            mapped = any(
                {w(a) for a in roots_J} == target for w in symmetric
            )
            rep.add(
                subject,
                f"conjugacy-matches-mapping {_fmt_subset(J)}->{_fmt_subset(K)}",
                "EXACT",
                conj == mapped,
                None if conj == mapped else f"conjugate={conj} mapped={mapped}",
            )
    return rep


def verify_twisted_minimum(t, allow_large: bool = False) -> Report:
    """Each unique-maximal involution m gives w0*m as the unique minimal
    length element of its twisted class under the -w0 diagram symmetry."""
    rs = build_root_system(t)
    rep = Report(f"twisted minimum {rs.cartan_type}")
    delta = delta0_permutation(rs)
    subject = str(rs.cartan_type)
    for m in sorted(
        unique_max_involutions(rs, allow_large=allow_large).members,
        key=lambda w: (w.length, w.rows),
    ):
        u = rs.w0 * m
        tc = twisted_class(u, delta, allow_large=allow_large)
        ok = tc.min_length == (u,)
        rep.add(
            subject,
            f"unique-twisted-minimum m={_fmt(m)}",
            "EXACT",
            ok,
            None if ok else ", ".join(_fmt(v) for v in tc.min_length),
        )
    return rep


def verify_coxeter_bound(t, allow_large: bool = False) -> Report:
    """Every Coxeter element sits below every nonidentity unique-maximal
    involution in the Bruhat order."""
    rs = build_root_system(t)
    rep = Report(f"coxeter bound {rs.cartan_type}")
    members = unique_max_involutions(rs, allow_large=allow_large).members
    cox = sorted(coxeter_elements(rs), key=lambda w: w.rows)
    subject = str(rs.cartan_type)
    for m in sorted(members, key=lambda w: (w.length, w.rows)):
        if m.is_identity:
            continue
        bad = [c for c in cox if not bruhat_leq(c, m)]
        rep.add(
            subject,
            f"coxeter-elements-below m={_fmt(m)}",
            "EXACT",
            not bad,
            None if not bad else _fmt(bad[0]),
        )
    return rep


def verify_ascent_classes(t, allow_large: bool = False) -> Report:
    """Two facts about every conjugacy class: each element admits an ascent
    chain to a maximal-length element, and all maximal-length elements are
    pairwise linked by strong-conjugation chains."""
    rs = build_root_system(t)
    rep = Report(f"ascent suite {rs.cartan_type}")
    lengths = _length_table(rs, allow_large)
    inverses = _inverse_table(rs)
    group = enumerate_weyl_group(rs, allow_large)
    subject = str(rs.cartan_type)
    for c in conjugacy_classes(rs, allow_large):
        label = f"class-of-{_fmt(c.representative)}"
        # reverse closure: which elements reach the maximal stratum by ascents
        reached = {w.rows for w in c.max_length}
        frontier = list(c.max_length)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(rs.rank):
                    u = rs._mul_gen_left(i, rs._mul_gen_right(v, i))
                    if u.length <= v.length and u.rows not in reached:
                        reached.add(u.rows)
                        nxt.append(u)
            frontier = nxt
        missing = [w for w in c.elements if w.rows not in reached]
        rep.add(
            subject,
            f"{label} ascent-to-maximal",
            "EXACT",
            not missing,
            None if not missing else _fmt(missing[0]),
        )
        # strong-conjugation connectivity on the maximal stratum
        stratum = {w.rows: w for w in c.max_length}
        if len(stratum) > 1:
            edges = {rows: set() for rows in stratum}
            for u in c.max_length:
                for v in _strong_conj_neighbors(rs, u, group, inverses, lengths):
                    if v.rows in stratum:
                        edges[u.rows].add(v.rows)
            ok = all(
                _covers(edges, start, set(stratum)) for start in stratum
            )
            rep.add(subject, f"{label} maxima-strongly-linked", "EXACT", ok)
    return rep


def _covers(edges, start, universe) -> bool:
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for v in edges[u]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen == universe
