#!/usr/bin/env python3
"""
Built-in finite categories: the walking arrow, chains, cyclic and symmetric
groups, the Klein four-group, semidirect products and the skeleton of
finite sets on sizes 1..n.
"""
from __future__ import annotations

from itertools import product as cartesian
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics.named_groups import SymmetricGroup
from sympy.combinatorics.permutations import Permutation

from ..base import StructuralError, logger
from .category import FinCategory


def walking_arrow() -> FinCategory:
    """The category 2: objects a, b and a single arrow u: a → b."""
    return FinCategory.declare("2", ["a", "b"], [("u", "a", "b")])


def chain(n: int) -> FinCategory:
    """The poset 0 < 1 < … < n-1 as a category."""
    if n < 1:
        raise StructuralError("chain needs at least one object")
    sep = "" if n <= 10 else "_"
    objects = [f"x{i}" for i in range(n)]
    arrows = [(i, j) for i in range(n) for j in range(i + 1, n)]
    label = {(i, j): f"p{i}{sep}{j}" for i, j in arrows}
    morphisms = [(label[i, j], objects[i], objects[j]) for i, j in arrows]
    composites = {
        (label[j, k], label[i, j]): label[i, k]
        for i, j in arrows for k in range(j + 1, n)
    }
    return FinCategory.declare(f"{n}-chain", objects, morphisms, composites)


def group_from_table(name: str, labels: Sequence[str], table: Sequence[Sequence[int]], object_label: str = "*") -> FinCategory:
    """
    One-object category from a multiplication table.

    ``table[g][f]`` is the index of ``g∘f``. The unit is located by search and
    need not come first. Works for monoids as well as groups.
    """
    n = len(labels)
    if any(len(row) != n for row in table):
        raise StructuralError(f"{name}: multiplication table is not {n}×{n}")
    units = [e for e in range(n) if all(table[e][j] == j and table[j][e] == j for j in range(n))]
    if not units:
        raise StructuralError(f"{name}: multiplication table has no two-sided unit")
    composition = {(g, f): int(table[g][f]) for g in range(n) for f in range(n)}
    return FinCategory(name, [object_label], [0] * n, [0] * n, [units[0]], composition, list(labels))


def cyclic_group(n: int) -> FinCategory:
    """Z_n, written additively with labels 0..n-1."""
    return group_from_table(f"Z{n}", [str(i) for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)])


def klein_four() -> FinCategory:
    """Z₂×Z₂ with elements e, a, b, ab."""
    labels = ["e", "a", "b", "ab"]
    bits = [(0, 0), (1, 0), (0, 1), (1, 1)]
    index = {v: i for i, v in enumerate(bits)}
    table = [[index[((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)] for y in bits] for x in bits]
    return group_from_table("Z2xZ2", labels, table)


def cycle_label(perm: Permutation) -> str:
    """1-based cycle notation, e.g. ``(1234)``; the identity is ``e``."""
    cycles = perm.cyclic_form
    if not cycles:
        return "e"
    return "".join("(" + "".join(str(i + 1) for i in cycle) + ")" for cycle in cycles)


def symmetric_group(n: int) -> FinCategory:
    """
    S_n as a one-object category; elements sorted by array form, so the
    identity comes first. Composition ``g∘f`` applies ``f`` first.
    """
    perms = sorted(SymmetricGroup(n).generate(), key=lambda p: tuple(p.array_form))
    forms = [tuple(p.array_form) for p in perms]
    index = {form: i for i, form in enumerate(forms)}
    table = [[index[tuple(g[f[i]] for i in range(n))] for f in forms] for g in forms]
    logger.debug("S%d: %d elements", n, len(perms))
    return group_from_table(f"S{n}", [cycle_label(p) for p in perms], table)


def semidirect_product(n: int, k: int, a: int) -> FinCategory:
    """
    Z_n ⋊ Z_k where the generator of Z_k acts on Z_n by x ↦ a·x.

    Elements ``(x, y)`` are labelled ``n{x}h{y}`` and multiply as
    ``(x1, y1)(x2, y2) = (x1 + a^y1·x2, y1 + y2)``.
    """
    if pow(a, k, n) != 1 % n:
        raise StructuralError(f"x ↦ {a}x does not have order dividing {k} on Z{n}")
    elems = [(x, y) for x in range(n) for y in range(k)]
    index = {v: i for i, v in enumerate(elems)}
    table = [
        [index[((x1 + pow(a, y1, n) * x2) % n, (y1 + y2) % k)] for (x2, y2) in elems]
        for (x1, y1) in elems
    ]
    return group_from_table(f"Z{n}x|Z{k}", [f"n{x}h{y}" for x, y in elems], table)


class FinSetSkeleton(FinCategory):
    """Skeleton of finite sets: objects are sizes, morphisms explicit functions."""

    sizes: Tuple[int, ...]
    functions: Tuple[Tuple[int, ...], ...]

    def size(self, x: int) -> int:
        return self.sizes[x]

    def function(self, f: int) -> Tuple[int, ...]:
        return self.functions[f]

    def morphism_for(self, a: int, b: int, values: Sequence[int]) -> int:
        return self._function_index[(a, b, tuple(values))]


def finset_skeleton(max_size: int = 3, min_size: int = 1) -> FinSetSkeleton:
    """All functions between the sets {0..k-1} for min_size ≤ k ≤ max_size."""
    sizes = list(range(min_size, max_size + 1))
    morphisms: List[Tuple[int, int, Tuple[int, ...]]] = []
    for a in range(len(sizes)):
        for b in range(len(sizes)):
            for values in cartesian(range(sizes[b]), repeat=sizes[a]):
                morphisms.append((a, b, tuple(values)))
    index: Dict[Tuple[int, int, Tuple[int, ...]], int] = {m: i for i, m in enumerate(morphisms)}
    identities = [index[(a, a, tuple(range(sizes[a])))] for a in range(len(sizes))]
    id_set = set(identities)
    labels = [
        f"id_{sizes[a]}" if i in id_set else f"{sizes[a]}->{sizes[b]}[{''.join(map(str, v))}]"
        for i, (a, b, v) in enumerate(morphisms)
    ]
    table = {}
    for f, (a, b, fv) in enumerate(morphisms):
        for g, (b2, c, gv) in enumerate(morphisms):
            if b2 == b:
                table[(g, f)] = index[(a, c, tuple(gv[i] for i in fv))]
    cat = FinSetSkeleton(
        f"FinSet{max_size}",
        [str(s) for s in sizes],
        [m[0] for m in morphisms],
        [m[1] for m in morphisms],
        identities,
        table,
        labels,
    )
    cat.sizes = tuple(sizes)
    cat.functions = tuple(m[2] for m in morphisms)
    cat._function_index = index
    return cat
