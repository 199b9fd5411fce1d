#!/usr/bin/env python3
"""
Exhaustive search for variances, normality tests and the positive-integer
prime-partition demo.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import factorint

from ..base import StructuralError, logger
from ..config import resolve_cap
from ..fincat import generated_morphisms
from .core import _count_report, _factorizations


@dataclass
class VarianceSearch:
    """Outcome of ``enumerate_variances``; ``complete`` is False when the cap cut the search."""

    pairs: List[Tuple[frozenset, frozenset]] = field(default_factory=list)
    complete: bool = True
    subcategories: int = 0
    candidates: int = 0


def _canonical(s: frozenset) -> Tuple[int, Tuple[int, ...]]:
    return (len(s), tuple(sorted(s)))


def enumerate_wide_subcategories(c, cap: Optional[int] = None) -> Tuple[List[frozenset], bool]:
    """
    All composition-closed wide subcategories by closure-join search.

    For a one-object group category these are exactly the subgroups. Returns
    the canonically sorted list and whether the search finished under the cap.
    """
    limit = resolve_cap(cap)
    base = generated_morphisms(c, ())
    found = {base}
    queue = deque([base])
    complete = True
    while queue and complete:
        current = queue.popleft()
        for f in c.morphisms():
            if f in current:
                continue
            joined = generated_morphisms(c, current | {f})
            if joined not in found:
                if len(found) >= limit:
                    complete = False
                    logger.warning("wide-subcategory search on %s stopped at cap %d", c.name, limit)
                    break
                found.add(joined)
                queue.append(joined)
    return sorted(found, key=_canonical), complete


def is_variance_pair(c, E: frozenset, M: frozenset) -> bool:
    if not _count_report(c, _factorizations(c, E, M), "E", "M").ok:
        return False
    return _count_report(c, _factorizations(c, M, E), "M", "E").ok


def enumerate_variances(
    c,
    cap: Optional[int] = None,
    e_size: Optional[int] = None,
    m_size: Optional[int] = None,
) -> VarianceSearch:
    """
    Every variance (E, M) on ``c``, duplicate-free and canonically ordered.

    Candidate pairs must meet in identities only; on one-object categories
    |E|·|M| must equal the number of morphisms, which for groups is the
    Lagrange-style count that prunes most pairs before any factorization is
    counted.
    """
    limit = resolve_cap(cap)
    subs, complete = enumerate_wide_subcategories(c, cap=limit)
    ids = generated_morphisms(c, ())
    n = c.n_morphisms
    one_object = c.n_objects == 1
    search = VarianceSearch(complete=complete, subcategories=len(subs))
    for E in subs:
        if e_size is not None and len(E) != e_size:
            continue
        if one_object and n % len(E):
            continue
        for M in subs:
            if m_size is not None and len(M) != m_size:
                continue
            if one_object and len(E) * len(M) != n:
                continue
            if E & M != ids:
                continue
            search.candidates += 1
            if search.candidates > limit:
                search.complete = False
                logger.warning("variance search on %s stopped at cap %d", c.name, limit)
                return search
            if is_variance_pair(c, E, M):
                search.pairs.append((E, M))
    logger.info("%s: %d variance(s) among %d candidate pair(s)", c.name, len(search.pairs), search.candidates)
    return search


def is_normal_subgroup(c, H: Iterable[int]) -> bool:
    """Conjugation stability g∘h∘g⁻¹ ∈ H on a one-object group category."""
    H = frozenset(H)
    for g in c.morphisms():
        g_inv = c.inverse(g)
        if g_inv is None:
            raise StructuralError(f"{c.name}: {c.morphism_label(g)} is not invertible")
        for h in H:
            if c.compose_path(g, h, g_inv) not in H:
                return False
    return True


def factor_positive_integer(n: int, e_primes: Sequence[int]) -> Tuple[int, int]:
    """
    Split n = m·e where e collects the prime powers of ``e_primes`` and m the
    rest: the variance of the multiplicative monoid induced by a partition of
    the primes, evaluated on one integer.
    """
    if n < 1:
        raise StructuralError(f"expected a positive integer, got {n}")
    chosen = set(int(p) for p in e_primes)
    e = m = 1
    for p, k in factorint(n).items():
        if p in chosen:
            e *= p ** k
        else:
            m *= p ** k
    return e, m
