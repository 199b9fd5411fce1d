#!/usr/bin/env python3
"""
Strict factorization systems and variances.

A variance on C is a pair (E, M) of wide subcategories such that both (E, M)
and (M, E) are strict factorization systems. Every morphism then has a
terminating factorization f = fᵐ∘fᵉ and a starting factorization
f = f_e∘f_m; f_t and f_s are their middle objects.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

import numpy as np

from ..base import StructuralError, VarianceError, logger
from ..report import Report


@dataclass(frozen=True)
class WideSubcategory:
    owner: object
    morphisms: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "morphisms", frozenset(int(m) for m in self.morphisms))

    def __contains__(self, f: int) -> bool:
        return f in self.morphisms

    def __len__(self) -> int:
        return len(self.morphisms)

    def __iter__(self):
        return iter(sorted(self.morphisms))

    def missing_identities(self) -> List[int]:
        c = self.owner
        return [x for x in c.objects() if c.identity(x) not in self.morphisms]

    def closure_witness(self) -> Optional[Tuple[int, int]]:
        """A composable pair in the set whose composite leaves it, if any."""
        c = self.owner
        for f in sorted(self.morphisms):
            for g in c.out_of(c.cod(f)):
                if g in self.morphisms and c.compose(g, f) not in self.morphisms:
                    return g, f
        return None

    def require_valid(self, role: str) -> None:
        c = self.owner
        missing = self.missing_identities()
        if missing:
            raise StructuralError(f"{role} is not wide: missing id_{c.object_label(missing[0])}")
        witness = self.closure_witness()
        if witness is not None:
            g, f = witness
            raise StructuralError(
                f"{role} is not closed under composition: "
                f"{c.morphism_label(g)}∘{c.morphism_label(f)} = {c.morphism_label(c.compose(g, f))}"
            )


def wide_subcategory(c, morphisms: Iterable[int] | WideSubcategory) -> WideSubcategory:
    """Wide subcategory from a morphism set, adding every identity."""
    if isinstance(morphisms, WideSubcategory):
        return morphisms
    found = set(int(m) for m in morphisms)
    found.update(c.identity(x) for x in c.objects())
    return WideSubcategory(c, frozenset(found))


def identities(c) -> WideSubcategory:
    return WideSubcategory(c, frozenset(c.identity(x) for x in c.objects()))


def everything(c) -> WideSubcategory:
    return WideSubcategory(c, frozenset(c.morphisms()))


class Factorization(NamedTuple):
    """fᵉ, fᵐ, f_m, f_e and the objects f_s, f_t."""

    term_e: int
    term_m: int
    start_m: int
    start_e: int
    start_obj: int
    term_obj: int


def _factorizations(c, first: frozenset, second: frozenset) -> Dict[int, List[Tuple[int, int]]]:
    """For every f, all (a, b) with a ∈ first, b ∈ second and b∘a = f."""
    second_by_dom: Dict[int, List[int]] = {}
    for b in sorted(second):
        second_by_dom.setdefault(c.dom(b), []).append(b)
    found: Dict[int, List[Tuple[int, int]]] = {f: [] for f in c.morphisms()}
    for a in sorted(first):
        for b in second_by_dom.get(c.cod(a), ()):
            found[c.compose(b, a)].append((a, b))
    return found


def _count_report(c, found, first_name: str, second_name: str) -> Report:
    report = Report(f"strict factorization system ({first_name},{second_name}) on {c.name}")
    for f in c.morphisms():
        report.checked += 1
        pairs = found[f]
        if len(pairs) != 1:
            report.add(
                "factorization-count", (c.morphism_label(f),),
                f"{len(pairs)} factorizations as {second_name}∘{first_name}",
                count=len(pairs),
                factorizations=[(c.morphism_label(a), c.morphism_label(b)) for a, b in pairs],
            )
    return report.finish()


def check_sfs(c, E, M) -> Report:
    """Count factorizations f = m∘e with e ∈ E, m ∈ M; report counts other than one."""
    E, M = wide_subcategory(c, E), wide_subcategory(c, M)
    E.require_valid("E")
    M.require_valid("M")
    return _count_report(c, _factorizations(c, E.morphisms, M.morphisms), "E", "M")


def check_variance(c, E, M) -> Report:
    E, M = wide_subcategory(c, E), wide_subcategory(c, M)
    report = Report(f"variance on {c.name}")
    report.extend(check_sfs(c, E, M), prefix="(E,M) ")
    report.extend(check_sfs(c, M, E), prefix="(M,E) ")
    return report.finish()


@dataclass(frozen=True, eq=False)
class VarianceStruct:
    """A validated variance with its factorization table."""

    owner: object
    E: WideSubcategory
    M: WideSubcategory
    term_e: np.ndarray
    term_m: np.ndarray
    start_m: np.ndarray
    start_e: np.ndarray
    start_obj: np.ndarray
    term_obj: np.ndarray
    name: str = ""
    index_flags: Optional[Tuple[int, ...]] = None
    factor_variances: Tuple["VarianceStruct", ...] = field(default=())

    def factor(self, f: int) -> Factorization:
        if not 0 <= f < self.owner.n_morphisms:
            raise StructuralError(f"{self.owner.name}: unknown morphism index {f}")
        return Factorization(
            int(self.term_e[f]), int(self.term_m[f]), int(self.start_m[f]),
            int(self.start_e[f]), int(self.start_obj[f]), int(self.term_obj[f]),
        )

    def is_covariant(self, f: int) -> bool:
        return f in self.E

    def is_contravariant(self, f: int) -> bool:
        return f in self.M

    def role(self, f: int) -> str:
        """``e``, ``m``, ``id`` or ``mixed`` for display."""
        if self.owner.is_identity(f):
            return "id"
        if f in self.E:
            return "e"
        if f in self.M:
            return "m"
        return "mixed"

    @property
    def e_mask(self) -> np.ndarray:
        mask = np.zeros(self.owner.n_morphisms, dtype=bool)
        mask[sorted(self.E.morphisms)] = True
        return mask

    @property
    def m_mask(self) -> np.ndarray:
        mask = np.zeros(self.owner.n_morphisms, dtype=bool)
        mask[sorted(self.M.morphisms)] = True
        return mask


def _frozen(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def variance_from_tables(c, E, M, term_e, term_m, start_m, start_e, start_obj, term_obj, **extra) -> VarianceStruct:
    """Wrap precomputed tables; callers are responsible for their correctness."""
    return VarianceStruct(
        c, wide_subcategory(c, E), wide_subcategory(c, M),
        _frozen(term_e), _frozen(term_m), _frozen(start_m),
        _frozen(start_e), _frozen(start_obj), _frozen(term_obj), **extra,
    )


def build_variance(c, E, M, name: str = "") -> VarianceStruct:
    """
    Validate (E, M) and populate the factorization table.

    Raises ``VarianceError`` carrying the failing report when either
    factorization system fails.
    """
    E, M = wide_subcategory(c, E), wide_subcategory(c, M)
    E.require_valid("E")
    M.require_valid("M")
    terminating = _factorizations(c, E.morphisms, M.morphisms)
    starting = _factorizations(c, M.morphisms, E.morphisms)
    report = Report(f"variance {name or '?'} on {c.name}")
    report.extend(_count_report(c, terminating, "E", "M"), prefix="(E,M) ")
    report.extend(_count_report(c, starting, "M", "E"), prefix="(M,E) ")
    report.finish()
    if not report.ok:
        raise VarianceError(f"(E, M) is not a variance on {c.name}", report)
    n = c.n_morphisms
    term_e, term_m, start_m, start_e = (np.zeros(n, dtype=np.int64) for _ in range(4))
    start_obj, term_obj = np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64)
    for f in c.morphisms():
        (e, m), = terminating[f]
        term_e[f], term_m[f], term_obj[f] = e, m, c.cod(e)
        (m2, e2), = starting[f]
        start_m[f], start_e[f], start_obj[f] = m2, e2, c.cod(m2)
    logger.debug("variance %s on %s: |E|=%d |M|=%d", name, c.name, len(E), len(M))
    return variance_from_tables(c, E, M, term_e, term_m, start_m, start_e, start_obj, term_obj, name=name)


def factor(v: VarianceStruct, f: int) -> Factorization:
    return v.factor(f)
