#!/usr/bin/env python3
"""Extending a lift given on a generating subgraph to a whole functor."""
from __future__ import annotations

from collections import deque
from typing import Dict, Mapping, Sequence

from ..base import LiftError, logger
from ..fincat import PlainFunctor, Subgraph, is_faithful, is_generating


def componentwise_lift(
    Fth: PlainFunctor,
    L: PlainFunctor,
    gens: Subgraph,
    mor_values: Mapping[int, int],
    obj_values: Sequence[int],
    name: str = "S",
) -> PlainFunctor:
    """
    The unique S: B → C with Fth∘S = L that agrees with ``mor_values`` on the
    generators, for a faithful Fth: C → D and L: B → D.
    """
    B, C = L.source, Fth.source
    if Fth.target is not L.target:
        raise LiftError("Fth and L land in different categories")
    if not is_generating(B, gens):
        raise LiftError(f"the subgraph does not generate {B.name}", witness=len(gens))
    if not is_faithful(Fth):
        raise LiftError(f"{Fth.name or 'Fth'} is not faithful")
    if len(obj_values) != B.n_objects:
        raise LiftError(f"{len(obj_values)} object values for {B.n_objects} objects")
    for x in B.objects():
        if Fth.on_object(obj_values[x]) != L.on_object(x):
            raise LiftError(f"Fth(S0({B.object_label(x)})) != L({B.object_label(x)})", witness=(B.object_label(x),))
    for f in gens:
        s = mor_values.get(f)
        label = B.morphism_label(f)
        if s is None:
            raise LiftError(f"no value given on the generator {label}", witness=(label,))
        if C.dom(s) != obj_values[B.dom(f)] or C.cod(s) != obj_values[B.cod(f)]:
            raise LiftError(f"S0({label}) has the wrong endpoints", witness=(label,))
        if Fth.on_morphism(s) != L.on_morphism(f):
            raise LiftError(f"Fth(S0({label})) != L({label})", witness=(label,))

    lifted: Dict[int, int] = {B.identity(x): C.identity(obj_values[x]) for x in B.objects()}
    by_dom: Dict[int, list] = {}
    for g in gens:
        by_dom.setdefault(B.dom(g), []).append(g)
    queue = deque(sorted(lifted))
    while queue:
        h = queue.popleft()
        for g in by_dom.get(B.cod(h), ()):
            k = B.compose(g, h)
            value = C.compose(mor_values[g], lifted[h])
            known = lifted.get(k)
            if known is None:
                lifted[k] = value
                queue.append(k)
            elif known != value:
                raise LiftError(f"two lifts of {B.morphism_label(k)} disagree", witness=(B.morphism_label(k),))
    logger.debug("lifted %d morphisms from %d generators", len(lifted), len(gens))
    return PlainFunctor(B, C, obj_values, [lifted[f] for f in B.morphisms()], name=name)
