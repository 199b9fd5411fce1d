from pathlib import Path

import pytest
from hypothesis import strategies as st

from catv.fincat import chain, cyclic_group, klein_four, symmetric_group, walking_arrow
from catv.mixfun import SetMap, SetValuedMixedFunctor, hom_functor
from catv.variance import covariant_variance

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def klein():
    return klein_four()


@pytest.fixture(scope="session")
def arrow():
    return walking_arrow()


@pytest.fixture(scope="session")
def chain3():
    return chain(3)


@pytest.fixture(scope="session")
def hom_s3(s3):
    return hom_functor(s3)


@pytest.fixture(scope="session")
def arrow_cov(arrow):
    return covariant_variance(arrow)


def arrow_functor(data, v, name="F", max_size=3):
    """A random functor from the walking arrow into finite sets, of either pure variance."""
    c = v.owner
    sa = data.draw(st.integers(1, max_size), label=f"{name}(a)")
    sb = data.draw(st.integers(1, max_size), label=f"{name}(b)")
    src, dst = (sb, sa) if len(v.E) == c.n_objects else (sa, sb)
    u = data.draw(st.lists(st.integers(0, dst - 1), min_size=src, max_size=src), label=f"{name}(u)")
    maps = [None] * c.n_morphisms
    maps[c.identity(0)] = SetMap.identity(sa)
    maps[c.identity(1)] = SetMap.identity(sb)
    maps[c.find_morphism("u")] = SetMap.of(u, dst)
    return SetValuedMixedFunctor(v, [sa, sb], maps, name=name)


def permutation_power(perm, k):
    out = list(range(len(perm)))
    for _ in range(k):
        out = [perm[i] for i in out]
    return out


def permutation_order(perm):
    k, cur = 1, list(perm)
    while cur != list(range(len(perm))):
        cur = [perm[i] for i in cur]
        k += 1
    return k
