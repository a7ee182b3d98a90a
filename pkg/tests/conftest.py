"""Shared fixtures and independent brute-force oracles.

The oracles re-derive expected values straight from raw presentation data
(total scans, exhaustive enumeration of functors), never through the code
paths they are used to check.
"""

from __future__ import annotations

from itertools import product as iproduct

import pytest

import basecat as bc
from basecat.corpus import build_corpus, fixtures_dir, group_category
from basecat.dsl import elaborate, parse


@pytest.fixture(scope="session")
def env():
    path = fixtures_dir() / "core.bcat"
    return elaborate(parse(path.read_text(), str(path)))


@pytest.fixture(scope="session")
def corpus():
    return build_corpus(seed=7)


@pytest.fixture
def one():
    return bc.validate_category("One", ["*"], [])


@pytest.fixture
def two():
    return bc.validate_category("Two", ["X", "Y"], [("f", "X", "Y")])


@pytest.fixture
def z2():
    return group_category("Z2")


@pytest.fixture
def z3():
    return group_category("Z3")


def oracle_assoc_violations(
    arrows: list[tuple[str, str, str]],
    table: dict[tuple[str, str], str],
) -> list[tuple[str, str, str]]:
    """All triples (h, g, f) with h(gf) != (hg)f, by raw triple scan."""
    dom = {n: d for n, d, _ in arrows}
    cod = {n: c for n, _, c in arrows}
    out = []
    for h, g, f in iproduct([a[0] for a in arrows], repeat=3):
        if cod[f] != dom[g] or cod[g] != dom[h]:
            continue
        left = table.get((h, table[(g, f)]))
        right = table.get((table[(h, g)], f))
        if left != right:
            out.append((h, g, f))
    return out


def all_functors(src: bc.FinCat, tgt: bc.FinCat):
    """Every functor src -> tgt, by exhaustive enumeration and filtering."""
    objs = list(src.objects)
    mors = [a.name for a in src.arrows]
    for obj_images in iproduct(tgt.objects, repeat=len(objs)):
        obj_map = dict(zip(objs, obj_images))
        candidate_sets = []
        ok = True
        for m in mors:
            images = tgt.hom(obj_map[src.dom(m)], obj_map[src.cod(m)])
            if not images:
                ok = False
                break
            candidate_sets.append(images)
        if not ok:
            continue
        for mor_images in iproduct(*candidate_sets):
            mor_map = dict(zip(mors, mor_images))
            if any(
                mor_map[src.identity[x]] != tgt.identity[obj_map[x]]
                for x in objs
            ):
                continue
            if any(
                tgt.compose[(mor_map[g], mor_map[f])] != mor_map[h]
                for (g, f), h in src.compose.items()
            ):
                continue
            yield bc.FinFunctor("enum", src, tgt, obj_map, mor_map)
