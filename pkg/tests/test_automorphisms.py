import pytest

import reference_tables as P
from gray16 import (NotHomomorphism, aut_as_group, automorphism_from_images, automorphism_group,
                    automorphism_order, automorphisms_of_order, build_builtin, identity_automorphism,
                    inner_automorphism, inner_automorphism_group, is_isomorphic)
from gray16.automorphisms import dumps_automorphism, loads_automorphism, parse_images

TABLES = {"C4": P.AUT_C4, "C8": P.AUT_C8, "K8": P.AUT_K8, "D8": P.AUT_D8}


@pytest.mark.parametrize("name,size,shape", [
    ("C4", 2, "C2"), ("C8", 4, "K4"), ("K8", 8, "D8"), ("D8", 8, "D8"), ("K4", 6, None),
    ("Q8", 24, None), ("E8", 168, None), ("C2", 1, None),
])
def test_aut_sizes_and_shapes(name, size, shape):
    G = build_builtin(name)
    assert len(automorphism_group(G)) == size
    if shape:
        assert is_isomorphic(aut_as_group(G), build_builtin(shape)) is not None


@pytest.mark.parametrize("name", list(TABLES))
def test_automorphism_tables(name):
    G = build_builtin(name)
    seen = set()
    for images, order in TABLES[name]:
        f = automorphism_from_images(G, images)
        assert f.is_valid()
        assert automorphism_order(f) == order
        seen.add(f)
    # the table lists the whole group
    assert seen == set(automorphism_group(G))


@pytest.mark.parametrize("name", ["C8", "K8", "D8", "Q8", "K4"])
def test_closure_and_inverses(name):
    G = build_builtin(name)
    auts = set(automorphism_group(G))
    assert identity_automorphism(G) in auts
    for f in auts:
        assert f.inverse() in auts
        assert f.compose(f.inverse()).is_identity
        for g in auts:
            assert f.compose(g) in auts


@pytest.mark.parametrize("name", ["C4", "K8", "D8", "Q8", "G8", "G10", "G13"])
def test_inner_automorphisms(name):
    G = build_builtin(name)
    inn = set(inner_automorphism_group(G))
    assert inn <= set(automorphism_group(G))
    assert all(f.compose(g) in inn for f in inn for g in inn)
    assert (len(inn) == 1) == G.is_abelian


def test_inner_automorphism_is_conjugation():
    D8 = build_builtin("D8")
    t = inner_automorphism(D8, "y")
    assert t.images() == {"x": "x^3", "y": "y"}
    assert len(inner_automorphism_group(D8)) == 4


def test_non_homomorphism_rejected():
    with pytest.raises(NotHomomorphism):
        automorphism_from_images(build_builtin("C8"), {"x": "x^2"})
    with pytest.raises(NotHomomorphism):
        # y has order 2 but x^3 has order 4
        automorphism_from_images(build_builtin("K8"), {"x": "x", "y": "x^3"})


def test_automorphisms_of_order_two_in_k4():
    assert len(automorphisms_of_order(build_builtin("K4"), 2)) == 3


def test_text_round_trip():
    K8 = build_builtin("K8")
    for f in automorphism_group(K8):
        assert loads_automorphism(K8, dumps_automorphism(f)) == f
    assert parse_images("x->x^3;y->y") == {"x": "x^3", "y": "y"}
