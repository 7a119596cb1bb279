import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gray16 import (DegreeMismatch, InvalidExtension, NotNormal, NotTransversal,
                    automorphism_from_images, automorphism_group, automorphisms_of_order,
                    build_builtin, build_extension, classify_order16, coset_decomposition, cyclic,
                    direct_product, extension_equivalent, extension_type, format_extension,
                    generated, identity_automorphism, is_isomorphic, order16_extension,
                    order16_group, parse_extension_literal, semidirect_product,
                    validate_extension_type)
from gray16.automorphisms import automorphism_order
from gray16.extensions import ORDER16_TYPES, conjugation_action

ORDER16 = list(ORDER16_TYPES)


def test_valid_types():
    assert validate_extension_type(extension_type("C8", 2, {"x": "x"}, "e")).valid
    assert validate_extension_type(extension_type("C8", 2, {"x": "x^7"}, "x^4")).valid
    for name in ORDER16:
        assert validate_extension_type(order16_extension(name).type).valid


def test_tau_must_fix_v():
    rep = validate_extension_type(extension_type("C8", 2, {"x": "x^3"}, "x"))
    assert not rep.valid
    assert rep.failures()[0].name == "tau(v) = v"
    assert "x^3" in rep.failures()[0].witness


def test_tau_power_must_be_inner():
    # x -> xy has order 2 on K8 but (K8, 3, ., e) needs tau^3 = id
    rep = validate_extension_type(extension_type("K8", 3, {"x": "xy", "y": "y"}, "e"))
    assert [c.name for c in rep.failures()] == ["tau^n = t_v"]
    with pytest.raises(InvalidExtension) as exc:
        build_extension(extension_type("K8", 3, {"x": "xy", "y": "y"}, "e"))
    assert not exc.value.report.valid


@pytest.mark.parametrize("name,shape", [("G6", "C16"), ("G5", "Q16")])
def test_cyclic_and_quaternion(name, shape):
    G = order16_group(name)
    assert G.order == 16
    if shape == "C16":
        assert is_isomorphic(G, cyclic(16)) is not None
    else:
        # generalized quaternion: one involution and an element of order 8
        assert sorted(G.orders).count(2) == 1 and max(G.orders) == 8 and not G.is_abelian


def test_g7_is_k4_by_c4():
    G7 = build_extension(extension_type("K8", 2, {"x": "x", "y": "y"}, "e")).group
    assert is_isomorphic(G7, direct_product(build_builtin("K8"), cyclic(2, "a"))) is not None
    assert is_isomorphic(G7, direct_product(build_builtin("K4"), cyclic(4, "t"))) is not None


def test_classification():
    groups = classify_order16()
    assert len(groups) == 14
    assert [g.name for g in groups] == ORDER16
    assert is_isomorphic(groups[0].group, direct_product(build_builtin("E8"), cyclic(2, "a"))) is not None
    for A, B in itertools.combinations(groups, 2):
        assert is_isomorphic(A.group, B.group) is None


@pytest.mark.parametrize("name", ORDER16)
def test_extension_structure(name):
    ext = order16_extension(name)
    G, E = ext.group, ext.type
    N = ext.embedding
    assert len(N) * E.degree == G.order
    assert sorted(generated(G, N)) == list(N)
    # conjugation by a restricted to N is tau
    for k in N:
        assert G.conjugate(ext.a, k) == E.tau(k)
    assert G.power(ext.a, E.degree) == E.v


def test_cyclic_complement_extensions_match_catalog():
    cases = {
        "G7": ("K4", {"x": "x", "y": "y"}),
        "G9": ("K4", {"x": "xy", "y": "y"}),
        "G12": ("C4", {"x": "x^3"}),
        "G13": ("C4", {"x": "x"}),
    }
    for name, (base, images) in cases.items():
        G = build_extension(extension_type(base, 4, images, "e")).group
        assert is_isomorphic(G, build_builtin(name)) is not None, name


def test_dihedral_kernels_match_catalog():
    G8 = build_extension(extension_type("D8", 2, {"x": "x^3", "y": "y"}, "e")).group
    G10 = build_extension(extension_type("D8", 2, {"x": "x", "y": "x^2y"}, "e")).group
    assert is_isomorphic(G8, build_builtin("G8")) is not None
    assert is_isomorphic(G10, build_builtin("G10")) is not None


def test_g10_is_c2_by_q8():
    Q8 = build_builtin("Q8")
    C2 = cyclic(2, "a")
    hits = []
    for f in automorphism_group(Q8):
        if automorphism_order(f) > 2:
            continue
        G, _ = semidirect_product(C2, Q8, [identity_automorphism(Q8), f])
        hits.append(is_isomorphic(G, build_builtin("G10")) is not None)
    assert any(hits)


def test_g9_is_c4_by_k4():
    K4 = build_builtin("K4")
    C4 = cyclic(4, "t")
    sigma = automorphism_from_images(K4, {"x": "xy", "y": "y"})
    G, d = semidirect_product(C4, K4, {"t": sigma})
    assert is_isomorphic(G, build_builtin("G9")) is not None
    assert d.split


def test_semidirect_convention():
    # h k h^-1 = psi_h(k)
    C4 = build_builtin("C4")
    C2 = cyclic(2, "y")
    inv = automorphism_from_images(C4, {"x": "x^3"})
    G, d = semidirect_product(C2, C4, {"y": inv})
    assert is_isomorphic(G, build_builtin("D8")) is not None
    y, x = G.element("y"), G.element("x")
    assert G.conjugate(y, x) == G.element("x^3")
    act = conjugation_action(G, d.complement, d.kernel)
    assert act[y] == tuple(d.kernel.index(G.power(x, -i % 4)) for i in range(4))


def test_trivial_action_is_direct_product():
    for H, K in [(cyclic(2, "a"), build_builtin("K8")), (cyclic(4, "t"), build_builtin("K4")),
                 (cyclic(2, "a"), build_builtin("Q8"))]:
        G, d = semidirect_product(H, K, lambda h, K=K: identity_automorphism(K))
        assert is_isomorphic(G, direct_product(H, K)) is not None
        assert d.split


def test_c2_times_k8_is_g7():
    G, _ = semidirect_product(cyclic(2, "a"), build_builtin("K8"),
                              lambda h: identity_automorphism(build_builtin("K8")))
    assert is_isomorphic(G, build_builtin("G7")) is not None


def test_equivalence():
    E = extension_type("C8", 2, {"x": "x^3"}, "e")
    ok, iso = extension_equivalent(E, E)
    assert ok and iso is not None
    ok, _ = extension_equivalent(E, extension_type("C8", 2, {"x": "x^5"}, "e"))
    assert not ok
    with pytest.raises(DegreeMismatch):
        extension_equivalent(E, extension_type("C8", 4, {"x": "x"}, "e"))


def test_order_two_k4_actions_all_equivalent():
    K4 = build_builtin("K4")
    types = [extension_type(K4, 4, f, "e") for f in automorphisms_of_order(K4, 2)]
    assert len(types) == 3
    for A, B in itertools.combinations(types, 2):
        assert extension_equivalent(A, B)[0]
        assert is_isomorphic(build_extension(A).group, build_extension(B).group) is not None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["C4", "K4", "C8"]), st.data())
def test_equivalent_types_give_isomorphic_groups(base, data):
    N = build_builtin(base)
    auts = automorphism_group(N)
    tau = data.draw(st.sampled_from(auts))
    phi = data.draw(st.sampled_from(auts))
    n = 2
    if not tau.power(n).is_identity:
        return
    E1 = extension_type(N, n, tau, "e")
    E2 = extension_type(N, n, phi.compose(tau).compose(phi.inverse()), "e")
    ok, _ = extension_equivalent(E1, E2)
    assert ok
    assert is_isomorphic(build_extension(E1).group, build_extension(E2).group) is not None


def test_coset_decompositions():
    G11 = build_builtin("G11")
    K8 = range(8)
    assert not coset_decomposition(G11, K8, ["e", "a"]).split
    assert coset_decomposition(build_builtin("G8"), K8, ["e", "a"]).split
    G = build_builtin("D8")
    d = coset_decomposition(G, range(G.order), ["e"])
    assert d.split and d.factor(0) == (0, 0)


def test_coset_decomposition_errors():
    D8 = build_builtin("D8")
    with pytest.raises(NotNormal):
        coset_decomposition(D8, ["e", "y"], ["e", "x", "x^2", "x^3"])
    with pytest.raises(NotTransversal):
        coset_decomposition(D8, ["e", "x", "x^2", "x^3"], ["e", "x"])
    with pytest.raises(NotTransversal):
        coset_decomposition(D8, ["e", "x", "x^2", "x^3"], ["e"])


@pytest.mark.parametrize("name", ORDER16)
def test_factor_is_bijection(name):
    d = order16_extension(name).decomposition()
    G = d.whole
    pairs = {d.factor(g) for g in G}
    assert len(pairs) == G.order == len(d.complement) * len(d.kernel)
    assert d.factor(0) == (0, 0)
    assert all(d.compose(*d.factor(g)) == g for g in G)
    # split exactly when a^n = e
    assert d.split == (order16_extension(name).type.v == 0)


def test_literal_round_trip():
    for name in ORDER16:
        E = order16_extension(name).type
        again = parse_extension_literal(format_extension(E))
        assert again.base.name == E.base.name and again.degree == E.degree
        assert again.tau.map == E.tau.map and again.v == E.v
    with pytest.raises(ValueError):
        parse_extension_literal("(N=K8, n=two)")
