from __future__ import annotations

import itertools
import math

import pytest

from repkit.errors import GroupAxiomError, HomomorphismError, SubgroupError
from repkit.group import (
    GroupHom,
    conjugacy_classes,
    constructors,
    cosets_and_action,
    cyclic,
    dihedral,
    element_order_and_exponent,
    hom_kernel_image,
    is_normal,
    permutation_sign,
    product,
    quotient_group,
    subgroup_closure,
    symmetric,
    validate_group,
)

from oracles import permutation_compose


def z3_table():
    return [[(a + b) % 3 for b in range(3)] for a in range(3)]


def test_validate_examples():
    G = validate_group(["e", "g"], [[0, 1], [1, 0]], "e", "Z2")
    assert G.order == 2
    with pytest.raises(GroupAxiomError) as err:
        validate_group(["e", "g"], [[0, 1], [1, 1]], "e")
    assert err.value.axiom == "row_permutation"
    bad = z3_table()
    bad[1][1] = 0
    with pytest.raises(GroupAxiomError) as err:
        validate_group(["0", "1", "2"], bad, "0")
    assert err.value.axiom == "associativity"
    a, b, c = err.value.witness
    # the reported triple really violates associativity
    assert bad[bad[a][b]][c] != bad[a][bad[b][c]]


def test_identity_failure():
    with pytest.raises(GroupAxiomError) as err:
        validate_group(["a", "b"], [[0, 1], [1, 0]], "b")
    assert err.value.axiom == "identity"


@pytest.mark.parametrize("G", [cyclic(4), symmetric(3), product(cyclic(2), cyclic(2))], ids=lambda G: G.name)
def test_single_entry_fuzz(G):
    # changing any one entry of a Cayley table always breaks some axiom
    n = G.order
    for i, j in itertools.product(range(n), repeat=2):
        for v in range(n):
            if v == G.table[i][j]:
                continue
            table = [list(row) for row in G.table]
            table[i][j] = v
            with pytest.raises(GroupAxiomError):
                validate_group(G.labels, table, G.identity)


def test_symmetric_table_matches_composition():
    G = symmetric(3)
    perms = G.permutations
    for a in range(6):
        for b in range(6):
            assert perms[G.mul(a, b)] == permutation_compose(perms[a], perms[b])


def brute_classes(G):
    seen, out = set(), []
    for x in range(G.order):
        if x in seen:
            continue
        cls = {G.mul(G.mul(w, x), G.inv(w)) for w in range(G.order)}
        seen |= cls
        out.append(tuple(sorted(cls)))
    return out


@pytest.mark.parametrize("G", [cyclic(5), symmetric(3), symmetric(4), dihedral(4), dihedral(5)], ids=lambda G: G.name)
def test_conjugacy_classes_against_brute_force(G):
    assert sorted(conjugacy_classes(G)) == sorted(brute_classes(G))
    assert conjugacy_classes(G)[0] == (G.identity,)


def test_conjugacy_examples():
    assert len(conjugacy_classes(cyclic(6))) == 6
    assert sorted(len(c) for c in conjugacy_classes(symmetric(3))) == [1, 2, 3]


def test_subgroup_closure_examples():
    S3 = symmetric(3)
    assert subgroup_closure(S3, []).elements == (0,)
    cyc = S3.index("(1 2 3)")
    c = subgroup_closure(S3, [cyc])
    assert len(c.elements) == 3 and c.is_normal
    c = subgroup_closure(S3, [S3.index("(1 2)")])
    assert len(c.elements) == 2 and not c.is_normal
    assert not is_normal(S3, c.elements)


def test_cosets_examples():
    S3 = symmetric(3)
    whole = cosets_and_action(S3, range(6))
    assert len(whole.cosets) == 1
    assert all(p == (0,) for p in whole.action.perms)
    single = cosets_and_action(S3, [0])
    assert len(single.cosets) == 6
    assert all(single.action.fixed_points(x) == 0 for x in range(1, 6))
    H = subgroup_closure(S3, [S3.index("(1 2)")]).elements
    data = cosets_and_action(S3, H)
    assert len(data.cosets) == 3
    assert len(set(data.action.perms)) == 6  # faithful
    for x in range(6):
        for y in range(6):
            px, py, pxy = data.action.perms[x], data.action.perms[y], data.action.perms[S3.mul(x, y)]
            assert pxy == tuple(px[py[i]] for i in range(3))
    with pytest.raises(SubgroupError):
        cosets_and_action(S3, [0, 1, 2])


def test_quotient_examples():
    S3 = symmetric(3)
    Q, _ = quotient_group(S3, range(6))
    assert Q.order == 1
    Q, proj = quotient_group(S3, [0])
    assert Q.order == 6 and proj.is_injective()
    A3 = subgroup_closure(S3, [S3.index("(1 2 3)")]).elements
    Q, proj = quotient_group(S3, A3)
    assert Q.order == 2 and proj.kernel() == A3
    with pytest.raises(SubgroupError):
        quotient_group(S3, subgroup_closure(S3, [1]).elements)


def test_hom_examples():
    S3, Z2 = symmetric(3), cyclic(2)
    ident = GroupHom(S3, S3, tuple(range(6)))
    assert hom_kernel_image(ident) == ((0,), tuple(range(6)))
    sign = GroupHom(S3, Z2, tuple(0 if permutation_sign(p) == 1 else 1 for p in S3.permutations))
    kernel, image = hom_kernel_image(sign)
    assert len(kernel) == 3 and image == (0, 1)
    const = GroupHom(S3, Z2, (0,) * 6)
    assert hom_kernel_image(const) == (tuple(range(6)), (0,))
    with pytest.raises(HomomorphismError) as err:
        GroupHom(Z2, S3, (0, 3))
    assert err.value.witness


def test_constructors_examples():
    T = constructors("cyclic", 1)
    assert T.order == 1
    S3 = constructors("symmetric", 3)
    assert S3.order == 6 and len(S3.conjugacy_classes) == 3
    V = constructors("product", cyclic(2), cyclic(2))
    assert V.order == 4 and all(V.inv(x) == x for x in range(4))


def test_orders_and_exponent():
    S3 = symmetric(3)
    orders, exp = element_order_and_exponent(S3)
    assert orders[S3.identity] == 1
    assert orders[S3.index("(1 2 3)")] == 3
    assert exp == 6 == S3.exponent
    for G in (cyclic(12), dihedral(6), symmetric(4)):
        orders, exp = element_order_and_exponent(G)
        assert exp == math.lcm(*orders)
        for x, k in enumerate(orders):
            assert G.power(x, k) == G.identity


def test_generators_generate():
    for G in (cyclic(6), symmetric(4), dihedral(5), product(cyclic(2), cyclic(3))):
        assert len(subgroup_closure(G, G.generators).elements) == G.order
