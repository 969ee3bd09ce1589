import itertools
import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from powergraphs.errors import InvalidSpec, NotAGroup, OrderCapExceeded, ParseError
from powergraphs.groups import (
    GroupSpec,
    canonical_relabel,
    classify,
    count_maximal_containing,
    cyclic_subgroup,
    element_order,
    euler_totient,
    exponent,
    from_cayley_table,
    from_permutation_generators,
    generator_class,
    make,
    maximal_cyclic_subgroups,
    maximal_subgroups_of_order_two,
    parse_permutation,
    parse_spec,
    read_cayley_file,
    read_permutation_file,
    relabel,
)

from conftest import element_order_by_powers, quat_mul, quaternion_units


def heisenberg_matrices(p):
    mats = []
    for a, b, c in itertools.product(range(p), repeat=3):
        mats.append(np.array([[1, a, c], [0, 1, b], [0, 0, 1]]))
    return mats


def matrix_order(m, p):
    k, acc = 1, m.copy()
    while not np.array_equal(acc, np.eye(3, dtype=int)):
        acc = acc @ m % p
        k += 1
    return k


# -- table construction ------------------------------------------------------


def test_trivial_group():
    g = from_cayley_table([[0]])
    assert g.order == 1
    assert element_order(g, 0) == 1


def test_z2_table():
    g = from_cayley_table([[0, 1], [1, 0]])
    assert g.order == 2 and element_order(g, 1) == 2


def test_non_latin_table_rejected():
    with pytest.raises(NotAGroup) as info:
        from_cayley_table([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    assert info.value.reason in ("not-latin", "not-associative")


def test_no_identity():
    with pytest.raises(NotAGroup) as info:
        from_cayley_table([[0, 0], [1, 1]])
    assert info.value.reason == "no-identity"


def test_latin_but_not_associative():
    # a loop of order 5 with identity 0 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroup) as info:
        from_cayley_table(table)
    assert info.value.reason == "not-associative"


@pytest.mark.parametrize("bad", [[[0, 1]], [[0, 5], [5, 0]], [], [[0, -1], [-1, 0]]])
def test_malformed_tables(bad):
    with pytest.raises(NotAGroup):
        from_cayley_table(bad)


def test_identity_relabelled_to_zero():
    # element i stands for (i + 1) mod 3, so the identity sits at index 2
    table = [[((i + 1) + (j + 1) - 1) % 3 for j in range(3)] for i in range(3)]
    g = from_cayley_table(table, labels=["one", "two", "zero"])
    assert g.labels[0] == "zero"
    assert list(g.table[0]) == [0, 1, 2]
    assert sorted(g.orders) == [1, 3, 3]


def test_table_is_read_only():
    g = make("cyclic 4")
    with pytest.raises(ValueError):
        g.table[0, 0] = 1


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        from_cayley_table(np.zeros((5, 5), dtype=int), max_order=4)
    with pytest.raises(OrderCapExceeded):
        make("symmetric 7", max_order=1000)


def test_env_order_cap(monkeypatch):
    monkeypatch.setenv("PG_MAX_ORDER", "10")
    with pytest.raises(OrderCapExceeded):
        make("cyclic 11")
    assert make("cyclic 10").order == 10


def test_cayley_file_roundtrip(tmp_path):
    g = make("dihedral 4")
    path = tmp_path / "d4.tbl"
    lines = [str(g.order)] + [" ".join(map(str, row)) for row in g.table]
    path.write_text("\n".join(lines) + "\n")
    h = read_cayley_file(path)
    assert np.array_equal(h.table, g.table)
    assert make(GroupSpec("cayley_file", (str(path),))).order == 8


@pytest.mark.parametrize("text", ["", "2\n0 1\n", "x\n", "2\n0 1\n1 0 0\n"])
def test_bad_cayley_files(tmp_path, text):
    path = tmp_path / "bad.tbl"
    path.write_text(text)
    with pytest.raises(ParseError):
        read_cayley_file(path)


# -- permutations --------------------------------------------------------------


def test_single_three_cycle():
    g = from_permutation_generators(["(1 2 3)"], 100)
    assert g.order == 3 and classify(g).is_cyclic


def test_s3_from_generators():
    g = from_permutation_generators(["(1 2)", "(1 2 3)"], 100)
    assert g.order == 6
    assert Counter(g.orders) == {1: 1, 2: 3, 3: 2}


def test_permutation_cap():
    with pytest.raises(OrderCapExceeded):
        from_permutation_generators(["(1 2 3 4 5)"], 3)


@pytest.mark.parametrize("text", ["(1 2", "1 2)", "(a b)", "(1 1)", "(0 1)", "(1 2)(2 3)", ""])
def test_permutation_parse_errors(text):
    with pytest.raises(ParseError):
        parse_permutation(text)


def test_permutation_whitespace_and_identity():
    assert parse_permutation("  ( 1  2 ) ( 3 4 ) ") == (1, 0, 3, 2)
    assert parse_permutation("()") == ()


def test_permutation_file(tmp_path):
    path = tmp_path / "s4.perm"
    path.write_text("# S4\n(1 2 3 4)\n\n(1 2)\n")
    assert read_permutation_file(path).order == 24


def _isomorphic_after_relabel(g, h):
    """Search bijections that preserve the (order, index) blocks of canonical forms."""
    cg, ch = canonical_relabel(g), canonical_relabel(h)
    if cg.orders != ch.orders:
        return False
    blocks = [list(grp) for _, grp in itertools.groupby(range(cg.order), key=lambda x: cg.orders[x])]
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [x for block in choice for x in block]
        if np.array_equal(relabel(cg, perm).table, ch.table):
            return True
    return False


def test_s3_generators_isomorphic_to_dihedral3():
    s3 = from_permutation_generators(["(1 2)", "(1 2 3)"], 100)
    assert _isomorphic_after_relabel(s3, make("dihedral 3"))
    assert not _isomorphic_after_relabel(make("cyclic 6"), make("dihedral 3"))


# -- families -----------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, order",
    [
        ("cyclic 7", 7),
        ("elementary_abelian 3 2", 9),
        ("dihedral 5", 10),
        ("symmetric 4", 24),
        ("generalized_quaternion 16", 16),
        ("heisenberg 3", 27),
        ("direct_product [cyclic 2] [cyclic 4]", 8),
        ("direct_product [cyclic 3] [dihedral 3]", 18),
    ],
)
def test_family_orders(spec, order):
    assert make(spec).order == order


def test_klein_four():
    g = make("elementary_abelian 2 2")
    assert g.order == 4 and g.orders[1:] == (2, 2, 2)


def test_heisenberg3_against_matrices():
    mats = heisenberg_matrices(3)
    assert all(np.array_equal(np.linalg.matrix_power(m, 3) % 3, np.eye(3, dtype=int)) for m in mats)
    g = make("heisenberg 3")
    assert exponent(g) == 3 and not g.is_abelian
    assert Counter(g.orders) == Counter(matrix_order(m, 3) for m in mats)


def test_heisenberg2_is_exponent_four():
    g = make("heisenberg 2")
    assert g.order == 8 and exponent(g) == 4 and not g.is_abelian


def test_q8_against_quaternions():
    units = quaternion_units()
    one = units[0]
    oracle = Counter(element_order_by_powers(quat_mul, one, u) for u in units)
    assert oracle == {1: 1, 2: 1, 4: 6}
    g = make("generalized_quaternion 8")
    assert Counter(g.orders) == oracle
    assert exponent(g) == 4
    assert [x for x in range(8) if g.orders[x] == 2] == [g.labels.index("a^2")]


@pytest.mark.parametrize(
    "spec, problem",
    [
        ("cyclic 0", "n >= 1"),
        ("elementary_abelian 4 2", "p prime"),
        ("elementary_abelian 3 0", "rank"),
        ("generalized_quaternion 12", r"2\^k"),
        ("generalized_quaternion 4", r"2\^k"),
        ("heisenberg 6", "p prime"),
        ("nonsense 3", "unknown family"),
        ("cyclic 3 4", "parameter"),
    ],
)
def test_invalid_specs(spec, problem):
    with pytest.raises(InvalidSpec, match=problem):
        make(spec)


def test_spec_text_roundtrip():
    for text in ["cyclic 5", "elementary_abelian 2 3", "direct_product [cyclic 2] [direct_product [cyclic 3] [cyclic 3]]"]:
        assert str(parse_spec(text)) == text
    assert parse_spec("quaternion 8") == GroupSpec("generalized_quaternion", (8,))
    with pytest.raises(ParseError):
        parse_spec("direct_product [cyclic 2]")
    with pytest.raises(ParseError):
        parse_spec("cyclic x")


# -- element queries -----------------------------------------------------------


def test_element_orders_z6():
    g = make("cyclic 6")
    assert element_order(g, 0) == 1
    assert element_order(g, 1) == 6


def test_order_of_quaternion_i():
    g = make("generalized_quaternion 8")
    i = g.labels.index("a")
    assert element_order(g, i) == 4
    # <i> = {1, i, -1, -i}
    assert cyclic_subgroup(g, i) == {g.labels.index(s) for s in ("e", "a", "a^2", "a^3")}


def test_cyclic_subgroups():
    g = make("cyclic 6")
    assert cyclic_subgroup(g, 0) == {0}
    assert cyclic_subgroup(g, 2) == {0, 2, 4}


def test_generator_classes():
    z6 = make("cyclic 6")
    assert generator_class(z6, 0) == {0}
    assert generator_class(z6, 1) == {1, 5}
    v4 = make("elementary_abelian 2 2")
    assert all(generator_class(v4, x) == {x} for x in range(1, 4))


def test_maximal_cyclic_subgroups():
    assert maximal_cyclic_subgroups(make("cyclic 6")) == [frozenset(range(6))]
    v4 = maximal_cyclic_subgroups(make("elementary_abelian 2 2"))
    assert len(v4) == 3 and all(len(s) == 2 for s in v4)
    h3 = maximal_cyclic_subgroups(make("heisenberg 3"))
    assert len(h3) == (27 - 1) // (3 - 1) == 13 and all(len(s) == 3 for s in h3)


def test_maximal_cyclic_in_heisenberg_matches_matrix_enumeration():
    mats = heisenberg_matrices(3)
    key = lambda m: tuple(m.ravel())
    subgroups = set()
    for m in mats:
        subgroups.add(frozenset(key(np.linalg.matrix_power(m, k) % 3) for k in range(3)))
    assert len(subgroups) == 14  # 13 of order 3 plus the trivial subgroup
    centre = key(np.array([[1, 0, 1], [0, 1, 0], [0, 0, 1]]))
    containing = sum(1 for s in subgroups if len(s) == 3 and centre in s)
    g = make("heisenberg 3")
    z = g.labels.index("[0,0,1]")
    assert count_maximal_containing(g, z) == containing == 1


def test_count_maximal_containing():
    assert count_maximal_containing(make("elementary_abelian 2 2"), 0) == 3
    assert count_maximal_containing(make("cyclic 6"), 1) == 1


@pytest.mark.parametrize("spec, exp", [("elementary_abelian 3 2", 3), ("generalized_quaternion 8", 4), ("symmetric 3", 6)])
def test_exponent(spec, exp):
    assert exponent(make(spec)) == exp


def test_classify_examples():
    z9 = classify(make("cyclic 9"))
    assert z9.is_cyclic and z9.is_cyclic_prime_power and z9.prime_exponent is None
    h3 = classify(make("heisenberg 3"))
    assert (h3.prime_exponent, h3.is_p_group, h3.is_cyclic, h3.elementary_abelian) == (3, 3, False, None)
    e23 = classify(make("elementary_abelian 2 3"))
    assert e23.elementary_abelian == (2, 3) and e23.prime_exponent == 2
    trivial = classify(make("cyclic 1"))
    assert trivial.is_cyclic_prime_power and trivial.is_p_group is None


def test_maximal_subgroups_of_order_two():
    assert len(maximal_subgroups_of_order_two(make("elementary_abelian 2 2"))) == 3
    assert maximal_subgroups_of_order_two(make("elementary_abelian 2 3")) == []
    assert len(maximal_subgroups_of_order_two(make("cyclic 2"))) == 1
    # in S3 each transposition generates a maximal subgroup
    assert len(maximal_subgroups_of_order_two(make("symmetric 3"))) == 3


# -- totient ----------------------------------------------------------------------


@pytest.mark.parametrize("n, phi", [(1, 1), (6, 2), (27, 18)])
def test_totient_examples(n, phi):
    assert euler_totient(n) == phi


@given(st.integers(min_value=1, max_value=3000))
def test_totient_matches_gcd_count(n):
    assert euler_totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


# -- catalog-wide properties -----------------------------------------------------------


def test_generator_class_size_is_totient(fast_catalog_groups):
    for _, g in fast_catalog_groups:
        for x in range(g.order):
            assert len(generator_class(g, x)) == euler_totient(element_order(g, x))


def test_maximal_cyclic_cover_and_sorting(fast_catalog_groups):
    for _, g in fast_catalog_groups:
        subs = maximal_cyclic_subgroups(g)
        assert frozenset().union(*subs) == frozenset(range(g.order))
        assert len(set(subs)) == len(subs)
        assert subs == sorted(subs, key=sorted)
        assert not any(a < b for a in subs for b in subs)


def test_exponent_divisibility(fast_catalog_groups):
    for _, g in fast_catalog_groups:
        e = exponent(g)
        assert g.order % e == 0
        assert all(e % o == 0 for o in g.orders)


def test_elementary_abelian_prime_exponent(catalog):
    for entry in catalog.entries:
        if entry.spec.family == "elementary_abelian":
            p, r = entry.spec.params
            c = classify(make(entry.spec))
            assert c.prime_exponent == p and c.elementary_abelian == (p, r)


def test_tables_are_groups(fast_catalog_groups):
    from powergraphs.groups import validate_table

    for _, g in fast_catalog_groups:
        assert validate_table(np.asarray(g.table)) == 0
