import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagmn.perm import (
    Permutation,
    all_permutations,
    cyclic_shift,
    fits_rectangle,
    flatten,
    flatten_cycles,
    from_code,
    from_cycles,
    grassmannian,
    grassmannian_shape,
    het,
    hook_partition,
    identity,
    is_hook,
    longest_element,
    parse_permutation,
    partitions,
)

ZETA1 = from_cycles([(2, 3, 5, 7, 4)], 8)
ZETA2 = from_cycles([(1, 7, 4), (3, 6)], 7)


def test_lengths_frozen():
    assert parse_permutation("68235741").length == 18
    assert parse_permutation("68357421").length == 22
    assert parse_permutation("3217465").length == 7
    assert parse_permutation("6274135").length == 12
    assert parse_permutation("78251346").length == 16
    assert parse_permutation("53421").length == 9
    assert parse_permutation("52134").length == 5
    assert parse_permutation("41352").length == 5


def test_composition_examples():
    u = parse_permutation("3217465")
    assert str(ZETA2 * u) == "6274135"
    v = parse_permutation("68235741")
    assert str(ZETA1 * v) == "68357421"


def test_composition_order():
    # (u * v)(i) = u(v(i)): right factor acts first
    u = Permutation((2, 1, 3))
    v = Permutation((1, 3, 2))
    assert (u * v).word == (2, 3, 1)
    assert (v * u).word == (3, 1, 2)


def test_swap_positions_vs_values():
    u = parse_permutation("68235741")
    assert u.swap_positions(1, 6) == parse_permutation("78235641")
    assert u.swap_values(6, 7) == parse_permutation("78235641")
    assert u.swap_values(2, 3) == parse_permutation("68325741")


def test_inverse_and_position():
    u = parse_permutation("3217465")
    assert (u * u.inverse()).is_identity()
    for v in range(1, 8):
        assert u(u.position(v)) == v


def test_length_via_simple_reflections():
    # multiplying by an adjacent transposition on the right changes length by 1
    for u in all_permutations(5):
        for i in range(1, 5):
            w = u.swap_positions(i, i + 1)
            assert abs(w.length - u.length) == 1
            assert (w.length == u.length + 1) == (not u.has_descent(i))


def test_cycle_statistics():
    assert ZETA1.support() == frozenset({2, 3, 4, 5, 7})
    assert ZETA1.num_cycles() == 1
    assert het(ZETA1) == 3
    assert ZETA2.support() == frozenset({1, 3, 4, 6, 7})
    assert ZETA2.num_cycles() == 2
    assert het(ZETA2) == 2
    assert identity(5).num_cycles() == 0
    assert het(identity(5)) == 0


def test_cycles_canonical_form():
    assert from_cycles([(3, 6), (1, 7, 4)], 7).cycles() == ((1, 7, 4), (3, 6))


def test_flatten():
    assert flatten((3, 6, 1, 6, 8, 3, 1)) == (2, 3, 1, 3, 4, 2, 1)
    assert flatten(()) == ()


def test_flatten_cycles_shape_equivalence():
    eta = from_cycles([(1, 2, 4, 5, 3)], 5)
    assert flatten_cycles(ZETA1) == eta
    assert flatten_cycles(eta) == eta
    assert flatten_cycles(identity(4)) == identity(1)


def test_code_roundtrip_examples():
    w = Permutation((2, 1, 4, 3))
    assert w.code() == (1, 0, 1, 0)
    assert from_code((1, 0, 1, 0)) == w
    assert from_code((), 3) == identity(3)


@given(st.permutations(list(range(1, 7))))
def test_code_roundtrip(word):
    u = Permutation(word)
    assert from_code(u.code(), u.n) == u
    assert sum(u.code()) == u.length


@given(st.permutations(list(range(1, 7))), st.permutations(list(range(1, 7))))
def test_length_subadditive(a, b):
    u, v = Permutation(a), Permutation(b)
    assert (u * v).length <= u.length + v.length


def test_grassmannian_codec():
    assert str(grassmannian((3, 1), 3, 7)) == "1362457"
    assert str(grassmannian((1,), 4, 7)) == "1235467"
    assert grassmannian((), 2, 4) == identity(4)
    assert grassmannian_shape(grassmannian((3, 1), 3, 7), 3) == (3, 1)
    # the descent is at k only
    w = grassmannian((2, 2, 1), 3, 6)
    assert w.descents() == (3,)
    assert w.length == 5


def test_grassmannian_validation():
    with pytest.raises(ValueError):
        grassmannian((5,), 2, 6)  # first part exceeds n - k
    with pytest.raises(ValueError):
        grassmannian((1, 1, 1), 2, 6)  # more parts than k
    with pytest.raises(ValueError):
        grassmannian_shape(Permutation((2, 1, 4, 3)), 1)


def test_grassmannian_all_shapes_roundtrip():
    n, k = 6, 3
    seen = set()
    for size in range(10):
        for lam in partitions(size, max_part=n - k, max_parts=k):
            w = grassmannian(lam, k, n)
            assert grassmannian_shape(w, k) == lam
            assert w.length == size
            seen.add(w)
    # Grassmannian permutations are exactly those with descents within {k}
    expected = {
        u for u in all_permutations(n) if all(d == k for d in u.descents())
    }
    assert seen == expected


def test_partitions_and_hooks():
    assert list(partitions(4, max_parts=2)) == [(4,), (3, 1), (2, 2)]
    assert hook_partition(3, 4) == (4, 1, 1)
    assert hook_partition(1, 2) == (2,)
    assert is_hook((4, 1, 1)) and is_hook((2,)) and is_hook(())
    assert not is_hook((2, 2))
    assert fits_rectangle((3, 1), 2, 3)
    assert not fits_rectangle((3, 1), 1, 3)


def test_parse_permutation_formats():
    assert parse_permutation("68235741").word == (6, 8, 2, 3, 5, 7, 4, 1)
    assert parse_permutation("6,8,2,3,5,7,4,1").n == 8
    assert parse_permutation("(1,7,4)(3,6)", n=7) == ZETA2
    assert parse_permutation("132", n=5).word == (1, 3, 2, 4, 5)
    with pytest.raises(ValueError):
        parse_permutation("(1,2)")  # cycles need n
    with pytest.raises(ValueError):
        parse_permutation("1224")


def test_special_elements():
    assert longest_element(4).word == (4, 3, 2, 1)
    assert longest_element(4).length == 6
    assert cyclic_shift(4).word == (2, 3, 4, 1)
    assert str(identity(3)) == "123"


def test_trim_extend():
    u = parse_permutation("132", n=6)
    assert u.n == 6
    assert str(u.trim()) == "132"
    assert identity(5).trim() == identity(1)
    with pytest.raises(ValueError):
        u.extend(4)


def test_str_large_n():
    w = identity(11).swap_positions(10, 11)
    assert str(w) == "1,2,3,4,5,6,7,8,9,11,10"
    assert parse_permutation(str(w)) == w
