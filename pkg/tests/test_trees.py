import pytest
from hypothesis import given, strategies as st

from magfine.trees import (
    LEAF,
    DecodeError,
    FineNode,
    Leaf,
    Vee,
    catalan,
    count_fine,
    decode,
    encode,
    enumerate_binary,
    enumerate_fine,
    graft,
    left_comb_tree,
    right_comb_tree,
    split,
)
from strategies import binary_trees


def catalan_oracle(n):
    # C_n by the Segner recurrence, built bottom-up.
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[n]


# -- path-cutting oracle -----------------------------------------------------
# A binary tree with n leaves is determined by the leaf ranges of its internal
# vertices.  Cutting between leaves i and i+1 keeps, on the left, every vertex
# reaching leaf <= i restricted to 1..i (vertices whose range collapses onto a
# single leaf or onto an existing range disappear), and symmetrically on the right.

def intervals(t, offset=0):
    if isinstance(t, Leaf):
        return set()
    out = {(offset + 1, offset + t.leaf_count)}
    out |= intervals(t.left, offset)
    out |= intervals(t.right, offset + t.left.leaf_count)
    return out


def from_intervals(lo, hi, ranges):
    if lo == hi:
        return LEAF
    inner = [r for r in ranges if r != (lo, hi) and lo <= r[0] and r[1] <= hi]
    # The left child spans lo..m where m is the largest end of a maximal range starting at lo,
    # or just the leaf lo.
    starts_lo = [r for r in inner if r[0] == lo]
    m = max((r[1] for r in starts_lo), default=lo)
    return Vee(from_intervals(lo, m, inner), from_intervals(m + 1, hi, inner))


def split_by_cutting(t, i):
    n = t.leaf_count
    ranges = intervals(t)
    left = {(a, min(b, i)) for a, b in ranges if a <= i and min(b, i) > a}
    right = {(max(a, i + 1) - i, b - i) for a, b in ranges if b >= i + 1 and b > max(a, i + 1)}
    return from_intervals(1, i, left), from_intervals(1, n - i, right)


def test_interval_oracle_roundtrip():
    for n in range(1, 8):
        for t in enumerate_binary(n):
            assert from_intervals(1, n, intervals(t)) == t


@pytest.mark.parametrize("n", range(1, 13))
def test_enumerate_binary_counts(n):
    trees = enumerate_binary(n)
    assert len(trees) == catalan_oracle(n - 1)
    assert len({t.code for t in trees}) == len(trees)
    assert all(t.leaf_count == n for t in trees)


def test_enumerate_binary_examples():
    assert enumerate_binary(1) == [LEAF]
    assert len(enumerate_binary(3)) == 2
    assert len(enumerate_binary(5)) == 14


def test_enumerate_canonical_order():
    for n in range(1, 8):
        codes = [t.code for t in enumerate_binary(n)]
        assert codes == sorted(codes)


def test_enumerate_rejects_zero():
    with pytest.raises(ValueError):
        enumerate_binary(0)
    with pytest.raises(ValueError):
        enumerate_fine(0)
    with pytest.raises(ValueError):
        left_comb_tree(0)
    with pytest.raises(ValueError):
        right_comb_tree(0)


def test_graft_examples():
    assert graft(LEAF, LEAF) == Vee(LEAF, LEAF)
    assert graft(LEAF, LEAF).leaf_count == 2
    assert graft(Vee(LEAF, LEAF), LEAF) == left_comb_tree(3)


@given(binary_trees(6), binary_trees(6))
def test_graft_leaf_count(t, s):
    assert graft(t, s).leaf_count == t.leaf_count + s.leaf_count


def test_combs():
    assert left_comb_tree(1) == right_comb_tree(1) == LEAF
    assert left_comb_tree(2) == right_comb_tree(2) == Vee(LEAF, LEAF)
    assert left_comb_tree(3) != right_comb_tree(3)
    assert left_comb_tree(3).leaf_count == right_comb_tree(3).leaf_count == 3
    assert set(enumerate_binary(3)) == {left_comb_tree(3), right_comb_tree(3)}


def test_split_examples():
    assert split(Vee(LEAF, LEAF), 1) == (LEAF, LEAF)
    comb = left_comb_tree(3)
    assert split(comb, 1) == (LEAF, Vee(LEAF, LEAF))
    assert split(comb, 2) == (Vee(LEAF, LEAF), LEAF)


def test_split_left_comb_deconcatenates():
    for n in range(2, 9):
        for i in range(1, n):
            assert split(left_comb_tree(n), i) == (left_comb_tree(i), left_comb_tree(n - i))


def test_split_rejects_out_of_range():
    t = left_comb_tree(4)
    for i in (0, 4, 5, -1):
        with pytest.raises(ValueError):
            split(t, i)
    with pytest.raises(ValueError):
        split(LEAF, 1)


def test_split_matches_path_cutting_exhaustively():
    for n in range(2, 9):
        for t in enumerate_binary(n):
            for i in range(1, n):
                assert split(t, i) == split_by_cutting(t, i), (t.code, i)


@given(binary_trees(8).filter(lambda t: t.leaf_count > 1), st.data())
def test_split_leaf_counts(t, data):
    i = data.draw(st.integers(1, t.leaf_count - 1))
    first, second = split(t, i)
    assert (first.leaf_count, second.leaf_count) == (i, t.leaf_count - i)


@given(binary_trees(6), binary_trees(6))
def test_split_inverts_graft(t, s):
    assert split(graft(t, s), t.leaf_count) == (t, s)


def test_split_recursion_cases():
    # The three cases of the recursion on t = tl v tr, for every root of up to 7 leaves.
    for n in range(2, 8):
        for t in enumerate_binary(n):
            tl, tr, k = t.left, t.right, t.left.leaf_count
            for i in range(1, n):
                if i < k:
                    a, b = split(tl, i)
                    assert split(t, i) == (a, Vee(b, tr))
                elif i == k:
                    assert split(t, i) == (tl, tr)
                else:
                    a, b = split(tr, i - k)
                    assert split(t, i) == (Vee(tl, a), b)


FINE = [1, 0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724]


def test_enumerate_fine_small():
    assert enumerate_fine(1) == [LEAF]
    assert enumerate_fine(2) == []
    (corolla,) = enumerate_fine(3)
    assert corolla == FineNode((LEAF, LEAF, LEAF), 1)
    four = enumerate_fine(4)
    assert {(t.arity, t.label) for t in four} == {(4, 1), (4, 2)}
    assert len(enumerate_fine(7)) == 57


@pytest.mark.parametrize("n", range(1, 11))
def test_enumerate_fine_counts(n):
    trees = enumerate_fine(n)
    assert len(trees) == FINE[n - 1] == count_fine(n)
    assert len(set(trees)) == len(trees)
    codes = [t.code for t in trees]
    assert codes == sorted(codes)


def test_fine_trees_are_valid():
    def walk(t):
        if isinstance(t, Leaf):
            return
        assert t.arity >= 3 and 1 <= t.label <= t.arity - 2
        for c in t.children:
            walk(c)

    for n in range(1, 9):
        for t in enumerate_fine(n):
            assert t.leaf_count == n
            walk(t)


def test_fine_node_validation():
    with pytest.raises(ValueError):
        FineNode((LEAF, LEAF), 1)
    with pytest.raises(ValueError):
        FineNode((LEAF, LEAF, LEAF), 2)
    with pytest.raises(ValueError):
        FineNode((LEAF, LEAF, LEAF, LEAF), 0)


def test_count_fine_beyond_listing():
    assert [count_fine(n) for n in range(1, 13)] == FINE


def test_catalan():
    assert [catalan(n) for n in range(12)] == [catalan_oracle(n) for n in range(12)]


def test_encode_leaf():
    assert encode(LEAF) == "|"
    assert len(encode(LEAF)) == 1


def test_roundtrip_exhaustive():
    for n in range(1, 9):
        for t in enumerate_binary(n):
            assert decode(encode(t)) == t
        for t in enumerate_fine(n):
            assert decode(encode(t)) == t


@pytest.mark.parametrize(
    "code, position",
    [("((", 2), ("", 0), ("(|)", 0), ("(|||)", 0), ("||", 1), ("(2|||)", 0), ("x", 0), ("(||", 3)],
)
def test_decode_errors(code, position):
    with pytest.raises(DecodeError) as info:
        decode(code)
    assert info.value.position == position


def test_decode_rejects_mixed_families():
    with pytest.raises(DecodeError):
        decode("((1|||)|)")
