"""Planar binary trees and the labelled planar trees indexing MagFine monomials.

Both tree families share the same leaf and the same code grammar::

    code  := "|"                      leaf
           | "(" code code ")"        binary vertex
           | "(" label code{k} ")"    k-ary vertex of a labelled tree, k >= 3

Codes are canonical: ``decode(encode(t)) == t`` and lists are sorted by code.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Union

LEAF_TOKEN = "|"


class DecodeError(ValueError):
    """Malformed tree code; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True, eq=False)
class Leaf:
    leaf_count: int = field(default=1, init=False)
    code: str = field(default=LEAF_TOKEN, init=False)

    def __eq__(self, other):
        return isinstance(other, Leaf)

    def __hash__(self):
        return hash(LEAF_TOKEN)

    def __repr__(self):
        return "Leaf"


LEAF = Leaf()


@dataclass(frozen=True, eq=False)
class Vee:
    """Grafting of two planar binary trees onto a new root."""

    left: BinaryTree
    right: BinaryTree
    leaf_count: int = field(init=False, repr=False)
    code: str = field(init=False, repr=False)

    def __post_init__(self):
        if isinstance(self.left, FineNode) or isinstance(self.right, FineNode):
            raise TypeError("binary vertex over a labelled tree")
        object.__setattr__(self, "leaf_count", self.left.leaf_count + self.right.leaf_count)
        object.__setattr__(self, "code", f"({self.left.code}{self.right.code})")

    def __eq__(self, other):
        return isinstance(other, Vee) and self.code == other.code

    def __hash__(self):
        return hash(self.code)


@dataclass(frozen=True, eq=False)
class FineNode:
    """A k-ary vertex (k >= 3) carrying a label in 1..k-2."""

    children: tuple
    label: int
    leaf_count: int = field(init=False, repr=False)
    code: str = field(init=False, repr=False)

    def __post_init__(self):
        children = tuple(self.children)
        k = len(children)
        if k < 3:
            raise ValueError(f"labelled vertex needs arity >= 3, got {k}")
        if not 1 <= self.label <= k - 2:
            raise ValueError(f"label {self.label} outside 1..{k - 2} for arity {k}")
        if any(isinstance(c, Vee) for c in children):
            raise TypeError("labelled vertex over a binary tree")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "leaf_count", sum(c.leaf_count for c in children))
        code = "".join(c.code for c in children)
        object.__setattr__(self, "code", f"({self.label}{code})")

    @property
    def arity(self) -> int:
        return len(self.children)

    def __eq__(self, other):
        return isinstance(other, FineNode) and self.code == other.code

    def __hash__(self):
        return hash(self.code)


BinaryTree = Union[Leaf, Vee]
FineTree = Union[Leaf, FineNode]


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"number of leaves must be >= 1, got {n}")


def graft(t: BinaryTree, s: BinaryTree) -> Vee:
    return Vee(t, s)


def left_comb_tree(n: int) -> BinaryTree:
    _check_positive(n)
    t: BinaryTree = LEAF
    for _ in range(n - 1):
        t = Vee(t, LEAF)
    return t


def right_comb_tree(n: int) -> BinaryTree:
    _check_positive(n)
    t: BinaryTree = LEAF
    for _ in range(n - 1):
        t = Vee(LEAF, t)
    return t


def split(t: BinaryTree, i: int) -> tuple[BinaryTree, BinaryTree]:
    """Cut ``t`` between leaves ``i`` and ``i+1``.

    Returns the pieces on the left of the path from leaf ``i`` to the root and
    on the right of the path from leaf ``i+1`` to the root, with ``i`` and
    ``leaf_count - i`` leaves respectively.
    """
    if not 1 <= i < t.leaf_count:
        raise ValueError(f"cut position {i} outside 1..{t.leaf_count - 1}")
    return _split(t, i)


@lru_cache(maxsize=None)
def _split(t: Vee, i: int) -> tuple[BinaryTree, BinaryTree]:
    k = t.left.leaf_count
    if i < k:
        first, second = _split(t.left, i)
        return first, Vee(second, t.right)
    if i == k:
        return t.left, t.right
    first, second = _split(t.right, i - k)
    return Vee(t.left, first), second


@lru_cache(maxsize=None)
def _binary_trees(n: int) -> tuple[BinaryTree, ...]:
    if n == 1:
        return (LEAF,)
    out = [Vee(l, r) for k in range(1, n) for l in _binary_trees(k) for r in _binary_trees(n - k)]
    return tuple(sorted(out, key=lambda t: t.code))


def enumerate_binary(n: int) -> list[BinaryTree]:
    """All planar binary trees with ``n`` leaves in canonical (code) order."""
    _check_positive(n)
    return list(_binary_trees(n))


def compositions(n: int, parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``n`` into positive parts (optionally exactly ``parts``)."""
    if parts is None:
        for k in range(1, n + 1):
            yield from compositions(n, k)
        return
    if parts == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    # Unlabelled planar trees without unary or binary vertices, as nested tuples.
    if n == 1:
        return ("leaf",)
    out = []
    for k in range(3, n + 1):
        for comp in compositions(n, k):
            pools = [_shapes(p) for p in comp]
            if all(pools):
                out.extend(product(*pools))
    return tuple(out)


def _labelings(shape) -> Iterator[FineTree]:
    if shape == "leaf":
        yield LEAF
        return
    k = len(shape)
    for children in product(*(list(_labelings(c)) for c in shape)):
        for label in range(1, k - 1):
            yield FineNode(children, label)


@lru_cache(maxsize=None)
def _fine_trees(n: int) -> tuple[FineTree, ...]:
    out = [t for shape in _shapes(n) for t in _labelings(shape)]
    return tuple(sorted(out, key=lambda t: t.code))


def enumerate_fine(n: int) -> list[FineTree]:
    """All labelled planar trees with ``n`` leaves whose vertices have arity >= 3."""
    _check_positive(n)
    return list(_fine_trees(n))


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan number C_n by the convolution recurrence."""
    if n < 0:
        raise ValueError("negative index")
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def count_binary(n: int) -> int:
    _check_positive(n)
    return catalan(n - 1)


@lru_cache(maxsize=None)
def count_fine(n: int) -> int:
    """Number of labelled trees with ``n`` leaves, without materialising them."""
    _check_positive(n)
    if n == 1:
        return 1
    # forest[m]: ordered k-tuples of trees with m leaves in total.
    total = 0
    row = [0] + [count_fine(m) if m < n else 0 for m in range(1, n + 1)]
    forest = row[:]
    for k in range(2, n + 1):
        forest = [sum(forest[j] * row[m - j] for j in range(1, m)) for m in range(n + 1)]
        if k >= 3:
            total += (k - 2) * forest[n]
    return total


def encode(t: BinaryTree | FineTree) -> str:
    return t.code


def decode(code: str) -> BinaryTree | FineTree:
    """Parse a canonical code; raises :class:`DecodeError` with the position on failure."""
    tree, pos = _parse(code, 0)
    if pos != len(code):
        raise DecodeError("trailing characters", pos)
    return tree


def _parse(code: str, pos: int):
    if pos >= len(code):
        raise DecodeError("unexpected end of code", pos)
    ch = code[pos]
    if ch == LEAF_TOKEN:
        return LEAF, pos + 1
    if ch != "(":
        raise DecodeError(f"unexpected character {ch!r}", pos)
    start = pos
    pos += 1
    digits_at = pos
    while pos < len(code) and code[pos].isdigit():
        pos += 1
    label = int(code[digits_at:pos]) if pos > digits_at else None
    children = []
    while True:
        if pos >= len(code):
            raise DecodeError("unbalanced parenthesis", pos)
        if code[pos] == ")":
            break
        child, pos = _parse(code, pos)
        children.append(child)
    try:
        if label is None:
            if len(children) != 2:
                raise ValueError(f"binary vertex with {len(children)} children")
            node = Vee(*children)
        else:
            node = FineNode(tuple(children), label)
    except (ValueError, TypeError) as exc:
        raise DecodeError(str(exc), start) from None
    return node, pos + 1
