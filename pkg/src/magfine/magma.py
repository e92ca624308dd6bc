"""Elements of the free magmatic algebra Mag(V) and the MagFine operations on it.

A basis term is ``(tree, word)`` where ``word`` is a tuple of positive generator
indices with one letter per leaf.  The unit is the term ``(EMPTY, ())``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

from magfine.trees import LEAF, FineNode, Leaf, Vee


@dataclass(frozen=True, eq=False)
class Empty:
    """Tree of the unit: no leaves, code ``""``."""

    leaf_count: int = field(default=0, init=False)
    code: str = field(default="", init=False)

    def __eq__(self, other):
        return isinstance(other, Empty)

    def __hash__(self):
        return hash("")

    def __repr__(self):
        return "Empty"


EMPTY = Empty()
UNIT_TERM = (EMPTY, ())


def term_key(term) -> tuple:
    """Sort key putting terms in degree, then tree-code, then word order."""
    tree, word = term
    return (len(word), tree.code, word)


class MagElement:
    """Finite exact-rational linear combination of basis terms of Mag(V)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for (tree, word), coeff in items:
            word = tuple(word)
            if tree.leaf_count != len(word):
                raise ValueError(f"word {word} does not fit tree {tree.code!r}")
            if any(not isinstance(g, int) or g < 1 for g in word):
                raise ValueError(f"generator indices must be positive integers: {word}")
            key = (tree, word)
            acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def _wrap(cls, terms: dict) -> MagElement:
        # Trusted constructor: keys already valid, zeros still to be dropped.
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in terms.items() if c != 0}
        return obj

    @classmethod
    def basis(cls, tree, word: Sequence[int], coeff: Rational = 1) -> MagElement:
        return cls({(tree, tuple(word)): coeff})

    @classmethod
    def zero(cls) -> MagElement:
        return cls._wrap({})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple, Fraction]]:
        """Terms and coefficients in canonical order."""
        for key in sorted(self._terms, key=term_key):
            yield key, self._terms[key]

    def coefficient(self, tree, word: Sequence[int]) -> Fraction:
        return self._terms.get((tree, tuple(word)), Fraction(0))

    def degrees(self) -> set[int]:
        return {len(w) for _, w in self._terms}

    @property
    def degree(self) -> int:
        """Largest degree present (0 for the zero element)."""
        return max(self.degrees(), default=0)

    def homogeneous_part(self, d: int) -> MagElement:
        return MagElement._wrap({k: c for k, c in self._terms.items() if len(k[1]) == d})

    def augmentation_part(self) -> MagElement:
        return MagElement._wrap({k: c for k, c in self._terms.items() if k[1]})

    def unit_coefficient(self) -> Fraction:
        return self._terms.get(UNIT_TERM, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, MagElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other: MagElement) -> MagElement:
        if not isinstance(other, MagElement):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return MagElement._wrap(out)

    def __neg__(self) -> MagElement:
        return MagElement._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: MagElement) -> MagElement:
        if not isinstance(other, MagElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff: Rational) -> MagElement:
        coeff = Fraction(coeff)
        return MagElement._wrap({k: c * coeff for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, MagElement):
            return mag_product(self, other)
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self._terms:
            return "MagElement(0)"
        parts = [f"{c}*({t.code or '1'}; {','.join(map(str, w))})" for (t, w), c in self.items()]
        return "MagElement(" + " + ".join(parts) + ")"


def generator(i: int) -> MagElement:
    return MagElement.basis(LEAF, (i,))


def unit() -> MagElement:
    return MagElement._wrap({UNIT_TERM: Fraction(1)})


def graft_terms(a: tuple, b: tuple) -> tuple:
    """Product of two basis terms; the unit term is a two-sided identity."""
    (t, w), (s, v) = a, b
    if isinstance(t, Empty):
        return b
    if isinstance(s, Empty):
        return a
    return (Vee(t, s), w + v)


def mag_product(a: MagElement, b: MagElement) -> MagElement:
    out: dict = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            key = graft_terms(ka, kb)
            out[key] = out.get(key, 0) + ca * cb
    return MagElement._wrap(out)


def left_comb(args: Sequence[MagElement]) -> MagElement:
    """((x1*x2)*x3)*...*xn; the identity on a single argument."""
    if not args:
        raise ValueError("left_comb needs at least one argument")
    acc = args[0]
    for x in args[1:]:
        acc = acc * x
    return acc


def right_comb(args: Sequence[MagElement]) -> MagElement:
    """x1*(x2*(...*(x_{n-1}*xn)))."""
    if not args:
        raise ValueError("right_comb needs at least one argument")
    acc = args[-1]
    for x in reversed(args[:-1]):
        acc = x * acc
    return acc


def associator(a: MagElement, b: MagElement, c: MagElement) -> MagElement:
    return (a * b) * c - a * (b * c)


def mu(n: int, i: int, args: Sequence[MagElement]) -> MagElement:
    """The n-ary operation mu_i^n built from associators and left combs."""
    if n < 3 or not 1 <= i <= n - 2:
        raise ValueError(f"no operation mu_{i}^{n}: need n >= 3 and 1 <= i <= n-2")
    if len(args) != n:
        raise ValueError(f"mu_{i}^{n} takes {n} arguments, got {len(args)}")
    x = list(args)
    if i == 1:
        return associator(x[0], left_comb(x[1:n - 1]), x[n - 1])
    if n == 4:
        x1, x2, x3, x4 = x
        return associator(x1, x2, x3 * x4) - associator(x1, x2, x3) * x4
    middle = left_comb(x[1:n - i])
    tail = left_comb(x[n - i:n - 1])
    return mu(4, 2, [x[0], middle, tail, x[n - 1]])


def expand_fine_monomial(m, args: Sequence[MagElement]) -> MagElement:
    """Image of a MagFine monomial under m_i^n -> mu_i^n, evaluated on ``args``."""
    if len(args) != m.leaf_count:
        raise ValueError(f"monomial has {m.leaf_count} inputs, got {len(args)} arguments")
    it = iter(args)

    def expand(node):
        if isinstance(node, Leaf):
            return next(it)
        if not isinstance(node, FineNode):
            raise TypeError(f"not a labelled tree: {node!r}")
        children = [expand(c) for c in node.children]
        return mu(node.arity, node.label, children)

    return expand(m)


def generators(n: int) -> list[MagElement]:
    return [generator(i) for i in range(1, n + 1)]
