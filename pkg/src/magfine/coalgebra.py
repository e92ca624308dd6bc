"""Coproducts on Mag(V): the reduced coproduct from tree splitting, its powers,
the coradical filtration, the projection ``e`` onto primitives and the map
``alpha`` into the tensor coalgebra on primitives.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from numbers import Rational
from typing import Callable, Iterator, Mapping, Optional, Sequence

from magfine.magma import MagElement, graft_terms, left_comb, term_key, unit
from magfine.trees import split


class TensorElement:
    """Exact-rational combination of k-tuples of basis terms of Mag(V)."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping | None = None):
        if rank < 1:
            raise ValueError("tensor rank must be >= 1")
        self.rank = rank
        acc: dict = {}
        for key, coeff in (terms or {}).items():
            key = tuple(key)
            if len(key) != rank:
                raise ValueError(f"tuple of length {len(key)} in a rank-{rank} tensor")
            acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def _wrap(cls, rank: int, terms: dict) -> TensorElement:
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = {k: c for k, c in terms.items() if c != 0}
        return obj

    @classmethod
    def zero(cls, rank: int) -> TensorElement:
        return cls._wrap(rank, {})

    @classmethod
    def from_element(cls, x: MagElement) -> TensorElement:
        return cls._wrap(1, {(k,): c for k, c in x.terms.items()})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple, Fraction]]:
        for key in sorted(self._terms, key=lambda k: tuple(map(term_key, k))):
            yield key, self._terms[key]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            if not self._terms and not other._terms:
                return True
            return self.rank == other.rank and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def _check_rank(self, other: TensorElement) -> None:
        if self.rank != other.rank and self._terms and other._terms:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: TensorElement) -> TensorElement:
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_rank(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement._wrap(max(self.rank, other.rank) if out else self.rank, out)

    def __neg__(self) -> TensorElement:
        return TensorElement._wrap(self.rank, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff: Rational) -> TensorElement:
        coeff = Fraction(coeff)
        return TensorElement._wrap(self.rank, {k: c * coeff for k, c in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        """Factorwise product ``(x⊗y)·(x'⊗y') = (x·x')⊗(y·y')``."""
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        out: dict = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = tuple(graft_terms(a, b) for a, b in zip(ka, kb))
                out[key] = out.get(key, 0) + ca * cb
        return TensorElement._wrap(self.rank, out)

    def times_right(self, y: MagElement) -> TensorElement:
        """``T·(1⊗...⊗1⊗y)``: multiply the last factor by ``y`` on the right."""
        return self * tensor(*([unit()] * (self.rank - 1)), y)

    def times_left(self, x: MagElement) -> TensorElement:
        """``(x⊗1⊗...⊗1)·T``: multiply the first factor by ``x`` on the left."""
        return tensor(x, *([unit()] * (self.rank - 1))) * self

    def apply_factors(self, *maps: Optional[Callable]) -> TensorElement:
        """Apply a linear map (given on basis terms) to each factor; ``None`` is the identity."""
        if len(maps) != self.rank:
            raise ValueError(f"need {self.rank} maps, got {len(maps)}")
        out: dict = {}
        for key, c in self._terms.items():
            images = []
            for term, f in zip(key, maps):
                images.append([(term, 1)] if f is None else list(f(term).terms.items()))
            for combo in product(*images):
                k = tuple(t for t, _ in combo)
                coeff = c
                for _, a in combo:
                    coeff *= a
                out[k] = out.get(k, 0) + coeff
        return TensorElement._wrap(self.rank, out)

    def apply_at(self, pos: int, f: Callable[[tuple], TensorElement]) -> TensorElement:
        """Replace factor ``pos`` by ``f(factor)``, raising the rank by ``f``'s rank - 1."""
        out: dict = {}
        new_rank = None
        for key, c in self._terms.items():
            image = f(key[pos])
            new_rank = image.rank
            for sub, a in image._terms.items():
                k = key[:pos] + sub + key[pos + 1:]
                out[k] = out.get(k, 0) + c * a
        if new_rank is None:
            new_rank = self.rank + 1
        return TensorElement._wrap(self.rank - 1 + new_rank, out)

    def left_comb(self) -> MagElement:
        """Multiply the factors of each tuple with the left comb."""
        return self._contract(_fold_left)

    def right_comb(self) -> MagElement:
        return self._contract(_fold_right)

    def _contract(self, fold) -> MagElement:
        out: dict = {}
        for key, c in self._terms.items():
            t = fold(key)
            out[t] = out.get(t, 0) + c
        return MagElement._wrap(out)

    def __repr__(self):
        if not self._terms:
            return f"TensorElement(rank={self.rank}, 0)"
        parts = []
        for key, c in self.items():
            factors = " ⊗ ".join(f"({t.code or '1'}; {','.join(map(str, w))})" for t, w in key)
            parts.append(f"{c}*{factors}")
        return f"TensorElement(rank={self.rank}, " + " + ".join(parts) + ")"


def _fold_left(key: tuple) -> tuple:
    acc = key[0]
    for t in key[1:]:
        acc = graft_terms(acc, t)
    return acc


def _fold_right(key: tuple) -> tuple:
    acc = key[-1]
    for t in reversed(key[:-1]):
        acc = graft_terms(t, acc)
    return acc


def tensor(*factors: MagElement) -> TensorElement:
    """Tensor product of MagElements."""
    if not factors:
        raise ValueError("tensor of no factors")
    out: dict = {}
    for combo in product(*(list(f.terms.items()) for f in factors)):
        key = tuple(k for k, _ in combo)
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        out[key] = out.get(key, 0) + coeff
    return TensorElement._wrap(len(factors), out)


@lru_cache(maxsize=None)
def _delta_term(term: tuple) -> TensorElement:
    tree, word = term
    out = {}
    for i in range(1, len(word)):
        first, second = split(tree, i)
        out[((first, word[:i]), (second, word[i:]))] = Fraction(1)
    return TensorElement._wrap(2, out)


def delta_term(term: tuple) -> TensorElement:
    """Reduced coproduct of one basis term; the unit and generators map to 0."""
    return _delta_term(term)


def delta(x: MagElement) -> TensorElement:
    """Reduced coproduct, summing the splits of every term at every cut."""
    out: dict = {}
    for term, c in x.terms.items():
        for key, a in _delta_term(term)._terms.items():
            out[key] = out.get(key, 0) + c * a
    return TensorElement._wrap(2, out)


def delta_power(k: int, x: MagElement) -> TensorElement:
    """``δ^k(x)`` of rank ``k+1``, iterating δ on the first factor."""
    if k < 0:
        raise ValueError("power must be non-negative")
    t = TensorElement.from_element(x.augmentation_part())
    for _ in range(k):
        t = t.apply_at(0, _delta_term)
    return t


def full_coproduct(x: MagElement) -> TensorElement:
    """Δ(x) = δ(x) + x⊗1 + 1⊗x on the augmentation ideal, Δ(1) = 1⊗1."""
    aug = x.augmentation_part()
    one = unit()
    out = delta(aug) + tensor(aug, one) + tensor(one, aug)
    u = x.unit_coefficient()
    if u:
        out = out + tensor(one, one).scale(u)
    return out


def is_primitive(x: MagElement) -> bool:
    return not x.unit_coefficient() and not delta(x)


def filtration_degree(x: MagElement) -> int:
    """Least r with x in F_r: 0 on multiples of the unit, else least r with δ^r(x) = 0."""
    aug = x.augmentation_part()
    if not aug:
        return 0
    r = 1
    t = delta(aug)
    while t:
        r += 1
        t = t.apply_at(0, _delta_term)
    return r


def _require_augmentation(x: MagElement) -> None:
    if x.unit_coefficient():
        raise ValueError("element has a unit component; only the augmentation ideal is allowed")


def idempotent_e(x: MagElement) -> MagElement:
    """Projection onto primitives: x + sum_{n>=1} (-1)^n left_comb(δ^n(x))."""
    _require_augmentation(x)
    result = x
    t = TensorElement.from_element(x)
    sign = 1
    while True:
        t = t.apply_at(0, _delta_term)
        if not t:
            return result
        sign = -sign
        comb = t.left_comb()
        result = result + comb if sign > 0 else result - comb


@lru_cache(maxsize=None)
def _e_term(term: tuple) -> MagElement:
    return idempotent_e(MagElement._wrap({term: Fraction(1)}))


def e_term(term: tuple) -> MagElement:
    return _e_term(term)


def alpha(x: MagElement) -> list[TensorElement]:
    """Components ``e^{⊗n}(δ^{n-1}(x))`` for n = 1 .. filtration degree."""
    _require_augmentation(x)
    out = []
    t = TensorElement.from_element(x)
    while t:
        out.append(t.apply_factors(*([_e_term] * t.rank)))
        t = t.apply_at(0, _delta_term)
    return out


def alpha_words(x: MagElement) -> dict:
    """``alpha`` flattened into the tensor coalgebra: word (tuple of terms) -> coefficient.

    The unit maps to the empty word.
    """
    out: dict = {}
    u = x.unit_coefficient()
    if u:
        out[()] = u
    for comp in alpha(x.augmentation_part()):
        for key, c in comp.terms.items():
            out[key] = out.get(key, 0) + c
    return {k: c for k, c in out.items() if c != 0}


def deconcatenation(words: Mapping) -> dict:
    """Deconcatenation coproduct on the tensor coalgebra, as (left word, right word) -> coefficient."""
    out: dict = {}
    for w, c in words.items():
        for i in range(len(w) + 1):
            key = (w[:i], w[i:])
            out[key] = out.get(key, 0) + c
    return {k: c for k, c in out.items() if c != 0}


def alpha_tensor_square(t: TensorElement) -> dict:
    """``(alpha⊗alpha)`` of a rank-2 tensor, as (left word, right word) -> coefficient."""
    if t.rank != 2:
        raise ValueError("expected a rank-2 tensor")
    cache: dict = {}

    def words(term):
        if term not in cache:
            cache[term] = alpha_words(MagElement._wrap({term: Fraction(1)}))
        return cache[term]

    out: dict = {}
    for (a, b), c in t.terms.items():
        for wa, ca in words(a).items():
            for wb, cb in words(b).items():
                key = (wa, wb)
                out[key] = out.get(key, 0) + c * ca * cb
    return {k: c for k, c in out.items() if c != 0}


def is_alpha_coalgebra_map(x: MagElement) -> bool:
    """Deconcatenation of alpha(x) equals (alpha⊗alpha)(Δ(x))."""
    return deconcatenation(alpha_words(x)) == alpha_tensor_square(full_coproduct(x))


def decomposition(x: MagElement) -> MagElement:
    """sum_{n>=0} right_comb(e^{⊗n+1}(δ^n(x)))."""
    _require_augmentation(x)
    total = MagElement.zero()
    for comp in alpha(x):
        total = total + comp.right_comb()
    return total


def decomposition_check(x: MagElement) -> bool:
    """Whether x is recovered from the right combs of the e-images of its iterated coproducts."""
    return decomposition(x) == x


def coassociativity_defect(x: MagElement) -> TensorElement:
    """``(δ⊗id)δ(x) - (id⊗δ)δ(x)``; zero when δ is coassociative on x."""
    d = delta(x)
    return d.apply_at(0, _delta_term) - d.apply_at(1, _delta_term)


def delta_left_comb_expected(args: Sequence[MagElement]) -> TensorElement:
    """Deconcatenation of a left comb of primitives:
    sum_i left_comb(x_1..x_i) ⊗ left_comb(x_{i+1}..x_n)."""
    n = len(args)
    total = TensorElement.zero(2)
    for i in range(1, n):
        total = total + tensor(left_comb(args[:i]), left_comb(args[i:]))
    return total

