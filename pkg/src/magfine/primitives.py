"""Primitive elements of the multilinear components of Mag(V).

Everything here works in the regular component: degree-n terms whose word is
exactly (1, ..., n).  That is enough because every split keeps the letters of
a word in their left-to-right order, so δ maps the multilinear component into
the span of pairs ``(t1; 1..i) ⊗ (t2; i+1..n)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from magfine.coalgebra import delta
from magfine.linalg import ExactMatrix, rank_of_vectors
from magfine.magma import MagElement, expand_fine_monomial, generator, generators
from magfine.trees import catalan, compositions, count_fine, enumerate_binary, enumerate_fine


@dataclass(frozen=True)
class MultilinearBasis:
    degree: int
    terms: tuple

    def __len__(self):
        return len(self.terms)

    @property
    def index(self) -> dict:
        return {t: i for i, t in enumerate(self.terms)}

    def to_vector(self, x: MagElement) -> dict[int, Fraction]:
        idx = self.index
        vec = {}
        for term, c in x.terms.items():
            if term not in idx:
                raise ValueError(f"term {term[0].code} {term[1]} is outside the degree-{self.degree} multilinear component")
            vec[idx[term]] = c
        return vec

    def from_vector(self, vec: dict[int, Fraction]) -> MagElement:
        return MagElement({self.terms[i]: c for i, c in vec.items()})


@lru_cache(maxsize=None)
def multilinear_basis(n: int) -> MultilinearBasis:
    if n < 1:
        raise ValueError("degree must be >= 1")
    word = tuple(range(1, n + 1))
    return MultilinearBasis(n, tuple((t, word) for t in enumerate_binary(n)))


@lru_cache(maxsize=None)
def delta_codomain(n: int) -> tuple:
    """Row labels of :func:`delta_matrix`: pairs of multilinear terms of degrees (i, n-i)."""
    word = tuple(range(1, n + 1))
    rows = []
    for i in range(1, n):
        for t1 in enumerate_binary(i):
            for t2 in enumerate_binary(n - i):
                rows.append(((t1, word[:i]), (t2, word[i:])))
    return tuple(rows)


def delta_matrix(n: int) -> ExactMatrix:
    """Matrix of δ on the degree-n multilinear component (columns = basis terms)."""
    if n < 2:
        raise ValueError("delta_matrix needs n >= 2")
    basis = multilinear_basis(n)
    row_index = {pair: i for i, pair in enumerate(delta_codomain(n))}
    columns = []
    for term in basis.terms:
        image = delta(MagElement._wrap({term: Fraction(1)}))
        columns.append({row_index[pair]: c for pair, c in image.terms.items()})
    return ExactMatrix.from_columns(len(row_index), columns)


def prim_basis(n: int) -> list[MagElement]:
    """Basis of the primitives of degree n, read off the reduced echelon form of δ."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return [generator(1)]
    basis = multilinear_basis(n)
    return [basis.from_vector(v) for v in delta_matrix(n).nullspace()]


def prim_dimension(n: int) -> int:
    if n == 1:
        return 1
    m = delta_matrix(n)
    return m.ncols - m.rank()


def fine_images(n: int) -> list[MagElement]:
    """Every labelled tree with n leaves evaluated on the generators 1..n."""
    args = generators(n)
    return [expand_fine_monomial(m, args) for m in enumerate_fine(n)]


def fine_image_basis(n: int) -> tuple[list[MagElement], int]:
    """The MagFine monomials expanded into Mag, and the exact rank of their span."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    images = fine_images(n)
    basis = multilinear_basis(n)
    rank = rank_of_vectors(len(basis), (basis.to_vector(x) for x in images))
    return images, rank


def spans_kernel(n: int) -> bool:
    """Whether the MagFine images and the kernel of δ span the same subspace."""
    basis = multilinear_basis(n)
    images = [basis.to_vector(x) for x in fine_images(n)]
    kernel = [basis.to_vector(x) for x in prim_basis(n)]
    r_img = rank_of_vectors(len(basis), images)
    r_ker = rank_of_vectors(len(basis), kernel)
    r_all = rank_of_vectors(len(basis), images + kernel)
    return r_img == r_ker == r_all


@dataclass(frozen=True)
class DecompositionRow:
    n: int
    catalan: int
    composition_sum: int

    @property
    def ok(self) -> bool:
        return self.catalan == self.composition_sum


def comb_decomposition_dims(n_max: int) -> list[DecompositionRow]:
    """C_{n-1} against the sum over compositions (n_1..n_k) of n of prod F_{n_j - 1}."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        total = sum(prod(count_fine(p) for p in comp) for comp in compositions(n))
        rows.append(DecompositionRow(n, catalan(n - 1), total))
    return rows


@dataclass(frozen=True)
class DimensionRow:
    n: int
    catalan: int
    kernel_dim: int
    fine: int
    image_rank: int | None

    @property
    def ok(self) -> bool:
        same = self.kernel_dim == self.fine
        if self.image_rank is not None:
            same = same and self.image_rank == self.fine
        return same


def dimension_table(n_max: int, image_max: int = 7) -> list[DimensionRow]:
    """Per degree: C_{n-1}, dim ker δ, F_{n-1} and (up to ``image_max``) the MagFine image rank."""
    rows = []
    for n in range(1, n_max + 1):
        rank = fine_image_basis(n)[1] if n <= image_max else None
        rows.append(DimensionRow(n, catalan(n - 1), prim_dimension(n), count_fine(n), rank))
    return rows


def is_order_preserving(n: int) -> bool:
    """Every pair produced by δ on the multilinear component concatenates back to 1..n."""
    word = tuple(range(1, n + 1))
    for term in multilinear_basis(n).terms:
        for (a, b) in delta(MagElement._wrap({term: Fraction(1)})).terms:
            if a[1] + b[1] != word:
                return False
    return True

