"""Randomised and exhaustive property checks of the bialgebra structure.

Each suite returns a list of :class:`CheckResult`.  Random inputs come from a
``random.Random`` (Mersenne Twister) seeded explicitly, so a given
``(seed, cases)`` pair always exercises the same elements.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from magfine.coalgebra import (
    alpha,
    coassociativity_defect,
    decomposition_check,
    delta,
    delta_left_comb_expected,
    full_coproduct,
    idempotent_e,
    is_alpha_coalgebra_map,
    is_primitive,
    tensor,
)
from magfine.linalg import rank_of_vectors
from magfine.magma import MagElement, associator, generator, generators, left_comb, mu, right_comb, unit
from magfine.primitives import multilinear_basis, prim_basis
from magfine.trees import catalan, enumerate_binary

DEFAULT_SEED = 42
DEFAULT_CASES = 100
SUITES = ("coassoc", "compat", "comb", "assoc-coproduct", "idempotent", "decomposition", "mu-primitive", "alpha")


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, label: str) -> None:
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < 5:
                self.examples.append(label)


def _run(name: str, cases: Iterable[tuple[str, Callable[[], bool]]]) -> CheckResult:
    res = CheckResult(name)
    for label, check in cases:
        res.record(bool(check()), label)
    return res


# -- random inputs ----------------------------------------------------------

def random_term(rng: random.Random, degree: int, n_gens: int) -> tuple:
    tree = rng.choice(enumerate_binary(degree))
    word = tuple(rng.randint(1, n_gens) for _ in range(degree))
    return tree, word


def random_coefficient(rng: random.Random) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    return Fraction(num, rng.choice([1, 1, 2, 3]))


def random_element(
    rng: random.Random,
    max_degree: int = 4,
    n_gens: int = 3,
    max_terms: int = 3,
    degree: int | None = None,
) -> MagElement:
    """Nonzero element of the augmentation ideal; homogeneous if ``degree`` is given."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            d = degree if degree is not None else rng.randint(1, max_degree)
            terms[random_term(rng, d, n_gens)] = random_coefficient(rng)
        x = MagElement(terms)
        if x:
            return x


def random_primitive(rng: random.Random, max_degree: int = 4, n_gens: int = 3) -> MagElement:
    """Nonzero combination of generators and mu-operations on generators."""
    while True:
        x = MagElement.zero()
        for _ in range(rng.randint(1, 3)):
            n = rng.randint(1, max_degree)
            if n == 2:
                continue
            args = [generator(rng.randint(1, n_gens)) for _ in range(n)]
            piece = args[0] if n == 1 else mu(n, rng.randint(1, n - 2), args)
            x = x + piece.scale(random_coefficient(rng))
        if x:
            return x


def basis_terms(max_degree: int) -> list[MagElement]:
    """Every multilinear basis term of degree 1..max_degree."""
    out = []
    for n in range(1, max_degree + 1):
        out.extend(MagElement._wrap({t: Fraction(1)}) for t in multilinear_basis(n).terms)
    return out


# -- suites -----------------------------------------------------------------

def suite_coassoc(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    rng = random.Random(seed)
    exhaustive = _run(
        "coassociativity: basis terms of degree <= 8",
        ((repr(x), lambda x=x: not coassociativity_defect(x)) for x in basis_terms(8)),
    )
    rand = _run(
        f"coassociativity: {cases} random elements",
        (
            (repr(x), lambda x=x: not coassociativity_defect(x))
            for x in (random_element(rng, max_degree=7) for _ in range(cases))
        ),
    )
    return [exhaustive, rand]


def _compat_reduced(a: MagElement, b: MagElement) -> bool:
    lhs = delta(a * b)
    rhs = delta(a).times_right(b) + delta(b).times_left(a) + tensor(a, b)
    return lhs == rhs


def _compat_full(a: MagElement, b: MagElement) -> bool:
    lhs = full_coproduct(a * b)
    rhs = full_coproduct(a).times_right(b) + full_coproduct(b).times_left(a) - tensor(a, b)
    return lhs == rhs


def _random_pairs(rng: random.Random, cases: int, total: int = 8) -> list[tuple[MagElement, MagElement]]:
    pairs = []
    for _ in range(cases):
        da = rng.randint(1, total - 1)
        db = rng.randint(1, total - da)
        pairs.append((random_element(rng, degree=da), random_element(rng, degree=db)))
    return pairs


def suite_compat(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    rng = random.Random(seed)
    pairs = _random_pairs(rng, cases)
    small = basis_terms(5)
    exhaustive_pairs = [(a, b) for a in small for b in small if a.degree + b.degree <= 6]
    with_unit = [(unit(), b) for b in small] + [(a, unit()) for a in small]
    return [
        _run(f"u.i. reduced: {cases} random homogeneous pairs, total degree <= 8",
             ((f"{a!r}, {b!r}", lambda a=a, b=b: _compat_reduced(a, b)) for a, b in pairs)),
        _run(f"u.i. full: {cases} random homogeneous pairs, total degree <= 8",
             ((f"{a!r}, {b!r}", lambda a=a, b=b: _compat_full(a, b)) for a, b in pairs)),
        _run("u.i. reduced: basis-term pairs, total degree <= 6",
             ((f"{a!r}, {b!r}", lambda a=a, b=b: _compat_reduced(a, b)) for a, b in exhaustive_pairs)),
        _run("u.i. full: basis-term pairs (and unit), total degree <= 6",
             ((f"{a!r}, {b!r}", lambda a=a, b=b: _compat_full(a, b)) for a, b in exhaustive_pairs + with_unit)),
    ]


def suite_comb(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    rng = random.Random(seed)
    on_generators = [generators(n) for n in range(1, 9)]
    on_primitives = [
        [random_primitive(rng, max_degree=3) for _ in range(rng.randint(2, 4))] for _ in range(cases)
    ]

    def check(args):
        return delta(left_comb(args)) == delta_left_comb_expected(args)

    return [
        _run("delta of left comb: generators, n <= 8",
             ((f"n={len(a)}", lambda a=a: check(a)) for a in on_generators)),
        _run(f"delta of left comb: {cases} random primitive tuples",
             ((repr(a), lambda a=a: check(a)) for a in on_primitives)),
    ]


def _assoc_coproduct(x: MagElement, y: MagElement, z: MagElement) -> bool:
    expected = delta(z).apply_factors(
        lambda term: associator(x, y, MagElement._wrap({term: Fraction(1)})), None
    )
    return delta(associator(x, y, z)) == expected


def suite_assoc_coproduct(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    rng = random.Random(seed)
    triples = [
        (random_primitive(rng, max_degree=3), random_element(rng, max_degree=3), random_element(rng, max_degree=3))
        for _ in range(cases)
    ]
    return [
        _run(f"delta(as(x,y,z)) = sum as(x,y,z1) ⊗ z2: {cases} random triples, x primitive",
             ((repr(t), lambda t=t: _assoc_coproduct(*t)) for t in triples)),
    ]


def suite_idempotent(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    rng = random.Random(seed)
    randoms = [random_element(rng, max_degree=6) for _ in range(cases)]
    terms = basis_terms(6)
    prims = [p for n in range(1, 7) for p in prim_basis(n)]
    prims += [random_primitive(rng) for _ in range(cases)]
    right_combs = []
    while len(right_combs) < cases:
        k = rng.randint(2, 6)
        args = [random_primitive(rng, max_degree=3) for _ in range(k)]
        if sum(a.degree for a in args) <= 8:
            right_combs.append(args)
    right_combs += [generators(n) for n in range(2, 7)]
    samples = terms + randoms

    return [
        _run("(i) e kills right combs of primitives, n <= 6",
             ((repr(a), lambda a=a: not idempotent_e(right_comb(a))) for a in right_combs)),
        _run("(ii) delta o e = 0: basis terms of degree <= 6 and random elements",
             ((repr(x), lambda x=x: not delta(idempotent_e(x))) for x in samples)),
        _run("(iii) e restricted to primitives is the identity",
             ((repr(p), lambda p=p: idempotent_e(p) == p) for p in prims)),
        _run("e o e = e: basis terms of degree <= 6 and random elements",
             ((repr(x), lambda x=x: idempotent_e(idempotent_e(x)) == idempotent_e(x)) for x in samples)),
    ]


def suite_decomposition(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    rng = random.Random(seed)
    randoms = [random_element(rng, max_degree=6) for _ in range(cases)]
    return [
        _run("x = sum right_comb(e^{⊗n+1} delta^n x): basis terms of degree <= 6",
             ((repr(x), lambda x=x: decomposition_check(x)) for x in basis_terms(6))),
        _run(f"x = sum right_comb(e^{{⊗n+1}} delta^n x): {cases} random elements",
             ((repr(x), lambda x=x: decomposition_check(x)) for x in randoms)),
    ]


def _multilinear_in_order(x: MagElement, n: int) -> bool:
    word = tuple(range(1, n + 1))
    return all(w == word for _, w in x.terms)


def suite_mu_primitive(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    rng = random.Random(seed)
    ops = [(n, i) for n in range(3, 8) for i in range(1, n - 1)]
    on_prims = []
    for _ in range(cases):
        n = rng.randint(3, 5)
        i = rng.randint(1, n - 2)
        on_prims.append((n, i, [random_primitive(rng, max_degree=3) for _ in range(n)]))
    return [
        _run("mu_i^n on generators is primitive, n <= 7",
             ((f"mu_{i}^{n}", lambda n=n, i=i: is_primitive(mu(n, i, generators(n)))) for n, i in ops)),
        _run("mu_i^n on generators is multilinear in the order 1..n, n <= 7",
             ((f"mu_{i}^{n}", lambda n=n, i=i: _multilinear_in_order(mu(n, i, generators(n)), n)) for n, i in ops)),
        _run(f"mu_i^n on {cases} random primitive tuples is primitive",
             ((f"mu_{i}^{n}", lambda n=n, i=i, a=a: is_primitive(mu(n, i, a))) for n, i, a in on_prims)),
    ]


def alpha_rank(n: int) -> int:
    """Rank of alpha on the degree-n multilinear component."""
    index: dict = {}
    vectors = []
    for term in multilinear_basis(n).terms:
        vec = {}
        for comp in alpha(MagElement._wrap({term: Fraction(1)})):
            for key, c in comp.terms.items():
                vec[index.setdefault(key, len(index))] = c
        vectors.append(vec)
    return rank_of_vectors(len(index), vectors)


def suite_alpha(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    rng = random.Random(seed)
    randoms = [random_element(rng, max_degree=6) for _ in range(cases)]
    return [
        _run("alpha is a coalgebra map: basis terms of degree <= 6",
             ((repr(x), lambda x=x: is_alpha_coalgebra_map(x)) for x in basis_terms(6))),
        _run(f"alpha is a coalgebra map: {cases} random elements of degree <= 6",
             ((repr(x), lambda x=x: is_alpha_coalgebra_map(x)) for x in randoms)),
        _run("alpha has rank C_{n-1} on the multilinear component, n <= 6",
             ((f"n={n}", lambda n=n: alpha_rank(n) == catalan(n - 1)) for n in range(1, 7))),
    ]


SUITE_FUNCS = {
    "coassoc": suite_coassoc,
    "compat": suite_compat,
    "comb": suite_comb,
    "assoc-coproduct": suite_assoc_coproduct,
    "idempotent": suite_idempotent,
    "decomposition": suite_decomposition,
    "mu-primitive": suite_mu_primitive,
    "alpha": suite_alpha,
}


def run_suite(name: str, seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[CheckResult]:
    if name == "all":
        return [r for key in SUITES for r in SUITE_FUNCS[key](seed, cases)]
    if name not in SUITE_FUNCS:
        raise KeyError(f"unknown suite {name!r}")
    return SUITE_FUNCS[name](seed, cases)
