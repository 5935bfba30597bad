"""Shared generators and oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from qrank._intfactor import gf_factor_squarefree, gf_from_zz, gf_is_squarefree, gf_monic
from qrank.arith import primes_upto
from qrank.hereditary import has_root_of_unity_root
from qrank.numfield import QQ, NumberField, factor_over_Q, _to_primitive_int
from qrank.poly import Poly


def qpoly(*coeffs) -> Poly:
    return Poly([Fraction(c) for c in coeffs])


def gaussian_field() -> NumberField:
    return NumberField(qpoly(1, 0, 1))  # t^2 + 1


def sqrt2_field() -> NumberField:
    return NumberField(qpoly(-2, 0, 1))  # t^2 - 2


def sqrt3_field() -> NumberField:
    return NumberField(qpoly(-3, 0, 1))  # t^2 - 3


def sqrtm3_field() -> NumberField:
    return NumberField(qpoly(3, 0, 1))  # t^2 + 3


def cyclotomic(n: int) -> Poly:
    """Phi_n by dividing x^n - 1 by all lower cyclotomics."""
    f = qpoly(*([-1] + [0] * (n - 1) + [1]))
    from qrank.poly import divrem

    for d in range(1, n):
        if n % d == 0:
            f = divrem(f, cyclotomic(d))[0]
    return f


def random_monic(rng: random.Random, deg: int, bound: int = 10) -> Poly:
    coeffs = [Fraction(rng.randint(-bound, bound)) for _ in range(deg)]
    return Poly(coeffs + [Fraction(1)])


def random_irreducible(
    rng: random.Random,
    max_deg: int,
    bound: int = 10,
    forbid_root_of_unity: bool = True,
) -> Poly:
    """Rejection-sample a monic irreducible over Q with nonzero constant
    term and (optionally) no cyclotomic roots."""
    while True:
        deg = rng.randint(1, max_deg)
        p = random_monic(rng, deg, bound)
        if p.coeffs[0] == 0:
            continue
        _, factors = factor_over_Q(p)
        if len(factors) != 1 or factors[0][1] != 1:
            continue
        if forbid_root_of_unity and has_root_of_unity_root(QQ, p):
            continue
        return p


def modular_degree_pattern_ok(
    f: Poly, rng: random.Random, trials: int = 5
) -> bool:
    """Independent spot check for a claimed irreducible f over Q: reduce
    modulo several primes where f stays squarefree; the modular
    irreducible degrees must form a partition of deg f every time."""
    ints = _to_primitive_int(f)
    candidates = [p for p in primes_upto(500) if p > 2]
    checked = 0
    while checked < trials and candidates:
        p = candidates.pop(rng.randrange(len(candidates)))
        if ints[-1] % p == 0:
            continue
        F = gf_monic(gf_from_zz(ints, p), p)
        if not gf_is_squarefree(F, p):
            continue
        degs = [g.size - 1 for g in gf_factor_squarefree(F, p)]
        if sum(degs) != f.degree:
            return False
        checked += 1
    return True
