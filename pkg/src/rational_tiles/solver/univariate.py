"""Roots of unity of one-variable polynomials.

The search splits the roots by the 2-adic shape of their order:

* odd order: the largest factor h of f with Graeffe(h) ∝ h;
* order ≡ 2 (mod 4): the same on f(−x), negated;
* order ≡ 0 (mod 4): gcd(f(x), f(−x)) = E(x²) and recursion on E, keeping
  both square roots of every root found.

Only the final, purely cyclotomic factors are factored by sympy, and each
irreducible factor is matched against Φₙ for the few n with φ(n) = degree.
"""

from fractions import Fraction
from functools import cache

from sympy import QQ, Poly, cyclotomic_poly, divisors, isprime, symbols

from rational_tiles.algebra.elimination import rationalize_coefficients
from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.algebra.unipoly import UniPoly
from rational_tiles.errors import AlgebraError
from rational_tiles.solver.roots import RootOfUnity
from rational_tiles.utils.logger import logger

__all__ = [
    "cyclotomic_orders",
    "cyclotomic_roots_univariate",
    "inverse_totient",
    "orders_with_phi_at_most",
]

_X = symbols("x")


@cache
def inverse_totient(value: int) -> frozenset[int]:
    """All n with φ(n) = ``value``."""
    if value < 1:
        return frozenset()
    primes = sorted(d + 1 for d in divisors(value) if isprime(d + 1))

    def search(remaining: int, start: int) -> set[int]:
        found = {1} if remaining == 1 else set()
        for idx in range(start, len(primes)):
            p = primes[idx]
            if remaining % (p - 1):
                continue
            rest, power = remaining // (p - 1), p
            while True:
                found.update(power * m for m in search(rest, idx + 1))
                if rest % p:
                    break
                rest //= p
                power *= p
        return found

    return frozenset(search(value, 0))


@cache
def orders_with_phi_at_most(bound: int) -> tuple[int, ...]:
    """Sorted orders n with φ(n) ≤ ``bound``."""
    return tuple(sorted(set().union(*(inverse_totient(d) for d in range(1, bound + 1)))))


def _negate(poly: Poly) -> Poly:
    return Poly.from_dict({m: c * (-1) ** m[0] for m, c in poly.terms()}, _X, domain=QQ)


def _graeffe(poly: Poly) -> Poly:
    """E with E(x²) = f(x)·f(−x)."""
    prod = poly * _negate(poly)
    return Poly.from_dict({(m[0] // 2,): c for m, c in prod.terms()}, _X, domain=QQ)


def _odd_part(poly: Poly) -> Poly:
    h = poly
    while h.degree() > 0:
        g = h.gcd(_graeffe(h))
        if g.degree() == h.degree():
            break
        h = g
    return h


def cyclotomic_orders(poly: Poly) -> list[int]:
    """Orders n of the Φₙ factors of a product of distinct cyclotomic polynomials."""
    orders = []
    if poly.degree() <= 0:
        return orders
    for factor, _ in poly.factor_list()[1]:
        monic = factor.monic()
        for n in sorted(inverse_totient(monic.degree())):
            if Poly(cyclotomic_poly(n, _X), _X, domain=QQ) == monic:
                orders.append(n)
                break
        else:
            raise AlgebraError(f"factor {factor.as_expr()} of a cyclotomic part is not cyclotomic")
    return orders


def _primitive_roots(n: int, shift: Fraction = Fraction(0)) -> set[RootOfUnity]:
    return {RootOfUnity.from_fraction(Fraction(k, n) + shift) for k in range(n) if Fraction(k, n).denominator == n}


def _rational_roots_of_unity(poly: Poly) -> set[RootOfUnity]:
    poly = poly.sqf_part()
    while poly.degree() > 0 and poly.eval(0) == 0:
        poly = poly.quo(Poly(_X, _X, domain=QQ))
    if poly.degree() <= 0:
        return set()
    roots: set[RootOfUnity] = set()
    for n in cyclotomic_orders(_odd_part(poly)):
        roots |= _primitive_roots(n)
    for m in cyclotomic_orders(_odd_part(_negate(poly))):
        roots |= _primitive_roots(m, Fraction(1, 2))
    even = poly.gcd(_negate(poly))
    if even.degree() > 0:
        half = Poly.from_dict({(m[0] // 2,): c for m, c in even.terms()}, _X, domain=QQ)
        for root in _rational_roots_of_unity(half):
            a = root.fraction / 2
            roots.add(RootOfUnity.from_fraction(a))
            roots.add(RootOfUnity.from_fraction(a + Fraction(1, 2)))
    return roots


def cyclotomic_roots_univariate(f) -> set[RootOfUnity]:
    """All roots of unity ζ with f(ζ) = 0.

    Parameters
    ----------
    f : UniPoly or SparsePoly
        A nonzero one-variable polynomial. Cyclotomic coefficients are
        accepted: the Galois norm is solved and every root is confirmed on
        ``f`` itself.

    Raises
    ------
    AlgebraError
        If ``f`` is the zero polynomial.
    """
    sparse = f if isinstance(f, SparsePoly) else _as_sparse(f)
    if sparse.is_zero():
        raise AlgebraError("the zero polynomial vanishes at every root of unity")
    if sparse.nvars != 1:
        raise AlgebraError("cyclotomic_roots_univariate needs a one-variable polynomial")
    rational = sparse if sparse.is_rational() else rationalize_coefficients(sparse)
    roots = _rational_roots_of_unity(rational.to_sympy((_X,)))
    if not sparse.is_rational():
        roots = {r for r in roots if sparse.evaluate_roots([r.fraction]).is_zero()}
    logger.debug(f"{len(sparse.terms)}-term univariate polynomial: {len(roots)} roots of unity")
    return roots


def _as_sparse(f: UniPoly) -> SparsePoly:
    if not isinstance(f, UniPoly):
        raise TypeError(f"expected UniPoly or SparsePoly, got {type(f).__name__}")
    return SparsePoly(1, {(k,): c for k, c in enumerate(f.coeffs)})

