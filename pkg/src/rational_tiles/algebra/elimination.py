"""Galois norms, resultants and gcd helpers.

Everything here works on :class:`SparsePoly` values and delegates the heavy
integer/rational polynomial arithmetic to sympy. A cyclotomic coefficient
ζₙ is carried as an extra generator ``t`` and reduced modulo Φₙ(t) at the
end, which keeps resultants exact over Q(ζₙ).
"""

from fractions import Fraction
import math

from sympy import QQ, Poly, Rational, symbols

from rational_tiles.algebra.cyclotomic import CyclotomicElement, cyclotomic_coefficients, euler_phi
from rational_tiles.algebra.sparse import VAR_NAMES, SparsePoly, galois_conjugate
from rational_tiles.errors import AlgebraError, InconsistencyError
from rational_tiles.utils.logger import logger

__all__ = [
    "exact_quotient",
    "irreducible_factors",
    "poly_gcd",
    "rationalize_coefficients",
    "resultant_eliminate",
    "squarefree_part",
]

_T = symbols("t")
_GENS = symbols(VAR_NAMES)


def _zeta_poly(poly: SparsePoly, order: int, gens: tuple) -> Poly:
    """Write ``poly`` over Q[t, gens] with ζ_order ↦ t (exponents must be ≥ 0)."""
    rep: dict[tuple[int, ...], Rational] = {}
    for exps, coeff in poly.terms.items():
        for j, value in enumerate(coeff.lifted(order)):
            if value:
                key = (j, *exps)
                rep[key] = rep.get(key, Rational(0)) + Rational(value.numerator, value.denominator)
    if not rep:
        rep = {(0,) * (len(gens) + 1): Rational(0)}
    return Poly.from_dict(rep, _T, *gens, domain=QQ)


def _from_zeta_poly(poly: Poly, order: int, nvars: int) -> SparsePoly:
    """Inverse of :func:`_zeta_poly` after reduction modulo Φ_order(t)."""
    terms: dict[tuple[int, ...], list[Fraction]] = {}
    for monom, coeff in poly.terms():
        j, exps = monom[0], tuple(monom[1:]) + (0,) * (nvars - len(monom) + 1)
        slot = terms.setdefault(exps, [Fraction(0)] * (j + 1))
        if len(slot) <= j:
            slot.extend([Fraction(0)] * (j + 1 - len(slot)))
        slot[j] += Fraction(int(coeff.p), int(coeff.q))
    return SparsePoly(nvars, {e: CyclotomicElement(order, c) for e, c in terms.items()})


def _phi_poly(order: int, ngens: int) -> Poly:
    rep = {(k,) + (0,) * ngens: Rational(c) for k, c in enumerate(cyclotomic_coefficients(order)) if c}
    return Poly.from_dict(rep, _T, *_GENS[:ngens], domain=QQ)


def rationalize_coefficients(
    poly: SparsePoly, *, order: int | None = None, method: str = "auto"
) -> SparsePoly:
    """Multiply ``poly`` by all its Galois conjugates.

    Parameters
    ----------
    poly : SparsePoly
        Polynomial with coefficients in Q(ζₙ).
    order : int, optional
        Declared coefficient order n; defaults to the minimal one. A rational
        ``poly`` with a declared n returns ``poly ** φ(n)``.
    method : {"auto", "product", "norm"}
        ``product`` multiplies the conjugates one by one; ``norm`` computes the
        same product as Res_t(Φₙ(t), P(t)); ``auto`` picks the product for
        φ(n) ≤ 4.

    Raises
    ------
    InconsistencyError
        If a coefficient of the product is not rational.
    """
    n = order or poly.order
    if poly.order > 1 and n % poly.order:
        raise AlgebraError(f"declared order {n} does not contain the coefficients (order {poly.order})")
    phi = euler_phi(n)
    if poly.is_rational():
        return poly if n == 1 else poly**phi
    if method == "auto":
        method = "product" if phi <= 4 else "norm"
    shift, base = poly.normalized()
    if method == "product":
        result = SparsePoly.constant(poly.nvars, 1)
        for k in range(1, n):
            if math.gcd(k, n) == 1:
                result = result * galois_conjugate(base, k)
    elif method == "norm":
        gens = _GENS[: poly.nvars]
        p_t = _zeta_poly(base, n, gens)
        norm = _phi_poly(n, poly.nvars).resultant(p_t)
        result = SparsePoly.from_sympy(Poly(norm, *gens, domain=QQ), poly.nvars)
    else:
        raise AlgebraError(f"unknown rationalization method {method!r}")
    if not result.is_rational():
        raise InconsistencyError("Galois norm has a non-rational coefficient")
    moved = {tuple(e + phi * s for e, s in zip(exps, shift, strict=True)): c for exps, c in result.terms.items()}
    logger.debug(f"Rationalized {len(poly.terms)}-term polynomial over Q(zeta_{n}) via {method}")
    return SparsePoly(poly.nvars, moved)


def resultant_eliminate(p: SparsePoly, q: SparsePoly, var: int):
    """Resultant of ``p`` and ``q`` with respect to variable index ``var``.

    Laurent monomials are stripped first. The sign follows the Sylvester
    matrix with ``p``'s coefficients in the top rows. For one-variable inputs
    the result is a :class:`CyclotomicElement`; otherwise a
    :class:`SparsePoly` in the remaining variables (in their original order).

    Raises
    ------
    AlgebraError
        If an input is zero or ``var`` occurs in neither polynomial.
    """
    if p.is_zero() or q.is_zero():
        raise AlgebraError("resultant of the zero polynomial")
    if p.nvars != q.nvars:
        raise AlgebraError("resultant inputs have different variable counts")
    nvars = p.nvars
    _, p = p.normalized()
    _, q = q.normalized()
    dp, dq = p.degree(var), q.degree(var)
    if dp <= 0 and dq <= 0:
        raise AlgebraError(f"variable {VAR_NAMES[var]} occurs in neither polynomial")
    rest = [i for i in range(nvars) if i != var]
    if dp == 0:
        return _drop_variable(p**dq, var)
    if dq == 0:
        return _drop_variable(q**dp, var)
    order = math.lcm(p.order, q.order)
    perm = [var, *rest]
    gens = tuple(_GENS[i] for i in perm)
    p_perm = SparsePoly(nvars, {tuple(e[i] for i in perm): c for e, c in p.terms.items()})
    q_perm = SparsePoly(nvars, {tuple(e[i] for i in perm): c for e, c in q.terms.items()})
    if order == 1:
        res = p_perm.to_sympy(gens).resultant(q_perm.to_sympy(gens))
        if not rest:
            return CyclotomicElement.rational(Fraction(int(res.p), int(res.q)))
        return SparsePoly.from_sympy(Poly(res, *gens[1:], domain=QQ), nvars - 1)
    # Main variable first, then t, then the remaining variables.
    p_t = _zeta_poly(p_perm, order, gens).reorder(gens[0], _T, *gens[1:])
    q_t = _zeta_poly(q_perm, order, gens).reorder(gens[0], _T, *gens[1:])
    res = p_t.resultant(q_t)
    res_poly = Poly(res, _T, *gens[1:], domain=QQ)
    reduced = res_poly.rem(Poly(_phi_poly(order, 0).as_expr(), _T, *gens[1:], domain=QQ))
    if not rest:
        value = [Fraction(0)] * euler_phi(order)
        for monom, coeff in reduced.terms():
            value[monom[0]] += Fraction(int(coeff.p), int(coeff.q))
        return CyclotomicElement(order, value)
    return _from_zeta_poly(reduced, order, nvars - 1)


def _drop_variable(poly: SparsePoly, var: int):
    terms = {e[:var] + e[var + 1 :]: c for e, c in poly.terms.items()}
    if poly.nvars == 1:
        return terms.get((), CyclotomicElement.rational(0))
    return SparsePoly(poly.nvars - 1, terms)


def _require_rational(*polys: SparsePoly) -> None:
    for poly in polys:
        if not poly.is_rational():
            raise AlgebraError("operation needs rational coefficients; rationalize first")


def poly_gcd(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Greatest common divisor of two rational polynomials (Laurent parts ignored)."""
    _require_rational(p, q)
    if p.is_zero():
        return q.normalized()[1]
    if q.is_zero():
        return p.normalized()[1]
    g = p.to_sympy().gcd(q.to_sympy())
    return SparsePoly.from_sympy(g, p.nvars)


def exact_quotient(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """``p / q`` for rational polynomials when the division is exact."""
    _require_rational(p, q)
    return SparsePoly.from_sympy(p.to_sympy().exquo(q.to_sympy()), p.nvars)


def squarefree_part(p: SparsePoly) -> SparsePoly:
    """Square-free part of a rational polynomial, Laurent monomial stripped."""
    _require_rational(p)
    return SparsePoly.from_sympy(p.to_sympy().sqf_part(), p.nvars)


def irreducible_factors(p: SparsePoly) -> list[tuple[SparsePoly, int]]:
    """Irreducible factors over Q with multiplicities (constants and monomials dropped)."""
    _require_rational(p)
    _, factors = p.to_sympy().factor_list()
    out = []
    for factor, multiplicity in factors:
        poly = SparsePoly.from_sympy(factor, p.nvars).normalized()[1]
        if len(poly.terms) > 1:
            out.append((poly, multiplicity))
    return out
