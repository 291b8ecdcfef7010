"""Independent reference generators for classical polynomial families.

These exist purely as cross-checks for the operator machinery and are never
used to construct it: the continuum families (hermite, laguerre, legendre,
jacobi) come from their three-term recurrences, the lattice families (hahn,
meixner, charlier) from terminating hypergeometric sums, all over exact
rationals.

Normalization conventions differ between handbooks, so comparisons are
projective: equal up to one nonzero rational factor.  Where the matching
operator lives on a mirrored lattice the family records the affine change of
variable (x -> scale*x + shift) once, discovered during bring-up and frozen
here; ``reference_in_operator_variable`` applies it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BasisMismatchError, ParameterError
from .polynomials import Polynomial
from .rationals import as_fraction, format_fraction

__all__ = [
    "FamilySpec",
    "family",
    "FAMILY_NAMES",
    "reference_polynomial",
    "reference_in_operator_variable",
    "projective_equal",
    "table_csv",
]

_ONE = Fraction(1)


@dataclass(frozen=True)
class FamilySpec:
    """A named family with its rational parameters and recorded variable map."""

    name: str
    params: tuple[tuple[str, Fraction], ...] = ()
    variable_scale: Fraction = _ONE
    variable_shift: Fraction = Fraction(0)
    max_degree: int | None = None

    def param(self, key: str) -> Fraction:
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def __str__(self):
        inner = ", ".join(f"{k}={format_fraction(v)}" for k, v in self.params)
        return f"{self.name}({inner})"


def _require(condition, message):
    if not condition:
        raise ParameterError(message)


def _exponent(value, name) -> Fraction:
    value = as_fraction(value)
    _require(value > -1, f"{name} must be a rational > -1, got {value}")
    return value


def family(name: str, **params) -> FamilySpec:
    """Validated family descriptor; see FAMILY_NAMES for the choices."""
    key = name.strip().lower().replace("_", "-")
    if key == "hermite":
        _require(not params, "hermite takes no parameters")
        return FamilySpec("hermite")
    if key == "laguerre":
        alpha = _exponent(params.pop("alpha", 0), "alpha")
        _require(not params, f"unexpected laguerre parameters {sorted(params)}")
        return FamilySpec("laguerre", (("alpha", alpha),))
    if key == "legendre":
        _require(not params, "legendre takes no parameters")
        return FamilySpec("legendre")
    if key == "jacobi":
        alpha = _exponent(params.pop("alpha", 0), "alpha")
        beta = _exponent(params.pop("beta", 0), "beta")
        _require(not params, f"unexpected jacobi parameters {sorted(params)}")
        return FamilySpec("jacobi", (("alpha", alpha), ("beta", beta)))
    if key == "hahn":
        alpha = _exponent(params.pop("alpha", 0), "alpha")
        beta = _exponent(params.pop("beta", 0), "beta")
        size = params.pop("size", None)
        _require(isinstance(size, int) and size >= 2,
                 f"size must be an integer >= 2, got {size!r}")
        _require(not params, f"unexpected hahn parameters {sorted(params)}")
        # the matching lattice preset runs on the mirrored grid
        return FamilySpec(
            "hahn",
            (("alpha", alpha), ("beta", beta), ("size", Fraction(size))),
            variable_scale=Fraction(-1),
            max_degree=size - 1,
        )
    if key == "meixner":
        gamma = as_fraction(params.pop("gamma", 1))
        _require("mu" in params, "meixner requires mu")
        mu = as_fraction(params.pop("mu"))
        _require(mu not in (0, 1), f"mu must differ from 0 and 1, got {mu}")
        _require(
            not (gamma <= 0 and gamma.denominator == 1),
            f"gamma must not be a non-positive integer, got {gamma}",
        )
        _require(not params, f"unexpected meixner parameters {sorted(params)}")
        return FamilySpec("meixner", (("gamma", gamma), ("mu", mu)))
    if key == "charlier":
        _require("mu" in params, "charlier requires mu")
        mu = as_fraction(params.pop("mu"))
        _require(mu != 0, f"mu must be nonzero, got {mu}")
        _require(not params, f"unexpected charlier parameters {sorted(params)}")
        return FamilySpec("charlier", (("mu", mu),))
    raise ParameterError(f"unknown family {name!r}; choose from {sorted(FAMILY_NAMES)}")


def _check_degree(spec: FamilySpec, k: int):
    if not isinstance(k, int) or k < 0:
        raise ParameterError("degree must be a non-negative integer")
    if spec.max_degree is not None and k > spec.max_degree:
        raise ParameterError(
            f"{spec.name} has only degrees 0..{spec.max_degree}, got {k}"
        )


def _by_recurrence(k: int, p0: Polynomial, p1: Polynomial, step_fn) -> Polynomial:
    """Run p_{n+1} = step_fn(n, p_n, p_{n-1}) up to degree k."""
    if k == 0:
        return p0
    prev, cur = p0, p1
    for n in range(1, k):
        prev, cur = cur, step_fn(n, cur, prev)
    return cur


def _hermite(spec: FamilySpec, k: int) -> Polynomial:
    x = Polynomial.identity()
    return _by_recurrence(
        k,
        Polynomial.constant(1),
        2 * x,
        lambda n, cur, prev: 2 * (x * cur) - (2 * n) * prev,
    )


def _laguerre(spec: FamilySpec, k: int) -> Polynomial:
    alpha = spec.param("alpha")
    x = Polynomial.identity()
    return _by_recurrence(
        k,
        Polynomial.constant(1),
        Polynomial.constant(1 + alpha) - x,
        lambda n, cur, prev: Fraction(1, n + 1)
        * ((Polynomial.constant(2 * n + 1 + alpha) - x) * cur - (n + alpha) * prev),
    )


def _legendre(spec: FamilySpec, k: int) -> Polynomial:
    x = Polynomial.identity()
    return _by_recurrence(
        k,
        Polynomial.constant(1),
        x,
        lambda n, cur, prev: Fraction(1, n + 1) * ((2 * n + 1) * (x * cur) - n * prev),
    )


def _jacobi(spec: FamilySpec, k: int) -> Polynomial:
    alpha, beta = spec.param("alpha"), spec.param("beta")
    x = Polynomial.identity()
    p1 = Fraction(1, 2) * ((alpha + beta + 2) * x + Polynomial.constant(alpha - beta))

    def step(n, cur, prev):
        s = 2 * n + alpha + beta
        lead = (s + 1) * (s * (s + 2) * x + Polynomial.constant(alpha**2 - beta**2))
        back = 2 * (n + alpha) * (n + beta) * (s + 2)
        denom = 2 * (n + 1) * (n + alpha + beta + 1) * s
        return (lead * cur - back * prev) * (Fraction(1) / denom)

    return _by_recurrence(k, Polynomial.constant(1), p1, step)


def _neg_x_pochhammer(j: int) -> Polynomial:
    """(-x)_j = (-x)(-x+1)...(-x+j-1) as a polynomial in x."""
    out = Polynomial.constant(1)
    for i in range(j):
        out = out * Polynomial((i, -1))
    return out


def _hypergeometric_sum(k: int, tops: list[Fraction], bottoms: list[Fraction],
                        z: Fraction) -> Polynomial:
    """sum_j [prod (tops)_j] (-x)_j z^j / [prod (bottoms)_j j!], terminating
    at j = k because (-k)_j vanishes beyond; tops excludes the (-x) slot."""
    acc = Polynomial.constant(1)
    coeff = _ONE
    for j in range(1, k + 1):
        for t in tops:
            coeff *= t + (j - 1)
        for bq in bottoms:
            denom = bq + (j - 1)
            if denom == 0:
                raise ParameterError(
                    f"hypergeometric bottom parameter {format_fraction(bq)} "
                    f"degenerates at term {j}"
                )
            coeff /= denom
        coeff *= z
        coeff /= j
        acc = acc + coeff * _neg_x_pochhammer(j)
    return acc


def _hahn(spec: FamilySpec, k: int) -> Polynomial:
    alpha, beta = spec.param("alpha"), spec.param("beta")
    size = int(spec.param("size"))
    return _hypergeometric_sum(
        k,
        tops=[Fraction(-k), k + alpha + beta + 1],
        bottoms=[beta + 1, Fraction(1 - size)],
        z=_ONE,
    )


def _meixner(spec: FamilySpec, k: int) -> Polynomial:
    gamma, mu = spec.param("gamma"), spec.param("mu")
    return _hypergeometric_sum(
        k, tops=[Fraction(-k)], bottoms=[gamma], z=_ONE - _ONE / mu
    )


def _charlier(spec: FamilySpec, k: int) -> Polynomial:
    mu = spec.param("mu")
    return _hypergeometric_sum(k, tops=[Fraction(-k)], bottoms=[], z=-_ONE / mu)


_GENERATORS = {
    "hermite": _hermite,
    "laguerre": _laguerre,
    "legendre": _legendre,
    "jacobi": _jacobi,
    "hahn": _hahn,
    "meixner": _meixner,
    "charlier": _charlier,
}

FAMILY_NAMES = tuple(sorted(_GENERATORS))


def reference_polynomial(spec: FamilySpec, k: int) -> Polynomial:
    """The degree-k member of the family, exact, in the monomial basis."""
    _check_degree(spec, k)
    return _GENERATORS[spec.name](spec, k)


def reference_in_operator_variable(spec: FamilySpec, k: int) -> Polynomial:
    """The reference polynomial with the recorded affine variable map applied,
    ready for projective comparison against operator eigenvectors."""
    ref = reference_polynomial(spec, k)
    if spec.variable_scale == 1 and spec.variable_shift == 0:
        return ref
    return ref.affine(spec.variable_scale, spec.variable_shift)


def projective_equal(p: Polynomial, q: Polynomial) -> bool:
    """True iff p = c*q for some nonzero rational c.

    Zero is projectively equal to zero only.  Inputs must share a basis.
    """
    if p.basis != q.basis:
        raise BasisMismatchError("projective comparison needs a common basis")
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    if p.degree != q.degree:
        return False
    scale = p.leading / q.leading
    return p.coeffs == tuple(scale * c for c in q.coeffs)


def table_csv(spec: FamilySpec, k_max: int) -> str:
    """CSV table of the family up to degree k_max, one row per degree."""
    k_top = k_max if spec.max_degree is None else min(k_max, spec.max_degree)
    header = ["k"] + [f"c{i}" for i in range(k_top + 1)]
    lines = [",".join(header)]
    for k in range(k_top + 1):
        poly = reference_polynomial(spec, k)
        row = [str(k)] + [format_fraction(poly.coefficient(i)) for i in range(k_top + 1)]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
