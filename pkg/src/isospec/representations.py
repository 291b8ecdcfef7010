"""Differential and finite-difference realizations of the canonical pair.

On the line, ``a = d/dx`` and ``b = x`` realize ``a*b - b*a = 1`` on monomial
polynomials (:func:`apply_continuum`).  On a uniform lattice of nonzero step
delta the same relation is realized by shift operators
(:func:`realize_lattice`):

    a  ->  (T - 1)/delta            the forward difference,
    b  ->  x * T^{-1}               multiply-then-step-back,

where ``T^k f(x) = f(x + k*delta)``.  A :class:`ShiftOperator` is a finite sum
``sum_k p_k(x) * T^k`` with polynomial coefficients; composition follows the
skew rule ``T^k * q(x) = q(x + k*delta) * T^k`` and shifts add.

Everything is immutable and exact.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraElement
from .errors import BasisMismatchError, ParameterError, StepMismatchError
from .polynomials import Polynomial
from .rationals import as_fraction, format_fraction

__all__ = [
    "ShiftOperator",
    "forward_difference",
    "backward_difference",
    "lattice_raising",
    "realize_lattice",
    "apply_continuum",
    "fock_vector",
]

_ZERO = Fraction(0)


def _check_step(step) -> Fraction:
    step = as_fraction(step)
    if step == 0:
        raise ParameterError("lattice step must be nonzero")
    return step


class ShiftOperator:
    """Finite sum ``sum_k p_k(x) * T^k`` over a fixed lattice step.

    Terms map an integer shift ``k`` to a monomial-basis coefficient
    polynomial; zero coefficients are dropped on construction.
    """

    __slots__ = ("step", "_terms")

    def __init__(self, step, terms=None):
        step_value = _check_step(step)
        clean: dict[int, Polynomial] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for shift, coeff in items:
                shift = int(shift)
                poly = coeff if isinstance(coeff, Polynomial) else Polynomial(coeff)
                if not poly.basis.is_monomial:
                    raise BasisMismatchError(
                        "shift-operator coefficients must be monomial polynomials"
                    )
                if poly.is_zero:
                    continue
                if shift in clean:
                    poly = clean[shift] + poly
                if poly.is_zero:
                    clean.pop(shift, None)
                else:
                    clean[shift] = poly
        object.__setattr__(self, "step", step_value)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ShiftOperator is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, step) -> "ShiftOperator":
        return cls(step, {0: Polynomial.constant(1)})

    @classmethod
    def zero(cls, step) -> "ShiftOperator":
        return cls(step)

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> dict[int, Polynomial]:
        return dict(self._terms)

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    @property
    def n_points(self) -> int:
        """Number of lattice points the operator reads."""
        return len(self._terms)

    @property
    def width(self) -> int:
        """max shift - min shift, 0 for the zero or one-point operator."""
        if not self._terms:
            return 0
        return max(self._terms) - min(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, shift: int) -> Polynomial:
        return self._terms.get(shift, Polynomial.zero())

    # -- arithmetic ---------------------------------------------------

    def _check_same_step(self, other: "ShiftOperator"):
        if self.step != other.step:
            raise StepMismatchError(
                f"steps differ: {format_fraction(self.step)} vs "
                f"{format_fraction(other.step)}"
            )

    def __add__(self, other):
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        self._check_same_step(other)
        out = dict(self._terms)
        for k, p in other._terms.items():
            q = out.get(k)
            out[k] = p if q is None else q + p
        return ShiftOperator(self.step, out)

    def __sub__(self, other):
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ShiftOperator(self.step, {k: -p for k, p in self._terms.items()})

    def __mul__(self, other):
        """Operator composition, or scaling by an exact rational."""
        if isinstance(other, ShiftOperator):
            self._check_same_step(other)
            out: dict[int, Polynomial] = {}
            for k1, p1 in self._terms.items():
                offset = k1 * self.step
                for k2, p2 in other._terms.items():
                    # T^{k1} q(x) = q(x + k1*step) T^{k1}
                    q = p1 * p2.shifted(offset)
                    key = k1 + k2
                    acc = out.get(key)
                    out[key] = q if acc is None else acc + q
            return ShiftOperator(self.step, out)
        try:
            scalar = as_fraction(other)
        except TypeError:
            return NotImplemented
        return ShiftOperator(
            self.step, {k: scalar * p for k, p in self._terms.items()}
        )

    def __rmul__(self, other):
        # scalar * operator; operator * operator is handled by __mul__
        return self.__mul__(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = ShiftOperator.identity(self.step)
        for _ in range(exponent):
            out = out * self
        return out

    def commutator(self, other: "ShiftOperator") -> "ShiftOperator":
        return self * other - other * self

    def apply(self, p: Polynomial) -> Polynomial:
        """Apply to a monomial-basis polynomial: sum_k p_k(x) * p(x + k*step)."""
        if not p.basis.is_monomial:
            raise BasisMismatchError(
                "shift operators act on monomial coefficient vectors; convert first"
            )
        out = Polynomial.zero()
        for k, pk in self._terms.items():
            out = out + pk * p.shifted(k * self.step)
        return out

    # -- housekeeping -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self.step == other.step and self._terms == other._terms

    def __hash__(self):
        return hash((self.step, frozenset(self._terms.items())))

    def __repr__(self):
        body = ", ".join(f"{k:+d}: {p}" for k, p in sorted(self._terms.items()))
        return f"ShiftOperator(step={format_fraction(self.step)}, {{{body}}})"

    # -- serialization -------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "delta": format_fraction(self.step),
            "terms": [
                {
                    "shift": k,
                    "coeffs": [format_fraction(c) for c in self._terms[k].coeffs],
                }
                for k in sorted(self._terms)
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "ShiftOperator":
        return cls(
            obj["delta"],
            {t["shift"]: Polynomial(t["coeffs"]) for t in obj["terms"]},
        )


def forward_difference(step) -> ShiftOperator:
    """``(f(x+step) - f(x)) / step``: the lattice realization of ``a``."""
    step = _check_step(step)
    inv = Fraction(1) / step
    return ShiftOperator(step, {1: Polynomial.constant(inv), 0: Polynomial.constant(-inv)})


def backward_difference(step) -> ShiftOperator:
    """``(f(x) - f(x-step)) / step``."""
    step = _check_step(step)
    inv = Fraction(1) / step
    return ShiftOperator(step, {0: Polynomial.constant(inv), -1: Polynomial.constant(-inv)})


def lattice_raising(step) -> ShiftOperator:
    """``x * T^{-1}``: the lattice realization of ``b``.

    The one-term closed form of multiply-by-x composed with the unit
    step-back; its n-th power is ``x^(n) * T^{-n}``, which keeps stencils
    minimal.
    """
    return ShiftOperator(step, {-1: Polynomial.identity()})


def realize_lattice(element: AlgebraElement, step) -> ShiftOperator:
    """Realize a normal-ordered element as a shift operator on the lattice.

    Substitutes ``a -> forward_difference`` and ``b -> x*T^{-1}`` and
    multiplies out in the skew product; the map is an exact algebra
    homomorphism, so the defining relation survives:
    ``[realize(a), realize(b)] = identity``.
    """
    step = _check_step(step)
    a_op = forward_difference(step)
    b_op = lattice_raising(step)
    # cache generator powers; elements are tiny, degrees are small
    a_pows: list[ShiftOperator] = [ShiftOperator.identity(step)]
    b_pows: list[ShiftOperator] = [ShiftOperator.identity(step)]
    out = ShiftOperator.zero(step)
    for (m, n), c in sorted(element.terms.items()):
        while len(b_pows) <= m:
            b_pows.append(b_pows[-1] * b_op)
        while len(a_pows) <= n:
            a_pows.append(a_pows[-1] * a_op)
        out = out + c * (b_pows[m] * a_pows[n])
    return out


def apply_continuum(element: AlgebraElement, p: Polynomial) -> Polynomial:
    """Apply an element in the differential realization ``a = d/dx, b = x``.

    Each ``b^m a^n`` term differentiates ``n`` times, then multiplies by
    ``x^m``; the input must be in the monomial basis.
    """
    if not p.basis.is_monomial:
        raise BasisMismatchError("continuum action is defined on the monomial basis")
    out = Polynomial.zero()
    for (m, n), c in element.terms.items():
        q = p
        for _ in range(n):
            q = q.derivative()
        if q.is_zero:
            continue
        out = out + c * Polynomial((0,) * m + tuple(q.coeffs))
    return out


def fock_vector(n: int, step) -> Polynomial:
    """n-fold application of the lattice ``b`` to the constant 1.

    The constant is the natural vacuum on the lattice (the forward difference
    annihilates it), and the resulting vector equals the degree-``n``
    quasi-monomial; this function computes it by iterated application so it
    can be checked independently against the product expansion.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a non-negative integer")
    b_op = lattice_raising(_check_step(step))
    out = Polynomial.constant(1)
    for _ in range(n):
        out = b_op.apply(out)
    return out
