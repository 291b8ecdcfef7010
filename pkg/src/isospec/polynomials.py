"""Dense exact polynomials tagged with the basis they are written in.

Two graded bases appear throughout.  The monomial basis is 1, x, x^2, ...
The quasi-monomial basis at step delta is the falling-factorial ladder

    x^(0) = 1,    x^(k+1) = (x - k*delta) * x^(k),

so x^(k) = x(x - delta)...(x - (k-1)delta), which degenerates to x^k as the
step goes to zero.  Both ladders are monic and graded, hence conversion
between them is a unitriangular change of coordinates: exact, invertible and
degree preserving.

Coefficient vectors are stored dense, lowest degree first, with the trailing
coefficient nonzero (the zero polynomial has an empty vector and degree -1).
Values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BasisMismatchError, ParameterError
from .rationals import as_fraction, format_fraction

__all__ = [
    "Basis",
    "MONOMIAL",
    "quasi_basis",
    "Polynomial",
    "quasi_monomial",
    "convert_basis",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Basis:
    """Marker for a coefficient basis: monomial when ``step`` is None,
    otherwise the quasi-monomial ladder at that (nonzero) step."""

    step: Fraction | None = None

    def __post_init__(self):
        if self.step is not None:
            step = as_fraction(self.step)
            if step == 0:
                raise ParameterError("lattice step must be nonzero")
            object.__setattr__(self, "step", step)

    @property
    def is_monomial(self) -> bool:
        return self.step is None

    def __str__(self):
        if self.is_monomial:
            return "monomial"
        return f"quasi({format_fraction(self.step)})"


MONOMIAL = Basis()


def quasi_basis(step) -> Basis:
    """Quasi-monomial basis at a nonzero step."""
    return Basis(as_fraction(step))


class Polynomial:
    """Immutable dense polynomial over exact rationals."""

    __slots__ = ("_coeffs", "basis")

    def __init__(self, coeffs=(), basis: Basis = MONOMIAL):
        if not isinstance(basis, Basis):
            raise TypeError("basis must be a Basis")
        vec = [as_fraction(c) for c in coeffs]
        while vec and vec[-1] == 0:
            vec.pop()
        self._coeffs = tuple(vec)
        self.basis = basis

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, basis: Basis = MONOMIAL) -> "Polynomial":
        return cls((), basis)

    @classmethod
    def constant(cls, value, basis: Basis = MONOMIAL) -> "Polynomial":
        return cls((value,), basis)

    @classmethod
    def identity(cls) -> "Polynomial":
        """The monomial-basis polynomial ``x``."""
        return cls((0, 1))

    @classmethod
    def unit_vector(cls, k: int, basis: Basis = MONOMIAL) -> "Polynomial":
        """The degree-``k`` basis element of ``basis``."""
        return cls((0,) * k + (1,), basis)

    # -- inspection ----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else _ZERO

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return _ZERO

    # -- arithmetic ------------------------------------------------------

    def _check_same_basis(self, other: "Polynomial"):
        if self.basis != other.basis:
            raise BasisMismatchError(
                f"cannot combine {self.basis} with {other.basis}"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_basis(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(
            (self.coefficient(i) + other.coefficient(i) for i in range(n)),
            self.basis,
        )

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial((-c for c in self._coeffs), self.basis)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check_same_basis(other)
            if not self.basis.is_monomial:
                raise BasisMismatchError(
                    "products are only defined on monomial coefficient vectors;"
                    " convert first"
                )
            if self.is_zero or other.is_zero:
                return Polynomial.zero(self.basis)
            out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, ci in enumerate(self._coeffs):
                if not ci:
                    continue
                for j, cj in enumerate(other._coeffs):
                    out[i + j] += ci * cj
            return Polynomial(out, self.basis)
        try:
            scalar = as_fraction(other)
        except TypeError:
            return NotImplemented
        return Polynomial((scalar * c for c in self._coeffs), self.basis)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Polynomial.constant(1, self.basis)
        for _ in range(exponent):
            out = out * self
        return out

    # -- analysis ----------------------------------------------------------

    def __call__(self, point) -> Fraction:
        """Exact evaluation at a rational point, in either basis."""
        x = as_fraction(point)
        if self.basis.is_monomial:
            acc = _ZERO
            for c in reversed(self._coeffs):
                acc = acc * x + c
            return acc
        # quasi basis: accumulate the ladder values x^(k) at the point
        step = self.basis.step
        acc = _ZERO
        ladder = _ONE
        for k, c in enumerate(self._coeffs):
            if k:
                ladder *= x - (k - 1) * step
            acc += c * ladder
        return acc

    def derivative(self) -> "Polynomial":
        if not self.basis.is_monomial:
            raise BasisMismatchError("derivative is defined on the monomial basis")
        return Polynomial(
            (i * self._coeffs[i] for i in range(1, len(self._coeffs))),
            self.basis,
        )

    def shifted(self, amount) -> "Polynomial":
        """``p(x + amount)`` (monomial basis)."""
        return self.affine(1, amount)

    def affine(self, scale, shift) -> "Polynomial":
        """``p(scale*x + shift)`` by Horner over (scale*x + shift), exact."""
        if not self.basis.is_monomial:
            raise BasisMismatchError("affine substitution needs the monomial basis")
        scale, shift = as_fraction(scale), as_fraction(shift)
        if self.is_zero:
            return self
        arg = Polynomial((shift, scale))
        acc = Polynomial.zero()
        for c in reversed(self._coeffs):
            acc = acc * arg + Polynomial.constant(c)
        return acc

    # -- housekeeping --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.basis == other.basis and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.basis, self._coeffs))

    def __repr__(self):
        return f"Polynomial({self}, basis={self.basis})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            if k == 0:
                text = format_fraction(c)
            else:
                if self.basis.is_monomial:
                    power = "x" if k == 1 else f"x^{k}"
                else:
                    power = f"x({k})"
                if c == 1:
                    text = power
                elif c == -1:
                    text = f"-{power}"
                else:
                    text = f"{format_fraction(c)}*{power}"
            if parts and not text.startswith("-"):
                parts.append("+ " + text)
            elif parts:
                parts.append("- " + text[1:])
            else:
                parts.append(text)
        return " ".join(parts)

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict:
        basis = "monomial" if self.basis.is_monomial else {"quasi": format_fraction(self.basis.step)}
        return {"basis": basis, "coeffs": [format_fraction(c) for c in self._coeffs]}

    @classmethod
    def from_json_obj(cls, obj) -> "Polynomial":
        basis = obj["basis"]
        if basis == "monomial":
            tag = MONOMIAL
        else:
            tag = quasi_basis(basis["quasi"])
        return cls(obj["coeffs"], tag)


def quasi_monomial(n: int, step) -> Polynomial:
    """Monomial-basis expansion of the degree-``n`` quasi-monomial x^(n).

    Computed by the recurrence x^(k+1) = (x - k*step) * x^(k), which is exact
    over the rationals (no Gamma functions involved).
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("degree must be a non-negative integer")
    step = as_fraction(step)
    if step == 0:
        raise ParameterError("lattice step must be nonzero")
    out = Polynomial.constant(1)
    x = Polynomial.identity()
    for k in range(n):
        out = out * (x - Polynomial.constant(k * step))
    return out


def convert_basis(p: Polynomial, target: Basis) -> Polynomial:
    """Re-express ``p`` in ``target``; the polynomial function is unchanged.

    Conversion between two quasi bases with different steps is refused (go
    through the conversion you actually mean); round trips are the identity.
    """
    if p.basis == target:
        return p
    if not p.basis.is_monomial and not target.is_monomial:
        raise BasisMismatchError(
            f"cannot convert between quasi bases at different steps "
            f"({p.basis} -> {target})"
        )
    if target.is_monomial:
        step = p.basis.step
        out = Polynomial.zero()
        for k, c in enumerate(p.coeffs):
            if c:
                out = out + c * quasi_monomial(k, step)
        return out
    # monomial -> quasi: peel leading coefficients from the top; both ladders
    # are monic so the transform is unitriangular.
    step = target.step
    residue = list(p.coeffs)
    out = [_ZERO] * len(residue)
    for k in range(len(residue) - 1, -1, -1):
        c = residue[k]
        out[k] = c
        if c:
            for j, q in enumerate(quasi_monomial(k, step).coeffs):
                residue[j] -= c * q
    return Polynomial(out, target)
