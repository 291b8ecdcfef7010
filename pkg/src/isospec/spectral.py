"""Exact spectral analysis on degree-bounded polynomial spaces.

Operators are restricted to the span of the basis elements of degree <= d;
column j of the matrix holds the expansion of the operator applied to the
degree-j basis element.  Operators that never raise degree therefore give
upper-triangular matrices, eigenvalues sit on the diagonal, and eigenvectors
come out of exact back-substitution.

Equality of spectra is certified by comparing monic characteristic
polynomials coefficient by coefficient; no roots are ever extracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement
from .errors import (
    BasisMismatchError,
    DegenerateSpectrumError,
    IsospecError,
    SubspaceOverflowError,
)
from .operators import classical_preset, eigenvalue_convention_note, second_order_element
from .polynomials import MONOMIAL, Basis, Polynomial, convert_basis, quasi_basis
from .rationals import as_fraction, format_fraction
from .representations import ShiftOperator, apply_continuum, realize_lattice
from . import oracles

__all__ = [
    "OperatorMatrix",
    "matrix_on_basis",
    "continuum_matrix",
    "lattice_matrix",
    "char_poly",
    "eigenpairs_triangular",
    "SpectralReport",
    "spectral_report",
    "IsospectralityCertificate",
    "isospectral_check",
    "substitute_quasi",
    "stencil_extract",
    "default_grid",
    "verify_pointwise",
    "FamilyEntry",
    "FamilyTable",
    "discrete_family",
    "SubspaceReport",
    "invariant_subspace_check",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class OperatorMatrix:
    """Square matrix of an operator on a graded basis.

    ``entries[i][j]`` is the coefficient of the degree-i basis element in the
    image of the degree-j one.  ``overflow_degrees`` lists columns whose image
    left the space (their above-bound part is not stored).
    """

    basis: Basis
    entries: tuple[tuple[Fraction, ...], ...]
    overflow_degrees: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def degree_bound(self) -> int:
        return self.size - 1

    @property
    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    @property
    def is_upper_triangular(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.size)
            for j in range(i)
        )

    @property
    def is_lower_triangular(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.size)
            for j in range(i + 1, self.size)
        )

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def to_json_obj(self) -> dict:
        basis = "monomial" if self.basis.is_monomial else {"quasi": format_fraction(self.basis.step)}
        return {
            "basis": basis,
            "degree_bound": self.degree_bound,
            "entries": [[format_fraction(c) for c in row] for row in self.entries],
            "overflow_degrees": list(self.overflow_degrees),
        }


def matrix_on_basis(action, basis: Basis, degree: int, require_closure: bool = True) -> OperatorMatrix:
    """Matrix of ``action`` (a map of monomial-basis polynomials) on the
    degree-graded basis elements 0..degree of ``basis``.

    If the image of some basis element exceeds the degree bound, either raise
    (``require_closure=True``) or record the offending degrees in
    ``overflow_degrees`` and keep only the in-space part.
    """
    if degree < 0:
        raise ValueError("degree bound must be >= 0")
    columns = []
    overflow = []
    for j in range(degree + 1):
        vec = Polynomial.unit_vector(j, basis)
        image = action(convert_basis(vec, MONOMIAL))
        image = convert_basis(image, basis)
        if image.degree > degree:
            if require_closure:
                raise SubspaceOverflowError(
                    f"image of the degree-{j} basis element has degree "
                    f"{image.degree} > bound {degree}",
                    degree=j,
                )
            overflow.append(j)
        columns.append(tuple(image.coefficient(i) for i in range(degree + 1)))
    entries = tuple(
        tuple(columns[j][i] for j in range(degree + 1))
        for i in range(degree + 1)
    )
    return OperatorMatrix(basis=basis, entries=entries, overflow_degrees=tuple(overflow))


def continuum_matrix(element: AlgebraElement, degree: int, require_closure: bool = True) -> OperatorMatrix:
    """Matrix of the differential realization on monomials of degree <= degree."""
    return matrix_on_basis(
        lambda p: apply_continuum(element, p), MONOMIAL, degree, require_closure
    )


def lattice_matrix(op: ShiftOperator, degree: int, basis: Basis | None = None,
                   require_closure: bool = True) -> OperatorMatrix:
    """Matrix of a shift operator, by default on the quasi-monomial basis at
    the operator's own step."""
    if basis is None:
        basis = quasi_basis(op.step)
    return matrix_on_basis(op.apply, basis, degree, require_closure)


def _matmul(x, y):
    n = len(x)
    return [
        [sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def char_poly(matrix: OperatorMatrix) -> Polynomial:
    """Monic characteristic polynomial det(lambda*I - M), exact.

    Triangular matrices take the fast path, the product of (lambda - d_i)
    over the diagonal; otherwise the Faddeev-LeVerrier recursion is used
    (its only divisions are by integers, so it is exact over the rationals).
    """
    n = matrix.size
    lam = Polynomial.identity()
    if matrix.is_upper_triangular or matrix.is_lower_triangular:
        out = Polynomial.constant(1)
        for d in matrix.diagonal:
            out = out * (lam - Polynomial.constant(d))
        return out
    rows = [list(row) for row in matrix.entries]
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    work = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        work = _matmul(rows, work)
        ck = -sum(work[i][i] for i in range(n)) / k
        coeffs[n - k] = ck
        for i in range(n):
            work[i][i] += ck
    return Polynomial(coeffs)


def eigenpairs_triangular(matrix: OperatorMatrix) -> list[tuple[Fraction, Polynomial]]:
    """Eigenpairs of an upper-triangular matrix with distinct diagonal.

    The degree-k eigenvector is normalized to leading coefficient 1 and found
    by exact back-substitution; repeated diagonal entries are refused (no
    Jordan analysis here).
    """
    if not matrix.is_upper_triangular:
        raise IsospecError("matrix is not upper triangular")
    diag = matrix.diagonal
    if len(set(diag)) != len(diag):
        seen: dict[Fraction, int] = {}
        for k, d in enumerate(diag):
            if d in seen:
                raise DegenerateSpectrumError(
                    f"diagonal entry {format_fraction(d)} repeats at degrees "
                    f"{seen[d]} and {k}"
                )
            seen[d] = k
    out = []
    for k in range(matrix.size):
        lam = diag[k]
        vec = [_ZERO] * (k + 1)
        vec[k] = _ONE
        for i in range(k - 1, -1, -1):
            s = sum(matrix.entries[i][j] * vec[j] for j in range(i + 1, k + 1))
            vec[i] = -s / (diag[i] - lam)
        out.append((lam, Polynomial(vec, matrix.basis)))
    return out


@dataclass(frozen=True)
class SpectralReport:
    """Everything the spectrum commands report about one matrix."""

    matrix: OperatorMatrix
    char_poly: Polynomial
    triangular: bool
    eigenpairs: tuple[tuple[Fraction, Polynomial], ...] | None
    notes: tuple[str, ...] = ()
    warning: str | None = None

    def to_json_obj(self) -> dict:
        pairs = None
        if self.eigenpairs is not None:
            pairs = [
                {
                    "eigenvalue": format_fraction(lam),
                    "eigenfunction": vec.to_json_obj(),
                }
                for lam, vec in self.eigenpairs
            ]
        return {
            "matrix": self.matrix.to_json_obj(),
            "char_poly": [format_fraction(c) for c in self.char_poly.coeffs],
            "triangular": self.triangular,
            "eigenpairs": pairs,
            "notes": list(self.notes),
            "warning": self.warning,
        }


def spectral_report(matrix: OperatorMatrix, notes: tuple[str, ...] = ()) -> SpectralReport:
    """Characteristic polynomial plus eigenpairs when the matrix is
    triangular with simple spectrum; degeneracy becomes a warning, not an
    error."""
    cp = char_poly(matrix)
    triangular = matrix.is_upper_triangular
    pairs = None
    warning = None
    if triangular:
        try:
            pairs = tuple(eigenpairs_triangular(matrix))
        except DegenerateSpectrumError as exc:
            warning = f"degenerate spectrum: {exc}"
    else:
        warning = "matrix is not triangular; eigenpairs not computed"
    return SpectralReport(
        matrix=matrix,
        char_poly=cp,
        triangular=triangular,
        eigenpairs=pairs,
        notes=tuple(notes),
        warning=warning,
    )


@dataclass(frozen=True)
class IsospectralityCertificate:
    """Certificate that the differential and lattice restrictions of the same
    element have equal spectra on the degree-bounded space."""

    step: Fraction
    degree_bound: int
    continuum_char_poly: Polynomial
    lattice_char_poly: Polynomial
    verdict: bool
    notes: tuple[str, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "delta": format_fraction(self.step),
            "degree_bound": self.degree_bound,
            "continuum_char_poly": [format_fraction(c) for c in self.continuum_char_poly.coeffs],
            "lattice_char_poly": [format_fraction(c) for c in self.lattice_char_poly.coeffs],
            "verdict": self.verdict,
            "notes": list(self.notes),
        }


def isospectral_check(element: AlgebraElement, step, degree: int,
                      notes: tuple[str, ...] = ()) -> IsospectralityCertificate:
    """Build the continuum matrix on monomials and the lattice matrix on the
    quasi-monomial ladder, and compare their monic characteristic polynomials
    exactly.

    Raises SubspaceOverflowError if the element does not close on the space
    in either realization.
    """
    step = as_fraction(step)
    cont = continuum_matrix(element, degree, require_closure=True)
    latt = lattice_matrix(realize_lattice(element, step), degree, require_closure=True)
    cp_cont = char_poly(cont)
    cp_latt = char_poly(latt)
    return IsospectralityCertificate(
        step=step,
        degree_bound=degree,
        continuum_char_poly=cp_cont,
        lattice_char_poly=cp_latt,
        verdict=cp_cont == cp_latt,
        notes=tuple(notes),
    )


def substitute_quasi(p: Polynomial, step) -> Polynomial:
    """Retag a monomial coefficient vector onto the quasi-monomial ladder.

    This is the eigenfunction transport map, not a change of basis: the
    coefficients are kept and each x^k is reread as x^(k).
    """
    if not p.basis.is_monomial:
        raise BasisMismatchError("substitute_quasi expects a monomial-basis polynomial")
    return Polynomial(p.coeffs, quasi_basis(step))


def stencil_extract(op: ShiftOperator) -> tuple[tuple[int, ...], tuple[Polynomial, ...]]:
    """Sorted nonzero shifts and their coefficient polynomials."""
    shifts = op.shifts
    return shifts, tuple(op.coefficient(k) for k in shifts)


def default_grid(step, half_width: int = 10) -> tuple[Fraction, ...]:
    """The lattice points j*step for j = -half_width..half_width.

    Twenty-one points settle any identity of degree <= 20, so the default
    pointwise check is complete for everything this library produces."""
    step = as_fraction(step)
    return tuple(j * step for j in range(-half_width, half_width + 1))


def verify_pointwise(op: ShiftOperator, phi: Polynomial, eigenvalue, grid=None) -> bool:
    """True iff (op phi)(x) - eigenvalue*phi(x) vanishes at every grid point
    and, stronger, as a polynomial identity."""
    eigenvalue = as_fraction(eigenvalue)
    phi_m = convert_basis(phi, MONOMIAL)
    residual = op.apply(phi_m) - eigenvalue * phi_m
    if grid is None:
        grid = default_grid(op.step)
    pointwise = all(residual(x) == 0 for x in grid)
    return pointwise and residual.is_zero


@dataclass(frozen=True)
class FamilyEntry:
    """One row of a discrete-family table."""

    degree: int
    eigenvalue: Fraction
    quasi: Polynomial
    monomial: Polynomial
    verified: bool

    def to_json_obj(self) -> dict:
        return {
            "k": self.degree,
            "eigenvalue": format_fraction(self.eigenvalue),
            "quasi_coeffs": [format_fraction(c) for c in self.quasi.coeffs],
            "monomial_coeffs": [format_fraction(c) for c in self.monomial.coeffs],
            "verified": self.verified,
        }


@dataclass(frozen=True)
class FamilyTable:
    name: str
    step: Fraction
    entries: tuple[FamilyEntry, ...]
    notes: tuple[str, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "family": self.name,
            "delta": format_fraction(self.step),
            "entries": [e.to_json_obj() for e in self.entries],
            "notes": list(self.notes),
        }


def discrete_family(name: str, step, k_max: int, **params) -> FamilyTable:
    """Lattice counterparts of a classical family up to degree ``k_max``.

    The continuum eigenfunctions are solved exactly, matched projectively
    against the reference family, rescaled to the reference normalization,
    transported onto the quasi-monomial ladder, and each row is verified
    pointwise against the realized lattice operator at its eigenvalue.
    """
    key = name.strip().lower().replace("_", "-")
    if key.startswith("discrete-"):
        key = key[len("discrete-"):]
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    step = as_fraction(step)
    preset = classical_preset(key, **params)
    element = second_order_element(preset)
    lattice_op = realize_lattice(element, step)
    report = spectral_report(continuum_matrix(element, k_max))
    if report.eigenpairs is None:
        raise DegenerateSpectrumError(report.warning or "no eigenpairs available")
    spec = oracles.family(key, **params)
    entries = []
    for k, (lam, phi) in enumerate(report.eigenpairs):
        ref = oracles.reference_polynomial(spec, k)
        if not oracles.projective_equal(phi, ref):
            raise IsospecError(
                f"degree-{k} eigenvector disagrees with the {key} reference family"
            )
        scaled = ref.leading * phi  # phi is monic
        quasi = substitute_quasi(scaled, step)
        monomial = convert_basis(quasi, MONOMIAL)
        verified = verify_pointwise(lattice_op, quasi, lam)
        entries.append(FamilyEntry(k, lam, quasi, monomial, verified))
    note = eigenvalue_convention_note(key)
    return FamilyTable(
        name=key,
        step=step,
        entries=tuple(entries),
        notes=(note,) if note else (),
    )


@dataclass(frozen=True)
class SubspaceReport:
    """Outcome of checking that an operator keeps degree <= spin invariant."""

    spin: int
    closed: bool
    offending_degree: int | None
    block: OperatorMatrix | None
    block_char_poly: Polynomial | None

    def to_json_obj(self) -> dict:
        return {
            "spin": self.spin,
            "closed": self.closed,
            "offending_degree": self.offending_degree,
            "block": self.block.to_json_obj() if self.block else None,
            "block_char_poly": (
                [format_fraction(c) for c in self.block_char_poly.coeffs]
                if self.block_char_poly
                else None
            ),
        }


def invariant_subspace_check(op, spin: int, step=None) -> SubspaceReport:
    """Check that ``op`` preserves the span of polynomials of degree <= spin
    and report the (spin+1)-square block with its characteristic polynomial.

    ``op`` may be an abstract element (checked in the differential
    realization, or on the lattice when ``step`` is given) or a shift
    operator (checked on its own lattice and quasi-monomial ladder).
    """
    if not isinstance(spin, int) or spin < 0:
        raise ValueError("spin must be a non-negative integer")
    if isinstance(op, AlgebraElement):
        if step is None:
            action, basis = (lambda p: apply_continuum(op, p)), MONOMIAL
        else:
            realized = realize_lattice(op, step)
            action, basis = realized.apply, quasi_basis(realized.step)
    elif isinstance(op, ShiftOperator):
        if step is not None and as_fraction(step) != op.step:
            raise IsospecError("step argument disagrees with the operator's step")
        action, basis = op.apply, quasi_basis(op.step)
    else:
        raise TypeError("op must be an AlgebraElement or a ShiftOperator")
    matrix = matrix_on_basis(action, basis, spin, require_closure=False)
    if matrix.overflow_degrees:
        return SubspaceReport(
            spin=spin,
            closed=False,
            offending_degree=matrix.overflow_degrees[0],
            block=None,
            block_char_poly=None,
        )
    return SubspaceReport(
        spin=spin,
        closed=True,
        offending_degree=None,
        block=matrix,
        block_char_poly=char_poly(matrix),
    )
