"""Second cohomology of a Leibniz algebra with central coefficients.

A scalar 2-cochain is a bilinear form on the algebra.  Cocycles satisfy

    theta(x, [y, z]) = theta([x, y], z) - theta([x, z], y),

coboundaries are the forms phi([x, y]) for linear functionals phi, and
the quotient is represented by an explicit complement basis.  Coefficient
spaces of dimension k factor componentwise (the coefficients are central,
so the defining conditions never couple components): all spaces here are
computed with scalar coefficients, and k-dimensional statements are the
k-fold copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .core import Algebra, Subspace
from .linalg import Matrix, Vector, frac, kernel_basis, rank, solve, zero_vector


@dataclass(frozen=True)
class BilinearForm:
    """Scalar bilinear form; values[i][j] = theta(e_{i+1}, e_{j+1})."""

    dim: int
    values: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.dim or any(len(row) != self.dim for row in self.values):
            raise ValueError("values must be a dim x dim grid")

    @staticmethod
    def zero(dim: int) -> "BilinearForm":
        return BilinearForm(dim, tuple(zero_vector(dim) for _ in range(dim)))

    @staticmethod
    def from_entries(dim: int, entries: Mapping[tuple[int, int], int | str | Fraction]) -> "BilinearForm":
        """Build from sparse 1-based entries {(i, j): c}."""
        grid = [[Fraction(0)] * dim for _ in range(dim)]
        for (i, j), c in entries.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ValueError("entry index (%d, %d) out of range for dim %d" % (i, j, dim))
            grid[i - 1][j - 1] = frac(c)
        return BilinearForm(dim, tuple(tuple(row) for row in grid))

    @staticmethod
    def singleton(dim: int, i: int, j: int, c: int | str | Fraction = 1) -> "BilinearForm":
        """The form with a single 1-based entry (i, j) -> c."""
        return BilinearForm.from_entries(dim, {(i, j): c})

    @staticmethod
    def from_flat(dim: int, flat: Sequence[Fraction]) -> "BilinearForm":
        if len(flat) != dim * dim:
            raise ValueError("flat vector of length %d for dim %d" % (len(flat), dim))
        return BilinearForm(dim, tuple(tuple(flat[i * dim : (i + 1) * dim]) for i in range(dim)))

    def flatten(self) -> Vector:
        """Row-major length-dim^2 coordinate vector."""
        return tuple(x for row in self.values for x in row)

    def support(self) -> tuple[tuple[int, int], ...]:
        """1-based index pairs carrying a nonzero value, row-major order."""
        return tuple(
            (i + 1, j + 1)
            for i in range(self.dim)
            for j in range(self.dim)
            if self.values[i][j]
        )

    def evaluate(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vectors must have length %d" % self.dim)
        acc = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.values[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    acc += xi * yj * row[j]
        return acc

    def scale(self, c: Fraction) -> "BilinearForm":
        return BilinearForm(self.dim, tuple(tuple(c * x for x in row) for row in self.values))

    def add(self, other: "BilinearForm") -> "BilinearForm":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return BilinearForm(
            self.dim,
            tuple(
                tuple(x + y for x, y in zip(r1, r2))
                for r1, r2 in zip(self.values, other.values)
            ),
        )

    def is_zero(self) -> bool:
        return all(not x for row in self.values for x in row)


def combine(forms: Sequence[BilinearForm], coeffs: Sequence[Fraction]) -> BilinearForm:
    """Linear combination sum coeffs[t] * forms[t]."""
    if not forms:
        raise ValueError("empty combination")
    if len(forms) != len(coeffs):
        raise ValueError("coefficient count mismatch")
    acc = BilinearForm.zero(forms[0].dim)
    for form, c in zip(forms, coeffs):
        if c:
            acc = acc.add(form.scale(c))
    return acc


def cocycle_defect(a: Algebra, form: BilinearForm, i: int, j: int, k: int) -> Fraction:
    """Value of theta(e_i,[e_j,e_k]) - theta([e_i,e_j],e_k) + theta([e_i,e_k],e_j), 0-based."""
    acc = Fraction(0)
    for m, c in enumerate(a.sc[j][k]):
        if c and form.values[i][m]:
            acc += c * form.values[i][m]
    for m, c in enumerate(a.sc[i][j]):
        if c and form.values[m][k]:
            acc -= c * form.values[m][k]
    for m, c in enumerate(a.sc[i][k]):
        if c and form.values[m][j]:
            acc += c * form.values[m][j]
    return acc


def cocycle_violations(a: Algebra, form: BilinearForm) -> list[tuple[int, int, int, Fraction]]:
    """Basis triples (1-based) where the cocycle identity fails, with defects."""
    if form.dim != a.dim:
        raise ValueError("form dimension %d against algebra dimension %d" % (form.dim, a.dim))
    out = []
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                d = cocycle_defect(a, form, i, j, k)
                if d:
                    out.append((i + 1, j + 1, k + 1, d))
    return out


def is_cocycle(a: Algebra, form: BilinearForm) -> bool:
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if cocycle_defect(a, form, i, j, k):
                    return False
    return True


def _condition_rows(a: Algebra) -> list[Vector]:
    """Linear conditions on the flattened form imposed by all basis triples.

    Unknowns are theta_{pq} at flat index p*n + q.  Zero rows (triples whose
    condition is vacuous) are dropped; the row order is the deterministic
    (i, j, k) sweep, so the resulting system is canonical.
    """
    n = a.dim
    rows: list[Vector] = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                for m, c in enumerate(a.sc[j][k]):
                    if c:
                        row[i * n + m] += c
                for m, c in enumerate(a.sc[i][j]):
                    if c:
                        row[m * n + k] -= c
                for m, c in enumerate(a.sc[i][k]):
                    if c:
                        row[m * n + j] += c
                if any(row):
                    rows.append(tuple(row))
    return rows


def condition_matrix(a: Algebra) -> Matrix:
    """The cocycle-condition system as a matrix over the n^2 unknowns."""
    rows = _condition_rows(a)
    return Matrix(rows, cols=a.dim * a.dim)


@dataclass(frozen=True)
class CochainSpace:
    """A subspace of bilinear forms, held as flattened vectors in rref."""

    dim: int
    space: Subspace

    @property
    def rank(self) -> int:
        return self.space.dim

    def forms(self) -> tuple[BilinearForm, ...]:
        return tuple(BilinearForm.from_flat(self.dim, v) for v in self.space.basis)

    def contains(self, form: BilinearForm) -> bool:
        return self.space.contains(form.flatten())


@lru_cache(maxsize=None)
def cocycle_space(a: Algebra) -> CochainSpace:
    """ZL^2 with scalar coefficients: kernel of the condition system."""
    n = a.dim
    rows = _condition_rows(a)
    if not rows:
        basis: tuple[Vector, ...] = tuple(
            tuple(Fraction(1) if t == s else Fraction(0) for t in range(n * n))
            for s in range(n * n)
        )
    else:
        basis = kernel_basis(Matrix(rows, cols=n * n))
    return CochainSpace(n, Subspace.span(n * n, basis))


def coboundary_generator(a: Algebra, m: int) -> BilinearForm:
    """The coboundary of the m-th (0-based) coordinate functional.

    Its value at (e_i, e_j) is the e_{m+1}-coordinate of [e_i, e_j].
    """
    n = a.dim
    return BilinearForm(n, tuple(tuple(a.sc[i][j][m] for j in range(n)) for i in range(n)))


@lru_cache(maxsize=None)
def coboundary_space(a: Algebra) -> CochainSpace:
    """BL^2 with scalar coefficients; its rank equals dim L^2."""
    n = a.dim
    vectors = [coboundary_generator(a, m).flatten() for m in range(n)]
    return CochainSpace(n, Subspace.span(n * n, vectors))


@dataclass(frozen=True)
class CohomologyBasis:
    """ZL^2, BL^2, and complement representatives for the quotient."""

    cocycles: CochainSpace
    coboundaries: CochainSpace
    representatives: tuple[BilinearForm, ...]

    @property
    def dim(self) -> int:
        return len(self.representatives)


@lru_cache(maxsize=None)
def cohomology_basis(a: Algebra) -> CohomologyBasis:
    """Extend the BL^2 basis to ZL^2; the added cocycles represent HL^2.

    The candidates are the canonical kernel basis of the condition system,
    taken in order; a candidate is kept when it is independent of BL^2
    plus the candidates already kept.  The kept forms are returned
    verbatim (not re-reduced), so each representative is an actual kernel
    basis vector.
    """
    z = cocycle_space(a)
    b = coboundary_space(a)
    current = b.space
    reps: list[BilinearForm] = []
    for v in z.space.basis:
        extended = Subspace.span(a.dim * a.dim, current.basis + (v,))
        if extended.dim > current.dim:
            reps.append(BilinearForm.from_flat(a.dim, v))
            current = extended
    return CohomologyBasis(z, b, tuple(reps))


def cohomology_dim(a: Algebra) -> int:
    return cohomology_basis(a).dim


def cohomology_class(a: Algebra, form: BilinearForm) -> tuple[Fraction, ...] | None:
    """Coordinates of the class of `form` against the representatives.

    None when the form is not a cocycle.  A zero tuple means the form is a
    coboundary.
    """
    basis = cohomology_basis(a)
    b_vectors = list(basis.coboundaries.space.basis)
    h_vectors = [rep.flatten() for rep in basis.representatives]
    columns = b_vectors + h_vectors
    if not columns:
        return () if form.is_zero() else None
    system = Matrix.from_columns([tuple(col) for col in columns])
    solution = solve(system, form.flatten())
    if solution is None:
        return None
    return tuple(solution[len(b_vectors) :])


def preferred_cohomology_basis(
    a: Algebra, patterns: Iterable[tuple[int, int]]
) -> tuple[BilinearForm, ...] | None:
    """Representatives supported on the given 1-based index pairs, if valid.

    Each pattern (i, j) proposes the singleton form at that entry.  The
    proposal is accepted only when every singleton is a cocycle and their
    classes span the whole quotient independently; otherwise None, and the
    default complement stands.
    """
    basis = cohomology_basis(a)
    pats = list(patterns)
    if len(pats) != basis.dim:
        return None
    candidates = [BilinearForm.singleton(a.dim, i, j) for i, j in pats]
    class_rows = []
    for form in candidates:
        coords = cohomology_class(a, form)
        if coords is None:
            return None
        class_rows.append(coords)
    if not class_rows:
        return ()
    if rank(Matrix(class_rows, cols=basis.dim)) != basis.dim:
        return None
    return tuple(candidates)
