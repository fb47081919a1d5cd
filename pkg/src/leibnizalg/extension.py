"""Central extensions of Leibniz algebras and the split/non-split test.

An extension spec is a base algebra L of dimension n together with a
k-component cocycle theta.  The extension lives on L + V (dim n + k) with

    [x + u, y + v] = [x, y] + theta(x, y),

so the adjoined directions are central.  Reduction finds an invertible
change of V-basis after which the trailing components of theta are
coboundaries, absorbs them into the section, and reports the abelian
summand this splits off.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import (
    BilinearForm,
    coboundary_generator,
    cocycle_space,
    cocycle_violations,
    cohomology_basis,
    cohomology_class,
    combine,
)
from .core import Algebra, LeibnizError, Subspace, center, check_leibniz
from .linalg import Matrix, Vector, inverse, rref, solve, unit_vector, zero_vector


class InvalidCocycleError(ValueError):
    """A cocycle component violates the defining identity.

    `component` is 1-based; `triple` is the first violating 1-based basis
    triple and `defect` the scalar amount by which the identity fails.
    """

    def __init__(self, component: int, triple: tuple[int, int, int], defect: Fraction):
        self.component = component
        self.triple = triple
        self.defect = defect
        super().__init__(
            "cocycle component %d fails on (e%d, e%d, e%d) with defect %s"
            % (component, triple[0], triple[1], triple[2], defect)
        )


@dataclass(frozen=True)
class ExtensionSpec:
    """Base algebra plus the components of a V-valued cocycle."""

    base: Algebra
    forms: tuple[BilinearForm, ...]

    def __post_init__(self) -> None:
        for form in self.forms:
            if form.dim != self.base.dim:
                raise ValueError(
                    "cocycle component of dimension %d against base dimension %d"
                    % (form.dim, self.base.dim)
                )

    @property
    def k(self) -> int:
        return len(self.forms)


def make_spec(base: Algebra, *forms: BilinearForm) -> ExtensionSpec:
    return ExtensionSpec(base, tuple(forms))


def validate_cocycle(spec: ExtensionSpec) -> None:
    """Raise InvalidCocycleError on the first failing component."""
    for t, form in enumerate(spec.forms):
        violations = cocycle_violations(spec.base, form)
        if violations:
            i, j, k, defect = violations[0]
            raise InvalidCocycleError(t + 1, (i, j, k), defect)


def central_extension(spec: ExtensionSpec) -> Algebra:
    """The algebra on base + V defined by the cocycle.

    The base's structure constants occupy the first n coordinates and the
    t-th cocycle component feeds coordinate n + t; the adjoined directions
    are central.  The result is Leibniz exactly because the components are
    cocycles, so it is returned pre-checked.
    """
    base = spec.base
    if not base.checked:
        violations = check_leibniz(base)
        if violations:
            raise LeibnizError(violations[0], len(violations))
    validate_cocycle(spec)
    n, k = base.dim, spec.k
    dim = n + k
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i < n and j < n:
                tail = tuple(form.values[i][j] for form in spec.forms)
                row.append(base.sc[i][j] + tail)
            else:
                row.append(zero_vector(dim))
        rows.append(tuple(row))
    base_labels = tuple(base.label(i) for i in range(n))
    ext_labels = base_labels + tuple("x%d" % (t + 1) for t in range(k))
    return Algebra(dim=dim, sc=tuple(rows), labels=ext_labels, checked=True)


def adjoined_subspace(spec: ExtensionSpec) -> Subspace:
    """V inside the extension, spanned by the last k coordinates."""
    dim = spec.base.dim + spec.k
    return Subspace.span(dim, [unit_vector(dim, spec.base.dim + t) for t in range(spec.k)])


def centrality_report(spec: ExtensionSpec) -> tuple[bool, bool]:
    """(V lies in the center, V equals the center) for the extension.

    The first flag holds by construction but is recomputed; the second
    depends on the base and the cocycle.
    """
    ext = central_extension(spec)
    v = adjoined_subspace(spec)
    z = center(ext)
    return (z.contains_subspace(v), z.contains_subspace(v) and v.contains_subspace(z))


@dataclass(frozen=True)
class SplitReport:
    """Outcome of splitting abelian directions off a central extension.

    `v_basis` columns are the adapted central basis in the original V
    coordinates; the first `class_rank` of them carry the reduced cocycle
    components and the remaining `abelian_dim` are direct abelian
    summands.  `section_shift[s]` is the functional (as a coefficient
    vector over the base) absorbed into the section for the s-th trailing
    direction.  `change_of_basis` maps the rebuilt reduced extension onto
    the original one.
    """

    class_rank: int
    abelian_dim: int
    v_basis: Matrix
    reduced: tuple[BilinearForm, ...]
    section_shift: tuple[Vector, ...]
    change_of_basis: Matrix

    @property
    def split(self) -> bool:
        return self.abelian_dim >= 1


def reduce_extension(spec: ExtensionSpec) -> SplitReport:
    """Split the cocycle into independent classes plus absorbed coboundaries.

    Row-reducing the k x dim-H matrix of cohomology classes (augmented by
    the identity to record the row operations) yields an invertible U with
    the last k - d transformed components of zero class; those components
    are coboundaries phi o bracket and are absorbed by shifting the
    section e_i -> e_i + sum_s phi_s(e_i) c_s over the trailing adapted
    central vectors c_s.
    """
    validate_cocycle(spec)
    base = spec.base
    n, k = base.dim, spec.k
    h = cohomology_basis(base).dim
    if k == 0:
        empty = Matrix.zeros(0, 0)
        return SplitReport(0, 0, empty, (), (), Matrix.identity(n))
    classes = []
    for form in spec.forms:
        coords = cohomology_class(base, form)
        assert coords is not None  # validate_cocycle passed
        classes.append(coords)
    augmented = Matrix(
        [tuple(row) + unit_vector(k, t) for t, row in enumerate(classes)], cols=h + k
    )
    reduced_rows, pivots = rref(augmented)
    d = sum(1 for p in pivots if p < h)
    u = Matrix([row[h:] for row in reduced_rows.data], cols=k)
    w = inverse(u)
    assert w is not None  # row operations are invertible
    transformed = [combine(spec.forms, u.row(s)) for s in range(k)]
    generators = Matrix.from_columns([coboundary_generator(base, m).flatten() for m in range(n)])
    shifts: list[Vector] = []
    for s in range(d, k):
        phi = solve(generators, transformed[s].flatten())
        assert phi is not None  # zero class means a coboundary
        shifts.append(phi)
    columns: list[Vector] = []
    for i in range(n):
        col = [Fraction(0)] * (n + k)
        col[i] = Fraction(1)
        for s in range(d, k):
            f = shifts[s - d][i]
            if f:
                for t in range(k):
                    col[n + t] += f * w.data[t][s]
        columns.append(tuple(col))
    for s in range(k):
        col = [Fraction(0)] * (n + k)
        for t in range(k):
            col[n + t] = w.data[t][s]
        columns.append(tuple(col))
    return SplitReport(
        class_rank=d,
        abelian_dim=k - d,
        v_basis=w,
        reduced=tuple(transformed[:d]),
        section_shift=tuple(shifts),
        change_of_basis=Matrix.from_columns(columns),
    )


def reduced_spec(spec: ExtensionSpec, report: SplitReport) -> ExtensionSpec:
    """The reduced cocycle padded with zero components to the original k."""
    zero = BilinearForm.zero(spec.base.dim)
    return ExtensionSpec(spec.base, report.reduced + (zero,) * report.abelian_dim)


def is_split(spec: ExtensionSpec) -> tuple[bool, Vector | None]:
    """Whether the extension has an abelian direct summand inside V.

    The witness is the last adapted central direction as a vector of the
    extension (zero on the base coordinates); it spans a 1-dimensional
    abelian direct summand exactly when the report says split.
    """
    report = reduce_extension(spec)
    if not report.split:
        return (False, None)
    n, k = spec.base.dim, spec.k
    witness = report.change_of_basis.column(n + k - 1)
    return (True, witness)


def random_cocycle_forms(
    base: Algebra, k: int, rng: random.Random
) -> tuple[BilinearForm, ...]:
    """k components drawn as random rational combinations of the cocycle basis."""
    z = cocycle_space(base)
    basis = z.forms()
    out = []
    for _ in range(k):
        coeffs = [Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3))) for _ in basis]
        out.append(combine(basis, coeffs) if basis else BilinearForm.zero(base.dim))
    return tuple(out)
