"""Reduce a many-component cocycle and rebuild the extension.

A k-component central extension only depends on the cocycle through its
cohomology classes.  Reducing row-reduces the class matrix, absorbs the
coboundary components into the section, and leaves class_rank honest
components plus abelian directions.  The change-of-basis matrix returned
by the reduction is verified against the original extension.
"""

import random

from leibnizalg import catalog
from leibnizalg.extension import (
    central_extension,
    make_spec,
    random_cocycle_forms,
    reduce_extension,
    reduced_spec,
)
from leibnizalg.isomorphism import verify_isomorphism


def main():
    base = catalog.make("F1", 6)
    rng = random.Random(20162)
    forms = random_cocycle_forms(base, 5, rng)
    spec = make_spec(base, *forms)
    print("base dim %d with %d random cocycle components" % (base.dim, spec.k))

    report = reduce_extension(spec)
    print("class rank %d, abelian directions %d (H is 4-dimensional, so"
          " rank never exceeds 4)" % (report.class_rank, report.abelian_dim))
    print("split:", report.split)

    original = central_extension(spec)
    rebuilt = central_extension(reduced_spec(spec, report))
    check = verify_isomorphism(rebuilt, original, report.change_of_basis)
    print("rebuilt extension maps onto the original:", check.ok)

    shifts = sum(1 for s in report.section_shift if any(s))
    print("section shifts absorbed %d coboundary component(s)" % shifts)


if __name__ == "__main__":
    main()
