"""Walk the single-generator chain up one dimension at a time.

The chain algebra on e1..en has [e_i, e1] = e_{i+1} and nothing else.
Its second cohomology with one-dimensional central coefficients is a
single class, and extending by that class reproduces the chain one
dimension higher.  This script shows the whole loop for n = 4.
"""

from leibnizalg import catalog
from leibnizalg.cohomology import cohomology_basis
from leibnizalg.core import series_dims
from leibnizalg.extension import central_extension, is_split, make_spec
from leibnizalg.isomorphism import verify_isomorphism
from leibnizalg.linalg import Matrix


def main():
    n = 4
    base = catalog.make("NF", n)
    print("base: chain of dim %d, series dims %s" % (n, list(series_dims(base))))

    h = cohomology_basis(base)
    print("cocycles %d, coboundaries %d, classes %d"
          % (h.cocycles.rank, h.coboundaries.rank, h.dim))
    rep = h.representatives[0]
    print("representative class: theta%s = 1" % (rep.support()[0],))

    spec = make_spec(base, rep)
    ext = central_extension(spec)
    print("extension: dim %d, series dims %s" % (ext.dim, list(series_dims(ext))))

    split, _ = is_split(spec)
    print("splits off an abelian line: %s (the class is nontrivial)" % split)

    target = catalog.make("NF", n + 1)
    check = verify_isomorphism(ext, target, Matrix.identity(n + 1))
    print("identity map onto the dim-%d chain verified: %s" % (n + 1, check.ok))


if __name__ == "__main__":
    main()
