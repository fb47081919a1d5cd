"""Certificates: exact witnesses, float witnesses, bounded search.

Three grades of evidence, strongest first:
  1. an exact rational change of basis, verified entry by entry;
  2. a floating-point change of basis with a tiny residual, reported
     but never treated as a proof;
  3. a fingerprint difference, which certifies NON-isomorphism.
Bounded random search returns whichever it finds first and says
"undetermined" otherwise instead of guessing.
"""

from fractions import Fraction

from leibnizalg import catalog
from leibnizalg.core import algebra_from_products
from leibnizalg.isomorphism import (
    compare_fingerprints,
    fingerprint,
    float_change_residual,
    search_isomorphism,
    verify_isomorphism,
)
from leibnizalg.linalg import Matrix


def main():
    print("1. exact witness: scaling normalizes the last parameter")
    a = catalog.make("F1param", 6, theta=1)
    b = catalog.make("F1param", 6, theta=8)
    p = Matrix([[2, 0, 0, 0, 0, 0],
                [0, 2, 0, 0, 0, 0],
                [0, 0, 4, 0, 0, 0],
                [0, 0, 0, 8, 0, 0],
                [0, 0, 0, 0, 16, 0],
                [0, 0, 0, 0, 0, 32]])
    print("   theta 8 -> 1 via diag(2,2,4,8,16,32):", verify_isomorphism(a, b, p).ok)

    print("2. float witness: theta 2 -> 1 needs a cube root")
    c = catalog.make("F1param", 6, theta=2)
    A = 2.0 ** (1.0 / 3.0)
    q = [[0.0] * 6 for _ in range(6)]
    q[0][0] = q[1][1] = A
    for i in range(2, 6):
        q[i][i] = A ** i
    residual = float_change_residual(a, c, q)
    print("   residual %.3e; supports but does NOT certify the isomorphism"
          % residual)
    verdict = compare_fingerprints(fingerprint(a), fingerprint(c)).verdict
    print("   fingerprints cannot separate the pair either: %s" % verdict)

    print("3. search: the chain written backwards")
    backwards = algebra_from_products(3, {(3, 3): {2: 1}, (2, 3): {1: 1}})
    result = search_isomorphism(catalog.make("NF", 3), backwards)
    print("   status %s after %d trials" % (result.status, result.trials))
    if result.matrix is not None:
        ok = verify_isomorphism(catalog.make("NF", 3), backwards, result.matrix).ok
        print("   returned matrix re-verified:", ok)

    print("4. search on genuinely different algebras")
    result = search_isomorphism(catalog.make("NF", 4), catalog.make("F1", 4))
    print("   status %s, separating invariant: %s" % (result.status, result.invariant))


if __name__ == "__main__":
    main()
