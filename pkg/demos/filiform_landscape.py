"""Map the one-parameter extensions of a graded filiform algebra.

Both graded filiform types in the catalog have a four-dimensional space
of cohomology classes.  Sweeping a single class over small rational
coefficients and extending produces a landscape of dim-(n+1) algebras;
fingerprints sort most of them onto catalog families, and the rest are
matched by explicit change-of-basis witnesses inside the reproduce
experiments.  Here we extend by two sample classes and fingerprint the
results by hand.
"""

from fractions import Fraction

from leibnizalg import catalog
from leibnizalg.cohomology import BilinearForm
from leibnizalg.extension import central_extension, make_spec
from leibnizalg.isomorphism import compare_fingerprints, fingerprint, verify_isomorphism
from leibnizalg.linalg import Matrix, vec


def sample_extension(n, coeffs):
    base = catalog.make("F1", n)
    a1, a2, a3, a4 = (Fraction(c) for c in coeffs)
    form = BilinearForm.from_entries(
        n, {(2, 1): a1, (n, 1): a2, (1, 2): a3, (2, 2): a4})
    return central_extension(make_spec(base, form))


def main():
    n = 5
    print("cell (0, 1, 0, 0): the class on (%d, 1) extends the filiform chain" % n)
    ext = sample_extension(n, (0, 1, 0, 0))
    target = catalog.make("F1param", n + 1)
    print("  fingerprint vs param-free dim-%d member: %s" % (
        n + 1,
        compare_fingerprints(fingerprint(ext), fingerprint(target)).verdict))
    # scaling the adjoined direction by the sweep coefficient is the witness
    cols = [vec([1 if r == c else 0 for r in range(n + 1)]) for c in range(n + 1)]
    print("  identity witness verified:", verify_isomorphism(
        target, ext, Matrix.from_columns(cols)).ok)

    print("cell (1, 0, 0, 0): the class on (2, 1) leaves the chain early")
    ext2 = sample_extension(n, (1, 0, 0, 0))
    fp = fingerprint(ext2)
    print("  series dims %s, shape %s" % (list(fp.lcs_dims), fp.shape))
    for lam in (-1, 0, 1):
        cand = catalog.make("L3l", n + 1, lam=lam)
        verdict = compare_fingerprints(fp, fingerprint(cand)).verdict
        print("  vs L3l(lam=%d): %s" % (lam, verdict))
    print("  (ties of this kind are resolved by witnesses in reproduce 4.2)")


if __name__ == "__main__":
    main()
