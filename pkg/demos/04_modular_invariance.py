"""Diagonal matrices T with (PT)^3 = cI, found exactly and lifted to
composite schemes.

Run:  python3 demos/04_modular_invariance.py
"""

from schemekit import (
    ExactMatrix,
    GaussRat,
    cycle_scheme,
    eigenmatrix,
    induced_modular_check,
    one_class,
    search_T,
    verify_modular,
)

# The binary base: P = [[1,1],[1,-1]].  The witness is T = diag(1, i).
P = eigenmatrix(one_class(2))
w = search_T(P)
print("binary witness: T = diag(%s, %s), c = %s"
      % (w.T[0, 0], w.T[1, 1], w.c))

# verify_modular recomputes the cube exactly and returns the constant.
print("verified c =", verify_modular(P, w.T).c)

# The lift: on the composite scheme of degree n the same construction
# gives (P^ T^)^3 = c^n I, with T^ induced from T.  For c = 2+2i the
# constant at n=2 is 8i, at n=3 it is -16+16i.
for n in (2, 3):
    rep = induced_modular_check(P, w.T, w.c, n)
    print("n=%d: holds=%s, constant=%s, c^n=%s, diagonal lift ok=%s"
          % (n, rep.holds, rep.constant, rep.expected,
             rep.t_hat_consistent))

# The 4-cycle has a whole line of witnesses: diag(1, t, -1) works for
# every t, with c = 8t.  The search returns the canonical point t = 1.
Pc = eigenmatrix(cycle_scheme(4))
wc = search_T(Pc)
print("\n4-cycle witness: T = diag(%s, %s, %s), c = %s"
      % (wc.T[0, 0], wc.T[1, 1], wc.T[2, 2], wc.c))
for t in (GaussRat(3), GaussRat(0, 1)):
    T = ExactMatrix.diagonal([GaussRat(1), t, GaussRat(-1)])
    print("  t = %s gives c = %s" % (t, verify_modular(Pc, T).c))

# For some schemes no witness exists over the Gaussian rationals (the
# ternary base would need cube roots of unity); the search reports
# incompleteness rather than inventing an approximation.
print("\nternary search result:", search_T(eigenmatrix(one_class(3))))
