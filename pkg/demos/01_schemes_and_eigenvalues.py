"""Build small association schemes and certify their eigenvalues.

Run:  python3 demos/01_schemes_and_eigenvalues.py
"""

from schemekit import (
    GaussRat,
    cycle_scheme,
    dual_eigenmatrix,
    eigenmatrix,
    group_scheme,
    krein_parameters,
    numeric_eigenmatrix,
    one_class,
    verify_axioms,
)


def show(P, label):
    print(label)
    for i in range(P.nrows):
        print("   ", "  ".join(str(P[i, j]).rjust(4)
                               for j in range(P.ncols)))


# The one-class scheme on q points: every off-diagonal pair is related.
A = one_class(4)
print("one_class(4): v=%d, d=%d, valencies=%s"
      % (A.v, A.d, list(map(int, A.valencies()))))
show(eigenmatrix(A), "  P =")

# The 4-cycle: distance classes 0, 1, 2 around a square.
C = cycle_scheme(4)
print("\ncycle_scheme(4) axioms:", verify_axioms(C.relation).ok)
P = eigenmatrix(C)
show(P, "  P =")
Q = dual_eigenmatrix(P, C.v)
show(Q, "  Q = v P^-1 =")
print("  P @ Q == vI:", P @ Q == P.identity(3).scale(GaussRat(C.v)))

# A translation scheme whose eigenvalues are genuinely complex.
D = group_scheme([4])
show(eigenmatrix(D), "\ngroup_scheme([4]): P =")

# Krein parameters are always non-negative reals; for a cyclic group
# scheme they reduce to the convolution table of the character group.
q = krein_parameters(D)
print("Krein q[1,1,2] =", q[1, 1, 2], " (characters multiply: 1+1=2)")
print("Krein q[1,2,0] =", q[1, 2, 0], " (1+2 != 0 mod 4)")

# The 5-cycle needs irrational eigenvalues, so exact certification is
# refused and only the numeric route is available.
five = cycle_scheme(5)
print("\ncycle_scheme(5) exact P attached:", five.P is not None)
print("numeric row 0:", [round(float(z.real), 6)
                         for z in numeric_eigenmatrix(five)[0]])
