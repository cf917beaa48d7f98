"""Tour of the diagonal normal form over Z/p^k.

Any matrix over Z/p^k can be turned into diag(p^s1, ..., p^sr) with
non-decreasing exponents by invertible row operations (Q) and column
operations (T).  The exponent vector s is an invariant of the matrix: it
does not depend on which invertible Q and T you pick.  This script works
a small example by hand, shows the conventions for zero rows and
non-square shapes, and demonstrates the invariance empirically.

Run: python3 demos/normal_form_tour.py
"""

import random

from coverlift import ModMatrix, mat_inverse, normal_form


def show(title, m):
    print(f"{title}:")
    for row in m.entries:
        print("   ", " ".join(f"{x:3d}" for x in row))


def random_invertible(rng, n, p, k):
    mod = p**k
    lower = [[1 if i == j else (rng.randrange(mod) if i > j else 0) for j in range(n)] for i in range(n)]
    upper = [[1 if i == j else (rng.randrange(mod) if i < j else 0) for j in range(n)] for i in range(n)]
    order = rng.sample(range(n), n)
    perm = [[1 if j == order[i] else 0 for j in range(n)] for i in range(n)]
    a = ModMatrix.from_rows(p, k, lower) @ ModMatrix.from_rows(p, k, perm)
    return a @ ModMatrix.from_rows(p, k, upper)


def main():
    p, k = 2, 3
    x = ModMatrix.from_rows(p, k, [[6, 4, 5], [2, 4, 4], [4, 0, 2]])
    print(f"=== a 3x3 example over Z/{p**k} ===")
    show("X", x)

    nf = normal_form(x)
    show("Q (invertible row operations)", nf.Q)
    show("T (invertible column operations)", nf.T)
    show("Q @ X @ T", nf.Q @ x @ nf.T)
    print(f"exponents s = {nf.exponents}   (diagonal entries are 2^s_i)")
    print(f"pivot count = {nf.pivot_count}, first positive index i0 = {nf.first_positive_index}")
    show("sanity: Q @ Q^-1", nf.Q @ nf.Q_inv)
    mat_inverse(nf.T)
    print("T inverts cleanly, so both factors are genuinely invertible.")

    print("\n=== conventions ===")
    zero = ModMatrix.zeros(3, 2, 2, 2)
    print(f"zero 2x2 matrix over Z/9: s = {normal_form(zero).exponents}  (s_i = k marks a zero diagonal)")
    wide = ModMatrix.from_rows(2, 2, [[2, 1, 0, 3]])
    print(f"wide 1x4 over Z/4:        s = {normal_form(wide).exponents}  (one exponent per row)")
    tall = ModMatrix.from_rows(3, 2, [[3], [0], [6]])
    print(f"tall 3x1 over Z/9:        s = {normal_form(tall).exponents}  (rows beyond the pivots get k)")

    print("\n=== the exponents are an invariant ===")
    rng = random.Random(7)
    print("multiplying X by random invertible U (left) and V (right):")
    for trial in range(5):
        u = random_invertible(rng, 3, p, k)
        v = random_invertible(rng, 3, p, k)
        s = normal_form(u @ x @ v).exponents
        print(f"  trial {trial + 1}: s = {s}")
    print(f"every trial reproduces s = {nf.exponents}: U and V cannot change it.")


if __name__ == "__main__":
    main()
