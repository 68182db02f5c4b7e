#!/usr/bin/env python3
"""Independent reference computations for the frozen constants in the C++ tests.

Everything here is computed with sympy (exact rationals, sympy.Quaternion,
symbolic commutative determinants) or with a from-scratch reducer for the
q-generic rewriting rules. None of it shares code with the library under
include/, so agreement is meaningful.

Run:  python3 tests/oracle/compute_expected.py
and paste the printed blocks into the matching test files.
"""

from fractions import Fraction
from itertools import permutations, combinations

import sympy
from sympy import Rational as R, Matrix, symbols, expand, simplify
from sympy.algebras.quaternion import Quaternion


def inversions(t):
    return sum(1 for a in range(len(t)) for b in range(a + 1, len(t)) if t[a] > t[b])


def section(name):
    print()
    print("=" * 8, name, "=" * 8)


# ---------------------------------------------------------------- scalars

section("scalars")

x = Quaternion(1, 1, 0, 0)  # 1 + i
print("(1+i)^-1 =", x.inverse())           # expect 1/2 - 1/2 i

a = Quaternion(1, 2, 3, 4)
b = Quaternion(5, 6, 7, 8)
print("(1+2i+3j+4k)(5+6i+7j+8k) =", a * b)
print("norm^2 check:", (a * b).norm() ** 2, "=", a.norm() ** 2 * b.norm() ** 2)

q3 = Quaternion(R(1, 2), R(-2, 3), 1, 0)
print("(1/2 - 2/3 i + j)^-1 =", q3.inverse())

# ---------------------------------------------------------------- combinatorics

section("combinatorics")

print("l(3,1,2) =", inversions((3, 1, 2)))
print("l(2,4,1,3) =", inversions((2, 4, 1, 3)))
print("S3 lengths:", sorted(inversions(p) for p in permutations((1, 2, 3))))
print("S4 length sum:", sum(inversions(p) for p in permutations((1, 2, 3, 4))))
print("C(4,2) subsets:", list(combinations((1, 2, 3, 4), 2)))

# split I\L | L for I={1,2,3}
for lam in [(3,), (2,), (1,)]:
    I = (1, 2, 3)
    rest = tuple(i for i in I if i not in lam)
    t = rest + lam
    print(f"I={I} L={lam}: tuple {t} length {inversions(t)}")

# ---------------------------------------------------------------- quasidet (rational)

section("quasidet rational")

A2 = Matrix([[1, 2], [3, 4]])
print("|[[1,2],[3,4]]|_11 =", A2.det() / A2[1, 1])  # (-1)^{1+1} det/det(A^{11})

A3 = Matrix([[2, 3, 5], [7, 11, 13], [17, 19, 23]])
print("A3 det =", A3.det())


def quasi_ratio(M, i, j):
    """(-1)^{i+j} det(M) / det(M^{ij}), 1-based."""
    sub = M.copy()
    sub.row_del(i - 1)
    sub.col_del(j - 1)
    return R((-1) ** (i + j)) * M.det() / sub.det()


for (i, j) in [(1, 1), (2, 3), (3, 2)]:
    print(f"|A3|_{i}{j} =", quasi_ratio(A3, i, j))

# singular numerator: columns 1,2 dependent -> quasidet 0 at every defined spot
A3s = Matrix([[1, 2, 5], [2, 4, 13], [3, 6, 23]])
print("A3s det =", A3s.det(), " |A3s|_11 =", quasi_ratio(A3s, 1, 1))

# ---------------------------------------------------------------- quasidet (quaternion)

section("quasidet quaternion 2x2")

one = Quaternion(1, 0, 0, 0)
qi = Quaternion(0, 1, 0, 0)
qj = Quaternion(0, 0, 1, 0)
qk = Quaternion(0, 0, 0, 1)

# B = [[1+i, j], [k, 1-i]];  |B|_11 = (1+i) - j * (1-i)^-1 * k
B11 = (one + qi) - qj * (one - qi).inverse() * qk
print("|B|_11 =", expand(B11))

# hand check of the homological relation shape on a rational 3x3 via ratios:
#   -|A^{k j}|_{i l}^{-1} |A|_{i j}  ==  |A^{i j}|_{k l}^{-1} |A|_{k j}
def del_rc(M, i, j):
    s = M.copy()
    s.row_del(i - 1)
    s.col_del(j - 1)
    return s


i, j, k, l = 1, 1, 2, 2
lhs = -quasi_ratio(del_rc(A3, k, j), 1, 2) ** -1 * quasi_ratio(A3, i, j)
rhs = quasi_ratio(del_rc(A3, i, j), 1, 2) ** -1 * quasi_ratio(A3, k, j)
print("homological (1,1,2,2) on A3: lhs =", lhs, " rhs =", rhs)

# ---------------------------------------------------------------- quasi-Pluecker (rational 4x2)

section("quasi-pluecker rational 4x2")

A42 = Matrix([[1, 2], [3, 5], [4, 7], [6, 13]])


def minor(M, rows):
    return M[[r - 1 for r in rows], :].det()


p = {(i, j): minor(A42, (i, j)) for i in range(1, 5) for j in range(1, 5) if i != j}
for key in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]:
    print(f"p{key[0]}{key[1]} =", p[key])

s = p[(1, 2)] * p[(3, 2)] ** -1 * p[(3, 4)] * p[(1, 4)] ** -1 \
    + p[(1, 3)] * p[(2, 3)] ** -1 * p[(2, 4)] * p[(1, 4)] ** -1
print("sum of the two displayed products =", simplify(s))

# r_{12}^{{3}} over the rationals = p13 / p23  (ratio of quasidets, common a32 cancels)
print("r_12^{3} =", p[(1, 3)] / p[(2, 3)])

# normalization C = A * B^-1, B = top 2x2 block
Btop = A42[0:2, 0:2]
C = A42 * Btop.inv()
print("C =", C.tolist())
# candidate convention: C[i,j] = r_{i,j}^{[d] minus j} for i > d
for i in (3, 4):
    for j in (1, 2):
        M = tuple(t for t in (1, 2) if t != j)
        num = minor(A42, (i,) + M)
        den = minor(A42, (j,) + M)
        print(f"  r_{i}{j}^{{{M}}} =", R(num, den), "  C[{},{}] = {}".format(i, j, C[i - 1, j - 1]))

# ---------------------------------------------------------------- q-generic reducer

section("q-generic rewriting")

qs = symbols("q")


class W:
    """Linear combination of words; a word is a tuple of (row, col) pairs."""

    def __init__(self, terms=None):
        self.t = dict(terms or {})

    def __add__(self, o):
        out = dict(self.t)
        for w, c in o.t.items():
            out[w] = sympy.expand(out.get(w, 0) + c)
            if out[w] == 0:
                del out[w]
        return W(out)

    def scale(self, c):
        return W({w: sympy.expand(cc * c) for w, cc in self.t.items()})


def reduce_word(word, coeff):
    """One full reduction to sorted form, leftmost descent first."""
    pending = [(tuple(word), coeff)]
    done = {}
    while pending:
        w, c = pending.pop()
        for idx in range(len(w) - 1):
            (r1, c1), (r2, c2) = w[idx], w[idx + 1]
            if (r1, c1) <= (r2, c2):
                continue
            head, tail = w[:idx], w[idx + 2:]
            if r1 == r2:          # same row, c1 > c2
                pending.append((head + ((r1, c2), (r1, c1)) + tail, c * qs))
            elif c1 == c2:        # same col, r1 > r2
                pending.append((head + ((r2, c1), (r1, c1)) + tail, c * qs))
            elif c1 < c2:         # r1 > r2, c1 < c2: plain swap
                pending.append((head + ((r2, c2), (r1, c1)) + tail, c))
            else:                 # r1 > r2, c1 > c2: swap plus correction
                pending.append((head + ((r2, c2), (r1, c1)) + tail, c))
                pending.append((head + ((r2, c1), (r1, c2)) + tail,
                                c * (qs - 1 / qs)))
            break
        else:
            done[w] = sympy.expand(done.get(w, 0) + c)
            if done[w] == 0:
                del done[w]
            continue
    return W(done)


def reduce_lin(lin):
    out = W()
    for w, c in lin.t.items():
        out = out + reduce_word(w, c)
    return out


def show(lin):
    def fmt(w):
        return "".join(f"x{r}{c}" for r, c in w) or "1"
    items = sorted(lin.t.items())
    return "  +  ".join(f"({sympy.simplify(c)}) {fmt(w)}" for w, c in items) or "0"


print("x22*x11 ->", show(reduce_word(((2, 2), (1, 1)), 1)))
print("x22*x21*x12*x11 ->", show(reduce_word(((2, 2), (2, 1), (1, 2), (1, 1)), 1)))

# quantum determinant of the 2x2 and 3x3 contexts


def qdet_words(rows, cols):
    out = W()
    n = len(rows)
    for sigma in permutations(range(n)):
        word = tuple((rows[k], cols[sigma[k]]) for k in range(n))
        coeff = (-qs) ** (-inversions(sigma))
        out = out + W({word: coeff})
    return out


d2 = reduce_lin(qdet_words((1, 2), (1, 2)))
print("det_q 2x2:", show(d2))
d3 = reduce_lin(qdet_words((1, 2, 3), (1, 2, 3)))
print("det_q 3x3:", show(d3))

# centrality spot check in the 2x2 context: det_q * x12 == x12 * det_q
lhs = W()
for w, c in d2.t.items():
    lhs = lhs + reduce_word(w + ((1, 2),), c)
rhs = W()
for w, c in d2.t.items():
    rhs = rhs + reduce_word(((1, 2),) + w, c)
diff = lhs + rhs.scale(-1)
print("det_q*x12 - x12*det_q reduces to:", show(diff))

# (S X)_11 for n=2: x22*x11 - q x12*x21
sx = reduce_word(((2, 2), (1, 1)), 1) + reduce_word(((1, 2), (2, 1)), -qs)
print("(S.X)_11 ->", show(sx))

# Young symmetry (d,n)=(2,4), r=1, I={1,2,3}, J={4}:
#   [12][34] - q^-1 [13][24] + q^-2 [23][14]  -> 0
acc = W()
for lam, coeff in [((3,), 1), ((2,), -qs ** -1), ((1,), qs ** -2)]:
    rest = tuple(t for t in (1, 2, 3) if t not in lam)
    m1 = qdet_words(rest, (1, 2))
    m2 = qdet_words((lam[0], 4), (1, 2))
    prod = W()
    for w1, c1 in m1.t.items():
        for w2, c2 in m2.t.items():
            prod = prod + W({w1 + w2: c1 * c2})
    acc = acc + reduce_lin(prod).scale(coeff)
acc = reduce_lin(acc)
print("young (2,4) I={1,2,3} J={4}:", show(acc))

# weak q-commute spot: [2 3][1 3] == q [1 3][2 3] in a (2,4) context


def mul_red(m1, m2):
    prod = W()
    for w1, c1 in m1.t.items():
        for w2, c2 in m2.t.items():
            prod = prod + W({w1 + w2: c1 * c2})
    return reduce_lin(prod)


m13 = qdet_words((1, 3), (1, 2))
m23 = qdet_words((2, 3), (1, 2))
diff = mul_red(m23, m13) + mul_red(m13, m23).scale(-qs)
print("[23][13] - q[13][23] reduces to:", show(reduce_lin(diff)))

# ---------------------------------------------------------------- classical Laplace m=3 spot

section("classical laplace")

M3 = Matrix(3, 3, lambda i, j: symbols(f"a{i+1}{j+1}"))
J = (2, 3, 1)   # a derangement of the columns
total = 0
for rows1 in combinations((1, 2, 3), 1):
    rows2 = tuple(r for r in (1, 2, 3) if r not in rows1)
    sign = (-1) ** inversions(rows1 + rows2)
    m1 = M3[[r - 1 for r in rows1], [J[0] - 1]].det()
    m2 = M3[[r - 1 for r in rows2], [J[1] - 1, J[2] - 1]].det()
    total += sign * m1 * m2
total = expand(R(-1) ** inversions(J) * total)
print("laplace J=(2,3,1) p=1 matches det:", sympy.simplify(total - M3.det()) == 0)
