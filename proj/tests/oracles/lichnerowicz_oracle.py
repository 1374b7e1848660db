"""Independent sympy oracle for the truncated Poisson complexes.

Builds multiderivation cochains with polynomial coefficients, applies the
Chevalley-Eilenberg coboundary on coordinate tuples, and reports exact ranks.
Values printed here are frozen into tests/test_homology.cpp.
"""
import itertools
import sympy as sp
from sympy.combinatorics import Permutation


def monomials(xs, deg):
    out = []
    for exps in itertools.product(range(deg + 1), repeat=len(xs)):
        if sum(exps) == deg:
            out.append(sp.Mul(*[x**e for x, e in zip(xs, exps)]))
    return out


def bracket(pi, xs, f, g):
    n = len(xs)
    return sp.expand(sum(pi[i][j] * sp.diff(f, xs[i]) * sp.diff(g, xs[j])
                         for i in range(n) for j in range(n)))


def eval_cochain(coeffs, xs, args):
    # coeffs: dict sorted index tuple -> expr; alternating multiderivation
    p = len(args)
    total = 0
    for idx, c in coeffs.items():
        for perm in itertools.permutations(range(p)):
            sign = Permutation(list(perm)).signature() if p > 1 else 1
            term = c * sign
            for k in range(p):
                term *= sp.diff(args[k], xs[idx[perm[k]]])
            total += term
    return sp.expand(total)


def coboundary(pi, xs, coeffs, p):
    n = len(xs)
    out = {}
    for J in itertools.combinations(range(n), p + 1):
        args = [xs[j] for j in J]
        val = 0
        for i in range(p + 1):
            rest = args[:i] + args[i + 1:]
            val += (-1) ** i * bracket(pi, xs, args[i], eval_cochain(coeffs, xs, rest))
        for i in range(p + 1):
            for j in range(i + 1, p + 1):
                rest = [a for k, a in enumerate(args) if k not in (i, j)]
                val += (-1) ** (i + j) * eval_cochain(
                    coeffs, xs, [bracket(pi, xs, args[i], args[j])] + rest)
        out[J] = sp.expand(val)
    return out


def slice_rank(pi, xs, p, deg):
    n = len(xs)
    if p > n or p < 0 or deg < 0:
        return 0, 0
    dom = [(I, m) for I in itertools.combinations(range(n), p) for m in monomials(xs, deg)]
    cols = []
    for I, m in dom:
        img = coboundary(pi, xs, {I: m}, p)
        cols.append(img)
    keys = sorted({(J, mon) for img in cols for J, e in img.items()
                   for mon in sp.Poly(e, *xs).monoms()} if cols else set())
    if not keys:
        return len(dom), 0
    M = sp.zeros(len(keys), len(cols))
    for c, img in enumerate(cols):
        for J, e in img.items():
            if e == 0:
                continue
            P = sp.Poly(e, *xs)
            for mon, coef in zip(P.monoms(), P.coeffs()):
                M[keys.index((J, mon)), c] = coef
    return len(dom), M.rank()


def table(pi, xs, D, shift):
    # shift = coefficient degree change of d (constant pi: -1, linear pi: 0)
    n = len(xs)
    rows = []
    for p in range(n + 1):
        dim = rank = 0
        for w in range(D + 1):
            dw, rw = slice_rank(pi, xs, p, w)
            dim += dw
            rank += rw
        bnd = 0
        if p > 0:
            for w in range(D + 1):
                bnd += slice_rank(pi, xs, p - 1, w - shift)[1]
        rows.append((p, dim, rank, dim - rank, bnd, dim - rank - bnd))
    return rows


if __name__ == "__main__":
    x, y, z = sp.symbols("x y z")
    sympl = [[0, 1], [-1, 0]]
    so3 = [[0, z, -y], [-z, 0, x], [y, -x, 0]]
    print("symplectic R2 p=0 D=1 slice ranks:",
          [slice_rank(sympl, [x, y], 0, w) for w in range(2)])
    for D in range(1, 5):
        print("symplectic D=%d" % D, table(sympl, [x, y], D, -1))
    for D in range(0, 3):
        print("so3 D=%d" % D, table(so3, [x, y, z], D, 0))
    # Casimir check and H0 kernel for so3 at degree 2
    C = x**2 + y**2 + z**2
    print("so3 casimir brackets:", [bracket(so3, [x, y, z], C, v) for v in (x, y, z)])
    # jacobi residual for pi12=y, pi13=x, pi23=0
    bad = [[0, y, x], [-y, 0, 0], [-x, 0, 0]]
    xs = [x, y, z]
    res = sp.expand(sum(bad[l][0] * sp.diff(bad[1][2], xs[l]) + bad[l][1] * sp.diff(bad[2][0], xs[l])
                        + bad[l][2] * sp.diff(bad[0][1], xs[l]) for l in range(3)))
    print("jacobi residual (1,2,3):", res)
    # monomial quotient enumeration x^3, xy, y^2 (degrees < 4)
    rel = [(3, 0), (1, 1), (0, 2)]
    basis = [(a, b) for a in range(4) for b in range(4)
             if not any(a >= r[0] and b >= r[1] for r in rel)]
    print("quotient basis:", basis)
    print("jet(2,2) dim:", len([e for e in itertools.product(range(3), repeat=2) if sum(e) <= 2]))
