"""Independent q-product evaluation of 12th-power Siegel units.

Each unit is expanded on its own, then the m^2 factors are multiplied by
series convolution. Field elements are integer lists in the power basis of
Q(zeta_L), reduced modulo Phi_L. Exponents are in units of 1/L.
"""
import json
import sys

import sympy


def cyclo(L):
    x = sympy.symbols("x")
    return [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(L, x), x).all_coeffs())]


class Field:
    def __init__(self, L):
        self.L = L
        self.phi = cyclo(L)
        self.n = len(self.phi) - 1
        self.zeta = [self.reduce([0] * k + [1]) for k in range(L)]

    def reduce(self, p):
        p = list(p)
        n = self.n
        for i in range(len(p) - 1, n - 1, -1):
            c = p[i]
            if c:
                for k in range(n + 1):
                    p[i - n + k] -= c * self.phi[k]
        return (p + [0] * n)[:n]

    def mul(self, a, b):
        out = [0] * (2 * self.n)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return self.reduce(out)

    def add(self, a, b):
        return [u + v for u, v in zip(a, b)]

    def sub(self, a, b):
        return [u - v for u, v in zip(a, b)]

    def one(self):
        return self.zeta[0]


def g12(F, c, d, M, prec):
    L = F.L
    s = L // M
    cl, dl = c * s, d * s
    lead = (6 * c * c - 6 * c * M + M * M) * s * s  # units 1/L^2
    limit = prec * L
    acc = {0: F.one()}
    factors = [(j * L + cl, dl % L) for j in range(prec + 1) if j * L + cl < limit]
    factors += [(j * L - cl, (-dl) % L) for j in range(1, prec + 2) if j * L - cl < limit]
    for e, k in factors:
        z = F.zeta[k]
        for _ in range(12):
            new = dict(acc)
            for t, v in acc.items():
                if t + e < limit:
                    new[t + e] = F.sub(new.get(t + e, [0] * F.n), F.mul(v, z))
            acc = {t: v for t, v in new.items() if any(v)}
    return lead, acc


def product(F, parts, prec):
    limit = prec * F.L
    lead, acc = 0, {0: F.one()}
    for ld, s in parts:
        lead += ld
        new = {}
        for t1, v1 in acc.items():
            for t2, v2 in s.items():
                if t1 + t2 < limit:
                    new[t1 + t2] = F.add(new.get(t1 + t2, [0] * F.n), F.mul(v1, v2))
        acc = {t: v for t, v in new.items() if any(v)}
    return lead, acc


def distribution(M, m, c, d, prec):
    F = Field(M * m)
    lhs = g12(F, c, d, M, prec)
    rhs = product(F, [g12(F, c + i * M, d + j * M, M * m, prec) for i in range(m) for j in range(m)], prec)
    a0, b0 = lhs[1][0], rhs[1][0]
    # ratio = b0 / a0, found among roots of unity first, else reported raw
    ratio = None
    for k in range(2 * F.L):
        z = F.zeta[k % F.L] if k < F.L else [-u for u in F.zeta[k % F.L]]
        if F.mul(z, a0) == b0:
            ratio = k
            break
    constant = ratio is not None and all(
        F.sub(rhs[1].get(t, [0] * F.n), F.mul(z, lhs[1].get(t, [0] * F.n))) == [0] * F.n
        for t in set(lhs[1]) | set(rhs[1]))
    return {"M": M, "m": m, "c": c, "d": d, "lead_lhs": lhs[0], "lead_rhs": rhs[0],
            "ratio_index": ratio, "ratio_is_one": ratio == 0, "constant": constant,
            "lhs_terms": len(lhs[1]), "lhs_head": lhs[1][0]}


def heads(c, d, M, prec, count):
    """first nonzero terms of g12 at its own level: (exponent in 1/M^2, power-basis coefficients)"""
    F = Field(M)
    lead, acc = g12(F, c, d, M, prec)
    return [(lead + t * M, acc[t]) for t in sorted(acc)[:count]]


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "heads":
        for c, d, M in [(0, 1, 5), (1, 1, 5), (2, 1, 4), (1, 0, 3)]:
            print(json.dumps({"c": c, "d": d, "M": M, "terms": heads(c, d, M, 3, 4)}))
        sys.exit(0)
    prec = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    for M, m in [(4, 2), (5, 2), (3, 3)]:
        for c, d in [(0, 1), (1, 1)]:
            print(json.dumps(distribution(M, m, c, d, prec)), flush=True)
