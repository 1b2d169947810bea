"""Hermite and Smith forms of fixed matrices, by brute-force row reduction and sympy."""
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form


def row_hnf(rows):
    H = [list(r) for r in rows]
    m, n = len(H), len(H[0])
    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][j] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(H[i][j]))
            H[r], H[best] = H[best], H[r]
            done = True
            for i in range(r + 1, m):
                q = H[i][j] // H[r][j]
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                done = done and H[i][j] == 0
            if done:
                break
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-a for a in H[r]]
        for i in range(r):
            q = H[i][j] // H[r][j]
            H[i] = [a - q * b for a, b in zip(H[i], H[r])]
        r += 1
    return H


def snf_diag(rows):
    D = smith_normal_form(Matrix(rows), domain=ZZ)
    return sorted([abs(D[i, i]) for i in range(min(D.shape))], key=lambda v: (v == 0, v))


CASES = [
    [[2, 4], [0, 3]],
    [[2, 0], [0, 3]],
    [[4, 6, 2], [2, 2, 8], [6, 0, 4]],
    [[3, -1, 7], [6, -2, 14]],
    [[1, 2, 3], [4, 5, 6], [7, 8, 10]],
]

if __name__ == "__main__":
    for M in CASES:
        print(M, "hnf", row_hnf(M), "snf", snf_diag(M))
    # [[2,3]] x = 1: the smallest-norm integer solutions
    sols = [(a, b) for a in range(-3, 4) for b in range(-3, 4) if 2 * a + 3 * b == 1]
    print("solutions of 2a+3b=1 in a box", sols)
