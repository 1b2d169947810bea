"""Shortest connecting sequences by breadth-first search, and the tame symbol of the
specialised cocycle at the prime over ell | N computed from valuations of 1 - zeta^a."""
from collections import deque
from math import gcd


def wedge(v, w):
    return v[0] * w[1] - v[1] * w[0]


def shortest_sequence(target, N=None, B=12):
    start = (0, 1)
    prev = {start: None}
    q = deque([start])
    while q:
        v = q.popleft()
        if v == target and v != start:
            break
        if N is not None and v != start and v[1] % N == 0:
            continue  # only the endpoint may have second coordinate divisible by N
        for x in range(-B, B + 1):
            for y in range(-B, B + 1):
                w = (x, y)
                if w not in prev and wedge(v, w) == 1:
                    prev[w] = v
                    q.append(w)
    if target == start:
        return [start]
    path, v = [], target
    while v is not None:
        path.append(v)
        v = prev[v]
    return path[::-1]


def split(a, ell, N):
    """1 - zeta_N^a = pi^v * unit, unit = a' mod pi, with a = ell^s a'. N a power of ell."""
    a %= N
    s = 0
    while a % ell == 0:
        a //= ell
        s += 1
    return ell ** s, a % ell


def tame(entries, ell, N):
    out = 1
    for a, b in entries:
        vf, uf = split(a, ell, N)
        vg, ug = split(b, ell, N)
        sign = -1 if (vf * vg) % 2 else 1
        out = out * sign * pow(ug, vf, ell) * pow(pow(uf, vg, ell), -1, ell) % ell
    return out % ell


def theta_n_entries(seq, N):
    return [(seq[i][1] % N, (-seq[i - 1][1]) % N) for i in range(1, len(seq))]


if __name__ == "__main__":
    for g in [((1, 1), (0, 1)), ((-1, 0), (0, -1)), ((2, 1), (1, 1)), ((3, 2), (4, 3))]:
        (a, b), (c, d) = g
        s = shortest_sequence((b, d) if a * d - b * c == 1 else (-b, -d))
        print("shortest", g, "k =", len(s) - 1, s)
    cases = {5: [((2, 1), (5, 3)), ((1, 0), (5, 1)), ((3, 1), (5, 2)), ((-2, -1), (5, 3)), ((1, 1), (5, 6)),
                 ((7, 3), (30, 13))],
             9: [((2, 1), (9, 5)), ((1, 0), (9, 1)), ((4, 1), (27, 7)), ((-5, -2), (18, 7)), ((1, 2), (9, 19))]}
    ell = {5: 5, 9: 3}
    for N, gs in cases.items():
        for (a, b), (c, d) in gs:
            det = a * d - b * c
            assert abs(det) == 1 and c % N == 0
            end = (b, d) if det == 1 else (-b, -d)
            s = shortest_sequence(end, N, B=max(abs(b), abs(d), 4) + 3)
            e = theta_n_entries(s, N)
            t = tame(e, ell[N], N)
            want = det * pow(d, -1, ell[N]) % ell[N]
            print("N", N, "gamma", [[a, b], [c, d]], "k", len(s) - 1, "entries", e, "tame", t, "det/d", want)
