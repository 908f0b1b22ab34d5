"""Pure-Python kernels. Reference semantics for the compiled ``_ckernels``."""

NAME = "python"


def padded_compare(a, b):
    """Compare two non-increasing integer sequences, padding the shorter with zeros.

    Returns -1, 0 or 1.
    """
    la, lb = len(a), len(b)
    for i in range(max(la, lb)):
        x = a[i] if i < la else 0
        y = b[i] if i < lb else 0
        if x != y:
            return -1 if x < y else 1
    return 0


def union_components(p1, p2):
    """Number of closed loops in the union of two perfect matchings.

    ``p1`` and ``p2`` are partner arrays on ``0..2b-1`` (``p[p[i]] == i``).
    """
    n = len(p1)
    seen = [False] * n
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        x = s
        while True:
            seen[x] = True
            y = p1[x]
            seen[y] = True
            x = p2[y]
            if x == s:
                break
    return count


def smith_decomp(a, m, n):
    """Smith normal form with transforms: returns ``(U, D, V)`` with ``U @ A @ V == D``.

    ``a`` is an ``m`` x ``n`` list of integer rows. Exact (Python ints).
    """
    d = [list(row) for row in a]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = d[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return u, d, v
            _, pi, pj = best
            if pi != t:
                d[t], d[pi] = d[pi], d[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for row in d:
                    row[t], row[pj] = row[pj], row[t]
                for row in v:
                    row[t], row[pj] = row[pj], row[t]

            p = d[t][t]
            clean = True
            for i in range(t + 1, m):
                q = _nearest(d[i][t], p)
                if q:
                    ri, rt = d[i], d[t]
                    for j in range(t, n):
                        ri[j] -= q * rt[j]
                    ui, ut = u[i], u[t]
                    for j in range(m):
                        ui[j] -= q * ut[j]
                if d[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = _nearest(d[t][j], p)
                if q:
                    for row in d:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if d[t][j]:
                    clean = False
            if not clean:
                continue

            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            rt, rb = d[t], d[bad]
            for j in range(t, n):
                rt[j] += rb[j]
            ut, ub = u[t], u[bad]
            for j in range(m):
                ut[j] += ub[j]

        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v


def _nearest(x, p):
    # quotient with remainder in (-|p|/2, |p|/2]; keeps transform entries small
    q, r = divmod(x, p)
    if 2 * abs(r) > abs(p):
        q += 1
    return q
