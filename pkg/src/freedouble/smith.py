"""Smith normal form over the integers, with both transforms."""


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(matrix, ncols=None):
    """Return (D, U, V) with U * M * V = D.

    ``D`` is diagonal with each nonzero entry dividing the next, ``U`` and
    ``V`` are unimodular.  ``ncols`` is required when ``matrix`` has no rows.
    """
    M = [list(map(int, row)) for row in matrix]
    m = len(M)
    n = len(M[0]) if M else (ncols or 0)
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (M, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row_dst += k * row_src
        for R in (M, U):
            R[dst] = [a + k * b for a, b in zip(R[dst], R[src])]

    def add_col(src, dst, k):
        for R in (M, V):
            for row in R:
                row[dst] += k * row[src]

    def negate_row(i):
        for R in (M, U):
            R[i] = [-a for a in R[i]]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    add_row(t, i, -q)
                    if M[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    add_col(t, j, -q)
                    if M[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: fold any offending entry into row t and repeat
            bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % M[t][t]]
            if bad:
                add_row(bad[0][0], t, 1)
                continue
            break
        if M[t][t] < 0:
            negate_row(t)
        t += 1
    return M, U, V


def invariant_factors(matrix, ncols=None):
    D, _, _ = smith_normal_form(matrix, ncols)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]
