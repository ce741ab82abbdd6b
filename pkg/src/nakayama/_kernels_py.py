"""Pure-Python elimination kernels over GF(p); reference for the compiled core."""


def rref_modp(rows, ncols, p):
    """Reduced row-echelon form of ``rows`` mod ``p``.

    Returns ``(nonzero_rows, pivots)``; rows are new lists of ints in range(p).
    """
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        inv = pow(row[c], -1, p)
        if inv != 1:
            for j in range(c, ncols):
                row[j] = row[j] * inv % p
        for i in range(nrows):
            if i != r:
                other = m[i]
                f = other[c]
                if f:
                    for j in range(c, ncols):
                        if row[j]:
                            other[j] = (other[j] - f * row[j]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def det_modp(rows, p):
    """Determinant of a square matrix mod ``p``."""
    m = [[x % p for x in r] for r in rows]
    n = len(m)
    det = 1
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        row = m[c]
        pv = row[c]
        det = det * pv % p
        inv = pow(pv, -1, p)
        for i in range(c + 1, n):
            other = m[i]
            f = other[c] * inv % p
            if f:
                for j in range(c, n):
                    other[j] = (other[j] - f * row[j]) % p
    return det % p
