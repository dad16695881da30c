"""Exact ranks of integer matrices, over Q or a prime field."""

Matrix = list[list[int]]


def integer_rank(rows: Matrix) -> int:
    """Rank over Q by Bareiss fraction-free elimination; entries stay integral."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            lead = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * p - lead * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def modular_rank(rows: Matrix, p: int) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        top = [x * inv % p for x in m[rank]]
        m[rank] = top
        for r in range(nrows):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [(x - factor * y) % p for x, y in zip(m[r], top)]
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank(rows: Matrix, characteristic: int = 0) -> int:
    if characteristic == 0:
        return integer_rank(rows)
    return modular_rank(rows, characteristic)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))
