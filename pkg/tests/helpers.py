"""Independent brute-force checks shared by the test modules."""
import itertools


def leibniz_det(M):
    """Permutation expansion; independent of the Bareiss routine."""
    n = M.rows
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= M[i, j]
        total += term
    return total


def is_hermite(H):
    last = -1
    seen_zero_row = False
    for i in range(H.rows):
        row = H.row(i)
        nz = [j for j, v in enumerate(row) if v]
        if not nz:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False
        p = nz[0]
        if p <= last or row[p] <= 0:
            return False
        if any(not 0 <= H[k, p] < row[p] for k in range(i)):
            return False
        if any(H[k, p] for k in range(i + 1, H.rows)):
            return False
        last = p
    return True


def is_smith(D):
    if not D.is_diagonal():
        return False
    d = D.diagonal()
    if any(v < 0 for v in d):
        return False
    nz = [v for v in d if v]
    if d[:len(nz)] != tuple(nz):
        return False
    return all(b % a == 0 for a, b in zip(nz, nz[1:]))


def enumerate_mod(A, c, m):
    for x in itertools.product(range(m), repeat=A.cols):
        if all((v - ci) % m == 0 for v, ci in zip(A.apply(x), c)):
            return x
    return None
