"""Independent brute-force oracles; nothing here imports catalan_census."""
from math import comb


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def trial_valuation(x, p):
    a = 0
    while x % p == 0:
        x //= p
        a += 1
    return a


def digits(n, p):
    """Base-p digits, least significant first, via string-free repeated subtraction."""
    out = []
    while n > 0:
        d = 0
        while (n - d) % p:
            d += 1
        out.append(d)
        n = (n - d) // p
    return out


def pascal_row(t):
    row = [1]
    for _ in range(t):
        row = [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
    return row


def catalan_table(n_max):
    return [catalan(n) for n in range(n_max)]
