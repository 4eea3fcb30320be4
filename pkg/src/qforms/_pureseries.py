"""Pure-Python integer series kernels.

Reference implementations of the two hot loops shared by the series layer:
truncated Cauchy products and Euler-product expansions, both over Python
ints (exact, arbitrary precision).  ``qforms._fastseries`` provides the
same interface compiled to C with 64-bit arithmetic; callers go through
``qforms.backend``, which picks the compiled kernels when available and
falls back here when they are missing or a value outgrows 64 bits.
"""


def conv_dense(a, b, order: int) -> list:
    """Truncated product of two coefficient sequences.

    Returns ``c`` of length ``order + 1`` with ``c[n] = sum a[i]*b[n-i]``.
    Skips zero coefficients of the sparser operand, which makes products
    with theta-like factors (nonzero only at squares) cheap.
    """
    la = min(len(a), order + 1)
    lb = min(len(b), order + 1)
    nza = sum(1 for c in a[:la] if c)
    nzb = sum(1 for c in b[:lb] if c)
    if nzb < nza:
        a, b = b, a
        la, lb = lb, la
    out = [0] * (order + 1)
    for i in range(la):
        c = a[i]
        if not c:
            continue
        hi = min(lb, order + 1 - i)
        for j in range(hi):
            d = b[j]
            if d:
                out[i + j] += c * d
    return out


def euler_ints(delta: int, r: int, order: int) -> list:
    """Expansion of ``prod_{m>=1} (1 - q^(delta*m))^r`` through ``q^order``.

    Positive powers are applied as in-place multiplications by the binomial
    ``(1 - q^m)``; negative powers as the inverse recurrence (the classic
    partition DP), which is exact because the constant term is 1.
    """
    c = [0] * (order + 1)
    c[0] = 1
    if r >= 0:
        for m in range(delta, order + 1, delta):
            for _ in range(r):
                # c *= (1 - q^m): new tail computed from the pre-update list
                c[m:] = [x - y for x, y in zip(c[m:], c)]
    else:
        for m in range(delta, order + 1, delta):
            for _ in range(-r):
                # c /= (1 - q^m): ascending prefix recurrence
                for i in range(m, order + 1):
                    c[i] += c[i - m]
    return c
