"""Prime moduli used by the exact kernels.

DEFAULT_PRIME is the largest prime below 2^62, so a product of two reduced
residues fits comfortably in 128-bit intermediates.  RANK_PRIME is the
Mersenne prime 2^31-1; rank certification runs over it by default so the
elimination can use vectorized int64 arithmetic (products < 2^62).
"""

DEFAULT_PRIME = 4611686018427387847  # 2^62 - 57
RANK_PRIME = 2147483647              # 2^31 - 1

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3*10^24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


assert is_prime(DEFAULT_PRIME) and is_prime(RANK_PRIME)
