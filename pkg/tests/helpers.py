import mpmath


def close(a, b, bits):
    """|a - b| < 2^-bits, computed with enough working precision."""
    with mpmath.workprec(bits + 64):
        return abs(mpmath.mpmathify(a) - mpmath.mpmathify(b)) < mpmath.mpf(2) ** -bits
