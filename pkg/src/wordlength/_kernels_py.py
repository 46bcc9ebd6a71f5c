"""Pure-Python fallback for the hot kernels.

Mirrors ``_kernels.pyx`` operation for operation: both backends must produce
bit-identical results on the same platform, so every floating-point
expression here is kept in the exact order the compiled version uses.
Do not "simplify" arithmetic in one file without changing the other.

The random generator is SplitMix64 (Steele, Lea & Flood 2014, public
domain): a 64-bit counter advanced by the golden-gamma constant and
finalized with two xor-multiply mixes.  It is seeded directly by the
64-bit seed value and is portable across platforms.
"""

from math import exp, log

BACKEND_NAME = "pure"

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def splitmix64_stream(seed: int, n: int) -> list[int]:
    """First n raw 64-bit outputs of SplitMix64 for the given seed."""
    state = seed & _MASK64
    out = []
    for _ in range(n):
        state = (state + _GAMMA) & _MASK64
        out.append(_mix64(state))
    return out


def uniform_stream(seed: int, n: int) -> list[float]:
    """First n uniforms in [0, 1): top 53 bits of each SplitMix64 output."""
    return [(x >> 11) * _INV_2_53 for x in splitmix64_stream(seed, n)]


def count_clusters(word: str, vowels: str) -> int:
    """Number of maximal runs of vowel characters in word."""
    count = 0
    prev_vowel = False
    for ch in word:
        is_vowel = ch in vowels
        if is_vowel and not prev_vowel:
            count += 1
        prev_vowel = is_vowel
    return count


def _log_factorial(j: int) -> float:
    # explicit sum, not lgamma: CPython's math.lgamma is not libm's, and the
    # two backends must agree bit for bit
    s = 0.0
    for i in range(2, j + 1):
        s += log(i)
    return s


def shifted_pmf(k: int, m: float) -> float:
    """P(length=k) for the 1-displaced Poisson with parameter m.

    exp(-m) * m**(k-1) / (k-1)!, computed iteratively for small k and in
    log space above k=21 (or large m) to avoid factorial overflow.
    """
    j = k - 1
    if m == 0.0:
        return 1.0 if j == 0 else 0.0
    if j > 20 or m > 700.0:
        return exp(-m + j * log(m) - _log_factorial(j))
    p = exp(-m)
    for i in range(1, j + 1):
        p *= m / i
    return p


def partial_exp_sum(j: int, x: float) -> float:
    """exp(-x) * sum_{i=0..j} x**i / i!  (upper regularized gamma Q(j+1, x))."""
    term = 1.0
    s = 1.0
    for i in range(1, j + 1):
        term *= x / i
        s += term
    return exp(-x) * s


def mixture_pmf_kernel(k: int, m_lo: float, m_hi: float, t_clamp: float) -> float:
    """P(length=k) for the uniform-parameter mixture over [m_lo, m_hi].

    Closed form: the integral of the displaced Poisson over the parameter
    interval is a difference of partial exponential sums.  A t_clamp
    fraction of the mixture sits at the degenerate m=0 point (length 1).
    """
    j = k - 1
    if m_hi == m_lo:
        return shifted_pmf(k, m_lo)
    width = m_hi - m_lo
    if width < 1e-6:
        # midpoint rule; avoids catastrophic cancellation of the two sums
        p = (1.0 - t_clamp) * shifted_pmf(k, m_lo + 0.5 * width)
    else:
        integral = partial_exp_sum(j, m_lo) - partial_exp_sum(j, m_hi)
        p = (1.0 - t_clamp) * (integral / width)
    if k == 1:
        p += t_clamp
    return p


def _as_list(seq) -> list:
    # numpy arrays unpack to Python floats once, up front
    return seq.tolist() if hasattr(seq, "tolist") else list(seq)


def weighted_mean(w, v) -> float:
    """sum(w*v) / sum(w), accumulated sequentially in index order."""
    w = _as_list(w)
    v = _as_list(v)
    sw = 0.0
    swv = 0.0
    for i in range(len(w)):
        sw += w[i]
        swv += w[i] * v[i]
    return swv / sw


def wls_sums(w, length, t, lambda0: float) -> tuple[float, float]:
    """Accumulate the one-parameter weighted regression sums.

    With x = 1 - 2t and y = length - 2*lambda0*t, returns
    (sum w*x*y, sum w*x*x) in index order.
    """
    w = _as_list(w)
    length = _as_list(length)
    t = _as_list(t)
    sxy = 0.0
    sxx = 0.0
    for i in range(len(w)):
        x = 1.0 - 2.0 * t[i]
        y = length[i] - 2.0 * lambda0 * t[i]
        sxy += w[i] * x * y
        sxx += w[i] * x * x
    return sxy, sxx


def _poisson_inversion(state: int, m: float) -> tuple[int, int]:
    """One Poisson(m) draw by CDF inversion; requires m <= 10."""
    state = (state + _GAMMA) & _MASK64
    u = (_mix64(state) >> 11) * _INV_2_53
    p = exp(-m)
    cdf = p
    k = 0
    while u > cdf and k < 500:
        k += 1
        p *= m / k
        cdf += p
    return k, state


def _poisson_draw(state: int, m: float) -> tuple[int, int]:
    """Poisson(m) draw; large m is halved into independent summands."""
    if m <= 0.0:
        return 0, state
    n_parts = 1
    while m > 10.0:
        m *= 0.5
        n_parts *= 2
    total = 0
    for _ in range(n_parts):
        k, state = _poisson_inversion(state, m)
        total += k
    return total, state


def sample_poisson_lengths(ms, seed: int) -> list[int]:
    """Lengths 1 + Poisson(m) for each m, drawn from one seeded stream."""
    state = seed & _MASK64
    out = []
    for m in _as_list(ms):
        k, state = _poisson_draw(state, m)
        out.append(1 + k)
    return out


def sample_length_histogram(
    n: int, lambda0: float, lambda1: float, seed: int
) -> list[int]:
    """Histogram of n mixture draws; slot i counts lengths equal to i+1.

    Each draw consumes one uniform for the mixture position t and one (or
    more, for halved large parameters) for the Poisson inversion.
    """
    state = seed & _MASK64
    counts: list[int] = []
    slope = 2.0 * (lambda0 - lambda1)
    for _ in range(n):
        state = (state + _GAMMA) & _MASK64
        u = (_mix64(state) >> 11) * _INV_2_53
        m = lambda1 + slope * u - 1.0
        if m < 0.0:
            m = 0.0
        k, state = _poisson_draw(state, m)
        if k >= len(counts):
            counts.extend([0] * (k + 1 - len(counts)))
        counts[k] += 1
    return counts
