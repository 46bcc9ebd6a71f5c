# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels.

Mirrors ``_kernels_py.py`` operation for operation: both backends must
produce bit-identical results on the same platform, so keep every
floating-point expression in the same order as the fallback (and build
without -ffast-math or fp contraction; see setup.py).
"""

from libc.math cimport exp, log

BACKEND_NAME = "compiled"

cdef unsigned long long _GAMMA = <unsigned long long>0x9E3779B97F4A7C15
cdef unsigned long long _MIX1 = <unsigned long long>0xBF58476D1CE4E5B9
cdef unsigned long long _MIX2 = <unsigned long long>0x94D049BB133111EB
cdef double _INV_2_53 = 1.0 / 9007199254740992.0
_MASK64_PY = (1 << 64) - 1


cdef inline unsigned long long _mix64(unsigned long long z) nogil:
    z = (z ^ (z >> 30)) * _MIX1
    z = (z ^ (z >> 27)) * _MIX2
    return z ^ (z >> 31)


def splitmix64_stream(object seed, Py_ssize_t n):
    """First n raw 64-bit outputs of SplitMix64 for the given seed."""
    cdef unsigned long long state = seed & _MASK64_PY
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(n):
        state = state + _GAMMA
        out.append(_mix64(state))
    return out


def uniform_stream(object seed, Py_ssize_t n):
    """First n uniforms in [0, 1): top 53 bits of each SplitMix64 output."""
    cdef unsigned long long state = seed & _MASK64_PY
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(n):
        state = state + _GAMMA
        out.append((_mix64(state) >> 11) * _INV_2_53)
    return out


def count_clusters(unicode word, unicode vowels):
    """Number of maximal runs of vowel characters in word."""
    cdef int count = 0
    cdef bint prev_vowel = False
    cdef bint is_vowel
    cdef Py_UCS4 ch
    for ch in word:
        is_vowel = ch in vowels
        if is_vowel and not prev_vowel:
            count += 1
        prev_vowel = is_vowel
    return count


cdef double _log_factorial(int j):
    # explicit sum, not lgamma: CPython's math.lgamma is not libm's, and the
    # two backends must agree bit for bit
    cdef double s = 0.0
    cdef int i
    for i in range(2, j + 1):
        s += log(i)
    return s


cdef double _shifted_pmf(int k, double m):
    cdef int j = k - 1
    cdef double p
    cdef int i
    if m == 0.0:
        return 1.0 if j == 0 else 0.0
    if j > 20 or m > 700.0:
        return exp(-m + j * log(m) - _log_factorial(j))
    p = exp(-m)
    for i in range(1, j + 1):
        p *= m / i
    return p


def shifted_pmf(int k, double m):
    """P(length=k) for the 1-displaced Poisson with parameter m."""
    return _shifted_pmf(k, m)


cdef double _partial_exp_sum(int j, double x):
    cdef double term = 1.0
    cdef double s = 1.0
    cdef int i
    for i in range(1, j + 1):
        term *= x / i
        s += term
    return exp(-x) * s


def partial_exp_sum(int j, double x):
    """exp(-x) * sum_{i=0..j} x**i / i!  (upper regularized gamma Q(j+1, x))."""
    return _partial_exp_sum(j, x)


def mixture_pmf_kernel(int k, double m_lo, double m_hi, double t_clamp):
    """P(length=k) for the uniform-parameter mixture over [m_lo, m_hi]."""
    cdef int j = k - 1
    cdef double width, integral, p
    if m_hi == m_lo:
        return _shifted_pmf(k, m_lo)
    width = m_hi - m_lo
    if width < 1e-6:
        p = (1.0 - t_clamp) * _shifted_pmf(k, m_lo + 0.5 * width)
    else:
        integral = _partial_exp_sum(j, m_lo) - _partial_exp_sum(j, m_hi)
        p = (1.0 - t_clamp) * (integral / width)
    if k == 1:
        p += t_clamp
    return p


def weighted_mean(double[::1] w, double[::1] v):
    """sum(w*v) / sum(w), accumulated sequentially in index order."""
    cdef double sw = 0.0
    cdef double swv = 0.0
    cdef Py_ssize_t i
    for i in range(w.shape[0]):
        sw += w[i]
        swv += w[i] * v[i]
    return swv / sw


def wls_sums(double[::1] w, double[::1] length, double[::1] t, double lambda0):
    """Accumulate the one-parameter weighted regression sums.

    With x = 1 - 2t and y = length - 2*lambda0*t, returns
    (sum w*x*y, sum w*x*x) in index order.
    """
    cdef double sxy = 0.0
    cdef double sxx = 0.0
    cdef double x, y
    cdef Py_ssize_t i
    for i in range(w.shape[0]):
        x = 1.0 - 2.0 * t[i]
        y = length[i] - 2.0 * lambda0 * t[i]
        sxy += w[i] * x * y
        sxx += w[i] * x * x
    return sxy, sxx


cdef int _poisson_inversion(unsigned long long *state, double m):
    cdef double u, p, cdf
    cdef int k = 0
    state[0] = state[0] + _GAMMA
    u = (_mix64(state[0]) >> 11) * _INV_2_53
    p = exp(-m)
    cdf = p
    while u > cdf and k < 500:
        k += 1
        p *= m / k
        cdf += p
    return k


cdef int _poisson_draw(unsigned long long *state, double m):
    cdef int n_parts = 1
    cdef int total = 0
    cdef int i
    if m <= 0.0:
        return 0
    while m > 10.0:
        m *= 0.5
        n_parts *= 2
    for i in range(n_parts):
        total += _poisson_inversion(state, m)
    return total


def sample_poisson_lengths(ms, object seed):
    """Lengths 1 + Poisson(m) for each m, drawn from one seeded stream."""
    cdef unsigned long long state = seed & _MASK64_PY
    cdef list out = []
    cdef double m
    for m in ms:
        out.append(1 + _poisson_draw(&state, m))
    return out


def sample_length_histogram(Py_ssize_t n, double lambda0, double lambda1,
                            object seed):
    """Histogram of n mixture draws; slot i counts lengths equal to i+1."""
    cdef unsigned long long state = seed & _MASK64_PY
    cdef list counts = []
    cdef double slope = 2.0 * (lambda0 - lambda1)
    cdef double u, m
    cdef Py_ssize_t i
    cdef int k
    for i in range(n):
        state = state + _GAMMA
        u = (_mix64(state) >> 11) * _INV_2_53
        m = lambda1 + slope * u - 1.0
        if m < 0.0:
            m = 0.0
        k = _poisson_draw(&state, m)
        if k >= len(counts):
            counts.extend([0] * (k + 1 - len(counts)))
        counts[k] += 1
    return counts
