# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer series kernels.

Same interface as ``qforms._pureseries`` but running on C int64 with
explicit overflow detection: any add/mul that would wrap raises
OverflowError, and ``qforms.backend`` reruns the call on the exact
pure-Python path.  Conversion of the inputs already raises OverflowError
when a coefficient does not fit in 64 bits, so results are always exact.
"""

from cpython cimport array

import array

cdef extern from *:
    """
    #include <stdint.h>
    static inline int qf_add_ovf(int64_t a, int64_t b, int64_t *out) {
        return __builtin_add_overflow(a, b, out);
    }
    static inline int qf_sub_ovf(int64_t a, int64_t b, int64_t *out) {
        return __builtin_sub_overflow(a, b, out);
    }
    static inline int qf_mul_ovf(int64_t a, int64_t b, int64_t *out) {
        return __builtin_mul_overflow(a, b, out);
    }
    """
    int qf_add_ovf(long long a, long long b, long long *out) nogil
    int qf_sub_ovf(long long a, long long b, long long *out) nogil
    int qf_mul_ovf(long long a, long long b, long long *out) nogil


def conv_dense(a, b, long order):
    """Truncated product of two int sequences, length ``order + 1``."""
    cdef array.array aa = array.array('q', a[:order + 1])
    cdef array.array bb = array.array('q', b[:order + 1])
    cdef array.array cc = array.array('q', [0]) * (order + 1)
    cdef long long[::1] va = aa
    cdef long long[::1] vb = bb
    cdef long long[::1] vc = cc
    cdef Py_ssize_t la = va.shape[0], lb = vb.shape[0]
    cdef Py_ssize_t i, j, hi
    cdef long long ci, prod
    cdef int ovf = 0
    with nogil:
        for i in range(la):
            ci = va[i]
            if ci == 0:
                continue
            hi = lb
            if hi > order + 1 - i:
                hi = order + 1 - i
            for j in range(hi):
                if vb[j] != 0:
                    if qf_mul_ovf(ci, vb[j], &prod) or \
                            qf_add_ovf(vc[i + j], prod, &vc[i + j]):
                        ovf = 1
                        break
            if ovf:
                break
    if ovf:
        raise OverflowError("int64 overflow in conv_dense")
    return list(cc)


def euler_ints(long delta, long r, long order):
    """Expansion of ``prod_{m>=1} (1 - q^(delta*m))^r`` through ``q^order``."""
    cdef array.array cc = array.array('q', [0]) * (order + 1)
    cdef long long[::1] c = cc
    cdef long i, m, k
    cdef int ovf = 0
    c[0] = 1
    with nogil:
        if r >= 0:
            for m in range(delta, order + 1, delta):
                for k in range(r):
                    for i in range(order, m - 1, -1):
                        if qf_sub_ovf(c[i], c[i - m], &c[i]):
                            ovf = 1
                            break
                    if ovf:
                        break
                if ovf:
                    break
        else:
            for m in range(delta, order + 1, delta):
                for k in range(-r):
                    for i in range(m, order + 1):
                        if qf_add_ovf(c[i], c[i - m], &c[i]):
                            ovf = 1
                            break
                    if ovf:
                        break
                if ovf:
                    break
    if ovf:
        raise OverflowError("int64 overflow in euler_ints")
    return list(cc)
