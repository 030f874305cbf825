# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels.py`` (same signatures)."""

from libc.stdlib cimport malloc, free


def signed_sort(coords, int mode):
    cdef Py_ssize_t n = len(coords)
    cdef long *c = <long *> malloc(max(n, 1) * sizeof(long))
    cdef Py_ssize_t i, j
    cdef long ci, cj
    cdef long length = 0
    cdef bint repeated = False
    try:
        for i in range(n):
            c[i] = coords[i]
        if mode == 0:
            for i in range(n):
                ci = c[i]
                for j in range(i + 1, n):
                    cj = c[j]
                    if ci < cj:
                        length += 1
                    elif ci == cj:
                        repeated = True
            return sorted(coords, reverse=True), length, repeated
        for i in range(n):
            ci = c[i]
            if mode == 1 and ci < 0:
                length += 1
            for j in range(i + 1, n):
                cj = c[j]
                if ci < cj:
                    length += 1
                if ci + cj < 0:
                    length += 1
                if ci == cj or ci == -cj:
                    repeated = True
        return sorted([abs(x) for x in coords], reverse=True), length, repeated
    finally:
        free(c)


cdef struct LRState:
    int L
    int nlabels
    int *lam
    int *nu
    int *counts      # counts[label * L + row]


cdef void _record(LRState *st, dict result):
    cdef int end = st.L
    while end > 0 and st.lam[end - 1] == 0:
        end -= 1
    key = tuple([st.lam[r] for r in range(end)])
    result[key] = result.get(key, 0) + 1


cdef void _fill(LRState *st, int i, int r, int remaining, int cum_new,
                int cum_prev, dict result, int *old_all):
    cdef int *old = old_all + i * st.L
    cdef int *counts = st.counts + i * st.L
    cdef int *prev = st.counts + (i - 1) * st.L
    cdef int ub, c, nxt_prev
    if remaining == 0:
        _place(st, i + 1, result, old_all)
        return
    if r == st.L:
        return
    ub = remaining
    if r > 0 and old[r - 1] - old[r] < ub:
        ub = old[r - 1] - old[r]
    nxt_prev = cum_prev
    if i > 0:
        if cum_prev - cum_new < ub:
            ub = cum_prev - cum_new
        nxt_prev = cum_prev + prev[r]
    c = ub
    while c >= 0:
        st.lam[r] = old[r] + c
        counts[r] = c
        _fill(st, i, r + 1, remaining - c, cum_new + c, nxt_prev, result, old_all)
        c -= 1
    st.lam[r] = old[r]
    counts[r] = 0


cdef void _place(LRState *st, int i, dict result, int *old_all):
    cdef int r
    if i == st.nlabels:
        _record(st, result)
        return
    for r in range(st.L):
        old_all[i * st.L + r] = st.lam[r]
        st.counts[i * st.L + r] = 0
    _fill(st, i, 0, st.nu[i], 0, 0, result, old_all)


def lr_coefficients(mu, nu, int max_rows):
    mu = [int(x) for x in mu if x]
    nu = [int(x) for x in nu if x]
    cdef int L = len(mu) + len(nu)
    if max_rows >= 0 and max_rows < L:
        L = max_rows
    cdef dict result = {}
    if len(mu) > L:
        return result
    cdef int nlabels = len(nu)
    cdef LRState st
    cdef int r
    cdef int size = max(L, 1) * max(nlabels, 1)
    st.L = L
    st.nlabels = nlabels
    st.lam = <int *> malloc(max(L, 1) * sizeof(int))
    st.nu = <int *> malloc(max(nlabels, 1) * sizeof(int))
    st.counts = <int *> malloc(size * sizeof(int))
    cdef int *old_all = <int *> malloc(size * sizeof(int))
    try:
        for r in range(L):
            st.lam[r] = mu[r] if r < len(mu) else 0
        for r in range(nlabels):
            st.nu[r] = nu[r]
        _place(&st, 0, result, old_all)
    finally:
        free(st.lam)
        free(st.nu)
        free(st.counts)
        free(old_all)
    return result
