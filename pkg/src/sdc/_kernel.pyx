# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Monte-Carlo kernel.

Mirrors ``sdc._purekernel`` exactly (same RNG streams, same Fisher-Yates
order, same edge enumeration); the two must return bit-identical arrays.
The sampling loops release the GIL so callers can parallelize over chunks.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t

import numpy as np

cdef extern from *:
    """
    static inline unsigned long long sdc_mulhi64(unsigned long long a,
                                                 unsigned long long b) {
        return (unsigned long long)(((__uint128_t)a * b) >> 64);
    }
    """
    uint64_t sdc_mulhi64(uint64_t a, uint64_t b) nogil

# 64-bit constants assembled from halves: literals above int64 max would be
# treated as Python objects inside nogil code.
cdef uint64_t GAMMA = (<uint64_t>0x9E3779B9 << 32) | <uint64_t>0x7F4A7C15
cdef uint64_t MIX1 = (<uint64_t>0xBF58476D << 32) | <uint64_t>0x1CE4E5B9
cdef uint64_t MIX2 = (<uint64_t>0x94D049BB << 32) | <uint64_t>0x133111EB


cdef inline uint64_t mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


cdef inline uint64_t stream_state(uint64_t seed, uint64_t index) nogil:
    return mix64(mix64(seed) + (index + 1) * GAMMA)


cdef inline uint64_t next_u64(uint64_t *state) nogil:
    state[0] += GAMMA
    return mix64(state[0])


cdef inline uint64_t below(uint64_t *state, uint64_t bound) nogil:
    return sdc_mulhi64(next_u64(state), bound)


cdef inline void sample_subset(uint64_t *state, int32_t *perm, int universe,
                               int m) nogil:
    # Partial Fisher-Yates; the chosen subset ends up in perm[0..m).
    cdef int t, j
    cdef int32_t tmp
    for t in range(universe):
        perm[t] = t
    for t in range(m):
        j = t + <int>below(state, <uint64_t>(universe - t))
        tmp = perm[t]
        perm[t] = perm[j]
        perm[j] = tmp


cdef inline int reach_count(int n, int m, const int32_t *chosen,
                            int32_t *esrc, int32_t *edst,
                            unsigned char *reached, int32_t *pending) nogil:
    cdef int t, src, off, dst, count, sp, v
    for t in range(m):
        src = chosen[t] // (n - 1)
        off = chosen[t] % (n - 1)
        esrc[t] = src
        edst[t] = off + 1 if off >= src else off
    for t in range(n):
        reached[t] = 0
    reached[0] = 1
    count = 1
    pending[0] = 0
    sp = 1
    while sp:
        sp -= 1
        v = pending[sp]
        for t in range(m):
            dst = edst[t]
            if esrc[t] == v and not reached[dst]:
                reached[dst] = 1
                count += 1
                pending[sp] = dst
                sp += 1
    return count


def reach_counts(int n, int m, long long n_samples, unsigned long long seed,
                 long long start_index=0):
    """Reachable-state count of each sampled diagram, as an int64 array."""
    cdef int universe = n * (n - 1)
    out_arr = np.empty(n_samples, dtype=np.int64)
    perm_arr = np.empty(max(universe, 1), dtype=np.int32)
    esrc_arr = np.empty(max(m, 1), dtype=np.int32)
    edst_arr = np.empty(max(m, 1), dtype=np.int32)
    reached_arr = np.empty(n, dtype=np.uint8)
    pending_arr = np.empty(n, dtype=np.int32)

    cdef int64_t[::1] out = out_arr
    cdef int32_t[::1] perm = perm_arr
    cdef int32_t[::1] esrc = esrc_arr
    cdef int32_t[::1] edst = edst_arr
    cdef unsigned char[::1] reached = reached_arr
    cdef int32_t[::1] pending = pending_arr

    cdef long long i
    cdef uint64_t state
    with nogil:
        for i in range(n_samples):
            state = stream_state(seed, <uint64_t>(start_index + i))
            sample_subset(&state, &perm[0], universe, m)
            if n > 1:
                out[i] = reach_count(n, m, &perm[0], &esrc[0], &edst[0],
                                     &reached[0], &pending[0])
            else:
                out[i] = 1
    return out_arr


def edge_subsets(int n, int m, long long n_samples, unsigned long long seed,
                 long long start_index=0):
    """Sampled edge subsets as an (n_samples, m) int32 array, rows sorted."""
    cdef int universe = n * (n - 1)
    out_arr = np.empty((n_samples, max(m, 1)), dtype=np.int32)
    perm_arr = np.empty(max(universe, 1), dtype=np.int32)

    cdef int32_t[:, ::1] out = out_arr
    cdef int32_t[::1] perm = perm_arr

    cdef long long i
    cdef int t, j
    cdef int32_t key
    cdef uint64_t state
    with nogil:
        for i in range(n_samples):
            state = stream_state(seed, <uint64_t>(start_index + i))
            sample_subset(&state, &perm[0], universe, m)
            # insertion sort of the m chosen ids
            for t in range(1, m):
                key = perm[t]
                j = t - 1
                while j >= 0 and perm[j] > key:
                    perm[j + 1] = perm[j]
                    j -= 1
                perm[j + 1] = key
            for t in range(m):
                out[i, t] = perm[t]
    return out_arr[:, :m]
