"""Compiled inner loops. Each function mirrors one in ``vectorized``."""

import numpy as np
from numba import njit


@njit(cache=True)
def bfs_distances(adj):
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for src in range(n):
        dist[src, src] = 0
        queue[0] = src
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[src, u]
            for v in range(n):
                if adj[u, v] and dist[src, v] < 0:
                    dist[src, v] = du + 1
                    queue[tail] = v
                    tail += 1
    return dist


@njit(cache=True)
def _off_diagonal_sq(a):
    n = a.shape[0]
    off = 0.0
    total = 0.0
    for i in range(n):
        for j in range(n):
            sq = a[i, j] * a[i, j]
            total += sq
            if i != j:
                off += sq
    return off, total


@njit(cache=True)
def jacobi_eigenvalues(a_in, max_sweeps):
    a = a_in.copy()
    n = a.shape[0]
    prev_off = np.inf
    converged = False
    for _ in range(max_sweeps):
        off, total = _off_diagonal_sq(a)
        # stop at round-off level, or when a sweep no longer shrinks the off-diagonal mass
        if off <= 1e-30 * total or off >= prev_off:
            converged = True
            break
        prev_off = off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
    out = np.empty(n)
    for i in range(n):
        out[i] = a[i, i]
    return out, converged


@njit(cache=True)
def power_iteration(a, shift, tol, max_iter):
    n = a.shape[0]
    norm = 0.0
    for i in range(n):
        for j in range(n):
            norm += a[i, j] * a[i, j]
    norm = np.sqrt(norm) + abs(shift)
    x = np.full(n, 1.0 / np.sqrt(n))
    y = np.empty(n)
    lam_prev = np.inf
    lam = 0.0
    for it in range(max_iter):
        for i in range(n):
            acc = shift * x[i]
            for j in range(n):
                acc += a[i, j] * x[j]
            y[i] = acc
        lam = 0.0
        for i in range(n):
            lam += x[i] * y[i]
        res = 0.0
        ynorm = 0.0
        for i in range(n):
            r = y[i] - lam * x[i]
            res += r * r
            ynorm += y[i] * y[i]
        res = np.sqrt(res)
        ynorm = np.sqrt(ynorm)
        if abs(lam - lam_prev) < tol and res < np.sqrt(tol) * norm:
            return lam - shift, it + 1, True
        if ynorm == 0.0:
            return lam - shift, it + 1, True
        for i in range(n):
            x[i] = y[i] / ynorm
        lam_prev = lam
    return lam - shift, max_iter, False


@njit(cache=True)
def deficiency_scan(nbr, n):
    full = (np.int64(1) << n) - 1
    best_def = -n - 1
    best_pop = n + 1
    best_mask = np.int64(0)
    for mask in range(np.int64(1) << n):
        comp = full & ~mask
        pop = 0
        iso = 0
        for v in range(n):
            if (mask >> v) & 1:
                pop += 1
            elif (nbr[v] & comp) == 0:
                iso += 1
        d = iso - pop
        if d > best_def or (d == best_def and pop < best_pop):
            best_def = d
            best_pop = pop
            best_mask = mask
    return best_def, best_mask
