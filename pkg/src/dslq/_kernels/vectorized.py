"""Pure-numpy versions of the compiled kernels.

Same algorithms and outputs as ``jitted``; inner loops are replaced by
array operations so the fallback stays usable without numba.
"""

import numpy as np

_SCAN_CHUNK = 1 << 18


def bfs_distances(adj):
    # frontier expansion from every source at once
    n = adj.shape[0]
    a = adj.astype(np.int64)
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    seen = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=np.int64)
    d = 0
    while frontier.any():
        d += 1
        reached = (frontier @ a) > 0
        new = reached & ~seen
        dist[new] = d
        seen |= new
        frontier = new.astype(np.int64)
    return dist


def jacobi_eigenvalues(a_in, max_sweeps):
    a = np.array(a_in, dtype=np.float64)
    n = a.shape[0]
    prev_off = np.inf
    converged = False
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        total = float(np.sum(a * a))
        off = total - float(np.sum(np.diag(a) ** 2))
        if off <= 1e-30 * total or off >= prev_off:
            converged = True
            break
        prev_off = off
        for p, q in zip(*iu):
            apq = a[p, q]
            if apq == 0.0:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            if abs(theta) > 1e150:
                t = 0.5 / theta
            else:
                t = np.copysign(1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0)), theta)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            colp = a[:, p].copy()
            colq = a[:, q].copy()
            a[:, p] = c * colp - s * colq
            a[:, q] = s * colp + c * colq
            rowp = a[p, :].copy()
            rowq = a[q, :].copy()
            a[p, :] = c * rowp - s * rowq
            a[q, :] = s * rowp + c * rowq
            a[p, q] = 0.0
            a[q, p] = 0.0
    return np.diag(a).copy(), converged


def power_iteration(a, shift, tol, max_iter):
    n = a.shape[0]
    norm = float(np.linalg.norm(a)) + abs(shift)
    x = np.full(n, 1.0 / np.sqrt(n))
    lam_prev = np.inf
    lam = 0.0
    for it in range(max_iter):
        y = a @ x + shift * x
        lam = float(x @ y)
        res = float(np.linalg.norm(y - lam * x))
        ynorm = float(np.linalg.norm(y))
        if abs(lam - lam_prev) < tol and res < np.sqrt(tol) * norm:
            return lam - shift, it + 1, True
        if ynorm == 0.0:
            return lam - shift, it + 1, True
        x = y / ynorm
        lam_prev = lam
    return lam - shift, max_iter, False


def deficiency_scan(nbr, n):
    total = 1 << n
    full = np.int64(total - 1)
    best = (-n - 1, n + 1, 0)  # (deficiency, popcount, mask)
    for start in range(0, total, _SCAN_CHUNK):
        masks = np.arange(start, min(total, start + _SCAN_CHUNK), dtype=np.int64)
        comp = full & ~masks
        pop = np.zeros(masks.size, dtype=np.int64)
        iso = np.zeros(masks.size, dtype=np.int64)
        for v in range(n):
            bit = (masks >> v) & 1
            pop += bit
            iso += (bit == 0) & ((nbr[v] & comp) == 0)
        d = iso - pop
        dmax = int(d.max())
        cand = d == dmax
        pmin = int(pop[cand].min())
        idx = int(np.flatnonzero(cand & (pop == pmin))[0])
        if dmax > best[0] or (dmax == best[0] and pmin < best[1]):
            best = (dmax, pmin, int(masks[idx]))
    return best[0], best[2]
