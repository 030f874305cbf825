"""Pure-Python hot kernels.  ``_ckernels.pyx`` mirrors these signatures."""


def signed_sort(coords, mode):
    """Sort ``coords`` into dominant order and count the Weyl length.

    ``mode`` 0 is type A (permutations), 1 is type B, 2 is type D.  Returns
    ``(ordered, length, repeated)``; for B/D ``ordered`` holds absolute values
    and ``repeated`` flags two coordinates of equal absolute value.
    """
    n = len(coords)
    length = 0
    repeated = False
    if mode == 0:
        for i in range(n):
            ci = coords[i]
            for j in range(i + 1, n):
                cj = coords[j]
                if ci < cj:
                    length += 1
                elif ci == cj:
                    repeated = True
        return sorted(coords, reverse=True), length, repeated
    for i in range(n):
        ci = coords[i]
        if mode == 1 and ci < 0:
            length += 1
        for j in range(i + 1, n):
            cj = coords[j]
            if ci < cj:
                length += 1
            if ci + cj < 0:
                length += 1
            if ci == cj or ci == -cj:
                repeated = True
    return sorted((abs(c) for c in coords), reverse=True), length, repeated


def lr_coefficients(mu, nu, max_rows):
    """Littlewood-Richardson coefficients ``c^lam_{mu nu}`` as ``{lam: c}``.

    Enumerates LR skew tableaux of shape ``lam / mu`` and content ``nu``:
    label ``i`` is added as a horizontal strip, and the reverse reading word
    stays a lattice word.  Shapes with more than ``max_rows`` rows are never
    built (``max_rows < 0`` means no bound).
    """
    mu = [int(x) for x in mu if x]
    nu = [int(x) for x in nu if x]
    L = len(mu) + len(nu)
    if max_rows >= 0:
        L = min(L, max_rows)
    result = {}
    if len(mu) > L:
        return result
    lam = mu + [0] * (L - len(mu))
    nlabels = len(nu)

    def record():
        end = L
        while end and lam[end - 1] == 0:
            end -= 1
        key = tuple(lam[:end])
        result[key] = result.get(key, 0) + 1

    def place(i, prev_counts):
        if i == nlabels:
            record()
            return
        old = lam[:]
        counts = [0] * L

        def fill(r, remaining, cum_new, cum_prev):
            if remaining == 0:
                place(i + 1, counts[:])
                return
            if r == L:
                return
            ub = remaining
            if r > 0:
                ub = min(ub, old[r - 1] - old[r])
            if i > 0:
                ub = min(ub, cum_prev - cum_new)
            nxt_prev = cum_prev + (prev_counts[r] if i > 0 else 0)
            for c in range(ub, -1, -1):
                lam[r] = old[r] + c
                counts[r] = c
                fill(r + 1, remaining - c, cum_new + c, nxt_prev)
            lam[r] = old[r]
            counts[r] = 0

        fill(0, nu[i], 0, 0)

    place(0, None)
    return result
