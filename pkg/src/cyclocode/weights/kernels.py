"""Enumeration kernels.

Every public function here has a numba body and a numpy body with the same
signature and the same output; ``_accel.HAVE_NUMBA`` picks one.  The numba
bodies are compiled with ``nogil=True`` so worker threads run concurrently.
"""
from __future__ import annotations

import numpy as np

from .._accel import HAVE_NUMBA, njit

# ---------------------------------------------------------------------------
# binary: rows packed into uint64 words


def pack_rows(G: np.ndarray) -> np.ndarray:
    """0/1 matrix (k, n) -> (k, ceil(n/64)) uint64, bit j of word w is column 64 w + j."""
    k, n = G.shape
    W = (n + 63) // 64
    out = np.zeros((k, W), dtype=np.uint64)
    for w in range(W):
        blk = G[:, 64 * w: 64 * (w + 1)].astype(np.uint64)
        shifts = np.arange(blk.shape[1], dtype=np.uint64)
        out[:, w] = (blk << shifts).sum(axis=1, dtype=np.uint64)
    return out


@njit(cache=True, inline="always")
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True, nogil=True)
def _binary_gray_nb(rows, start, stop, hist):
    """Add the weights of messages with Gray ranks in [start, stop) to hist."""
    k, W = rows.shape
    cw = np.zeros(W, dtype=np.uint64)
    g = start ^ (start >> 1)
    for j in range(k):
        if (g >> j) & 1:
            for w in range(W):
                cw[w] ^= rows[j, w]
    wt = 0
    for w in range(W):
        wt += _popcount64(cw[w])
    hist[wt] += 1
    if W == 1:
        c0 = cw[0]
        for i in range(start + 1, stop):
            j = 0
            t = i
            while (t & 1) == 0:
                t >>= 1
                j += 1
            c0 ^= rows[j, 0]
            hist[_popcount64(c0)] += 1
    elif W == 2:
        c0 = cw[0]
        c1 = cw[1]
        for i in range(start + 1, stop):
            j = 0
            t = i
            while (t & 1) == 0:
                t >>= 1
                j += 1
            c0 ^= rows[j, 0]
            c1 ^= rows[j, 1]
            hist[_popcount64(c0) + _popcount64(c1)] += 1
    else:
        for i in range(start + 1, stop):
            j = 0
            t = i
            while (t & 1) == 0:
                t >>= 1
                j += 1
            wt = 0
            for w in range(W):
                cw[w] ^= rows[j, w]
                wt += _popcount64(cw[w])
            hist[wt] += 1


def _subset_xors(rows: np.ndarray) -> np.ndarray:
    """All 2^len(rows) XOR combinations, index bit j selects rows[j]."""
    out = np.zeros((1 << rows.shape[0], rows.shape[1]), dtype=np.uint64)
    for j in range(rows.shape[0]):
        h = 1 << j
        out[h: 2 * h] = out[:h] ^ rows[j]
    return out


def _binary_range_np(rows: np.ndarray, start: int, stop: int, hist: np.ndarray, low_bits: int = 18) -> None:
    """Same multiset as the Gray kernel: message indices are a bijection of ranks.

    Ranks [start, stop) map to Gray words g(i) = i ^ (i >> 1); we enumerate the
    words directly in blocks of 2^b aligned ranks, where the block's low b bits
    of g run over all values.
    """
    k, W = rows.shape
    n_hist = hist.size
    b = min(low_bits, k)
    low = _subset_xors(rows[:b])
    pos = start
    while pos < stop:
        blk = 1 << b
        if pos % blk == 0 and pos + blk <= stop:
            # ranks pos .. pos+blk-1 give Gray words whose high part is fixed
            hi_word = (pos ^ (pos >> 1)) >> b
            base = np.zeros(W, dtype=np.uint64)
            for j in range(b, k):
                if (hi_word >> (j - b)) & 1:
                    base ^= rows[j]
            wt = np.zeros(blk, dtype=np.int64)
            for w in range(W):
                wt += np.bitwise_count(low[:, w] ^ base[w]).astype(np.int64)
            hist += np.bincount(wt, minlength=n_hist)[:n_hist]
            pos += blk
        else:
            end = min(stop, (pos // blk + 1) * blk)
            idx = np.arange(pos, end, dtype=np.int64)
            g = idx ^ (idx >> 1)
            acc = np.zeros((g.size, W), dtype=np.uint64)
            for j in range(k):
                sel = ((g >> j) & 1).astype(bool)
                acc[sel] ^= rows[j]
            wt = np.zeros(g.size, dtype=np.int64)
            for w in range(W):
                wt += np.bitwise_count(acc[:, w]).astype(np.int64)
            hist += np.bincount(wt, minlength=n_hist)[:n_hist]
            pos = end


def binary_range(rows: np.ndarray, start: int, stop: int, hist: np.ndarray) -> None:
    if stop <= start:
        return
    if HAVE_NUMBA:
        _binary_gray_nb(rows, np.int64(start), np.int64(stop), hist)
    else:
        _binary_range_np(rows, start, stop, hist)


# ---------------------------------------------------------------------------
# q-ary: codewords as (n, m) digit arrays over GF(p); hist[flag, w] with flag = coordinate sum != 0


@njit(cache=True, nogil=True)
def _qary_gray_nb(rows, rowsums, p, start, stop, hist):
    kk, n, m = rows.shape
    # digits of the start rank and its Gray word
    digs = np.zeros(kk + 1, dtype=np.int64)
    t = start
    for d in range(kk):
        digs[d] = t % p
        t //= p
    cw = np.zeros((n, m), dtype=np.int64)
    s = np.zeros(m, dtype=np.int64)
    for d in range(kk):
        g = (digs[d] - digs[d + 1]) % p
        if g:
            for c in range(n):
                for e in range(m):
                    cw[c, e] = (cw[c, e] + g * rows[d, c, e]) % p
            for e in range(m):
                s[e] = (s[e] + g * rowsums[d, e]) % p
    wt = 0
    for c in range(n):
        nz = 0
        for e in range(m):
            if cw[c, e]:
                nz = 1
        wt += nz
    flag = 0
    for e in range(m):
        if s[e]:
            flag = 1
    hist[flag, wt] += 1
    for i in range(start + 1, stop):
        # increment the rank digits; j = p-adic valuation of i
        j = 0
        while digs[j] == p - 1:
            digs[j] = 0
            j += 1
        digs[j] += 1
        for c in range(n):
            before = 0
            after = 0
            for e in range(m):
                if cw[c, e]:
                    before = 1
                v = cw[c, e] + rows[j, c, e]
                if v >= p:
                    v -= p
                cw[c, e] = v
                if v:
                    after = 1
            wt += after - before
        flag = 0
        for e in range(m):
            v = s[e] + rowsums[j, e]
            if v >= p:
                v -= p
            s[e] = v
            if v:
                flag = 1
        hist[flag, wt] += 1


def _qary_range_np(rows, rowsums, p, start, stop, hist, low_digits: int | None = None):
    kk, n, m = rows.shape
    if low_digits is None:
        low_digits = 1
        while low_digits < kk and p ** (low_digits + 1) <= (1 << 16):
            low_digits += 1
    b = min(low_digits, kk)
    blk = p ** b
    # all GF(p) combinations of the low rows, index digit d selects coefficient of row d
    combos = np.zeros((blk, n, m), dtype=np.int64)
    csum = np.zeros((blk, m), dtype=np.int64)
    size = 1
    for d in range(b):
        for c in range(1, p):
            combos[c * size: (c + 1) * size] = (combos[:size] + c * rows[d]) % p
            csum[c * size: (c + 1) * size] = (csum[:size] + c * rowsums[d]) % p
        size *= p

    def gray_digits(idx):
        dg = np.zeros((idx.size, kk + 1), dtype=np.int64)
        t = idx.copy()
        for d in range(kk):
            dg[:, d] = t % p
            t //= p
        return (dg[:, :kk] - dg[:, 1:]) % p

    def tally(words, sums):
        wt = (words != 0).any(axis=2).sum(axis=1)
        flag = (sums != 0).any(axis=1).astype(np.int64)
        np.add.at(hist, (flag, wt), 1)

    pos = start
    while pos < stop:
        if pos % blk == 0 and pos + blk <= stop:
            # ranks of one aligned block share the Gray digits above b, and the
            # low Gray digits run over all p^b patterns exactly once
            g = gray_digits(np.array([pos], dtype=np.int64))[0]
            base = np.zeros((n, m), dtype=np.int64)
            bsum = np.zeros(m, dtype=np.int64)
            for d in range(b, kk):
                if g[d]:
                    base = (base + g[d] * rows[d]) % p
                    bsum = (bsum + g[d] * rowsums[d]) % p
            tally((combos + base) % p, (csum + bsum) % p)
            pos += blk
        else:
            end = min(stop, (pos // blk + 1) * blk)
            g = gray_digits(np.arange(pos, end, dtype=np.int64))
            words = np.einsum("id,dnm->inm", g, rows) % p
            sums = (g @ rowsums) % p
            tally(words, sums)
            pos = end


def qary_range(rows, rowsums, p, start, stop, hist) -> None:
    if stop <= start:
        return
    if HAVE_NUMBA:
        _qary_gray_nb(rows, rowsums, np.int64(p), np.int64(start), np.int64(stop), hist)
    else:
        _qary_range_np(rows, rowsums, p, start, stop, hist)


# ---------------------------------------------------------------------------
# information-set search over GF(q) with small arithmetic tables


@njit(cache=True, nogil=True)
def _isd_trial_nb(G, perm, add, mul, inv, neg, best):
    """Systematic form on the columns perm[:k]; returns min weight over rows and pairs."""
    k, n = G.shape
    q = add.shape[0]
    M = np.empty((k, n), dtype=np.int64)
    for i in range(k):
        for c in range(n):
            M[i, c] = G[i, perm[c]]
    r = 0
    for c in range(n):
        if r == k:
            break
        piv = -1
        for i in range(r, k):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for cc in range(n):
                tmp = M[r, cc]
                M[r, cc] = M[piv, cc]
                M[piv, cc] = tmp
        f = inv[M[r, c]]
        for cc in range(n):
            M[r, cc] = mul[f, M[r, cc]]
        for i in range(k):
            if i != r and M[i, c] != 0:
                f = neg[M[i, c]]
                for cc in range(n):
                    M[i, cc] = add[M[i, cc], mul[f, M[r, cc]]]
        r += 1
    for i in range(r):
        w = 0
        for cc in range(n):
            if M[i, cc] != 0:
                w += 1
        if w < best:
            best = w
    for i in range(r):
        for j in range(i + 1, r):
            for a in range(1, q):
                w = 0
                for cc in range(n):
                    if add[M[i, cc], mul[a, M[j, cc]]] != 0:
                        w += 1
                        if w >= best:
                            break
                if w < best:
                    best = w
    return best


def _isd_trial_np(G, perm, add, mul, inv, neg, best):
    k, n = G.shape
    q = add.shape[0]
    M = G[:, perm].copy()
    r = 0
    for c in range(n):
        if r == k:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        M[[r, piv]] = M[[piv, r]]
        M[r] = mul[inv[M[r, c]], M[r]]
        for i in np.flatnonzero(M[:, c]):
            if i != r:
                M[i] = add[M[i], mul[neg[M[i, c]], M[r]]]
        r += 1
    R = M[:r]
    best = min(best, int((R != 0).sum(axis=1).min())) if r else best
    for a in range(1, q):
        S = mul[a][R]  # a * row_j
        comb = add[R[:, None, :], S[None, :, :]]  # row_i + a row_j
        w = (comb != 0).sum(axis=2)
        iu = np.triu_indices(r, 1)
        if iu[0].size:
            best = min(best, int(w[iu].min()))
    return best


def isd_trial(G, perm, tables, best) -> int:
    add, mul, inv, neg = tables
    if HAVE_NUMBA:
        return int(_isd_trial_nb(G, perm, add, mul, inv, neg, np.int64(best)))
    return int(_isd_trial_np(G, perm, add, mul, inv, neg, best))
