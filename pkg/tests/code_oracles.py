"""Brute-force oracles for code counting and greedy construction.

Everything here works directly on words of F_2^r with no quotient or
canonical-basis machinery, so agreement with the library is meaningful.
"""

import numpy as np


def naive_sigma(r, k):
    """Count k-dim codes containing the all-ones word with weights in 8Z
    by direct span enumeration; supports k <= 3."""
    allones = (1 << r) - 1
    lut = np.zeros(1 << min(r, 16), dtype=np.int64)
    for i in range(min(r, 16)):
        lut[1 << i: 1 << (i + 1)] = lut[: 1 << i] + 1
    words = np.arange(1 << r, dtype=np.int64)
    wt = lut[words & 0xFFFF] + (lut[words >> 16] if r > 16 else 0)
    good = wt % 8 == 0
    if k == 1:
        return int(good[allones])
    if k == 2:
        # D = {0, 1, v, v + 1}; each code arises from v and from v + 1
        ok = good & good[words ^ allones]
        ok[0] = ok[allones] = False
        return int(np.count_nonzero(ok)) // 2 if good[allones] else 0
    if k == 3:
        if not good[allones]:
            return 0
        ok = good & good[words ^ allones]
        ok[0] = ok[allones] = False
        vs = words[ok]
        total = 0
        for v in vs:
            mask = ok[vs] & good[vs ^ v] & good[vs ^ v ^ allones]
            mask &= (vs != v) & (vs != (v ^ allones))
            total += int(np.count_nonzero(mask))
        # ordered (v, w) pairs per code: 6 choices of v, then 4 of w
        assert total % 24 == 0
        return total // 24
    raise NotImplementedError


def greedy_scan(n, d):
    """Literal lexicode definition: admit v when its minimum distance to
    the span of the admitted vectors is >= d."""
    code = [0]
    for v in range(1, 1 << n):
        if min((v ^ w).bit_count() for w in code) >= d:
            code = code + [v ^ w for w in code]
    return sorted(code)
