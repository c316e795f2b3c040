"""Pure-Python walk kernels. Same signatures as the compiled ``_ckernels``.

``flat`` is the row-major transition table (``flat[q * k + b]``) and
``finals`` holds one 0/1 byte per state.
"""


def walk(flat, k, q, word):
    for s in word:
        q = flat[q * k + s]
    return q


def walk_many(flat, k, states, word):
    """Run ``word`` from every state in ``states``; returns the end states."""
    out = []
    append = out.append
    for q in states:
        for s in word:
            q = flat[q * k + s]
        append(q)
    return out


def accept_mask(flat, k, finals, states, word):
    """Bytearray with 1 where ``word`` leads from ``states[j]`` to a final state."""
    out = bytearray(len(states))
    for j, q in enumerate(states):
        for s in word:
            q = flat[q * k + s]
        out[j] = finals[q]
    return out


def accept_bits(flat, k, finals, q, words):
    """Bitset with bit ``j`` set iff ``words[j]`` leads from ``q`` to a final state."""
    bits = 0
    for j, word in enumerate(words):
        p = q
        for s in word:
            p = flat[p * k + s]
        if finals[p]:
            bits |= 1 << j
    return bits
