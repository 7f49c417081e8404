#!/usr/bin/env python3
"""Independent oracle for the p=23 worked fixture and related test vectors.

Computes every expected value used in the C++ test suites by direct modular
arithmetic (no shared code with the implementation). Run it and paste the
printed constants into the tests; re-run whenever a frozen value looks
suspicious.
"""

import hashlib
import json

P = 23
EXP_MOD = P - 1  # 22


def mod_pow_naive(base, exp, mod):
    """Repeated multiplication, no square-and-multiply."""
    acc = 1
    for _ in range(exp):
        acc = (acc * base) % mod
    return acc


def egcd(a, b):
    if b == 0:
        return (a, 1, 0)
    g, x, y = egcd(b, a % b)
    return (g, y, x - (a // b) * y)


def mod_inv(a, m):
    g, x, _ = egcd(a % m, m)
    if g != 1:
        return None
    return x % m


def h(x):
    """Fixture master polynomial h(x) = 3x + 5 over Z_22."""
    return (3 * x + 5) % EXP_MOD


def material(r):
    h_i = h(r % EXP_MOD)
    b = [mod_pow_naive(r, a_k, P) for a_k in (5, 3)]  # a_0=5, a_1=3
    return h_i, b


def send_key(h_i, r_recv):
    return mod_pow_naive(r_recv, h_i, P)


def recv_key(b, r_send):
    acc = 1
    for k, b_k in enumerate(b):
        z_k = mod_pow_naive(r_send, k, 10**9) % EXP_MOD if k else 1
        acc = (acc * mod_pow_naive(b_k, z_k, P)) % P
    return acc


def session_key(p, r_s, r_r, k, bit_length):
    width = (bit_length + 7) // 8
    buf = b"SBLOMv1"
    for v in (p, r_s, r_r, k):
        buf += v.to_bytes(width, "big")
    return hashlib.sha256(buf).hexdigest()


def classic_key(r_i, r_j):
    """f(x,y) = 1 + 2xy over Z_23."""
    return (1 + 2 * r_i * r_j) % P


def dl_bruteforce(target, base, p):
    cur, e = 1, 0
    while True:
        if cur == target:
            return e
        cur = (cur * base) % p
        e += 1
        if cur == 1:
            return None


def main():
    out = {}

    h_a, b_a = material(2)
    h_b, b_b = material(5)
    out["h_alice"] = h_a
    out["b_alice"] = b_a
    out["h_bob"] = h_b
    out["b_bob"] = b_b

    out["K_2_to_5_send"] = send_key(h_a, 5)
    out["K_2_to_5_recv"] = recv_key(b_b, 2)
    out["K_5_to_2_send"] = send_key(h_b, 2)
    out["K_5_to_2_recv"] = recv_key(b_a, 5)

    out["mod_pow_5_11_23"] = mod_pow_naive(5, 11, 23)
    out["mod_inv_3_22"] = mod_inv(3, 22)
    out["lagrange_nodes_(2,11),(5,20)_mod22_slope"] = (
        ((20 - 11) * mod_inv(5 - 2, 22)) % 22
    )
    out["h_of_7"] = h(7)

    out["classic_k_2_5"] = classic_key(2, 5)
    out["classic_share_r2"] = [1, (2 * 2) % P]   # g_2(x) = 1 + 4x
    out["classic_share_r5"] = [1, (2 * 5) % P]   # g_5(x) = 1 + 10x

    out["dl_8_base2"] = dl_bruteforce(8, 2, 23)
    out["dl_5_base2"] = dl_bruteforce(5, 2, 23)  # None: 5 outside <2>
    out["pow2_subgroup_mod23"] = sorted({mod_pow_naive(2, e, 23) for e in range(22)})

    out["session_key_2_to_5"] = session_key(23, 2, 5, 22, bit_length=5)
    out["session_key_5_to_2"] = session_key(23, 5, 2, 6, bit_length=5)

    # Perfect-secrecy enumeration at p=5, m=1: adversary holds the share of
    # r=3; count, over all symmetric f consistent with that share, how often
    # each key value appears for the non-colluder pair (1, 2).
    p5 = 5
    adv_r = 3
    counts = {}
    for c00 in range(p5):
        for c01 in range(p5):
            for c11 in range(p5):
                share = ((c00 + c01 * adv_r) % p5, (c01 + c11 * adv_r) % p5)
                key12 = (c00 + c01 * (1 + 2) + c11 * 1 * 2) % p5
                counts.setdefault(share, [0] * p5)[key12] += 1
    flat = {str(k): v for k, v in counts.items()}
    uniform = all(len(set(v)) == 1 for v in counts.values())
    out["p5_secrecy_uniform_for_every_observed_share"] = uniform
    out["p5_secrecy_counts_example"] = flat[str((0, 0))]

    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
