#!/usr/bin/env python3
"""Arbitrary-precision reference values for the bound evaluators and the
small exact-posterior examples used in the test suites.

Run from the repository root:

    python3 scripts/reference_values.py

The printed constants are frozen by hand into tests/reference_constants.hpp.
Everything here is computed directly from the defining expressions with
mpmath at 60 decimal digits, independently of the C++ implementation.
"""

import mpmath as mp

mp.mp.dps = 60


def fmt(name, value):
    print(f"{name} = {mp.nstr(mp.mpf(value), 17, strip_zeros=False)}")


def mu_of(p, q):
    p, q = mp.mpf(p), mp.mpf(q)
    return p + q - 2 * p * q - 2 * mp.sqrt(p * (1 - p) * q * (1 - q))


def lambda_of(p, q):
    p, q = mp.mpf(p), mp.mpf(q)
    return mp.log(1 - p) - mp.log(p) + mp.log(q) - mp.log(1 - q)


def test_power(n, k, p, q):
    return (1 - mu_of(p, q)) ** (2 * k * (n - k))


def recovery_mass_bound(n, p, q):
    z = (1 - mu_of(p, q)) ** (mp.mpf(n) / 2)
    return (1 + z) ** (2 * n) - 1


def detect_expr(n, kn, p, q):
    z = (1 - mu_of(p, q)) ** (mp.mpf(n) / 2)
    return mp.mpf(n) / kn * z


def detect_mass_bound(n, kn, p, q):
    r = detect_expr(n, kn, p, q)
    return r * mp.e ** (1 + r)


def alpha_of(n, kn):
    num = mp.mpf(0)
    den = mp.mpf(0)
    for k in range(kn + 1):
        w = mp.binomial(n, k) ** 2
        num += w * 2 * k * (n - k)
        den += w
    return num / den


def d_rate(n, kn, p, q, C):
    a = alpha_of(n, kn)
    lam = lambda_of(p, q)
    return mp.e ** (-C * a * abs(mp.mpf(p) - mp.mpf(q)) * abs(lam))


def minimax_base(p, q):
    p, q = mp.mpf(p), mp.mpf(q)
    return mp.sqrt(p * q) + mp.sqrt((1 - p) * (1 - q))


def misclass_rate_bound(n, p, q):
    return minimax_base(p, q) ** n


def confidence_deficit_bound(n, p, q, delta):
    base = minimax_base(p, q)
    scale = (mp.pi * n * mp.mpf(delta)) ** (mp.mpf(1) / n)
    return 2 * mp.mpf(4) ** n * (base / scale) ** (mp.mpf(n) / 2)


def radius_margin(n, p, q, delta):
    return (mp.pi * n * mp.mpf(delta)) ** (mp.mpf(1) / n) * minimax_base(p, q)


def enlargement_factor(beta):
    b = mp.mpf(beta)
    return (1 - b) ** (-2 * (1 - b)) * b ** (-2 * b)


def main():
    print("# Hellinger quantities at p=0.8, q=0.2")
    fmt("mu_08_02", mu_of("0.8", "0.2"))
    fmt("lambda_08_02", lambda_of("0.8", "0.2"))
    fmt("rho_08_02", mp.e ** (-abs(lambda_of("0.8", "0.2"))))

    print("\n# Test power")
    fmt("test_power_2_1_08_02", test_power(2, 1, "0.8", "0.2"))
    fmt("test_power_4_2_07_01", test_power(4, 2, "0.7", "0.1"))

    print("\n# Recovery / detection bounds")
    fmt("recovery_bound_6_08_01", recovery_mass_bound(6, "0.8", "0.1"))
    fmt("recovery_bound_32_07_01", recovery_mass_bound(32, "0.7", "0.1"))
    fmt("detect_expr_100_10_05_01", detect_expr(100, 10, "0.5", "0.1"))
    fmt("detect_bound_100_10_05_01", detect_mass_bound(100, 10, "0.5", "0.1"))

    print("\n# Contiguity quantities")
    fmt("alpha_2_1", alpha_of(2, 1))
    fmt("alpha_8_2", alpha_of(8, 2))
    fmt("alpha_100_10", alpha_of(100, 10))
    fmt("d_rate_8_2_03_02_C2", d_rate(8, 2, "0.3", "0.2", 2))

    print("\n# Minimax bounds at n=10, p=0.9, q=0.1, delta=0.1")
    fmt("misclass_10_09_01", misclass_rate_bound(10, "0.9", "0.1"))
    fmt("confdef_10_09_01_d01", confidence_deficit_bound(10, "0.9", "0.1", "0.1"))
    fmt("radius_margin_10_09_01_d01", radius_margin(10, "0.9", "0.1", "0.1"))

    print("\n# Enlargement factor")
    fmt("f_beta_025", enlargement_factor("0.25"))
    fmt("f_beta_05", enlargement_factor("0.5"))
    fmt("f_beta_1em8", enlargement_factor(mp.mpf("1e-8")))

    # Exact posterior over the three balanced two-colourings of 4 vertices,
    # graph with edges {0-1, 2-3}, p=0.8, q=0.2.  Weights computed directly
    # from per-pair edge probabilities.
    print("\n# n=2 posterior example: edges {0-1, 2-3}, p=0.8, q=0.2")
    p, q = mp.mpf("0.8"), mp.mpf("0.2")
    assignments = ["0011", "0101", "0110"]
    edges = {(0, 1), (2, 3)}
    liks = []
    for a in assignments:
        lik = mp.mpf(1)
        for i in range(4):
            for j in range(i + 1, 4):
                prob = p if a[i] == a[j] else q
                lik *= prob if (i, j) in edges else (1 - prob)
        liks.append(lik)
    total = sum(liks)
    for a, lik in zip(assignments, liks):
        fmt(f"post_weight_{a}", lik / total)
    fmt("log_evidence_n2", mp.log(total / 3))


if __name__ == "__main__":
    main()
