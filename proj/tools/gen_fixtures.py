#!/usr/bin/env python3
"""Regenerate tests/fixtures/*.json from q-expansions of classical generators.

Elliptic eigenforms of level one whose cusp space is one-dimensional are products of
Delta = q prod (1 - q^n)^24 with Eisenstein series E4, E6, so their coefficients are exact
integers computed here from scratch. Siegel records are Saito-Kurokawa lifts of those forms,
read off the arithmetic spin factor
    (1 - p^(k-1) X)(1 - p^(k-2) X)(1 - lambda_f(p) X + p^(2k-3) X^2)
with sum_r lambda_F(p^r) X^r = (1 - p^(2k-4) X^2) / that factor.

Usage: python3 tools/gen_fixtures.py [outdir]
"""

import cmath
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

N = 100


def sigma(n, k):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def eisenstein(k, c, n_terms):
    return [1] + [c * sigma(n, k - 1) for n in range(1, n_terms + 1)]


def mul(a, b, n_terms):
    out = [0] * (n_terms + 1)
    for i, x in enumerate(a[: n_terms + 1]):
        if x:
            for j, y in enumerate(b[: n_terms + 1 - i]):
                out[i + j] += x * y
    return out


def delta(n_terms):
    # q prod (1 - q^n)^24, as a list indexed by the power of q.
    prod = [1] + [0] * n_terms
    for n in range(1, n_terms + 1):
        factor = [0] * (n_terms + 1)
        factor[0] = 1
        factor[n] = -1
        for _ in range(24):
            prod = mul(prod, factor, n_terms)
    return [0] + prod[:n_terms]


def cusp_form(weight, n_terms=N):
    e4 = eisenstein(4, 240, n_terms)
    e6 = eisenstein(6, -504, n_terms)
    f = delta(n_terms)
    extra = {12: [], 16: [e4], 18: [e6], 20: [e4, e4], 22: [e4, e6], 26: [e4, e4, e6]}[weight]
    for g in extra:
        f = mul(f, g, n_terms)
    assert f[1] == 1
    return f[1 : n_terms + 1]  # lambda_f(1..n_terms)


def primes_up_to(n):
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, int(p**0.5) + 1))]


def sk_eigenvalues(lam_p, p, k, max_r=4):
    # coefficients of the arithmetic spin reciprocal of the lift
    a, b = p ** (k - 1), p ** (k - 2)
    lin = [1, -(a + b), a * b]
    quad = [1, -lam_p, p ** (2 * k - 3)]
    recip = [0] * 5
    for i, x in enumerate(lin):
        for j, y in enumerate(quad):
            recip[i + j] += x * y
    inv = [Fraction(1)] + [Fraction(0)] * max_r
    for r in range(1, max_r + 1):
        inv[r] = -sum(recip[i] * inv[r - i] for i in range(1, min(r, 4) + 1))
    num = [1, 0, -(p ** (2 * k - 4))]
    return [sum(num[i] * inv[r - i] for i in range(0, min(r, 2) + 1)) for r in range(max_r + 1)]


def elliptic_record(label, weight):
    return {"label": label, "weight": weight, "coefficients": [str(c) for c in cusp_form(weight)]}


def sk_record(label, weight, f, k, max_p=N, tabulate=True):
    data = []
    for p in primes_up_to(max_p):
        lam = sk_eigenvalues(f[p - 1], p, k)
        e = {"p": p, "lambda_p": str(lam[1]), "lambda_p2": str(lam[2])}
        if tabulate:
            e["lambda_p3"] = str(lam[3])
            e["lambda_p4"] = str(lam[4])
        data.append(e)
    return {"label": label, "weight": k, "level": 1, "type": "P", "prime_data": data}


def sk_satake_record(label, weight, f, k, max_p=N):
    # normalized spin parameters {p^(1/2), p^(-1/2), alpha_f, conj(alpha_f)}
    data = []
    for p in primes_up_to(max_p):
        a = f[p - 1] / p ** ((weight - 1) / 2)
        beta = complex(a / 2, math.sqrt(max(0.0, 1 - a * a / 4)))
        assert abs(abs(beta) - 1) < 1e-12 and abs(beta + beta.conjugate() - a) < 1e-12
        data.append({"p": p, "alpha": [math.sqrt(p), 0.0], "beta": [beta.real, beta.imag]})
    return {"label": label, "weight": k, "level": 1, "type": "P", "prime_data": data}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    files = {}

    def write(name, obj, provenance):
        (out / name).write_text(json.dumps(obj, indent=2) + "\n")
        files[name] = provenance

    for w, label in [(12, "Delta"), (16, "Delta*E4"), (18, "Delta*E6"), (20, "Delta*E4^2"), (22, "Delta*E4*E6"), (26, "Delta*E4^2*E6")]:
        write(f"elliptic_w{w}.json", elliptic_record(label, w), "DERIVED: q-expansion product of Delta and Eisenstein series")

    f18 = cusp_form(18)
    f22 = cusp_form(22)
    write("sk_k10.json", sk_record("SK(Delta*E6)", 18, f18, 10), "DERIVED: Saito-Kurokawa lift of the weight-18 oracle form")
    write("sk_k12.json", sk_record("SK(Delta*E4*E6)", 22, f22, 12), "DERIVED: Saito-Kurokawa lift of the weight-22 oracle form")
    write("sk_k10_satake.json", sk_satake_record("SK(Delta*E6) Satake", 18, f18, 10),
          "DERIVED: normalized spin parameters of the weight-10 lift")

    bad = sk_record("SK(Delta*E6) corrupted", 18, f18, 10)
    bad["prime_data"][0]["lambda_p3"] = str(int(bad["prime_data"][0]["lambda_p3"]) + 1)
    write("sk_k10_corrupted.json", bad, "TRIVIAL: lambda(2^3) of sk_k10.json increased by one")

    minimal = {"label": "minimal", "weight": 10, "level": 1, "type": "unknown",
               "prime_data": [{"p": 2, "lambda_p": "240", "lambda_p2": "-3/2"}]}
    write("minimal.json", minimal, "TRIVIAL: one prime, arbitrary values")

    (out / "MANIFEST.json").write_text(json.dumps(files, indent=2) + "\n")


if __name__ == "__main__":
    main()
