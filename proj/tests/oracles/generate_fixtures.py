"""Extended-precision reference values for the C++ tests.

Reads the shipped state fixtures, evaluates every quantity with mpmath at
50 significant digits and writes tests/fixtures/oracle_values.json.

    python3 tests/oracles/generate_fixtures.py
"""
import json
import pathlib

import mpmath as mp

mp.mp.dps = 50
ROOT = pathlib.Path(__file__).resolve().parents[2]


def load_state(name):
    data = json.loads((ROOT / "tools" / "fixtures" / name).read_text())
    re, im = data["matrix_real"], data["matrix_imag"]
    n = len(re)
    m = mp.matrix(n, n)
    for i in range(n):
        for j in range(n):
            m[i, j] = mp.mpc(mp.mpf(repr(re[i][j])), mp.mpf(repr(im[i][j])))
    return (m + m.H) / 2


def spectral(m, f, cutoff=mp.mpf("1e-12")):
    w, v = mp.eighe(m)
    top = max(w)
    n = m.rows
    out = mp.matrix(n, n)
    for k in range(n):
        if w[k] > cutoff * top:
            col = v[:, k]
            out += f(w[k]) * (col * col.H)
    return out


def trace_power(m, t):
    w, _ = mp.eighe((m + m.H) / 2)
    top = max(w)
    return mp.fsum(x ** t for x in w if x > mp.mpf("1e-12") * top)


def kernel(rho, sigma, alpha):
    g = (1 - alpha) / (2 * alpha)
    s = spectral(sigma, lambda x: x ** g)
    return trace_power(s * rho * s, alpha)


def kron(a, b):
    out = mp.matrix(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            for k in range(b.rows):
                for l in range(b.cols):
                    out[i * b.rows + k, j * b.cols + l] = a[i, j] * b[k, l]
    return out


def trace_out_first(m, da, db):
    out = mp.matrix(db, db)
    for a in range(da):
        for i in range(db):
            for j in range(db):
                out[i, j] += m[a * db + i, a * db + j]
    return out


def real(x):
    return float(mp.re(x))


rho = load_state("rho.json")
sigma = load_state("sigma.json")
identity2 = mp.eye(2)
rho_b = trace_out_first(rho, 2, 2)
omega = kron(identity2, rho_b)

alpha = mp.mpf("1.5")
tsallis_sandwiched = (kernel(rho, sigma, alpha) - 1) / (alpha - 1)

a_half = mp.mpf("0.5")
renyi_down = mp.log(kernel(rho, omega, a_half), 2) / (1 - a_half)

a8 = mp.mpf("0.8")
rho_a = spectral(rho, lambda x: x ** a8)
omega_p = spectral(omega, lambda x: x ** (1 - a8))
tsallis_down_plain = -(real(sum((rho_a * omega_p)[i, i] for i in range(4))) - 1) / (a8 - 1)

eigs = sorted((float(x) for x in mp.eighe(rho)[0]), reverse=True)
power = spectral(sigma, lambda x: x ** mp.mpf("-0.3"))


def afw(eps, d):
    eps = mp.mpf(eps)
    return 2 * eps * mp.log(d, 2) + (1 + eps) * mp.log(1 + eps, 2) - eps * mp.log(eps, 2)


def renyi_bound(a, d, eps):
    a, eps = mp.mpf(a), mp.mpf(eps)
    return mp.log(1 + eps, 2) + mp.log(1 + eps ** a * mp.mpf(d) ** (2 * (1 - a)), 2) / (1 - a)


def tsallis_bound(a, d, eps):
    a, eps = mp.mpf(a), mp.mpf(eps)
    return ((1 + eps ** a) * (1 + eps) ** (1 - a) - 1) * mp.mpf(d) ** (1 - a) / (1 - a)


def marwah_bound(a, d, eps):
    a, eps = mp.mpf(a), mp.mpf(eps)
    inner = eps ** a * mp.mpf(d) ** (2 * (1 - a)) + 1 - eps / (1 + eps) ** (1 - a)
    return mp.log(1 + eps, 2) + mp.log(inner, 2) / (1 - a)


out = {
    "rho_eigenvalues": eigs,
    "sigma_power_minus_0_3": {
        "real": [[float(mp.re(power[i, j])) for j in range(4)] for i in range(4)],
        "imag": [[float(mp.im(power[i, j])) for j in range(4)] for i in range(4)],
    },
    "tsallis_sandwiched_alpha_1_5": real(tsallis_sandwiched),
    "renyi_down_alpha_0_5": real(renyi_down),
    "tsallis_down_plain_alpha_0_8": float(tsallis_down_plain),
    "afw_0_1_d4": float(afw("0.1", 4)),
    "renyi_down_bound_0_5_d2_eps_0_25": float(renyi_bound("0.5", 2, "0.25")),
    "tsallis_down_bound_0_5_d4_eps_0_25": float(tsallis_bound("0.5", 4, "0.25")),
    "marwah_up_bound_0_5_d2_eps_0_25": float(marwah_bound("0.5", 2, "0.25")),
}

path = ROOT / "tests" / "fixtures" / "oracle_values.json"
path.write_text(json.dumps(out, indent=2) + "\n")
print(f"wrote {path}")
