"""High-precision reference values pinned in the resokit test suites.

Run with: python3 scripts/reference_values.py
Every constant printed here is computed with mpmath at 40 significant digits
and rounded to 17 for pasting into Rust tests.
"""
import mpmath as mp

mp.mp.dps = 40


def show(label, v):
    print(f"{label} = {mp.nstr(v, 17)}")


show("gamma(1/3)", mp.gamma(mp.mpf(1) / 3))
show("Ai(0) closed form", mp.gamma(mp.mpf(1) / 3) / (2 * mp.pi * mp.cbrt(3) ** (mp.mpf(1) / 2)))
show("Ai(0)", mp.airyai(0))
show("Ai'(0)", mp.airyai(0, 1))
for x in [-10, -7.5, -4.5, -2, -1, 0.5, 2, 3.3, 4.5, 7, 10]:
    x = mp.mpf(x)
    print("airy", mp.nstr(x, 5), [mp.nstr(v, 17) for v in (mp.airyai(x), mp.airybi(x), mp.airyai(x, 1), mp.airybi(x, 1))])
for x in [0.5, 1, 2.5, 7.3, 20, 50]:
    x = mp.mpf(x)
    for k in range(5):
        print("bessel", mp.nstr(x, 5), k,
              mp.nstr(mp.besselj(k, x), 17), mp.nstr(mp.bessely(k, x), 17),
              mp.nstr(mp.besseli(k, x), 17), mp.nstr(mp.besselk(k, x), 17))


def p_deg_deriv(n, x):
    return mp.diff(lambda nu: mp.legenp(nu, 0, x), n)


def h_deg_deriv(n, x):
    return mp.diff(lambda nu: mp.hermite(nu, x), n)


for n, x in [(0, 0.3), (1, 0.3), (3, 0.3), (3, -0.5), (6, 0.9), (2, 0.0)]:
    show(f"P_{{{n},1}}({x})", p_deg_deriv(n, mp.mpf(x)))
for n, x in [(0, 0.0), (1, 0.5), (2, 1.9), (3, 0.9), (3, 4.0), (2, 6.5)]:
    show(f"H_{{{n},1}}({x})", h_deg_deriv(n, mp.mpf(x)))
show("H_2.5(0.9)", mp.hermite(2.5, 0.9))
show("H_2.5(4.2)", mp.hermite(2.5, 4.2))
show("P_2.5(0.9)", mp.legenp(2.5, 0, 0.9))
show("G_0(1), base 0.5", mp.quad(lambda t: mp.exp(t * t), [0.5, 1]))
show("hyp1f1(-1.3,1.5,4)", mp.hyp1f1(-1.3, 1.5, 4))
