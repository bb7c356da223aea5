"""High-precision reference values for the g=8, a=3, p=1/2 box.

For p = 1/2 the quantization function factors as
    sin(1.5k) * (2k cos(1.5k) + 8 sin(1.5k)),
so the non-node roots solve tan(1.5k) = -k/4. Those are isolated here with
mpmath bisection at 40 digits; nothing in this script touches the C++ code.
"""
from mpmath import mp, mpf, sin, cos, pi, sqrt, findroot

mp.dps = 40
a = mpf(3)
half = a / 2


def nonnode(k):
    return 2 * k * cos(half * k) + 8 * sin(half * k)


def main():
    roots = []
    for j in range(1, 4):
        lo = 2 * (j - 1) * pi / 3 + mpf("1e-30")
        hi = 2 * j * pi / 3 - mpf("1e-30")
        roots.append(findroot(nonnode, (lo, hi), solver="bisect"))
    for j, r in enumerate(roots):
        print(f"non-node root {j + 1}: {mp.nstr(r, 20)}")
    print("F(1.0) =", mp.nstr(sin(3) + 8 * sin(mpf(1.5)) ** 2, 20))

    k1 = roots[0]
    # symmetric ground state: A = -B, normalization over both halves
    left = half / 2 - sin(2 * k1 * half) / (4 * k1)
    amp = 1 / sqrt(2 * left)
    print("A(k1) normalized =", mp.nstr(amp, 20))
    print("psi1(pa) =", mp.nstr(amp * sin(k1 * half), 20))

    # first-order perturbation reference for p = 0.3, a = 3
    p = mpf("0.3")
    for n in range(1, 4):
        print(f"sin^2(n pi p) n={n}:", mp.nstr(sin(n * pi * p) ** 2, 20))


if __name__ == "__main__":
    main()
