#!/usr/bin/env python3
"""Regenerates tests/golden.hpp from mpmath at 50 significant digits.

Every constant below is computed by mpmath's own zeta/psi/stieltjes routines
or by interval bisection on them; none of it touches the C++ evaluators.
"""
import mpmath

mpmath.mp.dps = 50


def bisect(f, lo, hi, iters=200):
    lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def beta(a):
    a = mpmath.mpf(a)
    return bisect(lambda s: mpmath.zeta(s, a), mpmath.mpf('1e-12'), 1 - a * a * a)


def x0(a):
    a = mpmath.mpf(a)
    # e^{-x} h(a,x) = x e^{-ax} - (1 - e^{-x})
    g = lambda x: x * mpmath.exp(-a * x) - (1 - mpmath.exp(-x))
    hi = mpmath.mpf(1)
    while g(hi) > 0:
        hi *= 2
    return bisect(g, hi / 2 if hi > 1 else mpmath.mpf('1e-9'), hi)


def laurent(n, a):
    # coefficient of (s-1)^n in zeta(s,a) - 1/(s-1)
    return (-1) ** n * mpmath.stieltjes(n, a) / mpmath.factorial(n)


out = []
emit = lambda name, v: out.append(f"inline constexpr double {name} = {mpmath.nstr(v, 20, strip_zeros=False)};")

emit("kGamma_0p001", mpmath.gamma('0.001'))
emit("kGamma_0p3", mpmath.gamma('0.3'))
emit("kGamma_7p25", mpmath.gamma('7.25'))
emit("kGamma_33p3", mpmath.gamma('33.3'))
emit("kGamma_50", mpmath.gamma(50))
emit("kDigamma_0p001", mpmath.digamma('0.001'))
emit("kDigamma_0p25", mpmath.digamma('0.25'))
emit("kDigamma_0p1", mpmath.digamma('0.1'))
emit("kDigamma_7p5", mpmath.digamma('7.5'))
emit("kDigamma_45", mpmath.digamma(45))
emit("kZeta_0p5", mpmath.zeta('0.5'))
emit("kZeta_1p5", mpmath.zeta('1.5'))
emit("kZeta_0p9", mpmath.zeta('0.9'))
emit("kZeta_1p001", mpmath.zeta('1.001'))
emit("kZeta_7", mpmath.zeta(7))
emit("kHurwitz_3_0p25", mpmath.zeta(3, '0.25'))
emit("kHurwitz_0p5_0p25", mpmath.zeta('0.5', '0.25'))
emit("kHurwitz_0p3_1em6", mpmath.zeta('0.3', '1e-6'))
emit("kHurwitz_0p5_0p75", mpmath.zeta('0.5', '0.75'))
emit("kHurwitz_1p5_0p5", mpmath.zeta('1.5', '0.5'))
emit("kDZeta_0p5", mpmath.zeta('0.5', 1, 1))
emit("kDZeta_0p5_0p5", mpmath.zeta('0.5', '0.5', 1))
emit("kDZeta_0p99_0p25", mpmath.zeta('0.99', '0.25', 1))
emit("kKernelH_0p25_10", mpmath.exp(mpmath.mpf('7.5')) / (mpmath.exp(10) - 1) - mpmath.mpf('0.1'))
for a in ['0.1', '0.25', '0.45', '0.49']:
    emit("kX0_" + a.replace('.', 'p'), x0(a))
for a in ['0.25', '0.4999', '1e-4', '0.1', '0.05', '0.01']:
    emit("kBeta_" + a.replace('.', 'p').replace('-', 'm'), beta(a))
b25 = beta('0.25')
# implicit differentiation: beta' = -(d/da zeta)/(d/dsigma zeta), d/da zeta = -sigma*zeta(sigma+1,a)
emit("kBetaPrime_0p25", b25 * mpmath.zeta(b25 + 1, '0.25') / mpmath.zeta(b25, '0.25', 1))
emit("kL_chi4_0p5", mpmath.dirichlet('0.5', [0, 1, 0, -1]))
emit("kL_chi3_0p5", mpmath.dirichlet('0.5', [0, 1, -1]))
for a in ['0.01', '0.05', '0.1', '0.25', '0.5', '1']:
    vals = ", ".join(mpmath.nstr(laurent(n, mpmath.mpf(a)), 20, strip_zeros=False) for n in range(9))
    out.append(f"inline constexpr std::array<double, 9> kLaurent_{a.replace('.', 'p')} = {{{vals}}};")

print("// Generated by tests/oracles/make_golden.py (mpmath, 50 digits). Do not edit.")
print("#pragma once\n\n#include <array>\n\nnamespace golden {\n")
print("\n".join(out))
print("\n}  // namespace golden")
