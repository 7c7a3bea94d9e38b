"""Independent high-precision oracle for the frozen constants in the C++ tests.

Uses mpmath (50 digits) only: gamma, binomial, and mpmath's own bilateral
hypergeometric summation (bihyper). Run with `python3 frozen_values.py`.
"""
import mpmath as mp

mp.mp.dps = 50


def show(label, v):
    if isinstance(v, mp.mpc):
        print(f"{label:48s} {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")
    else:
        print(f"{label:48s} {mp.nstr(v, 20)}")


def binom(x, y):
    return mp.gamma(x + 1) / (mp.gamma(y + 1) * mp.gamma(x - y + 1))


def gauss_rhs(a, b, c, d):
    num = [c, d, 1 - a, 1 - b, c + d - a - b - 1]
    den = [c - a, d - a, c - b, d - b]
    v = mp.mpf(1)
    for t in num:
        v *= mp.gamma(t)
    for t in den:
        v /= mp.gamma(t)
    return v


m = mp.mpf
show("gamma(0.5)", mp.gamma(m("0.5")))
show("log gamma(0.5)", mp.log(mp.gamma(m("0.5"))))
show("log |gamma(-0.5)|", mp.log(abs(mp.gamma(m("-0.5")))))
show("1/gamma(0.5)", 1 / mp.gamma(m("0.5")))
show("binom(2.5, 0.7)", binom(m("2.5"), m("0.7")))
show("binom(1, 0.5)", binom(m(1), m("0.5")))
show("binom(30, 15)", mp.binomial(30, 15))
show("pi^2/4", mp.pi ** 2 / 4)
show("gauss rhs (0.25,0.35,1.2,1.6)", gauss_rhs(m("0.25"), m("0.35"), m("1.2"), m("1.6")))
show("bihyper [0.25,0.35;1.2,1.6;1]",
     mp.bihyper([m("0.25"), m("0.35")], [m("1.2"), m("1.6")], 1))
show("bihyper [0.3;2.9;1]", mp.bihyper([m("0.3")], [m("2.9")], 1))
show("bihyper [0.2;1.1;i]", mp.bihyper([m("0.2")], [m("1.1")], mp.j))
show("bihyper [0.4,-0.3;1.7,2.2;1]",
     mp.bihyper([m("0.4"), m("-0.3")], [m("1.7"), m("2.2")], 1))
show("2^2.5", mp.power(2, m("2.5")))
show("(1+e^{i pi/3})^1", 1 + mp.expjpi(m(1) / 3))
show("(1+e^{i 0.8})^1.7", mp.power(1 + mp.expj(m("0.8")), m("1.7")))


def one_h_one_closed(a, b, u):
    # sum_k C(x, y+k) w^(y+k) = (1+w)^x with y = b-1, x = b-1-a, w = -u
    y = b - 1
    x = b - 1 - a
    w = -u
    return mp.power(1 + w, x) / (binom(x, y) * mp.power(w, y))


show("1H1 closed [0.2;1.1;i]", one_h_one_closed(m("0.2"), m("1.1"), mp.j))
show("1H1 closed [-0.7;0.4;e^{2i}]", one_h_one_closed(m("-0.7"), m("0.4"), mp.expj(2)))
show("direct 1H1 [0.3;2.9;1] partial", mp.nsum(lambda n: mp.rf(m("0.3"), n) / mp.rf(m("2.9"), n), [-mp.inf, mp.inf]))
