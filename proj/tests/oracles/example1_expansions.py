"""Independent sympy oracle for the y^2 dx perturbation of x^2 + y^2.

Produces the eps-expansion of exp(eps*x)*(y^2 + 2x/eps - 2/eps^2) and the
classical Godbillon-Vey forms eta_i = i! [eps^i] dF_eps / (d/deps F_eps).
Output was frozen into tests/unit/test_godbillon.cpp and the acceptance suite.
"""
import sympy as sp

x, y, e = sp.symbols("x y eps")
closed = sp.exp(e * x) * (y**2 + 2 * x / e - 2 / e**2)
ser = sp.series(closed, e, 0, 9).removeO()
ser = sp.expand(ser)
print("F_eps coefficients (x,y-dependent part):")
for n in range(0, 8):
    c = sp.expand(ser.coeff(e, n))
    print(n, c)

# truncated first integral through eps^8, drop the -2/eps^2 constant
Fe = sum(sp.expand(ser.coeff(e, n)) * e**n for n in range(0, 9))
dFx = sp.diff(Fe, x)
dFy = sp.diff(Fe, y)
dFe = sp.diff(Fe, e)
for comp, name in ((dFx, "dx"), (dFy, "dy")):
    q = sp.series(comp / dFe, e, 0, 3).removeO()
    for i in range(3):
        print(f"eta_{i} {name}:", sp.factor(sp.factorial(i) * q.coeff(e, i)))
