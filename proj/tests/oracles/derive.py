"""Independent reference values for the frozen test constants.

Everything here is computed from first principles with Python integers and
fractions (product formulas, divisor sums, brute force over permutations),
without touching the C++ library. Run: python3 tests/oracles/derive.py
"""
from fractions import Fraction as Fr
from itertools import permutations, product
from math import factorial

N = 12


def sigma(r, n):
    return sum(d**r for d in range(1, n + 1) if n % d == 0)


def mul(a, b):
    out = [0] * N
    for i, x in enumerate(a):
        if x:
            for j in range(N - i):
                out[i + j] += x * b[j]
    return out


def delta_over_q():
    # prod (1 - q^n)^24, i.e. Delta / q
    p = [1] + [0] * (N - 1)
    for n in range(1, N):
        for _ in range(24):
            p = [p[i] - (p[i - n] if i >= n else 0) for i in range(N)]
    return p


def inverse(a):
    out = [Fr(0)] * N
    out[0] = Fr(1) / a[0]
    for n in range(1, N):
        out[n] = -sum(a[k] * out[n - k] for k in range(1, n + 1)) / a[0]
    return out


E2 = [1] + [-24 * sigma(1, n) for n in range(1, N)]
E4 = [1] + [240 * sigma(3, n) for n in range(1, N)]
E6 = [1] + [-504 * sigma(5, n) for n in range(1, N)]
dE2hat = [n * sigma(1, n) for n in range(N)]  # D(-E2/24)
tau = [0] + delta_over_q()[: N - 1]

print("tau(1..11):", tau[1:])
inv_d = inverse(delta_over_q())  # q * (1/Delta)
print("k3(0) from q^-1:", [str(x) for x in inv_d[:4]])
print("k3(1) from q^0:", [str(x) for x in mul(dE2hat[1:], inv_d)[:4]])
k3_2 = mul(mul(dE2hat, dE2hat)[1:], inv_d)  # q^{2-1}
print("k3(2) from q^1:", [str(x) for x in k3_2[:4]])
print("abelian(2) from q^1:", [n * n * sigma(1, n) for n in range(1, 5)])
print("F_F from q^-1:", [str(-2 * x) for x in mul(mul(E4, E6), inv_d)[:4]])
# q^{1/2} E4 / eta^12 = E4 / prod (1 - q^n)^12
p12 = [1] + [0] * (N - 1)
for n in range(1, N):
    for _ in range(12):
        p12 = [p12[i] - (p12[i - n] if i >= n else 0) for i in range(N)]
print("F_C from q^0:", [str(x) for x in mul(E4, inverse(p12))[:4]])

# genus-2 mirror amplitude: (10 E2^3 - 6 E2 E4 - 4 E6) / 103680 / 12
e2c = mul(mul(E2, E2), E2)
e2e4 = mul(E2, E4)
f2 = [Fr(10 * a - 6 * b - 4 * c, 103680 * 12) for a, b, c in zip(e2c, e2e4, E6)]
print("mirror_F(2) q^0..q^5:", [str(x) for x in f2[:6]])


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def inverse_perm(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def transitive(gens, d):
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for g in gens:
            if g[x] not in seen:
                seen.add(g[x])
                stack.append(g[x])
    return len(seen) == d


def hurwitz(d, g):
    perms = list(permutations(range(d)))
    transp = []
    for i in range(d):
        for j in range(i + 1, d):
            t = list(range(d))
            t[i], t[j] = j, i
            transp.append(tuple(t))
    ident = tuple(range(d))
    count = 0
    for a in perms:
        for b in perms:
            comm = compose(compose(a, b), compose(inverse_perm(a), inverse_perm(b)))
            for ts in product(transp, repeat=2 * g - 2):
                p = comm
                for t in ts:
                    p = compose(p, t)
                if p == ident and transitive([a, b, *ts], d):
                    count += 1
    return count, Fr(count, factorial(d))


for d, g in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]:
    print(f"hurwitz({d},{g}):", hurwitz(d, g))

# r_2(n) and r_4(n) by brute force
r2 = [sum(1 for x in range(-4, 5) for y in range(-4, 5) if x * x + y * y == n) for n in range(11)]
print("r2(0..10):", r2)
