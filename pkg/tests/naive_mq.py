"""Independent brute-force evaluator for M_q, used as a test oracle.

Shares no code with the package. Coefficients are plain ``{exp: int}``
dicts, the relations are applied straight from the commutator form

    [t^a_g, t^b_d] = (q - q^-1) t^b_g t^a_d (theta(d > g) - theta(a > b))

plus the same-row / same-column q-commutations, redexes are always taken
rightmost first, and nothing is memoized.
"""

from itertools import permutations


def c_add(x, y):
    out = dict(x)
    for e, v in y.items():
        out[e] = out.get(e, 0) + v
        if out[e] == 0:
            del out[e]
    return out


def c_mul(x, y):
    out = {}
    for e1, v1 in x.items():
        for e2, v2 in y.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
    return {e: v for e, v in out.items() if v}


def p_add_term(poly, word, coeff):
    if not coeff:
        return
    cur = c_add(poly.get(word, {}), coeff)
    if cur:
        poly[word] = cur
    else:
        poly.pop(word, None)


def _swap_rule(x, y):
    """Rewrite x*y (with x > y) as a list of (word, coeff) from the raw relations."""
    (a, g), (b, d) = x, y
    if a == b:
        # t^a_d t^a_g = q t^a_g t^a_d for d < g  =>  x y = q^-1 y x
        return [((y, x), {-1: 1})]
    if g == d:
        # t^b_g t^a_g = q t^a_g t^b_g for b < a  =>  x y = q^-1 y x
        return [((y, x), {-1: 1})]
    theta = (1 if d > g else 0) - (1 if a > b else 0)
    out = [((y, x), {0: 1})]
    if theta:
        out.append((((b, g), (a, d)), {1: theta, -1: -theta}))
    return out


def naive_nf(poly):
    """Fully reduce ``{word: coeff}``; rightmost redex first, no caching."""
    todo = [(w, c) for w, c in poly.items()]
    done = {}
    while todo:
        w, c = todo.pop()
        pos = None
        for i in range(len(w) - 2, -1, -1):
            if w[i] > w[i + 1]:
                pos = i
                break
        if pos is None:
            p_add_term(done, w, c)
            continue
        for pair, k in _swap_rule(w[pos], w[pos + 1]):
            todo.append((w[:pos] + pair + w[pos + 2 :], c_mul(c, k)))
    return done


def sign_power(n):
    # (-q)^n as a coefficient dict
    return {n: -1 if n % 2 else 1}


def inv_count(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def naive_minor(K, L):
    K, L = sorted(K), sorted(L)
    m = len(K)
    poly = {}
    for sigma in permutations(range(m)):
        word = tuple((K[i], L[sigma[i]]) for i in range(m))
        p_add_term(poly, word, sign_power(inv_count(sigma)))
    return naive_nf(poly)


def naive_mul(p, r):
    prod = {}
    for w1, c1 in p.items():
        for w2, c2 in r.items():
            p_add_term(prod, w1 + w2, c_mul(c1, c2))
    return naive_nf(prod)


def from_ncpoly(p):
    """Convert a package NCPoly into the oracle's plain-dict form."""
    return {w: dict(c.items()) for w, c in p.items()}
