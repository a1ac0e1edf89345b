"""Independent dimension oracles: GL hook-content products, symplectic and
orthogonal tableau counts, and a generic Weyl dimension formula over stored
positive-root tables."""

from fractions import Fraction
from functools import cache
from importlib import resources

from . import dualpair
from .tableaux import enumerate_ssyt, pad


def dim_gl(n, weight):
    """Dimension of the GL_n irrep with the given weakly decreasing n-tuple."""
    weight = tuple(weight)
    if len(weight) != n or any(weight[i] < weight[i + 1] for i in range(n - 1)):
        raise ValueError("weight must be a weakly decreasing n-tuple")
    result = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            result *= Fraction(weight[i] - weight[j] + j - i, j - i)
    assert result.denominator == 1
    return int(result)


def dim_gl_rational(k, plus, minus):
    """Dimension of the GL_k irrep labeled by a pair of partitions: highest
    weight (plus, 0, ..., 0, -reversed(minus))."""
    plus, minus = tuple(plus), tuple(minus)
    if len(plus) + len(minus) > k:
        raise ValueError("pair does not fit in rank k")
    full = plus + (0,) * (k - len(plus) - len(minus)) + tuple(-x for x in reversed(minus))
    return dim_gl(k, full)


def dim_o(k, sigma):
    """Dimension of the O_k irrep labeled by sigma, as the number of
    orthogonal tableaux: U in SSYT(sigma, k) whose first two columns contain
    at most i entries <= i, for every i <= k."""
    sigma = tuple(sigma)
    from .tableaux import conjugate

    conj = conjugate(sigma)
    c1 = conj[0] if len(conj) >= 1 else 0
    c2 = conj[1] if len(conj) >= 2 else 0
    if c1 + c2 > k:
        raise ValueError("sigma is not an O_k label")
    count = 0
    for u in enumerate_ssyt(sigma, k):
        cols = u.first_two_columns()
        if all(sum(1 for x in cols if x <= i) <= i for i in range(1, k + 1)):
            count += 1
    return count


def dim_sp(two_k, sigma):
    """Dimension of the Sp_{2k} irrep with highest weight sigma, as the number
    of symplectic tableaux: U in SSYT(sigma, 2k) whose first column contains
    at most i entries <= 2i, for every i <= k."""
    if two_k % 2 != 0:
        raise ValueError("rank must be even")
    k = two_k // 2
    sigma = tuple(sigma)
    if len(sigma) > k:
        raise ValueError("sigma is not an Sp_2k highest weight")
    count = 0
    for u in enumerate_ssyt(sigma, 2 * k):
        col = u.column(1)
        if all(sum(1 for x in col if x <= 2 * i) <= i for i in range(1, k + 1)):
            count += 1
    return count


@cache
def root_system(name):
    """Load a positive-root table: (lengths, roots) with roots in the
    simple-root basis."""
    text = resources.files("dualdeg.data").joinpath("root_systems.txt").read_text()
    systems = {}
    current = None
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *rest = line.split()
        if kind == "system":
            current = rest[0]
            systems[current] = {"lengths": None, "roots": []}
        elif kind == "lengths":
            systems[current]["lengths"] = tuple(int(x) for x in rest)
        elif kind == "root":
            systems[current]["roots"].append(tuple(int(x) for x in rest))
        else:
            raise ValueError(f"bad line in root data: {line!r}")
    if name not in systems:
        raise ValueError(f"unknown root system {name!r}")
    data = systems[name]
    return data["lengths"], tuple(data["roots"])


def dim_weyl(name, weight):
    """Weyl dimension formula for the named system, weight in fundamental
    coordinates (nonnegative integers)."""
    lengths, roots = root_system(name)
    weight = tuple(weight)
    if len(weight) != len(lengths):
        raise ValueError(f"{name} weight needs {len(lengths)} coordinates")
    if any(x < 0 for x in weight):
        raise ValueError("weight must be dominant (nonnegative coordinates)")
    result = Fraction(1)
    for c in roots:
        num = sum((weight[i] + 1) * c[i] * lengths[i] for i in range(len(c)))
        den = sum(c[i] * lengths[i] for i in range(len(c)))
        result *= Fraction(num, den)
    assert result.denominator == 1
    return int(result)


def dim_F_lambda(setting, sigma):
    """Dimension of the K-irrep with the highest weight attached to sigma."""
    if dualpair.sigma_admissible(setting, sigma) != dualpair.IN_SIGMA:
        raise ValueError("sigma is not an admissible nonzero label")
    sigma = dualpair.normalize_sigma(setting, sigma)
    if setting.family == dualpair.UPQ:
        plus, minus = sigma
        return dim_gl(setting.p, pad(minus, setting.p)) * dim_gl(
            setting.q, pad(plus, setting.q)
        )
    return dim_gl(setting.n, pad(sigma, setting.n))
