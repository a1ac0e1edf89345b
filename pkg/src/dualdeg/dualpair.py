"""The three dual-pair settings, admissibility, highest weights, and Q_k(sigma)."""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .tableaux import (
    Tableau,
    binomial,
    check_partition,
    conjugate,
    determinant,
    enumerate_ssyt,
    pad,
)

# Family tags. The first three are the dual-pair settings; the rest are the
# additional Hermitian types that only carry diagram/Hilbert-series data.
UPQ = "upq"
MP = "mp"
OSTAR = "ostar"
SO_EVEN = "so-even"
SO_ODD = "so-odd"
E6 = "e6"
E7 = "e7"

DUAL_PAIR_FAMILIES = (UPQ, MP, OSTAR)
ALL_FAMILIES = (UPQ, MP, OSTAR, SO_EVEN, SO_ODD, E6, E7)

# sigma_admissible results
NOT_IN_HHAT = "not-in-hhat"
IN_HHAT_NOT_SIGMA = "in-hhat-not-sigma"
IN_SIGMA = "in-sigma"


@dataclass(frozen=True)
class Setting:
    """One Hermitian family with its parameters and the dual-pair rank k."""

    family: str
    k: int = 0
    p: int = 0
    q: int = 0
    n: int = 0

    def __post_init__(self):
        if self.family not in ALL_FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == UPQ and (self.p < 1 or self.q < 1):
            raise ValueError("upq needs p, q >= 1")
        if self.family in (MP, OSTAR, SO_EVEN, SO_ODD) and self.n < 1:
            raise ValueError(f"{self.family} needs n >= 1")
        if self.k < 0:
            raise ValueError("k must be >= 0")


def upq(p, q, k):
    return Setting(UPQ, k=k, p=p, q=q)


def mp(n, k):
    return Setting(MP, k=k, n=n)


def ostar(n, k):
    return Setting(OSTAR, k=k, n=n)


def real_rank(setting):
    """The real rank r of the family."""
    f = setting.family
    if f == UPQ:
        return min(setting.p, setting.q)
    if f == MP:
        return setting.n
    if f == OSTAR:
        return setting.n // 2
    if f in (SO_EVEN, SO_ODD):
        return 2
    if f == E6:
        return 2
    return 3  # E7


def free_threshold(setting):
    """The threshold s beyond which every module in the family is free."""
    f = setting.family
    if f == UPQ:
        return setting.p + setting.q - 1
    if f == MP:
        return 2 * setting.n - 1
    if f == OSTAR:
        return setting.n - 1
    raise ValueError(f"free threshold undefined for family {f!r}")


def normalize_sigma(setting, sigma):
    """Validate sigma: a pair of partitions for upq, else a single partition."""
    if setting.family == UPQ:
        plus, minus = sigma
        return (check_partition(plus) if plus else (), check_partition(minus) if minus else ())
    if setting.family in (MP, OSTAR):
        return check_partition(sigma) if sigma else ()
    raise ValueError(f"sigma labels only exist for dual-pair families, not {setting.family!r}")


def sigma_admissible(setting, sigma):
    """Classify sigma against the label set of H(k) and the nonzero-module set."""
    sigma = normalize_sigma(setting, sigma)
    k = setting.k
    if setting.family == UPQ:
        plus, minus = sigma
        in_hhat = len(plus) + len(minus) <= k
        in_big = len(plus) <= setting.q and len(minus) <= setting.p
    elif setting.family == MP:
        conj = conjugate(sigma)
        c1 = conj[0] if len(conj) >= 1 else 0
        c2 = conj[1] if len(conj) >= 2 else 0
        in_hhat = c1 + c2 <= k
        in_big = len(sigma) <= setting.n
    else:  # OSTAR
        in_hhat = len(sigma) <= k
        in_big = len(sigma) <= setting.n
    if not in_hhat:
        return NOT_IN_HHAT
    return IN_SIGMA if in_big else IN_HHAT_NOT_SIGMA


def highest_weight(setting, sigma):
    """The highest weight labeling the module attached to sigma.

    For upq the result is a pair of blocks of lengths p and q; for mp a single
    block of half-integers (Fractions); for ostar a single integer block.
    """
    if sigma_admissible(setting, sigma) != IN_SIGMA:
        raise ValueError("sigma is not an admissible nonzero label")
    sigma = normalize_sigma(setting, sigma)
    k = setting.k
    if setting.family == UPQ:
        plus, minus = sigma
        left = tuple(-x - k for x in reversed(pad(minus, setting.p)))
        right = pad(plus, setting.q)
        return (left, right)
    if setting.family == MP:
        shift = Fraction(k, 2)
        return tuple(-x - shift for x in reversed(pad(sigma, setting.n)))
    return tuple(-x - k for x in reversed(pad(sigma, setting.n)))


def enumerate_T(setting, sigma):
    """The base tableau set attached to sigma: a list of tableaux, or of
    (T_plus, T_minus) pairs for upq, empty if sigma is not a nonzero label."""
    if sigma_admissible(setting, sigma) != IN_SIGMA:
        return []
    sigma = normalize_sigma(setting, sigma)
    if setting.family == UPQ:
        plus, minus = sigma
        return list(
            itertools.product(
                enumerate_ssyt(plus, setting.q), enumerate_ssyt(minus, setting.p)
            )
        )
    return list(enumerate_ssyt(sigma, setting.n))


def alpha(setting, T, i):
    """The count of small initial-column entries entering the i-th constraint."""
    k = setting.k
    if setting.family == UPQ:
        t_plus, t_minus = T
        return sum(1 for x in t_plus.column(1) if x < setting.q - k + i) + sum(
            1 for y in t_minus.column(1) if y < setting.p - k + i
        )
    if setting.family == MP:
        return sum(1 for x in T.first_two_columns() if x < setting.n - k + i)
    return sum(1 for x in T.column(1) if x < setting.n - 1 - 2 * k + 2 * i)


def in_Q_definition(setting, sigma, T):
    """Membership in Q_k(sigma) straight from the defining constraints
    alpha_i(T) < i for k - r < i <= k."""
    k = setting.k
    r = real_rank(setting)
    for i in range(max(1, k - r + 1), k + 1):
        if alpha(setting, T, i) >= i:
            return False
    return True


def _jth_smallest(values, j):
    """The j-th smallest element (1-based) of an iterable of integers."""
    return sorted(values)[j - 1]


def _upq_criteria(p, q, k, sigma_big, t_big, t_small):
    """Criterion kernel for upq assuming the first block has the smaller rank:
    p <= q, t_big is the tableau with entries bounded by q."""
    bar_big_col = [x + (k - q) for x in t_big.column(1)]
    bar_small_col = [y + (k - p) for y in t_small.column(1)]
    if bar_small_col and bar_small_col[0] < 1:
        return False
    complement = sorted(set(range(1, k + 1)) - set(bar_small_col))
    for j in range(max(1, k - p + 1), len(sigma_big) + 1):
        if bar_big_col[j - 1] < complement[j - 1]:
            return False
    return True


def in_Q_criteria(setting, sigma, T):
    """Membership in Q_k(sigma) via the explicit case-by-case criterion."""
    sigma = normalize_sigma(setting, sigma)
    k = setting.k
    if setting.family == UPQ:
        plus, minus = sigma
        t_plus, t_minus = T
        if setting.p <= setting.q:
            return _upq_criteria(setting.p, setting.q, k, plus, t_plus, t_minus)
        return _upq_criteria(setting.q, setting.p, k, minus, t_minus, t_plus)
    if setting.family == MP:
        n = setting.n
        if sigma and T.entry(1, 1) < n - k + 1:
            return False
        interval = range(n - k + 1, n + 1)
        leftover = sorted(set(interval) - T.first_column())
        conj = conjugate(sigma)
        c2 = conj[1] if len(conj) >= 2 else 0
        for j in range(1, c2 + 1):
            if T.entry(j, 2) < leftover[j - 1]:
                return False
        return True
    # ostar
    n, ell = setting.n, len(sigma)
    return all(T.entry(j, 1) >= n + 2 * (j - k) - 1 for j in range(1, ell + 1))


def enumerate_Q(setting, sigma):
    """All elements of Q_k(sigma), in the base enumeration order."""
    return [T for T in enumerate_T(setting, sigma) if in_Q_definition(setting, sigma, T)]


def count_Q_determinant(setting, sigma):
    """#Q_k(sigma) via the family-specific nonintersecting-path determinant."""
    if sigma_admissible(setting, sigma) != IN_SIGMA:
        raise ValueError("sigma is not an admissible nonzero label")
    sigma = normalize_sigma(setting, sigma)
    k = setting.k
    if setting.family == UPQ:
        plus, minus = sigma
        p, q = setting.p, setting.q
        if p > q:
            p, q = q, p
            plus, minus = minus, plus
        r, big = p, q
        minus1 = minus[0] if minus else 0
        # the weakly decreasing k-tuple: plus parts, zeros, negated reversed minus
        full = list(plus) + [0] * (k - len(plus) - len(minus)) + [-x for x in reversed(minus)]
        mat = []
        for i in range(1, k + 1):
            row = []
            for j in range(1, k + 1):
                c = 0 if j <= k - r else minus1
                d = -1 + (big if j <= k - r else min(k, r))
                e = full[i - 1] - i + j + c
                row.append(binomial(e + d, e))
            mat.append(row)
        return determinant(mat)
    if setting.family == MP:
        n = setting.n
        conj = conjugate(sigma)
        c1 = conj[0] if len(conj) >= 1 else 0
        c2 = conj[1] if len(conj) >= 2 else 0
        interval = list(range(n - k + 1, n + 1))
        total = 0
        for comb in itertools.combinations(range(max(1, n - k + 1), n + 1), c1):
            leftover = sorted(set(interval) - set(comb))
            mat = []
            for i in range(1, c2 + 1):
                row = []
                for j in range(1, c2 + 1):
                    a_j = max(comb[j - 1], leftover[j - 1])
                    e = sigma[i - 1] - i + j - 1
                    row.append(binomial(e + n - a_j, e))
                mat.append(row)
            total += determinant(mat)
        return total
    # ostar
    n = setting.n
    full = pad(sigma, k)
    mat = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            a_j = max(1, n + 2 * (j - k) - 1)
            e = full[i - 1] - i + j
            row.append(binomial(e + n - a_j, e))
        mat.append(row)
    return determinant(mat)


def q_collapse_check(setting, sigma):
    """Check the boundary collapses of #Q_k(sigma).

    For k <= r it must equal the dimension of the H(k)-irrep labeled by sigma;
    for k >= s, Q_k(sigma) is the whole base tableau set and its size is the
    dimension of the K-irrep with the attached highest weight.
    """
    from . import repdims

    if sigma_admissible(setting, sigma) != IN_SIGMA:
        raise ValueError("sigma is not an admissible nonzero label")
    k, r, s = setting.k, real_rank(setting), free_threshold(setting)
    q_list = enumerate_Q(setting, sigma)
    report = {"k": k, "r": r, "s": s, "q_count": len(q_list)}
    if k <= r:
        sig = normalize_sigma(setting, sigma)
        if setting.family == UPQ:
            expected = repdims.dim_gl_rational(k, sig[0], sig[1])
        elif setting.family == MP:
            expected = repdims.dim_o(k, sig)
        else:
            expected = repdims.dim_sp(2 * k, sig)
        report.update(regime="k<=r", expected=expected, ok=len(q_list) == expected)
    elif k >= s:
        full = enumerate_T(setting, sigma)
        expected = repdims.dim_F_lambda(setting, sigma)
        report.update(
            regime="k>=s",
            expected=expected,
            ok=q_list == full and len(q_list) == expected,
        )
    else:
        report.update(regime="interpolation range, no collapse asserted", ok=True)
    return report
