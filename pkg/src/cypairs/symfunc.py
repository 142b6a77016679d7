"""Finite-variable symmetric polynomials: the plethysm s_lambda[e_n] and the
determinant-multiplicity witness search.

The character of S^lambda(wedge^n V) for dim V = N is the plethysm s_lambda[e_n]
evaluated in N variables.  It is computed by expanding s_lambda over the
binomial(N, n) squarefree monomials of e_n, treated as formal letters in a fixed
lexicographic order: a semistandard tableau DP accumulates, letter by letter,
the exponent-vector distribution of the resulting polynomial (a numpy int64
array per DP state, indexed by a degree-graded slot table).  The symmetric
result is stored on dominant exponents only and converted to the Schur basis by
straightening: repeatedly subtract the Schur polynomial of the lex-greatest
dominant exponent, whose leading coefficient is 1, so no division ever happens
and every intermediate value is an exact integer.

The determinant power det^k = S^{(k^N)}V can appear in S^lambda(wedge^n V) only
for k = n*|lambda|/N; its multiplicity drives the witness search.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import comb

import numpy as np

from .partitions import check_partition, partitions_of, trim


class BudgetExceeded(Exception):
    """Requested plethysm is over the configured degree budget."""


def default_budget(N: int) -> int:
    """Default cap on the x-degree n*|lambda| of a plethysm computation."""
    return 20 if N <= 5 else 14


def _check_budget(lam, n, N, budget):
    if budget is None:
        budget = default_budget(N)
    degree = n * sum(lam)
    if degree > budget:
        raise BudgetExceeded(
            f"plethysm degree n*|lambda| = {degree} exceeds budget {budget}"
        )


@lru_cache(maxsize=None)
def _slots(N, d):
    """All length-N exponent vectors summing to d, plus an index lookup."""
    out = []

    def rec(prefix, rem, k):
        if k == 1:
            out.append(prefix + (rem,))
            return
        for v in range(rem + 1):
            rec(prefix + (v,), rem - v, k - 1)

    rec((), d, N)
    return out, {e: i for i, e in enumerate(out)}


@lru_cache(maxsize=None)
def _shift_map(N, d, v):
    """Slot index map for multiplying a degree-d polynomial by x^v."""
    src, _ = _slots(N, d)
    _, tgt = _slots(N, d + sum(v))
    return np.array(
        [tgt[tuple(a + b for a, b in zip(e, v))] for e in src], dtype=np.int64
    )


def _strips(mu, lam):
    """All mu' with mu <= mu' <= lam such that mu'/mu is a horizontal strip."""
    rows = len(lam)
    mu = tuple(mu) + (0,) * (rows - len(mu))
    out = []

    def rec(i, acc):
        if i == rows:
            out.append(tuple(x for x in acc if x))
            return
        lo = mu[i]
        hi = min(lam[i], acc[-1] if acc else lam[0])
        if i > 0:
            hi = min(hi, mu[i - 1])  # horizontal strip: mu'_{i} <= mu_{i-1}
        for v in range(hi, lo - 1, -1):
            rec(i + 1, acc + [v])

    rec(0, [])
    return out


def _monomial_table(lam, letters, N):
    """Dominant-exponent distribution of s_lam expanded over the given letters.

    The letters must be squarefree exponent vectors of one common degree.  DP
    states are subpartitions mu of lam (tableau shape after processing a prefix
    of the letters); values are exponent-indexed numpy arrays.
    """
    lam = trim(lam)
    M = len(letters)
    if len(lam) > M:
        return {}
    deg0 = sum(letters[0])
    state = {(): np.ones(1, dtype=np.int64)}
    for i, let in enumerate(letters):
        rem = M - i - 1
        new = {}
        for mu, arr in state.items():
            dmu = sum(mu)
            for mu2 in _strips(mu, lam):
                # prune states whose columns cannot be completed by the
                # remaining rem letters (each letter adds at most one cell
                # per column)
                ok = True
                for r in range(len(lam)):
                    need = lam[r + rem] if r + rem < len(lam) else 0
                    cur = mu2[r] if r < len(mu2) else 0
                    if cur < need:
                        ok = False
                        break
                if not ok:
                    continue
                size = sum(mu2) - dmu
                tgt = new.get(mu2)
                if tgt is None:
                    nslots = len(_slots(N, (dmu + size) * deg0)[0])
                    tgt = np.zeros(nslots, dtype=np.int64)
                    new[mu2] = tgt
                if size == 0:
                    tgt += arr
                else:
                    v = tuple(x * size for x in let)
                    np.add.at(tgt, _shift_map(N, dmu * deg0, v), arr)
        state = new
    arr = state.get(lam)
    if arr is None:
        return {}
    exps, _ = _slots(N, sum(lam) * deg0)
    return {
        e: c
        for e, c in zip(exps, arr.tolist())
        if c and all(e[i] >= e[i + 1] for i in range(N - 1))
    }


def _wedge_letters(n, N):
    """The monomials of e_n in N variables, lex ordered on sorted subsets."""
    return tuple(
        tuple(1 if j in s else 0 for j in range(N)) for s in combinations(range(N), n)
    )


def _wedge_monomial_table(lam, n, N):
    return _monomial_table(lam, _wedge_letters(n, N), N)


@lru_cache(maxsize=None)
def _kostka_row(alpha, N):
    """Dominant monomial expansion of the single Schur polynomial s_alpha."""
    letters = tuple(tuple(1 if j == i else 0 for j in range(N)) for i in range(N))
    return _monomial_table(alpha, letters, N)


def _straighten(table, N):
    """Convert a dominant monomial table to the Schur basis.

    Subtracts the Schur polynomial of the lex-greatest dominant exponent (its
    own coefficient there is 1 by Kostka unitriangularity) until the table is
    empty.  A negative leading coefficient would contradict Schur positivity
    and raises immediately.
    """
    table = dict(table)
    out = {}
    while table:
        alpha = max(table)
        c = table[alpha]
        if c < 0:
            raise AssertionError(f"negative Schur coefficient {c} at {alpha}")
        mu = trim(alpha)
        out[mu] = c
        for beta, k in _kostka_row(mu, N).items():
            t = table.get(beta, 0) - c * k
            if t:
                table[beta] = t
            else:
                table.pop(beta, None)
    return out


def plethysm_wedge(lam, n: int, N: int | None = None, budget: int | None = None):
    """Schur expansion of s_lam[e_n] in N variables (default N = 2n+1).

    Returns {mu: coefficient} with all coefficients positive; mu have at most
    N rows.  Raises BudgetExceeded when n*|lam| is over budget, never silently
    truncates.
    """
    lam = check_partition(lam)
    if N is None:
        N = 2 * n + 1
    if not (1 <= n <= N):
        raise ValueError("need 1 <= n <= N")
    _check_budget(lam, n, N, budget)
    return _straighten(_wedge_monomial_table(lam, n, N), N)


def _schur_coefficient(table, mu, N):
    """Coefficient of s_mu in the symmetric polynomial with dominant monomial
    table `table`, by Weyl character alternation: sum over w in S_N of
    sgn(w) * [x^(mu + rho - w rho)].  Avoids straightening the whole table."""
    rho = tuple(range(N - 1, -1, -1))
    total = 0
    for p in permutations(range(N)):
        beta = tuple(mu[i] + rho[i] - rho[p[i]] for i in range(N))
        if min(beta) < 0:
            continue
        coeff = table.get(tuple(sorted(beta, reverse=True)))
        if not coeff:
            continue
        inv = sum(1 for i in range(N) for j in range(i + 1, N) if p[i] > p[j])
        total += -coeff if inv % 2 else coeff
    return total


def determinant_multiplicity(lam, n: int, budget: int | None = None):
    """(k, multiplicity) of the determinant power det^k inside S^lam(wedge^n V).

    dim V = N = 2n+1.  Degree forces k = n*|lam|/N; when the division fails the
    multiplicity is 0 and k is None.  The multiplicity is read off the Schur
    expansion of the plethysm.
    """
    lam = check_partition(lam)
    N = 2 * n + 1
    total = n * sum(lam)
    if total % N:
        return None, 0
    k = total // N
    expansion = plethysm_wedge(lam, n, N, budget=budget)
    return k, expansion.get(trim((k,) * N), 0)


def find_witness(n: int, degree_bound: int, budget: int | None = None):
    """First lambda (graded lex, |lambda| <= degree_bound) whose plethysm
    s_lambda[e_n] contains a determinant power with multiplicity >= 2.

    Returns (lambda, k, multiplicity) or None when the bound is exhausted.
    Budget errors propagate.  The determinant coefficient is extracted from
    the monomial table by character alternation, which matches
    determinant_multiplicity everywhere (property-tested) but skips the full
    straightening.
    """
    if n < 2:
        raise ValueError("witness search needs n >= 2")
    N = 2 * n + 1
    M = comb(N, n)
    for w in range(1, degree_bound + 1):
        if (n * w) % N:
            continue  # no determinant power can occur in this degree
        k = n * w // N
        mu = (k,) * N
        for lam in partitions_of(w, max_rows=M):
            _check_budget(lam, n, N, budget)
            table = _wedge_monomial_table(lam, n, N)
            m = _schur_coefficient(table, mu, N)
            if m >= 2:
                return lam, k, m
    return None


def dimension_gap(n: int):
    """(flag_dim, group_dim, gap_holds) for the full flag of wedge^n V.

    N = binomial(2n+1, n); the flag variety F(1, 2, ..., N-1) of wedge^n V has
    dimension N(N-1)/2, to be compared with dim GL(V) = (2n+1)^2.  A strict gap
    (group smaller than flag) means the GL(V)-orbit of any flag is a proper
    subvariety.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    N = comb(2 * n + 1, n)
    flag_dim = N * (N - 1) // 2
    group_dim = (2 * n + 1) ** 2
    return flag_dim, group_dim, group_dim < flag_dim


def schur_expansion_json(expansion, N: int) -> dict:
    """JSON form: {"nvars": N, "terms": [...]} sorted by graded lex on mu."""
    terms = sorted(expansion.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
    return {
        "nvars": N,
        "terms": [{"mu": list(mu), "coeff": c} for mu, c in terms],
    }
