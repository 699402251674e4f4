"""Filtrations of Jacquet modules of induced Weil representations for the
dual pair GO(V_m) x GSp(W_n), dim V_m = m even, dim W_n = 2n.

Fix a polarization V_m = X_r + V_an + X_r^* (r the Witt index bound) and
W_n = Y_n + Y_n^*.  The normalized Jacquet module along the orthogonal
parabolic P(X_t) carries an invariant filtration with quotients indexed by
k = 0..min(t, n); along the symplectic parabolic Q(Y_k) the indices are
t = 0..min(k, r).  Each successive quotient is induced from a Schwartz space
S(Isom(.,.)) tensored with a smaller induced Weil representation, twisted by
explicit half-integral exponents.

Orthogonal side (quotient k):
    e0 = -1/4*(m-2t)*k - 1/2*t*n + 1/4*m*t - 1/4*t*(t+1)   on |lambda_V|
    e1 = n - 1/2*m + 1/2*t - 1/2*(k-1)                     on |det a1|, k < t
    f0 = -1/2*k*n + 1/4*k*(k-1)                            on |lambda_W|
with raw (pre-absorption) values e2 = n - (k-1)/2 on |det a2|, f1 = -e2 on
|det b| and f0' = k*n/2 - k*(k-1)/4 on |lambda_W|; absorbing |det|^{e2}
into the regular representation on S(Isom) replaces f0' by f0 = f0' - k*e2.

Symplectic side (quotient t):
    e0 = -1/2*t*(n-k) - 1/4*m*k + 1/2*k*n - 1/4*k*(k-1)    on |lambda_W|
    e1 = 1/2*m - n + 1/2*k - 1/2*(t+1)                     on |det b1|, t < k
    f0 = -1/4*m*t + 1/4*t*(t+1)                            on |lambda_V|

At equal indices k = t both sides satisfy e0 = f0, and the pair (e0, f0) may
be replaced by (e0 - f0, 0) = (0, 0) by retwisting the induced Weil
representation; all exponents are exact rationals with denominator dividing 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .repdata import DomainError

Q = Fraction


@dataclass(frozen=True)
class OrthogonalParabolic:
    """Jacquet functor along P(X_t) of GO(V_m)."""

    t: int


@dataclass(frozen=True)
class SymplecticParabolic:
    """Jacquet functor along Q(Y_k) of GSp(W_n)."""

    k: int


@dataclass(frozen=True)
class FiltrationSpec:
    m: int
    n: int
    r: int
    side: OrthogonalParabolic | SymplecticParabolic

    def __post_init__(self):
        if self.m <= 0 or self.m % 2:
            raise DomainError("m must be even and positive")
        if self.n <= 0:
            raise DomainError("n must be positive")
        if not 0 <= self.r <= self.m // 2:
            raise DomainError("Witt index bound r must satisfy 0 <= r <= m/2")
        if isinstance(self.side, OrthogonalParabolic):
            if not 0 <= self.side.t <= self.r:
                raise DomainError("orthogonal side needs 0 <= t <= r")
        elif isinstance(self.side, SymplecticParabolic):
            if not 0 <= self.side.k <= self.n:
                raise DomainError("symplectic side needs 0 <= k <= n")
        else:
            raise DomainError("side must name a parabolic")


@dataclass(frozen=True)
class FiltrationQuotient:
    """One successive quotient of the filtration.

    index is the running index (k on the orthogonal side, t on the
    symplectic side); e1 is None at the equal-index bottom piece, where the
    corresponding block of the Levi is empty.  Raw pre-absorption exponents
    are populated on the orthogonal side only.  inner_weil = (m', 2n') gives
    the dimensions of the inner induced Weil representation.
    """

    index: int
    levi: str
    schwartz: str
    inner_weil: tuple[int, int]
    e0: Fraction | None
    e1: Fraction | None
    f0: Fraction | None
    e2: Fraction | None = None
    f1: Fraction | None = None
    f0_raw: Fraction | None = None
    det_twists: str = ""


def orthogonal_exponents(m: int, n: int, t: int, k: int) -> dict:
    e0 = -Q(m - 2 * t, 4) * k - Q(t * n, 2) + Q(m * t, 4) - Q(t * (t + 1), 4)
    e1 = n - Q(m, 2) + Q(t, 2) - Q(k - 1, 2)
    e2 = n - Q(k - 1, 2)
    f0_raw = Q(k * n, 2) - Q(k * (k - 1), 4)
    f0 = -Q(k * n, 2) + Q(k * (k - 1), 4)
    return {"e0": e0, "e1": e1, "e2": e2, "f1": -e2, "f0_raw": f0_raw, "f0": f0}


def symplectic_exponents(m: int, n: int, t: int, k: int) -> dict:
    e0 = -Q(t * (n - k), 2) - Q(m * k, 4) + Q(k * n, 2) - Q(k * (k - 1), 4)
    e1 = Q(m, 2) - n + Q(k, 2) - Q(t + 1, 2)
    f0 = -Q(m * t, 4) + Q(t * (t + 1), 4)
    return {"e0": e0, "e1": e1, "f0": f0}


def filtration(spec: FiltrationSpec, isometry: bool = False) -> list[FiltrationQuotient]:
    """Successive quotients, top piece first.

    isometry=True drops the similitude exponents (e0, f0), which do not occur
    for the plain isometry dual pair; the determinant exponents remain.
    """
    m, n, r = spec.m, spec.n, spec.r
    out = []
    if isinstance(spec.side, OrthogonalParabolic):
        t = spec.side.t
        for k in range(0, min(t, n) + 1):
            ex = orthogonal_exponents(m, n, t, k)
            out.append(FiltrationQuotient(
                index=k,
                levi=f"P(X_{t - k},X_{t}) x Q(Y_{k})",
                schwartz=f"S(Isom(X'_{k}, Y_{k}))",
                inner_weil=(m - 2 * t, 2 * (n - k)),
                e0=None if isometry else ex["e0"],
                e1=None if k == t else ex["e1"],
                f0=None if isometry else ex["f0"],
                e2=ex["e2"],
                f1=ex["f1"],
                f0_raw=None if isometry else ex["f0_raw"],
                det_twists="chi_V(det a2)",
            ))
    else:
        k = spec.side.k
        for t in range(0, min(k, r) + 1):
            ex = symplectic_exponents(m, n, t, k)
            out.append(FiltrationQuotient(
                index=t,
                levi=f"P(X_{t}) x Q(Y_{k - t},Y_{k})",
                schwartz=f"S(Isom(Y'_{t}, X_{t}))",
                inner_weil=(m - 2 * t, 2 * (n - k)),
                e0=None if isometry else ex["e0"],
                e1=None if t == k else ex["e1"],
                f0=None if isometry else ex["f0"],
                det_twists="chi_V(det b1)*chi_V(det b2)",
            ))
    return out


def absorption_identity(m: int, n: int, t: int, k: int) -> bool:
    """f0 = f0' - k*e2 on the orthogonal side; an identity in (m, n, t, k)."""
    ex = orthogonal_exponents(m, n, t, k)
    return ex["f0_raw"] - k * ex["e2"] == ex["f0"]


def equal_index_identity(m: int, n: int, j: int) -> bool:
    """e0 = f0 at equal indices k = t = j, on both sides."""
    orth = orthogonal_exponents(m, n, j, j)
    symp = symplectic_exponents(m, n, j, j)
    return orth["e0"] == orth["f0"] and symp["e0"] == symp["f0"]


# ---------------------------------------------------------------------------
# specializations used as oracles


def _q(spec: FiltrationSpec) -> list[FiltrationQuotient]:
    return filtration(spec)


def specialize_check(which: str) -> bool:
    """Compare the general filtration against the four hand-transcribed
    low-rank cases (split rank-4 space against GSp4; rank-6 split space
    against the three GSp4 parabolic directions)."""
    if which == "P9.1":
        # GO(V_4) side, t = 2, against GSp(W_2): three steps
        qs = _q(FiltrationSpec(4, 2, 2, OrthogonalParabolic(2)))
        return (
            len(qs) == 3
            # top piece C = S(F^x), |det_X|^{3/2} |lambda|^{-3/2}
            and (qs[0].e0, qs[0].e1, qs[0].inner_weil) == (Q(-3, 2), Q(3, 2), (0, 4))
            # middle piece B: |a| |lambda|^{-3/2} and |nu_W'|^{-1}
            and (qs[1].e0, qs[1].e1, qs[1].f0) == (Q(-3, 2), Q(1), Q(-1))
            # bottom piece A = I_PY(S(F^x) (x) S(Isom(X,Y))): pure translation
            and qs[2].e0 == qs[2].f0 and qs[2].e1 is None
            and qs[2].levi.endswith("Q(Y_2)") and qs[2].inner_weil == (0, 0)
        )
    if which == "P10.1":
        # GO(V_6) side, t = 1: 0 -> A -> R_PJ -> B -> 0
        qs = _q(FiltrationSpec(6, 2, 3, OrthogonalParabolic(1)))
        return (
            len(qs) == 2
            # B = the smaller induced Weil representation, untwisted
            and (qs[0].e0, qs[0].e1, qs[0].f0) == (0, 0, 0)
            and qs[0].inner_weil == (4, 4)
            # A = I_QZ(S(F^x) (x) inner Weil), equal-index pure translation
            and qs[1].e0 == qs[1].f0 and qs[1].levi.endswith("Q(Y_1)")
            and qs[1].inner_weil == (4, 2)
        )
    if which == "P10.2":
        # GSp(W_2) side, k = 1: 0 -> A' -> R_QZ -> B' -> 0
        qs = _q(FiltrationSpec(6, 2, 3, SymplecticParabolic(1)))
        return (
            len(qs) == 2
            # B' = |det_Z| |lambda_W|^{-1/2} (x) inner Weil on (6, W')
            and (qs[0].e0, qs[0].e1, qs[0].inner_weil) == (Q(-1, 2), Q(1), (6, 2))
            # A' = I_PJ(S(F^x) (x) inner Weil), equal-index pure translation
            and qs[1].e0 == qs[1].f0 and qs[1].levi.startswith("P(X_1)")
            and qs[1].inner_weil == (4, 2)
        )
    if which == "P10.3":
        # GSp(W_2) side, k = 2: three steps A'', B'', C''
        qs = _q(FiltrationSpec(6, 2, 3, SymplecticParabolic(2)))
        return (
            len(qs) == 3
            # A'' = S(F^x) (x) |det_Y|^{3/2} |lambda_W|^{-3/2}
            and (qs[0].e0, qs[0].e1, qs[0].inner_weil) == (Q(-3, 2), Q(3, 2), (6, 0))
            # B'' = I over B x P(J) of S(F^x x F^x), diagonal acts by |a|
            and (qs[1].e1, qs[1].f0, qs[1].inner_weil) == (Q(1), Q(-1), (4, 0))
            # C'' = I_QE(S(F^x) (x) S(GL_2)), equal-index pure translation
            and qs[2].e0 == qs[2].f0
            and qs[2].schwartz == "S(Isom(Y'_2, X_2))"
            and qs[2].levi.startswith("P(X_2)") and qs[2].inner_weil == (2, 0)
        )
    raise DomainError(f"unknown specialization {which!r}")


SPECIALIZATIONS = ("P9.1", "P10.1", "P10.2", "P10.3")
