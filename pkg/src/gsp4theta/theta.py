"""Explicit local theta lifts between GSp4(F) and GSO(2,2), GSO(4,0),
GSO(3,3), with preimage lookups, the Witt-tower dichotomy and the central
character law.

Inputs and outputs are canonical values from repdata; every lift result
carries a provenance tag naming the row of the three lift tables it came
from (T1 = from GSp4, T2 = from GSO(2,2), T3 = from GSO(4,0); a ".1dim"
suffix marks one-dimensional GL2 data handled through the Langlands-quotient
encoding).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .charlattice import Character
from .repdata import (
    GL2Langlands,
    GL2Principal,
    GL2Rep,
    GL2Steinberg,
    GL2Supercuspidal,
    GL4Supercuspidal,
    GL4TwSt,
    GL4St,
    GSO22Rep,
    GSO33Rep,
    GSO40Rep,
    GSp4JB,
    GSp4JPY,
    GSp4JQZ,
    GSp4PiGen,
    GSp4PiNg,
    GSp4Rep,
    GSp4SC,
    GSp4SpKlingen,
    GSp4SpSiegel,
    GSp4StKlingen,
    GSp4StSiegel,
    GSp4TwSt,
    ValidationError,
    gl4_induced_p,
    gl4_jb0,
    gl4_jp,
    gl4_jq,
    gso22,
    gso33,
    gso40,
    jb,
    jl,
    jl_inverse,
    jpy,
    jqz,
    langlands_quotient,
    pi_gen,
    pi_ng,
    sc_gsp4,
    st_siegel,
    steinberg,
)

HALF = Fraction(1, 2)


class TowerTag(enum.Enum):
    TOWER_40 = "GSO(4,0)"
    TOWER_33 = "GSO(3,3)"


@dataclass(frozen=True)
class ThetaResult:
    """Small theta lift; value None encodes the vanishing lift."""

    value: GSp4Rep | GSO33Rep | None
    provenance: str

    @property
    def is_zero(self):
        return self.value is None


def _lift22_name(sigma: GSO22Rep) -> str:
    a, b = sigma.orbit().tau1, sigma.orbit().tau2
    return f"theta22[{a.render()}|{b.render()}]"


def _lift40_name(sigma: GSO40Rep) -> str:
    a, b = sigma.orbit().tau1, sigma.orbit().tau2
    return f"theta40[{a.render()}|{b.render()}]"


# ---------------------------------------------------------------------------
# lifts to GSp4


def theta_40_to_gsp4(sigma: GSO40Rep) -> ThetaResult:
    """Theta lift from GSO(4,0); never zero, lands in the non-generic
    tempered class, invariant under the component swap."""
    if sigma.tau1 == sigma.tau2:
        return ThetaResult(pi_ng(jl(sigma.tau1)), "T3.a")
    pi = sc_gsp4(_lift40_name(sigma), sigma.central_character(), sigma.orbit())
    return ThetaResult(pi, "T3.b")


def theta_22_to_gsp4(sigma: GSO22Rep) -> ThetaResult:
    """Theta lift from GSO(2,2); never zero, invariant under the swap.

    Dispatch: equal discrete series; two Steinberg twists; Steinberg twist
    against a supercuspidal; two distinct supercuspidals; one discrete-series
    factor; no discrete-series factor.
    """
    t1, t2 = sigma.tau1, sigma.tau2
    ds1, ds2 = t1.is_discrete_series(), t2.is_discrete_series()

    if ds1 and ds2:
        if t1 == t2:
            return ThetaResult(pi_gen(t1), "T2.a")
        if isinstance(t1, GL2Steinberg) and isinstance(t2, GL2Steinberg):
            # chi1 != chi2 with chi1^2 = chi2^2: the ratio is quadratic
            eta = t1.chi / t2.chi
            return ThetaResult(st_siegel(steinberg(eta), t2.chi), "T2.d")
        if isinstance(t1, GL2Steinberg) or isinstance(t2, GL2Steinberg):
            sc, st = (t2, t1) if isinstance(t1, GL2Steinberg) else (t1, t2)
            chi = st.chi
            return ThetaResult(st_siegel(sc.twist_by(chi.inv()), chi), "T2.c")
        pi = sc_gsp4(_lift22_name(sigma), sigma.central_character(), sigma.orbit())
        return ThetaResult(pi, "T2.b")

    if ds1 != ds2:
        tau, q = (t1, t2) if ds1 else (t2, t1)
        lo, hi = q.pair_low_high()
        tag = "T2.e"
        if isinstance(q, GL2Langlands) and q.is_one_dimensional():
            tag += ".1dim"
        return ThetaResult(jpy(tau.twist_by(lo.inv()), lo), tag)

    # both factors non-discrete-series
    def spread(rho):
        lo, hi = rho.pair_low_high()
        return hi.abs_exponent() - lo.abs_exponent()

    if spread(t1) < spread(t2):
        t1, t2 = t2, t1
    lo1, hi1 = t1.pair_low_high()
    lo2, hi2 = t2.pair_low_high()
    tag = "T2.f"
    if any(isinstance(t, GL2Langlands) and t.is_one_dimensional()
           for t in (t1, t2)):
        tag += ".1dim"
    return ThetaResult(jb(hi2 / lo1, lo2 / lo1, lo1), tag)


# ---------------------------------------------------------------------------
# lift to GSO(3,3)


def theta_gsp4_to_33(pi: GSp4Rep) -> ThetaResult:
    """Theta lift to GSO(3,3); zero exactly on the non-generic tempered class."""
    omega = pi.central_character()
    nu = omega.context.norm

    if isinstance(pi, GSp4SC):
        if pi.origin is None:
            gl4 = GL4Supercuspidal(f"theta33[{pi.name}]", omega ** 2)
            return ThetaResult(gso33(gl4, omega), "T1.SC(a)")
        if isinstance(pi.origin, GSO22Rep):
            gl4 = gl4_induced_p(pi.origin.tau1, pi.origin.tau2)
            return ThetaResult(gso33(gl4, omega), "T1.SC(b)")
        return ThetaResult(None, "T1.SC(c)")

    if isinstance(pi, GSp4StKlingen):
        return ThetaResult(gso33(GL4St(pi.tau), omega), "T1.DS(a)")

    if isinstance(pi, GSp4StSiegel):
        gl4 = gl4_induced_p(pi.tau.twist_by(pi.mu), steinberg(pi.mu))
        return ThetaResult(gso33(gl4, omega), "T1.DS(b)")

    if isinstance(pi, GSp4TwSt):
        return ThetaResult(gso33(GL4TwSt(pi.chi), omega), "T1.DS(c)")

    if isinstance(pi, GSp4PiGen):
        return ThetaResult(gso33(gl4_jp(pi.tau, pi.tau), omega), "T1.NDS(b)")

    if isinstance(pi, GSp4PiNg):
        return ThetaResult(None, "T1.NDS(c)")

    if isinstance(pi, GSp4JQZ):
        gl4 = gl4_jp(pi.tau.twist_by(pi.chi), pi.tau)
        return ThetaResult(gso33(gl4, omega), "T1.NDS(a)")

    if isinstance(pi, GSp4SpKlingen):
        tau = pi.tau.twist_by(nu(-HALF))
        gl4 = gl4_jp(tau.twist_by(pi.chi * nu(1)), tau)
        return ThetaResult(gso33(gl4, omega), "T1.NDS(a)")

    if isinstance(pi, GSp4JPY):
        wt = pi.tau.central_character()
        gl4 = gl4_jq(wt * pi.chi, pi.tau.twist_by(pi.chi), pi.chi)
        return ThetaResult(gso33(gl4, omega), "T1.NDS(d)")

    if isinstance(pi, GSp4SpSiegel):
        tau, chi = pi.tau.twist_by(nu(HALF)), pi.mu * nu(-HALF)
        gl4 = gl4_jq(nu(1) * chi, tau.twist_by(chi), chi)
        return ThetaResult(gso33(gl4, omega), "T1.NDS(d)")

    if isinstance(pi, GSp4JB):
        gl4 = gl4_jb0(pi.chi * pi.chi1 * pi.chi2, pi.chi * pi.chi1,
                      pi.chi * pi.chi2, pi.chi)
        return ThetaResult(gso33(gl4, omega), "T1.NDS(e)")

    raise TypeError(f"not a GSp4 value: {pi!r}")


# ---------------------------------------------------------------------------
# preimages


def theta_40_preimage(pi: GSp4Rep) -> GSO40Rep | None:
    """Inverse of the GSO(4,0) lift (swap-orbit representative)."""
    if isinstance(pi, GSp4PiNg):
        d = jl_inverse(pi.tau)
        return gso40(d, d)
    if isinstance(pi, GSp4SC) and isinstance(pi.origin, GSO40Rep):
        return pi.origin
    return None


def theta_22_preimage(pi: GSp4Rep) -> GSO22Rep | None:
    """Inverse of the GSO(2,2) lift (swap-orbit representative)."""
    nu = pi.central_character().context.norm
    if isinstance(pi, GSp4PiGen):
        return gso22(pi.tau, pi.tau)
    if isinstance(pi, GSp4SC) and isinstance(pi.origin, GSO22Rep):
        return pi.origin
    if isinstance(pi, GSp4StSiegel):
        if isinstance(pi.tau, GL2Steinberg):
            return gso22(steinberg(pi.tau.chi * pi.mu), steinberg(pi.mu))
        return gso22(pi.tau.twist_by(pi.mu), steinberg(pi.mu))
    if isinstance(pi, GSp4JPY):
        wt = pi.tau.central_character()
        return gso22(pi.tau.twist_by(pi.chi),
                     langlands_quotient(pi.chi, wt * pi.chi))
    if isinstance(pi, GSp4SpSiegel):
        tau, chi = pi.tau.twist_by(nu(HALF)), pi.mu * nu(-HALF)
        return gso22(tau.twist_by(chi),
                     langlands_quotient(chi, tau.central_character() * chi))
    if isinstance(pi, GSp4JB):
        tau1 = langlands_quotient(pi.chi, pi.chi * pi.chi1 * pi.chi2)
        tau2 = langlands_quotient(pi.chi * pi.chi2, pi.chi * pi.chi1)
        return gso22(tau1, tau2)
    return None


# ---------------------------------------------------------------------------
# dichotomy and the central character law


def dichotomy(pi: GSp4Rep) -> TowerTag:
    """Each irreducible GSp4 representation participates in exactly one of
    the two towers; asserted directly from the computed lifts."""
    ng = pi.is_tempered_ng()
    lift33 = not theta_gsp4_to_33(pi).is_zero
    part40 = theta_40_preimage(pi) is not None
    if part40 == lift33:
        raise AssertionError(f"dichotomy violated at {pi}")
    if ng != part40:
        raise AssertionError(f"tower tag inconsistent at {pi}")
    return TowerTag.TOWER_40 if ng else TowerTag.TOWER_33


def _central_character(rep) -> Character:
    if isinstance(rep, GSO33Rep):
        return rep.mu
    return rep.central_character()


def central_character_law(source, lift) -> bool:
    """omega_lift = chi_V^(dim W/2) * omega_source; the quadratic spaces in
    play all have trivial discriminant, so the twist factor is trivial."""
    return _central_character(lift) == _central_character(source)


def theta_laws_hold(pi: GSp4Rep) -> bool:
    """Zero-locus, dichotomy and central-character checks for one element."""
    res = theta_gsp4_to_33(pi)
    if res.is_zero != pi.is_tempered_ng():
        return False
    if not res.is_zero and not central_character_law(pi, res.value):
        return False
    dichotomy(pi)
    return True
