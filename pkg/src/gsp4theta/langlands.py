"""L-parameters for GSp4(F) as symbolic Weil-Deligne data.

A parameter is a multiset of pieces (core (x) character) |x| S_r together
with a similitude character; cores are the trivial character, an opaque
2-dimensional irreducible attached to a supercuspidal token, the opaque
3-dimensional adjoint of such (whose 1-dimensional content is exactly the
token's self-twist group), or an opaque 4-dimensional irreducible.  The data
is Frobenius-semisimple: monodromy lives entirely in the S_r tags, and all
comparisons are multiset comparisons.

The adjoint of a parameter is computed by Sym^2(phi) (x) sim(phi)^{-1} using
the Clebsch-Gordan rules for SL2 and  Sym^2(rho) = Ad(rho) (x) det(rho)  for
2-dimensional cores; a pole of L(s, rho |x| S_r) at s = 1 happens exactly
when rho contains the unramified character |-|^{-(r+1)/2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charlattice import Character
from .repdata import (
    DomainError,
    GL2Langlands,
    GL2Principal,
    GL2Rep,
    GL2Steinberg,
    GL2Supercuspidal,
    GL4InducedP,
    GL4JB0,
    GL4JP,
    GL4JQ,
    GL4Rep,
    GL4Sp,
    GL4St,
    GL4Supercuspidal,
    GL4TwSt,
    GSO22Rep,
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
    SCToken,
    UnsupportedError,
    jl,
    packet_has_generic,
    packet_of,
)

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# pieces


@dataclass(frozen=True)
class CoreOne:
    def dim(self):
        return 1

    def rank_key(self):
        return (0, "")


@dataclass(frozen=True)
class CoreIrr2:
    token: SCToken

    def dim(self):
        return 2

    def rank_key(self):
        return (1, self.token.name)


@dataclass(frozen=True)
class CoreAd3:
    token: SCToken

    def dim(self):
        return 3

    def rank_key(self):
        return (2, self.token.name)


@dataclass(frozen=True)
class CoreIrr4:
    """Opaque 4-dimensional irreducible with declared similitude character;
    supports det/sim bookkeeping only."""

    name: str
    sim: Character

    def dim(self):
        return 4

    def rank_key(self):
        return (3, self.name)


@dataclass(frozen=True)
class LPiece:
    core: CoreOne | CoreIrr2 | CoreAd3 | CoreIrr4
    twist: Character
    r: int

    def dim(self):
        return self.core.dim() * self.r

    def det(self) -> Character:
        """Determinant character of the piece."""
        c = self.core
        if isinstance(c, CoreOne):
            core_det, d = self.twist.context.trivial(), 1
        elif isinstance(c, CoreIrr2):
            core_det, d = c.token.omega, 2
        elif isinstance(c, CoreAd3):
            core_det, d = self.twist.context.trivial(), 3
        else:
            core_det, d = c.sim ** 2, 4
        # det(core (x) chi (x) S_r) = (det core)^r * chi^(d*r); det S_r = 1
        return core_det ** self.r * self.twist ** (d * self.r)

    def sort_key(self):
        return (self.core.rank_key(), self.twist.sort_key(), self.r)

    def render(self):
        c = self.core
        if isinstance(c, CoreOne):
            base = str(self.twist)
        elif isinstance(c, CoreIrr2):
            base = f"phi[{c.token.name}]" + ("" if self.twist.is_trivial()
                                             else f"*{self.twist}")
        elif isinstance(c, CoreAd3):
            base = f"Ad[{c.token.name}]" + ("" if self.twist.is_trivial()
                                            else f"*{self.twist}")
        else:
            base = f"phi4[{c.name}]" + ("" if self.twist.is_trivial()
                                        else f"*{self.twist}")
        return base if self.r == 1 else f"({base})xS{self.r}"

    def __str__(self):
        return self.render()


def piece(core, twist: Character, r: int = 1) -> LPiece:
    if r < 1:
        raise DomainError("S_r needs r >= 1")
    if isinstance(core, (CoreIrr2, CoreAd3)):
        # the core absorbs its self-twist group
        twist = min((twist * k for k in core.token.self_twists),
                    key=Character.sort_key)
    return LPiece(core, twist, r)


def dual_piece(p: LPiece) -> LPiece:
    """Contragredient piece (S_r is self-dual)."""
    c = p.core
    if isinstance(c, CoreOne):
        return piece(c, p.twist.inv(), p.r)
    if isinstance(c, CoreIrr2):
        return piece(c, p.twist.inv() * c.token.omega.inv(), p.r)
    if isinstance(c, CoreAd3):
        return piece(c, p.twist.inv(), p.r)
    return piece(c, p.twist.inv() * c.sim.inv(), p.r)


def twist_piece(p: LPiece, chi: Character) -> LPiece:
    return piece(p.core, p.twist * chi, p.r)


@dataclass(frozen=True)
class LParameter:
    """Multiset of pieces plus (for group parameters) a similitude character."""

    pieces: tuple[LPiece, ...]
    sim: Character | None = None

    def dim(self):
        return sum(p.dim() for p in self.pieces)

    def det(self) -> Character:
        out = self.pieces[0].det()
        for p in self.pieces[1:]:
            out = out * p.det()
        return out

    def multiset(self):
        return tuple(sorted(self.pieces, key=LPiece.sort_key))

    def render(self):
        body = " + ".join(p.render() for p in self.multiset())
        if self.sim is None:
            return body
        return f"{body} ; sim = {self.sim}"

    def __str__(self):
        return self.render()


def lparameter(pieces, sim: Character | None = None) -> LParameter:
    return LParameter(tuple(sorted(pieces, key=LPiece.sort_key)), sim)


def is_symplectic_closed(phi: LParameter) -> bool:
    """Multiset invariance under rho -> rho^vee (x) sim."""
    if phi.sim is None:
        raise DomainError("closure test needs a similitude character")
    image = [twist_piece(dual_piece(p), phi.sim) for p in phi.pieces]
    return sorted(image, key=LPiece.sort_key) == list(phi.multiset())


def is_selfdual(phi: LParameter) -> bool:
    image = [dual_piece(p) for p in phi.pieces]
    return sorted(image, key=LPiece.sort_key) == list(phi.multiset())


def is_discrete_series_parameter(phi: LParameter) -> bool:
    """Multiplicity-free with every piece fixed by rho -> rho^vee (x) sim;
    on parameters of GSp4 representations this detects the discrete series."""
    ms = phi.multiset()
    if len(set(ms)) != len(ms):
        return False
    return all(twist_piece(dual_piece(p), phi.sim) == p for p in phi.pieces)


# ---------------------------------------------------------------------------
# parameters of GL2, GL4 and GSp4 representations


def lparam_gl2(rho: GL2Rep) -> list[LPiece]:
    """2-dimensional Frobenius-semisimple parameter of a GL2 representation."""
    if isinstance(rho, GL2Supercuspidal):
        return [piece(CoreIrr2(rho.token), rho.twist)]
    if isinstance(rho, GL2Steinberg):
        return [piece(CoreOne(), rho.chi, 2)]
    if isinstance(rho, (GL2Principal, GL2Langlands)):
        a, b = rho.pair_low_high()
        return [piece(CoreOne(), a), piece(CoreOne(), b)]
    raise TypeError(f"not a GL2 value: {rho!r}")


def gl2_parameter_det(rho: GL2Rep) -> Character:
    return rho.central_character()


def lparam_gl4(Pi: GL4Rep) -> list[LPiece]:
    """Semisimplified parameter of a GL4 representation (multiset of pieces)."""
    nu = Pi.central_character().context.norm
    if isinstance(Pi, GL4Supercuspidal):
        return [piece(CoreIrr4(Pi.name, Pi.omega), Pi.omega.context.trivial())]
    if isinstance(Pi, (GL4InducedP, GL4JP)):
        return lparam_gl2(Pi.tau1) + lparam_gl2(Pi.tau2)
    if isinstance(Pi, GL4St):
        (p,) = lparam_gl2(Pi.tau)
        return [piece(p.core, p.twist, 2)]
    if isinstance(Pi, GL4Sp):
        up = Pi.tau.twist_by(nu(HALF))
        dn = Pi.tau.twist_by(nu(-HALF))
        return lparam_gl2(up) + lparam_gl2(dn)
    if isinstance(Pi, GL4TwSt):
        return [piece(CoreOne(), Pi.chi, 4)]
    if isinstance(Pi, GL4JQ):
        return ([piece(CoreOne(), Pi.chi1)] + lparam_gl2(Pi.tau)
                + [piece(CoreOne(), Pi.chi2)])
    if isinstance(Pi, GL4JB0):
        return [piece(CoreOne(), m) for m in Pi.mus]
    raise TypeError(f"not a GL4 value: {Pi!r}")


def lparam_gsp4(pi: GSp4Rep) -> LParameter:
    """4-dimensional parameter with similitude character; sim equals the
    central character of pi."""
    omega = pi.central_character()
    nu = omega.context.norm

    if isinstance(pi, GSp4SC):
        if pi.origin is None:
            return lparameter(
                [piece(CoreIrr4(pi.name, omega), omega.context.trivial())], omega)
        if isinstance(pi.origin, GSO22Rep):
            ps = lparam_gl2(pi.origin.tau1) + lparam_gl2(pi.origin.tau2)
        else:
            ps = lparam_gl2(jl(pi.origin.tau1)) + lparam_gl2(jl(pi.origin.tau2))
        return lparameter(ps, omega)

    if isinstance(pi, GSp4StKlingen):
        (p,) = lparam_gl2(pi.tau)
        return lparameter([piece(p.core, p.twist, 2)], omega)

    if isinstance(pi, GSp4StSiegel):
        ps = lparam_gl2(pi.tau.twist_by(pi.mu))
        ps.append(piece(CoreOne(), pi.mu, 2))
        return lparameter(ps, omega)

    if isinstance(pi, GSp4TwSt):
        return lparameter([piece(CoreOne(), pi.chi, 4)], omega)

    if isinstance(pi, (GSp4PiGen, GSp4PiNg)):
        ps = lparam_gl2(pi.tau) + lparam_gl2(pi.tau)
        return lparameter(ps, omega)

    if isinstance(pi, GSp4SpKlingen):
        chi, tau = pi.chi * nu(1), pi.tau.twist_by(nu(-HALF))
        return lparameter(lparam_gl2(tau) + lparam_gl2(tau.twist_by(chi)), omega)

    if isinstance(pi, GSp4JQZ):
        return lparameter(
            lparam_gl2(pi.tau) + lparam_gl2(pi.tau.twist_by(pi.chi)), omega)

    if isinstance(pi, GSp4SpSiegel):
        tau, chi = pi.tau.twist_by(nu(HALF)), pi.mu * nu(-HALF)
        ps = ([piece(CoreOne(), chi)] + lparam_gl2(tau.twist_by(chi))
              + [piece(CoreOne(), chi * tau.central_character())])
        return lparameter(ps, omega)

    if isinstance(pi, GSp4JPY):
        ps = ([piece(CoreOne(), pi.chi)]
              + lparam_gl2(pi.tau.twist_by(pi.chi))
              + [piece(CoreOne(), pi.chi * pi.tau.central_character())])
        return lparameter(ps, omega)

    if isinstance(pi, GSp4JB):
        cs = (pi.chi * pi.chi1 * pi.chi2, pi.chi,
              pi.chi * pi.chi1, pi.chi * pi.chi2)
        return lparameter([piece(CoreOne(), c) for c in cs], omega)

    raise TypeError(f"not a GSp4 value: {pi!r}")


# ---------------------------------------------------------------------------
# adjoint parameter and the pole test


def _sym2_sl2(r: int) -> list[int]:
    return list(range(2 * r - 1, 0, -4))


def _lam2_sl2(r: int) -> list[int]:
    return list(range(2 * r - 3, 0, -4))


def _tensor_sl2(a: int, b: int) -> list[int]:
    return list(range(a + b - 1, abs(a - b), -2))


def _sym2_piece(p: LPiece) -> list[LPiece]:
    c = p.core
    if isinstance(c, CoreOne):
        return [piece(c, p.twist ** 2, s) for s in _sym2_sl2(p.r)]
    if isinstance(c, CoreIrr2):
        det = c.token.omega * p.twist ** 2
        out = [piece(CoreAd3(c.token), det, s) for s in _sym2_sl2(p.r)]
        out += [piece(CoreOne(), det, s) for s in _lam2_sl2(p.r)]
        return out
    raise UnsupportedError("adjoint needs 1- or 2-dimensional cores")


def _tensor_pieces(p: LPiece, q: LPiece) -> list[LPiece]:
    rs = _tensor_sl2(p.r, q.r)
    cp, cq = p.core, q.core
    tw = p.twist * q.twist
    if isinstance(cp, CoreOne) and isinstance(cq, CoreOne):
        return [piece(CoreOne(), tw, s) for s in rs]
    if isinstance(cp, CoreOne) and isinstance(cq, CoreIrr2):
        return [piece(cq, tw, s) for s in rs]
    if isinstance(cp, CoreIrr2) and isinstance(cq, CoreOne):
        return [piece(cp, tw, s) for s in rs]
    if isinstance(cp, CoreIrr2) and isinstance(cq, CoreIrr2):
        if cp.token != cq.token:
            raise UnsupportedError(
                "tensor of distinct supercuspidal cores is outside the model")
        out = []
        for s in rs:
            out.append(piece(CoreAd3(cp.token), cp.token.omega * tw, s))
            out.append(piece(CoreOne(), cp.token.omega * tw, s))
        return out
    raise UnsupportedError("adjoint needs 1- or 2-dimensional cores")


def adjoint(phi: LParameter) -> LParameter:
    """Ad o phi = Sym^2(phi) (x) sim(phi)^{-1}; 10-dimensional, no similitude.

    Refused for parameters with opaque 4-dimensional cores or two distinct
    supercuspidal cores (supercuspidal representations)."""
    if phi.sim is None:
        raise DomainError("adjoint needs a similitude character")
    if any(isinstance(p.core, CoreIrr4) for p in phi.pieces):
        raise UnsupportedError("adjoint of an opaque 4-dimensional core")
    out: list[LPiece] = []
    ps = list(phi.pieces)
    for p in ps:
        out.extend(_sym2_piece(p))
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            out.extend(_tensor_pieces(ps[i], ps[j]))
    inv = phi.sim.inv()
    return lparameter([twist_piece(p, inv) for p in out], None)


def has_pole_at_one(adphi: LParameter) -> bool:
    """Pole of L(s, adphi) at s = 1: some constituent character of some piece
    rho |x| S_r equals |-|^{-(r+1)/2}."""
    for p in adphi.pieces:
        target_exp = Fraction(-(p.r + 1), 2)
        if isinstance(p.core, CoreOne):
            ctx = p.twist.context
            if p.twist == ctx.norm(target_exp):
                return True
        elif isinstance(p.core, CoreAd3):
            ctx = p.twist.context
            target = ctx.norm(target_exp)
            if any(k * p.twist == target for k in p.core.token.self_twists):
                return True
        # 2- and 4-dimensional cores contain no characters
    return False


def generic_iff_holomorphic(pi: GSp4Rep) -> tuple[bool, bool]:
    """(the L-packet of pi has a generic member,
        L(s, Ad o phi_pi) is holomorphic at s = 1); the two agree."""
    if isinstance(pi, GSp4SC):
        raise UnsupportedError("packet structure of supercuspidals is not modeled")
    has_generic = packet_has_generic(packet_of(pi), pi)
    holomorphic = not has_pole_at_one(adjoint(lparam_gsp4(pi)))
    return (has_generic, holomorphic)


# ---------------------------------------------------------------------------
# Satake transfer


@dataclass(frozen=True)
class SatakeClass:
    """Semisimple class diag(nu*t1*t2, nu*t1, nu*t2, nu) in GSp4(C), given by
    unramified characters (t1, t2, nu)."""

    t1: Character
    t2: Character
    nu: Character

    def __post_init__(self):
        for c in (self.t1, self.t2, self.nu):
            if not c.is_unramified():
                raise DomainError("Satake data must be unramified")


def iota(s: SatakeClass) -> tuple[tuple[Character, ...], Character]:
    """Image in GL4(C) x GL1(C): the four diagonal entries plus similitude."""
    entries = (s.nu * s.t1 * s.t2, s.nu * s.t1, s.nu * s.t2, s.nu)
    sim = s.nu ** 2 * s.t1 * s.t2
    return (tuple(sorted(entries, key=Character.sort_key)), sim)


# ---------------------------------------------------------------------------
# transfer oracles (route a representation through the theta lifts and
# compare parameters on both sides)


def _piece_multiset(pieces) -> tuple:
    return tuple(sorted(pieces, key=LPiece.sort_key))


def check_parameter_compat(sigma: GSO22Rep) -> bool:
    """Lift sigma to GSp4 and on to GSO(3,3) = GL4 x GL1; the parameter of
    the GL4 component must be phi_tau1 + phi_tau2 with similitude equal to
    the central character."""
    from .theta import theta_22_to_gsp4, theta_gsp4_to_33

    pi = theta_22_to_gsp4(sigma).value
    res = theta_gsp4_to_33(pi)
    if res.is_zero:
        return False
    lift = res.value
    lhs = _piece_multiset(lparam_gl4(lift.gl4))
    rhs = _piece_multiset(lparam_gl2(sigma.tau1) + lparam_gl2(sigma.tau2))
    return lhs == rhs and lift.mu == pi.central_character()


def check_unramified_transfer(chi1: Character, chi2: Character,
                              chi: Character) -> bool:
    """The unramified constituent of I_B(chi1, chi2; chi) lifts to the
    unramified representation of GSO(3,3) with Satake class iota(s)."""
    from .repdata import jb
    from .theta import theta_gsp4_to_33

    for c in (chi1, chi2, chi):
        if not c.is_unramified():
            raise DomainError("unramified transfer needs unramified characters")
    pi = jb(chi1, chi2, chi)  # the spherical constituent, in Langlands form
    res = theta_gsp4_to_33(pi)
    if res.is_zero:
        return False
    lift = res.value
    got = sorted(lparam_gl4(lift.gl4), key=LPiece.sort_key)
    if any(not isinstance(p.core, CoreOne) or p.r != 1 for p in got):
        return False
    entries, sim = iota(SatakeClass(chi1, chi2, chi))
    want = sorted((piece(CoreOne(), c) for c in entries), key=LPiece.sort_key)
    return got == want and lift.mu == sim
