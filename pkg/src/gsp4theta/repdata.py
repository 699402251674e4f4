"""Symbolic data model for representations of GL2(F), D^x, GL4(F), GSp4(F)
and the orthogonal similitude groups GSO(2,2), GSO(4,0), GSO(3,3).

Supercuspidals are opaque tokens carrying a central character and the finite
group of quadratic self-twists (the chi with tau (x) chi ~ tau); everything
else is built from characters.  All values are immutable and canonical:
construct through the factory functions, which reduce supercuspidal twists
modulo the self-twist group, sort unordered pairs, store Langlands data in
the quotient (dominant) arrangement, and resolve Weyl-group ties by the fixed
character order.  Equality of canonical values is representation equivalence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .charlattice import Character, SymbolContext

HALF = Fraction(1, 2)


class ValidationError(ValueError):
    """Constructor data violates an invariant of the variant."""


class DomainError(ValueError):
    """Operation applied outside its domain."""


class UnsupportedError(ValueError):
    """Datum is outside the modeled fragment."""


# ---------------------------------------------------------------------------
# supercuspidal tokens


def twist_closure(chars: tuple[Character, ...] | list[Character],
                  context: SymbolContext) -> frozenset[Character]:
    """Subgroup of the character group generated by the given quadratic
    characters (always contains the trivial character)."""
    for c in chars:
        if c.context is not context:
            raise ValidationError("self-twist character from a foreign context")
        if not c.is_quadratic():
            raise ValidationError(f"self-twist {c} is not quadratic")
    group = {context.trivial()}
    frontier = list(chars)
    while frontier:
        c = frontier.pop()
        if c in group:
            continue
        new = {c * g for g in group} | {c}
        frontier.extend(new - group)
        group |= new
    return frozenset(group)


@dataclass(frozen=True)
class SCToken:
    """Opaque supercuspidal representation of GL2(F).

    Distinct tokens denote inequivalent supercuspidals by fiat.  self_twists
    is the full group {chi quadratic : tau (x) chi ~ tau}.
    """

    name: str
    omega: Character
    self_twists: frozenset[Character]


def sc_token(name: str, omega: Character,
             twists: tuple[Character, ...] | list[Character] = ()) -> SCToken:
    return SCToken(name, omega, twist_closure(tuple(twists), omega.context))


def _reduce_twist(token: SCToken, twist: Character) -> Character:
    # canonical coset representative of twist modulo the self-twist group
    return min((twist * k for k in token.self_twists),
               key=Character.sort_key)


# ---------------------------------------------------------------------------
# GL2(F) representations


class GL2Rep:
    """Irreducible representation of GL2(F) (abstract base)."""

    def central_character(self) -> Character:
        raise NotImplementedError

    def is_discrete_series(self) -> bool:
        return False

    def twist_by(self, chi: Character) -> GL2Rep:
        raise NotImplementedError

    def dual(self) -> GL2Rep:
        """Contragredient; for 2-dimensional rho this is rho (x) omega^{-1}."""
        return self.twist_by(self.central_character().inv())

    def exponent(self) -> Fraction:
        """Exponent of the determinant twist: abs_exponent(omega)/2."""
        return self.central_character().abs_exponent() / 2

    def render(self) -> str:
        raise NotImplementedError

    def sort_key(self):
        return self.render()

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class GL2Supercuspidal(GL2Rep):
    token: SCToken
    twist: Character

    def central_character(self):
        return self.token.omega * self.twist ** 2

    def is_discrete_series(self):
        return True

    def twist_by(self, chi):
        return supercuspidal(self.token, self.twist * chi)

    def render(self):
        if self.twist.is_trivial():
            return self.token.name
        return f"twist({self.token.name}, {self.twist})"


@dataclass(frozen=True)
class GL2Steinberg(GL2Rep):
    """st_chi = Steinberg twisted by chi."""

    chi: Character

    def central_character(self):
        return self.chi ** 2

    def is_discrete_series(self):
        return True

    def twist_by(self, eta):
        return GL2Steinberg(self.chi * eta)

    def render(self):
        return f"st({self.chi})"


@dataclass(frozen=True)
class GL2Principal(GL2Rep):
    """Irreducible full principal series pi(chi1, chi2), equal exponents.

    Unordered pair, stored sorted.  Unequal-exponent irreducible principal
    series are stored as GL2Langlands (they are their own Langlands quotient).
    """

    chi1: Character
    chi2: Character

    def central_character(self):
        return self.chi1 * self.chi2

    def twist_by(self, eta):
        return principal_series(self.chi1 * eta, self.chi2 * eta)

    def dual(self):
        return principal_series(self.chi1.inv(), self.chi2.inv())

    def pair_low_high(self):
        return (self.chi1, self.chi2)

    def render(self):
        return f"ps({self.chi1}, {self.chi2})"


@dataclass(frozen=True)
class GL2Langlands(GL2Rep):
    """Langlands-quotient datum for a non-tempered GL2 representation.

    Slots ordered (lo, hi) with abs_exponent(lo/hi) < 0.  One-dimensional
    representations are the case lo/hi = |-|^{-1} exactly (the quotient is
    (hi*nu^{-1/2}) o det).
    """

    lo: Character
    hi: Character

    def central_character(self):
        return self.lo * self.hi

    def twist_by(self, eta):
        return GL2Langlands(self.lo * eta, self.hi * eta)

    def dual(self):
        return GL2Langlands(self.hi.inv(), self.lo.inv())

    def is_one_dimensional(self):
        nu_inv = self.lo.context.norm(-1)
        return self.lo / self.hi == nu_inv

    def pair_low_high(self):
        return (self.lo, self.hi)

    def render(self):
        return f"J({self.lo}, {self.hi})"


def supercuspidal(token: SCToken, twist: Character | None = None) -> GL2Supercuspidal:
    if twist is None:
        twist = token.omega.context.trivial()
    if twist.context is not token.omega.context:
        raise ValidationError("twist from a foreign context")
    return GL2Supercuspidal(token, _reduce_twist(token, twist))


def steinberg(chi: Character) -> GL2Steinberg:
    return GL2Steinberg(chi)


def principal_series(a: Character, b: Character) -> GL2Rep:
    """pi(a, b) when irreducible; unequal exponents yield the canonical
    Langlands form of the same (irreducible) representation."""
    a._check(b)
    ratio = a / b
    nu = a.context.norm(1)
    if ratio == nu or ratio == nu.inv():
        raise ValidationError("pi(a,b) with a/b = |-|^(+-1) is reducible")
    return langlands_quotient(a, b)


def langlands_quotient(a: Character, b: Character) -> GL2Rep:
    """J(pi(a,b)): the unique irreducible quotient of pi(a,b) arranged with
    the smaller exponent first; equals pi(a,b) itself when that is
    irreducible and the exponents agree."""
    a._check(b)
    ea, eb = a.abs_exponent(), b.abs_exponent()
    if ea == eb:
        lo, hi = sorted((a, b), key=Character.sort_key)
        return GL2Principal(lo, hi)
    lo, hi = (a, b) if ea < eb else (b, a)
    return GL2Langlands(lo, hi)


def one_dimensional(eta: Character) -> GL2Langlands:
    """The one-dimensional representation eta o det."""
    nu = eta.context.norm
    return GL2Langlands(eta * nu(-HALF), eta * nu(HALF))


def gl2_twist(rho: GL2Rep, chi: Character) -> GL2Rep:
    return rho.twist_by(chi)


def gl2_dual(rho: GL2Rep) -> GL2Rep:
    return rho.dual()


def gl2_central_character(rho: GL2Rep) -> Character:
    return rho.central_character()


def gl2_is_discrete_series(rho: GL2Rep) -> bool:
    return rho.is_discrete_series()


def self_twist_stabilizer(rho: GL2Rep) -> frozenset[Character]:
    """Quadratic chi with rho (x) chi ~ rho."""
    ctx = rho.central_character().context
    if isinstance(rho, GL2Supercuspidal):
        return rho.token.self_twists
    return frozenset({ctx.trivial()})


# ---------------------------------------------------------------------------
# representations of D^x (D the quaternion algebra) and Jacquet-Langlands


class DRep:
    def central_character(self) -> Character:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def sort_key(self):
        return self.render()

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class DJL(DRep):
    """The D^x representation with Jacquet-Langlands transfer sc(token)*twist."""

    token: SCToken
    twist: Character

    def central_character(self):
        return self.token.omega * self.twist ** 2

    def render(self):
        return f"jl_inv({GL2Supercuspidal(self.token, self.twist).render()})"


@dataclass(frozen=True)
class DOneDim(DRep):
    """chi o N_D; transfers to st_chi."""

    chi: Character

    def central_character(self):
        return self.chi ** 2

    def render(self):
        return f"jl_inv(st({self.chi}))"


def jl(d: DRep) -> GL2Rep:
    """Jacquet-Langlands transfer to the discrete series of GL2(F)."""
    if isinstance(d, DOneDim):
        return GL2Steinberg(d.chi)
    return GL2Supercuspidal(d.token, d.twist)


def jl_inverse(rho: GL2Rep) -> DRep:
    if isinstance(rho, GL2Steinberg):
        return DOneDim(rho.chi)
    if isinstance(rho, GL2Supercuspidal):
        return DJL(rho.token, rho.twist)
    raise DomainError("Jacquet-Langlands inverse needs a discrete series")


# ---------------------------------------------------------------------------
# GSO(2,2) and GSO(4,0)


@dataclass(frozen=True)
class GSO22Rep:
    """tau1 (x) tau2 with equal central characters, GL2 factors."""

    tau1: GL2Rep
    tau2: GL2Rep

    def central_character(self):
        return self.tau1.central_character()

    def swap(self):
        return GSO22Rep(self.tau2, self.tau1)

    def equals_mod_swap(self, other) -> bool:
        return self == other or self.swap() == other

    def orbit(self):
        a, b = sorted((self.tau1, self.tau2), key=lambda r: r.sort_key())
        return GSO22Rep(a, b)

    def render(self):
        return f"gso22({self.tau1.render()}, {self.tau2.render()})"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class GSO40Rep:
    tau1: DRep
    tau2: DRep

    def central_character(self):
        return self.tau1.central_character()

    def swap(self):
        return GSO40Rep(self.tau2, self.tau1)

    def equals_mod_swap(self, other) -> bool:
        return self == other or self.swap() == other

    def orbit(self):
        a, b = sorted((self.tau1, self.tau2), key=lambda r: r.sort_key())
        return GSO40Rep(a, b)

    def render(self):
        return f"gso40({self.tau1.render()}, {self.tau2.render()})"

    def __str__(self):
        return self.render()


def gso22(tau1: GL2Rep, tau2: GL2Rep) -> GSO22Rep:
    if tau1.central_character() != tau2.central_character():
        raise ValidationError("gso22 factors must share a central character")
    return GSO22Rep(tau1, tau2)


def gso40(tau1: DRep, tau2: DRep) -> GSO40Rep:
    if tau1.central_character() != tau2.central_character():
        raise ValidationError("gso40 factors must share a central character")
    return GSO40Rep(tau1, tau2)


# ---------------------------------------------------------------------------
# reducibility predicates of the induced representations


class KlingenCase(enum.Enum):
    IRREDUCIBLE = "irreducible"
    TEMPERED_SPLIT = "tempered-split"           # chi = 1, tau discrete series
    GEN_STEINBERG_POINT = "gen-steinberg-point"  # chi = chi0*nu^(+-1), self-twist
    TW_STEINBERG_POINT = "tw-steinberg-point"    # tau Steinberg, chi = nu^(+-2)
    OTHER_REDUCIBLE = "other-reducible"


class SiegelCase(enum.Enum):
    IRREDUCIBLE = "irreducible"
    CASE_A = "a"          # tau = tau0*nu^(+-1/2), tau0 supercuspidal of PGL2
    CASE_B_I = "b-i"      # tau = st*nu^(+-1/2)
    CASE_B_II = "b-ii"    # tau = st_chi*nu^(+-1/2), chi quadratic nontrivial
    CASE_B_III = "b-iii"  # tau = st*nu^(+-3/2)
    OTHER_REDUCIBLE = "other-reducible"


class IPCase(enum.Enum):
    IRREDUCIBLE = "irreducible"
    ST_SP_SPLIT = "st-sp-split"       # supercuspidal pair at ratio nu^(+-1)
    TW_ST_CHAIN = "tw-steinberg"      # Steinberg pair at ratio nu^(+-2)
    HALF_SHIFT_CHAIN = "half-shift"   # Steinberg pair at ratio nu^(+-1)
    DELEGATED = "delegated"


@dataclass(frozen=True)
class ReducibilityReport:
    case: enum.Enum
    detail: str = ""

    @property
    def reducible(self) -> bool:
        return self.case not in (KlingenCase.IRREDUCIBLE,
                                 SiegelCase.IRREDUCIBLE,
                                 IPCase.IRREDUCIBLE)


def klingen_reducible(chi: Character, tau: GL2Rep) -> ReducibilityReport:
    """Reducibility of the Klingen-induced I_QZ(chi, tau)."""
    ctx = chi.context
    if isinstance(tau, GL2Supercuspidal):
        if chi.is_trivial():
            return ReducibilityReport(KlingenCase.TEMPERED_SPLIT)
        chi0 = chi.unitary_part()
        if (chi.abs_exponent() in (1, -1) and not chi0.is_trivial()
                and chi0.is_quadratic() and chi0 in tau.token.self_twists):
            return ReducibilityReport(KlingenCase.GEN_STEINBERG_POINT)
        return ReducibilityReport(KlingenCase.IRREDUCIBLE)
    if isinstance(tau, GL2Steinberg):
        if chi.is_trivial():
            return ReducibilityReport(KlingenCase.TEMPERED_SPLIT)
        if chi in (ctx.norm(2), ctx.norm(-2)):
            return ReducibilityReport(KlingenCase.TW_STEINBERG_POINT)
        return ReducibilityReport(KlingenCase.IRREDUCIBLE)
    if isinstance(tau, GL2Principal):
        a, b = tau.pair_low_high()
        if borel_reducible(chi, a / b):
            return ReducibilityReport(KlingenCase.OTHER_REDUCIBLE,
                                      "via the induced-in-stages Borel datum")
        return ReducibilityReport(KlingenCase.IRREDUCIBLE)
    return ReducibilityReport(KlingenCase.OTHER_REDUCIBLE,
                              "inducing data is a proper Langlands quotient")


def siegel_reducible(tau: GL2Rep, mu: Character) -> ReducibilityReport:
    """Reducibility of the Siegel-induced I_PY(tau, mu); mu plays no role."""
    ctx = mu.context
    nu = ctx.norm
    if isinstance(tau, GL2Supercuspidal):
        if tau.central_character() in (nu(1), nu(-1)):
            return ReducibilityReport(SiegelCase.CASE_A)
        return ReducibilityReport(SiegelCase.IRREDUCIBLE)
    if isinstance(tau, GL2Steinberg):
        xi = tau.chi
        if xi in (nu(HALF), nu(-HALF)):
            return ReducibilityReport(SiegelCase.CASE_B_I)
        u = xi.unitary_part()
        if (xi.abs_exponent() in (HALF, -HALF) and not u.is_trivial()
                and u.is_quadratic()):
            return ReducibilityReport(SiegelCase.CASE_B_II)
        if xi in (nu(Fraction(3, 2)), nu(Fraction(-3, 2))):
            return ReducibilityReport(SiegelCase.CASE_B_III)
        return ReducibilityReport(SiegelCase.IRREDUCIBLE)
    return ReducibilityReport(SiegelCase.OTHER_REDUCIBLE,
                              "non-discrete-series inducing data")


def borel_reducible(chi1: Character, chi2: Character) -> bool:
    """Reducibility of I_B(chi1, chi2; chi): true iff one of chi1, chi2,
    chi1*chi2, chi1/chi2 equals |-|^(+-1)."""
    nu = chi1.context.norm(1)
    targets = (nu, nu.inv())
    for c in (chi1, chi2, chi1 * chi2, chi1 / chi2):
        if c in targets:
            return True
    return False


def gl4_ip_reducible(tau1: GL2Rep, tau2: GL2Rep) -> ReducibilityReport:
    """Reducibility of the (2,2)-induced I_P(tau1, tau2) of GL4(F)."""
    if not (tau1.is_discrete_series() and tau2.is_discrete_series()):
        return ReducibilityReport(IPCase.DELEGATED, "non-discrete-series factor")
    ctx = tau1.central_character().context
    nu = ctx.norm(1)
    if isinstance(tau1, GL2Supercuspidal) and isinstance(tau2, GL2Supercuspidal):
        for shift in (nu, nu.inv()):
            if tau1.twist_by(shift) == tau2:
                return ReducibilityReport(IPCase.ST_SP_SPLIT)
        return ReducibilityReport(IPCase.IRREDUCIBLE)
    if isinstance(tau1, GL2Steinberg) and isinstance(tau2, GL2Steinberg):
        ratio = tau1.chi / tau2.chi
        if ratio in (ctx.norm(2), ctx.norm(-2)):
            return ReducibilityReport(IPCase.TW_ST_CHAIN)
        if ratio in (nu, nu.inv()):
            return ReducibilityReport(IPCase.HALF_SHIFT_CHAIN)
        return ReducibilityReport(IPCase.IRREDUCIBLE)
    return ReducibilityReport(IPCase.IRREDUCIBLE)


# ---------------------------------------------------------------------------
# GL4(F) and GSO(3,3)


class GL4Rep:
    def central_character(self) -> Character:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class GL4Supercuspidal(GL4Rep):
    name: str
    omega: Character

    def central_character(self):
        return self.omega

    def render(self):
        return f"sc4[{self.name}]"


@dataclass(frozen=True)
class GL4InducedP(GL4Rep):
    """Irreducible I_P(tau1, tau2); unordered, stored sorted."""

    tau1: GL2Rep
    tau2: GL2Rep

    def central_character(self):
        return self.tau1.central_character() * self.tau2.central_character()

    def render(self):
        return f"I_P({self.tau1.render()}, {self.tau2.render()})"


@dataclass(frozen=True)
class GL4St(GL4Rep):
    """Generalized Steinberg St(tau), tau supercuspidal."""

    tau: GL2Rep

    def central_character(self):
        return self.tau.central_character() ** 2

    def render(self):
        return f"St({self.tau.render()})"


@dataclass(frozen=True)
class GL4Sp(GL4Rep):
    """Generalized Speh Sp(tau), tau supercuspidal."""

    tau: GL2Rep

    def central_character(self):
        return self.tau.central_character() ** 2

    def render(self):
        return f"Sp({self.tau.render()})"


@dataclass(frozen=True)
class GL4TwSt(GL4Rep):
    """St_chi = St_PGL4 (x) chi."""

    chi: Character

    def central_character(self):
        return self.chi ** 4

    def render(self):
        return f"St_PGL4({self.chi})"


@dataclass(frozen=True)
class GL4JP(GL4Rep):
    """Langlands quotient of a reducible (2,2) standard module, dominant order."""

    tau1: GL2Rep
    tau2: GL2Rep

    def central_character(self):
        return self.tau1.central_character() * self.tau2.central_character()

    def render(self):
        return f"J_P({self.tau1.render()}, {self.tau2.render()})"


@dataclass(frozen=True)
class GL4JQ(GL4Rep):
    """Langlands quotient from the (1,2,1) parabolic, dominant order."""

    chi1: Character
    tau: GL2Rep
    chi2: Character

    def central_character(self):
        return self.chi1 * self.tau.central_character() * self.chi2

    def render(self):
        return f"J_Q({self.chi1}, {self.tau.render()}, {self.chi2})"


@dataclass(frozen=True)
class GL4JB0(GL4Rep):
    """Langlands quotient from the Borel, exponents weakly decreasing."""

    mus: tuple[Character, Character, Character, Character]

    def central_character(self):
        out = self.mus[0]
        for m in self.mus[1:]:
            out = out * m
        return out

    def render(self):
        return "J_B0(" + ", ".join(str(m) for m in self.mus) + ")"


def gl4_induced_p(tau1: GL2Rep, tau2: GL2Rep) -> GL4InducedP:
    a, b = sorted((tau1, tau2), key=lambda r: r.sort_key())
    return GL4InducedP(a, b)


def gl4_jp(tau1: GL2Rep, tau2: GL2Rep) -> GL4Rep:
    """J_P(tau1, tau2): canonical form of the unique irreducible quotient of
    the (2,2) standard module."""
    if tau1.exponent() < tau2.exponent():
        tau1, tau2 = tau2, tau1
    report = gl4_ip_reducible(tau1, tau2)
    if report.case == IPCase.IRREDUCIBLE:
        return gl4_induced_p(tau1, tau2)
    if report.case == IPCase.ST_SP_SPLIT:
        nu = tau1.central_character().context.norm
        return GL4Sp(tau1.twist_by(nu(-HALF)))
    return GL4JP(tau1, tau2)


def gl4_jq(chi1: Character, tau: GL2Rep, chi2: Character) -> GL4JQ:
    if (chi1.abs_exponent(), chi1.sort_key()) < (chi2.abs_exponent(), chi2.sort_key()):
        chi1, chi2 = chi2, chi1
    return GL4JQ(chi1, tau, chi2)


def gl4_jb0(m1: Character, m2: Character, m3: Character, m4: Character) -> GL4JB0:
    mus = sorted((m1, m2, m3, m4),
                 key=lambda c: (-c.abs_exponent(), c.sort_key()))
    return GL4JB0(tuple(mus))


@dataclass(frozen=True)
class GSO33Rep:
    """Pi (x) mu with Pi a GL4(F) representation and omega_Pi = mu^2."""

    gl4: GL4Rep
    mu: Character

    def render(self):
        return f"gso33({self.gl4.render()}, {self.mu})"

    def __str__(self):
        return self.render()


def gso33(gl4: GL4Rep, mu: Character) -> GSO33Rep:
    if gl4.central_character() != mu ** 2:
        raise ValidationError("gso33 needs omega_Pi = mu^2")
    return GSO33Rep(gl4, mu)


# ---------------------------------------------------------------------------
# GSp4(F)


class GSp4Rep:
    def central_character(self) -> Character:
        raise NotImplementedError

    def is_generic(self) -> bool:
        raise NotImplementedError

    def is_tempered_ng(self) -> bool:
        """Member of the non-generic essentially-tempered class."""
        return False

    def is_discrete_series(self) -> bool:
        return False

    def render(self) -> str:
        raise NotImplementedError

    def sort_key(self):
        return self.render()

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class GSp4SC(GSp4Rep):
    """Supercuspidal; origin is None (generic, not a lift), a GSO22Rep, or a
    GSO40Rep (stored as the sorted orbit representative)."""

    name: str
    omega: Character
    origin: GSO22Rep | GSO40Rep | None = None

    def central_character(self):
        return self.omega

    def is_generic(self):
        return not isinstance(self.origin, GSO40Rep)

    def is_tempered_ng(self):
        return isinstance(self.origin, GSO40Rep)

    def is_discrete_series(self):
        return True

    def render(self):
        return f"sc_gsp4({self.name}, {self.omega})"


@dataclass(frozen=True)
class GSp4StKlingen(GSp4Rep):
    """St(chi, tau): generic discrete series at the Klingen point
    chi quadratic nontrivial, tau supercuspidal with tau (x) chi ~ tau."""

    chi: Character
    tau: GL2Rep

    def central_character(self):
        return self.tau.central_character() * self.chi

    def is_generic(self):
        return True

    def is_discrete_series(self):
        return True

    def render(self):
        return f"St({self.chi}, {self.tau.render()})"


@dataclass(frozen=True)
class GSp4SpKlingen(GSp4Rep):
    """Sp(chi, tau): the non-generic Langlands quotient paired with St(chi, tau)."""

    chi: Character
    tau: GL2Rep

    def central_character(self):
        return self.tau.central_character() * self.chi

    def is_generic(self):
        return False

    def render(self):
        return f"Sp({self.chi}, {self.tau.render()})"


@dataclass(frozen=True)
class GSp4StSiegel(GSp4Rep):
    """St(tau, mu): generic discrete series at the Siegel point, tau a
    discrete series of PGL2 with tau != st."""

    tau: GL2Rep
    mu: Character

    def central_character(self):
        return self.mu ** 2

    def is_generic(self):
        return True

    def is_discrete_series(self):
        return True

    def render(self):
        return f"St({self.tau.render()}, {self.mu})"


@dataclass(frozen=True)
class GSp4SpSiegel(GSp4Rep):
    """Sp(tau, mu): the non-generic quotient paired with St(tau, mu), tau
    supercuspidal of PGL2."""

    tau: GL2Rep
    mu: Character

    def central_character(self):
        return self.mu ** 2

    def is_generic(self):
        return False

    def render(self):
        return f"Sp({self.tau.render()}, {self.mu})"


@dataclass(frozen=True)
class GSp4TwSt(GSp4Rep):
    """St_PGSp4 (x) chi."""

    chi: Character

    def central_character(self):
        return self.chi ** 2

    def is_generic(self):
        return True

    def is_discrete_series(self):
        return True

    def render(self):
        return f"St_PGSp4({self.chi})"


@dataclass(frozen=True)
class GSp4PiGen(GSp4Rep):
    """The generic summand of I_QZ(1, tau), tau discrete series."""

    tau: GL2Rep

    def central_character(self):
        return self.tau.central_character()

    def is_generic(self):
        return True

    def render(self):
        return f"pi_gen({self.tau.render()})"


@dataclass(frozen=True)
class GSp4PiNg(GSp4Rep):
    """The non-generic summand of I_QZ(1, tau)."""

    tau: GL2Rep

    def central_character(self):
        return self.tau.central_character()

    def is_generic(self):
        return False

    def is_tempered_ng(self):
        return True

    def render(self):
        return f"pi_ng({self.tau.render()})"


@dataclass(frozen=True)
class GSp4JQZ(GSp4Rep):
    """J_QZ(chi, tau): Langlands datum from the Klingen parabolic in quotient
    arrangement (abs_exponent(chi) >= 0, chi != 1, tau discrete series)."""

    chi: Character
    tau: GL2Rep

    def central_character(self):
        return self.chi * self.tau.central_character()

    def is_generic(self):
        return not klingen_reducible(self.chi, self.tau).reducible

    def render(self):
        return f"J_QZ({self.chi}, {self.tau.render()})"


@dataclass(frozen=True)
class GSp4JPY(GSp4Rep):
    """J_PY(tau, chi): Langlands datum from the Siegel parabolic in quotient
    arrangement (abs_exponent(omega_tau) >= 0, tau discrete series)."""

    tau: GL2Rep
    chi: Character

    def central_character(self):
        return self.chi ** 2 * self.tau.central_character()

    def is_generic(self):
        return not siegel_reducible(self.tau, self.chi).reducible

    def render(self):
        return f"J_PY({self.tau.render()}, {self.chi})"


@dataclass(frozen=True)
class GSp4JB(GSp4Rep):
    """J_B(chi1, chi2; chi): Borel Langlands datum, Weyl-normalized so that
    the exponents satisfy s1 >= s2 >= 0."""

    chi1: Character
    chi2: Character
    chi: Character

    def central_character(self):
        return self.chi ** 2 * self.chi1 * self.chi2

    def is_generic(self):
        return not borel_reducible(self.chi1, self.chi2)

    def render(self):
        return f"J_B({self.chi1}, {self.chi2}, {self.chi})"


# --- factories with canonicalization


def sc_gsp4(name: str, omega: Character,
            origin: GSO22Rep | GSO40Rep | None = None) -> GSp4SC:
    if origin is not None:
        if origin.central_character() != omega:
            raise ValidationError("supercuspidal lift origin has wrong central character")
        origin = origin.orbit()
    return GSp4SC(name, omega, origin)


def _check_klingen_point(chi: Character, tau: GL2Rep):
    if not (chi.is_quadratic() and not chi.is_trivial()):
        raise ValidationError("St/Sp(chi, tau) needs chi quadratic nontrivial")
    if not isinstance(tau, GL2Supercuspidal):
        raise ValidationError("St/Sp(chi, tau) needs tau supercuspidal")
    if chi not in tau.token.self_twists:
        raise ValidationError("St/Sp(chi, tau) needs tau (x) chi ~ tau")


def st_klingen(chi: Character, tau: GL2Rep) -> GSp4StKlingen:
    _check_klingen_point(chi, tau)
    return GSp4StKlingen(chi, tau)


def sp_klingen(chi: Character, tau: GL2Rep) -> GSp4SpKlingen:
    _check_klingen_point(chi, tau)
    return GSp4SpKlingen(chi, tau)


def _siegel_tau_ok(tau: GL2Rep) -> bool:
    if not tau.is_discrete_series():
        return False
    if not tau.central_character().is_trivial():
        return False
    return not (isinstance(tau, GL2Steinberg) and tau.chi.is_trivial())


def st_siegel(tau: GL2Rep, mu: Character) -> GSp4StSiegel:
    if not _siegel_tau_ok(tau):
        raise ValidationError("St(tau, mu) needs a PGL2 discrete series tau != st")
    if isinstance(tau, GL2Steinberg):
        # St(st_eta, mu) ~ St(st_eta, eta*mu): store the smaller twist
        mu = min(mu, tau.chi * mu, key=Character.sort_key)
    return GSp4StSiegel(tau, mu)


def sp_siegel(tau: GL2Rep, mu: Character) -> GSp4SpSiegel:
    if not (isinstance(tau, GL2Supercuspidal)
            and tau.central_character().is_trivial()):
        raise ValidationError("Sp(tau, mu) needs tau supercuspidal of PGL2")
    return GSp4SpSiegel(tau, mu)


def tw_st_gsp4(chi: Character) -> GSp4TwSt:
    return GSp4TwSt(chi)


def pi_gen(tau: GL2Rep) -> GSp4PiGen:
    if not tau.is_discrete_series():
        raise ValidationError("pi_gen needs a discrete series tau")
    return GSp4PiGen(tau)


def pi_ng(tau: GL2Rep) -> GSp4PiNg:
    if not tau.is_discrete_series():
        raise ValidationError("pi_ng needs a discrete series tau")
    return GSp4PiNg(tau)


def jqz(chi: Character, tau: GL2Rep) -> GSp4Rep:
    """Canonical J_QZ(chi, tau); converts the generalized-Steinberg
    reducibility point into the Sp(chi0, tau0) value."""
    if not tau.is_discrete_series():
        raise ValidationError("J_QZ needs a discrete series tau")
    e = chi.abs_exponent()
    if e < 0:
        chi, tau = chi.inv(), tau.twist_by(chi)
        e = -e
    if e == 0:
        if chi.is_trivial():
            raise ValidationError("I_QZ(1, tau) splits; use pi_gen/pi_ng")
        other = (chi.inv(), tau.twist_by(chi))
        if (other[0].sort_key(), other[1].sort_key()) < (chi.sort_key(), tau.sort_key()):
            chi, tau = other
        return GSp4JQZ(chi, tau)
    nu = chi.context.norm
    chi0 = chi * nu(-1)
    if (e == 1 and chi0.is_quadratic() and not chi0.is_trivial()
            and isinstance(tau, GL2Supercuspidal)
            and chi0 in tau.token.self_twists):
        return sp_klingen(chi0, tau.twist_by(nu(HALF)))
    return GSp4JQZ(chi, tau)


def jpy(tau: GL2Rep, chi: Character) -> GSp4Rep:
    """Canonical J_PY(tau, chi); converts the supercuspidal Siegel
    reducibility point into the Sp(tau0, mu0) value."""
    if not tau.is_discrete_series():
        raise ValidationError("J_PY needs a discrete series tau")
    omega = tau.central_character()
    e = omega.abs_exponent()
    if e < 0:
        tau, chi = tau.dual(), omega * chi
        e = -e
    if e == 0:
        other = (tau.dual(), omega * chi)
        if (other[0].sort_key(), other[1].sort_key()) < (tau.sort_key(), chi.sort_key()):
            tau, chi = other
        return GSp4JPY(tau, chi)
    nu = chi.context.norm
    if isinstance(tau, GL2Supercuspidal) and omega == nu(1):
        return sp_siegel(tau.twist_by(nu(-HALF)), chi * nu(HALF))
    return GSp4JPY(tau, chi)


def _borel_orbit(chi1: Character, chi2: Character, chi: Character):
    images = set()
    for a, b, c in ((chi1, chi2, chi), (chi2, chi1, chi)):
        for flip1 in (False, True):
            a1, c1 = (a.inv(), c * a) if flip1 else (a, c)
            for flip2 in (False, True):
                b2, c2 = (b.inv(), c1 * b) if flip2 else (b, c1)
                images.add((a1, b2, c2))
    return images


def jb(chi1: Character, chi2: Character, chi: Character) -> GSp4JB:
    """Canonical J_B(chi1, chi2; chi): the Weyl-orbit representative with
    exponents s1 >= s2 >= 0, ties broken by the fixed character order."""
    best = None
    for a, b, c in _borel_orbit(chi1, chi2, chi):
        if a.abs_exponent() >= b.abs_exponent() >= 0:
            key = (a.sort_key(), b.sort_key(), c.sort_key())
            if best is None or key < best[0]:
                best = (key, (a, b, c))
    assert best is not None  # s1 >= s2 >= 0 is always reachable
    a, b, c = best[1]
    return GSp4JB(a, b, c)


# --- genericity, temperedness, packets


def gsp4_is_generic(pi: GSp4Rep) -> bool:
    return pi.is_generic()


def gsp4_is_tempered_ng(pi: GSp4Rep) -> bool:
    return pi.is_tempered_ng()


def gsp4_is_discrete_series(pi: GSp4Rep) -> bool:
    return pi.is_discrete_series()


@dataclass(frozen=True)
class PacketId:
    kind: str
    key: str


def packet_of(pi: GSp4Rep) -> PacketId:
    """L-packet identifier: pi_gen(tau) and pi_ng(tau) share one packet,
    every other non-supercuspidal value is a singleton."""
    if isinstance(pi, (GSp4PiGen, GSp4PiNg)):
        return PacketId("iqz1", pi.tau.render())
    return PacketId("singleton", pi.render())


def packet_has_generic(packet: PacketId, member: GSp4Rep | None = None) -> bool:
    if packet.kind == "iqz1":
        return True
    if member is None:
        raise DomainError("singleton packet query needs its member")
    return member.is_generic()


def canonicalize_gsp4(pi: GSp4Rep) -> GSp4Rep:
    """Re-canonicalize a GSp4 value (idempotent on factory output)."""
    if isinstance(pi, GSp4JQZ):
        return jqz(pi.chi, pi.tau)
    if isinstance(pi, GSp4JPY):
        return jpy(pi.tau, pi.chi)
    if isinstance(pi, GSp4JB):
        return jb(pi.chi1, pi.chi2, pi.chi)
    if isinstance(pi, GSp4StSiegel):
        return st_siegel(pi.tau, pi.mu)
    if isinstance(pi, GSp4SC):
        return sc_gsp4(pi.name, pi.omega, pi.origin)
    return pi


def gsp4_equal(a: GSp4Rep, b: GSp4Rep) -> bool:
    return canonicalize_gsp4(a) == canonicalize_gsp4(b)


# ---------------------------------------------------------------------------
# standard modules and their unique irreducible submodules


@dataclass(frozen=True)
class KlingenInduced:
    """I_QZ(chi, tau)."""

    chi: Character
    tau: GL2Rep

    def render(self):
        return f"I_QZ({self.chi}, {self.tau.render()})"


@dataclass(frozen=True)
class SiegelInduced:
    """I_PY(tau, chi)."""

    tau: GL2Rep
    chi: Character

    def render(self):
        return f"I_PY({self.tau.render()}, {self.chi})"


@dataclass(frozen=True)
class BorelInduced:
    """I_B(chi1, chi2; chi)."""

    chi1: Character
    chi2: Character
    chi: Character

    def render(self):
        return f"I_B({self.chi1}, {self.chi2}, {self.chi})"


StandardModuleData = KlingenInduced | SiegelInduced | BorelInduced


def _klingen_to_borel(chi: Character, tau: GL2Rep) -> BorelInduced:
    # induction in stages: I_B(c1, c2; c) = I_QZ(c1, pi(c*c2, c))
    if isinstance(tau, GL2Principal):
        a, b = tau.pair_low_high()
        return BorelInduced(chi, a / b, b)
    if isinstance(tau, GL2Langlands) and tau.is_one_dimensional():
        # eta o det is the submodule of pi(eta*nu^(-1/2), eta*nu^(1/2))
        nu = chi.context.norm
        eta = tau.hi * nu(-HALF)
        return BorelInduced(chi, nu(-1), eta * nu(HALF))
    raise UnsupportedError(
        "Klingen datum induced from a proper Langlands quotient is not standard")


def classify_standard_module(data: StandardModuleData) -> list[GSp4Rep]:
    """Constituent(s) realized as the unique irreducible submodule of the
    given induced representation; the split tempered Klingen case returns
    both summands.  Borel data are Weyl-normalized first."""
    if isinstance(data, BorelInduced):
        return [jb(data.chi1.inv(), data.chi2.inv(),
                   data.chi * data.chi1 * data.chi2)]

    if isinstance(data, KlingenInduced):
        chi, tau = data.chi, data.tau
        nu = chi.context.norm
        if not tau.is_discrete_series():
            return classify_standard_module(_klingen_to_borel(chi, tau))
        if chi.is_trivial():
            return [pi_gen(tau), pi_ng(tau)]
        if chi.abs_exponent() <= 0:
            return [jqz(chi.inv(), tau.twist_by(chi))]
        report = klingen_reducible(chi, tau)
        if report.case == KlingenCase.GEN_STEINBERG_POINT:
            return [st_klingen(chi * nu(-1), tau.twist_by(nu(HALF)))]
        if report.case == KlingenCase.TW_STEINBERG_POINT:
            assert isinstance(tau, GL2Steinberg)
            return [tw_st_gsp4(tau.chi * nu(1))]
        return [jqz(chi, tau)]

    if isinstance(data, SiegelInduced):
        tau, chi = data.tau, data.chi
        nu = chi.context.norm
        if isinstance(tau, GL2Principal):
            a, b = tau.pair_low_high()
            return classify_standard_module(BorelInduced(a, b, chi))
        if not tau.is_discrete_series():
            raise UnsupportedError(
                "Siegel datum induced from a Langlands quotient is not standard")
        omega = tau.central_character()
        if omega.abs_exponent() <= 0:
            return [jpy(tau.dual(), omega * chi)]
        report = siegel_reducible(tau, chi)
        if report.case == SiegelCase.CASE_A:
            return [st_siegel(tau.twist_by(nu(-HALF)), chi * nu(HALF))]
        if report.case == SiegelCase.CASE_B_I:
            assert isinstance(tau, GL2Steinberg)
            return [pi_gen(steinberg(chi * nu(HALF)))]
        if report.case == SiegelCase.CASE_B_II:
            assert isinstance(tau, GL2Steinberg)
            return [st_siegel(steinberg(tau.chi.unitary_part()), chi * nu(HALF))]
        if report.case == SiegelCase.CASE_B_III:
            return [tw_st_gsp4(chi * nu(Fraction(3, 2)))]
        return [jpy(tau, chi)]

    raise TypeError(f"not a standard-module datum: {data!r}")


def standard_module_data(pi: GSp4Rep) -> StandardModuleData | None:
    """The inducing datum whose unique irreducible submodule is pi (the split
    tempered summands both report I_QZ(1, tau)); None for supercuspidals."""
    nu = pi.central_character().context.norm
    if isinstance(pi, GSp4SC):
        return None
    if isinstance(pi, GSp4StKlingen):
        return KlingenInduced(pi.chi * nu(1), pi.tau.twist_by(nu(-HALF)))
    if isinstance(pi, GSp4SpKlingen):
        return KlingenInduced(pi.chi * nu(-1), pi.tau.twist_by(nu(HALF)))
    if isinstance(pi, GSp4StSiegel):
        return SiegelInduced(pi.tau.twist_by(nu(HALF)), pi.mu * nu(-HALF))
    if isinstance(pi, GSp4SpSiegel):
        return SiegelInduced(pi.tau.twist_by(nu(-HALF)), pi.mu * nu(HALF))
    if isinstance(pi, GSp4TwSt):
        return KlingenInduced(nu(2), steinberg(pi.chi * nu(-1)))
    if isinstance(pi, (GSp4PiGen, GSp4PiNg)):
        return KlingenInduced(pi.central_character().context.trivial(), pi.tau)
    if isinstance(pi, GSp4JQZ):
        return KlingenInduced(pi.chi.inv(), pi.tau.twist_by(pi.chi))
    if isinstance(pi, GSp4JPY):
        return SiegelInduced(pi.tau.dual(), pi.tau.central_character() * pi.chi)
    if isinstance(pi, GSp4JB):
        return BorelInduced(pi.chi1.inv(), pi.chi2.inv(),
                            pi.chi * pi.chi1 * pi.chi2)
    raise TypeError(f"not a GSp4 value: {pi!r}")
