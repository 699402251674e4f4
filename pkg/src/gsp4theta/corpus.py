"""Seeded random corpora exercising every case of the lift and parameter
machinery.  Each element lives in its own small symbol context (a few free,
quadratic, cubic and unramified symbols plus a handful of supercuspidal
tokens), with rational norm exponents of denominator at most 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from . import repdata as rd
from .charlattice import Character, SymbolContext

HALF = Fraction(1, 2)


@dataclass
class World:
    ctx: SymbolContext
    free: list[Character]
    quads: list[Character]
    cubic: Character
    unram: list[Character]


def make_world(rng: Random) -> World:
    ctx = SymbolContext()
    free = [ctx.char(ctx.declare(f"u{i}").name) for i in range(1, 4)]
    quads = [ctx.char(ctx.declare(f"q{i}", order=2).name) for i in range(1, 3)]
    cubic = ctx.char(ctx.declare("w3", order=3).name)
    unram = [ctx.char(ctx.declare(f"a{i}", order=None, unramified=True).name)
             for i in range(1, 4)]
    return World(ctx, free, quads, cubic, unram)


def rand_exponent(rng: Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3, 4)))


def rand_unitary(rng: Random, w: World) -> Character:
    out = w.ctx.trivial()
    for c in w.free + w.quads + [w.cubic]:
        if rng.random() < 0.35:
            out = out * c ** rng.randint(1, 2)
    return out


def rand_character(rng: Random, w: World) -> Character:
    return rand_unitary(rng, w) * w.ctx.norm(rand_exponent(rng))


def rand_quadratic(rng: Random, w: World, nontrivial=True) -> Character:
    while True:
        out = w.ctx.trivial()
        for q in w.quads:
            if rng.random() < 0.5:
                out = out * q
        if not nontrivial or not out.is_trivial():
            return out


def rand_token(rng: Random, w: World, name: str, omega: Character | None = None,
               twists=None) -> rd.SCToken:
    if omega is None:
        omega = rand_character(rng, w)
    if twists is None:
        twists = rng.choice(([], [w.quads[0]], [w.quads[1]], w.quads))
    return rd.sc_token(name, omega, twists)


def rand_gl2_ds(rng: Random, w: World, name: str) -> rd.GL2Rep:
    if rng.random() < 0.5:
        return rd.supercuspidal(rand_token(rng, w, name), rand_character(rng, w))
    return rd.steinberg(rand_character(rng, w))


def rand_gl2_nonds(rng: Random, w: World, omega: Character) -> rd.GL2Rep:
    """Non-discrete-series GL2 value with the given central character."""
    mode = rng.randrange(3)
    if mode == 0:  # tempered principal series
        u = rand_unitary(rng, w)
        half = omega.abs_exponent() / 2
        lo = u * w.ctx.norm(half)
        return rd.langlands_quotient(lo, omega / lo)
    if mode == 1:  # one-dimensional
        eta_sq = omega * w.ctx.norm(0)
        # need eta with eta^2 = omega; synthesize via a square root of the data
        lo = omega * w.ctx.norm(Fraction(-1, 2) + omega.abs_exponent() / -2)
        lo = _half_power(omega, w) * w.ctx.norm(-HALF)
        return rd.langlands_quotient(lo, omega / lo)
    lo = rand_unitary(rng, w) * w.ctx.norm(
        omega.abs_exponent() / 2 - rng.choice((Fraction(1), HALF, Fraction(3, 2))))
    return rd.langlands_quotient(lo, omega / lo)


def _half_power(omega: Character, w: World) -> Character:
    """Some character eta with eta^2 * |.|^t = omega for rational t; used to
    seed one-dimensionals eta o det inside a given central character."""
    halved = {}
    ok = True
    for sym, e in omega.factors:
        if e % 2 == 0:
            halved[sym] = e // 2
        elif sym.order is not None and sym.order % 2 == 1:
            halved[sym] = (e * ((sym.order + 1) // 2)) % sym.order
        else:
            ok = False
    if not ok:
        halved = {}
    out = w.ctx.trivial()
    for sym, e in halved.items():
        out = out * (w.ctx.char(sym.name) ** e)
    return out * w.ctx.norm(omega.abs_exponent() / 2)


# ---------------------------------------------------------------------------
# GSO(2,2) corpus spanning the six lift cases


def gso22_case(rng: Random, w: World, case: str) -> rd.GSO22Rep:
    if case == "a":
        tau = rand_gl2_ds(rng, w, "t1")
        return rd.gso22(tau, tau)
    if case == "b":
        omega = rand_character(rng, w)
        t1 = rand_token(rng, w, "t1", omega)
        t2 = rand_token(rng, w, "t2", omega)
        tw = rand_character(rng, w)
        return rd.gso22(rd.supercuspidal(t1, tw), rd.supercuspidal(t2, tw))
    if case == "c":
        chi = rand_character(rng, w)
        tw = rand_character(rng, w)
        tok = rand_token(rng, w, "t1", chi ** 2 * tw ** -2)
        pair = [rd.supercuspidal(tok, tw), rd.steinberg(chi)]
        rng.shuffle(pair)
        return rd.gso22(*pair)
    if case == "d":
        chi1 = rand_character(rng, w)
        chi2 = chi1 * rand_quadratic(rng, w)
        return rd.gso22(rd.steinberg(chi1), rd.steinberg(chi2))
    if case == "e":
        tau = rand_gl2_ds(rng, w, "t1")
        pair = [tau, rand_gl2_nonds(rng, w, tau.central_character())]
        rng.shuffle(pair)
        return rd.gso22(*pair)
    if case == "f":
        omega = rand_character(rng, w)
        return rd.gso22(rand_gl2_nonds(rng, w, omega),
                        rand_gl2_nonds(rng, w, omega))
    raise ValueError(case)


def gso22_corpus(count: int, seed: int = 20220) -> list[rd.GSO22Rep]:
    rng = Random(seed)
    out = []
    cases = "abcdef"
    for i in range(count):
        w = make_world(rng)
        out.append(gso22_case(rng, w, cases[i % 6]))
    return out


def gso40_corpus(count: int, seed: int = 20440) -> list[rd.GSO40Rep]:
    rng = Random(seed)
    out = []
    for i in range(count):
        w = make_world(rng)
        if i % 3 == 0:
            d = rd.jl_inverse(rand_gl2_ds(rng, w, "t1"))
            out.append(rd.gso40(d, d))
        else:
            omega = rand_character(rng, w)
            t1 = rand_token(rng, w, "t1", omega)
            t2 = rand_token(rng, w, "t2", omega)
            tw = rand_character(rng, w)
            out.append(rd.gso40(rd.DJL(t1, tw), rd.DJL(t2, tw)))
    return out


# ---------------------------------------------------------------------------
# GSp4 corpus spanning every variant, with pole-forcing and generic data


def _gsp4_builders():
    def sc_nonlift(rng, w):
        return rd.sc_gsp4("pi0", rand_character(rng, w))

    def sc_lift22(rng, w):
        from .theta import theta_22_to_gsp4
        return theta_22_to_gsp4(gso22_case(rng, w, "b")).value

    def sc_lift40(rng, w):
        from .theta import theta_40_to_gsp4
        omega = rand_character(rng, w)
        t1 = rand_token(rng, w, "t1", omega)
        t2 = rand_token(rng, w, "t2", omega)
        sigma = rd.gso40(rd.DJL(t1, w.ctx.trivial()), rd.DJL(t2, w.ctx.trivial()))
        return theta_40_to_gsp4(sigma).value

    def st_klingen(rng, w):
        chi0 = rand_quadratic(rng, w)
        tok = rand_token(rng, w, "t1", twists=[chi0])
        return rd.st_klingen(chi0, rd.supercuspidal(tok, rand_character(rng, w)))

    def sp_klingen(rng, w):
        chi0 = rand_quadratic(rng, w)
        tok = rand_token(rng, w, "t1", twists=[chi0])
        return rd.sp_klingen(chi0, rd.supercuspidal(tok, rand_character(rng, w)))

    def st_siegel_sc(rng, w):
        tw = rand_character(rng, w)
        tok = rand_token(rng, w, "t1", tw ** -2)
        return rd.st_siegel(rd.supercuspidal(tok, tw), rand_character(rng, w))

    def st_siegel_st(rng, w):
        return rd.st_siegel(rd.steinberg(rand_quadratic(rng, w)),
                            rand_character(rng, w))

    def sp_siegel(rng, w):
        tw = rand_character(rng, w)
        tok = rand_token(rng, w, "t1", tw ** -2)
        return rd.sp_siegel(rd.supercuspidal(tok, tw), rand_character(rng, w))

    def tw_st(rng, w):
        return rd.tw_st_gsp4(rand_character(rng, w))

    def p_gen(rng, w):
        return rd.pi_gen(rand_gl2_ds(rng, w, "t1"))

    def p_ng(rng, w):
        return rd.pi_ng(rand_gl2_ds(rng, w, "t1"))

    def jqz_generic(rng, w):
        chi = rand_unitary(rng, w) * w.ctx.norm(abs(rand_exponent(rng)))
        if chi.is_trivial():
            chi = w.free[0]
        return rd.jqz(chi, rand_gl2_ds(rng, w, "t1"))

    def jqz_twst_point(rng, w):
        # non-generic quotient at chi = nu^2 against a Steinberg twist
        return rd.jqz(w.ctx.norm(2), rd.steinberg(rand_character(rng, w)))

    def jpy_generic(rng, w):
        tok = rand_token(rng, w, "t1", rand_unitary(rng, w))
        tau = rd.supercuspidal(tok, w.ctx.norm(abs(rand_exponent(rng)) / 2))
        return rd.jpy(tau, rand_character(rng, w))

    def jpy_st(rng, w):
        xi = rand_unitary(rng, w) * w.ctx.norm(abs(rand_exponent(rng)) / 2)
        return rd.jpy(rd.steinberg(xi), rand_character(rng, w))

    def jpy_bi_point(rng, w):
        return rd.jpy(rd.steinberg(w.ctx.norm(HALF)), rand_character(rng, w))

    def jpy_bii_point(rng, w):
        xi = rand_quadratic(rng, w) * w.ctx.norm(HALF)
        return rd.jpy(rd.steinberg(xi), rand_character(rng, w))

    def jpy_biii_point(rng, w):
        return rd.jpy(rd.steinberg(w.ctx.norm(Fraction(3, 2))),
                      rand_character(rng, w))

    def jb_generic(rng, w):
        s1, s2 = sorted((abs(rand_exponent(rng)), abs(rand_exponent(rng))),
                        reverse=True)
        chi1 = rand_unitary(rng, w) * w.ctx.norm(s1)
        chi2 = rand_unitary(rng, w) * w.ctx.norm(s2)
        return rd.jb(chi1, chi2, rand_character(rng, w))

    def jb_pole_chi1(rng, w):
        return rd.jb(w.ctx.norm(1), rand_unitary(rng, w), rand_character(rng, w))

    def jb_pole_chi2(rng, w):
        return rd.jb(rand_unitary(rng, w) * w.ctx.norm(2), w.ctx.norm(1),
                     rand_character(rng, w))

    def jb_pole_product(rng, w):
        u = rand_unitary(rng, w)
        return rd.jb(u * w.ctx.norm(1), u.inv(), rand_character(rng, w))

    def jb_pole_ratio(rng, w):
        u = rand_unitary(rng, w)
        return rd.jb(u * w.ctx.norm(1), u, rand_character(rng, w))

    return [sc_nonlift, sc_lift22, sc_lift40, st_klingen, sp_klingen,
            st_siegel_sc, st_siegel_st, sp_siegel, tw_st, p_gen, p_ng,
            jqz_generic, jqz_twst_point, jpy_generic, jpy_st, jpy_bi_point,
            jpy_bii_point, jpy_biii_point, jb_generic, jb_pole_chi1,
            jb_pole_chi2, jb_pole_product, jb_pole_ratio]


def gsp4_corpus(count: int, seed: int = 20444,
                include_sc: bool = True) -> list[rd.GSp4Rep]:
    rng = Random(seed)
    builders = _gsp4_builders()
    if not include_sc:
        builders = builders[3:]
    out = []
    i = 0
    while len(out) < count:
        w = make_world(rng)
        out.append(builders[i % len(builders)](rng, w))
        i += 1
    return out


# ---------------------------------------------------------------------------
# unramified Borel triples


def unramified_triples(count: int, seed: int = 20666):
    rng = Random(seed)
    out = []
    for i in range(count):
        w = make_world(rng)
        nu = w.ctx.norm

        def ur(allow_norm=True):
            c = w.ctx.trivial()
            for a in w.unram:
                if rng.random() < 0.4:
                    c = c * a ** rng.randint(1, 2)
            if allow_norm:
                c = c * nu(rand_exponent(rng))
            return c

        mode = i % 4
        if mode == 0:
            triple = (ur(), ur(), ur())
        elif mode == 1:  # boundary: second slot at |-|^{-1}
            triple = (ur(), nu(-1), ur())
        elif mode == 2:  # reducible: product of the first two slots at |-|
            u = ur(allow_norm=False)
            triple = (u * nu(1), u.inv(), ur())
        else:            # unitary (irreducible full induced)
            triple = (ur(allow_norm=False), ur(allow_norm=False), ur())
        out.append(triple)
    return out
