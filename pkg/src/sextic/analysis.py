"""The full analysis of one sextic: validation, normal form, singularities,
verdict with witness, and the conic-bundle numerics."""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass, field

from .algebra.poly import WPolynomial
from .conic import (
    CONIC,
    PAPER,
    STANDARD_IDENTITIES,
    CurveSmoothness,
    DiscriminantCurve,
    IntersectionLedger,
    curve_genus_adjunction,
    curve_smoothness,
    discriminant,
    germ_tag,
    ledger_eval_product,
    prym_dimension,
)
from .errors import GeometryObstruction, UnsupportedField
from .normal_form import EQ3, NormalForm, classify_case, complete_square, normalize
from .singularities import (
    DEFAULT_JET_ORDER,
    HalfQuotient,
    SingularityProfile,
    WorseGorenstein,
    build_profile,
    classify_gorenstein,
    eq3_profile_from_cubic,
    gorenstein_singular_points,
    non_gorenstein_profile,
)
from .verdict import (
    Flags,
    NonRational,
    Rational,
    RationalityWitness,
    Undetermined,
    build_witness,
    decide,
    verify_witness,
)
from .wps import RING, QuasiSmoothness, Sextic, WPSPoint, is_quasi_smooth, validate


@dataclass(frozen=True)
class DiscriminantSummary:
    paper: DiscriminantCurve
    conic: DiscriminantCurve
    smoothness: CurveSmoothness
    germ: str
    genus: int | None = None
    prym_dimension: int | None = None
    cover_genus: int | None = None


@dataclass
class AnalysisReport:
    input: str
    flags: Flags
    quasi_smooth: QuasiSmoothness | None = None
    case: str | None = None
    normal_form: NormalForm | None = None
    profile: SingularityProfile | None = None
    verdict: object = None
    witness_verified: bool | None = None
    discriminant: DiscriminantSummary | None = None
    ledger: tuple = ()
    warnings: list = field(default_factory=list)
    timing: float | None = None


def ledger_table(L: IntersectionLedger = IntersectionLedger()) -> tuple:
    """The three standard identities evaluated against ``L``."""
    return tuple(
        (name, ledger_eval_product(L, *factors), expected)
        for name, factors, expected in STANDARD_IDENTITIES
    )


def singularity_profile(X: Sextic, nf: NormalForm | None, jet_order: int = DEFAULT_JET_ORDER):
    """Profile of X from its normal form (or, failing that, from the roots of c)."""
    comp = complete_square(X)
    G = comp.poly - RING.gen("x3") ** 2
    if nf is not None:
        ng = non_gorenstein_profile(nf)
    else:
        ng = eq3_profile_from_cubic(G)
    gp = gorenstein_singular_points(G, comp.forward)
    gor = [classify_gorenstein(G, p, jet_order) for p in gp]
    return build_profile(ng, gor)


def summarize_discriminant(nf: NormalForm) -> DiscriminantSummary:
    paper = discriminant(nf, PAPER)
    conic = discriminant(nf, CONIC)
    smooth = curve_smoothness(conic.D)
    genus = prym = cover = None
    if smooth.smooth:
        genus = curve_genus_adjunction(8, "1/2", -4)
        pd = prym_dimension(genus)
        prym, cover = pd.dimension, pd.cover_genus
    return DiscriminantSummary(paper, conic, smooth, germ_tag(conic.D), genus, prym, cover)


def analyze(
    F: WPolynomial,
    flags: Flags = Flags(),
    jet_order: int = DEFAULT_JET_ORDER,
    with_discriminant: bool = True,
    timing: bool = False,
) -> AnalysisReport:
    """Run the whole pipeline on F.

    Input errors (:class:`InputRejected`) propagate. A sextic outside the
    scope of the classification yields an Undetermined verdict naming the
    obstruction.
    """
    start = time.perf_counter()
    X = validate(F)
    report = AnalysisReport(str(X.F), flags)
    report.ledger = ledger_table()
    try:
        report.quasi_smooth = is_quasi_smooth(X)
        comp = complete_square(X)
        report.case = classify_case(comp.poly)
        try:
            nf = normalize(X)
        except UnsupportedField as exc:
            if report.case != EQ3:
                raise
            nf = None
            report.warnings.append(f"normal form not computed: {exc}")
        report.normal_form = nf
        report.profile = singularity_profile(X, nf, jet_order)
        verdict = decide(report.profile, flags)
        if isinstance(verdict, Rational):
            witness = build_witness(nf)
            report.witness_verified = verify_witness(witness, X)
            if not report.witness_verified:
                raise AssertionError("rationality witness failed verification")
            verdict = dataclasses.replace(verdict, witness=witness)
        report.verdict = verdict
        if nf is not None and with_discriminant:
            report.discriminant = summarize_discriminant(nf)
            if not report.discriminant.smoothness.decided:
                report.warnings.append(report.discriminant.smoothness.detail)
    except GeometryObstruction as exc:
        report.verdict = Undetermined((f"{type(exc).__name__}: {exc}",))
    if timing:
        report.timing = time.perf_counter() - start
    return report


def analyze_sextic(X: Sextic, **kwargs) -> AnalysisReport:
    return analyze(X.F, **kwargs)


# -- Eckardt family ----------------------------------------------------------------


@dataclass(frozen=True)
class EckardtCheck:
    ok: bool
    profile: SingularityProfile | None
    detail: str = ""


ECKARDT_POINT = WPSPoint((1, 0, 0, 0, 0))


def eckardt_profile(X: Sextic, jet_order: int = DEFAULT_JET_ORDER) -> EckardtCheck:
    """Check the expected singularities of a general homogenized Eckardt cubic:
    three points 1/2(1,1,1) and a non-A_n Gorenstein point at (1,0,0,0,0)."""
    comp = complete_square(X)
    classify_case(comp.poly)
    try:
        nf = normalize(X)
    except UnsupportedField:
        nf = None
    profile = singularity_profile(X, nf, jet_order)
    half = sum(r.count for r in profile.non_gorenstein if isinstance(r.kind, HalfQuotient))
    worse = [
        r for r in profile.gorenstein
        if isinstance(r.kind, WorseGorenstein) and r.point == ECKARDT_POINT
    ]
    others = [r for r in profile.gorenstein if r.point != ECKARDT_POINT]
    ok = half == 3 and profile.non_gorenstein_total() == 3 and len(worse) == 1 and not others
    detail = f"{half} points 1/2(1,1,1); {len(worse)} worse point at (1,0,0,0,0); {len(others)} others"
    return EckardtCheck(ok, profile, detail)


__all__ = [
    "AnalysisReport",
    "DiscriminantSummary",
    "EckardtCheck",
    "NonRational",
    "Rational",
    "RationalityWitness",
    "Undetermined",
    "analyze",
    "analyze_sextic",
    "eckardt_profile",
    "ledger_table",
    "singularity_profile",
    "summarize_discriminant",
]
