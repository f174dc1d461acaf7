"""One-parameter deformation families and the equimultiplicity checkers.

A family F(t, z) = f0(z) + sum_j t^j g_j(z) is analyzed in two slices: at
t = 0 (exact) and at generic t (over the rational function field, with every
generic value cross-checked at two random rational specializations of t).
The theorem checkers record each hypothesis with a HOLDS / FAILS /
USER_ASSERTED / NOT_CHECKED status and only emit a conclusion licensed by
those statuses; user assertions are always listed, never silently mixed
with computed facts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .engine import DEFAULT_BUDGET, Ideal
from .errors import (ContextError, DegenerateInputError, InternalCheckError,
                     MathRefusal, NonIsolatedError, NonReducedError,
                     UnluckySpecializationError, UsageError)
from .invariants import (InvariantRecord, WeightSystem, detect_weights,
                         draw_distinct_rationals, draw_rational, germ_record,
                         milnor_number, order_at_origin)
from .poly import (Coefficient, Polynomial, multivariate_gcd, render,
                   require_reduced)

ZERO = "ZERO"
GENERIC = "GENERIC"

HOLDS = "HOLDS"
FAILS = "FAILS"
USER_ASSERTED = "USER_ASSERTED"
NOT_CHECKED = "NOT_CHECKED"

EQUIMULTIPLE = "EQUIMULTIPLE"
NOT_EQUIMULTIPLE = "NOT_EQUIMULTIPLE"
NOT_TOPOLOGICALLY_V_EQUISINGULAR = "NOT_TOPOLOGICALLY_V_EQUISINGULAR"
INCONCLUSIVE = "INCONCLUSIVE"


# ---------------------------------------------------------------------------
# decomposition

@dataclass(frozen=True)
class Family:
    parameter: str
    full: Polynomial                 # over QQ(t)
    base: Polynomial                 # the t = 0 member, over QQ
    deformation: tuple[tuple[int, Polynomial], ...]   # (j, g_j), j >= 1
    reduced_witnesses: tuple[Fraction, Fraction]

    def member(self, value: Fraction) -> Polynomial:
        return self.full.specialize_parameter(self.parameter, value)


def decompose_family(f: Polynomial, rng: Random,
                     budget: int = DEFAULT_BUDGET) -> Family:
    """Split F = f0 + sum t^j g_j, checking that the origin stays on every
    member and that f0 and two random members are reduced."""
    ctx = f.context
    if ctx.nparams != 1:
        raise ContextError("a family needs exactly one declared parameter")
    t = ctx.parameters[0]
    if f.is_zero():
        raise DegenerateInputError("the zero family")
    if f.constant_coefficient():
        raise DegenerateInputError(
            f"family does not vanish at the origin for all {t}")

    plain = ctx.without_parameter(t)
    layers: dict[int, dict] = {}
    for m, c in f.terms.items():
        if not c.den_is_one:
            raise DegenerateInputError(
                "family coefficients must be polynomial in the parameter")
        for (j,), q in c.num.items():
            layers.setdefault(j, {})[m] = q
    members: dict[int, Polynomial] = {
        j: Polynomial.from_dict(
            plain, {m: Coefficient.from_fraction(q, 0) for m, q in terms.items()})
        for j, terms in sorted(layers.items())}

    base = members.get(0, Polynomial.zero(plain))
    if base.is_zero():
        raise DegenerateInputError(
            f"the {t} = 0 member is the zero polynomial")
    require_reduced(base)
    deformation = tuple((j, g) for j, g in sorted(members.items()) if j >= 1)

    rebuilt = Polynomial.zero(ctx)
    for j, g in [(0, base), *deformation]:
        embedded = Polynomial(ctx, {m: c.embed(1, ()).mul_param_monomial((j,))
                                    for m, c in g.terms.items()})
        rebuilt = rebuilt + embedded
    if rebuilt != f:
        raise InternalCheckError("family decomposition does not reconstruct")

    witnesses = draw_distinct_rationals(rng, 2)
    for tau in witnesses:
        member = f.specialize_parameter(t, tau)
        try:
            require_reduced(member)
        except NonReducedError as exc:
            raise NonReducedError(
                f"family member at {t} = {tau} is not reduced "
                f"(repeated factor {exc.witness})", witness=exc.witness) from exc
    return Family(t, f, base, deformation, (witnesses[0], witnesses[1]))


# ---------------------------------------------------------------------------
# upper deformations

@dataclass(frozen=True)
class UpperReport:
    upper: bool
    degree: int
    offenders: tuple[tuple[int, tuple[int, ...], int], ...]  # (j, expo, wdeg)


def is_upper(fam: Family, w: WeightSystem) -> UpperReport:
    """True when every monomial of every deformation term has weighted
    degree at least the weighted degree of the base."""
    for m in fam.base.terms:
        if w.weighted_degree(m) != w.degree:
            raise DegenerateInputError(
                "weight system does not make the base weighted homogeneous")
    offenders = []
    for j, g in fam.deformation:
        for m in sorted(g.terms, key=lambda e: (sum(e), e)):
            wdeg = w.weighted_degree(m)
            if wdeg < w.degree:
                offenders.append((j, m, wdeg))
    return UpperReport(not offenders, w.degree, tuple(offenders))


# ---------------------------------------------------------------------------
# slice records

@dataclass(frozen=True)
class SliceRecord:
    where: str
    record: InvariantRecord
    t_witnesses: tuple[Fraction, ...]


def _comparable(rec: InvariantRecord):
    return (rec.order, rec.lambda0, rec.lambda1, rec.gamma1, rec.polar_ratio,
            rec.euler_reduced, rec.slice_milnor,
            rec.intersection_with_hypersurface, rec.polar_empty,
            rec.lambda_k_zero)


def invariants_at(fam: Family, where: str, rng: Random,
                  budget: int = DEFAULT_BUDGET) -> SliceRecord:
    """The full invariant record of one slice.  GENERIC works over the
    fraction field and re-derives every invariant at two random rational
    parameter values; a disagreeing draw is redrawn once and then refused."""
    if where == ZERO:
        return SliceRecord(ZERO, germ_record(fam.base, rng, budget), ())
    if where != GENERIC:
        raise UsageError(f"unknown slice {where!r}")
    rec = germ_record(fam.full, rng, budget)
    expected = _comparable(rec)

    def agrees(tau: Fraction) -> bool:
        try:
            spec = germ_record(fam.member(tau), rng, budget)
        except MathRefusal:
            return False
        return _comparable(spec) == expected

    witnesses = draw_distinct_rationals(rng, 2)
    for k in range(2):
        if agrees(witnesses[k]):
            continue
        retry = draw_rational(rng)
        while retry in witnesses:
            retry = draw_rational(rng)
        witnesses[k] = retry
        if not agrees(retry):
            raise UnluckySpecializationError(
                f"invariants at {fam.parameter} = {retry} disagree with "
                f"the generic values")
    return SliceRecord(GENERIC, rec, tuple(witnesses))


# ---------------------------------------------------------------------------
# equimultiplicity (the ground truth the theorems predict)

@dataclass(frozen=True)
class EquimultiplicityResult:
    order_zero: int
    order_generic: int

    @property
    def verdict(self) -> str:
        return EQUIMULTIPLE if self.order_zero == self.order_generic \
            else NOT_EQUIMULTIPLE

    @property
    def equimultiple(self) -> bool:
        return self.order_zero == self.order_generic


def is_equimultiple(fam: Family) -> EquimultiplicityResult:
    """Order of the base versus the generic order (minimal total z-degree of
    any term of F over the fraction field)."""
    return EquimultiplicityResult(order_at_origin(fam.base),
                                  fam.full.min_total_degree())


# ---------------------------------------------------------------------------
# augmentation table: Milnor numbers of f + z1^j recover the Le numbers

@dataclass(frozen=True)
class IlmRow:
    j: int
    mu: int | None
    predicted: int            # lambda0 + (j-1) * lambda1
    residual: int | None      # mu - predicted
    residual_sum: int | None  # (mu + mu_slice) - ((gamma1+lambda0) + j*lambda1)
    error: str | None


@dataclass(frozen=True)
class IlmTable:
    where: str
    rows: tuple[IlmRow, ...]
    slice_milnor: int
    inferred: tuple[int, int, int] | None   # (lambda0, lambda1, gamma1+lambda0)
    expected: tuple[int, int, int]
    t_witnesses: tuple[Fraction, ...] = ()

    @property
    def passed(self) -> bool:
        return (all(r.error is None and r.residual == 0 and r.residual_sum == 0
                    for r in self.rows)
                and self.inferred == self.expected)


def default_j_values(lambda0_value: int) -> tuple[int, ...]:
    start = 2 + lambda0_value
    return tuple(range(start, start + 4))


def _augmented_milnor(g: Polynomial, j: int, budget: int) -> int | None:
    """mu(g + z1^j), or None when the augmented germ stays non-isolated."""
    ctx = g.context
    z1 = Polynomial.variable(ctx, ctx.variables[0])
    try:
        return milnor_number(g + z1 ** j, budget=budget)
    except NonIsolatedError:
        return None


def verify_ilm(fam: Family, where: str, slice_rec: SliceRecord, rng: Random,
               j_values: tuple[int, ...] | None = None,
               budget: int = DEFAULT_BUDGET) -> IlmTable:
    """mu(f_t + z1^j) for each j against the two augmentation identities
    mu = lambda0 + (j-1) lambda1 and mu + mu_slice = (gamma1+lambda0) +
    j lambda1; also re-derives (lambda0, lambda1, gamma1+lambda0) from the
    table alone and compares with the direct record.

    At GENERIC each mu is evaluated at two random rational parameter values
    (working over the fraction field itself is hopeless here: the augmented
    Jacobian colengths drag enormous coefficients in t around).  Both draws
    must agree; one joint redraw is allowed before refusing."""
    rec = slice_rec.record
    if j_values is None:
        j_values = default_j_values(rec.lambda0)
    threshold = 2 + rec.lambda0
    bad = [j for j in j_values if j < threshold]
    if bad:
        raise UsageError(
            f"j values {bad} below the augmentation threshold 2 + lambda0 = "
            f"{threshold}")
    if where not in (ZERO, GENERIC):
        raise UsageError(f"unknown slice {where!r}")

    mu_slice = rec.slice_milnor
    expected = (rec.lambda0, rec.lambda1, rec.gamma1 + rec.lambda0)
    witnesses: tuple[Fraction, ...] = ()

    if where == ZERO:
        def mu_of(j: int) -> int | None:
            return _augmented_milnor(fam.base, j, budget)
    else:
        witnesses = tuple(draw_distinct_rationals(rng, 2))

        def mu_of(j: int) -> int | None:
            nonlocal witnesses
            pair = [_augmented_milnor(fam.member(w), j, budget)
                    for w in witnesses]
            if pair[0] != pair[1]:
                witnesses = tuple(draw_distinct_rationals(rng, 2))
                pair = [_augmented_milnor(fam.member(w), j, budget)
                        for w in witnesses]
                if pair[0] != pair[1]:
                    axis = fam.base.context.variables[0]
                    raise UnluckySpecializationError(
                        f"mu(f + {axis}^{j}) disagrees at "
                        f"{fam.parameter} = {witnesses[0]} and "
                        f"{fam.parameter} = {witnesses[1]}")
            return pair[0]

    rows = []
    values: dict[int, int] = {}
    for j in sorted(j_values):
        predicted = rec.lambda0 + (j - 1) * rec.lambda1
        mu = mu_of(j)
        if mu is None:
            rows.append(IlmRow(j, None, predicted, None, None,
                               "augmented germ is not an isolated singularity"))
            continue
        values[j] = mu
        rows.append(IlmRow(j, mu, predicted, mu - predicted,
                           (mu + mu_slice) - (expected[2] + j * rec.lambda1),
                           None))

    inferred = None
    js = sorted(values)
    if len(js) >= 2:
        slopes = set()
        for a, b in zip(js, js[1:]):
            delta, rem = divmod(values[b] - values[a], b - a)
            slopes.add(None if rem else delta)
        if len(slopes) == 1 and None not in slopes:
            lam1 = slopes.pop()
            lam0 = values[js[0]] - (js[0] - 1) * lam1
            total = values[js[0]] + mu_slice - js[0] * lam1
            inferred = (lam0, lam1, total)
    return IlmTable(where, tuple(rows), mu_slice, inferred, expected, witnesses)


# ---------------------------------------------------------------------------
# irreducibility evidence (heuristic, never a certificate)

@dataclass(frozen=True)
class EvidenceReport:
    verdict: str                 # SUPPORTING | COUNTER
    details: tuple[str, ...]
    certificate: str = "NOT_A_CERTIFICATE"


def _distinct_prime_summary(g: Polynomial) -> tuple[int, list[str]]:
    """(number of distinct prime factors found, human notes); counts are a
    lower bound obtained by monomial-content splitting, square-free
    reduction, and a rational-root scan on univariate factors."""
    ctx = g.context
    notes: list[str] = []
    primes = 0
    rest = g

    # split off coordinate factors
    for v in ctx.variables:
        var = Polynomial.variable(ctx, v)
        hits = 0
        while True:
            q = rest.divide_exact(var)
            if q is None:
                break
            rest = q
            hits += 1
        if hits:
            primes += 1
            notes.append(f"coordinate factor {v}^{hits}")

    if rest.total_degree() == 0:
        return primes, notes

    involved = [v for v in ctx.variables if rest.involves(v)]
    if len(involved) == 1:
        v = involved[0]
        roots = _rational_roots(rest, v)
        if roots:
            primes += len(roots)
            notes.append("rational roots " + ", ".join(str(r) for r in sorted(roots)))
            for r in sorted(roots):
                lin = Polynomial.variable(ctx, v) - Polynomial.constant(ctx, r)
                while True:
                    q = rest.divide_exact(lin)
                    if q is None:
                        break
                    rest = q
            if rest.total_degree() > 0:
                primes += 1
                notes.append(f"rootless cofactor {render(rest)}")
        else:
            primes += 1
            notes.append(f"no rational root in factor {render(rest)}")
        return primes, notes

    # multivariate: look for a repeated factor shared with a partial
    for v in involved:
        d = rest.partial(v)
        if d.is_zero():
            continue
        common = multivariate_gcd(rest, d)
        if common.total_degree() > 0:
            probe = rest
            while True:
                q = probe.divide_exact(common)
                if q is None:
                    break
                probe = q
            if probe.total_degree() == 0:
                primes += 1
                notes.append(f"prime power of {render(common)}")
            else:
                primes += 2
                notes.append(
                    f"splits as {render(common)} times {render(probe)} "
                    "(up to multiplicity)")
            return primes, notes
    primes += 1
    notes.append(f"no factorization found for {render(rest)}")
    return primes, notes


def _rational_roots(g: Polynomial, v: str) -> set[Fraction]:
    """Rational roots of a univariate polynomial with rational coefficients
    (candidates p/q with p | constant term, q | leading term); empty when
    coefficients involve parameters."""
    ctx = g.context
    i = ctx.var_index(v)
    zkey = (0,) * ctx.nparams
    coeffs: dict[int, Fraction] = {}
    for m, c in g.terms.items():
        if not c.den_is_one or any(k != zkey for k in c.num):
            return set()
        coeffs[m[i]] = c.num[zkey]
    deg = max(coeffs)
    low = min(coeffs)
    if low > 0:
        return set()  # coordinate content is removed by the caller
    lead = coeffs[deg]
    const = coeffs[low]
    roots: set[Fraction] = set()
    for p in _divisors(const.numerator * const.denominator):
        for q in _divisors(lead.numerator * lead.denominator):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and \
                        sum(c * cand ** k for k, c in coeffs.items()) == 0:
                    roots.add(cand)
    return roots


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def irreducibility_evidence(ideal: Ideal) -> EvidenceReport:
    """Heuristic evidence about irreducibility of the variety the ideal
    presents: SUPPORTING when each generator shows a single prime factor,
    COUNTER when some generator visibly splits.  Never a certificate."""
    details = []
    verdict = "SUPPORTING"
    for g in ideal.generators:
        count, notes = _distinct_prime_summary(g)
        details.append(f"{render(g)}: " + "; ".join(notes))
        if count > 1:
            verdict = "COUNTER"
    return EvidenceReport(verdict, tuple(details))


# ---------------------------------------------------------------------------
# theorem verdicts

@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    status: str
    detail: str


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    hypotheses: tuple[HypothesisCheck, ...]
    conclusion: str
    notes: tuple[str, ...] = ()

    @property
    def user_asserted(self) -> tuple[str, ...]:
        return tuple(h.name for h in self.hypotheses if h.status == USER_ASSERTED)


@dataclass(frozen=True)
class FamilyAnalysis:
    family: Family
    zero: SliceRecord | None
    zero_failure: str | None
    generic: SliceRecord | None
    generic_failure: str | None
    equimultiplicity: EquimultiplicityResult
    weights: WeightSystem | None
    upper: UpperReport | None


def analyze_family(f: Polynomial, rng: Random,
                   budget: int = DEFAULT_BUDGET) -> FamilyAnalysis:
    fam = decompose_family(f, rng, budget)
    zero = zero_failure = None
    try:
        zero = invariants_at(fam, ZERO, rng, budget)
    except MathRefusal as exc:
        zero_failure = f"{type(exc).__name__}: {exc}"
    generic = generic_failure = None
    try:
        generic = invariants_at(fam, GENERIC, rng, budget)
    except MathRefusal as exc:
        generic_failure = f"{type(exc).__name__}: {exc}"
    weights = detect_weights(fam.base)
    upper = is_upper(fam, weights) if weights is not None else None
    return FamilyAnalysis(fam, zero, zero_failure, generic, generic_failure,
                          is_equimultiple(fam), weights, upper)


def _line_singularity_check(an: FamilyAnalysis) -> HypothesisCheck:
    t = an.family.parameter
    if an.zero is not None and an.generic is not None:
        axis = an.family.base.context.variables[0]
        return HypothesisCheck(
            "line_singularities_at_both_slices", HOLDS,
            f"singular locus is the {axis}-axis at {t} = 0 and generically")
    parts = []
    if an.zero is None:
        parts.append(f"{t} = 0: {an.zero_failure}")
    if an.generic is None:
        parts.append(f"generic {t}: {an.generic_failure}")
    return HypothesisCheck("line_singularities_at_both_slices", FAILS,
                           "; ".join(parts))


def _weights_check(an: FamilyAnalysis) -> HypothesisCheck:
    if an.weights is None:
        return HypothesisCheck("base_weighted_homogeneous", FAILS,
                               "no positive weight system fits the base")
    w = an.weights
    return HypothesisCheck(
        "base_weighted_homogeneous", HOLDS,
        f"weights {w.weights}, degree {w.degree}"
        + (f", free variables {w.free_variables}" if w.free_variables else ""))


def _divisibility_check(an: FamilyAnalysis) -> HypothesisCheck:
    if an.weights is None:
        return HypothesisCheck("smallest_weight_divides_degree", NOT_CHECKED,
                               "no weight system")
    w = an.weights
    w0 = w.smallest_weight
    if w.degree % w0 == 0:
        return HypothesisCheck("smallest_weight_divides_degree", HOLDS,
                               f"{w0} divides {w.degree}")
    return HypothesisCheck("smallest_weight_divides_degree", FAILS,
                           f"{w0} does not divide {w.degree}")


def _threshold_check(an: FamilyAnalysis) -> HypothesisCheck:
    name = "degree_ratio_meets_augmentation_threshold"
    if an.weights is None or an.zero is None:
        return HypothesisCheck(
            name, NOT_CHECKED,
            f"needs weights and the {an.family.parameter} = 0 record")
    ratio = Fraction(an.weights.degree, an.weights.smallest_weight)
    bound = 2 + an.zero.record.lambda0
    if ratio >= bound:
        return HypothesisCheck(name, HOLDS, f"d/w_min = {ratio} >= {bound}")
    return HypothesisCheck(name, FAILS, f"d/w_min = {ratio} < {bound}")


def _constancy_check(an: FamilyAnalysis, fields: tuple[str, ...],
                     name: str) -> HypothesisCheck:
    if an.zero is None or an.generic is None:
        return HypothesisCheck(name, NOT_CHECKED, "needs both slice records")
    diffs = []
    for field_name in fields:
        a = getattr(an.zero.record, field_name)
        b = getattr(an.generic.record, field_name)
        if a != b:
            diffs.append(f"{field_name}: {a} vs {b}")
    if diffs:
        return HypothesisCheck(name, FAILS, "; ".join(diffs))
    vals = ", ".join(f"{f} = {getattr(an.zero.record, f)}" for f in fields)
    return HypothesisCheck(name, HOLDS, vals)


def _sum_constancy_check(an: FamilyAnalysis) -> HypothesisCheck:
    name = "polar_plus_le_intersection_constant"
    if an.zero is None or an.generic is None:
        return HypothesisCheck(name, NOT_CHECKED, "needs both slice records")
    a = an.zero.record.gamma1 + an.zero.record.lambda0
    b = an.generic.record.gamma1 + an.generic.record.lambda0
    if a == b:
        return HypothesisCheck(name, HOLDS, f"gamma1 + lambda0 = {a}")
    return HypothesisCheck(name, FAILS, f"gamma1 + lambda0: {a} vs {b}")


def _assertion_check(name: str, asserted: bool, detail_on: str,
                     detail_off: str) -> HypothesisCheck:
    if asserted:
        return HypothesisCheck(name, USER_ASSERTED, detail_on)
    return HypothesisCheck(name, NOT_CHECKED, detail_off)


def _all_hold(checks: list[HypothesisCheck], allow_asserted: bool = False) -> bool:
    ok = {HOLDS, USER_ASSERTED} if allow_asserted else {HOLDS}
    return all(c.status in ok for c in checks)


def check_mt2(an: FamilyAnalysis, budget: int = DEFAULT_BUDGET) -> TheoremVerdict:
    """Fully computed sufficient condition for equimultiplicity: line
    singularities, weighted homogeneous base, smallest weight divides the
    degree, constant Le numbers, and the degree ratio meeting the
    augmentation threshold."""
    h1 = _line_singularity_check(an)
    h2 = _weights_check(an)
    h3 = _divisibility_check(an)
    h4 = _constancy_check(an, ("lambda0", "lambda1"), "le_numbers_constant")
    h5 = _threshold_check(an)
    checks = [h1, h2, h3, h4, h5]
    notes = []

    if an.weights is not None and h3.status == HOLDS \
            and an.weights.smallest_index == 0:
        notes.append(_axis_weight_note(an, budget))
    if h4.status == HOLDS and h5.status == HOLDS:
        t = an.family.parameter
        notes.append(
            f"constant lambda0 upgrades the threshold to every small {t}: "
            f"d/w_min >= 2 + lambda0(f_{t}) for all small {t}")

    if _all_hold(checks):
        if not an.equimultiplicity.equimultiple:
            raise InternalCheckError(
                "equimultiplicity theorem hypotheses verified but computed "
                "orders differ — this is a bug")
        return TheoremVerdict("mt2", tuple(checks), EQUIMULTIPLE, tuple(notes))
    return TheoremVerdict("mt2", tuple(checks), INCONCLUSIVE, tuple(notes))


def _axis_weight_note(an: FamilyAnalysis, budget: int) -> str:
    """When the smallest weight sits on the axis variable, the weighted
    augmentation z_min^{d/w_min} coincides with the axis form z_axis^j;
    report the Milnor numbers of both slices' augmented germs rather than
    privileging one reading.  The generic side is evaluated at the family's
    two stored witness values, which must agree."""
    w = an.weights
    e = w.degree // w.smallest_weight
    fam = an.family
    axis = fam.base.context.variables[0]
    t = fam.parameter
    note = (f"smallest weight belongs to the axis variable {axis}; the two "
            f"augmentation forms coincide at exponent {e}")
    if e < 2:
        return note + " (exponent below 2: no Milnor number to report)"

    def describe(mu):
        return "not isolated" if mu is None else str(mu)

    try:
        note += (f"; mu at {t} = 0 with {axis}^{e} added = "
                 f"{describe(_augmented_milnor(fam.base, e, budget))}")
        pair = [_augmented_milnor(fam.member(tau), e, budget)
                for tau in fam.reduced_witnesses]
        if pair[0] == pair[1]:
            note += (f"; mu at generic {t} with {axis}^{e} added = "
                     f"{describe(pair[0])}")
        else:
            note += (f"; mu at generic {t} with {axis}^{e} added: "
                     "specializations disagree")
    except MathRefusal as exc:
        note += f"; augmented Milnor numbers unavailable ({exc})"
    return note


def check_mt3(an: FamilyAnalysis, irreducible_asserted: bool,
              evidence: EvidenceReport | None = None) -> TheoremVerdict:
    """Equimultiplicity from constant lambda1 and constant gamma1+lambda0,
    given weighted homogeneity with the divisibility condition and an
    asserted irreducible generic polar curve."""
    h1 = _line_singularity_check(an)
    w_ok = an.weights is not None
    div = _divisibility_check(an)
    if w_ok and div.status == HOLDS:
        h2 = HypothesisCheck("weights_with_divisibility", HOLDS,
                             f"weights {an.weights.weights}, degree "
                             f"{an.weights.degree}; {div.detail}")
    elif not w_ok:
        h2 = HypothesisCheck("weights_with_divisibility", FAILS,
                             "no positive weight system fits the base")
    else:
        h2 = HypothesisCheck("weights_with_divisibility", div.status, div.detail)
    lam1 = _constancy_check(an, ("lambda1",), "transverse_milnor_constant")
    tot = _sum_constancy_check(an)
    if lam1.status == HOLDS and tot.status == HOLDS:
        h3 = HypothesisCheck("le_invariants_constant", HOLDS,
                             f"{lam1.detail}; {tot.detail}")
    elif FAILS in (lam1.status, tot.status):
        h3 = HypothesisCheck("le_invariants_constant", FAILS,
                             "; ".join(c.detail for c in (lam1, tot)
                                       if c.status == FAILS))
    else:
        h3 = HypothesisCheck("le_invariants_constant", NOT_CHECKED,
                             "needs both slice records")
    detail_on = "irreducibility of the generic polar curve asserted by the user"
    if evidence is not None:
        detail_on += f" (heuristic evidence: {evidence.verdict})"
    h4 = _assertion_check("generic_polar_curve_irreducible",
                          irreducible_asserted, detail_on,
                          "no irreducibility assertion supplied")
    checks = [h1, h2, h3, h4]
    notes = []
    if _all_hold(checks, allow_asserted=True):
        if not an.equimultiplicity.equimultiple:
            notes.append(
                "computed orders contradict the conclusion; the asserted "
                "irreducibility must fail for this family")
            return TheoremVerdict("mt3", tuple(checks), INCONCLUSIVE,
                                  tuple(notes))
        return TheoremVerdict("mt3", tuple(checks), EQUIMULTIPLE, tuple(notes))
    return TheoremVerdict("mt3", tuple(checks), INCONCLUSIVE, tuple(notes))


def check_corollaries(an: FamilyAnalysis, equisingular_asserted: bool,
                      irreducible_asserted: bool,
                      evidence: EvidenceReport | None = None,
                      budget: int = DEFAULT_BUDGET
                      ) -> tuple[TheoremVerdict, TheoremVerdict]:
    """The two corollaries that consume an asserted topological
    V-equisingularity, plus their contrapositives: when the computed
    hypotheses hold and the family is not equimultiple, the family cannot be
    topologically V-equisingular."""
    equi = an.equimultiplicity
    asserted_detail = "topological V-equisingularity asserted by the user"
    not_asserted = "no equisingularity assertion supplied"

    # corollary with the augmentation threshold
    c2_computed = [_line_singularity_check(an), _weights_check(an),
                   _divisibility_check(an), _threshold_check(an)]
    c2_assert = _assertion_check("topologically_V_equisingular",
                                 equisingular_asserted, asserted_detail,
                                 not_asserted)
    notes2 = []
    if _all_hold(c2_computed):
        if not equi.equimultiple:
            notes2.append(
                f"orders {equi.order_zero} vs {equi.order_generic}: "
                "the family is not equimultiple, so it cannot be "
                "topologically V-equisingular")
            if equisingular_asserted:
                notes2.append("the user assertion of equisingularity is "
                              "thereby contradicted")
            cmt2 = TheoremVerdict("cmt2", tuple(c2_computed + [c2_assert]),
                                  NOT_TOPOLOGICALLY_V_EQUISINGULAR,
                                  tuple(notes2))
        elif equisingular_asserted:
            cmt2 = TheoremVerdict("cmt2", tuple(c2_computed + [c2_assert]),
                                  EQUIMULTIPLE, tuple(notes2))
        else:
            cmt2 = TheoremVerdict("cmt2", tuple(c2_computed + [c2_assert]),
                                  INCONCLUSIVE, tuple(notes2))
    else:
        cmt2 = TheoremVerdict("cmt2", tuple(c2_computed + [c2_assert]),
                              INCONCLUSIVE, tuple(notes2))

    # corollary with constant gamma1 and the irreducible polar curve
    w_ok = an.weights is not None
    div = _divisibility_check(an)
    if w_ok and div.status == HOLDS:
        wd = HypothesisCheck("weights_with_divisibility", HOLDS,
                             f"weights {an.weights.weights}, degree "
                             f"{an.weights.degree}; {div.detail}")
    elif not w_ok:
        wd = HypothesisCheck("weights_with_divisibility", FAILS,
                             "no positive weight system fits the base")
    else:
        wd = HypothesisCheck("weights_with_divisibility", div.status, div.detail)
    gam = _constancy_check(an, ("gamma1",), "polar_number_constant")
    c3_computed = [_line_singularity_check(an), wd, gam]
    irr_detail = "irreducibility of the generic polar curve asserted by the user"
    if evidence is not None:
        irr_detail += f" (heuristic evidence: {evidence.verdict})"
    c3_irr = _assertion_check("generic_polar_curve_irreducible",
                              irreducible_asserted, irr_detail,
                              "no irreducibility assertion supplied")
    c3_assert = _assertion_check("topologically_V_equisingular",
                                 equisingular_asserted, asserted_detail,
                                 not_asserted)
    notes3 = []
    hyps3 = tuple(c3_computed + [c3_irr, c3_assert])
    if _all_hold(c3_computed) and c3_irr.status == USER_ASSERTED:
        if not equi.equimultiple:
            notes3.append(
                f"orders {equi.order_zero} vs {equi.order_generic}: not "
                "equimultiple, and with the asserted irreducible polar curve "
                "the family cannot be topologically V-equisingular")
            if equisingular_asserted:
                notes3.append("the user assertion of equisingularity is "
                              "thereby contradicted")
            cmt3 = TheoremVerdict("cmt3", hyps3,
                                  NOT_TOPOLOGICALLY_V_EQUISINGULAR,
                                  tuple(notes3))
        elif equisingular_asserted:
            cmt3 = TheoremVerdict("cmt3", hyps3, EQUIMULTIPLE, tuple(notes3))
        else:
            cmt3 = TheoremVerdict("cmt3", hyps3, INCONCLUSIVE, tuple(notes3))
    else:
        cmt3 = TheoremVerdict("cmt3", hyps3, INCONCLUSIVE, tuple(notes3))
    return cmt2, cmt3


def check_homogeneous_base(an: FamilyAnalysis,
                           equisingular_asserted: bool) -> TheoremVerdict:
    """For a homogeneous base, either constant Le numbers or an asserted
    topological V-equisingularity forces equimultiplicity; contrapositively a
    non-equimultiple such family can be neither."""
    h1 = _line_singularity_check(an)
    degs = {sum(m) for m in an.family.base.terms}
    if len(degs) == 1:
        h2 = HypothesisCheck("base_homogeneous", HOLDS,
                             f"all terms of degree {degs.pop()}")
    else:
        h2 = HypothesisCheck("base_homogeneous", FAILS,
                             f"term degrees {sorted(degs)}")
    h3 = _constancy_check(an, ("lambda0", "lambda1"), "le_numbers_constant")
    h4 = _assertion_check("topologically_V_equisingular", equisingular_asserted,
                          "topological V-equisingularity asserted by the user",
                          "no equisingularity assertion supplied")
    checks = (h1, h2, h3, h4)
    notes = []
    equi = an.equimultiplicity
    if h1.status == HOLDS and h2.status == HOLDS:
        if not equi.equimultiple:
            notes.append(
                "homogeneous base with non-equimultiple orders: the family is "
                "not topologically V-equisingular and its Le numbers cannot "
                "be constant")
            if equisingular_asserted:
                notes.append("the user assertion of equisingularity is "
                             "thereby contradicted")
            return TheoremVerdict("homogeneous", checks,
                                  NOT_TOPOLOGICALLY_V_EQUISINGULAR,
                                  tuple(notes))
        if h3.status == HOLDS or h4.status == USER_ASSERTED:
            return TheoremVerdict("homogeneous", checks, EQUIMULTIPLE,
                                  tuple(notes))
    return TheoremVerdict("homogeneous", checks, INCONCLUSIVE, tuple(notes))
