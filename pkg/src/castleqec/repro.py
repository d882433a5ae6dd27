"""Built-in reproduction manifest: the published parameter tables as checkable rows.

Each target names a curve pipeline and a list of expected [[n, k, d]]_q rows.
Running a target rebuilds every quantum code from scratch and checks it
against its expected row under that row's check mode:

  "exact"     -- the enumerated distance must equal the listed one (or the
                 recorded true value, when enumeration beats the listed d),
  "bound"     -- the certified lower bound (or enumerated distance) must
                 reach the listed d; a shortfall with no enumeration
                 available is reported as a "bound-gap" failure,
  "dimension" -- only (n, k, q) are compared.

The recomputed GV classification must agree with the row's tag: "dagger"
rows must come out "meets", "ddagger" rows "exceeds", untagged rows must not
classify better than "below".  Two rows carry corrections where exact
arithmetic contradicts the listed table; these pass against the corrected
values and the discrepancy is surfaced as a note.
"""

from dataclasses import dataclass, replace

from .agcodes import (
    CodeSequence,
    OnePointCode,
    certify_duality,
    dual_distance_bound,
    incomplete_trace_search,
    trace_code,
)
from .curves import (
    EvaluationSet,
    hyperelliptic_even,
    hyperelliptic_odd,
    norm_trace_quotient,
    sep_variable_curve,
    suzuki_curve,
)
from .fields import GF
from .quantum import (
    QuantumParams,
    css_hermitian,
    css_nested,
    css_self_orthogonal,
    gv_status,
)

TAG_STATUS = {"dagger": "meets", "ddagger": "exceeds"}
GV_SHORT = {"below": "below", "meets": "meets", "exceeds": "exceeds", "not-applicable": "na"}


@dataclass(frozen=True)
class ExpectedRow:
    """One listed [[n, k, d]]_q row with its tag and check mode."""

    label: str
    n: int
    k: int
    d: int
    q: int
    tag: str | None  # "dagger" | "ddagger" | None
    check: str  # "exact" | "bound" | "dimension"
    d_true: int | None = None  # enumerated distance when it beats the listed d
    gv_true: str | None = None  # recomputed GV status when it contradicts the tag

    def triple(self):
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"


@dataclass(frozen=True)
class RowResult:
    row: ExpectedRow
    params: QuantumParams
    gv: str  # recomputed status of the listed triple
    failures: tuple
    notes: tuple

    @property
    def passed(self):
        return not self.failures


@dataclass(frozen=True)
class TargetReport:
    identifier: str
    results: tuple

    @property
    def passed(self):
        return all(r.passed for r in self.results)


def check_row(row, params):
    """Compare one rebuilt quantum code against its expected row."""
    failures, notes = [], []
    if (params.n, params.k, params.q) != (row.n, row.k, row.q):
        failures.append(f"built {params}, expected {row.triple()}")
    if row.check == "exact":
        want = row.d if row.d_true is None else row.d_true
        if params.d_provenance != "exact":
            failures.append("exact distance unavailable within budget")
        elif params.d != want:
            failures.append(f"exact distance {params.d} != {want}")
        elif row.d_true is not None:
            notes.append(f"exact distance {row.d_true} improves on the listed {row.d}")
    elif row.check == "bound":
        if params.d is None:
            failures.append("no distance bound available")
        elif params.d < row.d:
            if params.d_provenance == "exact":
                failures.append(f"exact distance {params.d} < listed {row.d}")
            else:
                failures.append(f"bound-gap: certified bound {params.d} < listed {row.d}")
    elif row.check != "dimension":
        raise ValueError(f"unknown check mode {row.check!r}")

    status, _ = gv_status(row.n, row.k, row.d, row.q)
    expected_status = row.gv_true or TAG_STATUS.get(row.tag)
    if expected_status is None:
        if status in ("meets", "exceeds"):
            failures.append(f"untagged row classifies as {status}")
    elif status != expected_status:
        failures.append(f"GV status {status} != {expected_status}")
    if row.gv_true is not None:
        notes.append(
            f"listed tag claims {TAG_STATUS[row.tag]} but exact arithmetic gives {row.gv_true}"
        )
    return RowResult(row, params, status, tuple(failures), tuple(notes))


# -- target pipelines --------------------------------------------------------


def _row(label, n, k, d, q, tag, check, **kw):
    return ExpectedRow(label, n, k, d, q, tag, check, **kw)


def _suzuki8(budget):
    ev = EvaluationSet(suzuki_curve(2))
    seq = CodeSequence(ev)
    cert = certify_duality(ev)
    out = []
    for i in (1, 5, 6, 11, 12, 13, 14):
        p = css_nested(seq.level(i), seq.level(64 - i), budget, construction="C")
        out.append(p.with_bound(dual_distance_bound(ev, seq.pole_of_level(i), cert)))
    for m in (0, 10):
        p = css_self_orthogonal(trace_code(ev, m, GF(2)), budget)
        out.append(replace(p, construction="trace"))
    return out


SUZUKI8_ROWS = (
    _row("construction C, i=1", 64, 62, 2, 8, "dagger", "exact"),
    _row("construction C, i=5", 64, 54, 3, 8, None, "exact", d_true=4),
    _row("construction C, i=6", 64, 52, 4, 8, "dagger", "exact"),
    _row("construction C, i=11", 64, 42, 5, 8, None, "bound"),
    _row("construction C, i=12", 64, 40, 6, 8, None, "bound"),
    _row("construction C, i=13", 64, 38, 7, 8, None, "bound"),
    _row("construction C, i=14", 64, 36, 8, 8, None, "bound"),
    _row("binary trace, m=0", 64, 62, 2, 2, "ddagger", "exact"),
    _row("binary trace, m=10", 64, 50, 4, 2, "ddagger", "exact"),
)


def _elliptic_gf4(budget):
    ev = EvaluationSet(hyperelliptic_even(GF(4), [0, 0, 0, 1], tag="elliptic-gf4"))
    return [css_hermitian(OnePointCode(ev, 0).code, budget)]


ELLIPTIC_GF4_ROWS = (_row("hermitian CSS, m=0", 8, 6, 2, 2, "ddagger", "exact"),)


def _elliptic_gf9(budget):
    curve = sep_variable_curve(GF(9), [0, 0, 1], [0, 1, 0, 1], tag="elliptic-gf9")
    ev = EvaluationSet(curve, fibration="y")
    seq = CodeSequence(ev)
    cert = certify_duality(ev)
    if cert.status == "unverified":
        raise ValueError("elliptic-gf9 sequence failed duality certification")
    return [
        css_nested(seq.level(i), seq.level(15 - i), budget, construction="nested")
        for i in (1, 4, 5, 6, 7)
    ]


ELLIPTIC_GF9_ROWS = (
    _row("nested pair, i=1", 15, 13, 2, 9, "dagger", "exact"),
    _row("nested pair, i=4", 15, 7, 4, 9, "dagger", "exact"),
    _row("nested pair, i=5", 15, 5, 5, 9, "dagger", "exact"),
    _row("nested pair, i=6", 15, 3, 6, 9, "dagger", "exact"),
    _row("nested pair, i=7", 15, 1, 7, 9, None, "exact"),
)


def _hyper_even(budget):
    ev23 = EvaluationSet(hyperelliptic_even(GF(4), [0, 0, 0, 1], tag="elliptic-gf4"))
    ev45 = EvaluationSet(hyperelliptic_even(GF(16), [0, 0, 0, 0, 0, 1], tag="hyper-even-45"))
    return [
        css_hermitian(OnePointCode(ev, m).code, budget)
        for ev, m in ((ev23, 0), (ev45, 0), (ev45, 5))
    ]


HYPER_EVEN_ROWS = (
    _row("(q,u)=(2,3), m=0", 8, 6, 2, 2, "ddagger", "exact"),
    _row("(q,u)=(4,5), m=0", 32, 30, 2, 4, "ddagger", "exact"),
    _row("(q,u)=(4,5), m=5", 32, 24, 4, 4, "ddagger", "exact"),
)


def _normtrace(budget):
    ntq = EvaluationSet(norm_trace_quotient(2, 4, 3))
    nt = EvaluationSet(norm_trace_quotient(2, 3, 7))
    out = [css_hermitian(OnePointCode(ntq, m).code, budget) for m in (0, 8)]
    out += [css_self_orthogonal(OnePointCode(nt, m).code, budget) for m in (4, 7, 14)]
    return out


NORMTRACE_ROWS = (
    _row("quotient (2,4,3), m=0", 32, 30, 2, 4, "ddagger", "exact"),
    _row("quotient (2,4,3), m=8", 32, 24, 3, 4, "dagger", "exact"),
    _row("norm-trace (2,3,7), m=4", 32, 28, 2, 8, "dagger", "exact"),
    _row("norm-trace (2,3,7), m=7", 32, 26, 3, 8, "ddagger", "exact", gv_true="meets"),
    _row("norm-trace (2,3,7), m=14", 32, 18, 4, 8, None, "exact"),
)


def _hermitian_trace(budget):
    builds = (
        (hyperelliptic_even(GF(4), [0, 0, 0, 1], tag="elliptic-gf4"), 3, 2),
        (sep_variable_curve(GF(9), [0, 1, 0, 1], [0, 0, 0, 0, 1], tag="hermitian-gf9"), 4, 3),
        (sep_variable_curve(GF(16), [0, 1, 0, 0, 1], [0] * 5 + [1], tag="hermitian-gf16"), 5, 4),
    )
    out = []
    for curve, m, small in builds:
        found = incomplete_trace_search(EvaluationSet(curve), m, GF(small))
        if found is None:
            raise ValueError(f"incomplete-trace search failed on {curve.tag} at m={m}")
        code, _ = found
        out.append(replace(css_self_orthogonal(code, budget), construction="trace"))
    return out


HERMITIAN_TRACE_ROWS = (
    _row("elliptic-gf4 trace, m=3", 8, 0, 4, 2, None, "exact"),
    _row("hermitian-gf9 trace, m=4", 27, 19, 3, 3, "dagger", "exact"),
    _row("hermitian-gf16 trace, m=5", 64, 56, 3, 4, "dagger", "exact"),
)


def _maximal_rows(ev, ms, budget):
    seq = CodeSequence(ev)
    cert = certify_duality(ev)
    out = []
    for m in ms:
        p = css_hermitian(seq.level_at_pole(m), budget)
        out.append(p.with_bound(dual_distance_bound(ev, m, cert)))
    return out


def _maximal_q9(budget):
    F = GF(81)
    a = int(F.exp[5])  # a^9 + a = 0 with a nonzero
    curve = sep_variable_curve(F, [0, 1, 0, 1], [0] * 10 + [a], tag="maximal-gf81")
    return _maximal_rows(EvaluationSet(curve), (0, 10, 20, 23), budget)


MAXIMAL_Q9_ROWS = (
    _row("hermitian CSS, m=0", 243, 241, 2, 9, "ddagger", "bound"),
    _row("hermitian CSS, m=10", 243, 233, 3, 9, "dagger", "bound"),
    _row("hermitian CSS, m=20", 243, 219, 6, 9, None, "bound"),
    _row("hermitian CSS, m=23", 243, 213, 9, 9, "dagger", "bound"),
)


def _maximal_q8(budget):
    curve = sep_variable_curve(GF(64), [0, 1, 1, 0, 1], [0] * 9 + [1], tag="maximal-gf64")
    return _maximal_rows(EvaluationSet(curve), (0, 9, 18, 27), budget)


MAXIMAL_Q8_ROWS = (
    _row("hermitian CSS, m=0", 256, 254, 2, 8, "ddagger", "bound"),
    _row("hermitian CSS, m=9", 256, 248, 3, 8, "dagger", "bound"),
    _row("hermitian CSS, m=18", 256, 238, 4, 8, None, "bound"),
    _row("hermitian CSS, m=27", 256, 224, 8, 8, None, "bound"),
)


def _maximal_2_6(budget):
    curve = hyperelliptic_even(GF(64), [0] * 9 + [1], tag="maximal-2-6")
    return _maximal_rows(EvaluationSet(curve), (0, 9, 11, 13), budget)


MAXIMAL_2_6_ROWS = (
    _row("hermitian CSS, m=0", 128, 126, 2, 8, "ddagger", "bound"),
    _row("hermitian CSS, m=9", 128, 116, 4, 8, "dagger", "bound"),
    _row("hermitian CSS, m=11", 128, 112, 6, 8, "ddagger", "bound"),
    _row("hermitian CSS, m=13", 128, 108, 8, 8, "ddagger", "bound"),
)


@dataclass(frozen=True)
class ReproTarget:
    identifier: str
    description: str
    rows: tuple
    runner: callable


TARGETS = {
    t.identifier: t
    for t in (
        ReproTarget(
            "suzuki8",
            "Suzuki curve over GF(8): construction C rows and binary trace rows",
            SUZUKI8_ROWS,
            _suzuki8,
        ),
        ReproTarget(
            "elliptic-gf4",
            "y^2+y=x^3 over GF(4): hermitian CSS",
            ELLIPTIC_GF4_ROWS,
            _elliptic_gf4,
        ),
        ReproTarget(
            "elliptic-gf9",
            "y^2=x^3+x over GF(9), fibration y: nested CSS pairs",
            ELLIPTIC_GF9_ROWS,
            _elliptic_gf9,
        ),
        ReproTarget(
            "hyper-even",
            "even hyperelliptic y^2+y=x^u: hermitian CSS",
            HYPER_EVEN_ROWS,
            _hyper_even,
        ),
        ReproTarget(
            "normtrace",
            "norm-trace quotients (2,4,3) and (2,3,7): hermitian and euclidean CSS",
            NORMTRACE_ROWS,
            _normtrace,
        ),
        ReproTarget(
            "hermitian-trace",
            "incomplete-trace descents of hermitian-type curves",
            HERMITIAN_TRACE_ROWS,
            _hermitian_trace,
        ),
        ReproTarget(
            "maximal-q8",
            "maximal curve over GF(64), n=256: hermitian CSS in bound mode",
            MAXIMAL_Q8_ROWS,
            _maximal_q8,
        ),
        ReproTarget(
            "maximal-q9",
            "maximal curve over GF(81), n=243: hermitian CSS in bound mode",
            MAXIMAL_Q9_ROWS,
            _maximal_q9,
        ),
        ReproTarget(
            "maximal-2-6",
            "y^2+y=x^9 over GF(64), n=128: hermitian CSS in bound mode",
            MAXIMAL_2_6_ROWS,
            _maximal_2_6,
        ),
    )
}


def target_ids():
    return list(TARGETS)


def run_target(identifier, budget=None):
    """Rebuild one target's codes and check every row; returns a TargetReport."""
    try:
        target = TARGETS[identifier]
    except KeyError:
        raise ValueError(f"unknown reproduction target {identifier!r}") from None
    built = target.runner(budget)
    if len(built) != len(target.rows):
        raise AssertionError(f"{identifier}: runner produced {len(built)} rows, manifest has {len(target.rows)}")
    results = tuple(check_row(row, params) for row, params in zip(target.rows, built))
    return TargetReport(identifier, results)


def run_all(budget=None):
    return [run_target(identifier, budget) for identifier in TARGETS]
